#include "synchq/partitions.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace synchq {

DistinctPartition DistinctPartition::of(std::vector<int> parts,
                                        bool zero_allowed) {
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (parts[i] < 0)
            throw invalid_partition("negative part");
        if (i + 1 < parts.size() && parts[i] <= parts[i + 1])
            throw invalid_partition("parts not strictly decreasing");
    }
    if (!zero_allowed && !parts.empty() && parts.back() == 0)
        throw invalid_partition("zero part in a zero-free family");
    DistinctPartition p;
    p.parts_ = std::move(parts);
    p.zero_allowed_ = zero_allowed;
    return p;
}

int DistinctPartition::weight() const {
    int w = 0;
    for (int part : parts_) w += part;
    return w;
}

DistinctPartition DistinctPartition::without_zero_part() const {
    if (!has_zero_part())
        throw invalid_partition("no zero part to remove");
    DistinctPartition p = *this;
    p.parts_.pop_back();
    return p;
}

DistinctPartition DistinctPartition::with_zero_part() const {
    if (!zero_allowed_)
        throw invalid_partition("family does not admit a zero part");
    if (has_zero_part())
        throw invalid_partition("zero part already present");
    DistinctPartition p = *this;
    p.parts_.push_back(0);
    return p;
}

std::vector<DistinctPartition> enumerate_distinct(int max_part,
                                                  bool zero_allowed) {
    if (max_part < 0)
        throw std::invalid_argument("max_part must be >= 0");
    int lowest = zero_allowed ? 0 : 1;
    int slots = max_part - lowest + 1;
    if (slots > 30)
        throw std::invalid_argument("enumeration range too large");
    std::vector<DistinctPartition> out;
    out.reserve(std::size_t(1) << slots);
    for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << slots); ++mask) {
        std::vector<int> parts;
        for (int v = max_part; v >= lowest; --v)
            if (mask & (std::uint64_t(1) << (v - lowest))) parts.push_back(v);
        out.push_back(DistinctPartition::of(std::move(parts), zero_allowed));
    }
    std::sort(out.begin(), out.end(),
              [](const DistinctPartition& a, const DistinctPartition& b) {
                  if (a.weight() != b.weight()) return a.weight() < b.weight();
                  return a.parts() < b.parts();
              });
    return out;
}

} // namespace synchq
