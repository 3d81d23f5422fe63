#pragma once

#include <compare>
#include <vector>

#include "synchq/errors.hpp"

namespace synchq {

/**
 * Partition into distinct parts with an optional trailing zero part.
 *
 * Parts are strictly decreasing. The zero_allowed flag marks the ambient
 * family: without it every part is >= 1; with it parts are >= 0, and the
 * strict decrease forces at most one zero, in last position. Equality and
 * ordering compare the parts only; the flag is family metadata.
 */
class DistinctPartition {
public:
    DistinctPartition() = default; // empty partition, zero-free family

    /// Validates and wraps a strictly decreasing parts sequence.
    /// Throws invalid_partition on any invariant violation.
    static DistinctPartition of(std::vector<int> parts, bool zero_allowed);

    const std::vector<int>& parts() const { return parts_; }
    bool zero_allowed() const { return zero_allowed_; }

    int length() const { return int(parts_.size()); }
    bool empty() const { return parts_.empty(); }

    /// Sum of parts.
    int weight() const;

    /// Largest part, or 0 for the empty partition.
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }

    /// True when the last part is 0.
    bool has_zero_part() const {
        return !parts_.empty() && parts_.back() == 0;
    }

    /// Copy with the trailing zero part removed. Requires has_zero_part().
    DistinctPartition without_zero_part() const;

    /// Copy with a zero part appended. Requires the partition to be
    /// zero-free already and the family to admit zero.
    DistinctPartition with_zero_part() const;

    friend bool operator==(const DistinctPartition& a,
                           const DistinctPartition& b) {
        return a.parts_ == b.parts_;
    }
    friend std::strong_ordering operator<=>(const DistinctPartition& a,
                                            const DistinctPartition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_; // strictly decreasing
    bool zero_allowed_ = false;
};

/// Every subset of {1..max_part} (plus {0} when zero_allowed) as a
/// decreasing sequence, each exactly once: 2^max_part partitions, or
/// 2^(max_part+1) with zero. Ordered by weight, then lexicographically by
/// parts; the order is part of the interface so output is reproducible.
std::vector<DistinctPartition> enumerate_distinct(int max_part,
                                                  bool zero_allowed);

} // namespace synchq
