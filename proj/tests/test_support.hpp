#pragma once

#include <cstdlib>
#include <random>
#include <vector>

#include "synchq/partitions.hpp"
#include "synchq/qpoly.hpp"

// Cross-checking helpers: a dense coefficient-vector model of polynomial
// arithmetic, independent of the sparse QPoly code paths, plus fixed-seed
// random generators for property tests.
namespace testsupport {

using Dense = std::vector<long long>;

inline Dense dense_from(const synchq::QPoly& p) {
    Dense out;
    for (const auto& [e, c] : p.terms()) {
        if (std::size_t(e) >= out.size()) out.resize(std::size_t(e) + 1, 0);
        out[std::size_t(e)] = static_cast<long long>(c);
    }
    return out;
}

inline void dense_trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline Dense dense_add(Dense a, const Dense& b) {
    if (b.size() > a.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] += b[i];
    dense_trim(a);
    return a;
}

inline Dense dense_mul(const Dense& a, const Dense& b) {
    if (a.empty() || b.empty()) return {};
    Dense out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] += a[i] * b[j];
    dense_trim(out);
    return out;
}

inline bool dense_eq(Dense a, Dense b) {
    dense_trim(a);
    dense_trim(b);
    return a == b;
}

inline synchq::QPoly random_poly(std::mt19937& rng, int max_terms,
                                 int max_exp, long long max_abs_coeff) {
    std::uniform_int_distribution<int> term_count(0, max_terms);
    std::uniform_int_distribution<int> exponent(0, max_exp);
    std::uniform_int_distribution<long long> coefficient(-max_abs_coeff,
                                                         max_abs_coeff);
    std::vector<synchq::QPoly::term> terms;
    int count = term_count(rng);
    for (int i = 0; i < count; ++i)
        terms.emplace_back(exponent(rng), synchq::int128(coefficient(rng)));
    return synchq::QPoly::from_terms(std::move(terms));
}

inline synchq::DistinctPartition random_distinct(std::mt19937& rng,
                                                 int max_part,
                                                 bool zero_allowed) {
    std::uniform_int_distribution<int> coin(0, 1);
    std::vector<int> parts;
    for (int p = max_part; p >= 1; --p)
        if (coin(rng)) parts.push_back(p);
    if (zero_allowed && coin(rng)) parts.push_back(0);
    return synchq::DistinctPartition::of(std::move(parts), zero_allowed);
}

} // namespace testsupport
