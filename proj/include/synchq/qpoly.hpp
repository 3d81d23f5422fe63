#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "synchq/checked_int.hpp"

namespace synchq {

/**
 * Exact polynomial in q with signed 128-bit integer coefficients.
 *
 * Canonical sparse form: terms are kept as (exponent, coefficient) pairs
 * with ascending exponents and no zero coefficient stored, so operator==
 * is structural equality. The zero polynomial has no terms and no degree.
 *
 * All arithmetic is checked; a coefficient leaving the 128-bit range
 * throws arithmetic_overflow.
 */
class QPoly {
public:
    using term = std::pair<int, int128>; // (exponent, coefficient)

    QPoly() = default; // zero polynomial

    /// Builds c * q^exp. exp must be nonnegative.
    static QPoly monomial(int128 c, int exp);
    static QPoly constant(int128 c) { return monomial(c, 0); }
    static QPoly one() { return constant(1); }

    /// Builds a polynomial from arbitrary (exponent, coefficient) pairs;
    /// duplicates are accumulated and zeros dropped.
    static QPoly from_terms(std::vector<term> terms);

    bool is_zero() const { return terms_.empty(); }

    /// Largest exponent, or nullopt for the zero polynomial.
    std::optional<int> degree() const;

    int128 coeff(int exp) const;

    /// Ascending-exponent view of the nonzero terms.
    const std::vector<term>& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    bool operator==(const QPoly&) const = default;

    QPoly operator-() const;
    friend QPoly operator+(const QPoly& a, const QPoly& b);
    friend QPoly operator-(const QPoly& a, const QPoly& b);
    friend QPoly operator*(const QPoly& a, const QPoly& b);
    QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
    QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
    QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

    /// Multiplies every coefficient by s.
    QPoly scaled(int128 s) const;

    /// Drops all terms with exponent > max_exp.
    QPoly truncate(int max_exp) const;

    /// Value at q = 1, i.e. the checked sum of all coefficients.
    int128 eval_one() const;

    /// Ascending-exponent text form with explicit signs,
    /// e.g. "1 - 2*q + 2*q^3 - q^4"; the zero polynomial prints "0".
    std::string to_string() const;

private:
    std::vector<term> terms_;
};

/**
 * Laurent polynomial in z whose coefficients are QPoly values, used for
 * the bivariate products (zq;q)_m (z^-1;q)_n. z-exponents may be
 * negative; no stored coefficient is the zero polynomial.
 */
class ZQLaurent {
public:
    ZQLaurent() = default; // zero

    static ZQLaurent monomial(QPoly c, int z_exp);
    static ZQLaurent from_qpoly(QPoly c) { return monomial(std::move(c), 0); }
    static ZQLaurent one() { return from_qpoly(QPoly::one()); }

    bool is_zero() const { return terms_.empty(); }
    QPoly coeff(int z_exp) const;
    const std::map<int, QPoly>& terms() const { return terms_; }

    bool operator==(const ZQLaurent&) const = default;

    ZQLaurent operator-() const;
    friend ZQLaurent operator+(const ZQLaurent& a, const ZQLaurent& b);
    friend ZQLaurent operator-(const ZQLaurent& a, const ZQLaurent& b);
    friend ZQLaurent operator*(const ZQLaurent& a, const ZQLaurent& b);
    ZQLaurent& operator+=(const ZQLaurent& o) { return *this = *this + o; }
    ZQLaurent& operator-=(const ZQLaurent& o) { return *this = *this - o; }
    ZQLaurent& operator*=(const ZQLaurent& o) { return *this = *this * o; }

    /// Formal d/dz: c(q) z^k maps to k*c(q) z^(k-1); k = 0 terms vanish.
    ZQLaurent derivative_z() const;

    /// Value at z = 1: the sum of all QPoly coefficients.
    QPoly eval_z1() const;

    std::string to_string() const;

private:
    std::map<int, QPoly> terms_; // z-exponent -> nonzero QPoly

    void insert_checked(int z_exp, QPoly c);
};

} // namespace synchq
