#include "synchq/qpoly.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>

namespace synchq {

// ---------------------------------------------------------------------------
// int128 decimal conversion
// ---------------------------------------------------------------------------

std::string int128_to_string(int128 v) {
    if (v == 0) return "0";
    bool negative = v < 0;
    // Work in unsigned space so the minimum value does not need a special case.
    unsigned __int128 u = negative ? (unsigned __int128)0 - (unsigned __int128)v
                                   : (unsigned __int128)v;
    char buf[48];
    char* p = buf + sizeof(buf);
    while (u > 0) {
        *--p = char('0' + (unsigned)(u % 10));
        u /= 10;
    }
    std::string s(p, buf + sizeof(buf) - p);
    return negative ? "-" + s : s;
}

int128 int128_from_string(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("empty integer literal");
    bool negative = false;
    std::size_t i = 0;
    if (s[0] == '-' || s[0] == '+') {
        negative = (s[0] == '-');
        i = 1;
    }
    if (i == s.size()) throw std::invalid_argument("sign without digits");
    int128 v = 0;
    for (; i < s.size(); ++i) {
        char c = s[i];
        if (c < '0' || c > '9')
            throw std::invalid_argument("non-digit in integer literal");
        v = checked_add(checked_mul(v, 10), negative ? -(c - '0') : (c - '0'));
    }
    return v;
}

// ---------------------------------------------------------------------------
// QPoly
// ---------------------------------------------------------------------------

namespace {

// Exponents are ints; sums are formed in 64 bits and range-checked so a
// degree overflow surfaces as arithmetic_overflow, not wraparound.
int checked_exp_add(int a, int b) {
    std::int64_t s = std::int64_t(a) + std::int64_t(b);
    if (s > std::numeric_limits<int>::max())
        throw arithmetic_overflow("exponent overflow");
    return int(s);
}

// Result spreads up to this size use a dense accumulator; anything wider
// falls back to map accumulation.
constexpr std::int64_t kDenseLimit = std::int64_t(1) << 22;

} // namespace

QPoly QPoly::monomial(int128 c, int exp) {
    if (exp < 0) throw std::invalid_argument("negative q exponent");
    QPoly p;
    if (c != 0) p.terms_.emplace_back(exp, c);
    return p;
}

QPoly QPoly::from_terms(std::vector<term> terms) {
    for (const auto& [e, c] : terms) {
        (void)c;
        if (e < 0) throw std::invalid_argument("negative q exponent");
    }
    std::sort(terms.begin(), terms.end(),
              [](const term& a, const term& b) { return a.first < b.first; });
    QPoly p;
    for (const auto& [e, c] : terms) {
        if (!p.terms_.empty() && p.terms_.back().first == e) {
            int128 s = checked_add(p.terms_.back().second, c);
            if (s == 0)
                p.terms_.pop_back();
            else
                p.terms_.back().second = s;
        } else if (c != 0) {
            p.terms_.emplace_back(e, c);
        }
    }
    return p;
}

std::optional<int> QPoly::degree() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.back().first;
}

int128 QPoly::coeff(int exp) const {
    auto it = std::lower_bound(
        terms_.begin(), terms_.end(), exp,
        [](const term& t, int e) { return t.first < e; });
    return (it != terms_.end() && it->first == exp) ? it->second : 0;
}

QPoly QPoly::operator-() const {
    QPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, checked_neg(c));
    return r;
}

QPoly operator+(const QPoly& a, const QPoly& b) {
    QPoly r;
    r.terms_.reserve(a.terms_.size() + b.terms_.size());
    auto ai = a.terms_.begin(), ae = a.terms_.end();
    auto bi = b.terms_.begin(), be = b.terms_.end();
    while (ai != ae && bi != be) {
        if (ai->first < bi->first) {
            r.terms_.push_back(*ai++);
        } else if (bi->first < ai->first) {
            r.terms_.push_back(*bi++);
        } else {
            int128 s = checked_add(ai->second, bi->second);
            if (s != 0) r.terms_.emplace_back(ai->first, s);
            ++ai;
            ++bi;
        }
    }
    r.terms_.insert(r.terms_.end(), ai, ae);
    r.terms_.insert(r.terms_.end(), bi, be);
    return r;
}

QPoly operator-(const QPoly& a, const QPoly& b) {
    return a + (-b);
}

QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    int lo = checked_exp_add(a.terms_.front().first, b.terms_.front().first);
    int hi = checked_exp_add(a.terms_.back().first, b.terms_.back().first);
    std::int64_t span = std::int64_t(hi) - std::int64_t(lo) + 1;

    QPoly r;
    if (span <= kDenseLimit) {
        std::vector<int128> acc(std::size_t(span), 0);
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_)
                acc[std::size_t(ea + eb - lo)] = checked_add(
                    acc[std::size_t(ea + eb - lo)], checked_mul(ca, cb));
        for (std::int64_t i = 0; i < span; ++i)
            if (acc[std::size_t(i)] != 0)
                r.terms_.emplace_back(int(lo + i), acc[std::size_t(i)]);
    } else {
        std::map<int, int128> acc;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) {
                int e = checked_exp_add(ea, eb);
                auto [it, inserted] = acc.emplace(e, 0);
                it->second = checked_add(it->second, checked_mul(ca, cb));
            }
        for (const auto& [e, c] : acc)
            if (c != 0) r.terms_.emplace_back(e, c);
    }
    return r;
}

QPoly QPoly::scaled(int128 s) const {
    if (s == 0) return {};
    QPoly r;
    r.terms_.reserve(terms_.size());
    for (const auto& [e, c] : terms_) r.terms_.emplace_back(e, checked_mul(c, s));
    return r;
}

QPoly QPoly::truncate(int max_exp) const {
    QPoly r;
    for (const auto& [e, c] : terms_) {
        if (e > max_exp) break;
        r.terms_.emplace_back(e, c);
    }
    return r;
}

int128 QPoly::eval_one() const {
    int128 s = 0;
    for (const auto& [e, c] : terms_) s = checked_add(s, c);
    return s;
}

std::string QPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        bool negative = c < 0;
        if (first) {
            if (negative) out << "-";
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        unsigned __int128 mag = negative
                                    ? (unsigned __int128)0 - (unsigned __int128)c
                                    : (unsigned __int128)c;
        bool unit = (mag == 1);
        if (e == 0) {
            out << int128_to_string(int128(mag));
        } else {
            if (!unit) out << int128_to_string(int128(mag)) << "*";
            out << "q";
            if (e != 1) out << "^" << e;
        }
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// ZQLaurent
// ---------------------------------------------------------------------------

void ZQLaurent::insert_checked(int z_exp, QPoly c) {
    if (!c.is_zero()) terms_.emplace(z_exp, std::move(c));
}

ZQLaurent ZQLaurent::monomial(QPoly c, int z_exp) {
    ZQLaurent r;
    r.insert_checked(z_exp, std::move(c));
    return r;
}

QPoly ZQLaurent::coeff(int z_exp) const {
    auto it = terms_.find(z_exp);
    return it == terms_.end() ? QPoly{} : it->second;
}

ZQLaurent ZQLaurent::operator-() const {
    ZQLaurent r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

ZQLaurent operator+(const ZQLaurent& a, const ZQLaurent& b) {
    ZQLaurent r = a;
    for (const auto& [k, c] : b.terms_) {
        auto it = r.terms_.find(k);
        if (it == r.terms_.end()) {
            r.terms_.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.terms_.erase(it);
        }
    }
    return r;
}

ZQLaurent operator-(const ZQLaurent& a, const ZQLaurent& b) {
    return a + (-b);
}

ZQLaurent operator*(const ZQLaurent& a, const ZQLaurent& b) {
    ZQLaurent r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            std::int64_t k = std::int64_t(ka) + std::int64_t(kb);
            if (k > std::numeric_limits<int>::max() ||
                k < std::numeric_limits<int>::min())
                throw arithmetic_overflow("z-exponent overflow");
            auto [it, inserted] = r.terms_.emplace(int(k), QPoly{});
            it->second += ca * cb;
        }
    std::erase_if(r.terms_, [](const auto& kv) { return kv.second.is_zero(); });
    return r;
}

ZQLaurent ZQLaurent::derivative_z() const {
    ZQLaurent r;
    for (const auto& [k, c] : terms_) {
        if (k == 0) continue;
        r.terms_.emplace(k - 1, c.scaled(k));
    }
    return r;
}

QPoly ZQLaurent::eval_z1() const {
    QPoly s;
    for (const auto& [k, c] : terms_) s += c;
    return s;
}

std::string ZQLaurent::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        if (k == 0) {
            bool wrap = c.term_count() > 1;
            out << (wrap ? "(" : "") << c.to_string() << (wrap ? ")" : "");
        } else {
            if (c != QPoly::one()) out << "(" << c.to_string() << ")*";
            out << "z";
            if (k != 1) out << "^" << k;
        }
    }
    return out.str();
}

} // namespace synchq
