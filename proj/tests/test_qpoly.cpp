#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <stdexcept>

#include "synchq/errors.hpp"
#include "synchq/qpoly.hpp"

#include "test_support.hpp"

using namespace synchq;
using testsupport::Dense;

TEST_CASE("canonical form drops zeros and merges duplicate exponents") {
    QPoly p = QPoly::from_terms({{3, 2}, {0, 1}, {3, -2}, {1, 5}, {1, -5}});
    CHECK(p == QPoly::one());
    CHECK(p.term_count() == 1);

    QPoly q = QPoly::from_terms({{2, 4}, {2, -1}});
    CHECK(q.to_string() == "3*q^2");
    CHECK(q.coeff(2) == int128(3));
    CHECK(q.coeff(5) == int128(0));

    CHECK(QPoly().is_zero());
    CHECK(QPoly::from_terms({{7, 0}}).is_zero());
}

TEST_CASE("degree and eval_one") {
    CHECK(!QPoly().degree().has_value());
    CHECK(QPoly::one().degree() == 0);
    QPoly p = QPoly::from_terms({{0, 1}, {4, -2}});
    CHECK(p.degree() == 4);
    CHECK(p.eval_one() == int128(-1));
}

TEST_CASE("to_string follows the sign-separated ascending format") {
    CHECK(QPoly().to_string() == "0");
    CHECK(QPoly::constant(-3).to_string() == "-3");
    CHECK(QPoly::monomial(1, 1).to_string() == "q");
    CHECK(QPoly::monomial(-1, 2).to_string() == "-q^2");
    QPoly p = QPoly::from_terms({{0, 1}, {1, -2}, {3, 2}, {4, -1}});
    CHECK(p.to_string() == "1 - 2*q + 2*q^3 - q^4");
}

TEST_CASE("negative exponents are rejected") {
    CHECK_THROWS_AS(QPoly::monomial(1, -1), std::invalid_argument);
    CHECK_THROWS_AS(QPoly::from_terms({{-2, 5}}), std::invalid_argument);
}

TEST_CASE("truncate keeps exactly the low-degree terms") {
    QPoly p = QPoly::from_terms({{0, 1}, {3, 4}, {7, -2}});
    CHECK(p.truncate(3).to_string() == "1 + 4*q^3");
    CHECK(p.truncate(2).to_string() == "1");
    CHECK(p.truncate(7) == p);
    CHECK(p.truncate(100) == p);
}

TEST_CASE("arithmetic matches a dense reference model") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 500; ++i) {
        QPoly a = testsupport::random_poly(rng, 8, 12, 50);
        QPoly b = testsupport::random_poly(rng, 8, 12, 50);
        Dense da = testsupport::dense_from(a);
        Dense db = testsupport::dense_from(b);
        CHECK(testsupport::dense_eq(testsupport::dense_from(a + b),
                                    testsupport::dense_add(da, db)));
        CHECK(testsupport::dense_eq(testsupport::dense_from(a * b),
                                    testsupport::dense_mul(da, db)));
        CHECK(a - a == QPoly());
        CHECK((-a) + a == QPoly());
    }
}

TEST_CASE("ring axioms hold exactly on random values") {
    std::mt19937 rng(321);
    for (int i = 0; i < 400; ++i) {
        QPoly a = testsupport::random_poly(rng, 6, 10, 30);
        QPoly b = testsupport::random_poly(rng, 6, 10, 30);
        QPoly c = testsupport::random_poly(rng, 6, 10, 30);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * QPoly::one() == a);
        CHECK(a * QPoly() == QPoly());
    }
}

TEST_CASE("coefficient overflow throws instead of wrapping") {
    // 2^126 quadrupled leaves the signed 128-bit range.
    int128 big = int128(1) << 126;
    QPoly p = QPoly::monomial(big, 0);
    CHECK_THROWS_AS(p.scaled(4), arithmetic_overflow);
    CHECK_THROWS_AS(p * QPoly::constant(4), arithmetic_overflow);
    CHECK_THROWS_AS(p + p.scaled(3) + p, arithmetic_overflow);
    CHECK_THROWS_AS((p + p).eval_one() + big + big, arithmetic_overflow);
}

TEST_CASE("int128 decimal round trip") {
    CHECK(int128_to_string(0) == "0");
    CHECK(int128_to_string(-42) == "-42");
    int128 big = int128(1) << 126;
    std::string s = int128_to_string(big);
    CHECK(s == "85070591730234615865843651857942052864");
    CHECK(int128_from_string(s) == big);
    CHECK(int128_from_string("-" + s) == -big);
    CHECK_THROWS_AS(int128_from_string(""), std::invalid_argument);
    CHECK_THROWS_AS(int128_from_string("12x"), std::invalid_argument);
    // 2^127 is one past the maximum.
    CHECK_THROWS_AS(int128_from_string("170141183460469231731687303715884105728"),
                    arithmetic_overflow);
}

TEST_CASE("Laurent coefficients keep no zero polynomial entries") {
    ZQLaurent a = ZQLaurent::monomial(QPoly::one(), 3);
    ZQLaurent b = ZQLaurent::monomial(QPoly::constant(-1), 3);
    CHECK((a + b).is_zero());
    CHECK(a - a == ZQLaurent());
    CHECK(a.coeff(3) == QPoly::one());
    CHECK(a.coeff(-3) == QPoly());
}

TEST_CASE("Laurent product against a worked value") {
    // (1 - z q)(1 - z^-1) = (1 + q) - z^-1 - q z.
    ZQLaurent lhs = (ZQLaurent::one() -
                     ZQLaurent::monomial(QPoly::monomial(1, 1), 1)) *
                    (ZQLaurent::one() -
                     ZQLaurent::monomial(QPoly::one(), -1));
    CHECK(lhs.coeff(0).to_string() == "1 + q");
    CHECK(lhs.coeff(-1).to_string() == "-1");
    CHECK(lhs.coeff(1).to_string() == "-q");
    CHECK(lhs.coeff(2) == QPoly());
    CHECK(lhs.to_string() == "(-1)*z^-1 + (1 + q) + (-q)*z");
}

TEST_CASE("derivative_z is linear, kills constants, and satisfies the product rule") {
    std::mt19937 rng(777);
    auto random_laurent = [&](int max_z) {
        ZQLaurent out;
        std::uniform_int_distribution<int> z_exp(-max_z, max_z);
        for (int t = 0; t < 4; ++t)
            out += ZQLaurent::monomial(testsupport::random_poly(rng, 4, 6, 20),
                                       z_exp(rng));
        return out;
    };
    CHECK(ZQLaurent::from_qpoly(QPoly::constant(9)).derivative_z().is_zero());
    // c z^k -> k c z^(k-1) on a single term.
    ZQLaurent m = ZQLaurent::monomial(QPoly::monomial(2, 3), -4);
    CHECK(m.derivative_z() == ZQLaurent::monomial(QPoly::monomial(-8, 3), -5));
    for (int i = 0; i < 300; ++i) {
        ZQLaurent a = random_laurent(5);
        ZQLaurent b = random_laurent(5);
        CHECK((a * b).derivative_z() ==
              a.derivative_z() * b + a * b.derivative_z());
        CHECK((a + b).derivative_z() == a.derivative_z() + b.derivative_z());
    }
}

TEST_CASE("eval_z1 is a ring homomorphism") {
    std::mt19937 rng(888);
    auto random_laurent = [&] {
        ZQLaurent out;
        std::uniform_int_distribution<int> z_exp(-4, 4);
        for (int t = 0; t < 4; ++t)
            out += ZQLaurent::monomial(testsupport::random_poly(rng, 4, 6, 20),
                                       z_exp(rng));
        return out;
    };
    for (int i = 0; i < 300; ++i) {
        ZQLaurent a = random_laurent();
        ZQLaurent b = random_laurent();
        CHECK((a * b).eval_z1() == a.eval_z1() * b.eval_z1());
        CHECK((a + b).eval_z1() == a.eval_z1() + b.eval_z1());
    }
    // z^-2 - q at z = 1.
    ZQLaurent v = ZQLaurent::monomial(QPoly::one(), -2) -
                  ZQLaurent::from_qpoly(QPoly::monomial(1, 1));
    CHECK(v.eval_z1().to_string() == "1 - q");
}
