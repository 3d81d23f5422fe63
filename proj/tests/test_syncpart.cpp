#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "synchq/errors.hpp"
#include "synchq/qseries.hpp"
#include "synchq/syncpart.hpp"

using namespace synchq;

namespace {

SyncPartition sync_of(std::vector<int> alpha, std::vector<int> beta) {
    return SyncPartition(DistinctPartition::of(std::move(alpha), false),
                         DistinctPartition::of(std::move(beta), true));
}

RootedSyncPartition rooted_of(std::vector<int> alpha, std::vector<int> beta,
                              int bar) {
    return RootedSyncPartition(sync_of(std::move(alpha), std::move(beta)),
                               bar);
}

} // namespace

TEST_CASE("synchronized partition basics") {
    SyncPartition s = sync_of({2, 1}, {1});
    CHECK(s.discrepancy() == 1);
    CHECK(s.weight() == 4);
    CHECK(s.zero_free());
    CHECK(s.sign() == -1);
    CHECK(s.within_bounds(2, 1));
    CHECK(!s.within_bounds(1, 1));

    SyncPartition z = sync_of({1}, {2, 1, 0});
    CHECK(z.discrepancy() == -2);
    CHECK(z.weight() == 4);
    CHECK(!z.zero_free());
    CHECK(z.sign() == 1);

    CHECK(SyncPartition().discrepancy() == 0);
    CHECK(SyncPartition().weight() == 0);

    CHECK_THROWS_AS(SyncPartition(DistinctPartition::of({2, 0}, true),
                                  DistinctPartition::of({}, true)),
                    invalid_partition);
}

TEST_CASE("rooted partition validation") {
    CHECK_THROWS_AS(rooted_of({1}, {1}, 1), invalid_partition);
    CHECK_THROWS_AS(rooted_of({2, 1}, {}, 0), invalid_partition);
    CHECK_THROWS_AS(rooted_of({2, 1}, {}, 3), invalid_partition);
    RootedSyncPartition r = rooted_of({2, 1}, {}, 2);
    CHECK(r.discrepancy() == 2);
    CHECK(r.bar_position() == 2);
    CHECK(r.weight() == 3);
}

TEST_CASE("delta counts all stars except a barred top star") {
    // Positive discrepancy: the barred star sits on the bottom row and
    // is counted.
    CHECK(rooted_of({2, 1}, {}, 1).delta() == 2);
    CHECK(rooted_of({2, 1}, {}, 2).delta() == 2);
    CHECK(rooted_of({2, 1}, {}, 1).sign() == 1);
    // Negative discrepancy: the barred star is on top and excluded.
    CHECK(rooted_of({}, {2}, 1).delta() == 0);
    CHECK(rooted_of({}, {2}, 1).sign() == 1);
    CHECK(rooted_of({}, {2, 0}, 1).delta() == 1);
    CHECK(rooted_of({}, {2, 0}, 1).sign() == -1);
    CHECK(rooted_of({}, {3, 2, 1}, 2).delta() == 2);
}

TEST_CASE("degeneracy covers exactly the two special shapes") {
    CHECK(rooted_of({2}, {}, 1).is_degenerate());
    CHECK(rooted_of({2, 1}, {}, 1).is_degenerate());
    CHECK(!rooted_of({2, 1}, {}, 2).is_degenerate());
    CHECK(!rooted_of({2, 1}, {0}, 1).is_degenerate());

    CHECK(rooted_of({}, {2, 0}, 2).is_degenerate());
    CHECK(rooted_of({2}, {1, 0}, 1).is_degenerate());
    CHECK(!rooted_of({}, {2, 0}, 1).is_degenerate());
    CHECK(!rooted_of({}, {2}, 1).is_degenerate());
}

TEST_CASE("enumeration counts") {
    for (int m = 0; m <= 4; ++m)
        for (int n = 0; n <= 4; ++n)
            CHECK(enumerate_sync(m, n).size() ==
                  (std::size_t(1) << m) * (std::size_t(1) << (n + 1)));

    // Rooted elements expand each nonzero discrepancy over its bar range.
    std::size_t expected = 0;
    for (const SyncPartition& s : enumerate_sync(3, 2))
        expected += std::size_t(std::abs(s.discrepancy()));
    CHECK(enumerate_rooted(3, 2).size() == expected);
}

TEST_CASE("weight filter keeps exactly the requested weight") {
    for (const SyncPartition& s : enumerate_sync(3, 3, 4))
        CHECK(s.weight() == 4);
    std::size_t total = 0;
    for (int w = 0; w <= (3 + 2 + 1) * 2; ++w)
        total += enumerate_sync(3, 3, w).size();
    CHECK(total == enumerate_sync(3, 3).size());
}

TEST_CASE("the five rooted elements of weight 2 with largest parts at most 2") {
    std::vector<RootedSyncPartition> found = enumerate_rooted(2, 2, 2);
    REQUIRE(found.size() == 5);
    CHECK(found[0] == rooted_of({}, {2}, 1));
    CHECK(found[1] == rooted_of({}, {2, 0}, 1));
    CHECK(found[2] == rooted_of({}, {2, 0}, 2));
    CHECK(found[3] == rooted_of({1}, {1, 0}, 1));
    CHECK(found[4] == rooted_of({2}, {}, 1));
    int signed_sum = 0;
    for (const RootedSyncPartition& r : found) signed_sum += r.sign();
    CHECK(signed_sum == -1);
}

TEST_CASE("brute-force generating functions at worked parameters") {
    CHECK(sync_gf(1, 1).to_string() == "2 + 4*q + 2*q^2");
    CHECK(sync_gf_zero_free(1, 1).to_string() == "1 + 2*q + q^2");
    CHECK(sync_gf_discrepancy(1, 1, 0).to_string() == "1 + q + q^2");
    CHECK(sync_gf_discrepancy(1, 1, 1).to_string() == "q");
    CHECK(rooted_gf(2, 1, true) == finite_jacobi_rhs(2, 1));
    CHECK(rooted_gf(2, 1, false) == rooted_gf_formula(2, 1));
    CHECK(sync_gf_zero_free(2, 1, true) == finite_jacobi_lhs(2, 1));
}

TEST_CASE("render aligns columns and marks the bar") {
    CHECK(render(sync_of({2, 1}, {1})) == "2 1\n1 *");
    CHECK(render(sync_of({1}, {2, 1, 0})) == "1 * *\n2 1 0");
    CHECK(render(sync_of({}, {})) == "( )\n( )");
    CHECK(render(rooted_of({2, 1}, {}, 2)) == "2 1\n* #");
    CHECK(render(rooted_of({}, {2, 0}, 1)) == "# *\n2 0");
    CHECK(render(rooted_of({10, 2}, {1}, 1)) == "10 2\n 1 #");

    RenderOptions unicode{true};
    CHECK(render(rooted_of({2}, {}, 1), unicode) == "2\n*̄");
}

TEST_CASE("ordering is deterministic and total") {
    std::vector<SyncPartition> all = enumerate_sync(2, 2);
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = 0; j < all.size(); ++j) {
            if (i == j) continue;
            CHECK(all[i] != all[j]);
            CHECK(((all[i] < all[j]) || (all[j] < all[i])));
        }
}
