#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "synchq/errors.hpp"
#include "synchq/json_io.hpp"

using namespace synchq;
using nlohmann::json;

TEST_CASE("polynomial JSON shape and round trip") {
    QPoly p = QPoly::from_terms({{0, 1}, {1, -2}, {4, 3}});
    CHECK(to_json(p).dump() == R"({"terms":[[0,"1"],[1,"-2"],[4,"3"]]})");
    CHECK(qpoly_from_json(to_json(p)) == p);
    CHECK(to_json(QPoly()).dump() == R"({"terms":[]})");

    // Coefficients ride as strings so values past 64 bits survive.
    QPoly big = QPoly::monomial(int128(1) << 100, 2);
    CHECK(qpoly_from_json(to_json(big)) == big);

    // Plain integer coefficients are accepted on input.
    QPoly q = qpoly_from_json(json::parse(R"({"terms":[[1,-2],[0,1]]})"));
    CHECK(q == QPoly::from_terms({{0, 1}, {1, -2}}));
}

TEST_CASE("malformed polynomial JSON is rejected") {
    CHECK_THROWS_AS(qpoly_from_json(json::parse(R"({"bad":1})")), error);
    CHECK_THROWS_AS(qpoly_from_json(json::parse(R"({"terms":[[1]]})")), error);
    CHECK_THROWS_AS(qpoly_from_json(json::parse(R"({"terms":[["x","1"]]})")),
                    error);
}

TEST_CASE("partition JSON shapes") {
    DistinctPartition alpha = DistinctPartition::of({3, 1}, false);
    CHECK(to_json(alpha).dump() == R"({"parts":[3,1]})");

    SyncPartition s(DistinctPartition::of({2}, false),
                    DistinctPartition::of({1, 0}, true));
    CHECK(to_json(s).dump() == R"({"alpha":[2],"beta":[1,0]})");

    RootedSyncPartition r(SyncPartition(DistinctPartition::of({}, false),
                                        DistinctPartition::of({2}, true)),
                          1);
    CHECK(to_json(r).dump() == R"({"alpha":[],"bar":1,"beta":[2]})");
}

TEST_CASE("sync_from_json accepts a null bar and rejects a real one") {
    SyncPartition s =
        sync_from_json(json::parse(R"({"alpha":[2],"beta":[1,0]})"));
    CHECK(s.alpha().parts() == std::vector<int>{2});
    CHECK(s.beta().parts() == std::vector<int>{1, 0});
    CHECK(sync_from_json(json::parse(R"({"alpha":[],"beta":[],"bar":null})"))
              .weight() == 0);
    CHECK_THROWS_AS(
        sync_from_json(json::parse(R"({"alpha":[],"beta":[2],"bar":1})")),
        invalid_partition);
    CHECK_THROWS_AS(sync_from_json(json::parse(R"([1,2])")),
                    invalid_partition);
    CHECK_THROWS_AS(sync_from_json(json::parse(R"({"alpha":[2]})")),
                    invalid_partition);
    CHECK_THROWS_AS(
        sync_from_json(json::parse(R"({"alpha":[2.5],"beta":[]})")),
        invalid_partition);
}

TEST_CASE("rooted_from_json requires a bar in range") {
    RootedSyncPartition r =
        rooted_from_json(json::parse(R"({"alpha":[],"beta":[2],"bar":1})"));
    CHECK(r.discrepancy() == -1);
    CHECK(r.bar_position() == 1);
    CHECK_THROWS_AS(
        rooted_from_json(json::parse(R"({"alpha":[1],"beta":[2,1]})")),
        invalid_partition);
    CHECK_THROWS_AS(
        rooted_from_json(json::parse(R"({"alpha":[],"beta":[2],"bar":null})")),
        invalid_partition);
    CHECK_THROWS_AS(
        rooted_from_json(json::parse(R"({"alpha":[],"beta":[2],"bar":2})")),
        invalid_partition);
    // Round trip through the serialized form.
    CHECK(to_json(rooted_from_json(to_json(r))).dump() == to_json(r).dump());
}

TEST_CASE("verification report JSON carries a null witness when absent") {
    VerificationReport pass{"finite-jacobi", {{"m", 2}, {"n", 1}},
                            Status::pass, std::nullopt};
    CHECK(to_json(pass).dump() ==
          R"({"check":"finite-jacobi","params":{"m":2,"n":1},)"
          R"("status":"pass","witness":null})");

    VerificationReport fail{"demo", {}, Status::fail,
                            json{{"exponent", 4}}};
    json j = to_json(fail);
    CHECK(j.at("status") == "fail");
    CHECK(j.at("witness").at("exponent") == 4);
}

TEST_CASE("trace steps carry case name and signed endpoints") {
    json step = trace_step("2a", json{{"alpha", json::array()}},
                           json{{"beta", json::array()}}, 1, -1);
    CHECK(step.at("case") == "2a");
    CHECK(step.at("sign_before") == 1);
    CHECK(step.at("sign_after") == -1);
    CHECK(step.at("before").contains("alpha"));
    CHECK(step.at("after").contains("beta"));
}
