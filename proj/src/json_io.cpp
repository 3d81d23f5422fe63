#include "synchq/json_io.hpp"

#include <utility>
#include <vector>

#include "synchq/errors.hpp"

namespace synchq {

using nlohmann::json;

json to_json(const QPoly& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms())
        terms.push_back(json::array({e, int128_to_string(c)}));
    return json{{"terms", std::move(terms)}};
}

QPoly qpoly_from_json(const json& j) {
    try {
        std::vector<QPoly::term> terms;
        for (const auto& t : j.at("terms")) {
            int e = t.at(0).get<int>();
            const json& c = t.at(1);
            int128 v = c.is_string()
                           ? int128_from_string(c.get<std::string>())
                           : int128(c.get<long long>());
            terms.emplace_back(e, v);
        }
        return QPoly::from_terms(std::move(terms));
    } catch (const json::exception& e) {
        throw error(std::string("malformed polynomial JSON: ") + e.what());
    }
}

namespace {

std::vector<int> int_array(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end() || !it->is_array())
        throw invalid_partition(std::string(key) +
                                " must be an array of integers");
    std::vector<int> out;
    for (const json& v : *it) {
        if (!v.is_number_integer())
            throw invalid_partition(std::string(key) +
                                    " must be an array of integers");
        out.push_back(v.get<int>());
    }
    return out;
}

SyncPartition base_from_json(const json& j) {
    if (!j.is_object())
        throw invalid_partition("partition JSON must be an object");
    return SyncPartition(DistinctPartition::of(int_array(j, "alpha"), false),
                         DistinctPartition::of(int_array(j, "beta"), true));
}

} // namespace

json to_json(const DistinctPartition& p) {
    return json{{"parts", p.parts()}};
}

json to_json(const SyncPartition& s) {
    return json{{"alpha", s.alpha().parts()}, {"beta", s.beta().parts()}};
}

json to_json(const RootedSyncPartition& s) {
    json j = to_json(s.base());
    j["bar"] = s.bar_position();
    return j;
}

SyncPartition sync_from_json(const json& j) {
    SyncPartition base = base_from_json(j);
    if (j.contains("bar") && !j.at("bar").is_null())
        throw invalid_partition(
            "unexpected bar on a plain synchronized partition");
    return base;
}

RootedSyncPartition rooted_from_json(const json& j) {
    SyncPartition base = base_from_json(j);
    auto it = j.find("bar");
    if (it == j.end() || it->is_null())
        throw invalid_partition("rooted partition JSON needs a bar position");
    if (!it->is_number_integer())
        throw invalid_partition("bar must be an integer");
    return RootedSyncPartition(base, it->get<int>());
}

json to_json(const VerificationReport& r) {
    json params = json::object();
    for (const auto& [k, v] : r.parameters) params[k] = v;
    return json{{"check", r.check_name},
                {"params", std::move(params)},
                {"status", to_string(r.status)},
                {"witness", r.witness ? *r.witness : json(nullptr)}};
}

json trace_step(const std::string& case_name, json before, json after,
                int sign_before, int sign_after) {
    return json{{"case", case_name},
                {"before", std::move(before)},
                {"after", std::move(after)},
                {"sign_before", sign_before},
                {"sign_after", sign_after}};
}

} // namespace synchq
