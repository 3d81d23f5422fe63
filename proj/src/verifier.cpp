#include "synchq/verifier.hpp"

#include <algorithm>
#include <utility>

#include "synchq/errors.hpp"
#include "synchq/involutions.hpp"
#include "synchq/json_io.hpp"
#include "synchq/qseries.hpp"
#include "synchq/syncpart.hpp"

namespace synchq {

using nlohmann::json;

std::string to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::overflow: return "overflow";
    }
    throw error("unreachable status");
}

VerificationReport guarded_report(
    std::string check_name, std::map<std::string, int> parameters,
    const std::function<std::optional<json>()>& body) {
    VerificationReport report{std::move(check_name), std::move(parameters),
                              Status::pass, std::nullopt};
    try {
        if (auto witness = body()) {
            report.status = Status::fail;
            report.witness = std::move(*witness);
        }
    } catch (const arithmetic_overflow& e) {
        report.status = Status::overflow;
        report.witness = json{{"overflow", e.what()}};
    }
    return report;
}

std::optional<json> first_mismatch(const QPoly& lhs, const QPoly& rhs) {
    auto witness = [](int e, int128 l, int128 r) {
        return json{{"exponent", e},
                    {"lhs", int128_to_string(l)},
                    {"rhs", int128_to_string(r)}};
    };
    const auto& a = lhs.terms();
    const auto& b = rhs.terms();
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i].first < b[j].first)
            return witness(a[i].first, a[i].second, 0);
        if (b[j].first < a[i].first)
            return witness(b[j].first, 0, b[j].second);
        if (a[i].second != b[j].second)
            return witness(a[i].first, a[i].second, b[j].second);
        ++i;
        ++j;
    }
    if (i < a.size()) return witness(a[i].first, a[i].second, 0);
    if (j < b.size()) return witness(b[j].first, 0, b[j].second);
    return std::nullopt;
}

std::optional<json> first_mismatch(const ZQLaurent& lhs, const ZQLaurent& rhs) {
    auto at = [&](int z) {
        auto w = first_mismatch(lhs.coeff(z), rhs.coeff(z));
        (*w)["z_exponent"] = z;
        return w;
    };
    auto ai = lhs.terms().begin(), ae = lhs.terms().end();
    auto bi = rhs.terms().begin(), be = rhs.terms().end();
    while (ai != ae && bi != be) {
        int z = std::min(ai->first, bi->first);
        if (ai->first != bi->first || !(ai->second == bi->second))
            return at(z);
        ++ai;
        ++bi;
    }
    if (ai != ae) return at(ai->first);
    if (bi != be) return at(bi->first);
    return std::nullopt;
}

VerificationReport verify_finite_jacobi(int m, int n) {
    return guarded_report("finite-jacobi", {{"m", m}, {"n", n}}, [&] {
        return first_mismatch(finite_jacobi_lhs(m, n),
                              finite_jacobi_rhs(m, n));
    });
}

VerificationReport verify_square_jacobi(int n) {
    return guarded_report("square-jacobi", {{"n", n}}, [&] {
        QPoly qq_n = pochhammer(1, 1, n);
        return first_mismatch(qq_n * qq_n, square_jacobi_rhs(n));
    });
}

VerificationReport verify_macmahon(int m, int n) {
    return guarded_report("macmahon", {{"m", m}, {"n", n}}, [&] {
        return first_mismatch(macmahon_lhs(m, n), macmahon_rhs(m, n));
    });
}

VerificationReport verify_proof_replay(int m, int n) {
    return guarded_report("proof-replay", {{"m", m}, {"n", n}},
                          [&]() -> std::optional<json> {
        ProofReplayReport replay = finite_jacobi_proof_replay(m, n);
        if (replay.all_passed()) return std::nullopt;
        return json{{"step", replay.first_failure()}};
    });
}

VerificationReport verify_gf_family(int m, int n) {
    return guarded_report("gf-family", {{"m", m}, {"n", n}},
                          [&]() -> std::optional<json> {
        auto diff = [](const char* target, const QPoly& brute,
                       const QPoly& formula,
                       std::optional<int> k) -> std::optional<json> {
            auto w = first_mismatch(brute, formula);
            if (!w) return std::nullopt;
            (*w)["target"] = target;
            if (k) (*w)["discrepancy"] = *k;
            return w;
        };
        if (auto w = diff("sync-all", sync_gf(m, n), sync_gf_formula(m, n),
                          std::nullopt))
            return w;
        if (auto w = diff("sync-zero-free", sync_gf_zero_free(m, n),
                          sync_zero_free_gf_formula(m, n), std::nullopt))
            return w;
        for (int k = -(n + 1); k <= m; ++k)
            if (auto w = diff("sync-by-discrepancy",
                              sync_gf_discrepancy(m, n, k),
                              sync_discrepancy_gf_formula(m, n, k), k))
                return w;
        if (auto w = diff("rooted-unsigned", rooted_gf(m, n, false),
                          rooted_gf_formula(m, n), std::nullopt))
            return w;
        if (auto w = diff("rooted-signed", rooted_gf(m, n, true),
                          finite_jacobi_rhs(m, n), std::nullopt))
            return w;
        if (auto w = diff("zero-free-signed", sync_gf_zero_free(m, n, true),
                          finite_jacobi_lhs(m, n), std::nullopt))
            return w;
        return std::nullopt;
    });
}

namespace {

bool tau_cases_paired(TauCase a, TauCase b) {
    auto pair_of = [](TauCase c) {
        switch (c) {
            case TauCase::case_1a: return TauCase::case_2a;
            case TauCase::case_2a: return TauCase::case_1a;
            case TauCase::case_1b: return TauCase::case_2b;
            case TauCase::case_2b: return TauCase::case_1b;
        }
        throw error("unreachable tau case");
    };
    return pair_of(a) == b;
}

} // namespace

VerificationReport verify_involution_suite(int m, int n) {
    return guarded_report("involutions", {{"m", m}, {"n", n}},
                          [&]() -> std::optional<json> {
        auto fail = [](const char* property,
                       const auto& element) -> std::optional<json> {
            return json{{"property", property}, {"element", to_json(element)}};
        };

        std::vector<SyncPartition> zero_free;
        for (const SyncPartition& s : enumerate_sync(m, n))
            if (s.zero_free()) zero_free.push_back(s);

        std::vector<SyncPartition> images;
        for (const RootedSyncPartition& r : enumerate_rooted(m, n)) {
            if (r.is_degenerate()) {
                bool raised = false;
                try {
                    tau(r, m, n);
                } catch (const degenerate_input&) {
                    raised = true;
                }
                if (!raised) return fail("tau accepted degenerate input", r);

                SyncPartition image = phi(r);
                if (!image.zero_free())
                    return fail("phi image has a zero part", r);
                if (image.weight() != r.weight())
                    return fail("phi changed the weight", r);
                if (image.sign() != r.sign())
                    return fail("phi changed the sign", r);
                if (!(phi_inverse(image) == r))
                    return fail("phi_inverse did not undo phi", r);
                images.push_back(image);
            } else {
                bool raised = false;
                try {
                    phi(r);
                } catch (const nondegenerate_input&) {
                    raised = true;
                }
                if (!raised) return fail("phi accepted non-degenerate input", r);

                TauResult t = tau(r, m, n);
                if (!t.result.within_bounds(m, n))
                    return fail("tau left the bounds", r);
                if (t.result.is_degenerate())
                    return fail("tau produced a degenerate element", r);
                if (t.result.weight() != r.weight())
                    return fail("tau changed the weight", r);
                if (t.result.sign() != -r.sign())
                    return fail("tau did not flip the sign", r);
                TauResult back = tau(t.result, m, n);
                if (!(back.result == r))
                    return fail("tau twice is not the identity", r);
                if (!tau_cases_paired(t.fired, back.fired))
                    return fail("tau case pairing broken", r);
            }
        }

        // Injectivity onto exactly the zero-free family: equal sorted
        // vectors mean equal multisets, and the right side has no
        // duplicates.
        std::vector<SyncPartition> sorted_images = images;
        std::vector<SyncPartition> sorted_zero_free = zero_free;
        std::sort(sorted_images.begin(), sorted_images.end());
        std::sort(sorted_zero_free.begin(), sorted_zero_free.end());
        if (!(sorted_images == sorted_zero_free))
            return json{{"property",
                         "phi image is not exactly the zero-free family"}};

        for (const SyncPartition& z : zero_free) {
            RootedSyncPartition r = phi_inverse(z);
            if (!r.is_degenerate())
                return fail("phi_inverse output not degenerate", z);
            if (!r.within_bounds(m, n))
                return fail("phi_inverse left the bounds", z);
            if (!(phi(r) == z))
                return fail("phi did not undo phi_inverse", z);
        }

        if (auto w = first_mismatch(rooted_gf(m, n, true),
                                    sync_gf_zero_free(m, n, true))) {
            (*w)["property"] = "per-weight signed counts disagree";
            return w;
        }
        return std::nullopt;
    });
}

VerificationReport verify_stabilization(int N) {
    return guarded_report("stabilization", {{"N", N}},
                          [&]() -> std::optional<json> {
        QPoly series = jacobi_truncated_series(N);
        QPoly qq_n = pochhammer(1, 1, N);
        if (auto w = first_mismatch((qq_n * qq_n * qq_n).truncate(N), series)) {
            (*w)["clause"] = "pochhammer-cube";
            return w;
        }
        if (auto w = first_mismatch(
                (qq_n * finite_jacobi_rhs(N, N)).truncate(N), series)) {
            (*w)["clause"] = "finite-identity-sum";
            return w;
        }
        return std::nullopt;
    });
}

const std::vector<CheckInfo>& known_checks() {
    static const std::vector<CheckInfo> table = {
        {"finite-jacobi", false, 25}, {"square-jacobi", true, 25},
        {"macmahon", false, 25},      {"proof-replay", false, 25},
        {"gf-family", false, 6},      {"involutions", false, 6},
        {"stabilization", true, 40},
    };
    return table;
}

const CheckInfo* find_check(const std::string& name) {
    for (const CheckInfo& info : known_checks())
        if (info.name == name) return &info;
    return nullptr;
}

VerificationReport run_single(const std::string& check, int m, int n) {
    if (!find_check(check)) throw unknown_check("unknown check: " + check);
    if (check == "finite-jacobi") return verify_finite_jacobi(m, n);
    if (check == "square-jacobi") return verify_square_jacobi(n);
    if (check == "macmahon") return verify_macmahon(m, n);
    if (check == "proof-replay") return verify_proof_replay(m, n);
    if (check == "gf-family") return verify_gf_family(m, n);
    if (check == "involutions") return verify_involution_suite(m, n);
    return verify_stabilization(n);
}

std::vector<VerificationReport> run_grid(const std::string& check, int m_max,
                                         int n_max) {
    const CheckInfo* info = find_check(check);
    if (!info) throw unknown_check("unknown check: " + check);
    std::vector<VerificationReport> out;
    if (n_max < 0 || (!info->single_axis && m_max < 0)) return out;
    if (info->single_axis) {
        for (int n = 0; n <= n_max; ++n) out.push_back(run_single(check, 0, n));
        return out;
    }
    for (int m = 0; m <= m_max; ++m)
        for (int n = 0; n <= n_max; ++n)
            out.push_back(run_single(check, m, n));
    return out;
}

int exit_code_for(const std::vector<VerificationReport>& reports) {
    bool overflowed = false;
    for (const VerificationReport& r : reports) {
        if (r.status == Status::fail) return 2;
        overflowed = overflowed || r.status == Status::overflow;
    }
    return overflowed ? 3 : 0;
}

} // namespace synchq
