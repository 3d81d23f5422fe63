#ifndef SYNCHQ_VERIFIER_HPP
#define SYNCHQ_VERIFIER_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "synchq/qpoly.hpp"

namespace synchq {

enum class Status { pass, fail, overflow };

std::string to_string(Status s);

/**
 * Outcome of one verification check. A fail always carries a witness
 * that re-evaluates to the reported discrepancy; overflow marks the
 * honest boundary of the verified range rather than a refutation.
 */
struct VerificationReport {
    std::string check_name;
    std::map<std::string, int> parameters;
    Status status = Status::pass;
    std::optional<nlohmann::json> witness;
};

/// Runs body and folds its outcome into a report: nullopt means pass, a
/// returned witness means fail, and a thrown arithmetic_overflow becomes
/// the overflow status with the message as witness. Other exceptions
/// propagate; they indicate bugs, not verdicts.
VerificationReport guarded_report(
    std::string check_name, std::map<std::string, int> parameters,
    const std::function<std::optional<nlohmann::json>()>& body);

/// First exponent where the two polynomials differ, as a witness object
/// {"exponent": e, "lhs": c, "rhs": c}, or nullopt when equal.
std::optional<nlohmann::json> first_mismatch(const QPoly& lhs,
                                             const QPoly& rhs);

/// Bivariate version; the witness adds the z-exponent of the first
/// differing Laurent coefficient.
std::optional<nlohmann::json> first_mismatch(const ZQLaurent& lhs,
                                             const ZQLaurent& rhs);

/// (q;q)_m (q;q)_n against the signed Gauss-binomial sum.
VerificationReport verify_finite_jacobi(int m, int n);

/// (q;q)_n^2 against the square-form sum.
VerificationReport verify_square_jacobi(int n);

/// The bivariate product (zq;q)_m (z^-1;q)_n against its Laurent sum.
VerificationReport verify_macmahon(int m, int n);

/// All four derivation steps of finite_jacobi_proof_replay.
VerificationReport verify_proof_replay(int m, int n);

/// Every closed-form generating function against brute-force
/// enumeration: total, zero-free, each discrepancy stratum from -(n+1)
/// to m, unsigned rooted, signed rooted, and signed zero-free.
VerificationReport verify_gf_family(int m, int n);

/// Exhaustive check of tau and phi over R_{m,n}: exact degeneracy
/// trichotomy, involution/sign/weight/bounds/case-pairing properties,
/// phi a sign- and weight-preserving bijection onto zero-free S_{m,n}
/// with phi_inverse its two-sided inverse, and agreement of per-weight
/// signed counts across the bijection.
VerificationReport verify_involution_suite(int m, int n);

/// Truncation to degree N of (q;q)_N^3, and of (q;q)_N times the finite
/// Jacobi sum at (N,N), against the series with coefficients
/// (-1)^k (2k+1) at exponents k(k+1)/2.
VerificationReport verify_stabilization(int N);

struct CheckInfo {
    std::string name;
    /// True for checks over one parameter (square-jacobi over n,
    /// stabilization over N); grids then sweep only the second bound.
    bool single_axis = false;
    /// Default inclusive grid bound per axis.
    int default_limit = 0;
};

const std::vector<CheckInfo>& known_checks();

/// nullptr when the name is not a known check.
const CheckInfo* find_check(const std::string& name);

/// One report at exact parameters; single-axis checks read n.
/// Throws unknown_check for an unrecognized name.
VerificationReport run_single(const std::string& check, int m, int n);

/// One report per grid cell, in ascending (m, n) order: m outer from 0
/// to m_max, n inner from 0 to n_max. Single-axis checks sweep 0..n_max
/// only. Throws unknown_check for an unrecognized name.
std::vector<VerificationReport> run_grid(const std::string& check,
                                         int m_max, int n_max);

/// 2 when any report failed, else 3 when any overflowed, else 0.
int exit_code_for(const std::vector<VerificationReport>& reports);

} // namespace synchq

#endif
