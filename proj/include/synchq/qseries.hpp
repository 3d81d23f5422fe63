#pragma once

#include <array>
#include <string>
#include <vector>

#include "synchq/qpoly.hpp"

namespace synchq {

/**
 * Named q-series objects: q-shifted factorials, Gauss coefficients, and
 * both sides of the finite Jacobi identity
 *
 *   (q;q)_m (q;q)_n = sum_{k=-n-1}^{m} (-1)^k k q^{k(k+1)/2} [m+n+1; n+k+1]
 *
 * together with its bivariate parent
 *
 *   (zq;q)_m (z^-1;q)_n = sum_{k=-n}^{m} (-1)^k q^{k(k+1)/2} z^k [m+n; n+k]
 *
 * and the closed-form weight generating functions of synchronized
 * partition families.
 */

/// (sign*q^start; q)_count, the product of (1 - sign*q^(start+i)) for
/// i = 0..count-1; count = 0 yields 1. sign must be +1 or -1.
QPoly pochhammer(int sign, int start, int count);

/// Gauss coefficient [N; K] via the q-Pascal recurrence
/// [N; K] = [N-1; K-1] + q^K [N-1; K], memoized by row and safe for
/// concurrent callers. K < 0 or K > N gives the zero polynomial, which
/// lets identity summation loops run over their literal bounds.
QPoly gauss_binomial(int N, int K);

/// (q;q)_m (q;q)_n.
QPoly finite_jacobi_lhs(int m, int n);

/// sum_{k=-n-1}^{m} (-1)^k k q^{k(k+1)/2} [m+n+1; n+k+1]; the k = 0 term
/// is kept in the loop and contributes nothing.
QPoly finite_jacobi_rhs(int m, int n);

/// sum_{k=0}^{n} (-1)^k (2k+1) q^{k(k+1)/2} [2n+1; n+k+1], the square
/// form equal to (q;q)_n^2.
QPoly square_jacobi_rhs(int n);

/// (zq;q)_m (z^-1;q)_n as a Laurent polynomial in z.
ZQLaurent macmahon_lhs(int m, int n);

/// sum_{k=-n}^{m} (-1)^k q^{k(k+1)/2} z^k [m+n; n+k].
ZQLaurent macmahon_rhs(int m, int n);

/// Partial sum of sum_k (-1)^k (2k+1) q^{k(k+1)/2} over all k with
/// k(k+1)/2 <= N; the degree-N truncation of (q;q)_inf^3.
QPoly jacobi_truncated_series(int N);

/// Which side of an identity a polynomial expansion represents.
enum class SideLabel { lhs, rhs };

/// An exact expansion of one side of the finite Jacobi identity at (m, n).
struct IdentitySide {
    SideLabel label;
    int m = 0;
    int n = 0;
    QPoly poly;
};

IdentitySide finite_jacobi_side(SideLabel label, int m, int n);

// ---------------------------------------------------------------------------
// Derivation replay for the finite Jacobi identity
// ---------------------------------------------------------------------------

struct ProofStep {
    std::string name;
    bool passed = false;
};

struct ProofReplayReport {
    int m = 0;
    int n = 0;
    std::array<ProofStep, 4> steps;
    bool all_passed() const;
    /// Name of the first failing step, or empty when all passed.
    std::string first_failure() const;
};

/// Replays the derivation of the finite Jacobi identity at (m, n):
///   1. the bivariate identity at (m, n+1);
///   2. its left side factors as (1 - z^-1) f(z) with
///      f(z) = (zq;q)_m (z^-1 q;q)_n;
///   3. formal d/dz of the product side equals d/dz of the sum side;
///   4. setting z = 1 in the two derivatives yields (q;q)_m (q;q)_n and
///      the finite Jacobi sum respectively.
/// Every step is checked symbolically and reported pass/fail.
ProofReplayReport finite_jacobi_proof_replay(int m, int n);

// ---------------------------------------------------------------------------
// Closed forms for synchronized partition generating functions
// ---------------------------------------------------------------------------

/// (-q;q)_m (-1;q)_{n+1}: weight GF of all synchronized partitions with
/// alpha_1 <= m, beta_1 <= n.
QPoly sync_gf_formula(int m, int n);

/// (-q;q)_m (-q;q)_n: weight GF of the zero-free ones.
QPoly sync_zero_free_gf_formula(int m, int n);

/// Weight GF of the discrepancy-k stratum:
/// q^{k(k+1)/2} [m+n+1; n+k+1] for k >= 0 and
/// q^{|k|(|k|-1)/2} [m+n+1; n-|k|+1] for k < 0.
QPoly sync_discrepancy_gf_formula(int m, int n, int k);

/// Unsigned weight GF of rooted synchronized partitions:
/// sum_{k=1}^{m} k q^{k(k+1)/2} [m+n+1; n+k+1]
///   + sum_{k=1}^{n+1} k q^{k(k-1)/2} [m+n+1; n-k+1].
QPoly rooted_gf_formula(int m, int n);

} // namespace synchq
