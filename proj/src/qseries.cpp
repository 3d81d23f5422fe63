#include "synchq/qseries.hpp"

#include <cstdint>
#include <map>
#include <mutex>
#include <stdexcept>

namespace synchq {

namespace {

// k(k+1)/2 for any signed k; nonnegative for every integer argument.
int triangular(int k) {
    std::int64_t t = std::int64_t(k) * (std::int64_t(k) + 1) / 2;
    return int(t);
}

int parity_sign(int k) {
    return (k % 2 == 0) ? 1 : -1;
}

// Row cache for the q-Pascal recurrence. std::map keeps node addresses
// stable, so references handed out under the lock stay valid while
// later rows are inserted.
std::mutex gauss_mutex;
std::map<int, std::vector<QPoly>> gauss_rows;

const std::vector<QPoly>& gauss_row(int N) {
    std::lock_guard<std::mutex> lock(gauss_mutex);
    if (auto it = gauss_rows.find(N); it != gauss_rows.end()) return it->second;
    int start = gauss_rows.empty() ? 0 : gauss_rows.rbegin()->first + 1;
    if (start == 0) {
        gauss_rows.emplace(0, std::vector<QPoly>{QPoly::one()});
        start = 1;
    }
    for (int r = start; r <= N; ++r) {
        const std::vector<QPoly>& prev = gauss_rows.at(r - 1);
        std::vector<QPoly> row(std::size_t(r) + 1);
        row[0] = QPoly::one();
        row[std::size_t(r)] = QPoly::one();
        for (int K = 1; K < r; ++K)
            row[std::size_t(K)] = prev[std::size_t(K) - 1] +
                                  QPoly::monomial(1, K) * prev[std::size_t(K)];
        gauss_rows.emplace(r, std::move(row));
    }
    return gauss_rows.at(N);
}

void require_nonnegative(int v, const char* what) {
    if (v < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

} // namespace

QPoly pochhammer(int sign, int start, int count) {
    if (sign != 1 && sign != -1)
        throw std::invalid_argument("pochhammer sign must be +1 or -1");
    require_nonnegative(start, "pochhammer start");
    require_nonnegative(count, "pochhammer count");
    QPoly p = QPoly::one();
    for (int i = 0; i < count; ++i)
        p *= QPoly::one() - QPoly::monomial(sign, start + i);
    return p;
}

QPoly gauss_binomial(int N, int K) {
    require_nonnegative(N, "gauss binomial N");
    if (K < 0 || K > N) return {};
    return gauss_row(N)[std::size_t(K)];
}

QPoly finite_jacobi_lhs(int m, int n) {
    require_nonnegative(m, "m");
    require_nonnegative(n, "n");
    return pochhammer(1, 1, m) * pochhammer(1, 1, n);
}

QPoly finite_jacobi_rhs(int m, int n) {
    require_nonnegative(m, "m");
    require_nonnegative(n, "n");
    const std::vector<QPoly>& row = gauss_row(m + n + 1);
    QPoly sum;
    for (int k = -(n + 1); k <= m; ++k) {
        if (k == 0) continue; // factor k kills the term
        sum += QPoly::monomial(parity_sign(k) * int128(k), triangular(k)) *
               row[std::size_t(n + k + 1)];
    }
    return sum;
}

QPoly square_jacobi_rhs(int n) {
    require_nonnegative(n, "n");
    const std::vector<QPoly>& row = gauss_row(2 * n + 1);
    QPoly sum;
    for (int k = 0; k <= n; ++k)
        sum += QPoly::monomial(parity_sign(k) * int128(2 * k + 1),
                               triangular(k)) *
               row[std::size_t(n + k + 1)];
    return sum;
}

ZQLaurent macmahon_lhs(int m, int n) {
    require_nonnegative(m, "m");
    require_nonnegative(n, "n");
    ZQLaurent p = ZQLaurent::one();
    for (int i = 1; i <= m; ++i)
        p *= ZQLaurent::one() - ZQLaurent::monomial(QPoly::monomial(1, i), 1);
    for (int j = 0; j < n; ++j)
        p *= ZQLaurent::one() - ZQLaurent::monomial(QPoly::monomial(1, j), -1);
    return p;
}

ZQLaurent macmahon_rhs(int m, int n) {
    require_nonnegative(m, "m");
    require_nonnegative(n, "n");
    const std::vector<QPoly>& row = gauss_row(m + n);
    ZQLaurent sum;
    for (int k = -n; k <= m; ++k)
        sum += ZQLaurent::monomial(
            QPoly::monomial(parity_sign(k), triangular(k)) *
                row[std::size_t(n + k)],
            k);
    return sum;
}

QPoly jacobi_truncated_series(int N) {
    require_nonnegative(N, "N");
    QPoly sum;
    for (int k = 0; triangular(k) <= N; ++k)
        sum += QPoly::monomial(parity_sign(k) * int128(2 * k + 1),
                               triangular(k));
    return sum.truncate(N);
}

IdentitySide finite_jacobi_side(SideLabel label, int m, int n) {
    QPoly p = (label == SideLabel::lhs) ? finite_jacobi_lhs(m, n)
                                        : finite_jacobi_rhs(m, n);
    return IdentitySide{label, m, n, std::move(p)};
}

bool ProofReplayReport::all_passed() const {
    for (const ProofStep& s : steps)
        if (!s.passed) return false;
    return true;
}

std::string ProofReplayReport::first_failure() const {
    for (const ProofStep& s : steps)
        if (!s.passed) return s.name;
    return {};
}

ProofReplayReport finite_jacobi_proof_replay(int m, int n) {
    require_nonnegative(m, "m");
    require_nonnegative(n, "n");
    ProofReplayReport report;
    report.m = m;
    report.n = n;

    ZQLaurent product_side = macmahon_lhs(m, n + 1);
    ZQLaurent sum_side = macmahon_rhs(m, n + 1);
    report.steps[0] = {"bivariate identity at (m, n+1)",
                       product_side == sum_side};

    // f(z) = (zq;q)_m (z^-1 q;q)_n, so (z^-1;q)_{n+1} = (1 - z^-1)(z^-1 q;q)_n
    // splits the left side.
    ZQLaurent f = ZQLaurent::one();
    for (int i = 1; i <= m; ++i)
        f *= ZQLaurent::one() - ZQLaurent::monomial(QPoly::monomial(1, i), 1);
    for (int j = 1; j <= n; ++j)
        f *= ZQLaurent::one() - ZQLaurent::monomial(QPoly::monomial(1, j), -1);
    ZQLaurent factored =
        (ZQLaurent::one() - ZQLaurent::monomial(QPoly::one(), -1)) * f;
    report.steps[1] = {"left side factors as (1 - z^-1) f(z)",
                       product_side == factored};

    ZQLaurent d_product = factored.derivative_z();
    ZQLaurent d_sum = sum_side.derivative_z();
    report.steps[2] = {"d/dz of product side equals d/dz of sum side",
                       d_product == d_sum};

    bool left_ok = d_product.eval_z1() == finite_jacobi_lhs(m, n);
    bool right_ok = d_sum.eval_z1() == finite_jacobi_rhs(m, n);
    report.steps[3] = {"z = 1 specialization gives the univariate identity",
                       left_ok && right_ok};
    return report;
}

QPoly sync_gf_formula(int m, int n) {
    return pochhammer(-1, 1, m) * pochhammer(-1, 0, n + 1);
}

QPoly sync_zero_free_gf_formula(int m, int n) {
    return pochhammer(-1, 1, m) * pochhammer(-1, 1, n);
}

QPoly sync_discrepancy_gf_formula(int m, int n, int k) {
    require_nonnegative(m, "m");
    require_nonnegative(n, "n");
    if (k >= 0)
        return QPoly::monomial(1, triangular(k)) *
               gauss_binomial(m + n + 1, n + k + 1);
    int a = -k;
    return QPoly::monomial(1, triangular(a - 1)) *
           gauss_binomial(m + n + 1, n - a + 1);
}

QPoly rooted_gf_formula(int m, int n) {
    require_nonnegative(m, "m");
    require_nonnegative(n, "n");
    QPoly sum;
    for (int k = 1; k <= m; ++k)
        sum += QPoly::monomial(k, triangular(k)) *
               gauss_binomial(m + n + 1, n + k + 1);
    for (int k = 1; k <= n + 1; ++k)
        sum += QPoly::monomial(k, triangular(k - 1)) *
               gauss_binomial(m + n + 1, n - k + 1);
    return sum;
}

} // namespace synchq
