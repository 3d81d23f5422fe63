#include "synchq/syncpart.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <tuple>

namespace synchq {

namespace {

int parity_sign(int k) {
    return (k % 2 == 0) ? 1 : -1;
}

} // namespace

SyncPartition::SyncPartition()
    : alpha_(DistinctPartition::of({}, false)),
      beta_(DistinctPartition::of({}, true)) {}

SyncPartition::SyncPartition(DistinctPartition alpha, DistinctPartition beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
    if (alpha_.has_zero_part())
        throw invalid_partition("alpha must not contain a zero part");
}

int SyncPartition::sign() const {
    return parity_sign(discrepancy());
}

bool operator==(const SyncPartition& a, const SyncPartition& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
}

std::strong_ordering operator<=>(const SyncPartition& a,
                                 const SyncPartition& b) {
    if (auto c = a.alpha_ <=> b.alpha_; c != 0) return c;
    return a.beta_ <=> b.beta_;
}

RootedSyncPartition::RootedSyncPartition(SyncPartition base, int bar_position)
    : base_(std::move(base)), bar_position_(bar_position) {
    int k = base_.discrepancy();
    if (k == 0)
        throw invalid_partition("rooted partition needs nonzero discrepancy");
    if (bar_position_ < 1 || bar_position_ > std::abs(k))
        throw invalid_partition("bar position outside the star range");
}

int RootedSyncPartition::delta() const {
    int k = discrepancy();
    return k > 0 ? k : -k - 1;
}

int RootedSyncPartition::sign() const {
    return parity_sign(delta());
}

bool RootedSyncPartition::is_degenerate() const {
    int k = discrepancy();
    if (k > 0)
        return base_.zero_free() && bar_position_ == 1;
    return !base_.zero_free() && bar_position_ == -k;
}

bool operator==(const RootedSyncPartition& a, const RootedSyncPartition& b) {
    return a.base_ == b.base_ && a.bar_position_ == b.bar_position_;
}

std::strong_ordering operator<=>(const RootedSyncPartition& a,
                                 const RootedSyncPartition& b) {
    if (auto c = a.base_ <=> b.base_; c != 0) return c;
    return a.bar_position_ <=> b.bar_position_;
}

std::vector<SyncPartition> enumerate_sync(int m, int n,
                                          std::optional<int> weight_filter) {
    std::vector<DistinctPartition> alphas = enumerate_distinct(m, false);
    std::vector<DistinctPartition> betas = enumerate_distinct(n, true);
    std::vector<SyncPartition> out;
    if (!weight_filter) out.reserve(alphas.size() * betas.size());
    for (const DistinctPartition& a : alphas)
        for (const DistinctPartition& b : betas) {
            if (weight_filter && a.weight() + b.weight() != *weight_filter)
                continue;
            out.emplace_back(a, b);
        }
    return out;
}

std::vector<RootedSyncPartition> enumerate_rooted(
    int m, int n, std::optional<int> weight_filter) {
    std::vector<RootedSyncPartition> out;
    for (SyncPartition& s : enumerate_sync(m, n, weight_filter)) {
        int stars = std::abs(s.discrepancy());
        for (int bar = 1; bar <= stars; ++bar) out.emplace_back(s, bar);
    }
    return out;
}

QPoly sync_gf(int m, int n) {
    QPoly gf;
    for (const SyncPartition& s : enumerate_sync(m, n))
        gf += QPoly::monomial(1, s.weight());
    return gf;
}

QPoly sync_gf_zero_free(int m, int n, bool signed_by_discrepancy) {
    QPoly gf;
    for (const SyncPartition& s : enumerate_sync(m, n)) {
        if (!s.zero_free()) continue;
        gf += QPoly::monomial(signed_by_discrepancy ? s.sign() : 1,
                              s.weight());
    }
    return gf;
}

QPoly sync_gf_discrepancy(int m, int n, int k) {
    QPoly gf;
    for (const SyncPartition& s : enumerate_sync(m, n))
        if (s.discrepancy() == k) gf += QPoly::monomial(1, s.weight());
    return gf;
}

QPoly rooted_gf(int m, int n, bool signed_by_delta) {
    QPoly gf;
    for (const RootedSyncPartition& s : enumerate_rooted(m, n))
        gf += QPoly::monomial(signed_by_delta ? s.sign() : 1, s.weight());
    return gf;
}

namespace {

// Cell grid for a two-row array: numbers from the longer row, stars on
// the padded one. bar = 0 means unbarred rendering.
std::string render_rows(const SyncPartition& s, int bar,
                        const RenderOptions& opts) {
    const std::vector<int>& alpha = s.alpha().parts();
    const std::vector<int>& beta = s.beta().parts();
    int columns = std::max(alpha.size(), beta.size());
    if (columns == 0) return "( )\n( )";

    const std::string star = "*";
    const std::string barred = opts.unicode_bar ? "*̄" : "#";

    auto cell = [&](const std::vector<int>& row, int i,
                    bool stars_here) -> std::string {
        if (i < int(row.size())) return std::to_string(row[std::size_t(i)]);
        if (!stars_here) return "";
        int star_index = i - int(row.size()) + 1;
        return star_index == bar ? barred : star;
    };

    bool stars_on_top = s.discrepancy() < 0;
    std::ostringstream top, bottom;
    for (int i = 0; i < columns; ++i) {
        std::string t = cell(alpha, i, stars_on_top);
        std::string b = cell(beta, i, !stars_on_top);
        // Align on visible width; the overlined star is two code points
        // but one column.
        auto visible = [](const std::string& c) {
            return c == "*̄" ? std::size_t(1) : c.size();
        };
        std::size_t width = std::max(visible(t), visible(b));
        if (i > 0) {
            top << ' ';
            bottom << ' ';
        }
        top << std::string(width - visible(t), ' ') << t;
        bottom << std::string(width - visible(b), ' ') << b;
    }
    return top.str() + "\n" + bottom.str();
}

} // namespace

std::string render(const SyncPartition& s, RenderOptions opts) {
    return render_rows(s, 0, opts);
}

std::string render(const RootedSyncPartition& s, RenderOptions opts) {
    return render_rows(s.base(), s.bar_position(), opts);
}

} // namespace synchq
