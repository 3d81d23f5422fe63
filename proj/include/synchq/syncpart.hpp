#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "synchq/partitions.hpp"
#include "synchq/qpoly.hpp"

namespace synchq {

/**
 * Synchronized partition: a pair (alpha, beta) of distinct-part
 * partitions written as a two-row array, where the shorter row is padded
 * with star symbols. alpha has parts >= 1; beta may end with a single
 * zero part.
 *
 * The stars are a view, never stored: their count and row follow from
 * the discrepancy l(alpha) - l(beta). Positive discrepancy puts stars on
 * the bottom row, negative on the top.
 */
class SyncPartition {
public:
    SyncPartition();

    /// Validates that alpha is zero-free and both rows are strictly
    /// decreasing distinct-part partitions.
    SyncPartition(DistinctPartition alpha, DistinctPartition beta);

    const DistinctPartition& alpha() const { return alpha_; }
    const DistinctPartition& beta() const { return beta_; }

    /// l(alpha) - l(beta); its absolute value is the number of stars.
    int discrepancy() const { return alpha_.length() - beta_.length(); }

    /// |alpha| + |beta|.
    int weight() const { return alpha_.weight() + beta_.weight(); }

    /// True when beta contains no zero part.
    bool zero_free() const { return !beta_.has_zero_part(); }

    bool within_bounds(int m, int n) const {
        return alpha_.largest() <= m && beta_.largest() <= n;
    }

    /// (-1)^discrepancy.
    int sign() const;

    friend bool operator==(const SyncPartition&, const SyncPartition&);
    friend std::strong_ordering operator<=>(const SyncPartition&,
                                            const SyncPartition&);

private:
    DistinctPartition alpha_;
    DistinctPartition beta_;
};

/**
 * Rooted synchronized partition: a synchronized partition with nonzero
 * discrepancy plus one distinguished (barred) star. bar_position indexes
 * the stars 1-based, left to right; the row holding the bar is implied
 * by the sign of the discrepancy.
 */
class RootedSyncPartition {
public:
    /// Throws invalid_partition when the discrepancy is zero or
    /// bar_position is outside 1..|discrepancy|.
    RootedSyncPartition(SyncPartition base, int bar_position);

    const SyncPartition& base() const { return base_; }
    int bar_position() const { return bar_position_; }

    int discrepancy() const { return base_.discrepancy(); }
    int weight() const { return base_.weight(); }
    bool within_bounds(int m, int n) const {
        return base_.within_bounds(m, n);
    }

    /// Star count delta(S): all stars are counted except a barred star in
    /// the top row. So delta = k for discrepancy k > 0 (the barred bottom
    /// star is counted) and delta = |k| - 1 for k < 0.
    int delta() const;

    /// (-1)^delta.
    int sign() const;

    /// True for the two special shapes that map to zero-free
    /// synchronized partitions: bar on the first bottom star with beta
    /// zero-free (k > 0), or bar on the last top star above a trailing
    /// zero part (k < 0).
    bool is_degenerate() const;

    friend bool operator==(const RootedSyncPartition&,
                           const RootedSyncPartition&);
    friend std::strong_ordering operator<=>(const RootedSyncPartition&,
                                            const RootedSyncPartition&);

private:
    SyncPartition base_;
    int bar_position_;
};

/// All of S_{m,n} (pairs with alpha_1 <= m, beta_1 <= n), in product
/// order: alpha sweeps enumerate_distinct(m, false), beta sweeps
/// enumerate_distinct(n, true) inside it. Optionally filtered to an
/// exact weight. Unfiltered size is 2^m * 2^(n+1).
std::vector<SyncPartition> enumerate_sync(
    int m, int n, std::optional<int> weight_filter = std::nullopt);

/// All of R_{m,n}: every element of enumerate_sync(m, n) with nonzero
/// discrepancy, expanded over bar positions 1..|discrepancy|.
std::vector<RootedSyncPartition> enumerate_rooted(
    int m, int n, std::optional<int> weight_filter = std::nullopt);

// Brute-force weight generating functions over the full finite family.

/// Sum of q^weight over all of S_{m,n}.
QPoly sync_gf(int m, int n);

/// Same, restricted to zero-free elements; with signed_by_discrepancy the
/// terms carry the factor (-1)^discrepancy.
QPoly sync_gf_zero_free(int m, int n, bool signed_by_discrepancy = false);

/// Sum of q^weight over elements of S_{m,n} with discrepancy exactly k.
QPoly sync_gf_discrepancy(int m, int n, int k);

/// Sum of q^weight over R_{m,n}; with signed_by_delta each element
/// carries its rooted sign (-1)^delta.
QPoly rooted_gf(int m, int n, bool signed_by_delta);

struct RenderOptions {
    /// Render the barred star as "*" + combining overline instead of "#".
    bool unicode_bar = false;
};

/// Two-row aligned text form. Stars print as "*", the barred star as "#"
/// (or the overlined form). An empty row pair renders as "( )" lines.
std::string render(const SyncPartition& s, RenderOptions opts = {});
std::string render(const RootedSyncPartition& s, RenderOptions opts = {});

} // namespace synchq
