#ifndef SYNCHQ_INVOLUTIONS_HPP
#define SYNCHQ_INVOLUTIONS_HPP

#include <string>

#include "synchq/syncpart.hpp"

namespace synchq {

// Which branch of tau fired. Cases 1a/2a are mutual inverses, as are
// 1b/2b; pairing is part of the tested contract.
enum class TauCase { case_1a, case_1b, case_2a, case_2b };

std::string to_string(TauCase c);

struct TauResult {
    RootedSyncPartition result;
    TauCase fired;
};

// Sign-reversing involution on the non-degenerate rooted partitions of
// R_{m,n}. The four cases split by (beta has a zero part?, sign of the
// discrepancy):
//
//   1a  zero present, k > 0: drop the zero; the freed column is re-read
//       as the leftmost bottom star, so the bar index shifts by +1.
//   1b  zero present, k < 0: delete the last column (zero plus the top
//       star above it); bar unchanged.
//   2a  no zero, k > 0: the first bottom star becomes a zero part
//       appended to beta; bar index shifts by -1.
//   2b  no zero, k < 0: append a column with an unbarred star on top
//       and a zero part below; bar unchanged.
//
// The output has the same weight and bounds, opposite sign, and is
// again non-degenerate. Throws degenerate_input when tau is undefined
// and bounds_violation when S is not in R_{m,n}.
TauResult tau(const RootedSyncPartition& s, int m, int n);

// Sign-preserving bijection from the degenerate rooted partitions onto
// the zero-free synchronized partitions. Discrepancy > 0: remove the
// bar. Discrepancy < 0: remove the last column (the trailing zero and
// the barred top star above it). Throws nondegenerate_input otherwise.
SyncPartition phi(const RootedSyncPartition& s);

// Two-sided inverse of phi on zero-free input. Discrepancy > 0: bar
// the first bottom star. Discrepancy <= 0: append a column with a
// barred star on top and a zero part below. Throws zero_part_input if
// beta contains 0.
RootedSyncPartition phi_inverse(const SyncPartition& s);

} // namespace synchq

#endif
