#include "synchq/involutions.hpp"

#include "synchq/errors.hpp"

namespace synchq {

std::string to_string(TauCase c) {
    switch (c) {
        case TauCase::case_1a: return "1a";
        case TauCase::case_1b: return "1b";
        case TauCase::case_2a: return "2a";
        case TauCase::case_2b: return "2b";
    }
    throw error("unreachable tau case");
}

TauResult tau(const RootedSyncPartition& s, int m, int n) {
    if (!s.within_bounds(m, n))
        throw bounds_violation("rooted partition outside the given bounds");
    if (s.is_degenerate())
        throw degenerate_input("tau is undefined on degenerate input");

    const SyncPartition& base = s.base();
    int k = base.discrepancy();
    bool zero = !base.zero_free();
    int bar = s.bar_position();

    if (zero && k > 0) {
        SyncPartition next(base.alpha(), base.beta().without_zero_part());
        return {RootedSyncPartition(next, bar + 1), TauCase::case_1a};
    }
    if (zero && k < 0) {
        SyncPartition next(base.alpha(), base.beta().without_zero_part());
        return {RootedSyncPartition(next, bar), TauCase::case_1b};
    }
    if (k > 0) {
        SyncPartition next(base.alpha(), base.beta().with_zero_part());
        return {RootedSyncPartition(next, bar - 1), TauCase::case_2a};
    }
    SyncPartition next(base.alpha(), base.beta().with_zero_part());
    return {RootedSyncPartition(next, bar), TauCase::case_2b};
}

SyncPartition phi(const RootedSyncPartition& s) {
    if (!s.is_degenerate())
        throw nondegenerate_input("phi is undefined on non-degenerate input");
    const SyncPartition& base = s.base();
    if (s.discrepancy() > 0) return base;
    return SyncPartition(base.alpha(), base.beta().without_zero_part());
}

RootedSyncPartition phi_inverse(const SyncPartition& s) {
    if (!s.zero_free())
        throw zero_part_input("phi_inverse needs a zero-free partition");
    if (s.discrepancy() > 0) return RootedSyncPartition(s, 1);
    SyncPartition next(s.alpha(), s.beta().with_zero_part());
    return RootedSyncPartition(next, -next.discrepancy());
}

} // namespace synchq
