#pragma once

#include <stdexcept>
#include <string>

namespace synchq {

/// Base class for all errors raised by this library.
struct error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A coefficient left the signed 128-bit range. Arithmetic never wraps
/// silently; callers either propagate this or report it as a distinct
/// "overflow" verification status.
struct arithmetic_overflow : error {
    using error::error;
};

/// A partition value violates its invariants (parts not strictly
/// decreasing, forbidden zero part, bar index out of range, ...).
struct invalid_partition : error {
    using error::error;
};

/// tau was applied to a degenerate rooted synchronized partition.
struct degenerate_input : error {
    using error::error;
};

/// phi was applied to a non-degenerate rooted synchronized partition.
struct nondegenerate_input : error {
    using error::error;
};

/// phi_inverse was applied to a synchronized partition whose beta
/// contains a zero part.
struct zero_part_input : error {
    using error::error;
};

/// A partition lies outside the (m, n) bounds it was claimed to be in.
struct bounds_violation : error {
    using error::error;
};

/// run_grid was asked for a check name it does not know.
struct unknown_check : error {
    using error::error;
};

} // namespace synchq
