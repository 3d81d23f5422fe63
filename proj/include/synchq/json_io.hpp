#ifndef SYNCHQ_JSON_IO_HPP
#define SYNCHQ_JSON_IO_HPP

#include <string>

#include "json.hpp"

#include "synchq/qpoly.hpp"
#include "synchq/syncpart.hpp"
#include "synchq/verifier.hpp"

namespace synchq {

/// {"terms": [[exponent, coefficient-as-decimal-string], ...]} sorted by
/// exponent; strings sidestep the 64-bit JSON number limit.
nlohmann::json to_json(const QPoly& p);

/// Inverse of to_json(QPoly); coefficients may be decimal strings or
/// plain JSON integers. Throws error on malformed input.
QPoly qpoly_from_json(const nlohmann::json& j);

/// {"parts": [...]}, decreasing order.
nlohmann::json to_json(const DistinctPartition& p);

/// {"alpha": [...], "beta": [...]}.
nlohmann::json to_json(const SyncPartition& s);

/// {"alpha": [...], "beta": [...], "bar": p}.
nlohmann::json to_json(const RootedSyncPartition& s);

/// Reads {"alpha": [...], "beta": [...]}; a "bar" key must be null.
/// Throws invalid_partition on malformed input.
SyncPartition sync_from_json(const nlohmann::json& j);

/// Reads {"alpha": [...], "beta": [...], "bar": p}; a missing or null
/// bar is invalid here. Throws invalid_partition on malformed input.
RootedSyncPartition rooted_from_json(const nlohmann::json& j);

/// {"check": ..., "params": {...}, "status": ..., "witness": ...} with a
/// null witness when none is attached.
nlohmann::json to_json(const VerificationReport& r);

/// One step of a tau/phi trace: {"case": "1a"|"1b"|"2a"|"2b"|"phi"|
/// "phi_inverse", "before": ..., "after": ..., "sign_before": +-1,
/// "sign_after": +-1}.
nlohmann::json trace_step(const std::string& case_name,
                          nlohmann::json before, nlohmann::json after,
                          int sign_before, int sign_after);

} // namespace synchq

#endif
