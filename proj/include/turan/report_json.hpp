#pragma once

// JSON and CSV report serialization. Reports are deterministic: keys keep
// insertion order, and counts within 2^53 emit as JSON numbers while larger
// ones emit as decimal strings (exactness survives any JSON reader).

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "turan/bigint.hpp"
#include "turan/coloring.hpp"
#include "turan/extremal.hpp"
#include "turan/multipartite.hpp"
#include "turan/stability.hpp"

namespace turan {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;

using nlohmann::ordered_json;

ordered_json json_count(const Count& c);

// {schemaVersion, manifest:{command, parameters, version[, wallMs]}}
// wallMs appears only when with_timings is set, so default reports are
// byte-identical across runs and worker counts.
ordered_json report_shell(const std::string& command, ordered_json parameters, bool with_timings,
                          double wall_ms);

ordered_json vertex_list_json(std::uint64_t mask);
std::string format_partition(const std::vector<std::uint64_t>& classes);

ordered_json distance_json(const PartitionDistance& d);
ordered_json extremal_report_json(const ExtremalReport& r);
ordered_json audit_json(const DegreeAudit& a);
ordered_json optimization_json(const OptimizationResult& r);
ordered_json criticality_json(const CriticalityReport& report, const CriticalRDetail& detail);
ordered_json safety_json(const SafetyVerdict& v);
ordered_json verdict_json(const StabilityVerdict& v);
ordered_json profile_json(const ProfileTable& t);
std::string profile_csv(const ProfileTable& t);

}  // namespace turan
