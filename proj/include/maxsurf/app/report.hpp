#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "maxsurf/app/config.hpp"
#include "maxsurf/verify.hpp"

namespace maxsurf::app {

inline constexpr const char* kReportSchema = "maxsurf-report/1";

nlohmann::ordered_json grid_json(const Grid& g);
nlohmann::ordered_json check_json(const Check& c);

/// The full report: job description, every check and the overall verdict.
/// Contains no timings or thread counts, so equal configs give equal bytes.
nlohmann::ordered_json report_json(const JobConfig& cfg, const VerificationReport& r);

/// Pretty-printed with a trailing newline.
std::string dump_report(const nlohmann::ordered_json& j);

}  // namespace maxsurf::app
