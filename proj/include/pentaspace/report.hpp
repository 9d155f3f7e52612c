/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "pentaspace/pentagon.hpp"

namespace pentaspace {

// Exit conventions shared by the reports and the CLI.
inline constexpr int exit_pass = 0;
inline constexpr int exit_input_error = 1;
inline constexpr int exit_verification_failure = 2;

inline constexpr int report_schema_version = 1;

// One command's structured result: a deterministic JSON document (insertion
// order preserved, rationals rendered as exact strings), a short summary for
// standard error, and the process exit status. SVG output, when requested,
// travels alongside so the caller decides where to write it.
struct CommandReport {
  nlohmann::ordered_json document;
  std::string summary;
  int exit_status = exit_pass;
  std::optional<std::string> svg;

  std::string json_text() const { return document.dump(2) + "\n"; }
};

CommandReport make_classify_report(const EdgeLengths& edges);
CommandReport make_polytope_report(const EdgeLengths& edges,
                                   const std::optional<std::string>& svg_path);
CommandReport make_invariants_report(const EdgeLengths& edges);
CommandReport make_dh_report(long long target, long long min_critical);
CommandReport make_verify_report(std::uint64_t seed, std::size_t samples);

}  // namespace pentaspace
