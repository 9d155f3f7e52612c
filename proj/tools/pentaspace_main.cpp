/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include <array>
#include <cstdint>
#include <fstream>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pentaspace.h"

namespace {

// JSON report to stdout, summary to stderr, optional SVG to disk; the exit
// status comes from the report (0 pass, 2 verification failure), or is 1
// when the report could not be produced at all.
int run_report(const std::string& command,
               const std::function<penta_status(penta_report**)>& make,
               const std::string& svg_path) {
  penta_report* report = nullptr;
  const penta_status status = make(&report);
  if (status != PENTA_OK) {
    nlohmann::ordered_json doc;
    doc["schema_version"] = 1;
    doc["command"] = command;
    doc["error"]["status"] = penta_status_name(status);
    doc["error"]["message"] = penta_last_error();
    doc["exit_status"] = 1;
    std::cout << doc.dump(2) << "\n";
    std::cerr << "error: " << penta_last_error() << "\n";
    return 1;
  }

  std::cout << penta_report_json(report);
  std::cerr << penta_report_summary(report) << "\n";

  int exit_status = penta_report_exit_status(report);
  if (const char* svg = penta_report_svg(report); svg && !svg_path.empty()) {
    std::ofstream out(svg_path, std::ios::binary);
    out << svg;
    out.flush();
    if (!out) {
      std::cerr << "error: could not write SVG to " << svg_path << "\n";
      exit_status = 1;
    } else {
      std::cerr << "SVG written to " << svg_path << "\n";
    }
  }
  penta_report_free(report);
  return exit_status;
}

std::array<const char*, 5> as_c_strings(const std::vector<std::string>& edges) {
  std::array<const char*, 5> texts{};
  for (std::size_t i = 0; i < 5; ++i) texts[i] = edges[i].c_str();
  return texts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact invariants of pentagon spaces: moment polytopes, lattice "
               "counts, and circle-action obstructions"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", penta_version());
  app.require_subcommand(1);

  std::vector<std::string> edges;
  std::string svg_path;
  long long target = 6;
  long long min_critical = 3;
  std::uint64_t seed = 1;
  std::size_t samples = 30;

  CLI::App* classify =
      app.add_subcommand("classify", "Evaluate the smooth, nearly-regular and "
                                     "toric-generic predicates");
  classify->add_option("edges", edges, "five positive edge lengths")
      ->required()
      ->expected(5);

  CLI::App* polytope =
      app.add_subcommand("polytope", "Moment polytope: vertices, area and exact "
                                     "lattice counts");
  polytope->add_option("edges", edges, "five positive edge lengths")
      ->required()
      ->expected(5);
  polytope->add_option("--svg", svg_path, "write an SVG rendering to this path");

  CLI::App* invariants =
      app.add_subcommand("invariants", "Closed-form count, symplectic volume, Euler "
                                       "characteristic and Betti numbers");
  invariants->add_option("edges", edges, "five positive edge lengths")
      ->required()
      ->expected(5);

  CLI::App* dh = app.add_subcommand(
      "dh", "Enumerate concave integral profiles with a given enclosed count and "
            "apply the isolated-extremum slope filter");
  dh->add_option("--target", target, "required enclosed lattice-point count")
      ->capture_default_str();
  dh->add_option("--min-critical", min_critical,
                 "minimum number of critical values")
      ->capture_default_str();

  CLI::App* verify = app.add_subcommand(
      "verify", "Full verification: polynomial fit of lattice counts plus the "
                "no-circle-action profile search");
  verify->add_option("--seed", seed, "sampling seed")->capture_default_str();
  verify->add_option("--samples", samples, "number of sampled tuples (>= 21)")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  if (classify->parsed()) {
    return run_report("classify",
                      [&](penta_report** out) {
                        return penta_report_classify(as_c_strings(edges).data(), out);
                      },
                      "");
  }
  if (polytope->parsed()) {
    return run_report("polytope",
                      [&](penta_report** out) {
                        return penta_report_polytope(
                            as_c_strings(edges).data(),
                            svg_path.empty() ? nullptr : svg_path.c_str(), out);
                      },
                      svg_path);
  }
  if (invariants->parsed()) {
    return run_report("invariants",
                      [&](penta_report** out) {
                        return penta_report_invariants(as_c_strings(edges).data(), out);
                      },
                      "");
  }
  if (dh->parsed()) {
    return run_report("dh",
                      [&](penta_report** out) {
                        return penta_report_dh(target, min_critical, out);
                      },
                      "");
  }
  if (verify->parsed()) {
    return run_report("verify",
                      [&](penta_report** out) {
                        return penta_report_verify(seed, samples, out);
                      },
                      "");
  }
  return 1;
}
