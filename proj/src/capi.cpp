/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "pentaspace.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "pentaspace/dh.hpp"
#include "pentaspace/error.hpp"
#include "pentaspace/invariants.hpp"
#include "pentaspace/pentagon.hpp"
#include "pentaspace/polygon.hpp"
#include "pentaspace/report.hpp"
#include "pentaspace/svg.hpp"

struct penta_edges {
  pentaspace::EdgeLengths value;
};

struct penta_polytope {
  pentaspace::MomentPolytope value;
};

struct penta_report {
  pentaspace::CommandReport value;
  std::string json;
};

namespace {

thread_local std::string g_last_error;

penta_status status_from(pentaspace::ErrorCode code) {
  using pentaspace::ErrorCode;
  switch (code) {
    case ErrorCode::parse_error: return PENTA_PARSE_ERROR;
    case ErrorCode::zero_denominator: return PENTA_ZERO_DENOMINATOR;
    case ErrorCode::invalid_argument: return PENTA_INVALID_ARGUMENT;
    case ErrorCode::singular_matrix: return PENTA_SINGULAR_MATRIX;
    case ErrorCode::empty_or_unbounded: return PENTA_EMPTY_OR_UNBOUNDED;
    case ErrorCode::non_lattice_polygon: return PENTA_NON_LATTICE_POLYGON;
    case ErrorCode::not_nearly_regular: return PENTA_NOT_NEARLY_REGULAR;
    case ErrorCode::not_toric_generic: return PENTA_NOT_TORIC_GENERIC;
    case ErrorCode::shape_assertion: return PENTA_SHAPE_ASSERTION;
    case ErrorCode::degenerate_samples: return PENTA_DEGENERATE_SAMPLES;
    case ErrorCode::inconsistent_samples: return PENTA_INCONSISTENT_SAMPLES;
    case ErrorCode::bounds_too_small: return PENTA_BOUNDS_TOO_SMALL;
    case ErrorCode::verification_failed: return PENTA_VERIFICATION_FAILED;
    case ErrorCode::overflow: return PENTA_OVERFLOW;
    case ErrorCode::internal_error: return PENTA_INTERNAL_ERROR;
  }
  return PENTA_INTERNAL_ERROR;
}

// Runs fn, translating exceptions into status codes + thread-local message.
template <typename Fn>
penta_status guarded(Fn&& fn) {
  try {
    fn();
    return PENTA_OK;
  } catch (const pentaspace::Error& e) {
    g_last_error = e.what();
    return status_from(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return PENTA_INTERNAL_ERROR;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return PENTA_INTERNAL_ERROR;
  } catch (...) {
    g_last_error = "unknown error";
    return PENTA_INTERNAL_ERROR;
  }
}

char* dup_string(const std::string& text) {
  char* out = static_cast<char*>(std::malloc(text.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, text.c_str(), text.size() + 1);
  return out;
}

penta_status require(bool condition, const char* message) {
  if (condition) return PENTA_OK;
  g_last_error = message;
  return PENTA_INVALID_ARGUMENT;
}

pentaspace::EdgeLengths edges_from_texts(const char* const texts[5]) {
  std::array<std::string, 5> strings;
  for (std::size_t i = 0; i < 5; ++i) {
    if (!texts[i]) {
      throw pentaspace::Error(pentaspace::ErrorCode::invalid_argument,
                              "edge length text must not be null");
    }
    strings[i] = texts[i];
  }
  return pentaspace::EdgeLengths::from_strings(strings);
}

penta_status emit_report(pentaspace::CommandReport report, penta_report** out) {
  auto* wrapper = new penta_report{std::move(report), {}};
  wrapper->json = wrapper->value.json_text();
  *out = wrapper;
  return PENTA_OK;
}

}  // namespace

extern "C" {

const char* penta_status_name(penta_status status) {
  switch (status) {
    case PENTA_OK: return "ok";
    case PENTA_PARSE_ERROR: return "parse_error";
    case PENTA_ZERO_DENOMINATOR: return "zero_denominator";
    case PENTA_INVALID_ARGUMENT: return "invalid_argument";
    case PENTA_SINGULAR_MATRIX: return "singular_matrix";
    case PENTA_EMPTY_OR_UNBOUNDED: return "empty_or_unbounded";
    case PENTA_NON_LATTICE_POLYGON: return "non_lattice_polygon";
    case PENTA_NOT_NEARLY_REGULAR: return "not_nearly_regular";
    case PENTA_NOT_TORIC_GENERIC: return "not_toric_generic";
    case PENTA_SHAPE_ASSERTION: return "shape_assertion";
    case PENTA_DEGENERATE_SAMPLES: return "degenerate_samples";
    case PENTA_INCONSISTENT_SAMPLES: return "inconsistent_samples";
    case PENTA_BOUNDS_TOO_SMALL: return "bounds_too_small";
    case PENTA_VERIFICATION_FAILED: return "verification_failed";
    case PENTA_OVERFLOW: return "overflow";
    case PENTA_INTERNAL_ERROR: return "internal_error";
  }
  return "unknown";
}

const char* penta_last_error(void) { return g_last_error.c_str(); }

const char* penta_version(void) { return "1.0.0"; }

void penta_string_free(char* text) { std::free(text); }

penta_status penta_edges_create(const char* const texts[5], penta_edges** out) {
  penta_status bad = require(texts && out, "texts and out must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] { *out = new penta_edges{edges_from_texts(texts)}; });
}

void penta_edges_free(penta_edges* edges) { delete edges; }

penta_status penta_edges_classify(const penta_edges* edges, int* smooth,
                                  int* nearly_regular, int* toric_generic) {
  penta_status bad = require(edges && smooth && nearly_regular && toric_generic,
                             "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] {
    *smooth = pentaspace::is_smooth(edges->value) ? 1 : 0;
    *nearly_regular = pentaspace::is_nearly_regular(edges->value) ? 1 : 0;
    *toric_generic = pentaspace::is_toric_generic(edges->value) ? 1 : 0;
  });
}

penta_status penta_edges_riemann_roch(const penta_edges* edges, char** out_value) {
  penta_status bad = require(edges && out_value, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] {
    *out_value = dup_string(pentaspace::to_string(pentaspace::rr_closed_form(edges->value)));
  });
}

penta_status penta_edges_symplectic_volume(const penta_edges* edges, char** out_value) {
  penta_status bad = require(edges && out_value, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] {
    *out_value =
        dup_string(pentaspace::to_string(pentaspace::symplectic_volume(edges->value)));
  });
}

penta_status penta_edges_euler_characteristic(const penta_edges* edges, int* out_value) {
  penta_status bad = require(edges && out_value, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] { *out_value = pentaspace::euler_characteristic(edges->value); });
}

penta_status penta_edges_betti_numbers(const penta_edges* edges, int out_values[3]) {
  penta_status bad = require(edges && out_values, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] {
    const auto betti = pentaspace::betti_numbers(edges->value);
    out_values[0] = betti[0];
    out_values[1] = betti[1];
    out_values[2] = betti[2];
  });
}

penta_status penta_edges_moment_polytope(const penta_edges* edges, penta_polytope** out) {
  penta_status bad = require(edges && out, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded(
      [&] { *out = new penta_polytope{pentaspace::moment_polytope(edges->value)}; });
}

void penta_polytope_free(penta_polytope* polytope) { delete polytope; }

penta_status penta_polytope_vertex_count(const penta_polytope* polytope,
                                         size_t* out_count) {
  penta_status bad = require(polytope && out_count, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  *out_count = polytope->value.polygon.size();
  return PENTA_OK;
}

penta_status penta_polytope_vertex(const penta_polytope* polytope, size_t index,
                                   char** out_x, char** out_y) {
  penta_status bad = require(polytope && out_x && out_y, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] {
    const auto& vertices = polytope->value.polygon.vertices();
    if (index >= vertices.size()) {
      throw pentaspace::Error(pentaspace::ErrorCode::invalid_argument,
                              "vertex index out of range");
    }
    char* x = dup_string(pentaspace::to_string(vertices[index].x));
    char* y = nullptr;
    try {
      y = dup_string(pentaspace::to_string(vertices[index].y));
    } catch (...) {
      std::free(x);
      throw;
    }
    *out_x = x;
    *out_y = y;
  });
}

penta_status penta_polytope_area(const penta_polytope* polytope, char** out_value) {
  penta_status bad = require(polytope && out_value, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] {
    *out_value =
        dup_string(pentaspace::to_string(pentaspace::area(polytope->value.polygon)));
  });
}

penta_status penta_polytope_boundary_points(const penta_polytope* polytope,
                                            long long* out_count) {
  penta_status bad = require(polytope && out_count, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] {
    *out_count = pentaspace::to_long_long(
        pentaspace::boundary_lattice_count(polytope->value.polygon));
  });
}

penta_status penta_polytope_lattice_points(const penta_polytope* polytope,
                                           long long* out_count) {
  penta_status bad = require(polytope && out_count, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] {
    *out_count =
        pentaspace::to_long_long(pentaspace::lattice_count_brute(polytope->value.polygon));
  });
}

penta_status penta_polytope_pick_count(const penta_polytope* polytope,
                                       long long* out_count) {
  penta_status bad = require(polytope && out_count, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] {
    *out_count = pentaspace::to_long_long(pentaspace::pick_count(polytope->value.polygon));
  });
}

penta_status penta_polytope_svg(const penta_polytope* polytope, char** out_svg) {
  penta_status bad = require(polytope && out_svg, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded(
      [&] { *out_svg = dup_string(pentaspace::render_polytope_svg(polytope->value)); });
}

penta_status penta_report_classify(const char* const edges[5], penta_report** out) {
  penta_status bad = require(edges && out, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] {
    emit_report(pentaspace::make_classify_report(edges_from_texts(edges)), out);
  });
}

penta_status penta_report_polytope(const char* const edges[5], const char* svg_path,
                                   penta_report** out) {
  penta_status bad = require(edges && out, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] {
    std::optional<std::string> path;
    if (svg_path) path = svg_path;
    emit_report(pentaspace::make_polytope_report(edges_from_texts(edges), path), out);
  });
}

penta_status penta_report_invariants(const char* const edges[5], penta_report** out) {
  penta_status bad = require(edges && out, "arguments must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] {
    emit_report(pentaspace::make_invariants_report(edges_from_texts(edges)), out);
  });
}

penta_status penta_report_dh(long long target, long long min_critical,
                             penta_report** out) {
  penta_status bad = require(out != nullptr, "out must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] { emit_report(pentaspace::make_dh_report(target, min_critical), out); });
}

penta_status penta_report_verify(unsigned long long seed, size_t samples,
                                 penta_report** out) {
  penta_status bad = require(out != nullptr, "out must not be null");
  if (bad != PENTA_OK) return bad;
  return guarded([&] { emit_report(pentaspace::make_verify_report(seed, samples), out); });
}

const char* penta_report_json(const penta_report* report) {
  return report ? report->json.c_str() : nullptr;
}

const char* penta_report_summary(const penta_report* report) {
  return report ? report->value.summary.c_str() : nullptr;
}

const char* penta_report_svg(const penta_report* report) {
  if (!report || !report->value.svg) return nullptr;
  return report->value.svg->c_str();
}

int penta_report_exit_status(const penta_report* report) {
  return report ? report->value.exit_status : pentaspace::exit_input_error;
}

void penta_report_free(penta_report* report) { delete report; }

}  // extern "C"
