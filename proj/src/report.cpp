/*
 * (C) Copyright 2026 pentaspace developers
 *
 * This software is licensed under the terms of the Apache Licence Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "pentaspace/report.hpp"

#include <sstream>

#include "pentaspace/dh.hpp"
#include "pentaspace/error.hpp"
#include "pentaspace/invariants.hpp"
#include "pentaspace/polygon.hpp"
#include "pentaspace/svg.hpp"

namespace pentaspace {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json rational_json(const Rational& r) { return to_string(r); }

ordered_json edges_json(const EdgeLengths& edges) {
  ordered_json arr = ordered_json::array();
  for (const Rational& v : edges.values()) arr.push_back(to_string(v));
  return arr;
}

ordered_json vertices_json(const ConvexLatticePolygon& polygon) {
  ordered_json arr = ordered_json::array();
  for (const Vec2Q& v : polygon.vertices()) {
    arr.push_back(ordered_json::array({to_string(v.x), to_string(v.y)}));
  }
  return arr;
}

ordered_json profile_json(const DHProfile& p) {
  ordered_json obj;
  obj["values"] = p.values();
  obj["support_length"] = p.support_length();
  obj["slopes"] = slopes(p);
  obj["critical_values"] = critical_values(p);
  obj["enclosed_lattice_points"] = enclosed_lattice_points(p);
  obj["isolated_max"] = p.values().back() == 0;
  return obj;
}

ordered_json profiles_json(const std::vector<DHProfile>& ps) {
  ordered_json arr = ordered_json::array();
  for (const DHProfile& p : ps) arr.push_back(profile_json(p));
  return arr;
}

void add_provenance(ordered_json& list, const std::string& claim,
                    const std::string& status, const std::string& citation) {
  ordered_json entry;
  entry["claim"] = claim;
  entry["status"] = status;
  entry["citation"] = citation;
  list.push_back(std::move(entry));
}

ordered_json report_skeleton(const std::string& command) {
  ordered_json doc;
  doc["schema_version"] = report_schema_version;
  doc["command"] = command;
  return doc;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

}  // namespace

CommandReport make_classify_report(const EdgeLengths& edges) {
  const bool smooth = is_smooth(edges);
  const bool nearly_regular = is_nearly_regular(edges);
  const bool toric_generic = is_toric_generic(edges);

  ordered_json doc = report_skeleton("classify");
  doc["inputs"]["edges"] = edges_json(edges);
  doc["results"]["smooth"] = smooth;
  doc["results"]["nearly_regular"] = nearly_regular;
  doc["results"]["toric_generic"] = toric_generic;
  doc["provenance"] = ordered_json::array();
  doc["exit_status"] = exit_pass;

  std::ostringstream summary;
  summary << "smooth=" << yes_no(smooth) << " nearly-regular=" << yes_no(nearly_regular)
          << " toric-generic=" << yes_no(toric_generic);
  return CommandReport{std::move(doc), summary.str(), exit_pass, std::nullopt};
}

CommandReport make_polytope_report(const EdgeLengths& edges,
                                   const std::optional<std::string>& svg_path) {
  const MomentPolytope mp = moment_polytope(edges);
  const Rational poly_area = area(mp.polygon);
  const Int boundary = boundary_lattice_count(mp.polygon);
  const Int brute = lattice_count_brute(mp.polygon);
  const Int pick = pick_count(mp.polygon);
  const Rational volume = symplectic_volume(edges);

  ordered_json doc = report_skeleton("polytope");
  doc["inputs"]["edges"] = edges_json(edges);
  if (svg_path) doc["inputs"]["svg"] = *svg_path;

  ordered_json& results = doc["results"];
  results["vertex_count"] = mp.polygon.size();
  results["vertices"] = vertices_json(mp.polygon);
  ordered_json cuts = ordered_json::array();
  for (CutCorner c : mp.cut_corners) cuts.push_back(std::string(cut_corner_name(c)));
  results["cut_corners"] = std::move(cuts);
  results["swapped"]["a1_a2"] = mp.swapped_a1_a2;
  results["swapped"]["a4_a5"] = mp.swapped_a4_a5;
  results["rectangle"]["d1"] =
      ordered_json::array({to_string(mp.d1_min), to_string(mp.d1_max)});
  results["rectangle"]["d2"] =
      ordered_json::array({to_string(mp.d2_min), to_string(mp.d2_max)});
  results["area"] = rational_json(poly_area);
  results["boundary_lattice_points"] = to_long_long(boundary);
  results["lattice_points"] = to_long_long(brute);
  results["pick_count"] = to_long_long(pick);

  ordered_json provenance = ordered_json::array();
  add_provenance(provenance,
                 "moment image is the bounding rectangle with three corners cut",
                 mp.polygon.size() == 7 && mp.cut_corners.size() == 3 ? "pass" : "fail",
                 "bending-flow-moment-image");
  add_provenance(provenance, "column-scan lattice count agrees with Pick's formula",
                 brute == pick ? "pass" : "fail", "pick");
  add_provenance(provenance, "polytope area equals the closed-form symplectic volume",
                 poly_area == volume ? "pass" : "fail", "toric-volume");
  doc["provenance"] = std::move(provenance);

  const bool all_pass = mp.polygon.size() == 7 && mp.cut_corners.size() == 3 &&
                        brute == pick && poly_area == volume;
  const int status = all_pass ? exit_pass : exit_verification_failure;
  doc["exit_status"] = status;

  std::ostringstream summary;
  summary << mp.polygon.size() << " vertices, area " << to_string(poly_area)
          << ", boundary " << boundary << ", lattice points " << brute << " (Pick: "
          << pick << ")";

  std::optional<std::string> svg;
  if (svg_path) svg = render_polytope_svg(mp);
  return CommandReport{std::move(doc), summary.str(), status, std::move(svg)};
}

CommandReport make_invariants_report(const EdgeLengths& edges) {
  const Rational rr = rr_closed_form(edges);
  const Rational volume = symplectic_volume(edges);
  const bool nearly_regular = is_nearly_regular(edges);
  const bool toric_generic = is_toric_generic(edges);

  ordered_json doc = report_skeleton("invariants");
  doc["inputs"]["edges"] = edges_json(edges);
  ordered_json& results = doc["results"];
  results["rr"] = rational_json(rr);
  results["volume"] = rational_json(volume);

  ordered_json provenance = ordered_json::array();
  bool verification_ok = true;

  if (nearly_regular) {
    results["euler"] = euler_characteristic(edges);
    const auto betti = betti_numbers(edges);
    results["betti"] = ordered_json::array({betti[0], betti[1], betti[2]});

    if (toric_generic) {
      const MomentPolytope mp = moment_polytope(edges);
      const bool area_matches = area(mp.polygon) == volume;
      verification_ok = verification_ok && area_matches;
      add_provenance(provenance,
                     "polytope area equals the closed-form symplectic volume",
                     area_matches ? "pass" : "fail", "toric-volume");
      add_provenance(provenance,
                     "Euler characteristic counted as polytope vertices",
                     mp.polygon.size() == 7 ? "pass" : "fail", "toric-fixed-points");
      if (edges.is_integral()) {
        const bool counts_match = Rational(lattice_count_brute(mp.polygon)) == rr;
        verification_ok = verification_ok && counts_match;
        add_provenance(provenance,
                       "closed form equals the polytope lattice-point count",
                       counts_match ? "pass" : "fail", "delzant-lattice-count");
      }
    } else {
      add_provenance(provenance,
                     "Euler characteristic and Betti numbers carried over from a "
                     "toric-generic representative (all nearly-regular spaces are "
                     "diffeomorphic)",
                     "assumed", "diffeo-invariance");
    }
  } else {
    results["note"] = "not nearly-regular: topological invariants omitted; rr is the "
                      "polynomial value only";
  }
  doc["provenance"] = std::move(provenance);
  const int status = verification_ok ? exit_pass : exit_verification_failure;
  doc["exit_status"] = status;

  std::ostringstream summary;
  summary << "rr=" << to_string(rr) << " volume=" << to_string(volume);
  if (nearly_regular) {
    const auto betti = betti_numbers(edges);
    summary << " euler=" << euler_characteristic(edges) << " betti=[" << betti[0] << ","
            << betti[1] << "," << betti[2] << "]";
  } else {
    summary << " (not nearly-regular)";
  }
  return CommandReport{std::move(doc), summary.str(), status, std::nullopt};
}

CommandReport make_dh_report(long long target, long long min_critical) {
  if (target < 1) {
    throw Error(ErrorCode::invalid_argument, "target must be >= 1");
  }
  if (min_critical < 2) {
    throw Error(ErrorCode::invalid_argument,
                "min-critical must be >= 2 (endpoints are always critical)");
  }
  DHConstraints constraints{target, min_critical, target, target};
  const std::vector<DHProfile> pre = enumerate_dh(constraints);
  const std::vector<DHProfile> post = karshon_filter(pre);

  ordered_json doc = report_skeleton("dh");
  doc["inputs"]["target"] = target;
  doc["inputs"]["min_critical"] = min_critical;
  ordered_json& results = doc["results"];
  results["bounds"]["max_support"] = constraints.max_support;
  results["bounds"]["max_value"] = constraints.max_value;
  results["pre_filter_count"] = pre.size();
  results["pre_filter"] = profiles_json(pre);
  results["post_filter_count"] = post.size();
  results["post_filter"] = profiles_json(post);

  ordered_json provenance = ordered_json::array();
  add_provenance(provenance,
                 "profile breakpoints and slopes range over integers only", "assumed",
                 "karshon-integral-slopes");
  add_provenance(provenance,
                 "enumeration bounds cover every profile with the target count",
                 "pass", "column-lower-bound");
  add_provenance(provenance,
                 "an isolated extremum forces final slope of absolute value <= 1",
                 "assumed", "karshon-isolated-fixed-point-slope");
  doc["provenance"] = std::move(provenance);
  doc["exit_status"] = exit_pass;

  std::ostringstream summary;
  summary << "target " << target << ", >=" << min_critical << " critical values: "
          << pre.size() << " candidate" << (pre.size() == 1 ? "" : "s")
          << " before slope filter, " << post.size() << " after";
  return CommandReport{std::move(doc), summary.str(), exit_pass, std::nullopt};
}

CommandReport make_verify_report(std::uint64_t seed, std::size_t samples) {
  const RRExtensionResult fit = verify_rr_extension(seed, samples);
  const CircleActionVerification circle = verify_no_circle_action();

  ordered_json doc = report_skeleton("verify");
  doc["inputs"]["seed"] = seed;
  doc["inputs"]["samples"] = samples;

  ordered_json& results = doc["results"];
  ordered_json& extension = results["rr_extension"];
  ordered_json sample_list = ordered_json::array();
  for (const RRSample& s : fit.samples) {
    ordered_json row;
    row["edges"] = edges_json(s.edges);
    row["lattice_points"] = to_long_long(s.count);
    sample_list.push_back(std::move(row));
  }
  extension["samples"] = std::move(sample_list);
  const auto names = RRPoly::monomial_names();
  const auto& coeffs = fit.fitted.coefficients();
  ordered_json fitted;
  for (std::size_t k = 0; k < RRPoly::coefficient_count; ++k) {
    fitted[names[k]] = to_string(coeffs[k]);
  }
  extension["fitted_coefficients"] = std::move(fitted);
  extension["coefficients_match_closed_form"] = fit.coefficients_match;
  extension["quadratic_part_matches_volume"] = fit.quadratic_matches_volume;
  extension["value_at_regular"] = rational_json(fit.value_at_regular);
  extension["passed"] = fit.passed;

  ordered_json& action = results["no_circle_action"];
  action["target"] = circle.target;
  action["rr_regular"] = rational_json(circle.rr_regular);
  action["euler_regular"] = circle.euler_regular;
  action["count_exceeds_rr"] = circle.count_exceeds_rr;
  action["pre_filter"] = profiles_json(circle.pre_filter);
  action["post_filter"] = profiles_json(circle.post_filter);
  action["passed"] = circle.passed;

  const bool passed = fit.passed && circle.passed;

  ordered_json provenance = ordered_json::array();
  add_provenance(provenance, "closed-form count at the regular tuple equals 6",
                 circle.rr_regular == 6 ? "pass" : "fail", "regular-count-six");
  add_provenance(provenance,
                 "degree-2 interpolation of lattice counts matches the closed form "
                 "coefficient by coefficient",
                 fit.coefficients_match ? "pass" : "fail", "polynomial-determination");
  add_provenance(provenance,
                 "quadratic part of the fit equals the volume polynomial",
                 fit.quadratic_matches_volume ? "pass" : "fail", "volume-leading-term");
  add_provenance(provenance,
                 "a circle action needs at least as many fixed points as the Euler "
                 "characteristic, exceeding the available lattice points",
                 circle.count_exceeds_rr ? "pass" : "fail",
                 "fixed-point-count-vs-lattice-points");
  add_provenance(provenance,
                 "every candidate profile is eliminated by the isolated-extremum "
                 "slope bound",
                 circle.post_filter.empty() ? "pass" : "fail",
                 "karshon-isolated-fixed-point-slope");
  add_provenance(provenance,
                 "profile breakpoints and slopes range over integers only", "assumed",
                 "karshon-integral-slopes");
  add_provenance(provenance,
                 "existence of the symplectic structures and the diffeomorphism "
                 "classification are imported, not re-derived",
                 "assumed", "imported-facts");
  doc["provenance"] = std::move(provenance);

  const int status = passed ? exit_pass : exit_verification_failure;
  doc["exit_status"] = status;

  std::ostringstream summary;
  if (passed) {
    summary << "PASS: fit matches the closed form; count at the regular tuple = "
            << to_string(fit.value_at_regular) << "; " << circle.pre_filter.size()
            << " candidate profile(s), none survive the slope filter";
  } else {
    summary << "FAIL: fit_match=" << yes_no(fit.coefficients_match)
            << " volume_match=" << yes_no(fit.quadratic_matches_volume)
            << " value_at_regular=" << to_string(fit.value_at_regular)
            << " surviving_profiles=" << circle.post_filter.size();
  }
  return CommandReport{std::move(doc), summary.str(), status, std::nullopt};
}

}  // namespace pentaspace
