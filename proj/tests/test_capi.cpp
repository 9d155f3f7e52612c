#include <doctest.h>

#include <array>
#include <cstring>
#include <string>

#include <json.hpp>

#include "pentaspace.h"

namespace {

constexpr std::array<const char*, 5> kSample{"3", "2", "3", "3", "2"};
constexpr std::array<const char*, 5> kRegular{"1", "1", "1", "1", "1"};

struct EdgesHandle {
  penta_edges* ptr = nullptr;
  explicit EdgesHandle(const std::array<const char*, 5>& texts) {
    REQUIRE(penta_edges_create(texts.data(), &ptr) == PENTA_OK);
  }
  ~EdgesHandle() { penta_edges_free(ptr); }
};

std::string take_string(char* text) {
  REQUIRE(text != nullptr);
  std::string out(text);
  penta_string_free(text);
  return out;
}

}  // namespace

TEST_CASE("version and status names") {
  CHECK(std::string(penta_version()) == "1.0.0");
  CHECK(std::string(penta_status_name(PENTA_OK)) == "ok");
  CHECK(std::string(penta_status_name(PENTA_NOT_TORIC_GENERIC)) == "not_toric_generic");
  CHECK(std::string(penta_status_name(PENTA_BOUNDS_TOO_SMALL)) == "bounds_too_small");
}

TEST_CASE("edge creation and classification") {
  EdgesHandle edges(kSample);
  int smooth = -1, nearly_regular = -1, toric_generic = -1;
  REQUIRE(penta_edges_classify(edges.ptr, &smooth, &nearly_regular, &toric_generic) ==
          PENTA_OK);
  CHECK(smooth == 1);
  CHECK(nearly_regular == 1);
  CHECK(toric_generic == 1);

  penta_edges* bad = nullptr;
  const std::array<const char*, 5> junk{"3", "x", "3", "3", "2"};
  CHECK(penta_edges_create(junk.data(), &bad) == PENTA_PARSE_ERROR);
  CHECK(std::strlen(penta_last_error()) > 0);
  const std::array<const char*, 5> negative{"3", "-2", "3", "3", "2"};
  CHECK(penta_edges_create(negative.data(), &bad) == PENTA_INVALID_ARGUMENT);
  CHECK(penta_edges_create(nullptr, &bad) == PENTA_INVALID_ARGUMENT);
}

TEST_CASE("scalar invariants through the C API") {
  EdgesHandle edges(kSample);
  char* value = nullptr;
  REQUIRE(penta_edges_riemann_roch(edges.ptr, &value) == PENTA_OK);
  CHECK(take_string(value) == "22");
  REQUIRE(penta_edges_symplectic_volume(edges.ptr, &value) == PENTA_OK);
  CHECK(take_string(value) == "29/2");
  int euler = 0;
  REQUIRE(penta_edges_euler_characteristic(edges.ptr, &euler) == PENTA_OK);
  CHECK(euler == 7);
  int betti[3] = {0, 0, 0};
  REQUIRE(penta_edges_betti_numbers(edges.ptr, betti) == PENTA_OK);
  CHECK(betti[0] == 1);
  CHECK(betti[1] == 5);
  CHECK(betti[2] == 1);

  EdgesHandle regular(kRegular);
  REQUIRE(penta_edges_riemann_roch(regular.ptr, &value) == PENTA_OK);
  CHECK(take_string(value) == "6");
}

TEST_CASE("polytope handle") {
  EdgesHandle edges(kSample);
  penta_polytope* polytope = nullptr;
  REQUIRE(penta_edges_moment_polytope(edges.ptr, &polytope) == PENTA_OK);

  size_t vertex_count = 0;
  REQUIRE(penta_polytope_vertex_count(polytope, &vertex_count) == PENTA_OK);
  CHECK(vertex_count == 7);

  char* x = nullptr;
  char* y = nullptr;
  REQUIRE(penta_polytope_vertex(polytope, 0, &x, &y) == PENTA_OK);
  CHECK(take_string(x) == "1");
  CHECK(take_string(y) == "2");
  CHECK(penta_polytope_vertex(polytope, 7, &x, &y) == PENTA_INVALID_ARGUMENT);

  char* area_text = nullptr;
  REQUIRE(penta_polytope_area(polytope, &area_text) == PENTA_OK);
  CHECK(take_string(area_text) == "29/2");

  long long boundary = 0, lattice = 0, pick = 0;
  REQUIRE(penta_polytope_boundary_points(polytope, &boundary) == PENTA_OK);
  REQUIRE(penta_polytope_lattice_points(polytope, &lattice) == PENTA_OK);
  REQUIRE(penta_polytope_pick_count(polytope, &pick) == PENTA_OK);
  CHECK(boundary == 13);
  CHECK(lattice == 22);
  CHECK(pick == 22);

  char* svg = nullptr;
  REQUIRE(penta_polytope_svg(polytope, &svg) == PENTA_OK);
  const std::string svg_text = take_string(svg);
  CHECK(svg_text.find("<svg") != std::string::npos);
  CHECK(svg_text.find("<path") != std::string::npos);

  penta_polytope_free(polytope);

  EdgesHandle regular(kRegular);
  penta_polytope* none = nullptr;
  CHECK(penta_edges_moment_polytope(regular.ptr, &none) == PENTA_NOT_TORIC_GENERIC);
}

TEST_CASE("report objects") {
  penta_report* report = nullptr;
  REQUIRE(penta_report_invariants(kRegular.data(), &report) == PENTA_OK);
  CHECK(penta_report_exit_status(report) == 0);
  const auto doc = nlohmann::json::parse(std::string(penta_report_json(report)));
  CHECK(doc.at("results").at("rr") == "6");
  CHECK(doc.at("results").at("euler") == 7);
  CHECK(std::strlen(penta_report_summary(report)) > 0);
  CHECK(penta_report_svg(report) == nullptr);
  penta_report_free(report);

  REQUIRE(penta_report_dh(6, 3, &report) == PENTA_OK);
  const auto dh_doc = nlohmann::json::parse(std::string(penta_report_json(report)));
  CHECK(dh_doc.at("results").at("pre_filter_count") == 1);
  CHECK(dh_doc.at("results").at("post_filter_count") == 0);
  penta_report_free(report);

  REQUIRE(penta_report_polytope(kSample.data(), "out.svg", &report) == PENTA_OK);
  CHECK(penta_report_svg(report) != nullptr);
  penta_report_free(report);

  REQUIRE(penta_report_classify(kSample.data(), &report) == PENTA_OK);
  penta_report_free(report);

  CHECK(penta_report_dh(6, 0, &report) == PENTA_INVALID_ARGUMENT);
  CHECK(penta_report_polytope(kRegular.data(), nullptr, &report) ==
        PENTA_NOT_TORIC_GENERIC);
  CHECK(penta_report_verify(1, 5, &report) == PENTA_INVALID_ARGUMENT);
}

TEST_CASE("verify report through the C API") {
  penta_report* report = nullptr;
  REQUIRE(penta_report_verify(3, 24, &report) == PENTA_OK);
  CHECK(penta_report_exit_status(report) == 0);
  const auto doc = nlohmann::json::parse(std::string(penta_report_json(report)));
  CHECK(doc.at("results").at("rr_extension").at("passed") == true);
  CHECK(doc.at("results").at("no_circle_action").at("passed") == true);
  penta_report_free(report);
}
