#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#ifndef PENTASPACE_CLI_PATH
#error "PENTASPACE_CLI_PATH must point at the CLI binary"
#endif

namespace {

struct RunResult {
  int exit_code;
  std::string output;  // standard output only
};

RunResult run_cli(const std::string& args) {
  const std::string command =
      std::string(PENTASPACE_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(command.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string output;
  char buffer[4096];
  size_t got;
  while ((got = fread(buffer, 1, sizeof(buffer), pipe)) > 0) output.append(buffer, got);
  const int raw = pclose(pipe);
  REQUIRE(raw != -1);
  REQUIRE(WIFEXITED(raw));
  return RunResult{WEXITSTATUS(raw), std::move(output)};
}

nlohmann::json parse(const RunResult& result) {
  return nlohmann::json::parse(result.output);
}

}  // namespace

TEST_CASE("classify command") {
  const RunResult all = run_cli("classify 3 2 3 3 2");
  CHECK(all.exit_code == 0);
  const auto doc = parse(all);
  CHECK(doc.at("results").at("smooth") == true);
  CHECK(doc.at("results").at("nearly_regular") == true);
  CHECK(doc.at("results").at("toric_generic") == true);

  const auto regular = parse(run_cli("classify 1 1 1 1 1"));
  CHECK(regular.at("results").at("toric_generic") == false);
  const auto wall = parse(run_cli("classify 1 1 1 1 2"));
  CHECK(wall.at("results").at("smooth") == false);
}

TEST_CASE("invariants command reports the regular-count value") {
  const RunResult result = run_cli("invariants 1 1 1 1 1");
  CHECK(result.exit_code == 0);
  const auto doc = parse(result);
  CHECK(doc.at("results").at("rr") == "6");
  CHECK(doc.at("results").at("volume") == "5/2");
  CHECK(doc.at("results").at("euler") == 7);
  CHECK(doc.at("results").at("betti") == nlohmann::json::array({1, 5, 1}));
}

TEST_CASE("polytope command with SVG output") {
  const std::string svg_path = "cli_test_polytope.svg";
  std::remove(svg_path.c_str());
  const RunResult result = run_cli("polytope 3 2 3 3 2 --svg " + svg_path);
  CHECK(result.exit_code == 0);
  const auto doc = parse(result);
  CHECK(doc.at("results").at("vertex_count") == 7);
  CHECK(doc.at("results").at("area") == "29/2");
  CHECK(doc.at("results").at("lattice_points") == 22);

  std::ifstream svg_file(svg_path);
  REQUIRE(svg_file.good());
  std::stringstream svg;
  svg << svg_file.rdbuf();
  CHECK(svg.str().find("<svg") != std::string::npos);
  CHECK(svg.str().find("</svg>") != std::string::npos);
  std::remove(svg_path.c_str());
}

TEST_CASE("polytope command rejects non-generic input with exit 1") {
  const RunResult result = run_cli("polytope 1 1 1 1 1");
  CHECK(result.exit_code == 1);
  const auto doc = parse(result);
  CHECK(doc.at("error").at("status") == "not_toric_generic");
  CHECK(doc.at("exit_status") == 1);
}

TEST_CASE("dh command") {
  const RunResult result = run_cli("dh --target 6 --min-critical 3");
  CHECK(result.exit_code == 0);
  const auto doc = parse(result);
  CHECK(doc.at("results").at("pre_filter_count") == 1);
  CHECK(doc.at("results").at("pre_filter")[0].at("values") ==
        nlohmann::json::array({1, 2, 0}));
  CHECK(doc.at("results").at("post_filter_count") == 0);

  CHECK(run_cli("dh --target 0 --min-critical 3").exit_code == 1);
  CHECK(run_cli("dh --target 6 --min-critical 1").exit_code == 1);

  const auto negative_control = parse(run_cli("dh --target 7 --min-critical 3"));
  CHECK(negative_control.at("results").at("post_filter_count").get<int>() > 0);
}

TEST_CASE("verify command passes and is byte-deterministic") {
  const RunResult first = run_cli("verify --seed 42 --samples 25");
  CHECK(first.exit_code == 0);
  const RunResult second = run_cli("verify --seed 42 --samples 25");
  CHECK(second.exit_code == 0);
  CHECK(first.output == second.output);

  const auto doc = parse(first);
  CHECK(doc.at("results").at("rr_extension").at("passed") == true);
  CHECK(doc.at("results").at("no_circle_action").at("passed") == true);
  CHECK(doc.at("exit_status") == 0);
}

TEST_CASE("verify command with too few samples exits 1") {
  const RunResult result = run_cli("verify --samples 5");
  CHECK(result.exit_code == 1);
  const auto doc = parse(result);
  CHECK(doc.at("error").at("status") == "invalid_argument");
}

TEST_CASE("usage errors exit 1") {
  CHECK(run_cli("classify 1 2 3").exit_code == 1);
  CHECK(run_cli("no-such-command").exit_code == 1);
  CHECK(run_cli("").exit_code == 1);
}

TEST_CASE("version flag") {
  const RunResult result = run_cli("--version");
  CHECK(result.exit_code == 0);
  CHECK(result.output.find("1.0.0") != std::string::npos);
}
