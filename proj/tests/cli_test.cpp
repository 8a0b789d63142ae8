// End-to-end checks of the command-line tool: exit-code contract, report
// files, and output determinism. Each case spawns the real binary.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "kannan/document.hpp"

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

fs::path scratch_dir() {
  const fs::path dir = fs::temp_directory_path() / "kannan_cli_test";
  fs::create_directories(dir);
  return dir;
}

std::string fixture(const char* name) {
  return std::string(KANNAN_FIXTURES_DIR) + "/" + name;
}

RunResult run_cli(const std::string& args) {
  static int counter = 0;
  const fs::path out_path =
      scratch_dir() / ("out_" + std::to_string(counter++) + ".txt");
  const std::string command = std::string(KANNAN_CLI_BIN) + " " + args +
                              " > " + out_path.string() + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream in(out_path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  result.output = buffer.str();
  return result;
}

std::string write_scratch(const std::string& name, const std::string& text) {
  const fs::path path = scratch_dir() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path.string();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool contains(const std::string& haystack, const std::string& needle) {
  return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_CASE("validate: exit codes and witnesses") {
  const RunResult ok = run_cli("validate " + fixture("example26.space"));
  CHECK(ok.exit_code == 0);
  CHECK(contains(ok.output, "generalized axioms: ok"));

  // Same table declared metric: rejected with the exact triangle witness.
  std::string metric_claim =
      read_file(fixture("example26.space"));
  const auto pos = metric_claim.find("generalized");
  REQUIRE(pos != std::string::npos);
  metric_claim.replace(pos, std::string("generalized").size(), "metric");
  const std::string metric_path =
      write_scratch("example26_metric.space", metric_claim);
  const RunResult rejected = run_cli("validate " + metric_path);
  CHECK(rejected.exit_code == 1);
  CHECK(contains(rejected.output,
                 "triangle: d(1,2) = 3 > d(1,3) + d(3,2) = 2"));

  const std::string incomplete = write_scratch("incomplete.space", R"({
    "kind": "metric",
    "points": ["a", "b", "c"],
    "distances": [["a", "b", "1"]]
  })");
  CHECK(run_cli("validate " + incomplete).exit_code == 2);
  CHECK(run_cli("validate /no/such/file.space").exit_code == 2);
  CHECK(run_cli("validate").exit_code == 2);
  CHECK(run_cli("frobnicate x").exit_code == 2);
}

TEST_CASE("analyze: verdicts, exit codes and the identity-aux equivalence") {
  const fs::path report_path = scratch_dir() / "analyze.json";
  const RunResult with_aux =
      run_cli("analyze " + fixture("example26.space") +
              " --map S --aux T --report " + report_path.string());
  CHECK(with_aux.exit_code == 0);
  CHECK(contains(with_aux.output, "theorem (generalized): applies"));

  const auto report = kannan::report::parse_report(read_file(
      report_path.string()));
  REQUIRE(report.analysis);
  CHECK(report.analysis->classical.lambda_min == "1");
  CHECK_FALSE(report.analysis->classical.feasible_below_half);
  CHECK(report.analysis->extended.lambda_min == "1/4");
  CHECK(report.analysis->extended.argmax_pair ==
        std::vector<std::string>{"1", "2"});
  CHECK(report.analysis->generalized_theorem.applies);
  CHECK_FALSE(report.analysis->metric_theorem.applies);
  REQUIRE(report.fixed_points);
  CHECK(report.fixed_points->size() == 1);
  CHECK(report.fixed_points->front().point == "2");
  CHECK(report.exit_code == 0);

  // Without an auxiliary the classical condition fails and no theorem
  // applies.
  const RunResult classical =
      run_cli("analyze " + fixture("example26.space") + " --map S");
  CHECK(classical.exit_code == 1);

  CHECK(run_cli("analyze " + fixture("example26.space") + " --map Q")
            .exit_code == 2);

  // An explicit identity auxiliary must print the same constants as no
  // auxiliary at all.
  std::string with_identity = read_file(fixture("example26.space"));
  const auto maps_pos = with_identity.find("\"T\":");
  REQUIRE(maps_pos != std::string::npos);
  with_identity.insert(maps_pos,
                       "\"I\": {\"1\": \"1\", \"2\": \"2\", \"3\": \"3\", "
                       "\"4\": \"4\"},\n    ");
  const std::string identity_path =
      write_scratch("example26_identity.space", with_identity);

  const fs::path plain_report = scratch_dir() / "plain.json";
  const fs::path identity_report = scratch_dir() / "identity.json";
  run_cli("analyze " + identity_path + " --map S --report " +
          plain_report.string());
  run_cli("analyze " + identity_path + " --map S --aux I --report " +
          identity_report.string());
  const auto plain = kannan::report::parse_report(read_file(
      plain_report.string()));
  const auto with_id = kannan::report::parse_report(read_file(
      identity_report.string()));
  REQUIRE(plain.analysis);
  REQUIRE(with_id.analysis);
  CHECK(plain.analysis->classical == with_id.analysis->classical);
  CHECK(plain.analysis->extended.lambda_min ==
        with_id.analysis->extended.lambda_min);
  CHECK(plain.analysis->extended.infinite ==
        with_id.analysis->extended.infinite);
  CHECK(plain.analysis->extended.argmax_pair ==
        with_id.analysis->extended.argmax_pair);
}

TEST_CASE("analyze: family document with clamp exclusion") {
  const RunResult excluded =
      run_cli("analyze " + fixture("kannan23_n30.space") +
              " --map S --aux T --exclude-clamp");
  CHECK(excluded.exit_code == 0);
  CHECK(contains(excluded.output, "theorem (metric): applies"));
  CHECK(contains(excluded.output, "256/2869"));

  const RunResult unexcluded = run_cli(
      "analyze " + fixture("kannan23_n30.space") + " --map S --aux T");
  CHECK(unexcluded.exit_code == 1);
  CHECK(contains(unexcluded.output, "infinite"));
}

TEST_CASE("solve: trajectories, bounds, clamp note") {
  const RunResult direct = run_cli("solve " + fixture("example26.space") +
                                   " --map S --start 1");
  CHECK(direct.exit_code == 0);
  CHECK(contains(direct.output, "1 -> 4 -> 2"));
  CHECK(contains(direct.output, "fixed point 2 after 2 steps"));

  const RunResult bounded =
      run_cli("solve " + fixture("example26.space") +
              " --map S --aux T --start 3 --check-bounds 1/3");
  CHECK(bounded.exit_code == 0);
  CHECK(contains(bounded.output, "all hold"));

  CHECK(run_cli("solve " + fixture("example26.space") +
                " --map S --start 9")
            .exit_code == 2);
  CHECK(run_cli("solve " + fixture("example26.space") +
                " --map S --start 1 --check-bounds 1/2")
            .exit_code == 2);
  CHECK(run_cli("solve " + fixture("example26.space") +
                " --map S --start 1 --check-bounds nonsense")
            .exit_code == 2);

  const RunResult cycle =
      run_cli("solve " + fixture("swap2.space") + " --map S --start a");
  CHECK(cycle.exit_code == 1);
  CHECK(contains(cycle.output, "cycle detected: a -> b"));

  const fs::path report_path = scratch_dir() / "solve.json";
  const RunResult clamp =
      run_cli("solve " + fixture("kannan23_n30.space") +
              " --map S --aux T --start 1/4 --check-bounds 1/3 --report " +
              report_path.string());
  CHECK(clamp.exit_code == 0);
  CHECK(contains(clamp.output, "truncation boundary"));
  const auto report = kannan::report::parse_report(read_file(
      report_path.string()));
  REQUIRE(report.trajectory);
  CHECK(report.trajectory->at_clamp);
  CHECK(report.trajectory->fixed_point == "1/30");
  CHECK(report.trajectory->lambda_used == "1/3");
  REQUIRE(report.bounds);
  CHECK(report.bounds->all_hold);
}

TEST_CASE("search-t: certificate, candidates, budget") {
  const fs::path report_path = scratch_dir() / "search.json";
  const RunResult found =
      run_cli("search-t " + fixture("example26.space") +
              " --map S --lambda-cap 1/3 --verify T --report " +
              report_path.string());
  CHECK(found.exit_code == 0);
  CHECK(contains(found.output, "1 -> 1, 2 -> 3, 3 -> 4, 4 -> 2"));
  CHECK(contains(found.output, "candidate T: valid certificate (lambda = 1/4)"));

  const auto report = kannan::report::parse_report(read_file(
      report_path.string()));
  REQUIRE(report.search);
  CHECK(report.search->found);
  CHECK(report.search->examined == 4);
  CHECK(report.search->certificate_lambda == "1/3");
  CHECK(report.search->certificate ==
        std::map<std::string, std::string>{
            {"1", "1"}, {"2", "3"}, {"3", "4"}, {"4", "2"}});
  REQUIRE(report.search->verified.size() == 1);
  CHECK(report.search->verified[0].valid);
  CHECK(report.search->verified[0].lambda == "1/4");

  CHECK(run_cli("search-t " + fixture("swap2.space") +
                " --map S --lambda-cap 1/3")
            .exit_code == 1);
  CHECK(run_cli("search-t " + fixture("example26.space") +
                " --map S --lambda-cap 1/2")
            .exit_code == 2);

  // Eleven points exceed the default factorial budget.
  std::ostringstream big;
  big << R"({"kind": "metric", "points": [)";
  for (int i = 0; i < 11; ++i) {
    big << (i ? ", " : "") << "\"x" << i << "\"";
  }
  big << R"(], "distances": [)";
  bool first = true;
  for (int i = 0; i < 11; ++i) {
    for (int j = i + 1; j < 11; ++j) {
      big << (first ? "" : ", ") << "[\"x" << i << "\", \"x" << j
          << "\", \"1\"]";
      first = false;
    }
  }
  big << R"(], "maps": {"S": {)";
  for (int i = 0; i < 11; ++i) {
    big << (i ? ", " : "") << "\"x" << i << "\": \"x0\"";
  }
  big << "}}}";
  const std::string big_path = write_scratch("eleven.space", big.str());
  CHECK(run_cli("search-t " + big_path + " --map S --lambda-cap 1/3")
            .exit_code == 3);
}

TEST_CASE("reports and output are byte-identical across runs") {
  const fs::path first_report = scratch_dir() / "repeat1.json";
  const fs::path second_report = scratch_dir() / "repeat2.json";
  const std::string args = "analyze " + fixture("example26.space") +
                           " --map S --aux T --report ";
  const RunResult first = run_cli(args + first_report.string());
  const RunResult second = run_cli(args + second_report.string());
  CHECK(first.exit_code == second.exit_code);
  CHECK(first.output == second.output);
  CHECK(read_file(first_report.string()) ==
        read_file(second_report.string()));

  // Round-trip the emitted file through parse/emit.
  const std::string text = read_file(first_report.string());
  const auto parsed = kannan::report::parse_report(text);
  CHECK(kannan::report::emit_report(parsed) == text);
}
