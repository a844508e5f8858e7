#include "commands.hpp"

#include "yaglom/io.hpp"

#include <doctest.h>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace yaglom;

namespace {

struct Run {
  int code = 0;
  std::string out;
  std::string err;
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Run r;
  r.code = cli::run_cli(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string summary_value(const std::string& csv, const std::string& key) {
  const CsvTable table = parse_csv(csv);
  for (const auto& row : table.rows)
    if (row[0] == key) return row[1];
  return {};
}

std::filesystem::path scratch_dir() {
  const auto dir = std::filesystem::temp_directory_path() / "yaglom_cli_test";
  std::filesystem::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("number formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, -640.48, 1e-300, 452.76785478}) CHECK(std::stod(format_number(v)) == v);
  CHECK(format_number(INFINITY) == "inf");
}

TEST_CASE("bounds command") {
  const Run shannon = run({"bounds", "--kind", "shannon", "--x-min", "-5", "--x-max", "0", "--samples", "6"});
  REQUIRE(shannon.code == 0);
  const CsvTable table = parse_csv(shannon.out);
  CHECK(table.header == std::vector<std::string>{"x", "rho", "rate", "curve"});
  CHECK(table.rows.size() == 6);
  CHECK(table.rows[0][3] == "shannon");

  const Run tvz = run({"bounds", "--kind", "tvz", "--p", "7", "--t", "2", "--x-min", "-800", "--x-max", "-1",
                       "--samples", "3"});
  REQUIRE(tvz.code == 0);
  const CsvTable tvz_table = parse_csv(tvz.out);
  CHECK(tvz_table.rows[0][1].empty());
  CHECK(std::stod(tvz_table.rows[0][2]) == doctest::Approx(1.8326).epsilon(1e-4));

  const Run envelope = run({"bounds", "--kind", "envelope", "--c", "-10.45", "--x-min", "-1000", "--x-max", "-520",
                            "--samples", "50"});
  REQUIRE(envelope.code == 0);
  CHECK(parse_csv(envelope.out).rows.size() == 50);

  const Run jsonl = run({"bounds", "--kind", "lattice", "--samples", "2", "--format", "jsonl"});
  REQUIRE(jsonl.code == 0);
  const auto first = nlohmann::json::parse(jsonl.out.substr(0, jsonl.out.find('\n')));
  CHECK(first["curve"] == "lattice");
  CHECK(first["x"].get<double>() == -10.0);
}

TEST_CASE("bounds output is byte-deterministic") {
  const std::vector<std::string> args = {"bounds", "--kind", "gilbert_yaglom", "--q", "5", "--x-min", "-20",
                                         "--x-max", "-0.1", "--samples", "40"};
  CHECK(run(args).out == run(args).out);
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({"bounds", "--kind", "hexagonal"}).code == cli::kExitUsage);
  CHECK(run({"bounds", "--kind", "shannon", "--x-min", "1", "--x-max", "0"}).code == cli::kExitUsage);
  CHECK(run({"bounds", "--kind", "tvz", "--p", "7"}).code == cli::kExitUsage);
  CHECK(run({"bounds", "--kind", "tvz", "--p", "9", "--t", "2"}).code == cli::kExitUsage);
  CHECK(run({"region", "--y-min", "-1"}).code == cli::kExitUsage);
  CHECK(run({"build", "--gilbert", "--q", "10", "--n", "9", "--d", "2"}).code == cli::kExitUsage);
  CHECK(run({"verify", "--only", "nothing"}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"bounds", "--kind", "shannon", "--format", "xml"}).code == cli::kExitUsage);
}

TEST_CASE("region command") {
  const Run near = run({"region", "--x-min", "-640.48", "--x-max", "-640.48", "--x-steps", "1", "--y-min",
                        "314.84396392926128", "--y-max", "314.84396392926128", "--y-steps", "1"});
  REQUIRE(near.code == 0);
  const CsvTable cell = parse_csv(near.out);
  CHECK(cell.header == std::vector<std::string>{"x", "y", "residual", "feasible"});
  REQUIRE(cell.rows.size() == 1);
  CHECK(std::abs(std::stod(cell.rows[0][2])) < 0.2);

  const Run none = run({"region", "--y-min", "1000", "--y-max", "2000"});
  REQUIRE(none.code == 0);
  int feasible = 0;
  for (const auto& row : parse_csv(none.out).rows) feasible += row[3] == "1";
  CHECK(feasible == 0);

  const Run defaults = run({"region"});
  REQUIRE(defaults.code == 0);
  feasible = 0;
  for (const auto& row : parse_csv(defaults.out).rows) feasible += row[3] == "1";
  CHECK(feasible > 0);
}

TEST_CASE("build command") {
  const Run concat = run({"build", "--inner", "bch", "--p", "7", "--t", "2", "--outer", "rs", "--n-out", "8",
                          "--k-out", "4", "--pairs", "5000", "--sample", "500"});
  REQUIRE(concat.code == 0);
  CHECK(summary_value(concat.out, "metric_floor") == "20");
  CHECK(summary_value(concat.out, "n") == "48");
  CHECK(std::stod(summary_value(concat.out, "rho")) >= 5.0 / 108.0 - 1e-9);
  CHECK(std::stoll(summary_value(concat.out, "measured_min_distance")) >= 20);

  const Run g3 = run({"build", "--gilbert", "--q", "3", "--n", "4", "--d", "3"});
  REQUIRE(g3.code == 0);
  CHECK(std::stoi(summary_value(g3.out, "size")) >= 3);

  const Run g2 = run({"build", "--gilbert", "--q", "2", "--n", "3", "--d", "1"});
  REQUIRE(g2.code == 0);
  CHECK(summary_value(g2.out, "size") == "8");
}

TEST_CASE("build writes lifted points") {
  const auto path = scratch_dir() / "points.csv";
  std::filesystem::remove(path);
  const Run r = run({"build", "--gilbert", "--q", "3", "--n", "2", "--d", "2", "--points", path.string()});
  REQUIRE(r.code == 0);
  std::ifstream in(path);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    CHECK(std::count(line.begin(), line.end(), ',') == 2);
  }
  CHECK(rows == std::stoi(summary_value(r.out, "size")));
}

TEST_CASE("output directory override and config file") {
  const auto dir = scratch_dir();
  const auto config = dir / "run.ini";
  {
    std::ofstream cfg(config);
    cfg << "output = \"curve.csv\"\n[bounds]\nkind = \"lattice\"\nsamples = 4\n";
  }
  std::filesystem::remove(dir / "out" / "curve.csv");
  ::setenv("YAGLOM_OUT_DIR", (dir / "out").c_str(), 1);
  const Run r = run({"--config", config.string(), "bounds"});
  ::unsetenv("YAGLOM_OUT_DIR");
  REQUIRE(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(dir / "out" / "curve.csv");
  std::stringstream text;
  text << in.rdbuf();
  const CsvTable table = parse_csv(text.str());
  CHECK(table.rows.size() == 4);
  CHECK(table.rows[0][3] == "lattice");
}

TEST_CASE("verify command") {
  const Run saddle = run({"verify", "--only", "saddle"});
  CHECK(saddle.code == 0);
  const auto row = nlohmann::json::parse(saddle.out);
  CHECK(row["name"] == "saddle");
  CHECK(row["pass"] == true);
  CHECK(row.contains("seconds"));

  const Run thm8 = run({"verify", "--only", "thm8"});
  CHECK(thm8.code == cli::kExitFailure);
  CHECK(thm8.err.find("thm8_region") != std::string::npos);
  CHECK(std::count(thm8.out.begin(), thm8.out.end(), '\n') == 2);
}
