#include "commands.hpp"

#include "yaglom/bounds.hpp"
#include "yaglom/concatenation.hpp"
#include "yaglom/errors.hpp"
#include "yaglom/gilbert.hpp"
#include "yaglom/io.hpp"
#include "yaglom/linear_code.hpp"
#include "yaglom/spherical.hpp"
#include "yaglom/verify.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <random>

namespace yaglom::cli {

namespace {

/// Name of the environment variable that redirects relative output paths.
constexpr const char* kOutputDirEnv = "YAGLOM_OUT_DIR";

struct Common {
  std::string output;
  std::string format = "csv";
  std::uint64_t seed = 0;
  unsigned workers = 1;
};

struct BoundsArgs {
  std::string kind;
  double x_min = -10.0;
  double x_max = 0.0;
  int samples = 101;
  int q = 3;
  std::string p;
  std::optional<std::string> t;
  std::optional<double> tau;
  double c = -10.0;
  double lambda = 0.98;
};

struct RegionArgs {
  double x_min = -700.0;
  double x_max = -600.0;
  int x_steps = 101;
  double y_min = 300.0;
  double y_max = 330.0;
  int y_steps = 61;
  double lambda = 0.98;
};

struct BuildArgs {
  std::string inner = "bch";
  std::string outer = "rs";
  bool gilbert = false;
  int p = 7;
  int t = 2;
  int n_out = 8;
  int k_out = 4;
  int q = 3;
  int n = 4;
  std::int64_t d = 3;
  std::size_t sample = 2000;
  std::uint64_t pairs = 100000;
  std::string points;
};

struct VerifyArgs {
  std::vector<std::string> only;
};

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path out(path);
  if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0' && out.is_relative()) {
    out = std::filesystem::path(dir) / out;
  }
  return out;
}

/// Runs `write` against the output file, or `fallback` when none is set.
template <typename Write>
void with_output(const std::string& path, std::ostream& fallback, Write&& write) {
  if (path.empty()) {
    write(fallback);
    return;
  }
  const std::filesystem::path target = resolve_output(path);
  if (target.has_parent_path()) std::filesystem::create_directories(target.parent_path());
  std::ofstream file(target, std::ios::binary);
  if (!file) throw UsageError("cannot open output file " + target.string());
  write(file);
  if (!file) throw std::runtime_error("failed writing " + target.string());
}

int cmd_bounds(const Common& common, const BoundsArgs& args, std::ostream& out) {
  const CurveKind kind = parse_curve_kind(args.kind);
  const OutputFormat format = parse_output_format(common.format);
  CurveParams params;
  params.q = args.q;
  params.c = args.c;
  params.lambda = args.lambda;
  if (kind == CurveKind::kTvzLine) {
    if (args.p.empty()) throw UsageError("tvz_line needs --p");
    if (args.t.has_value() == args.tau.has_value()) throw UsageError("tvz_line needs exactly one of --t and --tau");
    const BigInt p = parse_decimal(args.p);
    params.tvz = args.t ? TvzParams::from_t(p, parse_decimal(*args.t)) : TvzParams::from_tau(p, *args.tau);
  }
  const auto points = emit_curve(kind, params, args.x_min, args.x_max, args.samples);
  with_output(common.output, out, [&](std::ostream& s) { write_curve(s, kind, points, format); });
  return kExitOk;
}

int cmd_region(const Common& common, const RegionArgs& args, std::ostream& out) {
  const OutputFormat format = parse_output_format(common.format);
  const auto cells =
      region_grid(args.x_min, args.x_max, args.x_steps, args.y_min, args.y_max, args.y_steps, args.lambda);
  with_output(common.output, out, [&](std::ostream& s) { write_region(s, cells, format); });
  return kExitOk;
}

void dump_points(const std::string& path, const PointSet& points) {
  with_output(path, std::cout, [&](std::ostream& s) {
    for (Eigen::Index i = 0; i < points.rows(); ++i) {
      for (Eigen::Index j = 0; j < points.cols(); ++j) {
        if (j > 0) s << ',';
        s << format_number(points(i, j));
      }
      s << '\n';
    }
  });
}

int cmd_build(const Common& common, const BuildArgs& args, std::ostream& out) {
  const OutputFormat format = parse_output_format(common.format);
  std::vector<std::pair<std::string, std::string>> summary;

  if (args.gilbert) {
    const Constellation alphabet(args.q);
    const CodeBook code = greedy_gilbert(args.q, args.n, args.d);
    const SphericalCodeResult sphere = to_spherical(alphabet, code, args.d, common.workers);
    const std::int64_t measured = code.rows() >= 2 ? min_sq_distance(alphabet, code, common.workers) : 0;
    summary = {
        {"construction", "gilbert"},
        {"q", std::to_string(args.q)},
        {"n", std::to_string(args.n)},
        {"size", std::to_string(code.rows())},
        {"metric_floor", std::to_string(args.d)},
        {"measured_min_distance", code.rows() >= 2 ? std::to_string(measured) : "inf"},
        {"measurement", "exhaustive"},
        {"rho", format_number(sphere.rho)},
        {"rho_floor", format_number(sphere.rho_floor)},
        {"binary_rate", format_number(sphere.binary_rate)},
    };
    if (!args.points.empty()) dump_points(args.points, sphere.points);
  } else {
    if (args.inner != "bch") throw UsageError("unknown inner code '" + args.inner + "' (expected bch)");
    if (args.outer != "rs") throw UsageError("unknown outer code '" + args.outer + "' (expected rs)");
    const LinearCode inner = lee_bch(args.p, args.t);
    const ConcatenatedCode code(rs_code(args.p, inner.k, args.n_out, args.k_out), inner);
    const Constellation alphabet(args.p);

    std::vector<Word> words = low_weight_codewords(code, args.sample / 4);
    words.insert(words.begin(), Word::Zero(code.length()));
    std::mt19937_64 rng(common.seed);
    while (words.size() < args.sample) words.push_back(code.encode_digits(code.random_message(rng)));
    CodeBook book(Eigen::Index(words.size()), code.length());
    for (std::size_t i = 0; i < words.size(); ++i) book.row(Eigen::Index(i)) = words[i].transpose();

    const SampledDistance sampled = sampled_min_distance(code, args.pairs, common.seed);
    const std::int64_t sample_min = min_sq_distance(alphabet, book, common.workers);
    const SphericalCodeResult sphere = to_spherical(alphabet, book, code.metric_floor(), common.workers);
    const double log2_size = code.dimension() * std::log2(double(args.p));
    summary = {
        {"construction", "concatenated"},
        {"q", std::to_string(args.p)},
        {"n", std::to_string(code.length())},
        {"size", fmt::format("{}^{}", args.p, code.dimension())},
        {"inner", fmt::format("lee_bch[{},{}] floor {}", inner.n, inner.k, inner.metric_floor)},
        {"outer", fmt::format("rs[{},{},{}] over GF({}^{})", code.outer().n(), code.outer().k(),
                              code.outer().distance(), args.p, inner.k)},
        {"metric_floor", std::to_string(code.metric_floor())},
        {"measured_min_distance", std::to_string(std::min(sampled.min_distance, sample_min))},
        {"measurement", fmt::format("sampled ({} random pairs, {} structured and random words)", sampled.pairs,
                                    words.size())},
        {"rho", format_number(sphere.rho)},
        {"rho_floor", format_number(sphere.rho_floor)},
        {"binary_rate", format_number(log2_size / (code.length() + 1))},
    };
    if (!args.points.empty()) dump_points(args.points, sphere.points);
  }
  with_output(common.output, out, [&](std::ostream& s) { write_summary(s, summary, format); });
  return kExitOk;
}

int cmd_verify(const Common& common, const VerifyArgs& args, std::ostream& out, std::ostream& err) {
  VerifyOptions options;
  options.seed = common.seed;
  options.workers = common.workers;
  std::vector<std::string> failed;
  auto report = [&](std::ostream& s) {
    run_verification(args.only, options, [&](const CriterionResult& r) {
      s << format_result(r) << '\n' << std::flush;
      if (!r.pass) failed.push_back(fmt::format("{} ({})", r.id, r.name));
    });
  };
  with_output(common.output, out, report);
  if (failed.empty()) return kExitOk;
  std::string names;
  for (const std::string& f : failed) names += (names.empty() ? "" : ", ") + f;
  err << "verification failed: " << names << '\n';
  return kExitFailure;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spherical codes from Euclidean codes over Z_q, and their rate bounds"};
  app.set_config("--config", "", "key = value configuration file");
  app.require_subcommand(1);

  Common common;
  app.add_option("-o,--output", common.output, "Output file (default stdout)");
  app.add_option("--format", common.format, "csv or jsonl")->capture_default_str();
  app.add_option("--seed", common.seed, "Seed for randomized sampling")->capture_default_str();
  app.add_option("--workers", common.workers, "Worker threads")->check(CLI::Range(1u, 256u))->capture_default_str();

  BoundsArgs bounds;
  CLI::App* bounds_cmd = app.add_subcommand("bounds", "Emit a rate curve as x = ln rho, rho, rate");
  bounds_cmd->fallthrough();
  bounds_cmd->add_option("--kind", bounds.kind, "Curve kind")->required();
  bounds_cmd->add_option("--x-min", bounds.x_min, "Smallest ln rho")->capture_default_str();
  bounds_cmd->add_option("--x-max", bounds.x_max, "Largest ln rho")->capture_default_str();
  bounds_cmd->add_option("--samples", bounds.samples, "Number of rows")->capture_default_str();
  bounds_cmd->add_option("--q", bounds.q, "Alphabet size for gilbert_yaglom")->capture_default_str();
  bounds_cmd->add_option("--p", bounds.p, "Prime for tvz_line (decimal, any size)");
  bounds_cmd->add_option("--t", bounds.t, "Inner error count for tvz_line");
  bounds_cmd->add_option("--tau", bounds.tau, "t / (p-1) for tvz_line");
  bounds_cmd->add_option("--c", bounds.c, "Envelope constant x + 2 ln p")->capture_default_str();
  bounds_cmd->add_option("--lambda", bounds.lambda, "Scale for scaled_shannon")->capture_default_str();

  RegionArgs region;
  CLI::App* region_cmd = app.add_subcommand("region", "Residual of the attainable region on an (ln rho, ln p) grid");
  region_cmd->fallthrough();
  region_cmd->add_option("--x-min", region.x_min)->capture_default_str();
  region_cmd->add_option("--x-max", region.x_max)->capture_default_str();
  region_cmd->add_option("--x-steps", region.x_steps)->capture_default_str();
  region_cmd->add_option("--y-min", region.y_min)->capture_default_str();
  region_cmd->add_option("--y-max", region.y_max)->capture_default_str();
  region_cmd->add_option("--y-steps", region.y_steps)->capture_default_str();
  region_cmd->add_option("--lambda", region.lambda)->capture_default_str();

  BuildArgs build;
  CLI::App* build_cmd = app.add_subcommand("build", "Construct a code and lift it to the sphere");
  build_cmd->fallthrough();
  build_cmd->add_flag("--gilbert", build.gilbert, "Greedy Gilbert code in Z_q^n");
  build_cmd->add_option("--inner", build.inner, "Inner code (bch)")->capture_default_str();
  build_cmd->add_option("--outer", build.outer, "Outer code (rs)")->capture_default_str();
  build_cmd->add_option("--p", build.p)->capture_default_str();
  build_cmd->add_option("--t", build.t)->capture_default_str();
  build_cmd->add_option("--n-out", build.n_out)->capture_default_str();
  build_cmd->add_option("--k-out", build.k_out)->capture_default_str();
  build_cmd->add_option("--q", build.q)->capture_default_str();
  build_cmd->add_option("--n", build.n)->capture_default_str();
  build_cmd->add_option("--d", build.d, "Squared Euclidean distance")->capture_default_str();
  build_cmd->add_option("--sample", build.sample, "Codewords lifted for concatenated codes")
      ->check(CLI::Range(std::size_t{2}, std::size_t{200000}))
      ->capture_default_str();
  build_cmd->add_option("--pairs", build.pairs, "Random pairs for the sampled distance")->capture_default_str();
  build_cmd->add_option("--points", build.points, "Write the lifted points, one row of n+1 reals each");

  VerifyArgs verify;
  CLI::App* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  verify_cmd->fallthrough();
  verify_cmd->add_option("--only", verify.only, "Criterion names, ids or tags");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(common, bounds, out);
    if (region_cmd->parsed()) return cmd_region(common, region, out);
    if (build_cmd->parsed()) return cmd_build(common, build, out);
    return cmd_verify(common, verify, out, err);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace yaglom::cli
