// Command line surface: point I/O, mu* evaluation, (lambda, p) sweeps,
// boundary-case runs, and the `verify` property-suite runner.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "siegel/boundary.hpp"
#include "siegel/contraction.hpp"
#include "siegel/io.hpp"
#include "siegel/rng.hpp"
#include "siegel/verify.hpp"

namespace {

using siegel::io::g17;

constexpr int kExitOk = 0;
constexpr int kExitSuiteFailure = 1;
constexpr int kExitConfigError = 2;

std::uint64_t default_seed() {
  if (const char* env = std::getenv("SIEGEL_SEED")) {
    try {
      return std::stoull(env);
    } catch (...) {
      throw siegel::SchemaError("SIEGEL_SEED must be an unsigned integer");
    }
  }
  return 42;
}

siegel::geo::SiegelPoint load_point(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw siegel::SchemaError("cannot open point file: " + path);
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return siegel::io::parse_point_text(text);
}

void write_output(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    if (!payload.empty() && payload.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw siegel::SchemaError("cannot open output file: " + path);
  out << payload;
}

int run_mu(const std::string& z1_path, const std::string& z2_path, double p,
           const std::string& out_path) {
  const auto z1 = load_point(z1_path);
  const auto z2 = load_point(z2_path);
  const auto rep = siegel::contraction::mu_star(z1, z2, p);
  write_output(out_path, siegel::io::report_to_json(rep).dump(2));
  return kExitOk;
}

int run_sweep(double lambda_min, double lambda_max, int lambda_steps, double p, int samples,
              std::uint64_t seed, const std::string& out_path) {
  const auto [lo, hi] = siegel::contraction::admissible_interval(siegel::contraction::default_delta());
  if (lambda_min < lo || lambda_max > hi || lambda_min > lambda_max)
    throw siegel::SchemaError("sweep: lambda range must sit inside the admissible interval");

  // Fixed sample set for the whole sweep; each row aggregates over the pairs.
  siegel::rng::Xoshiro256pp gen(seed);
  std::vector<std::pair<siegel::geo::SiegelPoint, siegel::geo::SiegelPoint>> pairs;
  pairs.reserve(samples);
  for (int i = 0; i < samples; ++i) {
    auto a = siegel::rng::sample_interior_point(gen);
    auto b = siegel::rng::sample_interior_point(gen);
    pairs.emplace_back(std::move(a), std::move(b));
  }

  std::string csv = "lambda,p,mu_star_mean,mu_star_max,gap_max\n";
  for (int i = 0; i < lambda_steps; ++i) {
    const double lambda =
        lambda_steps == 1 ? lambda_min
                          : lambda_min + (lambda_max - lambda_min) * i / (lambda_steps - 1);
    const auto rot = siegel::contraction::psi_blocks(lambda);
    double mean = 0.0, top = 0.0, gap = 0.0;
    for (const auto& [z1, z2] : pairs) {
      const double mu = siegel::contraction::mu_star(z1, z2, p).mu_star;
      mean += mu;
      top = std::max(top, mu);
      const auto [lhs, rhs] = siegel::contraction::mainformula_gap(z1, z2, rot, p, 0.0);
      gap = std::max(gap, std::abs(lhs - rhs));
    }
    mean /= pairs.size();
    csv += g17(lambda) + "," + g17(p) + "," + g17(mean) + "," + g17(top) + "," + g17(gap) + "\n";
  }
  write_output(out_path, csv);
  return kExitOk;
}

int run_boundary(const std::string& case_text, double p, std::uint64_t seed,
                 const std::string& out_path, const std::string& format) {
  const auto id = siegel::boundary::CaseId::parse(case_text);
  const auto tax = siegel::boundary::expected_verdict(id);
  const auto spec = tax.impossible ? siegel::boundary::falsifier_sample(id, seed)
                                   : siegel::boundary::witness_spec(id);
  const auto rep = siegel::boundary::run_case(spec, siegel::boundary::default_schedule(), p);
  if (format == "csv") {
    write_output(out_path, siegel::io::trace_to_csv(rep));
  } else {
    write_output(out_path, siegel::io::report_to_json(rep).dump(2));
  }
  return kExitOk;
}

int run_verify(std::uint64_t seed, int samples, double tol_scale, const std::string& out_path,
               const std::string& format) {
  siegel::verify::VerifyConfig cfg;
  cfg.seed = seed;
  cfg.samples = samples;
  cfg.tol_scale = tol_scale;
  const auto rep = siegel::verify::run_verify(cfg);
  const std::string payload = format == "json" ? rep.to_json().dump(2) : rep.render();
  write_output(out_path, payload);
  if (!out_path.empty())  // keep a terse status on stdout when writing to a file
    std::cout << (rep.pass() ? "verify: PASS\n" : "verify: FAIL\n");
  return rep.pass() ? kExitOk : kExitSuiteFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2x2 Siegel half-space toolkit: contraction ratios, symplectic rotations, "
               "boundary-case runs, property verification"};
  app.require_subcommand(1);

  std::string z1_path, z2_path, out_path, case_text;
  std::string boundary_format = "json", verify_format = "text";
  double p = 1.0, lambda_min = -1.0, lambda_max = 1.0, tol_scale = 1.0;
  int lambda_steps = 11, samples = 500;
  std::uint64_t seed = 0;
  bool seed_given = false;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--out", out_path, "Output path (stdout when omitted)");
    cmd->add_option("--seed", seed, "PRNG seed (default 42; env SIEGEL_SEED overrides the default)")
       ->each([&](const std::string&) { seed_given = true; });
  };

  auto* mu = app.add_subcommand("mu", "Contraction report for a pair of points");
  mu->add_option("--z1", z1_path, "Path to the first point (JSON)")->required();
  mu->add_option("--z2", z2_path, "Path to the second point (JSON)")->required();
  mu->add_option("--p", p, "Norm parameter p > 0");
  add_common(mu);

  auto* sweep = app.add_subcommand("sweep", "CSV sweep over lambda at fixed p");
  sweep->add_option("--lambda-min", lambda_min, "Lower end of the lambda range");
  sweep->add_option("--lambda-max", lambda_max, "Upper end of the lambda range");
  sweep->add_option("--lambda-steps", lambda_steps, "Grid size");
  sweep->add_option("--p", p, "Norm parameter p > 0");
  sweep->add_option("--samples", samples, "Sampled pairs per row");
  add_common(sweep);

  auto* boundary = app.add_subcommand("boundary", "Run a boundary case to n = 2^20");
  boundary->add_option("--case", case_text, "Case id, e.g. \"++,+-\"")->required();
  boundary->add_option("--p", p, "Norm parameter p > 0");
  boundary->add_option("--format", boundary_format, "json (report) or csv (trace)")
      ->check(CLI::IsMember({"json", "csv"}));
  add_common(boundary);

  auto* verify = app.add_subcommand("verify", "Run all module property suites");
  verify->add_option("--samples", samples, "Sample count per suite");
  verify->add_option("--tol", tol_scale, "Tolerance scale factor (diagnostic)");
  verify->add_option("--format", verify_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  add_common(verify);

  CLI11_PARSE(app, argc, argv);

  try {
    if (!seed_given) seed = default_seed();
    if (!(p > 0.0)) throw siegel::SchemaError("p must be positive");

    if (mu->parsed()) return run_mu(z1_path, z2_path, p, out_path);
    if (sweep->parsed())
      return run_sweep(lambda_min, lambda_max, lambda_steps, p, samples, seed, out_path);
    if (boundary->parsed()) return run_boundary(case_text, p, seed, out_path, boundary_format);
    if (verify->parsed()) return run_verify(seed, samples, tol_scale, out_path, verify_format);
  } catch (const siegel::SchemaError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const siegel::AsymmetryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const siegel::NotPSD& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const siegel::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitSuiteFailure;
  }
  return kExitConfigError;
}
