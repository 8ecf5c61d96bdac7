// nigcdf: command-line front end for the NIG cumulative distribution.
//
//   nigcdf eval --alpha 8 --beta 2 --mu 3 --delta 2 --x 3.5 [--method auto] [--format csv]
//   nigcdf table1
//   nigcdf figure1 [--points 200]
//   nigcdf sweep --alpha 8 --beta 2 --mu 3 --delta 2 --from 0 --to 20 --points 50
//   nigcdf selftest [--seed N] [--perturb eps]
//
// Exit codes: 0 success, 1 usage error, 2 domain error, 3 convergence error,
// 4 self-test failure.

#include <array>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "nig/errors.hpp"
#include "nig/expansion.hpp"
#include "nig/oracle.hpp"
#include "nig/record.hpp"
#include "nig/selftest.hpp"

namespace {

enum ExitCode : int {
  kOk = 0,
  kUsage = 1,
  kDomain = 2,
  kConvergence = 3,
  kSelfTestFailed = 4,
};

struct DistributionArgs {
  double alpha = 0.0;
  double beta = 0.0;
  double mu = 0.0;
  double delta = 0.0;
};

struct EvalOptions {
  std::string method = "auto";
  int kmax = nig::kDefaultKmax;
  double tol = nig::kDefaultTol;
  std::string format = "plain";
};

void add_distribution_flags(CLI::App* cmd, DistributionArgs& d) {
  cmd->add_option("--alpha", d.alpha, "tail heaviness (> 0)")->required();
  cmd->add_option("--beta", d.beta, "asymmetry (|beta| < alpha)")->required();
  cmd->add_option("--mu", d.mu, "location")->required();
  cmd->add_option("--delta", d.delta, "scale (> 0)")->required();
}

void add_eval_flags(CLI::App* cmd, EvalOptions& o) {
  cmd->add_option("--method", o.method, "evaluation method")
      ->check(CLI::IsMember({"auto", "asym", "quad-split", "quad-direct"}));
  cmd->add_option("--kmax", o.kmax, "last retained series term")->check(CLI::NonNegativeNumber);
  cmd->add_option("--tol", o.tol, "absolute quadrature tolerance");
}

nig::Policy to_policy(const EvalOptions& o) {
  static const std::map<std::string, nig::MethodChoice> methods{
      {"auto", nig::MethodChoice::Auto},
      {"asym", nig::MethodChoice::Asymptotic},
      {"quad-split", nig::MethodChoice::QuadSplit},
      {"quad-direct", nig::MethodChoice::QuadDirect},
  };
  nig::Policy policy;
  policy.method = methods.at(o.method);
  policy.kmax = o.kmax;
  policy.tol = o.tol;
  return policy;
}

void print_record(const nig::OutputRecord& r, const std::string& format, bool header) {
  if (format == "csv") {
    if (header) std::cout << nig::csv_header() << '\n';
    std::cout << nig::to_csv(r) << '\n';
  } else if (format == "json") {
    std::cout << nig::to_json(r) << '\n';
  } else {
    std::cout << nig::to_plain(r) << '\n';
  }
}

int cmd_eval(const DistributionArgs& d, double x, const EvalOptions& o) {
  const nig::Parameters p = nig::validate(d.alpha, d.beta, d.mu, d.delta);
  print_record(nig::make_record(p, x, to_policy(o)), o.format, true);
  return kOk;
}

int cmd_sweep(const DistributionArgs& d, double from, double to, int points,
              const EvalOptions& o) {
  const nig::Parameters p = nig::validate(d.alpha, d.beta, d.mu, d.delta);
  const nig::Policy policy = to_policy(o);
  const std::string format = o.format == "plain" ? "csv" : o.format;
  for (int i = 0; i < points; ++i) {
    const double x = points == 1 ? from : from + (to - from) * i / (points - 1);
    print_record(nig::make_record(p, x, policy), format, i == 0);
  }
  return kOk;
}

constexpr std::array<double, 3> kTableBetas{-4.0, 2.0, 7.5};

int cmd_table1(int kmax) {
  std::cout << "beta,x0,F_asym,F_oracle,z,abs_err\n";
  for (double beta : kTableBetas) {
    const nig::Parameters p = nig::validate(8.0, beta, 3.0, 2.0);
    const double x0 = nig::transition_point(p);
    const double asym = nig::cdf_asym(p, x0, kmax).value;
    const double oracle = nig::cdf_quad_split(p, x0);
    std::cout << fmt::format("{},{},{},{},{},{}\n", nig::format_double(beta),
                             nig::format_double(x0), nig::format_double(asym),
                             nig::format_double(oracle),
                             nig::format_double(nig::geometry(p, x0).z),
                             nig::format_double(std::abs(asym - oracle)));
  }
  return kOk;
}

int cmd_figure1(int points, int kmax) {
  if (points < 2) throw CLI::ValidationError("--points", "must be at least 2");
  std::array<nig::Parameters, 3> params{};
  for (std::size_t j = 0; j < kTableBetas.size(); ++j) {
    params[j] = nig::validate(8.0, kTableBetas[j], 3.0, 2.0);
  }
  std::cout << "x,F(beta=-4),F(beta=2),F(beta=7.5),"
               "Fminus(beta=-4),Fminus(beta=2),Fminus(beta=7.5)\n";
  nig::Policy policy;
  policy.kmax = kmax;
  for (int i = 0; i < points; ++i) {
    const double x = 20.0 * i / (points - 1);
    std::string row = nig::format_double(x);
    std::array<double, 3> fminus{};
    for (std::size_t j = 0; j < params.size(); ++j) {
      const nig::Geometry g = nig::geometry(params[j], x);
      fminus[j] = nig::f_minus_asym(g, kmax, nig::assembly_mode(g));
      row += "," + nig::format_double(nig::cdf(params[j], x, policy).value);
    }
    for (double v : fminus) row += "," + nig::format_double(v);
    std::cout << row << '\n';
  }
  return kOk;
}

int cmd_selftest(std::uint64_t seed, double perturb, int draws) {
  nig::SelfTestOptions options;
  options.seed = seed;
  options.perturb = perturb;
  options.draws = draws;
  const nig::SelfTestReport report = nig::run_selftest(options);
  for (const nig::CheckResult& c : report.checks) {
    std::cout << fmt::format("{} {:<40} worst={:.3e} tol={:.1e} n={}\n",
                             c.passed ? "PASS" : "FAIL", c.name, c.worst, c.tolerance,
                             c.samples);
  }
  std::cout << fmt::format("{} passed, {} failed\n", report.passed(), report.failed());
  return report.ok() ? kOk : kSelfTestFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Normal inverse Gaussian CDF: uniform asymptotics and quadrature oracles"};
  app.require_subcommand(1);

  DistributionArgs dist;
  EvalOptions evalOptions;
  double x = 0.0;
  auto* eval = app.add_subcommand("eval", "evaluate F and G at one point");
  add_distribution_flags(eval, dist);
  eval->add_option("--x", x, "argument")->required();
  add_eval_flags(eval, evalOptions);
  eval->add_option("--format", evalOptions.format, "output format")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  double from = 0.0;
  double to = 20.0;
  int sweepPoints = 101;
  auto* sweep = app.add_subcommand("sweep", "evaluate F and G on a uniform grid");
  add_distribution_flags(sweep, dist);
  sweep->add_option("--from", from, "first grid point");
  sweep->add_option("--to", to, "last grid point");
  sweep->add_option("--points", sweepPoints, "number of grid points")
      ->check(CLI::PositiveNumber);
  add_eval_flags(sweep, evalOptions);
  sweep->add_option("--format", evalOptions.format, "output format (plain means csv)")
      ->check(CLI::IsMember({"plain", "csv", "json"}));

  int tableKmax = nig::kDefaultKmax;
  auto* table1 = app.add_subcommand("table1", "transition-point accuracy table");
  table1->add_option("--kmax", tableKmax, "last retained series term")
      ->check(CLI::NonNegativeNumber);

  int figurePoints = 200;
  int figureKmax = nig::kDefaultKmax;
  auto* figure1 = app.add_subcommand("figure1", "F and F- curves on [0, 20]");
  figure1->add_option("--points", figurePoints, "number of grid points");
  figure1->add_option("--kmax", figureKmax, "last retained series term")
      ->check(CLI::NonNegativeNumber);

  std::uint64_t seed = nig::SelfTestOptions{}.seed;
  double perturb = 0.0;
  int draws = nig::SelfTestOptions{}.draws;
  auto* selftest = app.add_subcommand("selftest", "run the invariant suites");
  selftest->add_option("--seed", seed, "seed for the random draws");
  selftest->add_option("--perturb", perturb, "relative perturbation (test hook)");
  selftest->add_option("--draws", draws, "random draws for the identity suite")
      ->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*eval) return cmd_eval(dist, x, evalOptions);
    if (*sweep) return cmd_sweep(dist, from, to, sweepPoints, evalOptions);
    if (*table1) return cmd_table1(tableKmax);
    if (*figure1) return cmd_figure1(figurePoints, figureKmax);
    if (*selftest) return cmd_selftest(seed, perturb, draws);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const nig::ConvergenceError& e) {
    std::cerr << "convergence error: " << e.what() << '\n';
    return kConvergence;
  } catch (const nig::OverflowError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  } catch (const std::domain_error& e) {
    // DomainError, NearTransitionError and UnreliableRegionError.
    std::cerr << "domain error: " << e.what() << '\n';
    return kDomain;
  }
  return kUsage;
}
