#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nig/params.hpp"

namespace nig {

struct CheckResult {
  std::string name;
  bool passed = false;
  double worst = 0.0;      ///< largest observed error measure
  double tolerance = 0.0;
  int samples = 0;
};

struct SelfTestReport {
  std::vector<CheckResult> checks;
  [[nodiscard]] int passed() const noexcept;
  [[nodiscard]] int failed() const noexcept;
  [[nodiscard]] bool ok() const noexcept { return failed() == 0; }
};

struct SelfTestOptions {
  std::uint64_t seed = 20250101;
  int draws = 10000;
  /// Test hook: relative perturbation applied to every computed quantity
  /// before it is compared, to confirm the suite can fail.
  double perturb = 0.0;
};

/// A random valid (parameters, x) pair: alpha in [0.5, 20], |beta| < 0.95 alpha,
/// mu in [-5, 5], delta in [0.1, 5], x - mu in [-20, 20] delta.
struct Draw {
  Parameters params;
  double x;
};

/// Deterministic sequence of draws for a given seed.
[[nodiscard]] std::vector<Draw> random_draws(std::uint64_t seed, int count);

/// Scale-relative error measures of the geometric identities at one draw.
/// Each identity a = b is measured as |a - b| / scale where scale is the sum
/// of the magnitudes of the terms entering it, so cancellation near x0 does
/// not inflate the measure.
struct IdentityErrors {
  double exponent = 0.0;  ///< delta gamma + beta xi - alpha omega = z sigma+^2
  double poleGap = 0.0;   ///< z (sigma+^2 - sigma-^2) = z sin(nu) sin(tau) = 2 gamma delta
  double zetaPlus = 0.0;  ///< zeta+^2 = alpha omega - beta xi - gamma delta, with sign(x0 - x)
  double zetaMinus = 0.0; ///< zeta-^2 = alpha omega - beta xi + gamma delta
  double sinPlus = 0.0;   ///< sin(nu - tau) = 2 s+ w+
  double sinMinus = 0.0;  ///< sin(nu + tau) = 2 s- w-
  bool zetaSignOk = true;
};

[[nodiscard]] IdentityErrors identity_errors(const Parameters& p, double x,
                                             double perturb = 0.0);

/// Runs the invariant suites of every module.
[[nodiscard]] SelfTestReport run_selftest(const SelfTestOptions& options = {});

}  // namespace nig
