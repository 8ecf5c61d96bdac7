#pragma once

#include "nig/params.hpp"

namespace nig {

enum class QuadratureRule {
  TrapezoidDecay,  ///< trapezoid on a doubly exponentially decaying integrand
  GaussComposite,  ///< reserved; not used by the built-in oracles
};

/// How a reference integral was discretised: the rule, the final step, the
/// half-width of the truncated range, and the absolute tolerance targeted.
struct QuadratureSpec {
  QuadratureRule rule = QuadratureRule::TrapezoidDecay;
  double step = 0.0;
  double truncation = 0.0;
  double tol = 1e-12;
};

/// Result of a trapezoid rule refined by step halving.
struct QuadratureResult {
  double value = 0.0;
  double lastChange = 0.0;  ///< |T(h) - T(2h)| at acceptance
  int nodes = 0;
  QuadratureSpec spec;
};

inline constexpr double kDefaultTol = 1e-12;

/// Smallest |nu - tau| accepted by cdf_quad_direct.
inline constexpr double kDirectExclusion = 0.02;

/// The pole-free remainder left after the pole at rho is split off:
/// g(sigma, w) = -1 / (sqrt(1 + sigma^2) w (sqrt(1 + sigma^2) + w)),
/// w = sqrt(1 + rho^2).
[[nodiscard]] double remainder_g(double sigma, double w) noexcept;

/// Exact pieces of F = F+ + F- and of G+ = 1 - F+, each an erfc term plus a
/// quadrature of the smooth remainder.
struct SplitParts {
  double fPlus = 0.0;
  double gPlus = 0.0;
  double fMinus = 0.0;
  QuadratureResult plusQuad;
  QuadratureResult minusQuad;
};

/// Throws ConvergenceError if the node budget runs out, DomainError if tol < 1e-13.
[[nodiscard]] SplitParts split_parts(const Parameters& p, double x, double tol = kDefaultTol);

/// Reference F through the erfc split; valid for every real x and every z > 0.
[[nodiscard]] double cdf_quad_split(const Parameters& p, double x, double tol = kDefaultTol);

/// Reference G = G+ - F- through the same split.
[[nodiscard]] double sf_quad_split(const Parameters& p, double x, double tol = kDefaultTol);

/// Reference F from direct trapezoid quadrature of the steepest-descent
/// integral in the s-variable. Points with nu < tau are mapped through
/// reflect(). Throws NearTransitionError when |nu - tau| <= kDirectExclusion.
[[nodiscard]] double cdf_quad_direct(const Parameters& p, double x, double tol = kDefaultTol);

[[nodiscard]] QuadratureResult cdf_quad_direct_detail(const Parameters& p, double x,
                                                      double tol = kDefaultTol);

}  // namespace nig
