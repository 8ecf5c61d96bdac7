#include "nig/params.hpp"

#include <cmath>

#include <fmt/format.h>

#include "nig/errors.hpp"

namespace nig {

Parameters validate(double alpha, double beta, double mu, double delta) {
  if (!std::isfinite(alpha) || !std::isfinite(beta) || !std::isfinite(mu) ||
      !std::isfinite(delta)) {
    throw DomainError("parameters must be finite");
  }
  if (!(alpha > 0.0)) {
    throw DomainError(fmt::format("alpha must be > 0 (got {})", alpha));
  }
  if (!(delta > 0.0)) {
    throw DomainError(fmt::format("delta must be > 0 (got {})", delta));
  }
  if (!(std::abs(beta) < alpha)) {
    throw DomainError(
        fmt::format("|beta| must be < alpha (got beta={}, alpha={})", beta, alpha));
  }
  // (alpha - beta)(alpha + beta) keeps full relative accuracy as |beta| -> alpha.
  const double gamma = std::sqrt((alpha - beta) * (alpha + beta));
  const double tau = std::atan2(gamma, beta);
  return Parameters{alpha, beta, mu, delta, gamma, tau};
}

double transition_point(const Parameters& p) noexcept {
  return p.mu + p.beta * p.delta / p.gamma;
}

Geometry geometry(const Parameters& p, double x) {
  Geometry g{};
  g.xi = x - p.mu;
  g.omega = std::hypot(g.xi, p.delta);
  g.nu = std::atan2(p.delta, g.xi);
  g.tau = p.tau;
  g.z = 2.0 * p.alpha * g.omega;

  const double halfDiff = 0.5 * (g.nu - p.tau);
  const double halfSum = 0.5 * (g.nu + p.tau);
  g.sPlus = std::sin(halfDiff);
  g.wPlus = std::cos(halfDiff);
  g.sMinus = std::sin(halfSum);
  g.wMinus = std::cos(halfSum);
  g.sigmaPlusSq = -g.sPlus * g.sPlus;
  g.sigmaMinusSq = -g.sMinus * g.sMinus;

  const double rootZ = std::sqrt(g.z);
  g.zetaPlus = g.sPlus * rootZ;
  g.zetaMinus = g.sMinus * rootZ;
  g.x0 = transition_point(p);
  g.gammaDelta = p.gamma * p.delta;
  return g;
}

std::pair<Parameters, double> reflect(const Parameters& p, double x) noexcept {
  Parameters r = p;
  r.beta = -p.beta;
  r.mu = -p.mu;
  r.tau = std::atan2(p.gamma, r.beta);
  return {r, -x};
}

}  // namespace nig
