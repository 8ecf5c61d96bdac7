#pragma once

#include <utility>

namespace nig {

/// Validated parameters of the normal inverse Gaussian distribution together
/// with the per-distribution constants gamma = sqrt(alpha^2 - beta^2) and
/// tau = arccos(beta / alpha) in (0, pi).
///
/// Construct through validate(); a Parameters value always satisfies
/// alpha > 0, delta > 0 and |beta| < alpha.
struct Parameters {
  double alpha;
  double beta;
  double mu;
  double delta;
  double gamma;
  double tau;
};

/// Per-evaluation quantities of the steepest-descent representation at x.
///
/// Poles of the integrand in the sigma plane sit at i*sPlus and i*sMinus
/// (up to sign); the saddle is at the origin and the large parameter is z.
struct Geometry {
  double xi;     ///< x - mu
  double omega;  ///< hypot(xi, delta)
  double nu;     ///< atan2(delta, xi), in (0, pi)
  double tau;    ///< copied from Parameters
  double z;      ///< 2 alpha omega
  double sPlus;  ///< sin((nu - tau) / 2); positive for x < x0
  double sMinus; ///< sin((nu + tau) / 2), in (0, 1]
  double wPlus;  ///< cos((nu - tau) / 2), in (0, 1]
  double wMinus; ///< cos((nu + tau) / 2); negative when nu + tau > pi
  double sigmaPlusSq;   ///< -sPlus^2
  double sigmaMinusSq;  ///< -sMinus^2
  double zetaPlus;      ///< sPlus sqrt(z)
  double zetaMinus;     ///< sMinus sqrt(z)
  double x0;            ///< transition point mu + beta delta / gamma
  double gammaDelta;    ///< gamma * delta
};

/// Throws DomainError unless alpha > 0, delta > 0, |beta| < alpha and all
/// inputs are finite.
[[nodiscard]] Parameters validate(double alpha, double beta, double mu, double delta);

/// x0 = mu + beta delta / gamma, where the pole sPlus crosses the saddle.
[[nodiscard]] double transition_point(const Parameters& p) noexcept;

[[nodiscard]] Geometry geometry(const Parameters& p, double x);

/// Parameters and argument of the mirrored distribution:
/// F(x; p) = 1 - F(-x; reflected p).
[[nodiscard]] std::pair<Parameters, double> reflect(const Parameters& p, double x) noexcept;

}  // namespace nig
