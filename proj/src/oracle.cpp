#include "nig/oracle.hpp"

#include <cmath>
#include <numbers>

#include <fmt/format.h>

#include "nig/errors.hpp"
#include "nig/special.hpp"

namespace nig {

namespace {

constexpr int kMaxNodes = 1 << 22;
constexpr double kMinTol = 1e-13;

void check_tol(double tol) {
  if (!(tol >= kMinTol)) {
    throw DomainError(fmt::format("tol must be >= {} (got {})", kMinTol, tol));
  }
}

// Trapezoid rule for an even integrand over [-L, L], halving the step from
// `step0` until two successive sums differ by less than `tol`. Only the new
// (odd) nodes are evaluated on each refinement.
template <typename F>
QuadratureResult even_trapezoid(F&& f, double L, double step0, double tol) {
  double h = step0;
  auto n = static_cast<int>(std::ceil(L / h));
  h = L / n;
  double sum = 0.5 * f(0.0);
  for (int k = 1; k <= n; ++k) sum += f(k * h);
  double estimate = 2.0 * h * sum;
  int nodes = n + 1;

  for (;;) {
    double added = 0.0;
    for (int k = 0; k < n; ++k) added += f((2 * k + 1) * 0.5 * h);
    sum += added;
    h *= 0.5;
    n *= 2;
    nodes += n / 2;
    const double refined = 2.0 * h * sum;
    const double change = std::abs(refined - estimate);
    estimate = refined;
    if (change < tol) {
      QuadratureResult r;
      r.value = estimate;
      r.lastChange = change;
      r.nodes = nodes;
      r.spec = QuadratureSpec{QuadratureRule::TrapezoidDecay, h, L, tol};
      return r;
    }
    if (nodes > kMaxNodes) {
      throw ConvergenceError(fmt::format(
          "trapezoid did not converge within {} nodes (last change {:.3e}, tol {:.3e})",
          kMaxNodes, change, tol));
    }
  }
}

// e^{z sigma+^2} sin(nu -+ tau) / (4 pi) * integral of e^{-z sigma^2} g(sigma, W)
// for a pole with sine s and signed cosine c, W = |c|. The product
// sin(nu -+ tau) g(sigma, W) = -2 s sign(c) / (r (r + W)), r = sqrt(1 + sigma^2),
// is evaluated in that form so nothing divides by W.
QuadratureResult remainder_integral(double s, double c, double z, double sigmaPlusSq,
                                    double tol) {
  const double W = std::abs(c);
  const double sgn = c >= 0.0 ? 1.0 : -1.0;
  const double prefactor = std::exp(z * sigmaPlusSq) / (4.0 * std::numbers::pi);
  const double rootZ = std::sqrt(z);
  const double scale = -2.0 * s * sgn * prefactor / rootZ;

  // Substituted sigma = u / sqrt(z): integrand e^{-u^2} scale / (r (r + W)).
  auto f = [&](double u) {
    const double sigma = u / rootZ;
    const double r = std::sqrt(1.0 + sigma * sigma);
    return std::exp(-u * u) * scale / (r * (r + W));
  };

  // |f| <= |scale| / (1 + W) e^{-u^2}; both tails together are below
  // |scale| e^{-L^2} / L.
  const double bound = std::abs(scale);
  double L = 6.0;
  while (bound * std::exp(-L * L) / L > 0.1 * tol) L += 0.5;

  // The integrand has branch points at u = +-i sqrt(z).
  const double step0 = std::min(0.5, 0.5 * rootZ);
  return even_trapezoid(f, L, step0, tol);
}

}  // namespace

double remainder_g(double sigma, double w) noexcept {
  const double r = std::sqrt(1.0 + sigma * sigma);
  return -1.0 / (r * w * (r + w));
}

SplitParts split_parts(const Parameters& p, double x, double tol) {
  check_tol(tol);
  const Geometry g = geometry(p, x);
  // Two integrals share the budget.
  const double partTol = 0.5 * tol;

  SplitParts parts;
  parts.plusQuad = remainder_integral(g.sPlus, g.wPlus, g.z, g.sigmaPlusSq, partTol);
  parts.minusQuad = remainder_integral(g.sMinus, g.wMinus, g.z, g.sigmaPlusSq, partTol);

  parts.fPlus = 0.5 * erfc(g.zetaPlus) + parts.plusQuad.value;
  parts.gPlus = 0.5 * erfc(-g.zetaPlus) - parts.plusQuad.value;

  // e^{-2 gamma delta} erfc(zeta-) = e^{z sigma+^2} erfcx(zeta-).
  const double poleSign = g.wMinus >= 0.0 ? 1.0 : -1.0;
  parts.fMinus =
      poleSign * 0.5 * std::exp(g.z * g.sigmaPlusSq) * erfcx(g.zetaMinus) +
      parts.minusQuad.value;
  return parts;
}

double cdf_quad_split(const Parameters& p, double x, double tol) {
  const SplitParts parts = split_parts(p, x, tol);
  return parts.fPlus + parts.fMinus;
}

double sf_quad_split(const Parameters& p, double x, double tol) {
  const SplitParts parts = split_parts(p, x, tol);
  return parts.gPlus - parts.fMinus;
}

QuadratureResult cdf_quad_direct_detail(const Parameters& p, double x, double tol) {
  check_tol(tol);
  Geometry g = geometry(p, x);
  const double gap = g.nu - p.tau;
  if (std::abs(gap) <= kDirectExclusion) {
    throw NearTransitionError(fmt::format(
        "direct quadrature needs |nu - tau| > {} (got {:.3e}); use the split oracle",
        kDirectExclusion, std::abs(gap)));
  }

  if (gap < 0.0) {
    const auto [rp, rx] = reflect(p, x);
    QuadratureResult r = cdf_quad_direct_detail(rp, rx, tol);
    r.value = 1.0 - r.value;
    return r;
  }

  const double nu = g.nu;
  const double tau = p.tau;
  const double alphaOmega = p.alpha * g.omega;
  const double sinNu = std::sin(nu);
  const double cosTau = std::cos(tau);
  // cosh s - cos(phi) = 2 sinh^2(s/2) + 2 sin^2(phi/2) for phi = nu - tau, nu + tau.
  const double sinHalfDiff2 = std::pow(std::sin(0.5 * (nu - tau)), 2);
  const double sinHalfSum2 = std::pow(std::sin(0.5 * (nu + tau)), 2);
  // cos tau - cos nu = 2 sin((nu + tau)/2) sin((nu - tau)/2).
  const double cosGap = 2.0 * std::sin(0.5 * (nu + tau)) * std::sin(0.5 * (nu - tau));
  const double prefactor = std::exp(g.z * g.sigmaPlusSq) / (2.0 * std::numbers::pi);

  auto f = [&](double s) {
    const double sh = std::sinh(0.5 * s);
    const double sh2 = 2.0 * sh * sh;  // cosh s - 1
    const double numerator = sinNu * (cosTau * sh2 + cosGap);
    const double denominator = (sh2 + 2.0 * sinHalfDiff2) * (sh2 + 2.0 * sinHalfSum2);
    return prefactor * std::exp(-alphaOmega * sh2) * numerator / denominator;
  };

  // Peak height is bounded by |f(0)|-like terms of size 1/(4 sin^2 of the half gap);
  // extend the range until e^{-alpha omega (cosh S - 1)} times that is below tol/10.
  const double peak = prefactor * sinNu * (std::abs(cosTau) + 2.0) /
                      (4.0 * sinHalfDiff2 * std::max(sinHalfSum2, sinHalfDiff2));
  double S = 1.0;
  while (peak * std::exp(-alphaOmega * (std::cosh(S) - 1.0)) * S > 0.1 * tol) S += 0.25;

  // Nearest poles at s = +-i|nu - tau| and +-i min(nu + tau, 2 pi - nu - tau).
  const double poleDistance =
      std::min(std::abs(nu - tau), std::min(nu + tau, 2.0 * std::numbers::pi - nu - tau));
  return even_trapezoid(f, S, std::min(0.5, 0.5 * poleDistance), tol);
}

double cdf_quad_direct(const Parameters& p, double x, double tol) {
  return cdf_quad_direct_detail(p, x, tol).value;
}

}  // namespace nig
