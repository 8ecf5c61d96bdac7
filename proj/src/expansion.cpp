#include "nig/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "nig/coeffs.hpp"
#include "nig/errors.hpp"
#include "nig/special.hpp"

namespace nig {

namespace {

// sum_{k=0..kmax} coeff[k] * weight[k] / z^k.
SeriesValue power_sum(const std::vector<double>& coeff, const std::vector<double>& weight,
                      double z) {
  SeriesValue s;
  double zk = 1.0;
  for (std::size_t k = 0; k < coeff.size(); ++k) {
    const double term = coeff[k] * weight[k] / zk;
    s.value += term;
    s.lastTerm = term;
    zk *= z;
  }
  return s;
}

SeriesValue d_series(double w, int kmax, double z) {
  const CoeffTable d = d_coefficients(w, kmax);
  return power_sum(d.values, std::vector<double>(d.values.size(), 1.0), z);
}

// e^{z sigma+^2} / (2 sqrt(pi z)), the common scale of every series term.
double series_scale(const Geometry& g) {
  return std::exp(g.z * g.sigmaPlusSq) / (2.0 * std::sqrt(std::numbers::pi * g.z));
}

void clamp_probability(double raw, double lastTerms, EvalResult& out) {
  out.value = std::clamp(raw, 0.0, 1.0);
  out.errorEstimate = lastTerms + std::abs(raw - out.value);
}

}  // namespace

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::UniformAsym:
      return "uniform-asym";
    case Method::LaplaceAsym:
      return "laplace-asym";
    case Method::QuadSplit:
      return "quad-split";
    case Method::QuadDirect:
      return "quad-direct";
  }
  return "unknown";
}

SeriesValue f_plus_series(const Geometry& g, int kmax) {
  const SeriesValue sum = d_series(g.wPlus, kmax, g.z);
  const double factor = series_scale(g) * std::tan(0.25 * (g.nu - g.tau));
  return {0.5 * erfc(g.zetaPlus) - factor * sum.value, std::abs(factor * sum.lastTerm)};
}

double f_plus_asym(const Geometry& g, int kmax) { return f_plus_series(g, kmax).value; }

SeriesValue g_plus_series(const Geometry& g, int kmax) {
  const SeriesValue sum = d_series(g.wPlus, kmax, g.z);
  const double factor = series_scale(g) * std::tan(0.25 * (g.nu - g.tau));
  return {0.5 * erfc(-g.zetaPlus) + factor * sum.value, std::abs(factor * sum.lastTerm)};
}

double g_plus_asym(const Geometry& g, int kmax) { return g_plus_series(g, kmax).value; }

SeriesValue f_minus_series(const Geometry& g, int kmax, MinusMode mode) {
  if (mode == MinusMode::Auto) {
    mode = g.sMinus <= kLaplaceSwitch ? MinusMode::Uniform : MinusMode::Laplace;
  }

  if (mode == MinusMode::Laplace) {
    // e^{z sigma+^2} sin(nu + tau) / (4 pi) sqrt(pi / z) sum u_k (1/2)_k / z^k.
    const CoeffTable u = u_coefficients(g.sigmaMinusSq, kmax);
    const SeriesValue sum = power_sum(u.values, half_pochhammer(kmax), g.z);
    // sin(nu + tau) = 2 sMinus wMinus.
    const double factor = series_scale(g) * g.sMinus * g.wMinus;
    return {factor * sum.value, std::abs(factor * sum.lastTerm)};
  }

  const double w = std::abs(g.wMinus);
  if (w < kMinReliableW) {
    throw UnreliableRegionError(
        "uniform F- expansion unreliable: |cos((nu + tau)/2)| < 0.05");
  }
  const double sign = g.wMinus >= 0.0 ? 1.0 : -1.0;
  const SeriesValue sum = d_series(w, kmax, g.z);
  // sMinus / (1 + w) is tan((nu + tau)/4) on the principal branch (wMinus > 0).
  const double factor = series_scale(g) * g.sMinus / (1.0 + w);
  // e^{-2 gamma delta} erfc(zeta-) = e^{z sigma+^2} erfcx(zeta-).
  const double erfcTerm = 0.5 * std::exp(g.z * g.sigmaPlusSq) * erfcx(g.zetaMinus);
  return {sign * (erfcTerm - factor * sum.value), std::abs(factor * sum.lastTerm)};
}

double f_minus_asym(const Geometry& g, int kmax, MinusMode mode) {
  return f_minus_series(g, kmax, mode).value;
}

MinusMode assembly_mode(const Geometry& g) noexcept {
  // sMinus is close to 1 inside the band, where Laplace's method is accurate.
  return std::abs(g.wMinus) < kMinReliableW ? MinusMode::Laplace : MinusMode::Uniform;
}

EvalResult cdf_asym(const Parameters& p, double x, int kmax) {
  const Geometry g = geometry(p, x);
  const SeriesValue plus = f_plus_series(g, kmax);
  const SeriesValue minus = f_minus_series(g, kmax, assembly_mode(g));
  EvalResult r;
  r.method = Method::UniformAsym;
  r.kmaxUsed = kmax;
  clamp_probability(plus.value + minus.value, plus.lastTerm + minus.lastTerm, r);
  return r;
}

EvalResult sf_asym(const Parameters& p, double x, int kmax) {
  const Geometry g = geometry(p, x);
  const SeriesValue plus = g_plus_series(g, kmax);
  const SeriesValue minus = f_minus_series(g, kmax, assembly_mode(g));
  EvalResult r;
  r.method = Method::UniformAsym;
  r.kmaxUsed = kmax;
  clamp_probability(plus.value - minus.value, plus.lastTerm + minus.lastTerm, r);
  return r;
}

namespace {

EvalResult complement(EvalResult r) {
  r.value = 1.0 - r.value;
  r.complemented = !r.complemented;
  return r;
}

EvalResult quad_split(const Parameters& p, double x, double tol, bool upper) {
  const SplitParts parts = split_parts(p, x, tol);
  EvalResult r;
  r.method = Method::QuadSplit;
  const double raw = upper ? parts.gPlus - parts.fMinus : parts.fPlus + parts.fMinus;
  clamp_probability(raw, parts.plusQuad.lastChange + parts.minusQuad.lastChange, r);
  return r;
}

EvalResult quad_direct(const Parameters& p, double x, double tol) {
  const QuadratureResult q = cdf_quad_direct_detail(p, x, tol);
  EvalResult r;
  r.method = Method::QuadDirect;
  clamp_probability(q.value, q.lastChange, r);
  return r;
}

bool asymptotics_applicable(const Geometry& g, const Policy& policy) {
  return g.z >= policy.zMin && std::abs(g.wMinus) >= kMinReliableW;
}

// Evaluates the lower tail F (upper = false) or the upper tail G (upper = true).
EvalResult evaluate(const Parameters& p, double x, const Policy& policy, bool upper) {
  switch (policy.method) {
    case MethodChoice::QuadSplit:
      return quad_split(p, x, policy.tol, upper);
    case MethodChoice::QuadDirect: {
      const EvalResult r = quad_direct(p, x, policy.tol);
      return upper ? complement(r) : r;
    }
    case MethodChoice::Asymptotic:
      return upper ? sf_asym(p, x, policy.kmax) : cdf_asym(p, x, policy.kmax);
    case MethodChoice::Auto:
      break;
  }

  const Geometry g = geometry(p, x);
  if (!asymptotics_applicable(g, policy)) return quad_split(p, x, policy.tol, upper);

  // Compute whichever of F and G is the smaller and complement if needed.
  const bool rightOfTransition = x > g.x0;
  if (rightOfTransition == upper) {
    return upper ? sf_asym(p, x, policy.kmax) : cdf_asym(p, x, policy.kmax);
  }
  return complement(upper ? cdf_asym(p, x, policy.kmax) : sf_asym(p, x, policy.kmax));
}

}  // namespace

EvalResult cdf(const Parameters& p, double x, const Policy& policy) {
  return evaluate(p, x, policy, false);
}

EvalResult sf(const Parameters& p, double x, const Policy& policy) {
  return evaluate(p, x, policy, true);
}

}  // namespace nig
