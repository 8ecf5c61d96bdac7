#include "nig/selftest.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "nig/coeffs.hpp"
#include "nig/expansion.hpp"
#include "nig/oracle.hpp"
#include "nig/special.hpp"

namespace nig {

int SelfTestReport::passed() const noexcept {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return c.passed; }));
}

int SelfTestReport::failed() const noexcept {
  return static_cast<int>(checks.size()) - passed();
}

std::vector<Draw> random_draws(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<Draw> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const double alpha = 0.5 + 19.5 * unit(rng);
    const double beta = alpha * 0.95 * (2.0 * unit(rng) - 1.0);
    const double mu = -5.0 + 10.0 * unit(rng);
    const double delta = 0.1 + 4.9 * unit(rng);
    const double x = mu + delta * (40.0 * unit(rng) - 20.0);
    out.push_back({validate(alpha, beta, mu, delta), x});
  }
  return out;
}

IdentityErrors identity_errors(const Parameters& p, double x, double perturb) {
  const Geometry g = geometry(p, x);
  const double k = 1.0 + perturb;
  const double dg = p.delta * p.gamma;
  const double bx = p.beta * g.xi;
  const double ao = p.alpha * g.omega;

  IdentityErrors e;
  {
    const double lhs = dg + bx - ao;
    const double rhs = k * g.z * g.sigmaPlusSq;
    e.exponent = std::abs(lhs - rhs) / (std::abs(dg) + std::abs(bx) + std::abs(ao));
  }
  {
    const double lhs = k * g.z * (g.sigmaPlusSq - g.sigmaMinusSq);
    const double rhs = 2.0 * dg;
    e.poleGap = std::abs(lhs - rhs) /
                (g.z * (std::abs(g.sigmaPlusSq) + std::abs(g.sigmaMinusSq)) + 2.0 * dg);
  }
  const double scale = std::abs(dg) + std::abs(bx) + std::abs(ao);
  {
    const double zeta = k * g.zetaPlus;
    e.zetaPlus = std::abs(zeta * zeta - (ao - bx - dg)) / scale;
    if (x != g.x0 && g.zetaPlus != 0.0) {
      e.zetaSignOk = (g.zetaPlus > 0.0) == (g.x0 - x > 0.0);
    }
  }
  {
    const double zeta = k * g.zetaMinus;
    e.zetaMinus = std::abs(zeta * zeta - (ao - bx + dg)) / scale;
  }
  e.sinPlus = std::abs(std::sin(g.nu - g.tau) - k * 2.0 * g.sPlus * g.wPlus);
  e.sinMinus = std::abs(std::sin(g.nu + g.tau) - k * 2.0 * g.sMinus * g.wMinus);
  return e;
}

namespace {

// Tracks the worst error of one named check.
class Check {
 public:
  Check(std::string name, double tolerance) : result_{std::move(name), true, 0.0, tolerance, 0} {}

  void observe(double error) {
    ++result_.samples;
    if (!(error <= result_.tolerance)) result_.passed = false;
    if (std::isnan(error) || error > result_.worst) result_.worst = error;
  }

  void require(bool condition) {
    ++result_.samples;
    if (!condition) {
      result_.passed = false;
      result_.worst = std::max(result_.worst, 1.0);
    }
  }

  [[nodiscard]] CheckResult done() && { return std::move(result_); }

 private:
  CheckResult result_;
};

void geometry_suite(const SelfTestOptions& o, std::vector<CheckResult>& out) {
  constexpr double tol = 1e-12;
  Check exponent("geometry.exponent-identity", tol);
  Check gap("geometry.pole-gap-identity", tol);
  Check zetaPlus("geometry.zeta-plus-root-form", tol);
  Check zetaMinus("geometry.zeta-minus-root-form", tol);
  Check sines("geometry.sin-double-angle", tol);
  Check sign("geometry.zeta-plus-sign", 0.0);
  Check mirror("geometry.reflection-angles", tol);

  for (const Draw& d : random_draws(o.seed, o.draws)) {
    const IdentityErrors e = identity_errors(d.params, d.x, o.perturb);
    exponent.observe(e.exponent);
    gap.observe(e.poleGap);
    zetaPlus.observe(e.zetaPlus);
    zetaMinus.observe(e.zetaMinus);
    sines.observe(std::max(e.sinPlus, e.sinMinus));
    sign.require(e.zetaSignOk);

    const Geometry g = geometry(d.params, d.x);
    const auto [rp, rx] = reflect(d.params, d.x);
    const Geometry r = geometry(rp, rx);
    const double k = 1.0 + o.perturb;
    mirror.observe(std::max(std::abs(k * r.nu - (std::numbers::pi - g.nu)),
                            std::abs(k * r.tau - (std::numbers::pi - g.tau))));
  }
  for (Check* c : {&exponent, &gap, &zetaPlus, &zetaMinus, &sines, &sign, &mirror}) {
    out.push_back(std::move(*c).done());
  }
}

void special_suite(const SelfTestOptions& o, std::vector<CheckResult>& out) {
  const double k = 1.0 + o.perturb;
  Check reflection("special.erfc-reflection", 1e-15);
  Check scaled("special.erfcx-consistency", 1e-13);
  for (int i = 0; i <= 100; ++i) {
    const double x = -6.0 + 0.12 * i;
    reflection.observe(std::abs(k * erfc(x) + erfc(-x) - 2.0));
    const double direct = std::exp(x * x) * erfc(x);
    scaled.observe(std::abs(k * erfcx(x) - direct) / direct);
  }
  out.push_back(std::move(reflection).done());
  out.push_back(std::move(scaled).done());
}

void coeffs_suite(const SelfTestOptions& o, std::vector<CheckResult>& out) {
  const double k = 1.0 + o.perturb;
  Check dk("coeffs.d-recursion-vs-closed-form", 1e-13);
  for (int i = 0; i < 50; ++i) {
    const double w = 0.05 + 0.95 * i / 49.0;
    const CoeffTable t = d_coefficients(w, 4);
    for (int j = 0; j <= 4; ++j) {
      const double closed = d_closed_form(w, j);
      dk.observe(std::abs(k * t.values[j] - closed) / std::abs(closed));
    }
  }
  Check uk("coeffs.u-series-sum", 1e-12);
  for (double p : {-0.9, -0.5, -0.25}) {
    const CoeffTable t = u_coefficients(p, 20);
    const double s2 = 0.01;
    double sum = 0.0;
    double pow = 1.0;
    for (double v : t.values) {
      sum += v * pow;
      pow *= s2;
    }
    const double exact = 1.0 / ((s2 - p) * std::sqrt(1.0 + s2));
    uk.observe(std::abs(k * sum - exact) / exact);
  }
  out.push_back(std::move(dk).done());
  out.push_back(std::move(uk).done());
}

void expansion_suite(const SelfTestOptions& o, std::vector<CheckResult>& out) {
  const double k = 1.0 + o.perturb;
  Check complement("expansion.f-plus-g-plus-complement", 1e-14);
  Check total("expansion.cdf-sf-complement", 1e-12);
  for (const Draw& d : random_draws(o.seed + 1, 200)) {
    const Geometry g = geometry(d.params, d.x);
    complement.observe(std::abs(k * f_plus_asym(g) + g_plus_asym(g) - 1.0));
    const EvalResult f = cdf(d.params, d.x);
    const EvalResult s = sf(d.params, d.x);
    total.observe(std::abs(k * f.value + s.value - 1.0));
  }
  out.push_back(std::move(complement).done());
  out.push_back(std::move(total).done());
}

void oracle_suite(const SelfTestOptions& o, std::vector<CheckResult>& out) {
  const double k = 1.0 + o.perturb;
  Check cross("oracle.split-vs-direct", 1e-10);
  Check mirror("oracle.reflection", 1e-10);
  int used = 0;
  for (const Draw& d : random_draws(o.seed + 2, 400)) {
    if (used == 10) break;
    const Geometry g = geometry(d.params, d.x);
    if (std::abs(g.nu - g.tau) <= 0.05 || g.z < 5.0 || g.z > 200.0) continue;
    ++used;
    const double split = cdf_quad_split(d.params, d.x);
    cross.observe(std::abs(k * split - cdf_quad_direct(d.params, d.x)));
    const auto [rp, rx] = reflect(d.params, d.x);
    mirror.observe(std::abs(k * split + cdf_quad_split(rp, rx) - 1.0));
  }
  out.push_back(std::move(cross).done());
  out.push_back(std::move(mirror).done());
}

}  // namespace

SelfTestReport run_selftest(const SelfTestOptions& options) {
  SelfTestReport report;
  geometry_suite(options, report.checks);
  special_suite(options, report.checks);
  coeffs_suite(options, report.checks);
  expansion_suite(options, report.checks);
  oracle_suite(options, report.checks);
  return report;
}

}  // namespace nig
