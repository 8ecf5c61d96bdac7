#include "nig/coeffs.hpp"

#include <cmath>

#include <fmt/format.h>

#include "nig/errors.hpp"

namespace nig {

namespace {

void check_kmax(int kmax) {
  if (kmax < 0) throw DomainError(fmt::format("kmax must be >= 0 (got {})", kmax));
}

}  // namespace

std::vector<double> half_pochhammer(int kmax) {
  check_kmax(kmax);
  std::vector<double> out(static_cast<std::size_t>(kmax) + 1);
  double p = 1.0;
  for (int k = 0; k <= kmax; ++k) {
    out[k] = p;
    p *= k + 0.5;
  }
  return out;
}

CoeffTable d_coefficients(double w, int kmax) {
  if (!(w > 0.0 && w <= 1.0)) {
    throw DomainError(fmt::format("d_coefficients: w must lie in (0, 1] (got {})", w));
  }
  check_kmax(kmax);

  // Series of w(1 + sigma^2) + w^2 sqrt(1 + sigma^2) in sigma^2. Beyond k = 2
  // the binomial coefficients of sqrt(1 + s) follow b_{k+1} = -(k - 1/2) b_k / (k + 1).
  const auto n = static_cast<std::size_t>(kmax) + 1;
  std::vector<double> b(n + 1);
  b[0] = w + w * w;
  b[1] = w + 0.5 * w * w;
  b[2] = -w * w / 8.0;
  for (std::size_t k = 2; k < n; ++k) {
    b[k + 1] = -(static_cast<double>(k) - 0.5) * b[k] / static_cast<double>(k + 1);
  }

  std::vector<double> c(n);
  c[0] = 1.0;
  for (std::size_t k = 1; k < n; ++k) {
    double s = 0.0;
    for (std::size_t j = 1; j <= k; ++j) s += b[j] * c[k - j];
    c[k] = -s / b[0];
  }

  CoeffTable table{CoeffKind::D, w, std::vector<double>(n)};
  double poch = 1.0;
  for (std::size_t k = 0; k < n; ++k) {
    table.values[k] = poch * c[k];
    poch *= static_cast<double>(k) + 0.5;
  }
  return table;
}

double d_closed_form(double w, int k) {
  const double w1 = w + 1.0;
  switch (k) {
    case 0:
      return 1.0;
    case 1:
      return -(w + 2.0) / (4.0 * w1);
    case 2:
      return 3.0 * (3.0 * w * w + 9.0 * w + 8.0) / (32.0 * w1 * w1);
    case 3:
      return -15.0 * (((5.0 * w + 20.0) * w + 29.0) * w + 16.0) / (128.0 * w1 * w1 * w1);
    case 4:
      return 105.0 * ((((35.0 * w + 175.0) * w + 345.0) * w + 325.0) * w + 128.0) /
             (2048.0 * w1 * w1 * w1 * w1);
    default:
      throw DomainError(fmt::format("d_closed_form: k must lie in [0, 4] (got {})", k));
  }
}

CoeffTable u_coefficients(double p, int kmax) {
  // p = -1 (pole pair at the branch points) leaves 1/(1 + sigma^2)^{3/2},
  // which is still analytic in |sigma| < 1.
  if (!(p >= -1.0 && p < 0.0)) {
    throw DomainError(fmt::format("u_coefficients: p must lie in [-1, 0) (got {})", p));
  }
  check_kmax(kmax);
  const auto n = static_cast<std::size_t>(kmax) + 1;

  // 1/(sigma^2 - p) = sum_j g_j sigma^{2j} with g_j = -1/p^{j+1};
  // (1 + sigma^2)^{-1/2} = sum_j h_j sigma^{2j} with h_j = binom(-1/2, j).
  std::vector<double> g(n);
  std::vector<double> h(n);
  g[0] = -1.0 / p;
  h[0] = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    g[j] = g[j - 1] / p;
    h[j] = -h[j - 1] * (static_cast<double>(j) - 0.5) / static_cast<double>(j);
  }

  CoeffTable table{CoeffKind::U, p, std::vector<double>(n, 0.0)};
  for (std::size_t k = 0; k < n; ++k) {
    double s = 0.0;
    for (std::size_t j = 0; j <= k; ++j) s += g[j] * h[k - j];
    table.values[k] = s;
  }
  return table;
}

}  // namespace nig
