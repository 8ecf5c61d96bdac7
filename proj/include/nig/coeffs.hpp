#pragma once

#include <vector>

namespace nig {

/// Which expansion a coefficient table belongs to.
enum class CoeffKind {
  D,  ///< d_k of the uniform (erfc) expansion, indexed by the pole parameter w
  U,  ///< u_k of the plain Laplace expansion, indexed by p = rho^2
};

struct CoeffTable {
  CoeffKind kind;
  double poleParam;            ///< w for D, p for U
  std::vector<double> values;  ///< values[k] for k = 0..kmax
};

/// d_k(w) = (1/2)_k c_k(w) where sum_k c_k sigma^{2k} is the Maclaurin series
/// of g(sigma, w) / g(0, w) and
///     g(sigma, w) = -1 / (sqrt(1 + sigma^2) w (sqrt(1 + sigma^2) + w)).
/// Computed by the linear recursion c_k = -(1/b_0) sum_{j=1..k} b_j c_{k-j}.
///
/// Throws DomainError unless 0 < w <= 1 and kmax >= 0.
[[nodiscard]] CoeffTable d_coefficients(double w, int kmax);

/// Explicit rational forms of d_0..d_4; DomainError for k outside [0, 4].
[[nodiscard]] double d_closed_form(double w, int k);

/// Maclaurin coefficients u_k of 1 / ((sigma^2 - p) sqrt(1 + sigma^2)) in
/// powers of sigma^2, for p = rho^2 in [-1, 0).
[[nodiscard]] CoeffTable u_coefficients(double p, int kmax);

/// (1/2)_0 .. (1/2)_kmax.
[[nodiscard]] std::vector<double> half_pochhammer(int kmax);

/// Below this w the uniform F- expansion is reported unreliable.
inline constexpr double kMinReliableW = 0.05;

}  // namespace nig
