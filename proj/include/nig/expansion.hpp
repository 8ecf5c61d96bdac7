#pragma once

#include <string_view>

#include "nig/oracle.hpp"
#include "nig/params.hpp"

namespace nig {

enum class Method {
  UniformAsym,  ///< erfc-based uniform expansion (F- may use the Laplace form)
  LaplaceAsym,  ///< plain Laplace expansion of both parts (not selected by cdf())
  QuadSplit,    ///< erfc split plus quadrature of the remainder
  QuadDirect,   ///< direct quadrature of the steepest-descent integral
};

[[nodiscard]] std::string_view to_string(Method m) noexcept;

/// How F- is expanded: the erfc form, the plain Laplace form, or chosen from
/// sMinus (uniform when sMinus <= kLaplaceSwitch).
enum class MinusMode { Uniform, Laplace, Auto };

inline constexpr int kDefaultKmax = 5;
inline constexpr double kLaplaceSwitch = 0.5;
inline constexpr double kDefaultZMin = 30.0;

struct EvalResult {
  double value = 0.0;          ///< probability, clamped to [0, 1]
  Method method = Method::UniformAsym;
  int kmaxUsed = 0;
  double errorEstimate = 0.0;  ///< heuristic, includes any clamping correction
  bool complemented = false;   ///< value computed as 1 - (other tail)
};

/// A truncated series value and the size of its last retained term.
struct SeriesValue {
  double value = 0.0;
  double lastTerm = 0.0;
};

/// F+ ~ erfc(zeta+)/2 - e^{z sigma+^2} tan((nu - tau)/4) / (2 sqrt(pi z)) sum d_k(w+) / z^k.
[[nodiscard]] SeriesValue f_plus_series(const Geometry& g, int kmax);
[[nodiscard]] double f_plus_asym(const Geometry& g, int kmax = kDefaultKmax);

/// G+ = 1 - F+, with erfc(-zeta+) so the right tail keeps relative accuracy.
[[nodiscard]] SeriesValue g_plus_series(const Geometry& g, int kmax);
[[nodiscard]] double g_plus_asym(const Geometry& g, int kmax = kDefaultKmax);

/// F- by the uniform erfc expansion or by Laplace's method.
///
/// The uniform form uses the principal w = |wMinus|; when nu + tau > pi the
/// erfc term and the series change sign together. Throws UnreliableRegionError
/// in uniform mode when |wMinus| < kMinReliableW.
[[nodiscard]] SeriesValue f_minus_series(const Geometry& g, int kmax, MinusMode mode);
[[nodiscard]] double f_minus_asym(const Geometry& g, int kmax = kDefaultKmax,
                                  MinusMode mode = MinusMode::Auto);

/// Mode used for F- when assembling F and G: Uniform, or Laplace where
/// |wMinus| < kMinReliableW.
[[nodiscard]] MinusMode assembly_mode(const Geometry& g) noexcept;

/// F+ + F- and G+ - F-, clamped to [0, 1]. F- uses the uniform form, or
/// Laplace's method where |wMinus| < kMinReliableW.
[[nodiscard]] EvalResult cdf_asym(const Parameters& p, double x, int kmax = kDefaultKmax);
[[nodiscard]] EvalResult sf_asym(const Parameters& p, double x, int kmax = kDefaultKmax);

enum class MethodChoice { Auto, Asymptotic, QuadSplit, QuadDirect };

struct Policy {
  MethodChoice method = MethodChoice::Auto;
  int kmax = kDefaultKmax;
  double tol = kDefaultTol;
  double zMin = kDefaultZMin;
};

/// F(x). Under MethodChoice::Auto, z < zMin or |wMinus| < kMinReliableW
/// falls back to the split quadrature; otherwise the asymptotic expansion is
/// used for the smaller of F and G and the other is obtained as 1 - it.
[[nodiscard]] EvalResult cdf(const Parameters& p, double x, const Policy& policy = {});

/// G(x) = 1 - F(x), with the same method selection as cdf().
[[nodiscard]] EvalResult sf(const Parameters& p, double x, const Policy& policy = {});

}  // namespace nig
