#pragma once

namespace nig {

/// Complementary error function of a real argument, relative error ~1e-16
/// wherever the result does not underflow (x < ~26.5).
[[nodiscard]] double erfc(double x) noexcept;

/// Scaled complementary error function exp(x^2) erfc(x).
///
/// Finite for every x >= kErfcxMinArgument. Below that, 2 exp(x^2) exceeds
/// the largest double and OverflowError is thrown.
[[nodiscard]] double erfcx(double x);

/// -sqrt(log(DBL_MAX / 2)) = -26.6287...: the most negative argument for which
/// erfcx(x) = 2 exp(x^2) - erfcx(-x) is representable.
extern const double kErfcxMinArgument;

}  // namespace nig
