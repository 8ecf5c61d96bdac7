#pragma once

#include <string>
#include <string_view>

#include "nig/expansion.hpp"

namespace nig {

/// One evaluation as written by the command-line tool: a CSV row or a JSON
/// object with these field names.
struct OutputRecord {
  double x = 0.0;
  double F = 0.0;
  double G = 0.0;
  std::string method;
  int kmax = 0;
  double errorEstimate = 0.0;
  double x0 = 0.0;
  double z = 0.0;
};

/// Evaluates F and G at x under `policy` and fills in the geometry columns.
[[nodiscard]] OutputRecord make_record(const Parameters& p, double x, const Policy& policy);

/// "x,F,G,method,kmax,errorEstimate,x0,z"
[[nodiscard]] std::string_view csv_header() noexcept;

/// Doubles printed with 17 significant digits, independent of the locale.
[[nodiscard]] std::string to_csv(const OutputRecord& r);
[[nodiscard]] std::string to_json(const OutputRecord& r);
/// Human-readable, 10 significant digits.
[[nodiscard]] std::string to_plain(const OutputRecord& r);

/// Shortest "%.17g" rendering used by every machine-readable output.
[[nodiscard]] std::string format_double(double v);

}  // namespace nig
