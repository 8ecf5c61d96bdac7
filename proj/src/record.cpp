#include "nig/record.hpp"

#include <fmt/format.h>
#include <json.hpp>

namespace nig {

OutputRecord make_record(const Parameters& p, double x, const Policy& policy) {
  const EvalResult lower = cdf(p, x, policy);
  const EvalResult upper = sf(p, x, policy);
  const Geometry g = geometry(p, x);

  OutputRecord r;
  r.x = x;
  r.F = lower.value;
  r.G = upper.value;
  r.method = std::string(to_string(lower.method));
  r.kmax = lower.kmaxUsed;
  r.errorEstimate = lower.errorEstimate;
  r.x0 = g.x0;
  r.z = g.z;
  return r;
}

std::string_view csv_header() noexcept { return "x,F,G,method,kmax,errorEstimate,x0,z"; }

std::string format_double(double v) { return fmt::format("{:.17g}", v); }

std::string to_csv(const OutputRecord& r) {
  return fmt::format("{},{},{},{},{},{},{},{}", format_double(r.x), format_double(r.F),
                     format_double(r.G), r.method, r.kmax, format_double(r.errorEstimate),
                     format_double(r.x0), format_double(r.z));
}

std::string to_json(const OutputRecord& r) {
  const nlohmann::ordered_json j = {
      {"x", r.x},       {"F", r.F},
      {"G", r.G},       {"method", r.method},
      {"kmax", r.kmax}, {"errorEstimate", r.errorEstimate},
      {"x0", r.x0},     {"z", r.z},
  };
  return j.dump();
}

std::string to_plain(const OutputRecord& r) {
  return fmt::format(
      "x = {:.10g}\nF = {:.10g}\nG = {:.10g}\nmethod = {}\nkmax = {}\n"
      "errorEstimate = {:.3g}\nx0 = {:.10g}\nz = {:.10g}",
      r.x, r.F, r.G, r.method, r.kmax, r.errorEstimate, r.x0, r.z);
}

}  // namespace nig
