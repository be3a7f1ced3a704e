#include "esdmem/csv.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

namespace esdmem {

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  // -0 prints as "-0.0..."; fold it so equal values print identically.
  if (value == 0.0) value = 0.0;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.11e", value);
  return buf;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, const MetricId& metric,
                     bool header) {
  if (header) out << "a,b,p,metric,value\n";
  const std::string name = metric.to_string();
  for (const auto& r : rows) {
    out << format_number(r.a) << ',' << format_number(r.b) << ',' << format_number(r.p) << ",\""
        << name << "\"," << format_number(r.value) << '\n';
  }
}

void write_contour_csv(std::ostream& out, const std::vector<ContourPoint>& points,
                       const std::optional<MetricId>& metric, bool header) {
  if (header) out << (metric ? "a,b,status,p_star,metric\n" : "a,b,status,p_star\n");
  for (const auto& pt : points) {
    out << format_number(pt.a) << ',' << format_number(pt.b) << ',' << to_string(pt.result.status)
        << ',' << format_number(pt.result.p_star);
    if (metric) out << ",\"" << metric->to_string() << '"';
    out << '\n';
  }
}

void write_threshold(std::ostream& out, const ThresholdResult& result,
                     const std::optional<double>& fidelity_at_p_star) {
  out << "status," << to_string(result.status) << '\n';
  out << "p_star," << format_number(result.p_star) << '\n';
  out << "bracket_width," << format_number(result.bracket_width) << '\n';
  out << "signal," << format_number(result.signal) << '\n';
  out << "crossings," << result.crossings << '\n';
  out << "multiple_crossings," << (result.multiple_crossings() ? "true" : "false") << '\n';
  if (fidelity_at_p_star) out << "fidelity_at_p_star," << format_number(*fidelity_at_p_star) << '\n';
}

}  // namespace esdmem
