#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "esdmem/esd.hpp"

namespace esdmem {

// 12 significant digits in scientific notation ("%.11e").
std::string format_number(double value);

// Header "a,b,p,metric,value".
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows, const MetricId& metric,
                     bool header = true);

// Header "a,b,status,p_star"; with `metric` set, a trailing "metric" column is added.
void write_contour_csv(std::ostream& out, const std::vector<ContourPoint>& points,
                       const std::optional<MetricId>& metric = std::nullopt, bool header = true);

// key,value lines describing one threshold search.
void write_threshold(std::ostream& out, const ThresholdResult& result,
                     const std::optional<double>& fidelity_at_p_star);

}  // namespace esdmem
