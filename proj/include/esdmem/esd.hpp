#pragma once

#include <limits>
#include <string_view>
#include <vector>

#include "esdmem/channels.hpp"
#include "esdmem/codes.hpp"
#include "esdmem/metric.hpp"

namespace esdmem {

// Noisy state of `code` holding `q` after strength-p noise.
DensityMatrix evolve(const LogicalCode& code, const NoiseModel& noise, const StoredQubit& q, double p);

// Value of `metric` on an already evolved state of `code`.
double measure(const LogicalCode& code, const DensityMatrix& rho, const StoredQubit& q,
               const MetricId& metric);

// encode -> noise -> metric. Pair metrics reduce the register to the pair first.
double evaluate_metric(const LogicalCode& code, const NoiseModel& noise, const StoredQubit& q,
                       double p, const MetricId& metric);

// Signed ESD objective: positive while entangled, <= 0 once the metric has died.
// negativity: -lambda_min(PT); concurrence: Lambda; N3: -max_i lambda_min(PT_i).
double entanglement_signal(const LogicalCode& code, const DensityMatrix& rho, const MetricId& metric);

// Fidelity that the code is judged by: decoded stored fidelity for codes with a
// decoder (NS3, parity NS2), state fidelity otherwise.
double reference_fidelity(const LogicalCode& code, const DensityMatrix& rho, const StoredQubit& q);

struct ThresholdOptions {
  int scan_points = 512;
  // Scan stops at 1 - end_guard; ESD has to happen before p reaches 1.
  double end_guard = 1e-6;
  double bisection_width = 1e-8;
  // A signal at or below this at p = 0 means there was nothing to lose.
  double entangled_floor = 1e-12;
};

enum class ThresholdStatus { crossing, no_esd, not_entangled };

std::string_view to_string(ThresholdStatus status);

struct ThresholdResult {
  ThresholdStatus status = ThresholdStatus::no_esd;
  double p_star = std::numeric_limits<double>::quiet_NaN();
  double bracket_width = std::numeric_limits<double>::quiet_NaN();
  // Signal at p_star when crossing, at p = 0 when not entangled, minimum over the scan otherwise.
  double signal = std::numeric_limits<double>::quiet_NaN();
  // Number of entangled -> disentangled transitions seen on the scan grid.
  int crossings = 0;

  bool multiple_crossings() const { return crossings > 1; }
};

ThresholdResult esd_threshold(const LogicalCode& code, const NoiseModel& noise, const StoredQubit& q,
                              const MetricId& metric, const ThresholdOptions& options = {});

struct ContourPoint {
  double a;
  double b;
  ThresholdResult result;
};

std::vector<ContourPoint> zero_contour(const LogicalCode& code, const NoiseModel& noise,
                                       const MetricId& metric, double b,
                                       const std::vector<double>& a_grid, int jobs = 1,
                                       const ThresholdOptions& options = {});

struct SweepSpec {
  CodeName code = CodeName::dfs4;
  NoiseModel noise;
  MetricId metric;
  std::vector<double> a_grid;
  std::vector<double> b_grid;
  std::vector<double> p_grid;
};

struct SweepRow {
  double a;
  double b;
  double p;
  double value;
};

// Rows ordered a (outer), b, p (inner) regardless of `jobs`.
std::vector<SweepRow> sweep(const SweepSpec& spec, int jobs = 1);

struct ThresholdFidelity {
  double p_star;
  double fidelity;
};

// Throws NoThresholdError when the metric shows no crossing.
ThresholdFidelity fidelity_at_threshold(const LogicalCode& code, const NoiseModel& noise,
                                        const StoredQubit& q, const MetricId& metric,
                                        const ThresholdOptions& options = {});

// Uniform grid of `count` >= 2 points from start to stop inclusive.
std::vector<double> linspace(double start, double stop, int count);

}  // namespace esdmem
