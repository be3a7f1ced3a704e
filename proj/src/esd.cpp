#include "esdmem/esd.hpp"

#include <algorithm>
#include <cmath>

#include "esdmem/entanglement.hpp"
#include "esdmem/errors.hpp"
#include "esdmem/parallel.hpp"

namespace esdmem {

namespace {

// The three-qubit state N3 is evaluated on.
DensityMatrix n3_target(const LogicalCode& code, const DensityMatrix& rho, const MetricId& metric) {
  if (rho.n_qubits() == 3) return rho;
  if (rho.n_qubits() == 4) {
    const int traced = metric.traced == 0 ? kDefaultN3TracedQubit : metric.traced;
    return partial_trace(rho, {traced});
  }
  throw ArgumentError("N3 is undefined for " + std::string(to_string(code.name())));
}

DensityMatrix pair_state(const DensityMatrix& rho, const QubitSet& pair) {
  return rho.n_qubits() == 2 ? rho : reduce_to(rho, pair);
}

}  // namespace

DensityMatrix evolve(const LogicalCode& code, const NoiseModel& noise, const StoredQubit& q, double p) {
  return apply_noise(noise, p, encode(code, q));
}

double measure(const LogicalCode& code, const DensityMatrix& rho, const StoredQubit& q,
               const MetricId& metric) {
  check_metric(metric, rho.n_qubits());
  switch (metric.kind) {
    case MetricId::Kind::negativity:
      return negativity(rho, metric.qubits);
    case MetricId::Kind::concurrence:
      return concurrence_lambda(pair_state(rho, metric.qubits));
    case MetricId::Kind::n3:
      return tripartite_negativity(n3_target(code, rho, metric));
    case MetricId::Kind::stored_fidelity:
      return stored_fidelity(code, rho, q);
    case MetricId::Kind::state_fidelity:
      return dfs_state_fidelity(rho, code, q);
  }
  throw ArgumentError("unknown metric");
}

double evaluate_metric(const LogicalCode& code, const NoiseModel& noise, const StoredQubit& q,
                       double p, const MetricId& metric) {
  check_metric(metric, code.n_physical());
  return measure(code, evolve(code, noise, q, p), q, metric);
}

double entanglement_signal(const LogicalCode& code, const DensityMatrix& rho, const MetricId& metric) {
  check_metric(metric, rho.n_qubits());
  switch (metric.kind) {
    case MetricId::Kind::negativity:
      return -signed_pt_min(rho, metric.qubits);
    case MetricId::Kind::concurrence:
      return concurrence_lambda(pair_state(rho, metric.qubits));
    case MetricId::Kind::n3:
      return -tripartite_signed(n3_target(code, rho, metric));
    default:
      throw ArgumentError("metric " + metric.to_string() + " has no ESD signal");
  }
}

double reference_fidelity(const LogicalCode& code, const DensityMatrix& rho, const StoredQubit& q) {
  return code.decoder() ? stored_fidelity(code, rho, q) : dfs_state_fidelity(rho, code, q);
}

std::string_view to_string(ThresholdStatus status) {
  switch (status) {
    case ThresholdStatus::crossing:
      return "crossing";
    case ThresholdStatus::no_esd:
      return "no_esd";
    case ThresholdStatus::not_entangled:
      return "not_entangled";
  }
  return "?";
}

ThresholdResult esd_threshold(const LogicalCode& code, const NoiseModel& noise, const StoredQubit& q,
                              const MetricId& metric, const ThresholdOptions& options) {
  if (!metric.is_entanglement()) {
    throw ArgumentError("metric " + metric.to_string() + " has no ESD threshold");
  }
  check_metric(metric, code.n_physical());
  if (options.scan_points < 2) throw ArgumentError("threshold scan needs at least two points");

  const DensityMatrix initial = encode(code, q);
  auto signal_at = [&](double p) {
    return entanglement_signal(code, apply_noise(noise, p, initial), metric);
  };

  ThresholdResult result;
  const double p_end = 1.0 - options.end_guard;
  const auto grid = linspace(0.0, p_end, options.scan_points);

  const double s0 = signal_at(0.0);
  if (s0 <= options.entangled_floor) {
    result.status = ThresholdStatus::not_entangled;
    result.signal = s0;
    return result;
  }

  // First bracket [lo, hi] with signal(lo) > 0 >= signal(hi).
  double lo = 0.0;
  double hi = 0.0;
  bool found = false;
  bool alive = true;
  double smallest = s0;
  for (std::size_t i = 1; i < grid.size(); ++i) {
    const double s = signal_at(grid[i]);
    smallest = std::min(smallest, s);
    const bool now_alive = s > 0.0;
    if (alive && !now_alive) {
      ++result.crossings;
      if (!found) {
        found = true;
        lo = grid[i - 1];
        hi = grid[i];
      }
    }
    alive = now_alive;
  }

  if (!found) {
    result.status = ThresholdStatus::no_esd;
    result.signal = smallest;
    return result;
  }

  while (hi - lo > options.bisection_width) {
    const double mid = 0.5 * (lo + hi);
    if (signal_at(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  result.status = ThresholdStatus::crossing;
  result.p_star = 0.5 * (lo + hi);
  result.bracket_width = hi - lo;
  result.signal = signal_at(result.p_star);
  return result;
}

std::vector<ContourPoint> zero_contour(const LogicalCode& code, const NoiseModel& noise,
                                       const MetricId& metric, double b,
                                       const std::vector<double>& a_grid, int jobs,
                                       const ThresholdOptions& options) {
  std::vector<ContourPoint> out(a_grid.size());
  parallel_for(a_grid.size(), jobs, [&](std::size_t i) {
    out[i] = {a_grid[i], b, esd_threshold(code, noise, {a_grid[i], b}, metric, options)};
  });
  return out;
}

std::vector<SweepRow> sweep(const SweepSpec& spec, int jobs) {
  auto check_grid = [](const std::vector<double>& g, const char* name) {
    if (g.empty()) throw ArgumentError(std::string(name) + " grid is empty");
    for (std::size_t i = 1; i < g.size(); ++i) {
      if (!(g[i] > g[i - 1])) throw ArgumentError(std::string(name) + " grid is not increasing");
    }
  };
  check_grid(spec.a_grid, "a");
  check_grid(spec.b_grid, "b");
  check_grid(spec.p_grid, "p");
  if (spec.p_grid.front() < 0.0 || spec.p_grid.back() > 1.0) {
    throw ArgumentError("p grid must lie in [0, 1]");
  }

  const LogicalCode code = LogicalCode::make(spec.code);
  check_metric(spec.metric, code.n_physical());

  const std::size_t nb = spec.b_grid.size();
  const std::size_t np = spec.p_grid.size();
  std::vector<SweepRow> rows(spec.a_grid.size() * nb * np);
  // One task per (a, b) pair; the encoded state is shared across its p values.
  parallel_for(spec.a_grid.size() * nb, jobs, [&](std::size_t task) {
    const double a = spec.a_grid[task / nb];
    const double b = spec.b_grid[task % nb];
    const StoredQubit q{a, b};
    const DensityMatrix initial = encode(code, q);
    for (std::size_t k = 0; k < np; ++k) {
      const double p = spec.p_grid[k];
      rows[task * np + k] = {a, b, p, measure(code, apply_noise(spec.noise, p, initial), q, spec.metric)};
    }
  });
  return rows;
}

ThresholdFidelity fidelity_at_threshold(const LogicalCode& code, const NoiseModel& noise,
                                        const StoredQubit& q, const MetricId& metric,
                                        const ThresholdOptions& options) {
  const ThresholdResult r = esd_threshold(code, noise, q, metric, options);
  if (r.status != ThresholdStatus::crossing) {
    throw NoThresholdError("no ESD threshold for " + metric.to_string() + " (" +
                           std::string(to_string(r.status)) + ")");
  }
  return {r.p_star, reference_fidelity(code, evolve(code, noise, q, r.p_star), q)};
}

std::vector<double> linspace(double start, double stop, int count) {
  if (count < 2) throw ArgumentError("a grid needs at least two points");
  std::vector<double> out(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    out[static_cast<std::size_t>(i)] = start + (stop - start) * i / (count - 1);
  }
  out.back() = stop;
  return out;
}

}  // namespace esdmem
