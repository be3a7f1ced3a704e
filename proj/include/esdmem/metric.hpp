#pragma once

#include <string>
#include <string_view>

#include "esdmem/qmatrix.hpp"

namespace esdmem {

// Text form: neg:<i>[,<j>...], conc:<i>,<j>, n3[:trace<k>], fid, sfid.
struct MetricId {
  enum class Kind { negativity, concurrence, n3, stored_fidelity, state_fidelity };

  Kind kind = Kind::negativity;
  // Partial-transpose subset (negativity) or the qubit pair (concurrence).
  QubitSet qubits;
  // Qubit traced before N3 on four-qubit states; 0 selects the default.
  int traced = 0;

  static MetricId negativity(QubitSet subset) { return {Kind::negativity, std::move(subset), 0}; }
  static MetricId concurrence(int i, int j) { return {Kind::concurrence, {i, j}, 0}; }
  static MetricId n3(int traced_qubit = 0) { return {Kind::n3, {}, traced_qubit}; }
  static MetricId stored_fidelity() { return {Kind::stored_fidelity, {}, 0}; }
  static MetricId state_fidelity() { return {Kind::state_fidelity, {}, 0}; }

  static MetricId parse(std::string_view text);
  std::string to_string() const;

  bool is_entanglement() const { return kind == Kind::negativity || kind == Kind::concurrence || kind == Kind::n3; }

  friend bool operator==(const MetricId&, const MetricId&) = default;
};

// Qubit traced before N3 on a four-qubit state when none is requested.
inline constexpr int kDefaultN3TracedQubit = 4;

// Throws ArgumentError unless the metric's qubit indices fit an n-qubit register.
void check_metric(const MetricId& metric, int n_qubits);

}  // namespace esdmem
