#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "esdmem/channels.hpp"
#include "esdmem/qmatrix.hpp"

namespace esdmem {

// cos(a)|0> + e^{ib} sin(a)|1>.
struct StoredQubit {
  double a = 0.0;
  double b = 0.0;

  // Folds (a, b) into a in [0, pi/2], b in [0, 2pi) without changing the ray.
  StoredQubit canonical() const;
  PureState state() const;
};

enum class CodeName { dfs4, ns3, dfs2, parity_ns2 };

std::string_view to_string(CodeName name);
// Accepts "dfs4", "ns3", "dfs2", "parity-ns2".
CodeName parse_code_name(std::string_view text);

// Maps the code space onto (logical qubit) ⊗ (gauge qubits) so the gauge can be traced out.
struct DecoderSpec {
  ComplexMatrix decode_unitary;
  int logical_qubit = 1;
  QubitSet gauge_qubits;
};

class LogicalCode {
 public:
  static LogicalCode dfs4();
  static LogicalCode ns3();
  static LogicalCode dfs2();
  static LogicalCode parity_ns2();
  static LogicalCode make(CodeName name);

  CodeName name() const { return name_; }
  int n_physical() const { return n_physical_; }
  // DFS codes: the two logical states. NS3: |0,-1/2>, |1,-1/2> (the encoding gauge).
  const PureState& logical_zero() const { return zero_; }
  const PureState& logical_one() const { return one_; }
  // Every stored basis vector; NS3 lists |0,+1/2>, |0,-1/2>, |1,+1/2>, |1,-1/2>.
  const std::vector<PureState>& basis() const { return basis_; }
  const std::optional<DecoderSpec>& decoder() const { return decoder_; }

  PureState encoded_state(const StoredQubit& q) const;

 private:
  LogicalCode(CodeName name, int n_physical, std::vector<PureState> basis, PureState zero,
              PureState one, std::optional<DecoderSpec> decoder);

  CodeName name_;
  int n_physical_;
  std::vector<PureState> basis_;
  PureState zero_;
  PureState one_;
  std::optional<DecoderSpec> decoder_;
};

// |0>_L, |1>_L of the four-qubit DFS.
std::pair<PureState, PureState> dfs4_basis();
// |0,+1/2>, |0,-1/2>, |1,+1/2>, |1,-1/2> of the three-qubit NS.
std::vector<PureState> ns3_basis();
// |01>, |10>.
std::pair<PureState, PureState> dfs2_basis();
// |00> (even parity, logical 0) and |01> (odd parity, logical 1).
std::pair<PureState, PureState> parity_ns2_states();
// Projector onto the even (parity = 0) or odd two-qubit parity sector.
ComplexMatrix parity_projector(int parity);

// The S=1/2 decoder of the three-qubit NS; logical qubit 1, gauge qubits {2, 3}.
DecoderSpec ns3_decoder();

DensityMatrix encode(const LogicalCode& code, const StoredQubit& q);

// Decodes with the code's DecoderSpec and returns the logical qubit's state.
DensityMatrix decode_logical(const LogicalCode& code, const DensityMatrix& rho);

// Fidelity of the decoded logical qubit with the stored input state (NS3).
double ns3_stored_fidelity(const DensityMatrix& rho, const StoredQubit& q);
// Same for any code that carries a decoder.
double stored_fidelity(const LogicalCode& code, const DensityMatrix& rho, const StoredQubit& q);
// <psi(a,b)|rho|psi(a,b)> against the encoded pure state.
double dfs_state_fidelity(const DensityMatrix& rho, const LogicalCode& code, const StoredQubit& q);

// Closed-form fidelity under independent noise; DFS4 and NS3 only.
double closed_form_fidelity(CodeName code, NoiseKind kind, const StoredQubit& q, double p);

}  // namespace esdmem
