#include "esdmem/codes.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "esdmem/errors.hpp"

namespace esdmem {

namespace {

using std::numbers::pi;

std::size_t index_of(std::string_view bits) {
  std::size_t idx = 0;
  for (char c : bits) idx = (idx << 1) | (c == '1' ? 1u : 0u);
  return idx;
}

// Builds a normalized state from (weight, bitstring) terms.
PureState superpose(int n_qubits, std::initializer_list<std::pair<Complex, std::string_view>> terms) {
  std::vector<Complex> amps(std::size_t{1} << n_qubits);
  for (const auto& [w, bits] : terms) amps[index_of(bits)] += w;
  return PureState::normalized(n_qubits, std::move(amps));
}

PureState combine(const PureState& zero, const PureState& one, const StoredQubit& q) {
  const StoredQubit c = q.canonical();
  const Complex w0 = std::cos(c.a);
  const Complex w1 = std::polar(std::sin(c.a), c.b);
  std::vector<Complex> amps(zero.dim());
  for (std::size_t i = 0; i < amps.size(); ++i) amps[i] = w0 * zero[i] + w1 * one[i];
  return PureState::normalized(zero.n_qubits(), std::move(amps));
}

}  // namespace

StoredQubit StoredQubit::canonical() const {
  double ca = std::fmod(a, pi);
  double cb = b;
  if (ca < 0.0) ca += pi;  // a -> a + pi is a global sign
  if (ca > pi / 2.0) {
    // cos(pi - a)|0> + e^{ib} sin(pi - a)|1> = -(cos a|0> + e^{i(b+pi)} sin a|1>)
    ca = pi - ca;
    cb += pi;
  }
  cb = std::fmod(cb, 2.0 * pi);
  if (cb < 0.0) cb += 2.0 * pi;
  return {ca, cb};
}

PureState StoredQubit::state() const {
  return combine(PureState::basis(1, 0), PureState::basis(1, 1), *this);
}

std::string_view to_string(CodeName name) {
  switch (name) {
    case CodeName::dfs4:
      return "dfs4";
    case CodeName::ns3:
      return "ns3";
    case CodeName::dfs2:
      return "dfs2";
    case CodeName::parity_ns2:
      return "parity-ns2";
  }
  return "?";
}

CodeName parse_code_name(std::string_view text) {
  if (text == "dfs4") return CodeName::dfs4;
  if (text == "ns3") return CodeName::ns3;
  if (text == "dfs2") return CodeName::dfs2;
  if (text == "parity-ns2") return CodeName::parity_ns2;
  throw ArgumentError("unknown code '" + std::string(text) + "'");
}

std::pair<PureState, PureState> dfs4_basis() {
  // (|01> - |10>) ⊗ (|01> - |10>) / 2
  PureState zero = superpose(4, {{1.0, "0101"}, {-1.0, "0110"}, {-1.0, "1001"}, {1.0, "1010"}});
  PureState one = superpose(4, {{2.0, "0011"},
                                {2.0, "1100"},
                                {-1.0, "0101"},
                                {-1.0, "1010"},
                                {-1.0, "0110"},
                                {-1.0, "1001"}});
  return {std::move(zero), std::move(one)};
}

std::vector<PureState> ns3_basis() {
  const Complex w = std::polar(1.0, 2.0 * pi / 3.0);
  const Complex w2 = w * w;
  return {
      superpose(3, {{1.0, "001"}, {w, "010"}, {w2, "100"}}),
      superpose(3, {{1.0, "110"}, {w, "101"}, {w2, "011"}}),
      superpose(3, {{1.0, "001"}, {w2, "010"}, {w, "100"}}),
      superpose(3, {{1.0, "110"}, {w2, "101"}, {w, "011"}}),
  };
}

std::pair<PureState, PureState> dfs2_basis() {
  return {PureState::basis(2, index_of("01")), PureState::basis(2, index_of("10"))};
}

std::pair<PureState, PureState> parity_ns2_states() {
  return {PureState::basis(2, index_of("00")), PureState::basis(2, index_of("01"))};
}

ComplexMatrix parity_projector(int parity) {
  if (parity != 0 && parity != 1) throw ArgumentError("parity must be 0 or 1");
  ComplexMatrix out(4, 4);
  for (std::size_t i = 0; i < 4; ++i) {
    const int bits = static_cast<int>(((i >> 1) ^ i) & 1u);
    if (bits == parity) out(i, i) = 1.0;
  }
  return out;
}

DecoderSpec ns3_decoder() {
  const auto ns = ns3_basis();
  // The S=3/2 quadruplet: m = +3/2, +1/2, -1/2, -3/2 with |0> as spin up.
  const PureState up3 = PureState::basis(3, index_of("000"));
  const PureState up1 = superpose(3, {{1.0, "001"}, {1.0, "010"}, {1.0, "100"}});
  const PureState down1 = superpose(3, {{1.0, "110"}, {1.0, "101"}, {1.0, "011"}});
  const PureState down3 = PureState::basis(3, index_of("111"));

  // Image on (logical qubit 1) ⊗ (gauge qubits 2,3).
  const std::pair<const PureState*, std::string_view> images[] = {
      {&ns[0], "000"}, {&ns[1], "001"}, {&ns[2], "100"}, {&ns[3], "101"},
      {&up3, "010"},   {&down3, "011"}, {&up1, "110"},   {&down1, "111"},
  };
  ComplexMatrix u(8, 8);
  for (const auto& [source, target] : images) {
    const std::size_t row = index_of(target);
    for (std::size_t col = 0; col < 8; ++col) u(row, col) = std::conj((*source)[col]);
  }
  return {std::move(u), 1, {2, 3}};
}

namespace {

DecoderSpec parity_decoder() {
  // CNOT with control 1 and target 2 moves the parity onto qubit 2.
  ComplexMatrix cnot(4, 4);
  cnot(0, 0) = 1.0;
  cnot(1, 1) = 1.0;
  cnot(2, 3) = 1.0;
  cnot(3, 2) = 1.0;
  return {std::move(cnot), 2, {1}};
}

}  // namespace

LogicalCode::LogicalCode(CodeName name, int n_physical, std::vector<PureState> basis,
                         PureState zero, PureState one, std::optional<DecoderSpec> decoder)
    : name_(name),
      n_physical_(n_physical),
      basis_(std::move(basis)),
      zero_(std::move(zero)),
      one_(std::move(one)),
      decoder_(std::move(decoder)) {}

LogicalCode LogicalCode::dfs4() {
  auto [zero, one] = dfs4_basis();
  return LogicalCode(CodeName::dfs4, 4, {zero, one}, zero, one, std::nullopt);
}

LogicalCode LogicalCode::ns3() {
  auto basis = ns3_basis();
  PureState zero = basis[1];
  PureState one = basis[3];
  return LogicalCode(CodeName::ns3, 3, std::move(basis), std::move(zero), std::move(one),
                     ns3_decoder());
}

LogicalCode LogicalCode::dfs2() {
  auto [zero, one] = dfs2_basis();
  return LogicalCode(CodeName::dfs2, 2, {zero, one}, zero, one, std::nullopt);
}

LogicalCode LogicalCode::parity_ns2() {
  auto [zero, one] = parity_ns2_states();
  return LogicalCode(CodeName::parity_ns2, 2, {zero, one}, zero, one, parity_decoder());
}

LogicalCode LogicalCode::make(CodeName name) {
  switch (name) {
    case CodeName::dfs4:
      return dfs4();
    case CodeName::ns3:
      return ns3();
    case CodeName::dfs2:
      return dfs2();
    case CodeName::parity_ns2:
      return parity_ns2();
  }
  throw ArgumentError("unknown code");
}

PureState LogicalCode::encoded_state(const StoredQubit& q) const { return combine(zero_, one_, q); }

DensityMatrix encode(const LogicalCode& code, const StoredQubit& q) {
  return DensityMatrix(code.encoded_state(q));
}

DensityMatrix decode_logical(const LogicalCode& code, const DensityMatrix& rho) {
  if (!code.decoder()) {
    throw ArgumentError(std::string(to_string(code.name())) + " has no decoder");
  }
  if (rho.n_qubits() != code.n_physical()) throw ArgumentError("state size does not match code");
  const DecoderSpec& dec = *code.decoder();
  return reduce_to(conjugate_by(dec.decode_unitary, rho), {dec.logical_qubit});
}

double stored_fidelity(const LogicalCode& code, const DensityMatrix& rho, const StoredQubit& q) {
  return fidelity_pure(decode_logical(code, rho), q.state());
}

double ns3_stored_fidelity(const DensityMatrix& rho, const StoredQubit& q) {
  if (rho.n_qubits() != 3) throw ArgumentError("NS3 stored fidelity needs a 3-qubit state");
  static const LogicalCode code = LogicalCode::ns3();
  return stored_fidelity(code, rho, q);
}

double dfs_state_fidelity(const DensityMatrix& rho, const LogicalCode& code, const StoredQubit& q) {
  if (rho.n_qubits() != code.n_physical()) throw ArgumentError("state size does not match code");
  return fidelity_pure(rho, code.encoded_state(q));
}

double closed_form_fidelity(CodeName code, NoiseKind kind, const StoredQubit& q, double p) {
  if (!(p >= 0.0 && p <= 1.0)) throw ArgumentError("p must lie in [0, 1]");
  const double a = q.a;
  const double b = q.b;
  if (code == CodeName::dfs4 && kind == NoiseKind::dephasing) {
    const double s2a = std::sin(2.0 * a);
    return (48.0 + p * (11.0 * p - 48.0) +
            p * p * (std::cos(4.0 * a) + 2.0 * std::cos(2.0 * b) * s2a * s2a)) /
           48.0;
  }
  if (code == CodeName::dfs4 && kind == NoiseKind::depolarizing) {
    const double c4a = std::cos(4.0 * a);
    const double q1 = p * p * (p - 1.0) * (p - 1.0) * (c4a + std::cos(2.0 * b) * (1.0 - c4a));
    const double poly = 8.0 * std::pow(p, 4) - 34.0 * std::pow(p, 3) + 59.0 * p * p - 48.0 * p + 16.0;
    return (q1 + poly) / 16.0;
  }
  if (code == CodeName::ns3 && kind == NoiseKind::dephasing) {
    return (12.0 - 5.0 * p - p * (2.0 * std::cos(2.0 * a) + std::cos(4.0 * a))) / 12.0;
  }
  if (code == CodeName::ns3 && kind == NoiseKind::depolarizing) {
    return (4.0 - p * (5.0 + p * (p - 4.0)) - p * (p - 1.0) * (p - 1.0) * std::cos(4.0 * a)) / 4.0;
  }
  throw ArgumentError("no closed-form fidelity for " + std::string(to_string(code)) + " under " +
                      std::string(to_string(kind)));
}

}  // namespace esdmem
