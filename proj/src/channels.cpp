#include "esdmem/channels.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "esdmem/errors.hpp"

namespace esdmem {

namespace {

void check_strength(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw ArgumentError("decoherence strength must lie in [0, 1], got " + std::to_string(p));
  }
}

// Kraus operators of the single-qubit channel written as sum_k |c_k|^2 U_k rho U_k^dagger.
std::vector<std::pair<double, ComplexMatrix>> unitary_mixture(NoiseKind kind, double p) {
  switch (kind) {
    case NoiseKind::depolarizing:
      return {{std::sqrt(1.0 - 0.75 * p), ComplexMatrix::identity(2)},
              {std::sqrt(p) / 2.0, pauli(Axis::x)},
              {std::sqrt(p) / 2.0, pauli(Axis::y)},
              {std::sqrt(p) / 2.0, pauli(Axis::z)}};
    case NoiseKind::dephasing:
      break;
  }
  throw ArgumentError("collective noise is only defined for depolarizing");
}

}  // namespace

KrausChannel::KrausChannel(std::vector<ComplexMatrix> operators) : operators_(std::move(operators)) {
  if (operators_.empty()) throw ArgumentError("a channel needs at least one Kraus operator");
  dim_ = operators_.front().rows();
  for (const auto& k : operators_) {
    if (k.rows() != dim_ || k.cols() != dim_) throw ArgumentError("Kraus operators differ in shape");
  }
}

std::string_view to_string(NoiseKind kind) {
  return kind == NoiseKind::dephasing ? "dephasing" : "depolarizing";
}

std::string_view to_string(NoiseModel model) {
  if (model.scope == NoiseScope::collective) {
    return model.kind == NoiseKind::dephasing ? "collective-dephasing" : "collective-depolarizing";
  }
  return to_string(model.kind);
}

NoiseModel parse_noise_model(std::string_view text) {
  if (text == "dephasing") return {NoiseKind::dephasing, NoiseScope::independent};
  if (text == "depolarizing") return {NoiseKind::depolarizing, NoiseScope::independent};
  if (text == "collective-depolarizing") return {NoiseKind::depolarizing, NoiseScope::collective};
  throw ArgumentError("unknown channel '" + std::string(text) + "'");
}

KrausChannel dephasing_channel(double p) {
  check_strength(p);
  return KrausChannel({ComplexMatrix{{1.0, 0.0}, {0.0, std::sqrt(1.0 - p)}},
                       ComplexMatrix{{0.0, 0.0}, {0.0, std::sqrt(p)}}});
}

KrausChannel depolarizing_channel(double p) {
  check_strength(p);
  const double c = std::sqrt(p) / 2.0;
  return KrausChannel({Complex(std::sqrt(1.0 - 0.75 * p)) * ComplexMatrix::identity(2),
                       Complex(c) * pauli(Axis::x), Complex(c) * pauli(Axis::y),
                       Complex(c) * pauli(Axis::z)});
}

KrausChannel single_qubit_channel(NoiseKind kind, double p) {
  return kind == NoiseKind::dephasing ? dephasing_channel(p) : depolarizing_channel(p);
}

bool is_cptp(const KrausChannel& channel, double tol) {
  ComplexMatrix sum(channel.dim(), channel.dim());
  for (const auto& k : channel.operators()) sum += dagger(k) * k;
  return max_abs_diff(sum, ComplexMatrix::identity(channel.dim())) <= tol;
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.dim() != rho.dim()) throw ArgumentError("channel dimension does not match state");
  ComplexMatrix out(rho.dim(), rho.dim());
  for (const auto& k : channel.operators()) out += k * rho.matrix() * dagger(k);
  return DensityMatrix(rho.n_qubits(), std::move(out));
}

DensityMatrix apply_single(const KrausChannel& channel, const DensityMatrix& rho, int qubit) {
  if (channel.dim() != 2) throw ArgumentError("apply_single needs a single-qubit channel");
  const int n = rho.n_qubits();
  check_qubits({qubit}, n);
  const std::size_t bit = std::size_t{1} << (n - qubit);
  const std::size_t d = rho.dim();
  const ComplexMatrix& in = rho.matrix();

  // Acting on one qubit only mixes the index pairs (i0, i1) that differ in `bit`.
  ComplexMatrix out(d, d);
  ComplexMatrix tmp(d, d);
  for (const auto& k : channel.operators()) {
    // tmp = (K on qubit) * rho
    for (std::size_t r = 0; r < d; ++r) {
      const std::size_t r0 = r & ~bit;
      const std::size_t r1 = r | bit;
      const std::size_t rb = (r & bit) ? 1 : 0;
      for (std::size_t c = 0; c < d; ++c) tmp(r, c) = k(rb, 0) * in(r0, c) + k(rb, 1) * in(r1, c);
    }
    // out += tmp * (K on qubit)^dagger
    for (std::size_t r = 0; r < d; ++r) {
      for (std::size_t c = 0; c < d; ++c) {
        const std::size_t c0 = c & ~bit;
        const std::size_t c1 = c | bit;
        const std::size_t cb = (c & bit) ? 1 : 0;
        out(r, c) += tmp(r, c0) * std::conj(k(cb, 0)) + tmp(r, c1) * std::conj(k(cb, 1));
      }
    }
  }
  return DensityMatrix(n, std::move(out));
}

DensityMatrix apply_independent(NoiseKind kind, double p, const DensityMatrix& rho) {
  const KrausChannel channel = single_qubit_channel(kind, p);
  DensityMatrix out = rho;
  for (int q = 1; q <= rho.n_qubits(); ++q) out = apply_single(channel, out, q);
  return out;
}

DensityMatrix apply_noise(const NoiseModel& model, double p, const DensityMatrix& rho) {
  if (model.scope == NoiseScope::independent) return apply_independent(model.kind, p, rho);
  return apply(collective_channel(model.kind, p, rho.n_qubits()), rho);
}

KrausChannel product_channel(NoiseKind kind, double p, int n_qubits) {
  const KrausChannel single = single_qubit_channel(kind, p);
  std::vector<ComplexMatrix> ops{ComplexMatrix::identity(1)};
  for (int q = 0; q < n_qubits; ++q) {
    std::vector<ComplexMatrix> next;
    next.reserve(ops.size() * single.operators().size());
    for (const auto& prefix : ops)
      for (const auto& k : single.operators()) next.push_back(kron(prefix, k));
    ops = std::move(next);
  }
  return KrausChannel(std::move(ops));
}

KrausChannel collective_channel(NoiseKind kind, double p, int n_qubits) {
  check_strength(p);
  std::vector<ComplexMatrix> ops;
  for (const auto& [weight, u] : unitary_mixture(kind, p)) {
    ComplexMatrix full = ComplexMatrix::identity(1);
    for (int q = 0; q < n_qubits; ++q) full = kron(full, u);
    ops.push_back(Complex(weight) * std::move(full));
  }
  return KrausChannel(std::move(ops));
}

ComplexMatrix matrix_exponential(const ComplexMatrix& a) {
  if (!a.is_square()) throw ArgumentError("matrix exponential of non-square matrix");
  double norm = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < a.cols(); ++j) row += std::abs(a(i, j));
    norm = std::max(norm, row);
  }
  int squarings = 0;
  while (norm > 0.5) {
    norm /= 2.0;
    ++squarings;
  }
  const ComplexMatrix scaled = Complex(std::ldexp(1.0, -squarings)) * a;

  constexpr int kTaylorDegree = 12;
  ComplexMatrix result = ComplexMatrix::identity(a.rows());
  ComplexMatrix term = ComplexMatrix::identity(a.rows());
  for (int k = 1; k <= kTaylorDegree; ++k) {
    term = Complex(1.0 / k) * (term * scaled);
    result += term;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

ComplexMatrix collective_rotation(Axis axis, double theta, int n_qubits) {
  if (n_qubits < 1) throw ArgumentError("collective rotation needs at least one qubit");
  const std::size_t d = std::size_t{1} << n_qubits;
  ComplexMatrix generator(d, d);
  for (int q = 1; q <= n_qubits; ++q) generator += embed(pauli(axis), q, n_qubits);
  return matrix_exponential(Complex(0.0, -theta / 2.0) * generator);
}

KrausChannel collective_dephasing_mixture(int n_qubits) {
  constexpr int kAngles = 8;
  std::vector<ComplexMatrix> ops;
  for (int k = 0; k < kAngles; ++k) {
    const double theta = k * std::numbers::pi / 4.0;
    ops.push_back(Complex(std::sqrt(1.0 / kAngles)) * collective_rotation(Axis::z, theta, n_qubits));
  }
  return KrausChannel(std::move(ops));
}

ComplexMatrix correlated_flip_rotation(double theta, int n_qubits) {
  ComplexMatrix generator = ComplexMatrix::identity(1);
  for (int q = 0; q < n_qubits; ++q) generator = kron(generator, pauli(Axis::x));
  return matrix_exponential(Complex(0.0, -theta) * generator);
}

double p_of_time(const TimeMap& map, double tau) {
  if (!(map.kappa > 0.0)) throw ArgumentError("kappa must be positive");
  if (!(tau >= 0.0)) throw ArgumentError("time must be non-negative");
  return -std::expm1(-map.kappa * tau);
}

}  // namespace esdmem
