#pragma once

#include <string_view>
#include <vector>

#include "esdmem/qmatrix.hpp"

namespace esdmem {

// A CPTP map rho -> sum_k K rho K^dagger on a fixed dimension.
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<ComplexMatrix> operators);

  std::size_t dim() const { return dim_; }
  const std::vector<ComplexMatrix>& operators() const { return operators_; }

 private:
  std::size_t dim_;
  std::vector<ComplexMatrix> operators_;
};

enum class NoiseKind { dephasing, depolarizing };

// Independent noise hits each qubit with its own copy of the single-qubit channel.
// Collective noise applies K ⊗ K ⊗ ... ⊗ K for every Kraus operator K, which is
// only trace preserving for unitary-mixture channels (depolarizing).
enum class NoiseScope { independent, collective };

struct NoiseModel {
  NoiseKind kind = NoiseKind::dephasing;
  NoiseScope scope = NoiseScope::independent;
};

std::string_view to_string(NoiseKind kind);
std::string_view to_string(NoiseModel model);
// Accepts "dephasing", "depolarizing", "collective-depolarizing".
NoiseModel parse_noise_model(std::string_view text);

struct TimeMap {
  double kappa;
};

KrausChannel dephasing_channel(double p);
KrausChannel depolarizing_channel(double p);
KrausChannel single_qubit_channel(NoiseKind kind, double p);

bool is_cptp(const KrausChannel& channel, double tol = tol::kStructural);

// Channel on an arbitrary (full-register) dimension.
DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);
// Single-qubit channel acting on one qubit of the register.
DensityMatrix apply_single(const KrausChannel& channel, const DensityMatrix& rho, int qubit);
// Same-strength single-qubit channel applied to every qubit.
DensityMatrix apply_independent(NoiseKind kind, double p, const DensityMatrix& rho);
DensityMatrix apply_noise(const NoiseModel& model, double p, const DensityMatrix& rho);

// All 2^n (dephasing) or 4^n (depolarizing) tensor-product Kraus operators.
KrausChannel product_channel(NoiseKind kind, double p, int n_qubits);
// {c_k K_k^{⊗n}} from the unitary-mixture form of the single-qubit channel.
KrausChannel collective_channel(NoiseKind kind, double p, int n_qubits);

// exp(-i theta/2 sum_j sigma_axis^(j)).
ComplexMatrix collective_rotation(Axis axis, double theta, int n_qubits);
// Uniform mixture of collective z-rotations at theta = 0, pi/4, ..., 7pi/4.
KrausChannel collective_dephasing_mixture(int n_qubits);
// exp(-i theta sigma_x ⊗ ... ⊗ sigma_x): a correlated bit-flip rotation that
// preserves parity and entangles two qubits unless theta is a multiple of pi/2.
ComplexMatrix correlated_flip_rotation(double theta, int n_qubits);

// Scaling-and-squaring Taylor exponential for small dense matrices.
ComplexMatrix matrix_exponential(const ComplexMatrix& a);

// p = 1 - exp(-kappa tau).
double p_of_time(const TimeMap& map, double tau);

}  // namespace esdmem
