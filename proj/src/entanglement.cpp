#include "esdmem/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "esdmem/errors.hpp"

namespace esdmem {

namespace {

constexpr double kImagTolerance = 1e-8;

void require_qubits(const DensityMatrix& rho, int n, const char* what) {
  if (rho.n_qubits() != n) {
    throw ArgumentError(std::string(what) + " needs a " + std::to_string(n) + "-qubit state");
  }
}

}  // namespace

double signed_pt_min(const DensityMatrix& rho, const QubitSet& subset) {
  return eigenvalues_hermitian(partial_transpose(rho, subset)).back();
}

double negativity(const DensityMatrix& rho, const QubitSet& subset) {
  return std::max(0.0, -signed_pt_min(rho, subset));
}

std::array<double, 4> concurrence_spectrum(const DensityMatrix& rho2) {
  require_qubits(rho2, 2, "concurrence");
  const ComplexMatrix yy = kron(pauli(Axis::y), pauli(Axis::y));
  const ComplexMatrix r = rho2.matrix() * yy * conjugate(rho2.matrix()) * yy;
  const auto spectrum = eigenvalues_general(r);

  std::array<double, 4> out{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (std::abs(spectrum[i].imag()) > kImagTolerance) {
      throw NumericalError("concurrence spectrum has a non-real eigenvalue");
    }
    out[i] = std::max(0.0, spectrum[i].real());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double concurrence_lambda(const DensityMatrix& rho2) {
  const auto l = concurrence_spectrum(rho2);
  return std::sqrt(l[0]) - std::sqrt(l[1]) - std::sqrt(l[2]) - std::sqrt(l[3]);
}

double concurrence(const DensityMatrix& rho2) { return std::max(0.0, concurrence_lambda(rho2)); }

double tripartite_signed(const DensityMatrix& rho3) {
  require_qubits(rho3, 3, "tripartite negativity");
  double worst = -1.0;
  for (int q = 1; q <= 3; ++q) worst = std::max(worst, signed_pt_min(rho3, {q}));
  return worst;
}

double tripartite_negativity(const DensityMatrix& rho3) {
  require_qubits(rho3, 3, "tripartite negativity");
  double product = 1.0;
  for (int q = 1; q <= 3; ++q) {
    const double n = negativity(rho3, {q});
    if (n <= 1e-12) return 0.0;
    product *= n;
  }
  return std::cbrt(product);
}

bool is_x_form(const DensityMatrix& rho2, double tol) {
  require_qubits(rho2, 2, "X-form check");
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j)
      if (i != j && i + j != 3 && std::abs(rho2(i, j)) >= tol) return false;
  return true;
}

}  // namespace esdmem
