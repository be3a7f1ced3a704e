#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace esdmem {

using Complex = std::complex<double>;

namespace tol {
// Structural checks: Hermiticity, trace, norm, unitarity, completeness.
inline constexpr double kStructural = 1e-12;
// Accuracy contract of the eigensolvers.
inline constexpr double kEigen = 1e-10;
// Smallest eigenvalue a density matrix may carry before it is rejected.
inline constexpr double kPsdSlack = -1e-10;
}  // namespace tol

// Qubits are numbered 1..n; qubit 1 is the most significant bit of a basis index.
using QubitSet = std::vector<int>;

enum class Axis { x, y, z };

class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols);
  ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries);
  ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows);

  static ComplexMatrix identity(std::size_t n);
  static ComplexMatrix diagonal(std::span<const Complex> diag);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Complex> entries() const { return data_; }
  std::span<Complex> entries() { return data_; }

  Complex trace() const;

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(Complex scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Complex> data_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, ComplexMatrix a);
std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v);

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix dagger(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
// Largest |M - M^dagger| entry.
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol = tol::kStructural);
bool is_unitary(const ComplexMatrix& m, double tol = tol::kStructural);

ComplexMatrix pauli(Axis axis);
// op acting on `qubit` of an n-qubit register, identity elsewhere.
ComplexMatrix embed(const ComplexMatrix& op, int qubit, int n_qubits);

// Throws ArgumentError unless every index is in 1..n and unique.
void check_qubits(const QubitSet& qubits, int n_qubits);

class PureState {
 public:
  // Amplitudes must have length 2^n and unit norm (within tol::kStructural).
  PureState(int n_qubits, std::vector<Complex> amplitudes);

  static PureState basis(int n_qubits, std::size_t index);
  // Scales `amplitudes` to unit norm before validating.
  static PureState normalized(int n_qubits, std::vector<Complex> amplitudes);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

  // <this|other>
  Complex inner(const PureState& other) const;
  ComplexMatrix projector() const;

 private:
  int n_qubits_;
  std::vector<Complex> amplitudes_;
};

class DensityMatrix {
 public:
  // Validates shape, Hermiticity and unit trace. Positivity is checked by is_valid().
  DensityMatrix(int n_qubits, ComplexMatrix mat);
  explicit DensityMatrix(const PureState& psi);

  static DensityMatrix maximally_mixed(int n_qubits);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return mat_.rows(); }
  const ComplexMatrix& matrix() const { return mat_; }
  Complex operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

  double purity() const;
  // Full check including min eigenvalue >= tol::kPsdSlack.
  bool is_valid() const;

 private:
  int n_qubits_;
  ComplexMatrix mat_;
};

// U rho U^dagger.
DensityMatrix conjugate_by(const ComplexMatrix& u, const DensityMatrix& rho);

// Traces out `traced` (nonempty proper subset); remaining qubits keep their order.
DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSet& traced);
// Keeps only `kept` (in ascending order), tracing everything else.
DensityMatrix reduce_to(const DensityMatrix& rho, const QubitSet& kept);

ComplexMatrix partial_transpose(const DensityMatrix& rho, const QubitSet& subset);

// Real eigenvalues of a Hermitian matrix in descending order (cyclic Jacobi).
std::vector<double> eigenvalues_hermitian(const ComplexMatrix& h);
// Full complex spectrum of a square matrix (Hessenberg + shifted QR), unordered.
std::vector<Complex> eigenvalues_general(const ComplexMatrix& m);

// <psi|rho|psi> clamped to [0, 1].
double fidelity_pure(const DensityMatrix& rho, const PureState& psi);

}  // namespace esdmem
