#include "esdmem/qmatrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "esdmem/errors.hpp"

namespace esdmem {

namespace {

std::size_t dim_for(int n_qubits) {
  if (n_qubits < 1 || n_qubits > 5) {
    throw ArgumentError("qubit count must be in 1..5, got " + std::to_string(n_qubits));
  }
  return std::size_t{1} << n_qubits;
}

// Bit of a basis index that belongs to 1-based `qubit`.
std::size_t qubit_mask(int qubit, int n_qubits) { return std::size_t{1} << (n_qubits - qubit); }

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows_ * cols_) {
    throw ArgumentError("entry count does not match matrix shape");
  }
}

ComplexMatrix::ComplexMatrix(std::initializer_list<std::initializer_list<Complex>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& row : rows) {
    if (row.size() != cols_) throw ArgumentError("ragged matrix initializer");
    data_.insert(data_.end(), row.begin(), row.end());
  }
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix ComplexMatrix::diagonal(std::span<const Complex> diag) {
  ComplexMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Complex ComplexMatrix::trace() const {
  if (!is_square()) throw ArgumentError("trace of non-square matrix");
  Complex t = 0.0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ArgumentError("shape mismatch in +");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ArgumentError("shape mismatch in -");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= other.data_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(Complex scale) {
  for (auto& x : data_) x *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }

ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw ArgumentError("shape mismatch in matrix product");
  ComplexMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Complex aik = a(i, k);
      if (aik == Complex{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += aik * b(k, j);
    }
  }
  return out;
}

std::vector<Complex> operator*(const ComplexMatrix& a, std::span<const Complex> v) {
  if (a.cols() != v.size()) throw ArgumentError("shape mismatch in matrix-vector product");
  std::vector<Complex> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    Complex acc = 0.0;
    for (std::size_t k = 0; k < a.cols(); ++k) acc += a(i, k) * v[k];
    out[i] = acc;
  }
  return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

ComplexMatrix dagger(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = std::conj(a(i, j));
  return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix out = a;
  for (auto& x : out.entries()) x = std::conj(x);
  return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix out(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(j, i) = a(i, j);
  return out;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ArgumentError("shape mismatch in diff");
  double worst = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    worst = std::max(worst, std::abs(a.entries()[i] - b.entries()[i]));
  return worst;
}

double hermiticity_defect(const ComplexMatrix& m) {
  if (!m.is_square()) throw ArgumentError("hermiticity of non-square matrix");
  double worst = 0.0;
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = i; j < m.cols(); ++j)
      worst = std::max(worst, std::abs(m(i, j) - std::conj(m(j, i))));
  return worst;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return m.is_square() && hermiticity_defect(m) <= tol;
}

bool is_unitary(const ComplexMatrix& m, double tol) {
  if (!m.is_square()) return false;
  return max_abs_diff(dagger(m) * m, ComplexMatrix::identity(m.rows())) <= tol;
}

ComplexMatrix pauli(Axis axis) {
  const Complex i{0.0, 1.0};
  switch (axis) {
    case Axis::x:
      return {{0.0, 1.0}, {1.0, 0.0}};
    case Axis::y:
      return {{0.0, -i}, {i, 0.0}};
    case Axis::z:
      return {{1.0, 0.0}, {0.0, -1.0}};
  }
  throw ArgumentError("unknown axis");
}

ComplexMatrix embed(const ComplexMatrix& op, int qubit, int n_qubits) {
  check_qubits({qubit}, n_qubits);
  ComplexMatrix out = ComplexMatrix::identity(1);
  for (int q = 1; q <= n_qubits; ++q) {
    out = kron(out, q == qubit ? op : ComplexMatrix::identity(op.rows()));
  }
  return out;
}

void check_qubits(const QubitSet& qubits, int n_qubits) {
  for (std::size_t i = 0; i < qubits.size(); ++i) {
    if (qubits[i] < 1 || qubits[i] > n_qubits) {
      throw ArgumentError("qubit index " + std::to_string(qubits[i]) + " outside 1.." +
                          std::to_string(n_qubits));
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (qubits[j] == qubits[i]) throw ArgumentError("duplicate qubit index");
    }
  }
}

// ---------------------------------------------------------------------------

PureState::PureState(int n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() != dim_for(n_qubits)) throw ArgumentError("amplitude count is not 2^n");
  double norm2 = 0.0;
  for (const auto& x : amplitudes_) norm2 += std::norm(x);
  if (std::abs(norm2 - 1.0) > tol::kStructural) throw ArgumentError("state is not normalized");
}

PureState PureState::basis(int n_qubits, std::size_t index) {
  std::vector<Complex> amps(dim_for(n_qubits));
  if (index >= amps.size()) throw ArgumentError("basis index out of range");
  amps[index] = 1.0;
  return PureState(n_qubits, std::move(amps));
}

PureState PureState::normalized(int n_qubits, std::vector<Complex> amplitudes) {
  double norm2 = 0.0;
  for (const auto& x : amplitudes) norm2 += std::norm(x);
  if (norm2 == 0.0) throw ArgumentError("cannot normalize the zero vector");
  const double scale = 1.0 / std::sqrt(norm2);
  for (auto& x : amplitudes) x *= scale;
  return PureState(n_qubits, std::move(amplitudes));
}

Complex PureState::inner(const PureState& other) const {
  if (other.dim() != dim()) throw ArgumentError("dimension mismatch in inner product");
  Complex acc = 0.0;
  for (std::size_t i = 0; i < dim(); ++i) acc += std::conj(amplitudes_[i]) * other.amplitudes_[i];
  return acc;
}

ComplexMatrix PureState::projector() const {
  ComplexMatrix out(dim(), dim());
  for (std::size_t i = 0; i < dim(); ++i)
    for (std::size_t j = 0; j < dim(); ++j) out(i, j) = amplitudes_[i] * std::conj(amplitudes_[j]);
  return out;
}

// ---------------------------------------------------------------------------

DensityMatrix::DensityMatrix(int n_qubits, ComplexMatrix mat)
    : n_qubits_(n_qubits), mat_(std::move(mat)) {
  const std::size_t d = dim_for(n_qubits);
  if (mat_.rows() != d || mat_.cols() != d) throw ArgumentError("density matrix must be 2^n x 2^n");
  if (hermiticity_defect(mat_) > tol::kStructural) {
    throw ArgumentError("density matrix is not Hermitian");
  }
  if (std::abs(mat_.trace() - 1.0) > tol::kStructural) {
    throw ArgumentError("density matrix trace is not 1");
  }
}

DensityMatrix::DensityMatrix(const PureState& psi) : DensityMatrix(psi.n_qubits(), psi.projector()) {}

DensityMatrix DensityMatrix::maximally_mixed(int n_qubits) {
  const std::size_t d = dim_for(n_qubits);
  return DensityMatrix(n_qubits, Complex(1.0 / static_cast<double>(d)) * ComplexMatrix::identity(d));
}

double DensityMatrix::purity() const {
  double acc = 0.0;
  for (const auto& x : mat_.entries()) acc += std::norm(x);
  return acc;
}

bool DensityMatrix::is_valid() const {
  if (hermiticity_defect(mat_) > tol::kStructural) return false;
  if (std::abs(mat_.trace() - 1.0) > tol::kStructural) return false;
  return eigenvalues_hermitian(mat_).back() >= tol::kPsdSlack;
}

DensityMatrix conjugate_by(const ComplexMatrix& u, const DensityMatrix& rho) {
  return DensityMatrix(rho.n_qubits(), u * rho.matrix() * dagger(u));
}

DensityMatrix reduce_to(const DensityMatrix& rho, const QubitSet& kept) {
  const int n = rho.n_qubits();
  check_qubits(kept, n);
  if (kept.empty() || static_cast<int>(kept.size()) == n) {
    throw ArgumentError("partial trace needs a nonempty proper subset");
  }
  QubitSet keep = kept;
  std::sort(keep.begin(), keep.end());
  QubitSet traced;
  for (int q = 1; q <= n; ++q) {
    if (!std::binary_search(keep.begin(), keep.end(), q)) traced.push_back(q);
  }

  // Scatter a compact index over the given qubits into a full basis index.
  auto scatter_table = [n](const QubitSet& qubits) {
    const std::size_t count = std::size_t{1} << qubits.size();
    std::vector<std::size_t> table(count);
    for (std::size_t c = 0; c < count; ++c) {
      std::size_t full = 0;
      for (std::size_t k = 0; k < qubits.size(); ++k) {
        // Compact bit k counts from the most significant kept qubit.
        if (c & (std::size_t{1} << (qubits.size() - 1 - k))) full |= qubit_mask(qubits[k], n);
      }
      table[c] = full;
    }
    return table;
  };
  const auto keep_bits = scatter_table(keep);
  const auto trace_bits = scatter_table(traced);

  ComplexMatrix out(keep_bits.size(), keep_bits.size());
  for (std::size_t r = 0; r < keep_bits.size(); ++r) {
    for (std::size_t c = 0; c < keep_bits.size(); ++c) {
      Complex acc = 0.0;
      for (const std::size_t t : trace_bits) acc += rho(keep_bits[r] | t, keep_bits[c] | t);
      out(r, c) = acc;
    }
  }
  return DensityMatrix(static_cast<int>(keep.size()), std::move(out));
}

DensityMatrix partial_trace(const DensityMatrix& rho, const QubitSet& traced) {
  const int n = rho.n_qubits();
  check_qubits(traced, n);
  if (traced.empty() || static_cast<int>(traced.size()) == n) {
    throw ArgumentError("partial trace needs a nonempty proper subset");
  }
  QubitSet kept;
  for (int q = 1; q <= n; ++q) {
    if (std::find(traced.begin(), traced.end(), q) == traced.end()) kept.push_back(q);
  }
  return reduce_to(rho, kept);
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, const QubitSet& subset) {
  const int n = rho.n_qubits();
  check_qubits(subset, n);
  if (subset.empty()) throw ArgumentError("partial transpose needs a nonempty subset");
  std::size_t mask = 0;
  for (int q : subset) mask |= qubit_mask(q, n);

  const std::size_t d = rho.dim();
  ComplexMatrix out(d, d);
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < d; ++j) {
      const std::size_t si = (i & ~mask) | (j & mask);
      const std::size_t sj = (j & ~mask) | (i & mask);
      out(i, j) = rho(si, sj);
    }
  }
  return out;
}

double fidelity_pure(const DensityMatrix& rho, const PureState& psi) {
  if (rho.dim() != psi.dim()) throw ArgumentError("dimension mismatch in fidelity");
  const auto rho_psi = rho.matrix() * psi.amplitudes();
  Complex acc = 0.0;
  for (std::size_t i = 0; i < psi.dim(); ++i) acc += std::conj(psi[i]) * rho_psi[i];
  return std::clamp(acc.real(), 0.0, 1.0);
}

}  // namespace esdmem
