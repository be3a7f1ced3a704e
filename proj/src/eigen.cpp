#include <algorithm>
#include <cmath>
#include <limits>

#include "esdmem/errors.hpp"
#include "esdmem/qmatrix.hpp"

namespace esdmem {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

double off_diagonal_norm2(const ComplexMatrix& a) {
  double acc = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) acc += std::norm(a(i, j));
  return acc;
}

// One complex Jacobi rotation zeroing a(p, q). The rotation is U = D * R where
// D removes the phase of a(p, q) and R is the real symmetric Jacobi rotation.
void jacobi_rotate(ComplexMatrix& a, std::size_t p, std::size_t q) {
  const Complex apq = a(p, q);
  const double mag = std::abs(apq);
  if (mag == 0.0) return;
  const Complex phase = apq / mag;  // e^{i phi}
  const Complex phase_conj = std::conj(phase);

  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double theta = (aqq - app) / (2.0 * mag);
  const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;

  const std::size_t n = a.rows();
  for (std::size_t k = 0; k < n; ++k) {
    const Complex akp = a(k, p);
    const Complex akq = a(k, q);
    a(k, p) = c * akp - s * phase_conj * akq;
    a(k, q) = s * akp + c * phase_conj * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const Complex apk = a(p, k);
    const Complex aqk = a(q, k);
    a(p, k) = c * apk - s * phase * aqk;
    a(q, k) = s * apk + c * phase * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();
}

// Householder reduction to upper Hessenberg form, in place.
void reduce_to_hessenberg(ComplexMatrix& h) {
  const std::size_t n = h.rows();
  if (n < 3) return;
  std::vector<Complex> v(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double xnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) xnorm2 += std::norm(h(i, k));
    const double xnorm = std::sqrt(xnorm2);
    if (xnorm == 0.0) continue;
    const Complex x0 = h(k + 1, k);
    const Complex unit = std::abs(x0) == 0.0 ? Complex{1.0} : x0 / std::abs(x0);
    const Complex alpha = -unit * xnorm;

    double vnorm2 = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) {
      v[i] = h(i, k) - (i == k + 1 ? alpha : Complex{});
      vnorm2 += std::norm(v[i]);
    }
    if (vnorm2 == 0.0) continue;
    const double vnorm = std::sqrt(vnorm2);
    for (std::size_t i = k + 1; i < n; ++i) v[i] /= vnorm;

    // H <- (I - 2 v v^dagger) H
    for (std::size_t j = 0; j < n; ++j) {
      Complex dot = 0.0;
      for (std::size_t i = k + 1; i < n; ++i) dot += std::conj(v[i]) * h(i, j);
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= 2.0 * v[i] * dot;
    }
    // H <- H (I - 2 v v^dagger)
    for (std::size_t i = 0; i < n; ++i) {
      Complex dot = 0.0;
      for (std::size_t j = k + 1; j < n; ++j) dot += h(i, j) * v[j];
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= 2.0 * dot * std::conj(v[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

struct Givens {
  Complex g11, g12, g21, g22;
};

// Rotation G with G * [x1; x2] = [r; 0].
Givens make_givens(Complex x1, Complex x2) {
  const double r = std::hypot(std::abs(x1), std::abs(x2));
  if (r == 0.0) return {1.0, 0.0, 0.0, 1.0};
  return {std::conj(x1) / r, std::conj(x2) / r, -x2 / r, x1 / r};
}

}  // namespace

std::vector<double> eigenvalues_hermitian(const ComplexMatrix& h) {
  if (!h.is_square()) throw ArgumentError("eigenvalues_hermitian needs a square matrix");
  if (hermiticity_defect(h) > tol::kEigen) {
    throw ArgumentError("eigenvalues_hermitian needs a Hermitian matrix");
  }
  ComplexMatrix a = h;
  const std::size_t n = a.rows();
  double scale2 = 0.0;
  for (const auto& x : a.entries()) scale2 += std::norm(x);
  // Leftover off-diagonal mass below 1e-14 * ||A|| perturbs eigenvalues far below tol::kEigen.
  const double target = std::max(scale2, std::numeric_limits<double>::min()) * 1e-28;

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_diagonal_norm2(a) > target) {
    if (++sweep > kMaxSweeps) throw NumericalError("Jacobi iteration did not converge");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) jacobi_rotate(a, p, q);
  }

  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = a(i, i).real();
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

std::vector<Complex> eigenvalues_general(const ComplexMatrix& m) {
  if (!m.is_square()) throw ArgumentError("eigenvalues_general needs a square matrix");
  const std::size_t n = m.rows();
  std::vector<Complex> out(n);
  if (n == 0) return out;

  ComplexMatrix h = m;
  reduce_to_hessenberg(h);

  std::size_t hi = n - 1;
  int iterations = 0;
  int total = 0;
  const int max_total = 60 * static_cast<int>(n);
  std::vector<Givens> rotations(n);

  while (true) {
    if (hi == 0) {
      out[0] = h(0, 0);
      break;
    }
    // Locate the start of the unreduced block ending at `hi`.
    std::size_t lo = hi;
    while (lo > 0) {
      const double scale = std::abs(h(lo - 1, lo - 1)) + std::abs(h(lo, lo));
      if (std::abs(h(lo, lo - 1)) <= kEps * (scale == 0.0 ? 1.0 : scale)) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }
    if (lo == hi) {
      out[hi] = h(hi, hi);
      --hi;
      iterations = 0;
      continue;
    }
    if (++total > max_total) throw NumericalError("shifted QR did not converge");
    ++iterations;

    // Wilkinson shift from the trailing 2x2 block; exceptional shifts break cycles.
    Complex shift;
    if (iterations % 11 == 10) {
      shift = h(hi, hi) + std::abs(h(hi, hi - 1)) * 1.5;
    } else {
      const Complex a = h(hi - 1, hi - 1);
      const Complex b = h(hi - 1, hi);
      const Complex c = h(hi, hi - 1);
      const Complex d = h(hi, hi);
      const Complex half = 0.5 * (a - d);
      const Complex disc = std::sqrt(half * half + b * c);
      const Complex mu1 = 0.5 * (a + d) + disc;
      const Complex mu2 = 0.5 * (a + d) - disc;
      shift = std::abs(mu1 - d) < std::abs(mu2 - d) ? mu1 : mu2;
    }

    for (std::size_t k = lo; k <= hi; ++k) h(k, k) -= shift;
    // QR factorization of the active block by Givens rotations.
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens g = make_givens(h(k, k), h(k + 1, k));
      rotations[k] = g;
      for (std::size_t j = k; j <= hi; ++j) {
        const Complex x = h(k, j);
        const Complex y = h(k + 1, j);
        h(k, j) = g.g11 * x + g.g12 * y;
        h(k + 1, j) = g.g21 * x + g.g22 * y;
      }
    }
    // R Q, applying G^dagger from the right.
    for (std::size_t k = lo; k < hi; ++k) {
      const Givens& g = rotations[k];
      const std::size_t last = std::min(k + 2, hi);
      for (std::size_t i = lo; i <= last; ++i) {
        const Complex x = h(i, k);
        const Complex y = h(i, k + 1);
        h(i, k) = x * std::conj(g.g11) + y * std::conj(g.g12);
        h(i, k + 1) = x * std::conj(g.g21) + y * std::conj(g.g22);
      }
    }
    for (std::size_t k = lo; k <= hi; ++k) h(k, k) += shift;
  }
  return out;
}

}  // namespace esdmem
