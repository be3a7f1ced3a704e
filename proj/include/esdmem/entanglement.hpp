#pragma once

#include <array>

#include "esdmem/qmatrix.hpp"

namespace esdmem {

// Smallest eigenvalue of the partial transpose w.r.t. `subset`; negative means NPT.
double signed_pt_min(const DensityMatrix& rho, const QubitSet& subset);

// |most negative eigenvalue| of the partial transpose, 0 when none is negative.
double negativity(const DensityMatrix& rho, const QubitSet& subset);

// Descending eigenvalues of rho (sy ⊗ sy) rho* (sy ⊗ sy), clamped at zero.
std::array<double, 4> concurrence_spectrum(const DensityMatrix& rho2);

// sqrt(l1) - sqrt(l2) - sqrt(l3) - sqrt(l4), not clamped at zero.
double concurrence_lambda(const DensityMatrix& rho2);
// max(0, Lambda).
double concurrence(const DensityMatrix& rho2);

// Cube root of N(1) N(2) N(3).
double tripartite_negativity(const DensityMatrix& rho3);
// max over the three single-qubit signed PT minima; negative exactly when N3 > 0.
double tripartite_signed(const DensityMatrix& rho3);

// Nonzero entries confined to the main and anti-diagonal.
bool is_x_form(const DensityMatrix& rho2, double tol = tol::kStructural);

}  // namespace esdmem
