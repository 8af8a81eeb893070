#pragma once

#include "heinzlab/complex_matrix.hpp"

namespace heinzlab {

// Eigenvalues non-increasing; columns of `vectors` are the matching eigenvectors.
struct EigenDecomposition {
  std::vector<double> values;
  ComplexMatrix vectors;
};

// Cyclic complex Jacobi for Hermitian input. Converges when the off-diagonal
// Frobenius mass drops below 1e-14 * ||A||_F; throws numeric_error with the
// residual after 30 sweeps otherwise.
EigenDecomposition eig_hermitian(const ComplexMatrix& a);

double reconstruction_error(const EigenDecomposition& e, const ComplexMatrix& a);
double unitarity_error(const ComplexMatrix& v);

// Validates positive semi-definiteness via the eigensolver.  `definite`
// additionally requires min eigenvalue > 0.
PositiveMatrix make_positive(const ComplexMatrix& a, bool definite = true);

// Trusted constructor for matrices built as V diag(spectrum) V*; skips the
// validation eig but records the known spectrum bound.
PositiveMatrix positive_from_spectrum(const ComplexMatrix& a, double min_eig);

double min_eigenvalue(const ComplexMatrix& hermitian);
double max_eigenvalue(const ComplexMatrix& hermitian);

// min eig of (R - L): nonnegative iff L <= R in the positive-semidefinite order.
double loewner_gap(const ComplexMatrix& l, const ComplexMatrix& r);

}  // namespace heinzlab
