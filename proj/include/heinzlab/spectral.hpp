#pragma once

#include <functional>

#include "heinzlab/eig.hpp"

namespace heinzlab {

// f applied on the spectrum: V diag(f(lambda)) V*. Throws parameter_error if
// f produces a non-finite value on any eigenvalue.
ComplexMatrix apply_spectral_function(const ComplexMatrix& hermitian,
                                      const std::function<double(double)>& f);

// A^kappa for positive semidefinite A.  Eigenvalues in [-1e-10*|A|, 0) are
// clamped to 0 when kappa > 0; a genuinely negative or (for kappa not a
// positive integer) zero eigenvalue where the power is undefined raises
// parameter_error.
ComplexMatrix fractional_power(const ComplexMatrix& psd, double kappa);
ComplexMatrix fractional_power(const EigenDecomposition& e, double kappa);

ComplexMatrix herm_sqrt(const ComplexMatrix& psd);

}  // namespace heinzlab
