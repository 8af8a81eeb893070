#include "heinzlab/spectral.hpp"

#include <cmath>

namespace heinzlab {

namespace {

ComplexMatrix assemble(const EigenDecomposition& e, const std::vector<double>& vals) {
  const int n = e.vectors.dim;
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx s(0, 0);
      for (int k = 0; k < n; ++k) s += e.vectors.at(i, k) * vals[k] * std::conj(e.vectors.at(j, k));
      r.at(i, j) = s;
    }
  return r;
}

}  // namespace

ComplexMatrix apply_spectral_function(const ComplexMatrix& hermitian,
                                      const std::function<double(double)>& f) {
  EigenDecomposition e = eig_hermitian(hermitian);
  std::vector<double> vals(e.values.size());
  for (size_t i = 0; i < vals.size(); ++i) {
    vals[i] = f(e.values[i]);
    if (!std::isfinite(vals[i]))
      throw parameter_error("spectral function produced non-finite value at eigenvalue " +
                            std::to_string(e.values[i]));
  }
  return assemble(e, vals);
}

ComplexMatrix fractional_power(const EigenDecomposition& e, double kappa) {
  if (kappa == 1.0) return assemble(e, e.values);
  const double top = e.values.empty() ? 0.0 : std::fabs(e.values.front());
  std::vector<double> vals(e.values.size());
  for (size_t i = 0; i < vals.size(); ++i) {
    double lam = e.values[i];
    if (lam < 0) {
      if (kappa > 0 && lam >= -1e-10 * std::max(1.0, top))
        lam = 0;
      else
        throw parameter_error("fractional power of matrix with negative eigenvalue " +
                              std::to_string(lam));
    }
    if (lam == 0 && kappa <= 0)
      throw parameter_error("singular matrix raised to non-positive power");
    vals[i] = kappa == 0 ? 1.0 : std::pow(lam, kappa);
    if (!std::isfinite(vals[i]))
      throw parameter_error("fractional power overflow at eigenvalue " + std::to_string(lam));
  }
  return assemble(e, vals);
}

ComplexMatrix fractional_power(const ComplexMatrix& psd, double kappa) {
  if (kappa == 1.0) {
    // Still validate hermiticity but skip the eig.
    if (!all_finite(psd)) throw parameter_error("matrix has non-finite entries");
    return psd;
  }
  return fractional_power(eig_hermitian(psd), kappa);
}

ComplexMatrix herm_sqrt(const ComplexMatrix& psd) { return fractional_power(psd, 0.5); }

}  // namespace heinzlab
