#include "heinzlab/matrix_means.hpp"

#include <cmath>

namespace heinzlab {

ComplexMatrix op_arith_mean(const ComplexMatrix& t, const ComplexMatrix& s, double kappa) {
  return (1 - kappa) * t + kappa * s;
}

GeomMeanPlan::GeomMeanPlan(const ComplexMatrix& t, const ComplexMatrix& s) {
  EigenDecomposition et = eig_hermitian(t);
  if (et.values.back() <= 0)
    throw parameter_error("geometric mean needs a positive definite first operand");
  t_half = fractional_power(et, 0.5);
  t_half_inv = fractional_power(et, -0.5);
  inner = eig_hermitian(t_half_inv * s * t_half_inv);
}

ComplexMatrix GeomMeanPlan::sharp(double kappa) const {
  return t_half * fractional_power(inner, kappa) * t_half;
}

ComplexMatrix GeomMeanPlan::heinz(double kappa) const {
  std::vector<double> vals(inner.values.size());
  const double top = inner.values.empty() ? 0.0 : std::fabs(inner.values.front());
  for (size_t i = 0; i < vals.size(); ++i) {
    double lam = inner.values[i];
    if (lam < 0) {
      if (lam < -1e-10 * std::max(1.0, top))
        throw parameter_error("heinz mean needs positive semidefinite operands");
      lam = 0;
    }
    vals[i] = 0.5 * (std::pow(lam, kappa) + std::pow(lam, 1 - kappa));
  }
  ComplexMatrix f(inner.vectors.dim);
  for (int i = 0; i < f.dim; ++i)
    for (int j = 0; j < f.dim; ++j) {
      cplx acc(0, 0);
      for (int k = 0; k < f.dim; ++k)
        acc += inner.vectors.at(i, k) * vals[k] * std::conj(inner.vectors.at(j, k));
      f.at(i, j) = acc;
    }
  return t_half * f * t_half;
}

ComplexMatrix op_geom_mean(const ComplexMatrix& t, const ComplexMatrix& s, double kappa) {
  return GeomMeanPlan(t, s).sharp(kappa);
}

ComplexMatrix op_heinz_mean(const ComplexMatrix& t, const ComplexMatrix& s, double kappa) {
  return GeomMeanPlan(t, s).heinz(kappa);
}

MonotoneFunctionSpec MonotoneFunctionSpec::by_name(const std::string& name) {
  if (name == "sqrt")
    return MonotoneFunctionSpec{"sqrt", [](double x) { return std::sqrt(x); }};
  if (name == "log1p")
    return MonotoneFunctionSpec{"log1p", [](double x) { return std::log1p(x); }};
  throw parameter_error("unknown monotone function: " + name);
}

double psi_interpolant(const ComplexMatrix& t, const ComplexMatrix& s, const ComplexMatrix& x,
                       double kappa, double theta, const NormSelector& sel) {
  const ComplexMatrix cross = fractional_power(t, kappa) * x * fractional_power(s, 1 - kappa);
  const ComplexMatrix ends = 0.5 * (t * x + x * s);
  return ui_norm((1 - theta) * cross + theta * ends, sel);
}

double phi_interpolant(const ComplexMatrix& t, const ComplexMatrix& s, const ComplexMatrix& x,
                       double kappa, double theta, const NormSelector& sel) {
  const ComplexMatrix cross = fractional_power(t, kappa) * x * fractional_power(s, 1 - kappa) +
                              fractional_power(t, 1 - kappa) * x * fractional_power(s, kappa);
  const ComplexMatrix ends = 0.5 * (t * x + x * s);
  return ui_norm((1 - 0.5 * theta) * cross + theta * ends, sel);
}

double corollary_inner_norm(const ComplexMatrix& t, const ComplexMatrix& s, const ComplexMatrix& x,
                            double mu, const MonotoneFunctionSpec& fn, CorollaryVariant variant,
                            const NormSelector& sel) {
  EigenDecomposition et = eig_hermitian(t), es = eig_hermitian(s);
  if (et.values.back() <= 0 || es.values.back() <= 0)
    throw parameter_error("corollary functional needs positive definite operands");
  const ComplexMatrix t_mu = fractional_power(et, mu), s_mu = fractional_power(es, mu);
  const ComplexMatrix t_mu2 = fractional_power(et, mu / 2), s_mu2 = fractional_power(es, mu / 2);
  const auto f = [&](double v) { return fn.f(v); };
  const auto fstar = [&](double v) { return fn.star(v); };
  ComplexMatrix middle(t.dim);
  if (variant == CorollaryVariant::symmetrized) {
    middle = apply_spectral_function(t_mu, f) * x * apply_spectral_function(s_mu, fstar) +
             apply_spectral_function(t_mu, fstar) * x * apply_spectral_function(s_mu, f);
  } else {
    middle = apply_spectral_function(t_mu, f) * x + x * apply_spectral_function(s_mu, f);
  }
  return ui_norm(t_mu2 * middle * s_mu2, sel);
}

double corollary_functional(const ComplexMatrix& t, const ComplexMatrix& s, const ComplexMatrix& x,
                            double mu, const MonotoneFunctionSpec& fn, CorollaryVariant variant,
                            const NormSelector& sel) {
  const double inner = corollary_inner_norm(t, s, x, mu, fn, variant, sel);
  if (variant == CorollaryVariant::symmetrized) return 0.5 * inner;
  const double eta = std::min(min_eigenvalue(t), min_eigenvalue(s));
  if (!(eta > 0)) throw parameter_error("corollary functional needs positive definite operands");
  return eta / (2 * fn.f(eta)) * inner;
}

}  // namespace heinzlab
