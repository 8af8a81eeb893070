#pragma once

#include <functional>
#include <string>

#include "heinzlab/norms.hpp"
#include "heinzlab/spectral.hpp"

namespace heinzlab {

// (1-kappa) T + kappa S
ComplexMatrix op_arith_mean(const ComplexMatrix& t, const ComplexMatrix& s, double kappa);

// T^{1/2} (T^{-1/2} S T^{-1/2})^kappa T^{1/2}; T must be definite.
ComplexMatrix op_geom_mean(const ComplexMatrix& t, const ComplexMatrix& s, double kappa);

// (T #_kappa S + T #_{1-kappa} S) / 2
ComplexMatrix op_heinz_mean(const ComplexMatrix& t, const ComplexMatrix& s, double kappa);

// Shared plumbing when several weighted geometric means of the same pair are
// needed: one eig of T and one of T^{-1/2} S T^{-1/2}.
struct GeomMeanPlan {
  ComplexMatrix t_half, t_half_inv;
  EigenDecomposition inner;

  GeomMeanPlan(const ComplexMatrix& t, const ComplexMatrix& s);
  ComplexMatrix sharp(double kappa) const;
  ComplexMatrix heinz(double kappa) const;
};

// Operator-monotone function on [0, inf) with its companion x -> x / f(x).
struct MonotoneFunctionSpec {
  std::string name;
  std::function<double(double)> f;

  double star(double x) const { return x / f(x); }
  static MonotoneFunctionSpec by_name(const std::string& name);  // sqrt | log1p
};

// |||(1-theta) T^kappa X S^(1-kappa) + theta (TX + XS)/2|||
double psi_interpolant(const ComplexMatrix& t, const ComplexMatrix& s, const ComplexMatrix& x,
                       double kappa, double theta, const NormSelector& sel);

// |||(1-theta/2)(T^kappa X S^(1-kappa) + T^(1-kappa) X S^kappa) + theta (TX + XS)/2|||
double phi_interpolant(const ComplexMatrix& t, const ComplexMatrix& s, const ComplexMatrix& x,
                       double kappa, double theta, const NormSelector& sel);

enum class CorollaryVariant { symmetrized, one_sided };

// |||T^(mu/2) (f(T^mu) X fstar(S^mu) + fstar(T^mu) X f(S^mu)) S^(mu/2)|||   (symmetrized)
// |||T^(mu/2) (f(T^mu) X + X f(S^mu)) S^(mu/2)|||                          (one_sided)
double corollary_inner_norm(const ComplexMatrix& t, const ComplexMatrix& s, const ComplexMatrix& x,
                            double mu, const MonotoneFunctionSpec& fn, CorollaryVariant variant,
                            const NormSelector& sel);

// Inner norm with the printed prefactor: 1/2 for symmetrized,
// eta/(2 f(eta)) with eta = min(min eig T, min eig S) for one_sided.
double corollary_functional(const ComplexMatrix& t, const ComplexMatrix& s, const ComplexMatrix& x,
                            double mu, const MonotoneFunctionSpec& fn, CorollaryVariant variant,
                            const NormSelector& sel);

}  // namespace heinzlab
