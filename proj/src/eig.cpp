#include "heinzlab/eig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace heinzlab {

namespace {

double offdiag_norm(const ComplexMatrix& w) {
  double s = 0;
  for (int p = 0; p < w.dim; ++p)
    for (int q = p + 1; q < w.dim; ++q) s += 2.0 * std::norm(w.at(p, q));
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition eig_hermitian(const ComplexMatrix& a) {
  if (!all_finite(a)) throw parameter_error("eig: non-finite entries");
  const int n = a.dim;

  // Work on the exactly Hermitian part; callers guarantee the defect is tiny.
  ComplexMatrix w(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) w.at(i, j) = 0.5 * (a.at(i, j) + std::conj(a.at(j, i)));

  ComplexMatrix v = ComplexMatrix::identity(n);
  const double scale = frobenius_norm(w);
  const double stop = 1e-14 * scale;

  if (n > 1 && scale > 0) {
    bool converged = false;
    for (int sweep = 0; sweep < 30 && !converged; ++sweep) {
      if (offdiag_norm(w) <= stop) {
        converged = true;
        break;
      }
      for (int p = 0; p < n - 1; ++p) {
        for (int q = p + 1; q < n; ++q) {
          const cplx apq = w.at(p, q);
          const double b = std::abs(apq);
          if (b == 0.0) continue;
          const double app = w.at(p, p).real();
          const double aqq = w.at(q, q).real();
          const double tau = (aqq - app) / (2.0 * b);
          const double t = tau >= 0 ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                    : -1.0 / (-tau + std::sqrt(1.0 + tau * tau));
          const double c = 1.0 / std::sqrt(1.0 + t * t);
          const cplx sigma = (t * c) * (apq / b);

          // w <- U* w U and v <- v U with U = [[c, sigma], [-conj(sigma), c]]
          // acting on rows/columns p, q.
          for (int k = 0; k < n; ++k) {
            const cplx wpk = w.at(p, k), wqk = w.at(q, k);
            w.at(p, k) = c * wpk - sigma * wqk;
            w.at(q, k) = std::conj(sigma) * wpk + c * wqk;
          }
          for (int k = 0; k < n; ++k) {
            const cplx wkp = w.at(k, p), wkq = w.at(k, q);
            w.at(k, p) = c * wkp - std::conj(sigma) * wkq;
            w.at(k, q) = sigma * wkp + c * wkq;
            const cplx vkp = v.at(k, p), vkq = v.at(k, q);
            v.at(k, p) = c * vkp - std::conj(sigma) * vkq;
            v.at(k, q) = sigma * vkp + c * vkq;
          }
          w.at(p, q) = 0;
          w.at(q, p) = 0;
          w.at(p, p) = w.at(p, p).real();
          w.at(q, q) = w.at(q, q).real();
        }
      }
    }
    if (!converged && offdiag_norm(w) > stop)
      throw numeric_error("eig: no convergence in 30 sweeps, off-diagonal residual " +
                          std::to_string(offdiag_norm(w)));
  }

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return w.at(i, i).real() > w.at(j, j).real(); });

  EigenDecomposition e;
  e.values.resize(n);
  e.vectors = ComplexMatrix(n);
  for (int j = 0; j < n; ++j) {
    e.values[j] = w.at(order[j], order[j]).real();
    for (int i = 0; i < n; ++i) e.vectors.at(i, j) = v.at(i, order[j]);
  }
  return e;
}

double reconstruction_error(const EigenDecomposition& e, const ComplexMatrix& a) {
  const int n = a.dim;
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      cplx s(0, 0);
      for (int k = 0; k < n; ++k) s += e.vectors.at(i, k) * e.values[k] * std::conj(e.vectors.at(j, k));
      r.at(i, j) = s - a.at(i, j);
    }
  return frobenius_norm(r);
}

double unitarity_error(const ComplexMatrix& v) {
  ComplexMatrix g = adjoint(v) * v;
  for (int i = 0; i < g.dim; ++i) g.at(i, i) -= 1.0;
  return frobenius_norm(g);
}

PositiveMatrix make_positive(const ComplexMatrix& a, bool definite) {
  HermitianMatrix h = make_hermitian(a);
  EigenDecomposition e = eig_hermitian(a);
  const double lo = e.values.empty() ? 0.0 : e.values.back();
  const double hi = e.values.empty() ? 0.0 : std::fabs(e.values.front());
  if (definite) {
    if (lo <= 0) throw parameter_error("matrix is not positive definite (min eigenvalue " +
                                       std::to_string(lo) + ")");
  } else if (lo < -1e-10 * std::max(1.0, hi)) {
    throw parameter_error("matrix is not positive semidefinite (min eigenvalue " +
                          std::to_string(lo) + ")");
  }
  return PositiveMatrix{h, lo, lo > 0};
}

PositiveMatrix positive_from_spectrum(const ComplexMatrix& a, double min_eig) {
  if (!all_finite(a)) throw parameter_error("matrix has non-finite entries");
  return PositiveMatrix{HermitianMatrix{a, hermiticity_defect(a)}, min_eig, min_eig > 0};
}

double min_eigenvalue(const ComplexMatrix& hermitian) {
  return eig_hermitian(hermitian).values.back();
}

double max_eigenvalue(const ComplexMatrix& hermitian) {
  return eig_hermitian(hermitian).values.front();
}

double loewner_gap(const ComplexMatrix& l, const ComplexMatrix& r) {
  return min_eigenvalue(r - l);
}

}  // namespace heinzlab
