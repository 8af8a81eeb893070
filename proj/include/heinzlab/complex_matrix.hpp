#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>
#include <vector>

namespace heinzlab {

using cplx = std::complex<double>;

// Usage / contract violations (bad flags, malformed inputs, parameter-range errors).
struct parameter_error : std::runtime_error {
  explicit parameter_error(const std::string& what) : std::runtime_error(what) {}
};

// Numerical breakdown (eigensolver non-convergence).
struct numeric_error : std::runtime_error {
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Dense complex square matrix, row-major.
struct ComplexMatrix {
  int dim = 0;
  std::vector<cplx> a;

  ComplexMatrix() = default;
  explicit ComplexMatrix(int n) : dim(n), a(static_cast<size_t>(n) * n, cplx(0, 0)) {
    if (n <= 0) throw parameter_error("matrix dimension must be positive");
  }

  cplx& at(int i, int j) { return a[static_cast<size_t>(i) * dim + j]; }
  const cplx& at(int i, int j) const { return a[static_cast<size_t>(i) * dim + j]; }

  static ComplexMatrix identity(int n) {
    ComplexMatrix m(n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
  }
};

inline ComplexMatrix operator+(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.dim != y.dim) throw parameter_error("dimension mismatch");
  ComplexMatrix r(x.dim);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

inline ComplexMatrix operator-(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.dim != y.dim) throw parameter_error("dimension mismatch");
  ComplexMatrix r(x.dim);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

inline ComplexMatrix operator*(double s, const ComplexMatrix& x) {
  ComplexMatrix r = x;
  for (auto& v : r.a) v *= s;
  return r;
}

inline ComplexMatrix operator*(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.dim != y.dim) throw parameter_error("dimension mismatch");
  const int n = x.dim;
  ComplexMatrix r(n);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      const cplx xik = x.at(i, k);
      if (xik == cplx(0, 0)) continue;
      for (int j = 0; j < n; ++j) r.at(i, j) += xik * y.at(k, j);
    }
  return r;
}

inline ComplexMatrix adjoint(const ComplexMatrix& x) {
  ComplexMatrix r(x.dim);
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j) r.at(i, j) = std::conj(x.at(j, i));
  return r;
}

inline ComplexMatrix schur_product(const ComplexMatrix& x, const ComplexMatrix& y) {
  if (x.dim != y.dim) throw parameter_error("dimension mismatch");
  ComplexMatrix r(x.dim);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] * y.a[i];
  return r;
}

inline cplx trace_of(const ComplexMatrix& x) {
  cplx t(0, 0);
  for (int i = 0; i < x.dim; ++i) t += x.at(i, i);
  return t;
}

inline double frobenius_norm(const ComplexMatrix& x) {
  double s = 0;
  for (const auto& v : x.a) s += std::norm(v);
  return std::sqrt(s);
}

inline double hermiticity_defect(const ComplexMatrix& x) {
  double s = 0;
  for (int i = 0; i < x.dim; ++i)
    for (int j = 0; j < x.dim; ++j) s += std::norm(x.at(i, j) - std::conj(x.at(j, i)));
  return std::sqrt(s);
}

inline bool all_finite(const ComplexMatrix& x) {
  for (const auto& v : x.a)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

// Validated Hermitian wrapper. The base matrix is kept as given; consumers
// symmetrize internally where exact hermiticity matters.
struct HermitianMatrix {
  ComplexMatrix m;
  double defect = 0;
};

inline HermitianMatrix make_hermitian(const ComplexMatrix& x) {
  if (!all_finite(x)) throw parameter_error("matrix has non-finite entries");
  const double d = hermiticity_defect(x);
  if (d > 1e-12 * std::max(1.0, frobenius_norm(x)))
    throw parameter_error("matrix is not Hermitian (defect " + std::to_string(d) + ")");
  return HermitianMatrix{x, d};
}

struct PositiveMatrix {
  HermitianMatrix h;
  double min_eigenvalue = 0;
  bool definite = false;

  const ComplexMatrix& mat() const { return h.m; }
  int dim() const { return h.m.dim; }
};

}  // namespace heinzlab
