// Quadruple-precision Hermitian eigensolver, independent of the library code
// paths: used to re-evaluate residual determinants that double and 80-bit
// arithmetic cannot resolve.  Square roots come from Newton refinement of a
// double seed, eigendecompositions from a cyclic complex Jacobi sweep.
#pragma once

#include <cmath>
#include <cstddef>
#include <vector>

namespace qd_oracle {

using Q = __float128;

inline Q qabs(Q x) { return x < 0 ? -x : x; }

inline Q qsqrt(Q x) {
  if (x <= 0) return 0;
  Q r = std::sqrt(static_cast<double>(x));
  for (int i = 0; i < 4; ++i) r = Q(0.5) * (r + x / r);
  return r;
}

struct C {
  Q re = 0, im = 0;
};

inline C operator+(C a, C b) { return {a.re + b.re, a.im + b.im}; }
inline C operator-(C a, C b) { return {a.re - b.re, a.im - b.im}; }
inline C operator*(C a, C b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
inline C conj(C a) { return {a.re, -a.im}; }
inline C operator*(Q s, C a) { return {s * a.re, s * a.im}; }
inline Q norm(C a) { return a.re * a.re + a.im * a.im; }
inline Q abs(C a) { return qsqrt(norm(a)); }

struct Mat {
  int n = 0;
  std::vector<C> a;
  Mat() = default;
  explicit Mat(int dim) : n(dim), a(static_cast<size_t>(dim) * static_cast<size_t>(dim)) {}
  C& at(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]; }
  const C& at(int i, int j) const {
    return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
  }
};

inline Mat identity(int n) {
  Mat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = {1, 0};
  return m;
}

inline Mat mul(const Mat& x, const Mat& y) {
  Mat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const C f = x.at(i, k);
      for (int j = 0; j < x.n; ++j) r.at(i, j) = r.at(i, j) + f * y.at(k, j);
    }
  return r;
}

inline Mat add(const Mat& x, const Mat& y) {
  Mat r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

inline Mat sub(const Mat& x, const Mat& y) {
  Mat r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] - y.a[i];
  return r;
}

inline Mat scale(const Mat& x, Q s) {
  Mat r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = s * x.a[i];
  return r;
}

inline Mat ipow(const Mat& m, int k) {
  Mat r = identity(m.n);
  for (int i = 0; i < k; ++i) r = mul(r, m);
  return r;
}

struct Eig {
  std::vector<Q> values;  // non-increasing
  Mat vectors;            // columns
};

inline Eig eig_herm(Mat a) {
  const int n = a.n;
  Mat v = identity(n);
  Q scale_q = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) scale_q = scale_q > abs(a.at(i, j)) ? scale_q : abs(a.at(i, j));
  if (scale_q == 0) scale_q = 1;
  const Q off_tol = Q(1e-30L) * scale_q;
  const Q skip_tol = Q(1e-32L) * scale_q;
  for (int sweep = 0; sweep < 60; ++sweep) {
    Q off = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) off += 2 * norm(a.at(i, j));
    if (qsqrt(off) <= off_tol) break;
    for (int p = 0; p < n - 1; ++p)
      for (int q = p + 1; q < n; ++q) {
        const C apq = a.at(p, q);
        if (abs(apq) <= skip_tol) continue;
        const Q app = a.at(p, p).re, aqq = a.at(q, q).re;
        const Q mag = abs(apq);
        const C phase = (Q(1) / mag) * apq;
        const Q tau = (aqq - app) / (2 * mag);
        const Q t = (tau >= 0 ? Q(1) : Q(-1)) / (qabs(tau) + qsqrt(1 + tau * tau));
        const Q cth = Q(1) / qsqrt(1 + t * t);
        const Q sth = t * cth;
        const C cp = conj(phase);
        for (int k = 0; k < n; ++k) {
          const C akp = a.at(k, p), akq = a.at(k, q);
          a.at(k, p) = cth * akp - sth * (akq * cp);
          a.at(k, q) = cth * akq + sth * (akp * phase);
        }
        for (int k = 0; k < n; ++k) {
          const C apk = a.at(p, k), aqk = a.at(q, k);
          a.at(p, k) = cth * apk - sth * (phase * aqk);
          a.at(q, k) = cth * aqk + sth * (cp * apk);
        }
        for (int k = 0; k < n; ++k) {
          const C vkp = v.at(k, p), vkq = v.at(k, q);
          v.at(k, p) = cth * vkp - sth * (vkq * cp);
          v.at(k, q) = cth * vkq + sth * (vkp * phase);
        }
      }
  }
  std::vector<int> order(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<size_t>(i)] = i;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (a.at(order[static_cast<size_t>(j)], order[static_cast<size_t>(j)]).re >
          a.at(order[static_cast<size_t>(i)], order[static_cast<size_t>(i)]).re) {
        const int tmp = order[static_cast<size_t>(i)];
        order[static_cast<size_t>(i)] = order[static_cast<size_t>(j)];
        order[static_cast<size_t>(j)] = tmp;
      }
  Eig e;
  e.values.resize(static_cast<size_t>(n));
  e.vectors = Mat(n);
  for (int c = 0; c < n; ++c) {
    e.values[static_cast<size_t>(c)] = a.at(order[static_cast<size_t>(c)], order[static_cast<size_t>(c)]).re;
    for (int r = 0; r < n; ++r) e.vectors.at(r, c) = v.at(r, order[static_cast<size_t>(c)]);
  }
  return e;
}

inline Mat from_spectrum(const Eig& e, const std::vector<Q>& f) {
  const int n = e.vectors.n;
  Mat r(n);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i) {
      const C lhs = f[static_cast<size_t>(k)] * e.vectors.at(i, k);
      for (int j = 0; j < n; ++j) r.at(i, j) = r.at(i, j) + lhs * conj(e.vectors.at(j, k));
    }
  return r;
}

}  // namespace qd_oracle
