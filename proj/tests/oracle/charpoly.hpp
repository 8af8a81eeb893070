#pragma once

// Characteristic-polynomial eigenvalue oracle, independent of the production
// eigensolver: Faddeev-LeVerrier coefficients in long double, roots isolated
// by bisection inside Gershgorin-bounded brackets.

#include <cmath>
#include <complex>
#include <stdexcept>
#include <vector>

namespace charpoly {

using C = std::complex<long double>;

struct Mat {
  int n;
  std::vector<C> a;
  explicit Mat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_) {}
  C& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
  const C& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
};

inline Mat mul(const Mat& x, const Mat& y) {
  Mat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int j = 0; j < x.n; ++j) {
      C s = 0;
      for (int k = 0; k < x.n; ++k) s += x.at(i, k) * y.at(k, j);
      r.at(i, j) = s;
    }
  return r;
}

inline C trace(const Mat& x) {
  C s = 0;
  for (int i = 0; i < x.n; ++i) s += x.at(i, i);
  return s;
}

// Monic characteristic polynomial coefficients: p(x) = x^n + c[n-1] x^(n-1) + ... + c[0].
inline std::vector<long double> coefficients(const Mat& a) {
  const int n = a.n;
  std::vector<long double> c(static_cast<size_t>(n));
  Mat m(n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;  // M_0 = I
  C ck = 1;
  for (int k = 1; k <= n; ++k) {
    if (k > 1) {
      for (int i = 0; i < n; ++i) m.at(i, i) += ck;
      m = mul(a, m);
    } else {
      m = mul(a, m);
    }
    ck = -trace(m) / static_cast<long double>(k);
    c[static_cast<size_t>(n - k)] = ck.real();
  }
  return c;
}

inline long double eval(const std::vector<long double>& c, long double x) {
  long double v = 1;
  for (size_t i = c.size(); i-- > 0;) v = v * x + c[i];
  return v;
}

inline std::pair<long double, long double> gershgorin(const Mat& a) {
  long double lo = 0, hi = 0;
  for (int i = 0; i < a.n; ++i) {
    long double radius = 0;
    for (int j = 0; j < a.n; ++j)
      if (j != i) radius += std::abs(a.at(i, j));
    const long double d = a.at(i, i).real();
    if (i == 0 || d - radius < lo) lo = d - radius;
    if (i == 0 || d + radius > hi) hi = d + radius;
  }
  return {lo, hi};
}

// Refines one root inside [lo, hi]; requires a sign change.
inline bool bisect(const std::vector<long double>& c, long double lo, long double hi,
                   long double& root) {
  long double flo = eval(c, lo), fhi = eval(c, hi);
  if (flo == 0) {
    root = lo;
    return true;
  }
  if (fhi == 0) {
    root = hi;
    return true;
  }
  if ((flo > 0) == (fhi > 0)) return false;
  for (int it = 0; it < 200; ++it) {
    const long double mid = (lo + hi) / 2;
    const long double fm = eval(c, mid);
    if (fm == 0) {
      root = mid;
      return true;
    }
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  root = (lo + hi) / 2;
  return true;
}

}  // namespace charpoly
