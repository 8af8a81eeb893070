#include "heinzlab/random.hpp"

#include <cmath>

namespace heinzlab {

uint64_t fnv1a64(std::string_view s) {
  uint64_t h = 0xCBF29CE484222325ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001B3ull;
  }
  return h;
}

double Rng::log_uniform(double lo, double hi) {
  if (!(lo > 0 && hi >= lo)) throw parameter_error("log_uniform needs 0 < lo <= hi");
  if (lo == hi) return lo;
  return std::exp(uniform(std::log(lo), std::log(hi)));
}

double Rng::gaussian() {
  const double u = 1.0 - uniform01();
  const double v = uniform01();
  return std::sqrt(-2.0 * std::log(u)) * std::cos(2.0 * M_PI * v);
}

int Rng::uniform_int(int lo, int hi) {
  if (hi < lo) throw parameter_error("uniform_int needs lo <= hi");
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(next() % span);
}

ComplexMatrix random_complex(int dim, Rng& rng) {
  ComplexMatrix m(dim);
  for (auto& v : m.a) {
    const double re = rng.gaussian();
    const double im = rng.gaussian();
    v = cplx(re, im);
  }
  return m;
}

ComplexMatrix random_unitary(int dim, Rng& rng) {
  if (dim == 1) {
    const double phase = rng.uniform(0, 2 * M_PI);
    ComplexMatrix u(1);
    u.at(0, 0) = cplx(std::cos(phase), std::sin(phase));
    return u;
  }
  ComplexMatrix g = random_complex(dim, rng);
  ComplexMatrix h = 0.5 * (g + adjoint(g));
  return eig_hermitian(h).vectors;
}

ComplexMatrix random_permutation_unitary(int dim, Rng& rng) {
  std::vector<int> perm(dim);
  for (int i = 0; i < dim; ++i) perm[i] = i;
  for (int i = dim - 1; i > 0; --i) {
    const int j = rng.uniform_int(0, i);
    std::swap(perm[i], perm[j]);
  }
  ComplexMatrix p(dim);
  for (int i = 0; i < dim; ++i) p.at(perm[i], i) = 1.0;
  return p;
}

PositiveMatrix gen_positive(int dim, double lo, double hi, Rng& rng) {
  if (!(lo > 0 && hi >= lo)) throw parameter_error("spectrum band needs 0 < lo <= hi");
  if (lo == hi) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m.at(i, i) = lo;
    return positive_from_spectrum(m, lo);
  }
  std::vector<double> spectrum(dim);
  double mn = hi;
  for (int i = 0; i < dim; ++i) {
    spectrum[i] = rng.log_uniform(lo, hi);
    mn = std::min(mn, spectrum[i]);
  }
  ComplexMatrix u = random_unitary(dim, rng);
  ComplexMatrix m(dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) {
      cplx s(0, 0);
      for (int k = 0; k < dim; ++k) s += u.at(i, k) * spectrum[k] * std::conj(u.at(j, k));
      m.at(i, j) = s;
    }
  // Exact hermitization so downstream type checks never see rounding drift.
  for (int i = 0; i < dim; ++i) {
    m.at(i, i) = m.at(i, i).real();
    for (int j = i + 1; j < dim; ++j) {
      const cplx avg = 0.5 * (m.at(i, j) + std::conj(m.at(j, i)));
      m.at(i, j) = avg;
      m.at(j, i) = std::conj(avg);
    }
  }
  return positive_from_spectrum(m, mn);
}

}  // namespace heinzlab
