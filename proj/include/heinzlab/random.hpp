#pragma once

#include <cstdint>
#include <string_view>

#include "heinzlab/eig.hpp"

namespace heinzlab {

uint64_t fnv1a64(std::string_view s);

// Counter-free splitmix64 stream; cheap to fork per case.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  double uniform01() { return (next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }
  double log_uniform(double lo, double hi);
  double gaussian();  // Box-Muller on 1 - uniform01()
  int uniform_int(int lo, int hi);  // inclusive
};

ComplexMatrix random_unitary(int dim, Rng& rng);
ComplexMatrix random_complex(int dim, Rng& rng);
ComplexMatrix random_permutation_unitary(int dim, Rng& rng);

// V diag(spectrum) V* with log-uniform spectrum in [lo, hi]; lo == hi gives
// exactly lo * I.
PositiveMatrix gen_positive(int dim, double lo, double hi, Rng& rng);

}  // namespace heinzlab
