#pragma once

#include <limits>
#include <string>
#include <vector>

#include "heinzlab/complex_matrix.hpp"

namespace heinzlab {

// Unitarily invariant norm selector, canonicalized at construction:
// trace -> schatten p=1, frobenius -> schatten p=2, spectral -> ky_fan k=1.
struct NormSelector {
  enum class Kind { schatten, ky_fan };
  Kind kind = Kind::schatten;
  double p = 2;  // schatten order, may be +inf
  int k = 1;     // ky fan order

  static NormSelector schatten(double p);
  static NormSelector ky_fan(int k);
  static NormSelector parse(const std::string& token);
  std::string name() const;
};

// Singular values, non-increasing.
std::vector<double> singular_values(const ComplexMatrix& a);

double ui_norm(const ComplexMatrix& a, const NormSelector& sel);
double ui_norm(const std::vector<double>& sv, const NormSelector& sel);

double trace_norm(const ComplexMatrix& a);

// Norm-family tokens for configs; "kyfan:all" expands to k = 1..dim.
struct NormToken {
  bool ky_fan_all = false;
  NormSelector sel;

  static NormToken parse(const std::string& token);
  std::string name() const;
};

std::vector<NormToken> default_norm_tokens();
std::vector<NormSelector> norms_for_dim(const std::vector<NormToken>& tokens, int dim);

}  // namespace heinzlab
