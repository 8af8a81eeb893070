#include "heinzlab/norms.hpp"

#include <algorithm>
#include <cmath>

#include "heinzlab/eig.hpp"

namespace heinzlab {

NormSelector NormSelector::schatten(double p) {
  if (!(p >= 1)) throw parameter_error("schatten order must satisfy p >= 1");
  NormSelector s;
  s.kind = Kind::schatten;
  s.p = p;
  return s;
}

NormSelector NormSelector::ky_fan(int k) {
  if (k < 1) throw parameter_error("ky fan order must satisfy k >= 1");
  NormSelector s;
  s.kind = Kind::ky_fan;
  s.k = k;
  return s;
}

NormSelector NormSelector::parse(const std::string& token) {
  if (token == "trace") return schatten(1);
  if (token == "frobenius") return schatten(2);
  if (token == "spectral") return ky_fan(1);
  const auto colon = token.find(':');
  if (colon != std::string::npos) {
    const std::string head = token.substr(0, colon), tail = token.substr(colon + 1);
    try {
      if (head == "schatten")
        return schatten(tail == "inf" ? std::numeric_limits<double>::infinity() : std::stod(tail));
      if (head == "kyfan") return ky_fan(std::stoi(tail));
    } catch (const std::logic_error&) {
      throw parameter_error("bad norm token: " + token);
    }
  }
  throw parameter_error("bad norm token: " + token);
}

std::string NormSelector::name() const {
  if (kind == Kind::schatten)
    return std::isinf(p) ? "schatten:inf"
                         : (p == std::floor(p) ? "schatten:" + std::to_string(static_cast<int>(p))
                                               : "schatten:" + std::to_string(p));
  return "kyfan:" + std::to_string(k);
}

std::vector<double> singular_values(const ComplexMatrix& a) {
  // Eigenvalues of the Hermitian dilation [[0, A], [A*, 0]] are +-s_i.  Unlike
  // the A*A route this does not square the condition number, so small singular
  // values of ill-conditioned products keep absolute accuracy ~eps*s_max.
  const int n = a.dim;
  ComplexMatrix d(2 * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      d.at(i, n + j) = a.at(i, j);
      d.at(n + j, i) = std::conj(a.at(i, j));
    }
  EigenDecomposition e = eig_hermitian(d);
  std::vector<double> sv(static_cast<size_t>(n));
  for (int i = 0; i < n; ++i) sv[static_cast<size_t>(i)] = std::max(0.0, e.values[static_cast<size_t>(i)]);
  return sv;  // already non-increasing
}

double ui_norm(const std::vector<double>& sv, const NormSelector& sel) {
  if (sel.kind == NormSelector::Kind::ky_fan) {
    if (sel.k > static_cast<int>(sv.size()))
      throw parameter_error("ky fan order exceeds dimension");
    double s = 0;
    for (int i = 0; i < sel.k; ++i) s += sv[i];
    return s;
  }
  if (std::isinf(sel.p)) return sv.empty() ? 0.0 : sv.front();
  if (sel.p == 1) {
    double s = 0;
    for (double v : sv) s += v;
    return s;
  }
  if (sel.p == 2) {
    double s = 0;
    for (double v : sv) s += v * v;
    return std::sqrt(s);
  }
  double s = 0;
  for (double v : sv) s += std::pow(v, sel.p);
  return std::pow(s, 1.0 / sel.p);
}

double ui_norm(const ComplexMatrix& a, const NormSelector& sel) {
  return ui_norm(singular_values(a), sel);
}

double trace_norm(const ComplexMatrix& a) { return ui_norm(a, NormSelector::schatten(1)); }

NormToken NormToken::parse(const std::string& token) {
  NormToken t;
  if (token == "kyfan:all") {
    t.ky_fan_all = true;
    return t;
  }
  t.sel = NormSelector::parse(token);
  return t;
}

std::string NormToken::name() const { return ky_fan_all ? "kyfan:all" : sel.name(); }

std::vector<NormToken> default_norm_tokens() {
  std::vector<NormToken> t;
  t.push_back(NormToken::parse("kyfan:all"));
  t.push_back(NormToken::parse("schatten:1"));
  t.push_back(NormToken::parse("schatten:2"));
  t.push_back(NormToken::parse("schatten:3"));
  t.push_back(NormToken::parse("schatten:inf"));
  return t;
}

std::vector<NormSelector> norms_for_dim(const std::vector<NormToken>& tokens, int dim) {
  std::vector<NormSelector> out;
  for (const auto& t : tokens) {
    if (t.ky_fan_all) {
      for (int k = 1; k <= dim; ++k) out.push_back(NormSelector::ky_fan(k));
    } else if (t.sel.kind == NormSelector::Kind::ky_fan) {
      if (t.sel.k <= dim) out.push_back(t.sel);
    } else {
      out.push_back(t.sel);
    }
  }
  if (out.empty()) throw parameter_error("empty norm family");
  return out;
}

}  // namespace heinzlab
