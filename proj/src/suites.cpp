#include "heinzlab/suites.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace heinzlab {

namespace {

constexpr double kScalarLo = 1e-3, kScalarHi = 1e3;
constexpr double kSpecLo = 1e-2, kSpecHi = 1e2;

double pick(const std::vector<double>& grid, Rng& rng) {
  return grid[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(grid.size()) - 1))];
}

int pick(const std::vector<int>& grid, Rng& rng) {
  return grid[static_cast<size_t>(rng.uniform_int(0, static_cast<int>(grid.size()) - 1))];
}

CheckResult loewner_check(const ComplexMatrix& l, const ComplexMatrix& r, double tol) {
  const double gap = min_eigenvalue(r - l);
  return make_check(-gap, 0.0, tol);
}

double diag_max(const ComplexMatrix& t) {
  double m = t.at(0, 0).real();
  for (int i = 1; i < t.dim; ++i) m = std::max(m, t.at(i, i).real());
  return m;
}

double det_of(const EigenDecomposition& e) {
  double d = 1;
  for (double v : e.values) d *= v;
  return d;
}

double trace_real(const ComplexMatrix& m) { return trace_of(m).real(); }

// ---- quad-precision residual determinant --------------------------------
//
// The printed det-Young form subtracts nearly equal positive matrices before
// taking a determinant.  Near the sign change of that determinant, double
// (and even 80-bit) arithmetic cannot resolve the residual to the accuracy
// the reports promise, so this one quantity is evaluated in quadruple
// precision: the square root of S is refined by Denman-Beavers iteration
// from the double-precision seed, the powers are exact integer products, and
// the determinant comes from a pivoted LU factorization.

struct QuadC {
  __float128 re = 0, im = 0;
};

QuadC operator+(QuadC a, QuadC b) { return {a.re + b.re, a.im + b.im}; }
QuadC operator-(QuadC a, QuadC b) { return {a.re - b.re, a.im - b.im}; }
QuadC operator*(QuadC a, QuadC b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
QuadC quad_div(QuadC a, QuadC b) {
  const __float128 nb = b.re * b.re + b.im * b.im;
  return {(a.re * b.re + a.im * b.im) / nb, (a.im * b.re - a.re * b.im) / nb};
}
__float128 quad_norm(QuadC a) { return a.re * a.re + a.im * a.im; }

struct QuadMat {
  int n = 0;
  std::vector<QuadC> a;
  explicit QuadMat(int dim) : n(dim), a(static_cast<size_t>(dim) * static_cast<size_t>(dim)) {}
  QuadC& at(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)]; }
  const QuadC& at(int i, int j) const {
    return a[static_cast<size_t>(i) * static_cast<size_t>(n) + static_cast<size_t>(j)];
  }
};

QuadMat to_quad(const ComplexMatrix& m) {
  QuadMat r(m.dim);
  for (int i = 0; i < m.dim; ++i)
    for (int j = 0; j < m.dim; ++j) r.at(i, j) = {m.at(i, j).real(), m.at(i, j).imag()};
  return r;
}

QuadMat quad_mul(const QuadMat& x, const QuadMat& y) {
  QuadMat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      const QuadC f = x.at(i, k);
      for (int j = 0; j < x.n; ++j) r.at(i, j) = r.at(i, j) + f * y.at(k, j);
    }
  return r;
}

QuadMat quad_add(const QuadMat& x, const QuadMat& y) {
  QuadMat r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + y.a[i];
  return r;
}

QuadMat quad_axpy(const QuadMat& x, __float128 s, const QuadMat& y) {
  QuadMat r(x.n);
  for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = x.a[i] + QuadC{s, 0} * y.a[i];
  return r;
}

QuadMat quad_inverse(const QuadMat& m) {
  const int n = m.n;
  std::vector<std::vector<QuadC>> w(static_cast<size_t>(n), std::vector<QuadC>(2 * static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) w[static_cast<size_t>(i)][static_cast<size_t>(j)] = m.at(i, j);
    w[static_cast<size_t>(i)][static_cast<size_t>(n + i)] = {1, 0};
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (quad_norm(w[static_cast<size_t>(i)][static_cast<size_t>(col)]) >
          quad_norm(w[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
        piv = i;
    std::swap(w[static_cast<size_t>(col)], w[static_cast<size_t>(piv)]);
    const QuadC lead = w[static_cast<size_t>(col)][static_cast<size_t>(col)];
    for (int j = 0; j < 2 * n; ++j)
      w[static_cast<size_t>(col)][static_cast<size_t>(j)] =
          quad_div(w[static_cast<size_t>(col)][static_cast<size_t>(j)], lead);
    for (int i = 0; i < n; ++i) {
      if (i == col) continue;
      const QuadC f = w[static_cast<size_t>(i)][static_cast<size_t>(col)];
      if (f.re == 0 && f.im == 0) continue;
      for (int j = 0; j < 2 * n; ++j)
        w[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            w[static_cast<size_t>(i)][static_cast<size_t>(j)] - f * w[static_cast<size_t>(col)][static_cast<size_t>(j)];
    }
  }
  QuadMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r.at(i, j) = w[static_cast<size_t>(i)][static_cast<size_t>(n + j)];
  return r;
}

QuadMat quad_ipow(const QuadMat& m, int k) {
  QuadMat r(m.n);
  for (int i = 0; i < m.n; ++i) r.at(i, i) = {1, 0};
  for (int it = 0; it < k; ++it) r = quad_mul(r, m);
  return r;
}

__float128 quad_det(QuadMat m) {
  const int n = m.n;
  QuadC det{1, 0};
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int i = col + 1; i < n; ++i)
      if (quad_norm(m.at(i, col)) > quad_norm(m.at(piv, col))) piv = i;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(col, j), m.at(piv, j));
      det = QuadC{-1, 0} * det;
    }
    const QuadC lead = m.at(col, col);
    if (lead.re == 0 && lead.im == 0) return 0;
    det = det * lead;
    for (int i = col + 1; i < n; ++i) {
      const QuadC f = quad_div(m.at(i, col), lead);
      for (int j = col; j < n; ++j) m.at(i, j) = m.at(i, j) - f * m.at(col, j);
    }
  }
  return det.re;
}

// Principal root pair of a Hermitian definite matrix by the coupled
// inverse-mean recurrence. Any (w, w^-1) pair is a fixed point, so only the
// (s, identity) start pins the limit to (s^{1/2}, s^{-1/2}).
void quad_roots(const QuadMat& s, QuadMat& y, QuadMat& z) {
  y = s;
  z = QuadMat(s.n);
  for (int i = 0; i < s.n; ++i) z.at(i, i) = QuadC{1, 0};
  for (int it = 0; it < 30; ++it) {
    QuadMat yn = quad_axpy(y, 1, quad_inverse(z));
    QuadMat zn = quad_axpy(z, 1, quad_inverse(y));
    __float128 diff2 = 0, norm2 = 0;
    for (size_t k = 0; k < yn.a.size(); ++k) {
      yn.a[k] = QuadC{0.5, 0} * yn.a[k];
      zn.a[k] = QuadC{0.5, 0} * zn.a[k];
      diff2 = std::max(diff2, quad_norm(yn.a[k] - y.a[k]));
      norm2 = std::max(norm2, quad_norm(yn.a[k]));
    }
    y = yn;
    z = zn;
    if (diff2 <= __float128(1e-60) * norm2) break;
  }
}

// ---- samplers ----------------------------------------------------------

InequalityCase base_case(const std::string& id, uint64_t) { return InequalityCase{id, 1, 0, {}, {}, {}}; }

void sample_scalar_pair(InequalityCase& c, Rng& rng) {
  c.params.rho = rng.log_uniform(kScalarLo, kScalarHi);
  c.params.sigma = rng.log_uniform(kScalarLo, kScalarHi);
}

void sample_nu_kappa(InequalityCase& c, Rng& rng) {
  c.params.kappa = std::max(rng.uniform01(), 1e-9);
  c.params.nu = c.params.kappa * rng.uniform01();
}

void sample_pd_pair(InequalityCase& c, int dim_min, int dim_max, Rng& rng) {
  c.dim = rng.uniform_int(dim_min, dim_max);
  c.operands.push_back(gen_positive(c.dim, kSpecLo, kSpecHi, rng).mat());
  c.operands.push_back(gen_positive(c.dim, kSpecLo, kSpecHi, rng).mat());
}

void sample_pd_pair_x(InequalityCase& c, int dim_min, int dim_max, Rng& rng) {
  sample_pd_pair(c, dim_min, dim_max, rng);
  c.operands.push_back(random_complex(c.dim, rng));
}

void sample_pqmr(InequalityCase& c, Rng& rng, const GridSet& g) {
  c.params.p = rng.uniform(1.1, 4.0);
  c.params.m = pick(g.m_grid, rng);
  c.params.r_exp = pick(g.r_grid, rng);
}

void sample_conditioned(InequalityCase& c, int dim_min, int dim_max, Rng& rng) {
  c.dim = rng.uniform_int(dim_min, dim_max);
  SpectralCondition cond;
  cond.variant = rng.uniform01() < 0.5 ? 'a' : 'b';
  if (cond.variant == 'a') {
    double e[4];
    do {
      for (double& v : e) v = rng.log_uniform(0.1, 10.0);
      std::sort(e, e + 4);
    } while (!(e[1] < e[2]));
    cond.m = e[0];
    cond.m_prime = e[1];
    cond.M_prime = e[2];
    cond.M = e[3];
    c.operands.push_back(gen_positive(c.dim, cond.m, cond.m_prime, rng).mat());
    c.operands.push_back(gen_positive(c.dim, cond.M_prime, cond.M, rng).mat());
  } else {
    double e[3];
    for (double& v : e) v = rng.log_uniform(0.1, 10.0);
    std::sort(e, e + 3);
    cond.m = e[0];
    cond.m_prime = e[1];
    cond.M_prime = e[1];
    cond.M = e[2];
    c.operands.push_back(gen_positive(c.dim, cond.m_prime, cond.M, rng).mat());
    c.operands.push_back(gen_positive(c.dim, cond.m, cond.m_prime, rng).mat());
  }
  c.condition = cond;
  sample_nu_kappa(c, rng);
}

void sample_multi(InequalityCase& c, int dim_min, int dim_max, int count_min, Rng& rng) {
  const int count = rng.uniform_int(count_min, 4);
  c.dim = rng.uniform_int(dim_min, dim_max);
  for (int k = 0; k < count; ++k)
    c.operands.push_back(gen_positive(c.dim, kSpecLo, kSpecHi, rng).mat());
}

std::vector<double> sample_simplex_weights(size_t n, Rng& rng) {
  std::vector<double> w(n);
  double total = 0;
  for (auto& v : w) {
    v = rng.uniform(0.05, 1.05);
    total += v;
  }
  for (auto& v : w) v /= total;
  return w;
}

// ---- condition validation ----------------------------------------------

void require_condition(const InequalityCase& c) {
  if (!c.condition) throw parameter_error("case needs a spectral condition");
  const SpectralCondition& cond = *c.condition;
  EigenDecomposition et = eig_hermitian(c.operands[0]), es = eig_hermitian(c.operands[1]);
  const double slop = 1e-9 * std::max(1.0, cond.M);
  const bool ok =
      cond.variant == 'a'
          ? cond.m > 0 && cond.m_prime < cond.M_prime && et.values.back() >= cond.m - slop &&
                et.values.front() <= cond.m_prime + slop && es.values.back() >= cond.M_prime - slop &&
                es.values.front() <= cond.M + slop
          : cond.m > 0 && es.values.back() >= cond.m - slop && es.values.front() <= cond.m_prime + slop &&
                et.values.back() >= cond.m_prime - slop && et.values.front() <= cond.M + slop;
  if (!ok) throw parameter_error("operands violate the spectral condition");
}

// ---- shared evaluator pieces -------------------------------------------

struct PsiParts {
  std::vector<std::vector<double>> sv_hi, sv_lo;
  std::vector<double> sv_half;
};

// Singular values of the interpolant at every grid point, one matrix build per theta.
PsiParts interpolant_parts(const ComplexMatrix& base, const ComplexMatrix& ends, const GridSet& g) {
  PsiParts parts;
  const auto at = [&](double th) { return singular_values((1 - th) * base + th * ends); };
  for (double th : g.theta_hi) parts.sv_hi.push_back(at(th));
  for (double th : g.theta_lo) parts.sv_lo.push_back(at(th));
  parts.sv_half = at(0.5);
  return parts;
}

CheckResult fold_monotone(const PsiParts& parts, const std::vector<NormSelector>& family, double tol) {
  PartFold fold(tol);
  for (const auto& sel : family) {
    for (size_t i = 0; i + 1 < parts.sv_hi.size(); ++i)
      fold.add(ui_norm(parts.sv_hi[i], sel), ui_norm(parts.sv_hi[i + 1], sel));
    for (const auto& sv : parts.sv_lo) fold.add(ui_norm(sv, sel), ui_norm(parts.sv_half, sel));
  }
  return fold.result();
}

CheckResult eval_psi_monotone(const InequalityCase& c, const EvalCtx& ctx) {
  const auto& T = c.operands[0];
  const auto& S = c.operands[1];
  const auto& X = c.operands[2];
  const double k = c.params.kappa;
  const ComplexMatrix cross = fractional_power(T, k) * X * fractional_power(S, 1 - k);
  const ComplexMatrix ends = 0.5 * (T * X + X * S);
  const auto family = norms_for_dim(*ctx.norm_tokens, c.dim);
  return fold_monotone(interpolant_parts(cross, ends, *ctx.grids), family, ctx.tol);
}

CheckResult eval_phi_monotone(const InequalityCase& c, const EvalCtx& ctx) {
  const auto& T = c.operands[0];
  const auto& S = c.operands[1];
  const auto& X = c.operands[2];
  const double k = c.params.kappa;
  EigenDecomposition et = eig_hermitian(T), es = eig_hermitian(S);
  const ComplexMatrix cross2 = fractional_power(et, k) * X * fractional_power(es, 1 - k) +
                               fractional_power(et, 1 - k) * X * fractional_power(es, k);
  const ComplexMatrix ends = 0.5 * (T * X + X * S);
  const auto family = norms_for_dim(*ctx.norm_tokens, c.dim);
  // phi(theta) = |||(1 - theta/2) cross2 + theta ends|||: substituting theta' = theta/... is
  // not linear in the psi shape, so build directly.
  PsiParts parts;
  const auto at = [&](double th) { return singular_values((1 - 0.5 * th) * cross2 + th * ends); };
  for (double th : ctx.grids->theta_hi) parts.sv_hi.push_back(at(th));
  for (double th : ctx.grids->theta_lo) parts.sv_lo.push_back(at(th));
  parts.sv_half = at(0.5);
  return fold_monotone(parts, family, ctx.tol);
}

CheckResult eval_chain(const InequalityCase& c, const EvalCtx& ctx, bool sqrt_anchor) {
  const auto& T = c.operands[0];
  const auto& S = c.operands[1];
  const auto& X = c.operands[2];
  const double k = c.params.kappa;
  EigenDecomposition et = eig_hermitian(T), es = eig_hermitian(S);
  const ComplexMatrix anchor = sqrt_anchor
                                   ? fractional_power(et, 0.5) * X * fractional_power(es, 0.5)
                                   : fractional_power(et, k) * X * fractional_power(es, 1 - k);
  const ComplexMatrix both = fractional_power(et, k) * X * fractional_power(es, 1 - k) +
                             fractional_power(et, 1 - k) * X * fractional_power(es, k);
  const ComplexMatrix ends = T * X + X * S;
  const auto sv_anchor = singular_values(anchor);
  const auto sv_both = singular_values(both);
  std::vector<std::vector<double>> sv_right;
  for (double t : ctx.grids->t_grid) sv_right.push_back(singular_values(ends + t * anchor));
  const auto family = norms_for_dim(*ctx.norm_tokens, c.dim);
  PartFold fold(ctx.tol);
  for (const auto& sel : family) {
    fold.add(ui_norm(sv_anchor, sel), 0.5 * ui_norm(sv_both, sel));
    for (size_t i = 0; i < ctx.grids->t_grid.size(); ++i) {
      const double t = ctx.grids->t_grid[i];
      fold.add(0.5 * ui_norm(sv_both, sel), ui_norm(sv_right[i], sel) / (t + 2));
    }
  }
  return fold.result();
}

CheckResult eval_corollary(const InequalityCase& c, const EvalCtx& ctx, CorollaryVariant variant,
                           bool corrected) {
  const auto& T = c.operands[0];
  const auto& S = c.operands[1];
  const auto& X = c.operands[2];
  EigenDecomposition et = eig_hermitian(T), es = eig_hermitian(S);
  if (et.values.back() <= 0 || es.values.back() <= 0)
    throw parameter_error("corollary suites need positive definite operands");
  const double eta = std::min(et.values.back(), es.values.back());
  const auto family = norms_for_dim(*ctx.norm_tokens, c.dim);
  const GridSet& g = *ctx.grids;

  // Right side of the printed bound: psi(theta, kappa) on (T, S).
  std::vector<std::vector<double>> sv_rhs_printed;
  if (!corrected) {
    const double k = c.params.kappa;
    const ComplexMatrix cross = fractional_power(et, k) * X * fractional_power(es, 1 - k);
    const ComplexMatrix ends = 0.5 * (T * X + X * S);
    for (double th : g.theta_hi) sv_rhs_printed.push_back(singular_values((1 - th) * cross + th * ends));
  }

  PartFold fold(ctx.tol);
  for (const auto& fname : g.fn_grid) {
    const MonotoneFunctionSpec fn = MonotoneFunctionSpec::by_name(fname);
    for (double mu : g.mu_grid) {
      const ComplexMatrix t_mu = fractional_power(et, mu), s_mu = fractional_power(es, mu);
      const ComplexMatrix t_h = fractional_power(et, mu / 2), s_h = fractional_power(es, mu / 2);
      ComplexMatrix middle(c.dim);
      if (variant == CorollaryVariant::symmetrized) {
        middle = apply_spectral_function(t_mu, fn.f) * X *
                     apply_spectral_function(s_mu, [&](double v) { return fn.star(v); }) +
                 apply_spectral_function(t_mu, [&](double v) { return fn.star(v); }) * X *
                     apply_spectral_function(s_mu, fn.f);
      } else {
        middle = apply_spectral_function(t_mu, fn.f) * X + X * apply_spectral_function(s_mu, fn.f);
      }
      double prefactor;
      if (variant == CorollaryVariant::symmetrized)
        prefactor = 0.5;
      else if (corrected)
        prefactor = std::pow(eta, mu) / (2 * fn.f(std::pow(eta, mu)));
      else
        prefactor = eta / (2 * fn.f(eta));
      const auto sv_lhs = singular_values(prefactor * (t_h * middle * s_h));

      // Corrected bound: psi(theta, 1/2) on the mu-th powers of the operands.
      std::vector<std::vector<double>> sv_rhs_powered;
      if (corrected) {
        const ComplexMatrix cross = t_mu * X * s_mu;
        const ComplexMatrix ends =
            0.5 * (fractional_power(et, 2 * mu) * X + X * fractional_power(es, 2 * mu));
        for (double th : g.theta_hi) sv_rhs_powered.push_back(singular_values((1 - th) * cross + th * ends));
      }
      const auto& sv_rhs = corrected ? sv_rhs_powered : sv_rhs_printed;
      for (const auto& sel : family)
        for (const auto& sv : sv_rhs) fold.add(ui_norm(sv_lhs, sel), ui_norm(sv, sel));
    }
  }
  return fold.result();
}

enum class OperatorHeinzKind { refine_O1, reverse_A2op };

CheckResult eval_operator_heinz(const InequalityCase& c, const EvalCtx& ctx, OperatorHeinzKind kind,
                                StatementForm form) {
  require_condition(c);
  const auto& T = c.operands[0];
  const auto& S = c.operands[1];
  const double kappa = c.params.kappa, nu = c.params.nu;
  if (!(kappa > 0 && kappa <= 1 && nu >= 0 && nu < kappa))
    throw parameter_error("need 0 <= nu < kappa <= 1");
  const double w = nu / kappa;
  const double r = std::min(w, 1 - w);
  const double rp = std::min(2 * r, 1 - 2 * r);

  GeomMeanPlan plan(T, S);
  const ComplexMatrix h_nu = plan.heinz(nu);
  const ComplexMatrix h_k = plan.heinz(kappa);
  const ComplexMatrix h_k2 = plan.heinz(kappa / 2);
  const ComplexMatrix h_0 = plan.heinz(0);

  double kconst;
  ComplexMatrix bracket(c.dim);
  if (form == StatementForm::stated) {
    kconst = kantorovich(std::sqrt(c.condition->M / c.condition->m));
    bracket = h_k + h_0 - h_k2;
  } else {
    // Tightest constant valid across the joint spectrum of T^{-1/2} S T^{-1/2}.
    kconst = std::numeric_limits<double>::infinity();
    for (double x : plan.inner.values) {
      if (!(x > 0)) throw parameter_error("operator heinz needs definite operands");
      kconst = std::min(kconst, kantorovich(std::pow(x, kappa / 2)));
    }
    bracket = h_k + h_0 - 2.0 * h_k2;
  }

  const ComplexMatrix mixed = h_0 - w * (h_0 - h_k);
  if (kind == OperatorHeinzKind::refine_O1) {
    const ComplexMatrix lhs = r * bracket + std::pow(kconst, rp) * h_nu;
    return loewner_check(lhs, mixed, ctx.tol);
  }
  const double big_r = form == StatementForm::stated ? std::min(w, 1 - w) : std::max(w, 1 - w);
  const ComplexMatrix rhs = std::pow(kconst, -rp) * h_nu + big_r * bracket;
  return loewner_check(mixed, rhs, ctx.tol);
}

CheckResult eval_uinorm_young(const InequalityCase& c, const EvalCtx& ctx, bool s_left) {
  const auto& T = c.operands[0];
  const auto& S = c.operands[1];
  const auto& X = c.operands[2];
  const double p = c.params.p, q = p / (p - 1);
  const int m = c.params.m;
  const double r = c.params.r_exp;
  const double r0 = std::min(1 / p, 1 / q);
  const ComplexMatrix cross = fractional_power(T, 1 / p) * X * fractional_power(S, 1 / q);
  const auto sv_cross = singular_values(cross);
  const auto sv_tx = singular_values(T * X);
  const auto sv_xs = singular_values(X * S);
  const auto sv_sx = singular_values(S * X);
  const auto family = norms_for_dim(*ctx.norm_tokens, c.dim);
  PartFold fold(ctx.tol);
  for (const auto& sel : family) {
    const double ncross = ui_norm(sv_cross, sel);
    const double ntx = ui_norm(sv_tx, sel);
    const double nxs = ui_norm(sv_xs, sel);
    const double nref = s_left ? ui_norm(sv_sx, sel) : nxs;
    fold.add(ncross, std::pow(ntx, 1 / p) * std::pow(nxs, 1 / q));
    const double lhs = std::pow(ncross, m) +
                       std::pow(r0, m) * std::pow(std::pow(ntx, m / 2.0) - std::pow(nref, m / 2.0), 2);
    const double rhs = std::pow(std::pow(ntx, r) / p + std::pow(nxs, r) / q, static_cast<double>(m) / r);
    fold.add(lhs, rhs);
  }
  return fold.result();
}

CheckResult eval_trace_young(const InequalityCase& c, const EvalCtx& ctx, bool trace_norm_form) {
  const auto& T = c.operands[0];
  const auto& S = c.operands[1];
  const double p = c.params.p, q = p / (p - 1);
  const int m = c.params.m;
  const double r = c.params.r_exp;
  const double r0 = std::min(1 / p, 1 / q);
  EigenDecomposition et = eig_hermitian(T), es = eig_hermitian(S);
  const ComplexMatrix cross = fractional_power(et, 1 / p) * fractional_power(es, 1 / q);
  const double tn_cross = trace_norm(cross);
  double tr_t = 0, tr_s = 0, tr_tr = 0, tr_sr = 0, tn_t = 0, tn_s = 0;
  for (double v : et.values) {
    tr_t += v;
    tr_tr += std::pow(v, r);
    tn_t += std::fabs(v);
  }
  for (double v : es.values) {
    tr_s += v;
    tr_sr += std::pow(v, r);
    tn_s += std::fabs(v);
  }
  const double at = trace_norm_form ? tn_t : tr_t;
  const double as = trace_norm_form ? tn_s : tr_s;
  const double lhs = std::pow(tn_cross, m) +
                     std::pow(r0, m) * std::pow(std::pow(at, m / 2.0) - std::pow(as, m / 2.0), 2);
  const double rhs = std::pow(tr_tr / p + tr_sr / q, static_cast<double>(m) / r);
  return make_check(lhs, rhs, ctx.tol);
}

CheckResult eval_det_young(const InequalityCase& c, const EvalCtx& ctx, bool proof_form) {
  const auto& T = c.operands[0];
  const auto& S = c.operands[1];
  const int n = c.dim;
  const double p = c.params.p, q = p / (p - 1);
  const int m = c.params.m;
  const double r = c.params.r_exp;
  const double r0 = std::min(1 / p, 1 / q);
  EigenDecomposition et = eig_hermitian(T), es = eig_hermitian(S);
  if (et.values.back() <= 0 || es.values.back() <= 0)
    throw parameter_error("determinant suites need definite operands");
  const double det_s = det_of(es);
  const QuadMat tq = to_quad(T), sq = to_quad(S);
  const ComplexMatrix s_neg_half = fractional_power(es, -0.5);

  // A determinant loses up to cond(A) rounding digits; both determinant sides
  // are carried in quad so the reports keep twelve.
  double big;
  if (r == 1.0 || r == 1.5 || r == 2.0) {
    QuadMat tr_pow(n), sr_pow(n);
    if (r == 1.0) {
      tr_pow = tq;
      sr_pow = sq;
    } else if (r == 2.0) {
      tr_pow = quad_mul(tq, tq);
      sr_pow = quad_mul(sq, sq);
    } else {
      QuadMat th(n), tnh(n), sh_r(n), snh_r(n);
      quad_roots(tq, th, tnh);
      quad_roots(sq, sh_r, snh_r);
      tr_pow = quad_mul(tq, th);
      sr_pow = quad_mul(sq, sh_r);
    }
    const QuadC wp = quad_div(QuadC{1, 0}, QuadC{p, 0});
    const QuadC wq = quad_div(QuadC{1, 0}, QuadC{q, 0});
    QuadMat avg(n);
    for (size_t i = 0; i < avg.a.size(); ++i) avg.a[i] = wp * tr_pow.a[i] + wq * sr_pow.a[i];
    big = static_cast<double>(std::pow(static_cast<long double>(quad_det(avg)),
                                       static_cast<long double>(m) / r));
  } else {
    big = std::pow(det_of(eig_hermitian((1 / p) * fractional_power(et, r) +
                                        (1 / q) * fractional_power(es, r))),
                   static_cast<double>(m) / r);
  }
  const double geo = static_cast<double>(
      std::pow(static_cast<long double>(quad_det(tq)), static_cast<long double>(m) / p) *
      std::pow(static_cast<long double>(quad_det(sq)), static_cast<long double>(m) / q));
  EigenDecomposition eg = eig_hermitian(s_neg_half * T * s_neg_half);
  double term;
  if (proof_form) {
    // Per-eigenvalue gap product from the proof's final display.
    double prod = 1;
    for (double gval : eg.values) prod *= std::pow(std::max(gval, 0.0), m / 2.0) - 1;
    term = std::pow(r0, static_cast<double>(m) * n) * prod * prod * std::pow(det_s, m);
  } else {
    QuadMat sh(n), snh_q(n);
    quad_roots(sq, sh, snh_q);
    const QuadMat g = quad_mul(quad_mul(snh_q, tq), snh_q);
    const QuadMat s_mh = quad_ipow(sh, m);
    const QuadMat inner = quad_axpy(quad_add(quad_ipow(tq, m), quad_ipow(sq, m)), -2,
                                    quad_mul(quad_mul(s_mh, quad_ipow(g, m)), s_mh));
    const double d_inner = static_cast<double>(quad_det(inner));  // signed
    term = std::pow(r0, static_cast<double>(m) * n) * d_inner * d_inner;
  }
  return make_check(geo + term, big, ctx.tol);
}

CheckResult eval_multi_trace(const InequalityCase& c, const EvalCtx& ctx, bool trace_norm_form) {
  const size_t count = c.operands.size();
  const auto& w = c.params.weights;
  if (w.size() != count) throw parameter_error("weights must match operand count");
  double rmin = 1;
  for (double v : w) rmin = std::min(rmin, v);
  std::vector<EigenDecomposition> eigs;
  eigs.reserve(count);
  for (const auto& t : c.operands) eigs.push_back(eig_hermitian(t));

  ComplexMatrix prod = ComplexMatrix::identity(c.dim);
  ComplexMatrix wsum(c.dim), plain_sum(c.dim);
  double tr_dot = 0, tr_sum = 0, log_tr_prod = 0;
  for (size_t k = 0; k < count; ++k) {
    prod = prod * fractional_power(eigs[k], w[k]);
    wsum = wsum + w[k] * c.operands[k];
    plain_sum = plain_sum + c.operands[k];
    const double tr = trace_norm_form ? trace_norm(c.operands[k]) : trace_real(c.operands[k]);
    tr_dot += w[k] * trace_real(c.operands[k]);
    tr_sum += tr;
    log_tr_prod += std::log(tr);
  }
  const double kd = static_cast<double>(count);
  const double prod_tr = std::exp(log_tr_prod / kd);
  if (trace_norm_form) {
    const double lhs = trace_norm(prod) + rmin * (tr_sum - kd * prod_tr);
    return make_check(lhs, trace_norm(wsum), ctx.tol);
  }
  const double lhs = trace_norm(prod) + rmin * (tr_sum - kd * prod_tr);
  return make_check(lhs, tr_dot, ctx.tol);
}

CheckResult eval_multi_det(const InequalityCase& c, const EvalCtx& ctx, bool proof_form) {
  const size_t count = c.operands.size();
  const int n = c.dim;
  const auto& w = c.params.weights;
  if (w.size() != count) throw parameter_error("weights must match operand count");
  double rmin = 1;
  for (double v : w) rmin = std::min(rmin, v);
  ComplexMatrix wsum(n), plain_sum(n);
  double log_det_prod_w = 0, log_det_prod = 0, sum_det_root = 0, sum_det = 0;
  for (size_t k = 0; k < count; ++k) {
    EigenDecomposition e = eig_hermitian(c.operands[k]);
    if (e.values.back() <= 0) throw parameter_error("determinant suites need definite operands");
    const double d = det_of(e);
    log_det_prod_w += w[k] * std::log(d);
    log_det_prod += std::log(d);
    sum_det_root += std::pow(d, 1.0 / n);
    sum_det += d;
    wsum = wsum + w[k] * c.operands[k];
    plain_sum = plain_sum + c.operands[k];
  }
  const double kd = static_cast<double>(count);
  const double det_wsum = det_of(eig_hermitian(wsum));
  const double det_sum = det_of(eig_hermitian(plain_sum));
  const double geo = std::exp(log_det_prod_w);
  PartFold fold(ctx.tol);
  if (proof_form) {
    fold.add(sum_det_root, std::pow(det_sum, 1.0 / n));
    const double gap = sum_det_root - kd * std::exp(log_det_prod / (n * kd));
    fold.add(geo + std::pow(rmin, n) * std::pow(gap, n), det_wsum);
  } else {
    fold.add(geo + rmin * (det_sum - kd * std::exp(log_det_prod / kd)), det_wsum);
  }
  return fold.result();
}

CheckResult eval_constrained_trace(const InequalityCase& c, const EvalCtx& ctx, bool proof_form) {
  const size_t count = c.operands.size();
  const auto& g = c.params.gammas;
  if (g.size() != count) throw parameter_error("gammas must match operand count");
  double gsum = 0;
  for (double v : g) gsum += v;
  if (!(gsum > 0)) throw parameter_error("gamma total must be positive");
  double tr_plain = 0, tr_weighted = 0, log_prod = 0;
  for (size_t k = 0; k < count; ++k) {
    EigenDecomposition e = eig_hermitian(c.operands[k]);
    double tr = 0, tr_sq = 0;
    for (double v : e.values) {
      tr += v;
      tr_sq += v * v;
    }
    tr_plain += tr;
    tr_weighted += g[k] * tr;
    const double radical = tr + std::sqrt(1 + tr_sq);
    log_prod += (proof_form ? g[k] : 1.0) * std::log(radical);
  }
  const double avg = (proof_form ? tr_weighted : tr_plain) / gsum;
  const double lhs_prod = std::exp(log_prod / gsum);
  return make_check(lhs_prod, avg + std::sqrt(1 + avg * avg), ctx.tol);
}

// ---- registry ------------------------------------------------------------

using Sampler = std::function<InequalityCase(int, int, Rng&, const GridSet&)>;
using Evaluator = std::function<CheckResult(const InequalityCase&, const EvalCtx&)>;

SuiteInfo scalar_suite(std::string id, std::string anchor, bool recorded, Sampler sample,
                       Evaluator eval) {
  SuiteInfo s;
  s.id = std::move(id);
  s.anchor = std::move(anchor);
  s.recorded = recorded;
  s.scalar = true;
  s.conj = ConjMode::none;
  s.sample = std::move(sample);
  s.eval = std::move(eval);
  return s;
}

SuiteInfo matrix_suite(std::string id, std::string anchor, bool recorded, ConjMode conj,
                       Sampler sample, Evaluator eval) {
  SuiteInfo s;
  s.id = std::move(id);
  s.anchor = std::move(anchor);
  s.recorded = recorded;
  s.scalar = false;
  s.conj = conj;
  s.sample = std::move(sample);
  s.eval = std::move(eval);
  return s;
}

Sampler scalar_pair_sampler(const std::string& id, bool with_kappa, bool with_nu = false,
                            bool with_mr = false) {
  return [=](int, int, Rng& rng, const GridSet& g) {
    InequalityCase c = base_case(id, 0);
    sample_scalar_pair(c, rng);
    if (with_nu)
      sample_nu_kappa(c, rng);
    else if (with_kappa)
      c.params.kappa = rng.uniform01();
    if (with_mr) {
      c.params.m = pick(g.m_grid, rng);
      c.params.r_exp = pick(g.r_grid, rng);
    }
    return c;
  };
}

// Evaluates a scalar check in both operand orientations.
Evaluator both_ways(std::function<CheckResult(double, double, const CaseParams&, double)> f) {
  return [f](const InequalityCase& c, const EvalCtx& ctx) {
    PartFold fold(ctx.tol);
    fold.add_result(f(c.params.rho, c.params.sigma, c.params, ctx.tol));
    fold.add_result(f(c.params.sigma, c.params.rho, c.params, ctx.tol));
    return fold.result();
  };
}

std::vector<SuiteInfo> build_registry() {
  std::vector<SuiteInfo> reg;
  const auto kant_form = [](KantorovichForm form) {
    return both_ways([form](double a, double b, const CaseParams& p, double tol) {
      return check_kantorovich_young(a, b, p.kappa, form, tol);
    });
  };

  reg.push_back(matrix_suite(
      "S0.selftest.gm_ge_am", "selftest", true, ConjMode::single_u,
      [](int lo, int hi, Rng& rng, const GridSet&) {
        InequalityCase c = base_case("S0.selftest.gm_ge_am", 0);
        sample_pd_pair(c, lo, hi, rng);
        return c;
      },
      [](const InequalityCase& c, const EvalCtx& ctx) {
        // Deliberately false order claim (arithmetic below geometric) used to
        // exercise violation reporting and shrinking end to end.
        const ComplexMatrix arith = 0.5 * (c.operands[0] + c.operands[1]);
        const ComplexMatrix geom = op_geom_mean(c.operands[0], c.operands[1], 0.5);
        return loewner_check(arith, geom, ctx.tol);
      }));

  reg.push_back(scalar_suite("S1.young.Y1", "Y1", false, scalar_pair_sampler("S1.young.Y1", true),
                             both_ways([](double a, double b, const CaseParams& p, double tol) {
                               return check_young_basic(a, b, p.kappa, tol);
                             })));
  reg.push_back(scalar_suite("S1.young.Y2", "Y2", false, scalar_pair_sampler("S1.young.Y2", false),
                             both_ways([](double a, double b, const CaseParams&, double tol) {
                               return check_amgm(a, b, tol);
                             })));
  reg.push_back(scalar_suite("S1.young.Y3", "Y3", false,
                             scalar_pair_sampler("S1.young.Y3", true, false, true),
                             both_ways([](double a, double b, const CaseParams& p, double tol) {
                               return check_young_refined(a, b, p.kappa, p.m, p.r_exp, tol);
                             })));
  reg.push_back(scalar_suite("S1.kant.A5.refine", "A5", false,
                             scalar_pair_sampler("S1.kant.A5.refine", true),
                             kant_form(KantorovichForm::refine_ratio)));
  reg.push_back(scalar_suite("S1.kant.A5.reverse", "A5", false,
                             scalar_pair_sampler("S1.kant.A5.reverse", true),
                             kant_form(KantorovichForm::reverse_ratio)));
  reg.push_back(scalar_suite("S1.kant.A6.refine", "A6", false,
                             scalar_pair_sampler("S1.kant.A6.refine", true),
                             kant_form(KantorovichForm::refine_diff)));
  reg.push_back(scalar_suite("S1.kant.A7.reverse", "A7", false,
                             scalar_pair_sampler("S1.kant.A7.reverse", true),
                             kant_form(KantorovichForm::reverse_diff)));
  reg.push_back(scalar_suite("S1.kant.A8.reverse", "A8", false,
                             scalar_pair_sampler("S1.kant.A8.reverse", true),
                             kant_form(KantorovichForm::reverse_diff2)));
  reg.push_back(scalar_suite("S1.heinz.A9.interp", "A9", false,
                             scalar_pair_sampler("S1.heinz.A9.interp", true),
                             both_ways([](double a, double b, const CaseParams& p, double tol) {
                               return check_heinz_interp(a, b, p.kappa, tol);
                             })));
  reg.push_back(scalar_suite("S1.heron.A20.bhatia", "A20", false,
                             scalar_pair_sampler("S1.heron.A20.bhatia", true),
                             both_ways([](double a, double b, const CaseParams& p, double tol) {
                               return check_bhatia_heron(a, b, p.kappa, tol);
                             })));

  reg.push_back(matrix_suite(
      "S2.schur.hhm1", "HHM1", false, ConjMode::perm,
      [](int lo, int hi, Rng& rng, const GridSet&) {
        InequalityCase c = base_case("S2.schur.hhm1", 0);
        c.dim = rng.uniform_int(lo, hi);
        c.operands.push_back(gen_positive(c.dim, kSpecLo, kSpecHi, rng).mat());
        c.operands.push_back(random_complex(c.dim, rng));
        return c;
      },
      [](const InequalityCase& c, const EvalCtx& ctx) {
        const double tmax = diag_max(c.operands[0]);
        const auto sv_had = singular_values(schur_product(c.operands[0], c.operands[1]));
        const auto sv_s = singular_values(c.operands[1]);
        const auto family = norms_for_dim(*ctx.norm_tokens, c.dim);
        PartFold fold(ctx.tol);
        for (const auto& sel : family) fold.add(ui_norm(sv_had, sel), tmax * ui_norm(sv_s, sel));
        return fold.result();
      }));

  reg.push_back(matrix_suite(
      "S2.psd.hhm2", "HHM2", false, ConjMode::none,
      [](int lo, int hi, Rng& rng, const GridSet&) {
        InequalityCase c = base_case("S2.psd.hhm2", 0);
        c.dim = rng.uniform_int(lo, hi);
        c.params.kappas.resize(c.dim);
        for (auto& k : c.params.kappas) k = rng.log_uniform(kSpecLo, kSpecHi);
        c.params.r_hhm = rng.uniform(-1.0, 1.0);
        c.params.t_hhm = rng.uniform(-1.999, 2.0);
        return c;
      },
      [](const InequalityCase& c, const EvalCtx& ctx) {
        const auto& ks = c.params.kappas;
        const double r = c.params.r_hhm, t = c.params.t_hhm;
        if (!(t > -2)) throw parameter_error("need t > -2");
        const int n = static_cast<int>(ks.size());
        ComplexMatrix gamma(n);
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < n; ++j)
            gamma.at(i, j) = (std::pow(ks[i], r) + std::pow(ks[j], r)) /
                             (ks[i] * ks[i] + t * ks[i] * ks[j] + ks[j] * ks[j]);
        const double lam = min_eigenvalue(gamma);
        return make_check(-lam, 0.0, ctx.tol);
      }));

  const auto psi_sampler = [](const std::string& id, bool fixed_half) {
    return Sampler([id, fixed_half](int lo, int hi, Rng& rng, const GridSet&) {
      InequalityCase c = base_case(id, 0);
      sample_pd_pair_x(c, lo, hi, rng);
      c.params.kappa = fixed_half ? 0.5 : rng.uniform01();
      return c;
    });
  };
  reg.push_back(matrix_suite("S2.rahma1.psi", "Rahma1", false, ConjMode::uv_x,
                             psi_sampler("S2.rahma1.psi", true), eval_psi_monotone));
  reg.push_back(matrix_suite("S2.rahma1.psi.kappa", "Rahma1", true, ConjMode::uv_x,
                             psi_sampler("S2.rahma1.psi.kappa", false), eval_psi_monotone));
  reg.push_back(matrix_suite("S2.refund1.phi", "Refund1", false, ConjMode::uv_x,
                             psi_sampler("S2.refund1.phi", false), eval_phi_monotone));
  reg.push_back(matrix_suite(
      "S2.refund2.chain", "Refund2", false, ConjMode::uv_x,
      [](int lo, int hi, Rng& rng, const GridSet&) {
        InequalityCase c = base_case("S2.refund2.chain", 0);
        sample_pd_pair_x(c, lo, hi, rng);
        c.params.kappa = rng.uniform(0.25, 0.75);
        return c;
      },
      [](const InequalityCase& c, const EvalCtx& ctx) { return eval_chain(c, ctx, true); }));
  reg.push_back(matrix_suite(
      "S2.refund2.chain.stated", "Refund2", true, ConjMode::uv_x,
      psi_sampler("S2.refund2.chain.stated", false),
      [](const InequalityCase& c, const EvalCtx& ctx) { return eval_chain(c, ctx, false); }));
  reg.push_back(matrix_suite(
      "S2.cor.rahma2", "Rahma2", false, ConjMode::uv_x, psi_sampler("S2.cor.rahma2", false),
      [](const InequalityCase& c, const EvalCtx& ctx) {
        return eval_corollary(c, ctx, CorollaryVariant::symmetrized, true);
      }));
  reg.push_back(matrix_suite(
      "S2.cor.rahma2.stated", "Rahma2", true, ConjMode::uv_x,
      psi_sampler("S2.cor.rahma2.stated", false),
      [](const InequalityCase& c, const EvalCtx& ctx) {
        return eval_corollary(c, ctx, CorollaryVariant::symmetrized, false);
      }));
  reg.push_back(matrix_suite(
      "S2.cor.boshra1", "Boshra1", false, ConjMode::uv_x, psi_sampler("S2.cor.boshra1", false),
      [](const InequalityCase& c, const EvalCtx& ctx) {
        return eval_corollary(c, ctx, CorollaryVariant::one_sided, true);
      }));
  reg.push_back(matrix_suite(
      "S2.cor.boshra1.stated", "Boshra1", true, ConjMode::uv_x,
      psi_sampler("S2.cor.boshra1.stated", false),
      [](const InequalityCase& c, const EvalCtx& ctx) {
        return eval_corollary(c, ctx, CorollaryVariant::one_sided, false);
      }));

  const auto lemma_suite = [&](const std::string& id, bool reverse, StatementForm form) {
    return scalar_suite(id, reverse ? "B3" : "B1", form == StatementForm::stated,
                        scalar_pair_sampler(id, true, true),
                        both_ways([reverse, form](double a, double b, const CaseParams& p, double tol) {
                          return reverse ? check_heinz_lemma_reverse(a, b, p.nu, p.kappa, form, tol)
                                         : check_heinz_lemma_refine(a, b, p.nu, p.kappa, form, tol);
                        }));
  };
  reg.push_back(lemma_suite("S3.lemma.B1.fixed", false, StatementForm::corrected));
  reg.push_back(lemma_suite("S3.lemma.B1.stated", false, StatementForm::stated));
  reg.push_back(lemma_suite("S3.lemma.B3.fixed", true, StatementForm::corrected));
  reg.push_back(lemma_suite("S3.lemma.B3.stated", true, StatementForm::stated));

  const auto heinz_suite = [&](const std::string& id, bool reverse, StatementForm form) {
    return scalar_suite(id, reverse ? "Heinz-A2" : "Heinz-A1", form == StatementForm::stated,
                        scalar_pair_sampler(id, true, true),
                        both_ways([reverse, form](double a, double b, const CaseParams& p, double tol) {
                          return reverse ? check_heinz_reversed(a, b, p.nu, p.kappa, form, tol)
                                         : check_heinz_refined(a, b, p.nu, p.kappa, form, tol);
                        }));
  };
  reg.push_back(heinz_suite("S3.heinz.A1.fixed", false, StatementForm::corrected));
  reg.push_back(heinz_suite("S3.heinz.A1.stated", false, StatementForm::stated));
  reg.push_back(heinz_suite("S3.heinz.A2.fixed", true, StatementForm::corrected));
  reg.push_back(heinz_suite("S3.heinz.A2.stated", true, StatementForm::stated));

  const auto cond_sampler = [](const std::string& id) {
    return Sampler([id](int lo, int hi, Rng& rng, const GridSet&) {
      InequalityCase c = base_case(id, 0);
      sample_conditioned(c, lo, hi, rng);
      return c;
    });
  };
  reg.push_back(matrix_suite("S4.heinz.O1", "thm4.2", false, ConjMode::single_u,
                             cond_sampler("S4.heinz.O1"),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_operator_heinz(c, ctx, OperatorHeinzKind::refine_O1,
                                                          StatementForm::corrected);
                             }));
  reg.push_back(matrix_suite("S4.heinz.O1.stated", "thm4.2", true, ConjMode::single_u,
                             cond_sampler("S4.heinz.O1.stated"),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_operator_heinz(c, ctx, OperatorHeinzKind::refine_O1,
                                                          StatementForm::stated);
                             }));
  reg.push_back(matrix_suite("S4.heinz.A2op", "thm4.3", false, ConjMode::single_u,
                             cond_sampler("S4.heinz.A2op"),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_operator_heinz(c, ctx, OperatorHeinzKind::reverse_A2op,
                                                          StatementForm::corrected);
                             }));
  reg.push_back(matrix_suite("S4.heinz.A2op.stated", "thm4.3", true, ConjMode::single_u,
                             cond_sampler("S4.heinz.A2op.stated"),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_operator_heinz(c, ctx, OperatorHeinzKind::reverse_A2op,
                                                          StatementForm::stated);
                             }));

  reg.push_back(matrix_suite(
      "S5.ando.sj", "Ando1", false, ConjMode::single_u,
      [](int lo, int hi, Rng& rng, const GridSet&) {
        InequalityCase c = base_case("S5.ando.sj", 0);
        c.dim = rng.uniform_int(lo, hi);
        c.params.p = rng.uniform(1.1, 4.0);
        const double q = c.params.p / (c.params.p - 1);
        // Keep T^p and S^q within ~1e5 dynamic range so their small singular
        // values stay certifiable at the campaign tolerance.
        const auto band = [](double e) {
          return std::pair<double, double>{std::max(kSpecLo, std::pow(10.0, -2.5 / e)),
                                           std::min(kSpecHi, std::pow(10.0, 2.5 / e))};
        };
        const auto [tlo, thi] = band(c.params.p);
        const auto [slo, shi] = band(q);
        c.operands.push_back(gen_positive(c.dim, tlo, thi, rng).mat());
        c.operands.push_back(gen_positive(c.dim, slo, shi, rng).mat());
        return c;
      },
      [](const InequalityCase& c, const EvalCtx& ctx) {
        const double p = c.params.p, q = p / (p - 1);
        const auto sv_ts = singular_values(c.operands[0] * c.operands[1]);
        const auto sv_rhs = singular_values((1 / p) * fractional_power(c.operands[0], p) +
                                            (1 / q) * fractional_power(c.operands[1], q));
        PartFold fold(ctx.tol);
        for (int j = 0; j < c.dim; ++j) fold.add(sv_ts[j], sv_rhs[j]);
        return fold.result();
      }));

  reg.push_back(scalar_suite(
      "S5.scalar.man1", "Man1", false,
      [](int, int, Rng& rng, const GridSet& g) {
        InequalityCase c = base_case("S5.scalar.man1", 0);
        sample_scalar_pair(c, rng);
        c.params.p = rng.uniform(1.1, 4.0);
        c.params.m = pick(g.m_grid, rng);
        c.params.r_exp = pick(g.r_grid, rng);
        return c;
      },
      [](const InequalityCase& c, const EvalCtx& ctx) {
        return check_man1(c.params.rho, c.params.sigma, c.params.p, c.params.m, c.params.r_exp,
                          ctx.tol);
      }));

  const auto pd_pqmr_sampler = [](const std::string& id, bool with_x) {
    return Sampler([id, with_x](int lo, int hi, Rng& rng, const GridSet& g) {
      InequalityCase c = base_case(id, 0);
      if (with_x)
        sample_pd_pair_x(c, lo, hi, rng);
      else
        sample_pd_pair(c, lo, hi, rng);
      sample_pqmr(c, rng, g);
      return c;
    });
  };
  reg.push_back(matrix_suite("S5.trace.man2", "TRACEONE", true, ConjMode::single_u,
                             pd_pqmr_sampler("S5.trace.man2", false),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_trace_young(c, ctx, false);
                             }));
  reg.push_back(matrix_suite("S5.trace.rashid1", "RASHID-1", true, ConjMode::single_u,
                             pd_pqmr_sampler("S5.trace.rashid1", false),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_trace_young(c, ctx, true);
                             }));
  reg.push_back(matrix_suite("S5.det.rashidq1.stated", "RashidQ1", true, ConjMode::single_u,
                             pd_pqmr_sampler("S5.det.rashidq1.stated", false),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_det_young(c, ctx, false);
                             }));
  reg.push_back(matrix_suite("S5.det.rashidq1.proof", "RashidQ1", true, ConjMode::single_u,
                             pd_pqmr_sampler("S5.det.rashidq1.proof", false),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_det_young(c, ctx, true);
                             }));
  reg.push_back(matrix_suite("S5.norm.unnorm", "GHADEER11", false, ConjMode::uv_x,
                             pd_pqmr_sampler("S5.norm.unnorm", true),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_uinorm_young(c, ctx, false);
                             }));
  reg.push_back(matrix_suite("S5.norm.unnorm.sx", "GHADEER11", true, ConjMode::single_u,
                             pd_pqmr_sampler("S5.norm.unnorm.sx", true),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_uinorm_young(c, ctx, true);
                             }));

  reg.push_back(matrix_suite(
      "S5.norm.heinzkato", "A11", false, ConjMode::uv_x,
      [](int lo, int hi, Rng& rng, const GridSet&) {
        InequalityCase c = base_case("S5.norm.heinzkato", 0);
        sample_pd_pair_x(c, lo, hi, rng);
        c.params.theta = rng.uniform01();
        return c;
      },
      [](const InequalityCase& c, const EvalCtx& ctx) {
        const double th = c.params.theta;
        const ComplexMatrix cross = fractional_power(c.operands[0], th) * c.operands[2] *
                                    fractional_power(c.operands[1], 1 - th);
        const auto sv_cross = singular_values(cross);
        const auto sv_tx = singular_values(c.operands[0] * c.operands[2]);
        const auto sv_xs = singular_values(c.operands[2] * c.operands[1]);
        const auto family = norms_for_dim(*ctx.norm_tokens, c.dim);
        PartFold fold(ctx.tol);
        for (const auto& sel : family)
          fold.add(ui_norm(sv_cross, sel),
                   std::pow(ui_norm(sv_tx, sel), th) * std::pow(ui_norm(sv_xs, sel), 1 - th));
        return fold.result();
      }));

  reg.push_back(matrix_suite(
      "S5.trace.heinzkato", "A22", false, ConjMode::single_u,
      [](int lo, int hi, Rng& rng, const GridSet&) {
        InequalityCase c = base_case("S5.trace.heinzkato", 0);
        sample_pd_pair(c, lo, hi, rng);
        c.params.theta = rng.uniform01();
        return c;
      },
      [](const InequalityCase& c, const EvalCtx& ctx) {
        const double th = c.params.theta;
        const ComplexMatrix cross =
            fractional_power(c.operands[0], th) * fractional_power(c.operands[1], 1 - th);
        const double lhs = trace_norm(cross);
        const double rhs =
            std::pow(trace_real(c.operands[0]), th) * std::pow(trace_real(c.operands[1]), 1 - th);
        return make_check(lhs, rhs, ctx.tol);
      }));

  reg.push_back(scalar_suite(
      "S5.scalar.furu", "Furu", false,
      [](int, int, Rng& rng, const GridSet&) {
        InequalityCase c = base_case("S5.scalar.furu", 0);
        const int n = rng.uniform_int(2, 5);
        c.params.weights = sample_simplex_weights(n, rng);
        c.params.omegas.resize(n);
        for (auto& v : c.params.omegas) v = rng.log_uniform(kSpecLo, kSpecHi);
        return c;
      },
      [](const InequalityCase& c, const EvalCtx& ctx) {
        return check_furu(c.params.weights, c.params.omegas, ctx.tol);
      }));

  const auto multi_sampler = [](const std::string& id, int count_min, bool gammas) {
    return Sampler([id, count_min, gammas](int lo, int hi, Rng& rng, const GridSet&) {
      InequalityCase c = base_case(id, 0);
      sample_multi(c, lo, hi, count_min, rng);
      if (gammas) {
        c.params.gammas.resize(c.operands.size());
        for (auto& v : c.params.gammas) v = rng.uniform(0.05, 2.0);
      } else {
        c.params.weights = sample_simplex_weights(c.operands.size(), rng);
      }
      return c;
    });
  };
  reg.push_back(matrix_suite("S5.trace.rashid2", "Trace1", false, ConjMode::single_u,
                             multi_sampler("S5.trace.rashid2", 2, false),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_multi_trace(c, ctx, false);
                             }));
  reg.push_back(matrix_suite("S5.trace.tracethree", "Tracethree", false, ConjMode::single_u,
                             multi_sampler("S5.trace.tracethree", 2, false),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_multi_trace(c, ctx, true);
                             }));

  reg.push_back(matrix_suite(
      "S5.det.minkowski", "sum-det", false, ConjMode::single_u,
      [](int lo, int hi, Rng& rng, const GridSet&) {
        InequalityCase c = base_case("S5.det.minkowski", 0);
        sample_pd_pair(c, lo, hi, rng);
        return c;
      },
      [](const InequalityCase& c, const EvalCtx& ctx) {
        EigenDecomposition et = eig_hermitian(c.operands[0]), es = eig_hermitian(c.operands[1]);
        if (et.values.back() <= 0 || es.values.back() <= 0)
          throw parameter_error("determinant suites need definite operands");
        const double n = c.dim;
        const double lhs = std::pow(det_of(et), 1 / n) + std::pow(det_of(es), 1 / n);
        const double rhs =
            std::pow(det_of(eig_hermitian(c.operands[0] + c.operands[1])), 1 / n);
        return make_check(lhs, rhs, ctx.tol);
      }));
  reg.push_back(matrix_suite("S5.det.deter1.stated", "DETER1", true, ConjMode::single_u,
                             multi_sampler("S5.det.deter1.stated", 2, false),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_multi_det(c, ctx, false);
                             }));
  reg.push_back(matrix_suite("S5.det.deter1.proof", "DETER1", false, ConjMode::single_u,
                             multi_sampler("S5.det.deter1.proof", 2, false),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_multi_det(c, ctx, true);
                             }));

  reg.push_back(scalar_suite(
      "S5.scalar.constrained", "Constrained", false,
      [](int, int, Rng& rng, const GridSet&) {
        InequalityCase c = base_case("S5.scalar.constrained", 0);
        const int n = rng.uniform_int(1, 5);
        c.params.gammas.resize(n);
        for (auto& v : c.params.gammas) v = rng.uniform(0.05, 2.0);
        c.params.omegas.resize(n);
        for (auto& v : c.params.omegas) v = rng.log_uniform(kSpecLo, kSpecHi);
        return c;
      },
      [](const InequalityCase& c, const EvalCtx& ctx) {
        return check_constrained_scalar(c.params.gammas, c.params.omegas, ctx.tol);
      }));
  reg.push_back(matrix_suite("S5.trace.const1.stated", "Const1", true, ConjMode::single_u,
                             multi_sampler("S5.trace.const1.stated", 1, true),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_constrained_trace(c, ctx, false);
                             }));
  reg.push_back(matrix_suite("S5.trace.const1.proof", "Const1", false, ConjMode::single_u,
                             multi_sampler("S5.trace.const1.proof", 1, true),
                             [](const InequalityCase& c, const EvalCtx& ctx) {
                               return eval_constrained_trace(c, ctx, true);
                             }));
  return reg;
}

}  // namespace

const std::vector<SuiteInfo>& suite_registry() {
  static const std::vector<SuiteInfo> reg = build_registry();
  return reg;
}

const SuiteInfo& find_suite(const std::string& id) {
  for (const auto& s : suite_registry())
    if (s.id == id) return s;
  std::string valid;
  for (const auto& s : suite_registry()) valid += "\n  " + s.id;
  throw parameter_error("unknown suite '" + id + "'; valid ids:" + valid);
}

CheckResult evaluate_case(const InequalityCase& c, const EvalCtx& ctx) {
  return find_suite(c.suite_id).eval(c, ctx);
}

uint64_t case_seed(uint64_t campaign_seed, const std::string& suite_id, int trial) {
  return campaign_seed ^ fnv1a64(suite_id + ":" + std::to_string(trial));
}

InequalityCase regenerate_case(const SuiteInfo& suite, uint64_t seed, int dim_min, int dim_max,
                               const GridSet& grids) {
  Rng rng(seed);
  InequalityCase c = suite.sample(dim_min, dim_max, rng, grids);
  c.seed = seed;
  return c;
}

}  // namespace heinzlab
