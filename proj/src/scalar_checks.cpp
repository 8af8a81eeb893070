#include "heinzlab/scalar_checks.hpp"

#include <cmath>

namespace heinzlab {

namespace {

void require_positive_pair(double rho, double sigma) {
  if (!(rho > 0) || !(sigma > 0))
    throw parameter_error("scalar operands must be positive");
}

void require_weight(double kappa) {
  if (!(kappa >= 0 && kappa <= 1)) throw parameter_error("weight must lie in [0, 1]");
}

void require_nu_kappa(double nu, double kappa) {
  if (!(kappa > 0 && kappa <= 1)) throw parameter_error("kappa must lie in (0, 1]");
  if (!(nu >= 0 && nu < kappa)) throw parameter_error("nu must satisfy 0 <= nu < kappa");
}

}  // namespace

double kantorovich(double t) {
  if (!(t > 0)) throw parameter_error("kantorovich constant needs t > 0");
  return (t + 1) * (t + 1) / (4 * t);
}

double weighted_geom(double rho, double sigma, double kappa) {
  return std::pow(rho, kappa) * std::pow(sigma, 1 - kappa);
}

double weighted_arith(double rho, double sigma, double kappa) {
  return kappa * rho + (1 - kappa) * sigma;
}

double heinz_scalar(double rho, double sigma, double kappa) {
  return 0.5 * (weighted_geom(rho, sigma, kappa) + weighted_geom(rho, sigma, 1 - kappa));
}

double heron_scalar(double rho, double sigma, double theta) {
  return (1 - theta) * std::sqrt(rho * sigma) + theta * 0.5 * (rho + sigma);
}

ScalarMeans scalar_means(double rho, double sigma, double kappa, double theta) {
  require_positive_pair(rho, sigma);
  require_weight(kappa);
  return ScalarMeans{weighted_arith(rho, sigma, kappa), weighted_geom(rho, sigma, kappa),
                     heinz_scalar(rho, sigma, kappa), heron_scalar(rho, sigma, theta)};
}

CheckResult check_young_basic(double rho, double sigma, double kappa, double tol) {
  require_positive_pair(rho, sigma);
  require_weight(kappa);
  return make_check(weighted_geom(rho, sigma, kappa), weighted_arith(rho, sigma, kappa), tol);
}

CheckResult check_amgm(double rho, double sigma, double tol) {
  require_positive_pair(rho, sigma);
  return make_check(std::sqrt(rho * sigma), 0.5 * (rho + sigma), tol);
}

CheckResult check_young_refined(double rho, double sigma, double kappa, int m, double r_exp,
                                double tol) {
  require_positive_pair(rho, sigma);
  require_weight(kappa);
  if (m < 1) throw parameter_error("m must be a positive integer");
  if (!(r_exp >= 1)) throw parameter_error("r must satisfy r >= 1");
  const double r0 = std::min(kappa, 1 - kappa);
  const double lhs = std::pow(weighted_geom(rho, sigma, kappa), m) +
                     std::pow(r0, m) * std::pow(std::pow(rho, m / 2.0) - std::pow(sigma, m / 2.0), 2);
  const double rhs = std::pow(kappa * std::pow(rho, r_exp) + (1 - kappa) * std::pow(sigma, r_exp),
                              m / r_exp);
  return make_check(lhs, rhs, tol);
}

CheckResult check_kantorovich_young(double rho, double sigma, double kappa, KantorovichForm form,
                                    double tol) {
  require_positive_pair(rho, sigma);
  require_weight(kappa);
  const double h = sigma / rho;
  const double r = std::min(kappa, 1 - kappa);
  const double R = std::max(kappa, 1 - kappa);
  const double rp = std::min(2 * r, 1 - 2 * r);
  const double Rp = std::max(2 * r, 1 - 2 * r);
  const double geom = weighted_geom(rho, sigma, kappa);
  const double arith = weighted_arith(rho, sigma, kappa);
  const double gap = std::pow(std::sqrt(rho) - std::sqrt(sigma), 2);
  switch (form) {
    case KantorovichForm::refine_ratio:
      return make_check(std::pow(kantorovich(h), r) * geom, arith, tol);
    case KantorovichForm::reverse_ratio:
      return make_check(arith, std::pow(kantorovich(h), R) * geom, tol);
    case KantorovichForm::refine_diff:
      return make_check(r * gap + std::pow(kantorovich(std::sqrt(h)), rp) * geom, arith, tol);
    case KantorovichForm::reverse_diff:
      return make_check(arith, std::pow(kantorovich(std::sqrt(h)), -rp) * geom + R * gap, tol);
    case KantorovichForm::reverse_diff2:
      return make_check(arith - R * gap, std::pow(kantorovich(std::sqrt(h)), Rp) * geom, tol);
  }
  throw parameter_error("unknown form");
}

CheckResult check_heinz_interp(double rho, double sigma, double kappa, double tol) {
  require_positive_pair(rho, sigma);
  require_weight(kappa);
  const double hz = heinz_scalar(rho, sigma, kappa);
  PartFold fold(tol);
  fold.add(std::sqrt(rho * sigma), hz);
  fold.add(hz, 0.5 * (rho + sigma));
  return fold.result();
}

CheckResult check_bhatia_heron(double rho, double sigma, double kappa, double tol) {
  require_positive_pair(rho, sigma);
  require_weight(kappa);
  const double theta = (2 * kappa - 1) * (2 * kappa - 1);
  return make_check(heinz_scalar(rho, sigma, kappa), heron_scalar(rho, sigma, theta), tol);
}

namespace {

struct LemmaTerms {
  double w, r, rp, R;
  double karg;      // argument handed to the Kantorovich constant
  double sharp_nu;  // rho #_nu sigma
  double gap;       // (sqrt(rho #_kappa sigma) - sqrt(sigma))^2
  double mixed;     // nu rho + (1-nu) sigma - (nu/kappa)(arith_k - geom_k)
};

LemmaTerms lemma_terms(double rho, double sigma, double nu, double kappa, StatementForm form) {
  require_positive_pair(rho, sigma);
  require_nu_kappa(nu, kappa);
  LemmaTerms t;
  t.w = nu / kappa;
  t.r = std::min(t.w, 1 - t.w);
  t.rp = std::min(2 * t.r, 1 - 2 * t.r);
  t.R = std::max(t.w, 1 - t.w);
  t.karg = form == StatementForm::stated ? std::sqrt(rho / sigma)
                                               : std::pow(rho / sigma, kappa / 2);
  t.sharp_nu = weighted_geom(rho, sigma, nu);
  const double gk = weighted_geom(rho, sigma, kappa);
  t.gap = std::pow(std::sqrt(gk) - std::sqrt(sigma), 2);
  t.mixed = nu * rho + (1 - nu) * sigma - t.w * (weighted_arith(rho, sigma, kappa) - gk);
  return t;
}

}  // namespace

CheckResult check_heinz_lemma_refine(double rho, double sigma, double nu, double kappa,
                                     StatementForm form, double tol) {
  const LemmaTerms t = lemma_terms(rho, sigma, nu, kappa, form);
  const double lhs = t.r * t.gap + std::pow(kantorovich(t.karg), t.rp) * t.sharp_nu;
  return make_check(lhs, t.mixed, tol);
}

CheckResult check_heinz_lemma_reverse(double rho, double sigma, double nu, double kappa,
                                      StatementForm form, double tol) {
  const LemmaTerms t = lemma_terms(rho, sigma, nu, kappa, form);
  const double rhs = std::pow(kantorovich(t.karg), -t.rp) * t.sharp_nu + t.R * t.gap;
  return make_check(t.mixed, rhs, tol);
}

namespace {

struct HeinzTerms {
  double w, r, rp, R;
  double kval;     // Kantorovich constant at the form's argument
  double bracket;  // H_kappa + H_0 - H_{kappa/2} (stated) or ... - 2 H_{kappa/2} (corrected)
  double h_nu, mixed;
};

HeinzTerms heinz_terms(double rho, double sigma, double nu, double kappa, StatementForm form) {
  require_positive_pair(rho, sigma);
  require_nu_kappa(nu, kappa);
  HeinzTerms t;
  t.w = nu / kappa;
  t.r = std::min(t.w, 1 - t.w);
  t.rp = std::min(2 * t.r, 1 - 2 * t.r);
  t.R = form == StatementForm::stated ? std::min(t.w, 1 - t.w) : std::max(t.w, 1 - t.w);
  const double karg = form == StatementForm::stated ? std::sqrt(rho / sigma)
                                                          : std::pow(rho / sigma, kappa / 2);
  t.kval = kantorovich(karg);
  const double hk = heinz_scalar(rho, sigma, kappa);
  const double h0 = heinz_scalar(rho, sigma, 0);
  const double hk2 = heinz_scalar(rho, sigma, kappa / 2);
  t.bracket = form == StatementForm::stated ? hk + h0 - hk2 : hk + h0 - 2 * hk2;
  t.h_nu = heinz_scalar(rho, sigma, nu);
  t.mixed = h0 - t.w * (h0 - hk);
  return t;
}

}  // namespace

CheckResult check_heinz_refined(double rho, double sigma, double nu, double kappa,
                                StatementForm form, double tol) {
  const HeinzTerms t = heinz_terms(rho, sigma, nu, kappa, form);
  const double lhs = t.r * t.bracket + std::pow(t.kval, t.rp) * t.h_nu;
  return make_check(lhs, t.mixed, tol);
}

CheckResult check_heinz_reversed(double rho, double sigma, double nu, double kappa,
                                 StatementForm form, double tol) {
  const HeinzTerms t = heinz_terms(rho, sigma, nu, kappa, form);
  const double rhs = std::pow(t.kval, -t.rp) * t.h_nu + t.R * t.bracket;
  return make_check(t.mixed, rhs, tol);
}

CheckResult check_man1(double rho, double sigma, double p, int m, double r_exp, double tol) {
  require_positive_pair(rho, sigma);
  if (!(p > 1)) throw parameter_error("p must exceed 1");
  if (m < 1) throw parameter_error("m must be a positive integer");
  if (!(r_exp >= 1)) throw parameter_error("r must satisfy r >= 1");
  const double q = p / (p - 1);
  const double r0 = std::min(1 / p, 1 / q);
  const double lhs =
      std::pow(std::pow(rho, 1 / p) * std::pow(sigma, 1 / q), m) +
      std::pow(r0, m) * std::pow(std::pow(rho, m / 2.0) - std::pow(sigma, m / 2.0), 2);
  const double rhs =
      std::pow(std::pow(rho, r_exp) / p + std::pow(sigma, r_exp) / q, m / r_exp);
  return make_check(lhs, rhs, tol);
}

CheckResult check_furu(const std::vector<double>& weights, const std::vector<double>& omega,
                       double tol) {
  const size_t n = omega.size();
  if (n == 0 || weights.size() != n) throw parameter_error("weights and omegas must align");
  double wsum = 0, prod = 1, prod_w = 1, sum = 0, dot = 0, r = 1;
  for (size_t i = 0; i < n; ++i) {
    if (!(omega[i] > 0)) throw parameter_error("omegas must be positive");
    if (!(weights[i] >= 0)) throw parameter_error("weights must be nonnegative");
    wsum += weights[i];
    prod *= omega[i];
    prod_w *= std::pow(omega[i], weights[i]);
    sum += omega[i];
    dot += weights[i] * omega[i];
    r = std::min(r, weights[i]);
  }
  if (std::fabs(wsum - 1) > 1e-12) throw parameter_error("weights must sum to 1");
  const double lhs = prod_w + r * (sum - static_cast<double>(n) * std::pow(prod, 1.0 / n));
  return make_check(lhs, dot, tol);
}

CheckResult check_constrained_scalar(const std::vector<double>& gammas,
                                     const std::vector<double>& omega, double tol) {
  const size_t n = omega.size();
  if (n == 0 || gammas.size() != n) throw parameter_error("gammas and omegas must align");
  double gsum = 0;
  for (double g : gammas) {
    if (!(g >= 0)) throw parameter_error("gammas must be nonnegative");
    gsum += g;
  }
  if (!(gsum > 0)) throw parameter_error("gamma total must be positive");
  double log_prod = 0, avg = 0;
  for (size_t i = 0; i < n; ++i) {
    if (!(omega[i] > 0)) throw parameter_error("omegas must be positive");
    log_prod += gammas[i] * std::log(omega[i] + std::sqrt(1 + omega[i] * omega[i]));
    avg += gammas[i] * omega[i];
  }
  avg /= gsum;
  const double lhs = std::exp(log_prod / gsum);
  const double rhs = avg + std::sqrt(1 + avg * avg);
  return make_check(lhs, rhs, tol);
}

}  // namespace heinzlab
