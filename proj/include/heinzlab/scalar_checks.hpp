#pragma once

#include <algorithm>
#include <cmath>
#include <string>

#include "heinzlab/complex_matrix.hpp"

namespace heinzlab {

// Outcome of one inequality evaluation, oriented as lhs <= rhs.
// slack = rhs - lhs; rel_slack = slack / max(1, |lhs|, |rhs|);
// pass iff rel_slack >= -tol.  For multi-part checks (grids, norm families)
// the reported sides are those of the part with minimal rel_slack and `part`
// is its index in the evaluator's fixed enumeration order.
struct CheckResult {
  double lhs = 0;
  double rhs = 0;
  double slack = 0;
  double rel_slack = 0;
  double tol = 0;
  bool pass = true;
  int part = 0;
};

inline CheckResult make_check(double lhs, double rhs, double tol, int part = 0) {
  if (!std::isfinite(lhs) || !std::isfinite(rhs)) throw numeric_error("non-finite check value");
  CheckResult r;
  r.lhs = lhs;
  r.rhs = rhs;
  r.slack = rhs - lhs;
  const double scale = std::max({1.0, std::fabs(lhs), std::fabs(rhs)});
  r.rel_slack = r.slack / scale;
  r.tol = tol;
  r.pass = r.rel_slack >= -tol;
  r.part = part;
  return r;
}

inline CheckResult worse_of(const CheckResult& a, const CheckResult& b) {
  return b.rel_slack < a.rel_slack ? b : a;
}

// Accumulates the minimum-rel-slack part while numbering parts in order.
struct PartFold {
  double tol;
  CheckResult best;
  int count = 0;
  explicit PartFold(double tol_) : tol(tol_) {}
  void add(double lhs, double rhs) {
    CheckResult r = make_check(lhs, rhs, tol, count++);
    if (count == 1 || r.rel_slack < best.rel_slack) best = r;
  }
  void add_result(const CheckResult& r) { add(r.lhs, r.rhs); }
  CheckResult result() const {
    if (count == 0) throw parameter_error("no parts evaluated");
    return best;
  }
};

double kantorovich(double t);

struct ScalarMeans {
  double arith;  // kappa*rho + (1-kappa)*sigma
  double geom;   // rho^kappa * sigma^(1-kappa)
  double heinz;  // (rho#_k sigma + rho#_{1-k} sigma)/2
  double heron;  // (1-theta)sqrt(rho sigma) + theta(rho+sigma)/2
};

ScalarMeans scalar_means(double rho, double sigma, double kappa, double theta);

double weighted_geom(double rho, double sigma, double kappa);
double weighted_arith(double rho, double sigma, double kappa);
double heinz_scalar(double rho, double sigma, double kappa);
double heron_scalar(double rho, double sigma, double theta);

// Which side of a refine/reverse family an op checks.
enum class KantorovichForm { refine_ratio, reverse_ratio, refine_diff, reverse_diff, reverse_diff2 };

CheckResult check_young_basic(double rho, double sigma, double kappa, double tol);
CheckResult check_amgm(double rho, double sigma, double tol);
CheckResult check_young_refined(double rho, double sigma, double kappa, int m, double r_exp, double tol);
CheckResult check_kantorovich_young(double rho, double sigma, double kappa, KantorovichForm form, double tol);
CheckResult check_heinz_interp(double rho, double sigma, double kappa, double tol);
CheckResult check_bhatia_heron(double rho, double sigma, double kappa, double tol);

enum class StatementForm { stated, corrected };

// Two-weight lemmas, requiring 0 <= nu < kappa <= 1.
CheckResult check_heinz_lemma_refine(double rho, double sigma, double nu, double kappa, StatementForm form, double tol);
CheckResult check_heinz_lemma_reverse(double rho, double sigma, double nu, double kappa, StatementForm form, double tol);
CheckResult check_heinz_refined(double rho, double sigma, double nu, double kappa, StatementForm form, double tol);
CheckResult check_heinz_reversed(double rho, double sigma, double nu, double kappa, StatementForm form, double tol);

CheckResult check_man1(double rho, double sigma, double p, int m, double r_exp, double tol);
CheckResult check_furu(const std::vector<double>& weights, const std::vector<double>& omega, double tol);
CheckResult check_constrained_scalar(const std::vector<double>& gammas, const std::vector<double>& omega, double tol);

}  // namespace heinzlab
