#include "heinzlab/harness.hpp"

#include <chrono>
#include <cmath>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace heinzlab {

namespace {

void validate_config(const CampaignConfig& cfg) {
  if (cfg.dim_min < 1 || cfg.dim_min > cfg.dim_max)
    throw parameter_error("need 1 <= dim_min <= dim_max");
  if (cfg.trials < 1) throw parameter_error("need trials >= 1");
  if (!(cfg.tol_rel > 0)) throw parameter_error("need tol_rel > 0");
  if (cfg.norm_tokens.empty()) throw parameter_error("norm family must not be empty");
}

ComplexMatrix drop_index(const ComplexMatrix& m, int drop) {
  ComplexMatrix out(m.dim - 1);
  int oi = 0;
  for (int i = 0; i < m.dim; ++i) {
    if (i == drop) continue;
    int oj = 0;
    for (int j = 0; j < m.dim; ++j) {
      if (j == drop) continue;
      out.at(oi, oj) = m.at(i, j);
      ++oj;
    }
    ++oi;
  }
  return out;
}

double round_sig(double v, int digits) {
  if (v == 0 || !std::isfinite(v)) return v;
  const int shift = digits - 1 - static_cast<int>(std::floor(std::log10(std::fabs(v))));
  const double mag = std::pow(10.0, shift);
  return std::round(v * mag) / mag;
}

struct Shrinker {
  const EvalCtx& ctx;
  InequalityCase cur;
  int accepted = 0;

  bool try_accept(const InequalityCase& cand) {
    if (accepted >= 200) return false;
    try {
      if (evaluate_case(cand, ctx).pass) return false;
    } catch (const std::exception&) {
      return false;
    }
    cur = cand;
    ++accepted;
    return true;
  }

  bool pass_dim() {
    bool any = false, go = true;
    while (go && cur.dim > 1) {
      go = false;
      for (int j = 0; j < cur.dim; ++j) {
        InequalityCase cand = cur;
        cand.dim = cur.dim - 1;
        cand.operands.clear();
        for (const auto& op : cur.operands) cand.operands.push_back(drop_index(op, j));
        if (cand.params.kappas.size() == static_cast<size_t>(cur.dim))
          cand.params.kappas.erase(cand.params.kappas.begin() + j);
        if (try_accept(cand)) {
          any = go = true;
          break;
        }
      }
    }
    return any;
  }

  bool pass_list_count() {
    bool any = false, go = true;
    while (go) {
      go = false;
      const size_t count = cur.operands.empty() ? cur.params.omegas.size() : cur.operands.size();
      if (count < 2) break;
      const bool has_w = cur.params.weights.size() == count;
      const bool has_g = cur.params.gammas.size() == count;
      if (!has_w && !has_g) break;
      for (size_t k = 0; k < count; ++k) {
        InequalityCase cand = cur;
        if (!cand.operands.empty()) cand.operands.erase(cand.operands.begin() + k);
        if (cand.params.omegas.size() == count)
          cand.params.omegas.erase(cand.params.omegas.begin() + k);
        if (has_g) cand.params.gammas.erase(cand.params.gammas.begin() + k);
        if (has_w) {
          cand.params.weights.erase(cand.params.weights.begin() + k);
          double total = 0;
          for (double w : cand.params.weights) total += w;
          if (!(total > 0)) continue;
          for (double& w : cand.params.weights) w /= total;
        }
        if (try_accept(cand)) {
          any = go = true;
          break;
        }
      }
    }
    return any;
  }

  bool step_double(double CaseParams::* field, double target) {
    bool any = false;
    if (cur.params.*field != target) {
      InequalityCase cand = cur;
      cand.params.*field = target;
      any |= try_accept(cand);
    }
    for (int it = 0; it < 20; ++it) {
      const double v = cur.params.*field;
      const double nv = target + (v - target) / 2;
      if (nv == v) break;
      InequalityCase cand = cur;
      cand.params.*field = nv;
      if (!try_accept(cand)) break;
      any = true;
    }
    return any;
  }

  bool step_m() {
    bool any = false;
    while (cur.params.m > 1) {
      InequalityCase cand = cur;
      cand.params.m = 1;
      if (try_accept(cand)) return true;
      cand = cur;
      cand.params.m = cur.params.m - 1;
      if (!try_accept(cand)) break;
      any = true;
    }
    return any;
  }

  bool step_vector(std::vector<double> CaseParams::* field, double target) {
    if ((cur.params.*field).empty()) return false;
    bool any = false;
    {
      InequalityCase cand = cur;
      bool moved = false;
      for (double& v : cand.params.*field)
        if (v != target) {
          v = target;
          moved = true;
        }
      if (moved) any |= try_accept(cand);
    }
    for (int it = 0; it < 20; ++it) {
      InequalityCase cand = cur;
      bool moved = false;
      for (double& v : cand.params.*field) {
        const double nv = target + (v - target) / 2;
        if (nv != v) {
          v = nv;
          moved = true;
        }
      }
      if (!moved || !try_accept(cand)) break;
      any = true;
    }
    return any;
  }

  bool step_weights() {
    if (cur.params.weights.empty()) return false;
    // Midpointing toward the uniform vector preserves the total exactly.
    return step_vector(&CaseParams::weights, 1.0 / cur.params.weights.size());
  }

  bool pass_params() {
    bool any = false;
    any |= step_double(&CaseParams::rho, cur.params.sigma);
    any |= step_double(&CaseParams::sigma, cur.params.rho);
    any |= step_double(&CaseParams::kappa, 0.5);
    any |= step_double(&CaseParams::nu, cur.params.kappa / 2);
    any |= step_double(&CaseParams::theta, 0.5);
    any |= step_double(&CaseParams::p, 2.0);
    any |= step_double(&CaseParams::r_exp, 1.0);
    any |= step_double(&CaseParams::r_hhm, 1.0);
    any |= step_double(&CaseParams::t_hhm, 0.0);
    any |= step_m();
    any |= step_vector(&CaseParams::kappas, 1.0);
    any |= step_vector(&CaseParams::omegas, 1.0);
    any |= step_vector(&CaseParams::gammas, 1.0);
    any |= step_weights();
    return any;
  }

  bool pass_decouple() {
    if (cur.operands.empty() || cur.dim < 2) return false;
    bool any = false;
    for (int j = 0; j < cur.dim; ++j) {
      InequalityCase cand = cur;
      bool moved = false;
      for (auto& op : cand.operands)
        for (int k = 0; k < cand.dim; ++k)
          if (k != j) {
            if (op.at(j, k) != cplx(0, 0) || op.at(k, j) != cplx(0, 0)) moved = true;
            op.at(j, k) = 0;
            op.at(k, j) = 0;
          }
      if (moved && try_accept(cand)) any = true;
    }
    return any;
  }

  bool pass_round() {
    for (int digits = 2; digits <= 6; ++digits) {
      InequalityCase cand = cur;
      for (auto& op : cand.operands)
        for (auto& z : op.a) z = cplx(round_sig(z.real(), digits), round_sig(z.imag(), digits));
      for (double* v : {&cand.params.rho, &cand.params.sigma, &cand.params.kappa, &cand.params.nu,
                        &cand.params.theta, &cand.params.p, &cand.params.r_exp, &cand.params.r_hhm,
                        &cand.params.t_hhm})
        *v = round_sig(*v, digits);
      for (auto* vec : {&cand.params.kappas, &cand.params.omegas, &cand.params.gammas})
        for (double& v : *vec) v = round_sig(v, digits);
      bool moved = !(case_to_same(cand));
      if (moved && try_accept(cand)) return true;
    }
    return false;
  }

  bool case_to_same(const InequalityCase& cand) const {
    if (cand.params.rho != cur.params.rho || cand.params.sigma != cur.params.sigma ||
        cand.params.kappa != cur.params.kappa || cand.params.nu != cur.params.nu ||
        cand.params.theta != cur.params.theta || cand.params.p != cur.params.p ||
        cand.params.r_exp != cur.params.r_exp || cand.params.r_hhm != cur.params.r_hhm ||
        cand.params.t_hhm != cur.params.t_hhm || cand.params.kappas != cur.params.kappas ||
        cand.params.omegas != cur.params.omegas || cand.params.gammas != cur.params.gammas)
      return false;
    for (size_t i = 0; i < cand.operands.size(); ++i)
      if (cand.operands[i].a != cur.operands[i].a) return false;
    return true;
  }
};

}  // namespace

InequalityCase shrink_case(const InequalityCase& c, const EvalCtx& ctx) {
  if (evaluate_case(c, ctx).pass)
    throw parameter_error("shrink requires a violating case");
  Shrinker sh{ctx, c};
  bool progress = true;
  while (progress && sh.accepted < 200) {
    progress = false;
    progress |= sh.pass_dim();
    progress |= sh.pass_list_count();
    progress |= sh.pass_params();
    progress |= sh.pass_decouple();
    progress |= sh.pass_round();
  }
  return sh.cur;
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  validate_config(cfg);
  std::vector<const SuiteInfo*> chosen;
  if (cfg.suites.empty())
    for (const auto& s : suite_registry()) chosen.push_back(&s);
  else
    for (const auto& id : cfg.suites) chosen.push_back(&find_suite(id));

  const EvalCtx ctx{&cfg.norm_tokens, &cfg.grids, cfg.tol_rel};
  CampaignReport rep;
  rep.version = kVersion;
  rep.config = cfg;
  const auto t0 = std::chrono::steady_clock::now();

  for (const SuiteInfo* suite : chosen) {
    struct Slot {
      double rel = 0;
      bool pass = true;
      std::exception_ptr err;
    };
    std::vector<Slot> slots(static_cast<size_t>(cfg.trials));
    const auto run_trial = [&](int i) {
      Slot& s = slots[static_cast<size_t>(i)];
      try {
        const InequalityCase c = regenerate_case(*suite, case_seed(cfg.seed, suite->id, i),
                                                 cfg.dim_min, cfg.dim_max, cfg.grids);
        const CheckResult r = suite->eval(c, ctx);
        s.rel = r.rel_slack;
        s.pass = r.pass;
      } catch (...) {
        s.err = std::current_exception();
      }
    };
#ifdef _OPENMP
    if (cfg.parallel) {
#pragma omp parallel for schedule(dynamic, 8)
      for (int i = 0; i < cfg.trials; ++i) run_trial(i);
    } else
#endif
    {
      for (int i = 0; i < cfg.trials; ++i) run_trial(i);
    }
    for (const auto& s : slots)
      if (s.err) std::rethrow_exception(s.err);

    int violations = 0, first_bad = -1, worst = 0;
    for (int i = 0; i < cfg.trials; ++i) {
      if (!slots[static_cast<size_t>(i)].pass) {
        ++violations;
        if (first_bad < 0) first_bad = i;
      }
      if (slots[static_cast<size_t>(i)].rel < slots[static_cast<size_t>(worst)].rel) worst = i;
    }
    const int target = (violations > 0 && !suite->recorded) ? first_bad : worst;
    InequalityCase c = regenerate_case(*suite, case_seed(cfg.seed, suite->id, target), cfg.dim_min,
                                       cfg.dim_max, cfg.grids);
    if (violations > 0) c = shrink_case(c, ctx);
    const CheckResult final_check = suite->eval(c, ctx);

    SuiteReport sr;
    sr.id = suite->id;
    sr.recorded = suite->recorded;
    sr.trials = cfg.trials;
    sr.violations = violations;
    sr.worst_slack = final_check.slack;
    sr.worst_case = std::move(c);
    sr.worst_result = final_check;
    if (violations > 0 && !suite->recorded) rep.asserted_violation = true;
    rep.suites.push_back(std::move(sr));
  }
  rep.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace heinzlab
