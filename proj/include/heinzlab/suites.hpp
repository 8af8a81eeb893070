#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "heinzlab/matrix_means.hpp"
#include "heinzlab/random.hpp"
#include "heinzlab/scalar_checks.hpp"

namespace heinzlab {

// Fixed evaluation grids; versioned through the campaign config.
struct GridSet {
  std::vector<double> theta_hi = {0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0, 10.0};
  std::vector<double> theta_lo = {0.0, 0.1, 0.2, 0.3, 0.4, 0.5};
  std::vector<double> t_grid = {-1.9, -1.0, 0.0, 1.0, 2.0};
  std::vector<double> mu_grid = {0.25, 0.5, 0.75};
  std::vector<std::string> fn_grid = {"sqrt", "log1p"};
  std::vector<int> m_grid = {1, 2, 3};
  std::vector<double> r_grid = {1.0, 1.5, 2.0};
};

struct CaseParams {
  double rho = 1, sigma = 1;
  double kappa = 0.5, nu = 0;
  double theta = 0.5;
  int m = 1;
  double r_exp = 1, p = 2;
  double r_hhm = 0, t_hhm = 0;
  std::vector<double> kappas;
  std::vector<double> weights;
  std::vector<double> gammas;
  std::vector<double> omegas;
};

// Two-sided spectral sandwich for the conditioned operator suites.
// variant 'a': 0 < m <= T <= m' < M' <= S <= M;  variant 'b': 0 < m <= S <= m' <= T <= M.
struct SpectralCondition {
  char variant = 'a';
  double m = 1, m_prime = 1, M_prime = 1, M = 1;
};

struct InequalityCase {
  std::string suite_id;
  int dim = 1;
  uint64_t seed = 0;
  CaseParams params;
  std::optional<SpectralCondition> condition;
  std::vector<ComplexMatrix> operands;
};

// How operands transform in unitary-invariance trials.
enum class ConjMode { none, single_u, uv_x, perm };

struct EvalCtx {
  const std::vector<NormToken>* norm_tokens;
  const GridSet* grids;
  double tol;
};

struct SuiteInfo {
  std::string id;
  std::string anchor;
  bool recorded = false;  // recorded_not_asserted: campaign logs violations, never fails
  bool scalar = false;
  ConjMode conj = ConjMode::none;
  std::function<InequalityCase(int dim_min, int dim_max, Rng&, const GridSet&)> sample;
  std::function<CheckResult(const InequalityCase&, const EvalCtx&)> eval;
};

const std::vector<SuiteInfo>& suite_registry();
const SuiteInfo& find_suite(const std::string& id);

CheckResult evaluate_case(const InequalityCase& c, const EvalCtx& ctx);

uint64_t case_seed(uint64_t campaign_seed, const std::string& suite_id, int trial);
InequalityCase regenerate_case(const SuiteInfo& suite, uint64_t seed, int dim_min, int dim_max,
                               const GridSet& grids);

}  // namespace heinzlab
