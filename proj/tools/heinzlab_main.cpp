#include <CLI11.hpp>
#include <cstdio>
#include <cstdlib>
#include <fstream>

#include "heinzlab/io.hpp"

namespace {

using namespace heinzlab;

std::string sanitize(const std::string& id) {
  std::string out = id;
  for (char& c : out)
    if (c == '.') c = '_';
  return out;
}

std::vector<NormToken> parse_norms(const std::vector<std::string>& tokens) {
  if (tokens.empty()) return default_norm_tokens();
  std::vector<NormToken> out;
  for (const auto& t : tokens) out.push_back(NormToken::parse(t));
  return out;
}

void print_matrix(const ComplexMatrix& m) {
  for (int i = 0; i < m.dim; ++i) {
    for (int j = 0; j < m.dim; ++j) {
      const cplx z = m.at(i, j);
      std::printf("%s(%.15g%+.15gi)", j ? "  " : "", z.real(), z.imag());
    }
    std::printf("\n");
  }
}

uint64_t resolve_seed(const CLI::Option* seed_opt, uint64_t flag_value) {
  if (seed_opt->count() > 0) return flag_value;
  if (const char* env = std::getenv("HEINZLAB_SEED")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end == env || *end != '\0') throw parameter_error("HEINZLAB_SEED must be an integer");
    return static_cast<uint64_t>(v);
  }
  return 0;
}

int cmd_list() {
  for (const auto& s : suite_registry())
    std::printf("%-28s %-12s %s\n", s.id.c_str(), s.anchor.c_str(),
                s.recorded ? "recorded" : "asserted");
  return 0;
}

int cmd_verify(const CampaignConfig& cfg, const std::string& out_path) {
  const CampaignReport rep = run_campaign(cfg);
  std::printf("%-28s %8s %11s %14s  %s\n", "suite", "trials", "violations", "worst_slack",
              "status");
  for (const auto& s : rep.suites) {
    const char* status = s.violations == 0 ? "ok" : (s.recorded ? "recorded" : "VIOLATED");
    std::printf("%-28s %8d %11d %14.6e  %s\n", s.id.c_str(), s.trials, s.violations, s.worst_slack,
                status);
  }
  std::printf("wall time: %.2f s\n", rep.wall_seconds);
  if (!out_path.empty()) {
    save_report(rep, out_path);
    std::printf("report written: %s\n", out_path.c_str());
  }
  if (rep.asserted_violation) {
    for (const auto& s : rep.suites) {
      if (s.violations == 0 || s.recorded) continue;
      const std::string path = "counterexample_" + sanitize(s.id) + ".json";
      save_case(s.worst_case, path);
      std::printf("counterexample written: %s\n", path.c_str());
    }
    return 1;
  }
  return 0;
}

struct EvalArgs {
  std::string op;
  double rho = 1, sigma = 1, kappa = 0.5, theta = 0.5, t = 1;
  std::string t_path, s_path, x_path, norm = "spectral", out;
};

int cmd_eval(const EvalArgs& a) {
  const auto scalar = [](double v) { std::printf("%.15g\n", v); };
  const auto matrix_out = [&](const ComplexMatrix& m) {
    print_matrix(m);
    if (!a.out.empty()) {
      std::ofstream ofs(a.out);
      if (!ofs) throw parameter_error("cannot write '" + a.out + "'");
      ofs << matrix_to_json(m).dump(2) << "\n";
      std::printf("matrix written: %s\n", a.out.c_str());
    }
  };
  if (a.op == "kantorovich") {
    scalar(kantorovich(a.t));
  } else if (a.op == "means") {
    const ScalarMeans m = scalar_means(a.rho, a.sigma, a.kappa, a.theta);
    std::printf("arith = %.15g\n", m.arith);
    std::printf("geom  = %.15g\n", m.geom);
    std::printf("heinz = %.15g\n", m.heinz);
    std::printf("heron = %.15g\n", m.heron);
  } else if (a.op == "heinz") {
    scalar(heinz_scalar(a.rho, a.sigma, a.kappa));
  } else if (a.op == "heron") {
    scalar(heron_scalar(a.rho, a.sigma, a.theta));
  } else if (a.op == "geom" || a.op == "arith" || a.op == "opheinz") {
    const ComplexMatrix t = load_matrix(a.t_path), s = load_matrix(a.s_path);
    if (a.op == "geom")
      matrix_out(op_geom_mean(t, s, a.kappa));
    else if (a.op == "arith")
      matrix_out(op_arith_mean(t, s, a.kappa));
    else
      matrix_out(op_heinz_mean(t, s, a.kappa));
  } else if (a.op == "norm") {
    scalar(ui_norm(load_matrix(a.t_path), NormSelector::parse(a.norm)));
  } else if (a.op == "psi" || a.op == "phi") {
    const ComplexMatrix t = load_matrix(a.t_path), s = load_matrix(a.s_path),
                        x = load_matrix(a.x_path);
    const NormSelector sel = NormSelector::parse(a.norm);
    scalar(a.op == "psi" ? psi_interpolant(t, s, x, a.kappa, a.theta, sel)
                         : phi_interpolant(t, s, x, a.kappa, a.theta, sel));
  } else {
    throw parameter_error("unknown op '" + a.op +
                          "' (kantorovich|means|heinz|heron|geom|arith|opheinz|norm|psi|phi)");
  }
  return 0;
}

int cmd_shrink(const std::string& case_path, const std::string& out_path, double tol,
               const std::vector<std::string>& norm_strs) {
  const InequalityCase c = load_case(case_path);
  const std::vector<NormToken> tokens = parse_norms(norm_strs);
  const GridSet grids;
  const EvalCtx ctx{&tokens, &grids, tol};
  const InequalityCase small = shrink_case(c, ctx);
  save_case(small, out_path);
  const CheckResult r = evaluate_case(small, ctx);
  std::printf("shrunk case written: %s\n", out_path.c_str());
  std::printf("dim = %d  operands = %zu  lhs = %.15g  rhs = %.15g  slack = %.15g\n", small.dim,
              small.operands.size(), r.lhs, r.rhs, r.slack);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matrix-mean inequality checker"};
  app.require_subcommand(1);

  app.add_subcommand("list", "print every suite with its anchor and status");

  auto* verify = app.add_subcommand("verify", "run randomized campaigns");
  CampaignConfig cfg;
  std::vector<std::string> suite_ids, norm_strs;
  std::string out_path;
  bool serial = false;
  verify->add_option("--suite", suite_ids, "suite id, repeatable; 'all' for every suite");
  verify->add_option("--trials", cfg.trials, "cases per suite");
  verify->add_option("--dim-min", cfg.dim_min, "smallest matrix dimension");
  verify->add_option("--dim-max", cfg.dim_max, "largest matrix dimension");
  auto* seed_opt = verify->add_option("--seed", cfg.seed, "campaign seed");
  verify->add_option("--tol", cfg.tol_rel, "relative slack tolerance");
  verify->add_option("--norms", norm_strs, "norm family tokens")->delimiter(',');
  verify->add_option("--out", out_path, "write the JSON report here");
  verify->add_flag("--serial", serial, "disable the parallel trial loop");

  auto* eval = app.add_subcommand("eval", "evaluate one mean, norm, or constant");
  EvalArgs ea;
  eval->add_option("--op", ea.op, "operation name")->required();
  eval->add_option("--rho", ea.rho);
  eval->add_option("--sigma", ea.sigma);
  eval->add_option("--kappa", ea.kappa);
  eval->add_option("--theta", ea.theta);
  eval->add_option("--t", ea.t, "argument of the kantorovich constant");
  eval->add_option("--T", ea.t_path, "matrix json path");
  eval->add_option("--S", ea.s_path, "matrix json path");
  eval->add_option("--X", ea.x_path, "matrix json path");
  eval->add_option("--norm", ea.norm, "norm selector token");
  eval->add_option("--out", ea.out, "write a matrix result here");

  auto* shrink = app.add_subcommand("shrink", "minimize a violating case");
  std::string case_path, shrink_out = "shrunk.json";
  double shrink_tol = 1e-9;
  std::vector<std::string> shrink_norms;
  shrink->add_option("--case", case_path, "case json path")->required();
  shrink->add_option("--out", shrink_out, "output path");
  shrink->add_option("--tol", shrink_tol, "relative slack tolerance");
  shrink->add_option("--norms", shrink_norms, "norm family tokens")->delimiter(',');

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand("list")) return cmd_list();
    if (app.got_subcommand(verify)) {
      cfg.seed = resolve_seed(seed_opt, cfg.seed);
      cfg.parallel = !serial;
      cfg.norm_tokens = parse_norms(norm_strs);
      for (const auto& id : suite_ids)
        if (id != "all") cfg.suites.push_back(id);
      return cmd_verify(cfg, out_path);
    }
    if (app.got_subcommand(eval)) return cmd_eval(ea);
    if (app.got_subcommand(shrink)) return cmd_shrink(case_path, shrink_out, shrink_tol, shrink_norms);
  } catch (const numeric_error& e) {
    std::fprintf(stderr, "numeric error: %s\n", e.what());
    return 3;
  } catch (const parameter_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  }
  return 2;
}
