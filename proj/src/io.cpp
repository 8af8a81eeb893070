#include "heinzlab/io.hpp"

#include <fstream>

namespace heinzlab {

namespace {

json params_to_json(const CaseParams& p) {
  json j;
  j["rho"] = p.rho;
  j["sigma"] = p.sigma;
  j["kappa"] = p.kappa;
  j["nu"] = p.nu;
  j["theta"] = p.theta;
  j["m"] = p.m;
  j["r_exp"] = p.r_exp;
  j["p"] = p.p;
  j["r_hhm"] = p.r_hhm;
  j["t_hhm"] = p.t_hhm;
  j["kappas"] = p.kappas;
  j["weights"] = p.weights;
  j["gammas"] = p.gammas;
  j["omegas"] = p.omegas;
  return j;
}

CaseParams params_from_json(const json& j) {
  CaseParams p;
  p.rho = j.value("rho", 1.0);
  p.sigma = j.value("sigma", 1.0);
  p.kappa = j.value("kappa", 0.5);
  p.nu = j.value("nu", 0.0);
  p.theta = j.value("theta", 0.5);
  p.m = j.value("m", 1);
  p.r_exp = j.value("r_exp", 1.0);
  p.p = j.value("p", 2.0);
  p.r_hhm = j.value("r_hhm", 0.0);
  p.t_hhm = j.value("t_hhm", 0.0);
  p.kappas = j.value("kappas", std::vector<double>{});
  p.weights = j.value("weights", std::vector<double>{});
  p.gammas = j.value("gammas", std::vector<double>{});
  p.omegas = j.value("omegas", std::vector<double>{});
  return p;
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw parameter_error("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const std::exception& e) {
    throw parameter_error("cannot parse '" + path + "': " + e.what());
  }
}

void write_json_file(const json& j, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw parameter_error("cannot write '" + path + "'");
  out << j.dump(2) << "\n";
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json entries = json::array();
  for (const cplx& z : m.a) entries.push_back(json::array({z.real(), z.imag()}));
  json j;
  j["dim"] = m.dim;
  j["entries"] = std::move(entries);
  return j;
}

ComplexMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("entries"))
    throw parameter_error("matrix json needs 'dim' and 'entries'");
  const int dim = j.at("dim").get<int>();
  if (dim < 1) throw parameter_error("matrix dim must be >= 1");
  const json& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != static_cast<size_t>(dim) * dim)
    throw parameter_error("matrix entries must hold dim*dim [re, im] pairs");
  ComplexMatrix m(dim);
  for (size_t i = 0; i < entries.size(); ++i) {
    const json& e = entries[i];
    if (!e.is_array() || e.size() != 2) throw parameter_error("matrix entry must be [re, im]");
    m.a[i] = cplx(e[0].get<double>(), e[1].get<double>());
  }
  if (!all_finite(m)) throw parameter_error("matrix entries must be finite");
  return m;
}

ComplexMatrix load_matrix(const std::string& path) { return matrix_from_json(read_json_file(path)); }

json case_to_json(const InequalityCase& c) {
  json j;
  j["suite"] = c.suite_id;
  j["dim"] = c.dim;
  j["seed"] = c.seed;
  j["params"] = params_to_json(c.params);
  if (c.condition) {
    json cond;
    cond["variant"] = std::string(1, c.condition->variant);
    cond["m"] = c.condition->m;
    cond["m_prime"] = c.condition->m_prime;
    cond["M_prime"] = c.condition->M_prime;
    cond["M"] = c.condition->M;
    j["condition"] = std::move(cond);
  } else {
    j["condition"] = nullptr;
  }
  json ops = json::array();
  for (const auto& op : c.operands) ops.push_back(matrix_to_json(op));
  j["operands"] = std::move(ops);
  return j;
}

InequalityCase case_from_json(const json& j) {
  if (!j.is_object() || !j.contains("suite")) throw parameter_error("case json needs 'suite'");
  InequalityCase c;
  c.suite_id = j.at("suite").get<std::string>();
  c.dim = j.value("dim", 1);
  if (c.dim < 1) throw parameter_error("case dim must be >= 1");
  c.seed = j.value("seed", uint64_t{0});
  if (j.contains("params")) c.params = params_from_json(j.at("params"));
  if (j.contains("condition") && !j.at("condition").is_null()) {
    const json& cond = j.at("condition");
    SpectralCondition sc;
    const std::string v = cond.value("variant", "a");
    if (v != "a" && v != "b") throw parameter_error("condition variant must be 'a' or 'b'");
    sc.variant = v[0];
    sc.m = cond.value("m", 1.0);
    sc.m_prime = cond.value("m_prime", 1.0);
    sc.M_prime = cond.value("M_prime", 1.0);
    sc.M = cond.value("M", 1.0);
    c.condition = sc;
  }
  if (j.contains("operands"))
    for (const json& op : j.at("operands")) c.operands.push_back(matrix_from_json(op));
  for (const auto& op : c.operands)
    if (op.dim != c.dim) throw parameter_error("operand dim mismatch");
  return c;
}

InequalityCase load_case(const std::string& path) { return case_from_json(read_json_file(path)); }

void save_case(const InequalityCase& c, const std::string& path) {
  write_json_file(case_to_json(c), path);
}

json config_to_json(const CampaignConfig& cfg) {
  json j;
  j["suites"] = cfg.suites;
  j["trials"] = cfg.trials;
  j["dim_min"] = cfg.dim_min;
  j["dim_max"] = cfg.dim_max;
  j["seed"] = cfg.seed;
  j["tol_rel"] = cfg.tol_rel;
  json norms = json::array();
  for (const auto& t : cfg.norm_tokens) norms.push_back(t.name());
  j["norms"] = std::move(norms);
  json grids;
  grids["theta_hi"] = cfg.grids.theta_hi;
  grids["theta_lo"] = cfg.grids.theta_lo;
  grids["t_grid"] = cfg.grids.t_grid;
  grids["mu_grid"] = cfg.grids.mu_grid;
  grids["fn_grid"] = cfg.grids.fn_grid;
  grids["m_grid"] = cfg.grids.m_grid;
  grids["r_grid"] = cfg.grids.r_grid;
  j["grids"] = std::move(grids);
  return j;
}

json report_to_json(const CampaignReport& rep) {
  json j;
  j["version"] = rep.version;
  j["config"] = config_to_json(rep.config);
  j["asserted_violation"] = rep.asserted_violation;
  json suites = json::array();
  for (const auto& s : rep.suites) {
    json js;
    js["id"] = s.id;
    js["recorded_not_asserted"] = s.recorded;
    js["trials"] = s.trials;
    js["violations"] = s.violations;
    js["worst_slack"] = s.worst_slack;
    json w;
    w["lhs"] = s.worst_result.lhs;
    w["rhs"] = s.worst_result.rhs;
    w["slack"] = s.worst_result.slack;
    w["rel_slack"] = s.worst_result.rel_slack;
    w["part"] = s.worst_result.part;
    js["worst"] = std::move(w);
    js["worst_case"] = case_to_json(s.worst_case);
    suites.push_back(std::move(js));
  }
  j["suites"] = std::move(suites);
  return j;
}

void save_report(const CampaignReport& rep, const std::string& path) {
  write_json_file(report_to_json(rep), path);
}

}  // namespace heinzlab
