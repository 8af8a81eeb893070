#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "heinzlab/io.hpp"

using namespace heinzlab;

namespace {

struct RunResult {
  int code = -1;
  std::string out;
};

const std::string& work_dir() {
  static const std::string dir = [] {
    char tmpl[] = "/tmp/heinzlab_cli_XXXXXX";
    const char* d = mkdtemp(tmpl);
    if (!d) throw std::runtime_error("mkdtemp failed");
    return std::string(d);
  }();
  return dir;
}

std::string slurp(const std::string& path) {
  std::ifstream ifs(path);
  std::ostringstream ss;
  ss << ifs.rdbuf();
  return ss.str();
}

RunResult run_cli(const std::string& args, const std::string& env = "") {
  static int counter = 0;
  const std::string cap = work_dir() + "/capture" + std::to_string(counter++) + ".txt";
  std::string cmd = "cd \"" + work_dir() + "\" && ";
  if (!env.empty()) cmd += env + " ";
  cmd += "\"" HEINZLAB_BIN "\" " + args + " > \"" + cap + "\" 2>&1";
  const int st = std::system(cmd.c_str());
  RunResult r;
  if (st >= 0 && WIFEXITED(st)) r.code = WEXITSTATUS(st);
  r.out = slurp(cap);
  return r;
}

int count_lines(const std::string& s) {
  int n = 0;
  std::istringstream ss(s);
  for (std::string line; std::getline(ss, line);)
    if (!line.empty()) ++n;
  return n;
}

bool has(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

void write_matrix(const std::string& name, const ComplexMatrix& m) {
  std::ofstream ofs(work_dir() + "/" + name);
  ofs << matrix_to_json(m).dump(2) << "\n";
}

ComplexMatrix diag2(double a, double b) {
  ComplexMatrix m(2);
  m.at(0, 0) = a;
  m.at(1, 1) = b;
  return m;
}

ComplexMatrix mat1(double v) {
  ComplexMatrix m(1);
  m.at(0, 0) = v;
  return m;
}

}  // namespace

TEST_CASE("list prints the whole registry") {
  const RunResult r = run_cli("list");
  CHECK(r.code == 0);
  CHECK(count_lines(r.out) == 53);
  CHECK(has(r.out, "S0.selftest.gm_ge_am"));
  CHECK(has(r.out, "S5.det.deter1.stated"));
  CHECK(has(r.out, "recorded"));
  CHECK(has(r.out, "asserted"));
}

TEST_CASE("verify passes on clean suites and reports deterministically") {
  const std::string args =
      "verify --suite S1.young.Y1 --suite S2.schur.hhm1 --trials 120 --dim-min 1 --dim-max 3 "
      "--seed 42";
  const RunResult a = run_cli(args + " --out r1.json");
  CHECK(a.code == 0);
  CHECK(has(a.out, "ok"));
  CHECK(has(a.out, "wall time:"));
  CHECK(has(a.out, "report written: r1.json"));

  const RunResult b = run_cli(args + " --out r2.json");
  CHECK(b.code == 0);
  CHECK(slurp(work_dir() + "/r1.json") == slurp(work_dir() + "/r2.json"));
  CHECK(!slurp(work_dir() + "/r1.json").empty());

  const RunResult c = run_cli(args + " --serial --out r3.json");
  CHECK(c.code == 0);
  CHECK(slurp(work_dir() + "/r1.json") == slurp(work_dir() + "/r3.json"));

  const json rep = json::parse(slurp(work_dir() + "/r1.json"));
  CHECK(rep["version"] == "1.0.0");
  CHECK(rep["config"]["seed"] == 42);
  CHECK(rep["suites"].size() == 2);
  CHECK(rep["suites"][0]["violations"] == 0);
}

TEST_CASE("seed falls back to the environment and the flag wins") {
  const std::string base = "verify --suite S1.young.Y3 --trials 40 ";
  run_cli(base + "--seed 42 --out sA.json");
  run_cli(base + "--out sB.json", "HEINZLAB_SEED=42");
  run_cli(base + "--seed 42 --out sC.json", "HEINZLAB_SEED=13");
  CHECK(slurp(work_dir() + "/sA.json") == slurp(work_dir() + "/sB.json"));
  CHECK(slurp(work_dir() + "/sA.json") == slurp(work_dir() + "/sC.json"));

  const RunResult bad = run_cli(base, "HEINZLAB_SEED=twelve");
  CHECK(bad.code == 2);
  CHECK(has(bad.out, "HEINZLAB_SEED"));
}

TEST_CASE("recorded suites log violations without failing the run") {
  const RunResult r =
      run_cli("verify --suite S0.selftest.gm_ge_am --trials 30 --dim-min 1 --dim-max 3 --seed 5");
  CHECK(r.code == 0);
  CHECK(has(r.out, "recorded"));
  CHECK_FALSE(has(r.out, "VIOLATED"));
}

TEST_CASE("asserted violations exit nonzero and leave a counterexample") {
  const RunResult r = run_cli(
      "verify --suite S2.schur.hhm1 --trials 50 --dim-min 1 --dim-max 4 --seed 7 --tol 1e-16");
  CHECK(r.code == 1);
  CHECK(has(r.out, "VIOLATED"));
  CHECK(has(r.out, "counterexample written: counterexample_S2_schur_hhm1.json"));

  const std::string cpath = work_dir() + "/counterexample_S2_schur_hhm1.json";
  const InequalityCase c = load_case(cpath);
  CHECK(c.suite_id == "S2.schur.hhm1");

  // At the default tolerance the same case is within noise: shrink refuses it.
  const RunResult refuse = run_cli("shrink --case counterexample_S2_schur_hhm1.json");
  CHECK(refuse.code == 2);
  CHECK(has(refuse.out, "violating"));

  const RunResult ok = run_cli("shrink --case counterexample_S2_schur_hhm1.json --tol 1e-16");
  CHECK(ok.code == 0);
  CHECK(has(ok.out, "shrunk case written: shrunk.json"));
  CHECK(has(ok.out, "dim = "));

  const InequalityCase small = load_case(work_dir() + "/shrunk.json");
  const std::vector<NormToken> toks = default_norm_tokens();
  const GridSet grids;
  const EvalCtx ctx{&toks, &grids, 1e-16};
  CHECK_FALSE(evaluate_case(small, ctx).pass);
  CHECK(small.dim <= c.dim);
}

TEST_CASE("scalar eval fixtures") {
  CHECK(run_cli("eval --op kantorovich --t 1").out == "1\n");
  CHECK(run_cli("eval --op kantorovich --t 4").out == "1.5625\n");
  CHECK(run_cli("eval --op heinz --rho 1 --sigma 16 --kappa 0.25").out == "5\n");
  CHECK(run_cli("eval --op heron --rho 4 --sigma 9 --theta 0.5").out == "6.25\n");

  const RunResult means = run_cli("eval --op means --rho 4 --sigma 9 --kappa 0.25 --theta 0.5");
  CHECK(means.code == 0);
  CHECK(has(means.out, "arith = 7.75"));
  CHECK(has(means.out, "heron = 6.25"));
  CHECK(count_lines(means.out) == 4);
}

TEST_CASE("matrix eval round trip") {
  write_matrix("t2.json", ComplexMatrix::identity(2));
  write_matrix("s2.json", diag2(4, 9));

  const RunResult g = run_cli("eval --op geom --T t2.json --S s2.json --out g.json");
  CHECK(g.code == 0);
  CHECK(has(g.out, "(2+0i)"));
  CHECK(has(g.out, "(3+0i)"));
  CHECK(has(g.out, "matrix written: g.json"));

  const ComplexMatrix back = load_matrix(work_dir() + "/g.json");
  const ComplexMatrix direct = op_geom_mean(ComplexMatrix::identity(2), diag2(4, 9), 0.5);
  REQUIRE(back.dim == 2);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) CHECK(back.at(i, j) == direct.at(i, j));

  ComplexMatrix m(2);
  m.at(0, 0) = 3;
  m.at(1, 1) = cplx(0, 4);
  write_matrix("m.json", m);
  CHECK(run_cli("eval --op norm --T m.json --norm trace").out == "7\n");
  CHECK(run_cli("eval --op norm --T m.json --norm kyfan:1").out == "4\n");

  write_matrix("t1.json", mat1(4));
  write_matrix("s1.json", mat1(9));
  write_matrix("x1.json", mat1(1));
  CHECK(run_cli("eval --op psi --T t1.json --S s1.json --X x1.json --kappa 0.5 --theta 0 "
                "--norm spectral")
            .out == "6\n");
  CHECK(run_cli("eval --op psi --T t1.json --S s1.json --X x1.json --kappa 0.5 --theta 1 "
                "--norm spectral")
            .out == "6.5\n");
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run_cli("").code == 2);
  CHECK(run_cli("frobnicate").code == 2);
  CHECK(run_cli("verify --bogus-flag").code == 2);
  CHECK(run_cli("verify --suite S9.missing --trials 5").code == 2);
  CHECK(run_cli("verify --suite S1.young.Y1 --trials 0").code == 2);
  CHECK(run_cli("verify --suite S1.young.Y1 --trials 5 --norms bogus").code == 2);
  CHECK(run_cli("eval --op frobnicate").code == 2);
  CHECK(run_cli("eval --op geom").code == 2);  // missing matrix paths
  CHECK(run_cli("shrink").code == 2);          // --case is required
  CHECK(run_cli("shrink --case does_not_exist.json").code == 2);
}
