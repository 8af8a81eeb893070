#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "heinzlab/scalar_checks.hpp"

using namespace heinzlab;

TEST_CASE("kantorovich constant") {
  CHECK(kantorovich(1.0) == 1.0);
  CHECK(kantorovich(4.0) == 1.5625);
  CHECK(kantorovich(2.0) == 1.125);
  CHECK(kantorovich(7.0) == doctest::Approx(16.0 / 7).epsilon(1e-15));
  CHECK(kantorovich(1.0 / 7) == doctest::Approx(16.0 / 7).epsilon(1e-15));
  CHECK(kantorovich(3.0) >= 1.0);
  CHECK_THROWS_AS(kantorovich(0.0), parameter_error);
  CHECK_THROWS_AS(kantorovich(-2.0), parameter_error);
}

TEST_CASE("scalar means") {
  CHECK(weighted_geom(8.0, 2.0, 1.0 / 3) ==
        doctest::Approx(std::pow(2.0, 5.0 / 3)).epsilon(1e-15));
  // Weight sits on the first argument.
  CHECK(weighted_arith(8.0, 2.0, 1.0 / 3) == doctest::Approx(4.0).epsilon(1e-15));
  CHECK(heinz_scalar(4.0, 9.0, 0.0) == 6.5);
  CHECK(heinz_scalar(4.0, 9.0, 1.0) == 6.5);
  CHECK(heinz_scalar(1.0, 16.0, 0.25) == 5.0);
  CHECK(heron_scalar(4.0, 9.0, 0.5) == 6.25);
  CHECK(heron_scalar(4.0, 9.0, 0.0) == 6.0);
  CHECK(heron_scalar(4.0, 9.0, 1.0) == 6.5);

  const ScalarMeans m = scalar_means(4.0, 9.0, 0.25, 0.5);
  CHECK(m.arith == 0.25 * 4 + 0.75 * 9);
  CHECK(m.geom == doctest::Approx(std::sqrt(54.0)).epsilon(1e-15));
  CHECK(m.heinz == doctest::Approx(0.5 * (std::sqrt(54.0) + std::sqrt(24.0))).epsilon(1e-15));
  CHECK(m.heron == 6.25);

  CHECK_THROWS_AS(scalar_means(-1.0, 2.0, 0.5, 0.5), parameter_error);
  CHECK_THROWS_AS(scalar_means(1.0, 0.0, 0.5, 0.5), parameter_error);
  CHECK_THROWS_AS(scalar_means(1.0, 2.0, 1.5, 0.5), parameter_error);
}

TEST_CASE("check result semantics") {
  const CheckResult r = make_check(2.0, 5.0, 1e-9, 3);
  CHECK(r.slack == 3.0);
  CHECK(r.rel_slack == doctest::Approx(0.6));
  CHECK(r.pass);
  CHECK(r.part == 3);

  const CheckResult bad = make_check(5.0, 2.0, 1e-9);
  CHECK_FALSE(bad.pass);
  CHECK(bad.slack == -3.0);

  // Slack just below zero still passes inside the tolerance band.
  CHECK(make_check(1.0 + 1e-12, 1.0, 1e-9).pass);
  CHECK_FALSE(make_check(1.0 + 1e-6, 1.0, 1e-9).pass);

  CHECK_THROWS_AS(make_check(std::nan(""), 1.0, 1e-9), numeric_error);
  CHECK_THROWS_AS(make_check(0.0, std::numeric_limits<double>::infinity(), 1e-9), numeric_error);

  const CheckResult a = make_check(1.0, 2.0, 1e-9);
  const CheckResult b = make_check(1.0, 1.1, 1e-9);
  CHECK(worse_of(a, b).rhs == 1.1);
  CHECK(worse_of(b, a).rhs == 1.1);

  PartFold fold(1e-9);
  CHECK_THROWS_AS(fold.result(), parameter_error);
  fold.add(1.0, 2.0);
  fold.add(3.0, 3.1);
  fold.add(0.0, 10.0);
  const CheckResult best = fold.result();
  CHECK(best.part == 1);
  CHECK(best.lhs == 3.0);
}

TEST_CASE("young forms hold and touch equality at rho == sigma") {
  const CheckResult eq = check_young_basic(4.0, 4.0, 0.5, 1e-9);
  CHECK(eq.slack == 0.0);
  const CheckResult y = check_young_basic(8.0, 2.0, 1.0 / 3, 1e-9);
  CHECK(y.pass);
  CHECK(y.lhs == doctest::Approx(std::pow(2.0, 5.0 / 3)).epsilon(1e-15));
  CHECK(y.rhs == doctest::Approx(4.0).epsilon(1e-15));

  CHECK(check_amgm(4.0, 4.0, 1e-9).slack == 0.0);
  CHECK(check_amgm(1.0, 9.0, 1e-9).lhs == 3.0);
  CHECK(check_amgm(1.0, 9.0, 1e-9).rhs == 5.0);

  const CheckResult y3 = check_young_refined(4.0, 4.0, 0.5, 2, 1.0, 1e-9);
  CHECK(y3.lhs == 16.0);
  CHECK(y3.rhs == 16.0);
  const CheckResult y3b = check_young_refined(9.0, 1.0, 0.25, 1, 2.0, 1e-9);
  CHECK(y3b.pass);
  // r0^m (rho^{m/2} - sigma^{m/2})^2 with r0 = min(kappa, 1-kappa)
  CHECK(y3b.lhs == doctest::Approx(std::pow(9.0, 0.25) + 0.25 * 4.0).epsilon(1e-14));
  CHECK(y3b.rhs == doctest::Approx(std::pow(0.25 * 81 + 0.75, 0.5)).epsilon(1e-14));

  CHECK_THROWS_AS(check_young_basic(1.0, 2.0, 2.0, 1e-9), parameter_error);
  CHECK_THROWS_AS(check_young_refined(1.0, 2.0, 0.5, 0, 1.0, 1e-9), parameter_error);
  CHECK_THROWS_AS(check_young_refined(1.0, 2.0, 0.5, 1, 0.5, 1e-9), parameter_error);
}

TEST_CASE("kantorovich young forms") {
  // Equal operands collapse every form to exact equality.
  for (KantorovichForm form :
       {KantorovichForm::refine_ratio, KantorovichForm::reverse_ratio, KantorovichForm::refine_diff,
        KantorovichForm::reverse_diff, KantorovichForm::reverse_diff2}) {
    const CheckResult r = check_kantorovich_young(4.0, 4.0, 0.3, form, 1e-9);
    CHECK(r.pass);
    CHECK(std::fabs(r.slack) <= 1e-12 * std::max(1.0, r.rhs));
  }

  const CheckResult refine = check_kantorovich_young(1.0, 4.0, 0.3, KantorovichForm::refine_ratio, 1e-9);
  CHECK(refine.pass);
  CHECK(refine.lhs == doctest::Approx(std::pow(1.5625, 0.3) * std::pow(4.0, 0.7)).epsilon(1e-14));
  CHECK(refine.rhs == doctest::Approx(0.3 + 0.7 * 4).epsilon(1e-15));

  const CheckResult reverse = check_kantorovich_young(1.0, 4.0, 0.3, KantorovichForm::reverse_ratio, 1e-9);
  CHECK(reverse.lhs == refine.rhs);
  CHECK(reverse.rhs == doctest::Approx(std::pow(1.5625, 0.7) * std::pow(4.0, 0.7)).epsilon(1e-14));
}

TEST_CASE("heinz interpolation picks the tighter side") {
  const CheckResult mid = check_heinz_interp(1.0, 4.0, 0.5, 1e-9);
  CHECK(mid.part == 0);  // geometric side is exactly tight at kappa = 1/2
  CHECK(mid.slack == 0.0);

  const CheckResult edge = check_heinz_interp(1.0, 4.0, 0.9, 1e-9);
  CHECK(edge.pass);
  CHECK(edge.part == 1);  // arithmetic side is tighter near kappa = 1
  CHECK(edge.rhs == 2.5);
}

TEST_CASE("bhatia heron bound") {
  const CheckResult r = check_bhatia_heron(1.0, 9.0, 0.25, 1e-9);
  CHECK(r.pass);
  CHECK(r.lhs == doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-14));
  CHECK(r.rhs == 3.5);  // theta = (2 kappa - 1)^2 = 1/4
  CHECK(check_bhatia_heron(1.0, 9.0, 0.5, 1e-9).slack == 0.0);
}

TEST_CASE("two-weight lemma: corrected form holds, printed form fails") {
  // rho=4, sigma=1, kappa=1/2, nu=1/8.
  const CheckResult fixed = check_heinz_lemma_refine(4.0, 1.0, 0.125, 0.5,
                                                     StatementForm::corrected, 1e-9);
  CHECK(fixed.pass);

  const CheckResult stated = check_heinz_lemma_refine(4.0, 1.0, 0.125, 0.5,
                                                      StatementForm::stated, 1e-9);
  CHECK_FALSE(stated.pass);
  CHECK(stated.rhs == 1.25);
  CHECK(stated.lhs == doctest::Approx(1.3042378416940241).epsilon(1e-14));

  const CheckResult rev_stated = check_heinz_lemma_reverse(4.0, 1.0, 0.125, 0.5,
                                                           StatementForm::stated, 1e-9);
  CHECK_FALSE(rev_stated.pass);
  CHECK(rev_stated.lhs == 1.25);
  CHECK(rev_stated.rhs == doctest::Approx(1.2498748767786436).epsilon(1e-14));
  CHECK(check_heinz_lemma_reverse(4.0, 1.0, 0.125, 0.5, StatementForm::corrected, 1e-9).pass);

  // Equal operands: both forms are tight to rounding.
  for (StatementForm form : {StatementForm::stated, StatementForm::corrected}) {
    CHECK(std::abs(check_heinz_lemma_refine(4.0, 4.0, 0.25, 0.5, form, 1e-9).slack) <= 1e-14);
    CHECK(std::abs(check_heinz_lemma_reverse(4.0, 4.0, 0.25, 0.5, form, 1e-9).slack) <= 1e-14);
  }

  CHECK_THROWS_AS(check_heinz_lemma_refine(1.0, 2.0, 0.5, 0.5, StatementForm::stated, 1e-9),
                  parameter_error);  // nu must stay below kappa
  CHECK_THROWS_AS(check_heinz_lemma_refine(1.0, 2.0, 0.1, 1.5, StatementForm::stated, 1e-9),
                  parameter_error);
  CHECK_THROWS_AS(check_heinz_lemma_refine(-1.0, 2.0, 0.1, 0.5, StatementForm::stated, 1e-9),
                  parameter_error);
}

TEST_CASE("refined heinz: corrected form holds, printed form fails") {
  const CheckResult fixed =
      check_heinz_refined(4.0, 1.0, 0.125, 0.5, StatementForm::corrected, 1e-9);
  CHECK(fixed.pass);

  const CheckResult stated =
      check_heinz_refined(4.0, 1.0, 0.125, 0.5, StatementForm::stated, 1e-9);
  CHECK_FALSE(stated.pass);
  CHECK(stated.rhs == 2.375);
  CHECK(stated.lhs == doctest::Approx(3.009152898054457).epsilon(1e-14));

  // Corrected bracket vanishes at equal operands: exact equality.
  const CheckResult eq =
      check_heinz_refined(4.0, 4.0, 0.25, 0.5, StatementForm::corrected, 1e-9);
  CHECK(eq.slack == 0.0);
}

TEST_CASE("reversed heinz: corrected form holds, printed form fails") {
  const CheckResult fixed =
      check_heinz_reversed(4.5, 0.25, 0.49, 0.5, StatementForm::corrected, 1e-9);
  CHECK(fixed.pass);

  const CheckResult stated =
      check_heinz_reversed(4.5, 0.25, 0.49, 0.5, StatementForm::stated, 1e-9);
  CHECK_FALSE(stated.pass);
  CHECK(stated.lhs == doctest::Approx(1.0869469683442248).epsilon(1e-14));
  CHECK(stated.rhs == doctest::Approx(1.0825506988567788).epsilon(1e-14));

  const CheckResult eq =
      check_heinz_reversed(4.0, 4.0, 0.25, 0.5, StatementForm::corrected, 1e-9);
  CHECK(eq.slack == 0.0);
}

TEST_CASE("corrected two-weight forms survive a random sweep") {
  // Cheap spot sweep; the campaign binary hammers these much harder.
  uint64_t state = 12345;
  const auto u01 = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return (state >> 11) * 0x1.0p-53;
  };
  for (int i = 0; i < 5000; ++i) {
    const double rho = std::exp((u01() * 2 - 1) * 6.0);
    const double sigma = std::exp((u01() * 2 - 1) * 6.0);
    const double kappa = std::max(u01(), 1e-9);
    const double nu = kappa * u01() * 0.999;
    CHECK(check_heinz_lemma_refine(rho, sigma, nu, kappa, StatementForm::corrected, 1e-9).pass);
    CHECK(check_heinz_lemma_reverse(rho, sigma, nu, kappa, StatementForm::corrected, 1e-9).pass);
    CHECK(check_heinz_refined(rho, sigma, nu, kappa, StatementForm::corrected, 1e-9).pass);
    CHECK(check_heinz_reversed(rho, sigma, nu, kappa, StatementForm::corrected, 1e-9).pass);
  }
}

TEST_CASE("man1 power-mean refinement") {
  const CheckResult eq = check_man1(4.0, 4.0, 2.0, 1, 1.0, 1e-9);
  CHECK(eq.lhs == 4.0);
  CHECK(eq.rhs == 4.0);

  const CheckResult r = check_man1(9.0, 1.0, 3.0, 2, 1.5, 1e-9);
  CHECK(r.pass);
  CHECK_THROWS_AS(check_man1(1.0, 2.0, 1.0, 1, 1.0, 1e-9), parameter_error);
  CHECK_THROWS_AS(check_man1(1.0, 2.0, 2.0, 0, 1.0, 1e-9), parameter_error);
  CHECK_THROWS_AS(check_man1(1.0, 2.0, 2.0, 1, 0.9, 1e-9), parameter_error);
}

TEST_CASE("multi-operand geometric refinement") {
  const CheckResult thirds = check_furu({1.0 / 3, 1.0 / 3, 1.0 / 3}, {1.0, 1.0, 8.0}, 1e-9);
  CHECK(thirds.lhs == doctest::Approx(10.0 / 3).epsilon(1e-15));
  CHECK(thirds.rhs == doctest::Approx(10.0 / 3).epsilon(1e-15));

  const CheckResult halves = check_furu({0.5, 0.5}, {1.0, 4.0}, 1e-9);
  CHECK(halves.lhs == 2.5);
  CHECK(halves.rhs == 2.5);

  CHECK(check_furu({0.2, 0.8}, {0.01, 100.0}, 1e-9).pass);
  CHECK_THROWS_AS(check_furu({0.5, 0.6}, {1.0, 2.0}, 1e-9), parameter_error);
  CHECK_THROWS_AS(check_furu({0.5, 0.5}, {1.0, -2.0}, 1e-9), parameter_error);
  CHECK_THROWS_AS(check_furu({1.0}, {}, 1e-9), parameter_error);
}

TEST_CASE("constrained radical mean bound") {
  // Single term: both sides collapse to omega + sqrt(1 + omega^2).
  const CheckResult single = check_constrained_scalar({1.0}, {0.75}, 1e-9);
  CHECK(single.rhs == 2.0);
  CHECK(std::fabs(single.slack) <= 1e-12);

  const CheckResult r = check_constrained_scalar({1.0, 2.0}, {1.0, 3.0}, 1e-9);
  CHECK(r.pass);
  const double avg = 7.0 / 3;
  CHECK(r.rhs == doctest::Approx(avg + std::sqrt(1 + avg * avg)).epsilon(1e-14));

  CHECK_THROWS_AS(check_constrained_scalar({}, {}, 1e-9), parameter_error);
  CHECK_THROWS_AS(check_constrained_scalar({0.0}, {1.0}, 1e-9), parameter_error);
  CHECK_THROWS_AS(check_constrained_scalar({-1.0, 2.0}, {1.0, 1.0}, 1e-9), parameter_error);
  CHECK_THROWS_AS(check_constrained_scalar({1.0}, {0.0}, 1e-9), parameter_error);
}
