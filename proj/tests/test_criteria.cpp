#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <mpfr.h>

#include "osc/criteria/analysis.hpp"
#include "osc/criteria/sums.hpp"
#include "osc/equations/equation_io.hpp"

using namespace osc;

namespace {

const std::string kData = OSC_DATA_DIR;

EquationSpec load(const std::string& name) { return load_equation(kData + "/" + name + ".json"); }

EquationSpec single(EquationKind kind, Rational p, long d, std::optional<long> horizon = {}) {
  return EquationSpec(kind, {Term{PeriodicSequence::constant(std::move(p)), ArgumentRule::offset(d)}}, horizon);
}

const ComponentResult* component(const CriterionOutcome& o, const std::string& prefix) {
  for (const auto& c : o.components) {
    if (c.label.rfind(prefix, 0) == 0) return &c;
  }
  return nullptr;
}

// Exact value of the level-1 sum at even n for the two-delay file, expanded by hand.
Rational two_delay_s1_even() {
  const Rational q = Rational(1) - Rational(5, 24);
  return Rational(1, 8) * (q.pow(3).inverse() + Rational(1) + q.inverse()) +
         Rational(1, 12) * (q.pow(4).inverse() + Rational(1) + q.pow(2).inverse());
}

}  // namespace

TEST_CASE("single-delay factor ladder") {
  FactorTable t(single(EquationKind::Retarded, Rational(1, 4), 1), 20);
  const Rational expected[] = {Rational(3, 4), Rational(2, 3), Rational(5, 8),
                               Rational(3, 5), Rational(7, 12), Rational(4, 7)};
  for (int r = 1; r <= 6; ++r) {
    const Factor& f = factor_a(t, r, 30, 29);
    REQUIRE(f.positive());
    CHECK(*f.value == expected[r - 1]);
    CHECK_FALSE(f.truncated);
  }
  for (long k = 1; k <= 10; ++k) {
    CHECK(*factor_a(t, static_cast<int>(2 * k - 1), 40, 39).value == Rational(2 * k + 1, 4 * k));
    CHECK(*factor_a(t, static_cast<int>(2 * k), 40, 39).value == Rational(k + 1, 2 * k + 1));
  }
}

TEST_CASE("empty products and range errors") {
  FactorTable t(single(EquationKind::Retarded, Rational(1, 4), 1), 4);
  for (int r = 1; r <= 4; ++r) CHECK(*factor_a(t, r, 7, 7).value == Rational(1));
  CHECK_THROWS_AS(factor_a(t, 1, 3, 4), std::out_of_range);
  CHECK_THROWS_AS(factor_a(t, 5, 4, 3), std::out_of_range);
  CHECK_THROWS_AS(factor_a(t, 0, 4, 3), std::out_of_range);
  CHECK_THROWS_AS(factor_b(t, 1, 3, 4), std::invalid_argument);

  FactorTable b(single(EquationKind::Advanced, Rational(1, 4), 1), 3);
  CHECK(*factor_b(b, 2, 5, 5).value == Rational(1));
  CHECK_THROWS_AS(factor_b(b, 1, 5, 4), std::out_of_range);
}

TEST_CASE("products reaching below index 0 are truncated") {
  FactorTable t(single(EquationKind::Retarded, Rational(1, 4), 1), 2);
  const Factor& f = factor_a(t, 1, 2, -3);
  CHECK(f.truncated);
  CHECK(*f.value == Rational(9, 16));
}

TEST_CASE("a nonpositive bracket propagates") {
  FactorTable t(single(EquationKind::Retarded, Rational(9, 10), 1), 3);
  CHECK(*factor_a(t, 1, 5, 4).value == Rational(1, 10));
  CHECK_FALSE(t.bracket(2, 5).positive());
  CHECK_FALSE(factor_a(t, 2, 8, 3).positive());
  CHECK_FALSE(factor_a(t, 3, 8, 7).positive());
}

TEST_CASE("advanced dual of the single-delay ladder") {
  FactorTable a(single(EquationKind::Retarded, Rational(1, 4), 1), 8);
  FactorTable b(single(EquationKind::Advanced, Rational(1, 4), 1), 8);
  CHECK(*factor_b(b, 1, 10, 11).value == Rational(3, 4));
  for (int r = 1; r <= 8; ++r) CHECK(*factor_b(b, r, 10, 11).value == *factor_a(a, r, 30, 29).value);
}

TEST_CASE("two-delay limsup sums") {
  CriteriaContext ctx(load("two_delays"), 2);
  LimsupSum s1 = limsup_sum_retarded(ctx.table(), ctx.envelope(), 1);
  LimsupSum s2 = limsup_sum_retarded(ctx.table(), ctx.envelope(), 2);
  CHECK(s1.summary.exact);
  CHECK(s2.summary.exact);
  for (std::size_t k = 0; k < s1.values.size(); ++k) {
    if ((s1.window_start + static_cast<long>(k)) % 2 == 0) CHECK(s1.values[k].value == two_delay_s1_even());
  }
  CHECK(s1.summary.extremal->value == two_delay_s1_even());
  CHECK(std::abs(s1.summary.extremal->value.to_double() - 0.963276895) < 5e-9);
  CHECK(std::abs(s2.summary.extremal->value.to_double() - 1.553022949) < 5e-9);
}

TEST_CASE("advanced two-point sum") {
  CriteriaContext ctx(single(EquationKind::Advanced, Rational(1, 4), 1), 1);
  LimsupSum s = limsup_sum_advanced(ctx.table(), ctx.envelope(), 1);
  CHECK(s.summary.exact);
  CHECK(s.summary.extremal->value == Rational(7, 12));
}

TEST_CASE("zero coefficients give zero sums") {
  for (auto kind : {EquationKind::Retarded, EquationKind::Advanced}) {
    CriteriaContext ctx(single(kind, Rational(0), 2), 3);
    LimsupSum s = kind == EquationKind::Retarded ? limsup_sum_retarded(ctx.table(), ctx.envelope(), 3)
                                                 : limsup_sum_advanced(ctx.table(), ctx.envelope(), 3);
    CHECK(s.summary.extremal->value == Rational(0));
    CHECK(ctx.alpha().alpha == Rational(0));
  }
}

TEST_CASE("alpha values") {
  CriteriaContext two(load("two_delays"), 1);
  CHECK(two.alpha().per_term[0] == Rational(1, 8));
  CHECK(two.alpha().per_term[1] == Rational(1, 12));
  CHECK(two.alpha().alpha == Rational(1, 12));
  CHECK(two.alpha().exact);

  CriteriaContext bounded(load("bounded_argument"), 1);
  CHECK(bounded.alpha().alpha == Rational(3, 10));
  CHECK(bounded.alpha().exact);

  CriteriaContext adv(single(EquationKind::Advanced, Rational(2, 9), 1), 1);
  CHECK(adv.alpha().alpha == Rational(2, 9));
}

TEST_CASE("lower ratio bound enclosures") {
  auto t = one_minus_lower_ratio_bound(Rational(3, 10), 64);
  REQUIRE(t.has_value());
  CHECK(t->lower_double() <= 0.928388218 + 5e-9);
  CHECK(t->upper_double() >= 0.928388218 - 5e-9);
  CHECK(t->width() < 1e-15);
  auto u = one_minus_lower_ratio_bound(Rational(1, 12), 64);
  CHECK(std::abs(u->lower_double() - 0.996196338) < 5e-9);
  auto c0 = lower_ratio_bound(Rational(0), 64);
  REQUIRE(c0.has_value());
  CHECK(c0->is_point());
  CHECK(c0->contains(Rational(0)));
  CHECK_FALSE(lower_ratio_bound(Rational(1, 2), 64).has_value());
  CHECK_FALSE(lower_ratio_bound(Rational(-1, 10), 64).has_value());
  // The two enclosures describe complementary quantities.
  auto c = lower_ratio_bound(Rational(1, 5), 128);
  auto one_minus = one_minus_lower_ratio_bound(Rational(1, 5), 128);
  CHECK(std::abs(c->lower_double() + one_minus->lower_double() - 1.0) < 1e-15);
}

TEST_CASE("sum at least one infinitely often") {
  CriteriaContext always(single(EquationKind::Retarded, Rational(1), 1), 1);
  CriterionOutcome o = test_T2_3(always);
  CHECK(o.verdict == Verdict::OscillatoryProven);
  CHECK(o.witnesses.front() == 0);
  CHECK(o.witnesses.size() == 16);

  CriteriaContext bounded(load("bounded_argument"), 1);
  CriterionOutcome b = test_T2_3(bounded);
  CHECK(b.verdict == Verdict::Inconclusive);
  CHECK(b.extremal->value == Rational(1, 2));

  EquationSpec periodic(EquationKind::Retarded,
                        {Term{PeriodicSequence({}, {Rational(1, 3), Rational(1)}), ArgumentRule::offset(2)}});
  CriteriaContext p(periodic, 1);
  CHECK(test_T2_3(p).verdict == Verdict::OscillatoryProven);

  CriteriaContext adv(single(EquationKind::Advanced, Rational(1), 1), 1);
  CriterionOutcome a = test_T2_3_adv(adv);
  CHECK(a.id == "T2.3a");
  CHECK(a.verdict == Verdict::OscillatoryProven);
}

TEST_CASE("iterative limsup tests on the examples") {
  CriteriaContext two(load("two_delays"), 2);
  CHECK(test_T2_4(two, 1).verdict == Verdict::Inconclusive);
  CriterionOutcome t24 = test_T2_4(two, 2);
  CHECK(t24.id == "T2.4(2)");
  CHECK(t24.verdict == Verdict::OscillatoryProven);
  CHECK(test_T2_5(two, 2).verdict == Verdict::OscillatoryProven);

  CriteriaContext bounded(load("bounded_argument"), 2);
  CriterionOutcome b = test_T2_4(bounded, 1);
  CHECK(b.verdict == Verdict::IndicativeOnly);
  REQUIRE(b.lower_bound.has_value());
  CHECK(*b.lower_bound == Rational(11, 10));
  CriterionOutcome b5 = test_T2_5(bounded, 1);
  CHECK(b5.verdict == Verdict::IndicativeOnly);
  CHECK(*b5.lower_bound == Rational(11, 10));
  CHECK(std::abs(*b5.threshold_lower - 0.928388218) < 5e-9);

  const EquationDocument family = EquationDocument::load(kData + "/delay_family.json");
  CriteriaContext at175(family.instantiate({{"p", Rational(7, 40)}}), 3);
  CHECK(test_T2_4(at175, 3).verdict == Verdict::OscillatoryProven);
  CHECK(test_T2_4(at175, 1).verdict == Verdict::Inconclusive);
  CHECK(test_T2_5(at175, 1).verdict == Verdict::Inconclusive);
  CriteriaContext at1742(family.instantiate({{"p", Rational(1742, 10000)}}), 3);
  CHECK(test_T2_5(at1742, 3).verdict == Verdict::OscillatoryProven);
}

TEST_CASE("alpha zero makes the ratio test inapplicable") {
  EquationSpec eq(EquationKind::Retarded,
                  {Term{PeriodicSequence::constant(Rational(1, 5)), ArgumentRule::offset(1)},
                   Term{PeriodicSequence::constant(Rational(0)), ArgumentRule::offset(2)}});
  CriteriaContext ctx(eq, 1);
  CHECK(test_T2_5(ctx, 1).verdict == Verdict::NotApplicable);
}

TEST_CASE("coefficient sums reaching one make the limsup tests inapplicable") {
  CriteriaContext ctx(single(EquationKind::Retarded, Rational(1), 1), 2);
  CHECK(test_T2_4(ctx, 1).verdict == Verdict::NotApplicable);
  CHECK(test_T2_5(ctx, 1).verdict == Verdict::NotApplicable);
}

TEST_CASE("bounded-deviation liminf test") {
  CriteriaContext ctx(load("periodic_coefficient"), 1);
  CriterionOutcome o = test_T3_3(ctx);
  CHECK(o.verdict == Verdict::OscillatoryProven);
  REQUIRE(o.components.size() == 2);
  CHECK(o.components[0].value.value == Rational(38, 125));
  CHECK(o.components[0].comparison.outcome == Ordering::Greater);
  CHECK(o.components[0].threshold.find("8/27") != std::string::npos);
  CHECK(o.components[1].value.value == Rational(42, 125));
  CHECK(o.components[1].threshold.find("81/256") != std::string::npos);

  CriteriaContext two(load("two_delays"), 1);
  CriterionOutcome t = test_T3_3(two);
  CHECK(t.verdict == Verdict::Inconclusive);
  CHECK(t.components[1].value.value == Rational(5, 24));
  CHECK(t.components[1].threshold.find("1024/3125") != std::string::npos);

  CriteriaContext zero(single(EquationKind::Retarded, Rational(0), 2), 1);
  CHECK(test_T3_3(zero).verdict == Verdict::Inconclusive);

  CriteriaContext bounded(load("bounded_argument"), 1);
  CHECK(test_T3_3(bounded).verdict == Verdict::NotApplicable);
}

TEST_CASE("liminf test against 1/e") {
  CriteriaContext ctx(single(EquationKind::Retarded, Rational(2, 5), 1), 1);
  CHECK(test_T3_4(ctx).verdict == Verdict::OscillatoryProven);
  CriteriaContext two(load("two_delays"), 1);
  CHECK(test_T3_4(two).verdict == Verdict::Inconclusive);
  CriteriaContext zero(single(EquationKind::Retarded, Rational(0), 1), 1);
  CHECK(test_T3_4(zero).verdict == Verdict::Inconclusive);
  CriteriaContext adv(single(EquationKind::Advanced, Rational(2, 5), 1), 1);
  CriterionOutcome a = test_T3_4_adv(adv);
  CHECK(a.id == "T3.4a");
  CHECK(a.verdict == Verdict::OscillatoryProven);
}

TEST_CASE("the non-strict flag resolves only what the precision cap leaves open") {
  // p a hair above 1/e, distinguishable only beyond 256 bits.
  mpfr_t x;
  mpfr_init2(x, 400);
  mpfr_set_si(x, -1, MPFR_RNDN);
  mpfr_exp(x, x, MPFR_RNDU);
  mpq_t q;
  mpq_init(q);
  mpfr_get_q(q, x);
  const Rational p = Rational(mpq_class(q)) + Rational(BigInt(1), BigInt(1) << 300);
  mpq_clear(q);
  mpfr_clear(x);

  CriteriaContext ctx(single(EquationKind::Retarded, p, 1), 1);
  CriteriaOptions capped;
  capped.max_precision_bits = 128;
  CHECK(test_T3_4(ctx, capped).verdict == Verdict::IndeterminatePrecision);
  capped.nonstrict = true;
  CHECK(test_T3_4(ctx, capped).verdict == Verdict::OscillatoryProven);
  CHECK(test_T3_4(ctx).verdict == Verdict::OscillatoryProven);
}

TEST_CASE("prior-art baselines") {
  CriteriaContext two(load("two_delays"), 1);
  auto b = baseline_tests(two);
  REQUIRE(b.size() == 2);
  CHECK(b[0].id == "B-5.16");
  CHECK(b[1].id == "B-3.1");
  const ComponentResult* liminf = component(b[1], "liminf");
  REQUIRE(liminf);
  CHECK(liminf->value.value == Rational(5, 24));
  CHECK(liminf->threshold == "1/e");
  CHECK(b[1].verdict == Verdict::Inconclusive);
  const ComponentResult* limsup = component(b[1], "limsup");
  CHECK(limsup->value.value == Rational(5, 24));
  CHECK(limsup->comparison.outcome == Ordering::Greater);
  CHECK(std::find(b[1].notes.begin(), b[1].notes.end(), "arguments are not monotone") != b[1].notes.end());

  CriteriaContext mono(single(EquationKind::Retarded, Rational(2, 5), 1), 1);
  for (const auto& o : baseline_tests(mono)) CHECK(o.verdict == Verdict::OscillatoryProven);

  CriteriaContext zero(single(EquationKind::Retarded, Rational(0), 1), 1);
  for (const auto& o : baseline_tests(zero)) CHECK(o.verdict == Verdict::Inconclusive);

  CriteriaContext adv(single(EquationKind::Advanced, Rational(2, 5), 1), 1);
  auto a = baseline_tests(adv);
  REQUIRE(a.size() == 1);
  CHECK(a[0].id == "B-3.2");
  CHECK(a[0].verdict == Verdict::OscillatoryProven);
}

TEST_CASE("criterion identifiers") {
  CriteriaContext ctx(load("two_delays"), 3);
  CHECK(evaluate_criterion(ctx, "T2.4(2)", {}).verdict == Verdict::OscillatoryProven);
  CHECK(evaluate_criterion(ctx, "B-3.1", {}).id == "B-3.1");
  CHECK_THROWS_AS(evaluate_criterion(ctx, "T2.4", {}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_criterion(ctx, "T3.3(1)", {}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_criterion(ctx, "T9.9", {}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_criterion(ctx, "T2.4a(1)", {}), std::invalid_argument);
  CHECK_THROWS_AS(evaluate_criterion(ctx, "B-3.2", {}), std::invalid_argument);
  CHECK(max_level({"T2.3", "T2.5(4)", "T2.4(2)"}) == 4);
}

TEST_CASE("analysis stops early") {
  AnalysisResult two = analyze(load("two_delays"));
  CHECK(two.proven);
  CHECK(two.r_reached == 2);
  CHECK(two.proven_by.front() == "T2.4(2)");

  AnalysisResult bounded = analyze(load("bounded_argument"));
  CHECK_FALSE(bounded.proven);

  AnalysisResult periodic = analyze(load("periodic_coefficient"));
  CHECK(periodic.proven);
  CHECK(std::find(periodic.proven_by.begin(), periodic.proven_by.end(), "T3.3") != periodic.proven_by.end());

  AnalysisResult zero = analyze(single(EquationKind::Retarded, Rational(0), 2));
  CHECK_FALSE(zero.proven);
  CHECK(zero.r_reached == 2);
}

TEST_CASE("analysis extends a short horizon") {
  AnalysisResult r = analyze(single(EquationKind::Retarded, Rational(1, 4), 1, 5));
  CHECK(r.horizon_used == required_horizon(single(EquationKind::Retarded, Rational(1, 4), 1), 8));
  CHECK_FALSE(r.notes.empty());
}
