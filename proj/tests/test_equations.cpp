#include <doctest.h>

#include <algorithm>
#include <random>

#include "osc/equations/envelope.hpp"
#include "osc/equations/equation_io.hpp"
#include "osc/equations/hypotheses.hpp"
#include "osc/error.hpp"

using namespace osc;

namespace {

const std::string kData = OSC_DATA_DIR;

Term term(std::vector<Rational> period, ArgumentRule arg, std::vector<Rational> preamble = {}) {
  return Term{PeriodicSequence(std::move(preamble), std::move(period)), std::move(arg)};
}

ArgumentRule cases(std::vector<ArgumentCase> c, std::map<long, long> overrides = {}) {
  return ArgumentRule(std::move(c), std::move(overrides));
}

bool has_issue(const InputError& e, const std::string& fragment) {
  return std::any_of(e.issues().begin(), e.issues().end(),
                     [&](const std::string& s) { return s.find(fragment) != std::string::npos; });
}

}  // namespace

TEST_CASE("periodic sequence indexing") {
  PeriodicSequence s({Rational(5)}, {Rational(1), Rational(2), Rational(3)}, -1);
  CHECK(s.at(-1) == Rational(5));
  CHECK(s.at(0) == Rational(1));
  CHECK(s.at(2) == Rational(3));
  CHECK(s.at(3) == Rational(1));
  CHECK(s.at(301) == Rational(2));
  CHECK(s.stable_from() == 0);
  CHECK_THROWS_AS(s.at(-2), std::out_of_range);
  CHECK_THROWS(PeriodicSequence({}, {}));
  CHECK(PeriodicSequence::constant(Rational(0)).all_zero());
}

TEST_CASE("argument rule residues and overrides") {
  ArgumentRule r = cases({ArgumentCase::constant(-1), ArgumentCase::offset(1), ArgumentCase::offset(1)});
  CHECK(r.at(0, EquationKind::Retarded) == -1);
  CHECK(r.at(1, EquationKind::Retarded) == 0);
  CHECK(r.at(3, EquationKind::Retarded) == -1);
  CHECK(r.at(5, EquationKind::Retarded) == 4);
  CHECK(r.has_constant());
  CHECK_FALSE(r.deviation_bound().has_value());

  ArgumentRule adv = cases({ArgumentCase::offset(2)}, {{3, 10}});
  CHECK(adv.at(3, EquationKind::Advanced) == 10);
  CHECK(adv.at(4, EquationKind::Advanced) == 6);
  CHECK(adv.deviation_bound() == 7);
  CHECK(adv.stable_from() == 4);
}

TEST_CASE("validation collects every issue") {
  try {
    EquationSpec(EquationKind::Retarded,
                 {term({Rational(-1, 4)}, ArgumentRule::offset(0)),
                  term({Rational(1, 4)}, cases({ArgumentCase::offset(1)}, {{2, 5}}))},
                 20);
    FAIL("expected a validation error");
  } catch (const ValidationError& e) {
    CHECK(e.issues().size() >= 3);
    CHECK(has_issue(e, "negative coefficient"));
    CHECK(has_issue(e, "terms[0].arg"));
    CHECK(has_issue(e, "terms[1].arg"));
  }
  CHECK_THROWS_AS(EquationSpec(EquationKind::Retarded, {}), ValidationError);
  CHECK_THROWS_AS(EquationSpec(EquationKind::Advanced, {term({Rational(1, 4)}, ArgumentRule::offset(0))}),
                  ValidationError);
}

TEST_CASE("default horizon covers ten periods and ten deviations") {
  EquationSpec eq(EquationKind::Retarded, {term({Rational(1, 8)}, cases({ArgumentCase::offset(3), ArgumentCase::offset(1)}))});
  CHECK(eq.horizon() == 0 + 10 * 2 + 10 * 3);
  CHECK(eq.period() == 2);
  CHECK(eq.with_horizon(7).horizon() == 7);
}

TEST_CASE("coefficient access is range checked") {
  EquationSpec eq(EquationKind::Retarded, {term({Rational(1, 4)}, ArgumentRule::offset(1))}, 10);
  CHECK(eq.eval_coeff(0, 10) == Rational(1, 4));
  CHECK_THROWS_AS(eq.eval_coeff(0, 11), std::out_of_range);
  CHECK_THROWS_AS(eq.eval_arg(0, -1), std::out_of_range);
}

TEST_CASE("phi envelope of the two-delay file") {
  const EquationSpec eq = load_equation(kData + "/two_delays.json");
  const EnvelopeTable phi = build_phi(eq);
  for (long n = 4; n <= eq.horizon(); ++n) {
    const long expected = n % 2 == 0 ? n - 2 : n - 1;
    CHECK(phi.term_at(0, n) == expected);
    CHECK(phi.term_at(1, n) == expected);
    CHECK(phi.at(n) == expected);
  }
}

TEST_CASE("phi envelope with a constant argument") {
  const EquationSpec eq = load_equation(kData + "/bounded_argument.json");
  const EnvelopeTable phi = build_phi(eq);
  for (long n = 3; n <= eq.horizon(); ++n) CHECK(phi.at(n) == (n % 3 == 0 ? n - 2 : n - 1));
}

TEST_CASE("rho envelope agrees with a brute-force minimum") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const long m = 1 + static_cast<long>(rng() % 6);
    std::vector<ArgumentCase> cs;
    for (long k = 0; k < m; ++k) cs.push_back(ArgumentCase::offset(1 + static_cast<long>(rng() % 5)));
    EquationSpec eq(EquationKind::Advanced, {term({Rational(1, 10)}, ArgumentRule(cs))}, 40);
    const EnvelopeTable rho = build_rho(eq);
    for (long n = 0; n <= 40; ++n) {
      long brute = eq.arg(0, n);
      for (long s = n; s <= n + 60; ++s) brute = std::min(brute, eq.arg(0, s));
      CHECK(rho.at(n) == brute);
      CHECK(rho.at(n) >= n + 1);
    }
  }
}

TEST_CASE("envelopes reject the wrong kind") {
  const EquationSpec eq = load_equation(kData + "/single_delay.json");
  CHECK_THROWS_AS(build_rho(eq), std::invalid_argument);
}

TEST_CASE("hypotheses of the bounded-argument file") {
  const HypothesisReport h = check_hypotheses(load_equation(kData + "/bounded_argument.json"));
  CHECK_FALSE(h.argument_limit);
  CHECK_FALSE(h.bounded_deviation);
  CHECK(h.coefficient_sum_below_one);
  CHECK_FALSE(h.sum_at_least_one_infinitely);
  CHECK_FALSE(h.all_monotone());
  CHECK(h.initial_depth == 1);
  CHECK_FALSE(h.warnings().empty());
}

TEST_CASE("hypotheses of the periodic-coefficient file") {
  const HypothesisReport h = check_hypotheses(load_equation(kData + "/periodic_coefficient.json"));
  CHECK(h.argument_limit);
  CHECK(h.bounded_deviation);
  REQUIRE(h.deviation_bounds.size() == 2);
  CHECK(h.deviation_bounds[0] == 2);
  CHECK(h.deviation_bounds[1] == 3);
  CHECK(h.max_deviation_bound == 3);
  CHECK(h.initial_depth == 2);
}

TEST_CASE("sum at least one is detected in the periodic part") {
  EquationSpec eq(EquationKind::Retarded, {term({Rational(1, 2), Rational(1)}, ArgumentRule::offset(1))});
  const HypothesisReport h = check_hypotheses(eq);
  CHECK(h.sum_at_least_one_infinitely);
  CHECK_FALSE(h.coefficient_sum_below_one);
  CHECK(h.sum_at_least_one.front() == 1);
}

TEST_CASE("monotone arguments") {
  EquationSpec mono(EquationKind::Retarded, {term({Rational(1, 4)}, ArgumentRule::offset(2))});
  CHECK(check_hypotheses(mono).all_monotone());
  const HypothesisReport h = check_hypotheses(load_equation(kData + "/two_delays.json"));
  CHECK_FALSE(h.all_monotone());
}

TEST_CASE("equation files report schema issues with paths") {
  nlohmann::json doc = nlohmann::json::parse(R"({
    "kind": "retarded", "colour": 1,
    "terms": [{"coeff": {"period": [0.25, "$q"]},
               "arg": {"modulus": 2, "cases": [{"kind": "offset", "value": 1}]}}]})");
  try {
    EquationDocument::parse(doc);
    FAIL("expected an input error");
  } catch (const InputError& e) {
    CHECK(has_issue(e, "$.colour: unknown field"));
    CHECK(has_issue(e, "$.terms[0].coeff.period[0]"));
    CHECK(has_issue(e, "$.terms[0].coeff.period[1]: undeclared parameter 'q'"));
    CHECK(has_issue(e, "$.terms[0].arg.cases"));
  }
  CHECK_THROWS_AS(parse_equation(nlohmann::json::parse(R"({"kind": "sideways", "terms": []})")), InputError);
  CHECK_THROWS_AS(parse_equation(nlohmann::json::parse(R"({"kind": "retarded", "allow_nondelay": true,
    "terms": [{"coeff": {"period": ["1/4"]}, "arg": {"modulus": 1, "cases": [{"kind": "offset", "value": 1}]}}]})")),
                  InputError);
}

TEST_CASE("parameters are substituted on instantiation") {
  const EquationDocument doc = EquationDocument::load(kData + "/delay_family.json");
  CHECK(doc.has_param("p"));
  CHECK(doc.instantiate().coeff(0, 5) == Rational(7, 40));
  CHECK(doc.instantiate({{"p", Rational(1742, 10000)}}).coeff(0, 5) == Rational(871, 5000));
  CHECK_THROWS_AS(doc.instantiate({{"q", Rational(1, 10)}}), InputError);
  CHECK_THROWS_AS(doc.instantiate({{"p", Rational(-1, 10)}}), ValidationError);
}

TEST_CASE("equations round-trip through JSON") {
  for (const char* name : {"single_delay", "bounded_argument", "delay_family", "two_delays", "periodic_coefficient"}) {
    const EquationSpec eq = load_equation(kData + "/" + name + ".json");
    CHECK(parse_equation(to_json(eq)) == eq);
  }
}

TEST_CASE("missing files are input errors") {
  CHECK_THROWS_AS(load_equation(kData + "/does_not_exist.json"), InputError);
}
