#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "osc/equations/equation_io.hpp"
#include "osc/error.hpp"
#include "osc/simulate/certificate.hpp"
#include "osc/simulate/solver.hpp"
#include "osc/simulate/trace_io.hpp"

using namespace osc;

namespace {

const std::string kData = OSC_DATA_DIR;

EquationSpec single(EquationKind kind, Rational p, long d) {
  return EquationSpec(kind, {Term{PeriodicSequence::constant(std::move(p)), ArgumentRule::offset(d)}});
}

std::filesystem::path scratch(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / "osc_test_simulate";
  std::filesystem::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_CASE("bounded-argument forward trace") {
  EquationSpec eq = load_equation(kData + "/bounded_argument.json");
  Trace t = solve_retarded(eq, {{-1, Rational(-12, 7)}, {0, Rational(1)}}, 8);
  CHECK(t.first_index == -1);
  CHECK(t.last_index() == 8);
  const Rational expected[] = {Rational(-12, 7), Rational(1), Rational(13, 7), Rational(109, 70),
                               Rational(1), Rational(13, 7), Rational(109, 70), Rational(1)};
  for (long n = -1; n <= 6; ++n) CHECK(t.at(n) == expected[n + 1]);
  CHECK(t.eventually_positive_from == 0);
  CHECK_FALSE(t.eventually_negative_from.has_value());
  CHECK(check_trace(eq, t).ok);
  CHECK(detect_oscillation(t, 2).evidence == Evidence::NonoscEvidence);
}

TEST_CASE("solver input errors") {
  EquationSpec eq = load_equation(kData + "/two_delays.json");
  CHECK_THROWS_AS(solve_retarded(eq, {{0, Rational(1)}}, 10), InputError);
  CHECK_THROWS_AS(solve_retarded(eq, {{-4, Rational(1)}, {-3, Rational(1)}, {-1, Rational(1)}, {0, Rational(1)}}, 10),
                  InputError);
  EquationSpec adv = single(EquationKind::Advanced, Rational(1, 4), 1);
  CHECK_THROWS_AS(solve_advanced(adv, {{10, Rational(1)}, {12, Rational(1)}}, 0), InputError);
  CHECK_THROWS_AS(solve_advanced(adv, {{10, Rational(1)}}, -2), InputError);
}

TEST_CASE("zero data gives a zero trace") {
  EquationSpec eq = load_equation(kData + "/two_delays.json");
  InitialData init;
  for (long n = -4; n <= 0; ++n) init[n] = Rational(0);
  Trace t = solve_retarded(eq, init, 40);
  for (const auto& v : t.values) CHECK(v == Rational(0));
  CHECK(t.sign_changes.empty());
  CHECK(detect_oscillation(t, 10).evidence == Evidence::Degenerate);
}

TEST_CASE("advanced backward solve") {
  EquationSpec adv = single(EquationKind::Advanced, Rational(1, 4), 1);
  // x(n) = 2^n is the double root of 1/4 l^2 - l + 1.
  Trace t = solve_advanced(adv, {{20, Rational(1)}, {21, Rational(2)}}, 0);
  CHECK(t.first_index == 0);
  CHECK(t.last_index() == 21);
  for (long n = 0; n < 21; ++n) CHECK(t.at(n + 1) == t.at(n) * Rational(2));
  CHECK(check_trace(adv, t).ok);
  CHECK(residual(adv, t, 21) == std::nullopt);
}

TEST_CASE("oscillating simulation on the two-delay file") {
  EquationSpec eq = load_equation(kData + "/two_delays.json");
  InitialData init;
  for (long n = -4; n <= 0; ++n) init[n] = Rational(1);
  Trace t = solve_retarded(eq, init, 200);
  CHECK(check_trace(eq, t).ok);
  OscillationReport r = detect_oscillation(t, default_settle(eq));
  CHECK(r.evidence == Evidence::OscillatingEvidence);
  CHECK(r.sign_changes_after_settle.size() >= 2);
  CHECK_THROWS(detect_oscillation(t, 200));
}

TEST_CASE("check_trace finds a corrupted value") {
  EquationSpec eq = load_equation(kData + "/bounded_argument.json");
  Trace t = solve_retarded(eq, {{-1, Rational(-12, 7)}, {0, Rational(1)}}, 8);
  t.values[5] += Rational(1, 1000);  // x(4)
  TraceCheck c = check_trace(eq, t);
  CHECK_FALSE(c.ok);
  CHECK(c.first_failure == 3);
  CHECK(*c.failing_residual == Rational(1, 1000));
}

TEST_CASE("certificate verification") {
  EquationSpec eq = load_equation(kData + "/bounded_argument.json");
  PeriodicSolutionCertificate cert = load_certificate(kData + "/bounded_argument_certificate.json");
  CHECK(cert.start == -1);
  CHECK(cert.periodic_from() == 0);
  CHECK(cert.at(4) == Rational(13, 7));
  VerificationResult v = verify_certificate(eq, cert);
  CHECK(v.verified());
  CHECK(v.proves_nonoscillation());
  CHECK(v.sign == 1);
  CHECK(v.combined_period == 3);
  CHECK(verify_periodic_solution(eq, cert));

  PeriodicSolutionCertificate bad = cert;
  bad.period[2] = Rational(11, 7);
  VerificationResult f = verify_certificate(eq, bad);
  CHECK(f.status == VerificationStatus::Failed);
  CHECK(f.first_failing_index == 1);
  CHECK(f.failing_value_index == 2);
  CHECK(*f.failing_residual == Rational(11, 7) - Rational(109, 70));
  CHECK_FALSE(verify_periodic_solution(eq, bad));
}

TEST_CASE("degenerate and unverifiable certificates") {
  EquationSpec eq = load_equation(kData + "/two_delays.json");
  PeriodicSolutionCertificate zero{{}, {Rational(0)}, -4};
  VerificationResult v = verify_certificate(eq, zero);
  CHECK(v.verified());
  CHECK(v.degenerate);
  CHECK_FALSE(v.proves_nonoscillation());

  PeriodicSolutionCertificate shortc{{}, {Rational(1)}, 0};
  CHECK(verify_certificate(eq, shortc).status == VerificationStatus::NotVerifiable);

  EquationSpec adv = single(EquationKind::Advanced, Rational(1, 4), 1);
  CHECK_THROWS_AS(EquationSpec(EquationKind::Advanced, {Term{PeriodicSequence::constant(Rational(1, 4)),
                                                              ArgumentRule({ArgumentCase::constant(5)})}}),
                  ValidationError);
  // x constant 1 is not a solution when p = 1/4.
  CHECK(verify_certificate(adv, PeriodicSolutionCertificate{{}, {Rational(1)}, 0}).status ==
        VerificationStatus::Failed);
}

TEST_CASE("certificate JSON") {
  auto doc = nlohmann::json::parse(R"({"name": "c", "preamble": ["-12/7"], "period": ["1", "13/7", "109/70"], "period_start": 0})");
  PeriodicSolutionCertificate c = parse_certificate(doc);
  CHECK(c.start == -1);
  PeriodicSolutionCertificate back = parse_certificate(to_json(c));
  CHECK(back.start == c.start);
  CHECK(back.period == c.period);
  CHECK(back.preamble == c.preamble);
  CHECK_THROWS_AS(parse_certificate(nlohmann::json::parse(R"({"period": [], "start": 0})")), InputError);
  CHECK_THROWS_AS(parse_certificate(nlohmann::json::parse(R"({"period": ["1"], "start": 0, "x": 1})")), InputError);
  CHECK_THROWS_AS(parse_certificate(nlohmann::json::parse(R"({"period": ["1/0"], "start": 0})")), InputError);
}

TEST_CASE("detect_oscillation on hand-made traces") {
  Trace t;
  t.first_index = 0;
  t.values = {Rational(1), Rational(-1), Rational(0), Rational(1), Rational(2), Rational(3), Rational(4)};
  t.finalize();
  CHECK(t.sign_changes == std::vector<long>{1, 3});
  CHECK(t.positivity_window == 3);
  CHECK(detect_oscillation(t, 0).evidence == Evidence::OscillatingEvidence);
  CHECK(detect_oscillation(t, 3).evidence == Evidence::NonoscEvidence);
}

TEST_CASE("trace CSV round trip") {
  EquationSpec eq = load_equation(kData + "/bounded_argument.json");
  Trace t = solve_retarded(eq, {{-1, Rational(-12, 7)}, {0, Rational(1)}}, 12);
  auto path = scratch("trace.csv");
  write_trace_csv(path, t);
  Trace back = read_trace_csv(path, EquationKind::Retarded);
  CHECK(back.first_index == t.first_index);
  CHECK(back.values == t.values);

  std::ostringstream os;
  write_trace_csv(os, t);
  CHECK(os.str().rfind("n,value_rational,value_decimal,sign\n-1,-12/7,", 0) == 0);

  auto empty = scratch("empty.csv");
  std::ofstream(empty).close();
  CHECK_THROWS_AS(read_trace_csv(empty, EquationKind::Retarded), InputError);
  auto header_only = scratch("header.csv");
  std::ofstream(header_only) << "n,value_rational,value_decimal,sign\n";
  CHECK_THROWS_AS(read_trace_csv(header_only, EquationKind::Retarded), InputError);
  auto gap = scratch("gap.csv");
  std::ofstream(gap) << "n,value_rational,value_decimal,sign\n0,1,1,+\n2,1,1,+\n";
  CHECK_THROWS_AS(read_trace_csv(gap, EquationKind::Retarded), InputError);
}
