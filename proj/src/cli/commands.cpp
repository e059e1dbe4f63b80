#include "osc/cli/commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <ostream>
#include <sstream>

#include "osc/cli/report.hpp"
#include "osc/cli/svg_plot.hpp"
#include "osc/criteria/analysis.hpp"
#include "osc/error.hpp"
#include "osc/simulate/certificate.hpp"
#include "osc/simulate/solver.hpp"
#include "osc/simulate/trace_io.hpp"

namespace osc::cli {

namespace {

std::filesystem::path prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory " + dir.string() + ": " + ec.message());
  return dir;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path.string());
  f << text;
}

EquationSpec with_required_horizon(const EquationSpec& eq, int r_max) {
  const long needed = required_horizon(eq, r_max);
  return eq.horizon() < needed ? eq.with_horizon(needed) : eq;
}

std::vector<std::string> default_criteria(EquationKind kind, int r_max) {
  std::vector<std::string> ids{criterion_id("T2.3", kind)};
  for (int r = 1; r <= r_max; ++r) {
    ids.push_back(criterion_id("T2.4", kind, r));
    ids.push_back(criterion_id("T2.5", kind, r));
  }
  ids.push_back(criterion_id("T3.3", kind));
  ids.push_back(criterion_id("T3.4", kind));
  if (kind == EquationKind::Retarded) {
    ids.insert(ids.end(), {"B-5.16", "B-3.1"});
  } else {
    ids.push_back("B-3.2");
  }
  return ids;
}

CriterionOutcome evaluate_checked(CriteriaContext& ctx, const std::string& id, const CriteriaOptions& opts) {
  try {
    return evaluate_criterion(ctx, id, opts);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
}

AnalysisResult analyze_selected(const EquationSpec& input, const std::vector<std::string>& ids,
                                const CriteriaOptions& opts) {
  int level = 1;
  try {
    level = std::max(1, max_level(ids));
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  AnalysisResult result;
  EquationSpec eq = with_required_horizon(input, level);
  result.horizon_used = eq.horizon();
  result.r_reached = level;
  CriteriaContext ctx(eq, level);
  result.hypotheses = ctx.hypotheses();
  for (const auto& id : ids) result.outcomes.push_back(evaluate_checked(ctx, id, opts));
  for (const auto& o : result.outcomes) {
    if (o.proven()) result.proven_by.push_back(o.id);
  }
  result.proven = !result.proven_by.empty();
  return result;
}

std::string trace_range(const Trace& t) {
  return "[" + std::to_string(t.first_index) + ", " + std::to_string(t.last_index()) + "]";
}

}  // namespace

int cmd_analyze(const AnalysisRequest& req, std::ostream& out) {
  const EquationDocument doc = EquationDocument::load(req.equation_file);
  const EquationSpec eq = doc.instantiate(req.bindings);
  const AnalysisResult result =
      req.criteria_ids.empty() ? analyze(eq, req.criteria) : analyze_selected(eq, req.criteria_ids, req.criteria);

  std::ostringstream text;
  if (req.format == "csv") {
    write_analysis_csv(text, result);
  } else {
    write_analysis_text(text, doc.name(), eq, result);
  }
  out << text.str();
  if (req.out_dir) {
    const auto dir = prepare_out_dir(*req.out_dir);
    write_file(dir / (req.format == "csv" ? "report.csv" : "report.txt"), text.str());
  }
  if (req.expect) {
    const bool want = *req.expect == "oscillatory";
    if (want != result.proven) {
      out << "expectation '" << *req.expect << "' not met\n";
      return kExitFailure;
    }
  }
  return kExitOk;
}

int cmd_sweep(const AnalysisRequest& req, std::ostream& out) {
  if (!req.sweep) throw InputError("sweep needs --param, --from, --to and --step");
  const EquationDocument doc = EquationDocument::load(req.equation_file);
  if (!doc.has_param(req.sweep->param)) {
    throw InputError("parameter '" + req.sweep->param + "' is not declared in " + req.equation_file.string());
  }
  const std::vector<Rational> grid = sweep_grid(*req.sweep);
  std::vector<SweepRow> rows;
  std::vector<std::string> ids = req.criteria_ids;
  for (const Rational& v : grid) {
    ParamBindings bindings = req.bindings;
    bindings[req.sweep->param] = v;
    const EquationSpec base = doc.instantiate(bindings);
    if (ids.empty()) ids = default_criteria(base.kind(), req.criteria.r_max);
    int level = 1;
    try {
      level = std::max(1, max_level(ids));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
    CriteriaContext ctx(with_required_horizon(base, level), level);
    for (const auto& id : ids) {
      CriterionOutcome o = evaluate_checked(ctx, id, req.criteria);
      rows.push_back({v, o.id, o.verdict, o.extremal});
    }
  }
  const auto transitions = find_transitions(rows);

  std::ostringstream csv;
  write_sweep_csv(csv, rows);
  std::ostringstream summary;
  write_transitions_text(summary, transitions);
  if (req.format == "csv") {
    out << csv.str();
  } else {
    out << "sweep of " << req.sweep->param << " over " << grid.size() << " values\n";
    for (const auto& r : rows) {
      out << "  " << r.param.decimal(12) << "  " << r.criterion << "  " << to_string(r.verdict) << "  "
          << (r.value ? r.value->decimal() : "-") << "\n";
    }
    out << summary.str();
  }
  if (req.out_dir) {
    const auto dir = prepare_out_dir(*req.out_dir);
    write_file(dir / "sweep.csv", csv.str());
    write_file(dir / "transitions.txt", summary.str());
  }
  return kExitOk;
}

int cmd_simulate(const AnalysisRequest& req, std::ostream& out) {
  const EquationDocument doc = EquationDocument::load(req.equation_file);
  const EquationSpec eq = doc.instantiate(req.bindings);

  std::vector<InitialData> inits;
  std::vector<std::string> labels;
  if (req.init_file) {
    inits.push_back(load_initial_data(*req.init_file));
    labels.push_back("init " + req.init_file->filename().string());
  } else if (req.seed) {
    if (req.count < 1) throw InputError("--count must be >= 1");
    for (int k = 0; k < req.count; ++k) {
      const unsigned long seed = *req.seed + static_cast<unsigned long>(k);
      inits.push_back(random_initial_data(eq, seed));
      labels.push_back("seed " + std::to_string(seed));
    }
  } else {
    throw InputError("simulate needs --init or --seed");
  }

  std::vector<Trace> traces;
  for (const auto& init : inits) {
    traces.push_back(eq.retarded() ? solve_retarded(eq, init, req.upto.value_or(eq.horizon()))
                                   : solve_advanced(eq, init, req.downto.value_or(0)));
  }

  const auto dir = prepare_out_dir(req.out_dir.value_or("."));
  const long settle = req.settle.value_or(default_settle(eq));
  for (std::size_t k = 0; k < traces.size(); ++k) {
    const std::string file = traces.size() == 1 ? "trace.csv" : "trace_" + std::to_string(k + 1) + ".csv";
    std::ostringstream csv;
    write_trace_csv(csv, traces[k]);
    write_file(dir / file, csv.str());
    if (req.format == "csv") out << csv.str();
    out << file << ": " << labels[k] << ", x on " << trace_range(traces[k]);
    if (traces[k].last_index() > settle) {
      const OscillationReport rep = detect_oscillation(traces[k], settle);
      out << ", " << to_string(rep.evidence) << " (" << rep.sign_changes_after_settle.size()
          << " sign changes after n = " << settle << ")";
    } else {
      out << ", too short for the settle index " << settle;
    }
    out << "\n";
  }

  if (req.plot) {
    std::vector<PlotSeries> series;
    for (std::size_t k = 0; k < traces.size(); ++k) series.push_back({labels[k], &traces[k]});
    std::vector<std::pair<long, long>> windows = req.windows;
    if (windows.empty()) {
      long lo = traces.front().first_index;
      long hi = traces.front().last_index();
      for (const auto& t : traces) {
        lo = std::min(lo, t.first_index);
        hi = std::max(hi, t.last_index());
      }
      windows.push_back({lo, hi});
    }
    const std::string name = doc.name().empty() ? req.equation_file.stem().string() : doc.name();
    for (const auto& [a, b] : windows) {
      const std::string file = "plot_" + std::to_string(a) + "_" + std::to_string(b) + ".svg";
      std::ostringstream svg;
      write_svg_plot(svg, name + ", n in [" + std::to_string(a) + ", " + std::to_string(b) + "]", series, a, b);
      write_file(dir / file, svg.str());
      out << "plot: " << file << "\n";
    }
  }
  return kExitOk;
}

int cmd_verify(const AnalysisRequest& req, std::ostream& out) {
  const EquationDocument doc = EquationDocument::load(req.equation_file);
  const EquationSpec eq = doc.instantiate(req.bindings);
  if (req.certificate.has_value() == req.trace.has_value()) {
    throw InputError("verify needs exactly one of --certificate or --trace");
  }
  if (req.certificate) {
    const VerificationResult v = verify_certificate(eq, load_certificate(*req.certificate));
    write_verification_text(out, v);
    return v.verified() ? kExitOk : kExitFailure;
  }
  const Trace t = read_trace_csv(*req.trace, eq.kind());
  const TraceCheck c = check_trace(eq, t);
  if (c.ok) {
    out << "trace: VERIFIED (" << c.checked << " residuals on x " << trace_range(t) << " are zero)\n";
    return kExitOk;
  }
  out << "trace: FAILED at n = " << *c.first_failure << ", residual " << c.failing_residual->str() << "\n";
  return kExitFailure;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Oscillation criteria for difference equations with several deviating arguments"};
  app.require_subcommand(1);
  AnalysisRequest req;
  std::vector<std::string> bindings;
  std::string criteria_list;
  std::string from_text;
  std::string to_text;
  std::string step_text;
  std::string param;
  std::vector<std::string> window_texts;
  std::string init_path;
  std::string certificate_path;
  std::string trace_path;
  std::string out_dir;
  std::string expect;

  auto common = [&](CLI::App* sub) {
    sub->add_option("equation", req.equation_file, "Equation file (JSON)")->required();
    sub->add_option("--set", bindings, "Parameter binding name=value");
    sub->add_option("--out-dir", out_dir, "Directory for output files");
    sub->add_option("--format", req.format, "Output format")->check(CLI::IsMember({"text", "csv"}));
  };
  auto criteria_opts = [&](CLI::App* sub) {
    sub->add_option("--r-max", req.criteria.r_max, "Deepest iteration level")->check(CLI::Range(1, 64));
    sub->add_option("--max-precision-bits", req.criteria.max_precision_bits, "Precision cap for comparisons")
        ->check(CLI::Range(64u, 1u << 20));
    sub->add_flag("--nonstrict", req.criteria.nonstrict, "Non-strict reading of the 1/e liminf test");
    sub->add_option("--criteria", criteria_list, "Comma-separated criterion identifiers");
  };

  CLI::App* analyze_cmd = app.add_subcommand("analyze", "Run the oscillation criteria");
  common(analyze_cmd);
  criteria_opts(analyze_cmd);
  analyze_cmd->add_option("--expect", expect, "Exit 1 unless the overall verdict matches")
      ->check(CLI::IsMember({"oscillatory", "inconclusive"}));
  analyze_cmd->add_flag("--plot", req.plot, "Accepted for symmetry; analysis has no plots");

  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Sweep a declared parameter over a rational grid");
  common(sweep_cmd);
  criteria_opts(sweep_cmd);
  sweep_cmd->add_option("--param", param, "Parameter name")->required();
  sweep_cmd->add_option("--from", from_text, "First value")->required();
  sweep_cmd->add_option("--to", to_text, "Last value")->required();
  sweep_cmd->add_option("--step", step_text, "Grid step")->required();

  CLI::App* simulate_cmd = app.add_subcommand("simulate", "Solve the recurrence exactly");
  common(simulate_cmd);
  simulate_cmd->add_option("--init", init_path, "Initial (or terminal) data file");
  simulate_cmd->add_option("--seed", req.seed, "Seed for generated initial data");
  simulate_cmd->add_option("--count", req.count, "Number of seeded traces");
  simulate_cmd->add_option("--upto", req.upto, "Last index (retarded)");
  simulate_cmd->add_option("--downto", req.downto, "First index (advanced)");
  simulate_cmd->add_option("--window", window_texts, "Plot window a:b (repeatable)");
  simulate_cmd->add_option("--settle", req.settle, "Settle index for the sign-change evidence");
  simulate_cmd->add_flag("--plot", req.plot, "Write SVG plots");

  CLI::App* verify_cmd = app.add_subcommand("verify", "Check a periodic-solution certificate or a trace");
  common(verify_cmd);
  verify_cmd->add_option("--certificate", certificate_path, "Certificate file (JSON)");
  verify_cmd->add_option("--trace", trace_path, "Trace file (CSV)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      app.exit(e, out, err);
      return kExitOk;
    }
    err << "error: " << e.what() << "\n";
    return kExitInvalidInput;
  }

  try {
    for (const auto& b : bindings) req.bindings.insert(parse_binding(b));
    if (!out_dir.empty()) req.out_dir = out_dir;
    if (!expect.empty()) req.expect = expect;
    if (!init_path.empty()) req.init_file = init_path;
    if (!certificate_path.empty()) req.certificate = certificate_path;
    if (!trace_path.empty()) req.trace = trace_path;
    for (const auto& w : window_texts) req.windows.push_back(parse_window(w));
    std::stringstream ids(criteria_list);
    for (std::string id; std::getline(ids, id, ',');) {
      if (!id.empty()) req.criteria_ids.push_back(id);
    }
    if (sweep_cmd->parsed()) {
      auto rational = [](const std::string& name, const std::string& text) {
        try {
          return parse_value(text);
        } catch (const std::exception& e) {
          throw InputError("--" + name + ": " + e.what());
        }
      };
      req.sweep = SweepDescriptor{param, rational("from", from_text), rational("to", to_text),
                                  rational("step", step_text)};
    }

    if (analyze_cmd->parsed()) return cmd_analyze(req, out);
    if (sweep_cmd->parsed()) return cmd_sweep(req, out);
    if (simulate_cmd->parsed()) return cmd_simulate(req, out);
    return cmd_verify(req, out);
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    for (const auto& issue : e.issues()) err << "  " << issue << "\n";
    return kExitInvalidInput;
  }
}

}  // namespace osc::cli
