#include "osc/simulate/trace_io.hpp"

#include <fstream>
#include <ostream>
#include <sstream>
#include <string>

#include "osc/error.hpp"

namespace osc {

namespace {

constexpr const char* kHeader = "n,value_rational,value_decimal,sign";

const char* sign_text(int s) { return s > 0 ? "+" : (s < 0 ? "-" : "0"); }

}  // namespace

void write_trace_csv(std::ostream& out, const Trace& trace) {
  out << kHeader << '\n';
  for (long n = trace.first_index; n <= trace.last_index(); ++n) {
    const Rational& v = trace.at(n);
    out << n << ',' << v.str() << ',' << v.decimal(12) << ',' << sign_text(v.sign()) << '\n';
  }
}

void write_trace_csv(const std::filesystem::path& path, const Trace& trace) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  write_trace_csv(out, trace);
}

Trace read_trace_csv(const std::filesystem::path& path, EquationKind kind) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::string line;
  if (!std::getline(in, line) || line != kHeader) {
    throw InputError(path.string() + ": expected header " + kHeader);
  }
  Trace t;
  t.kind = kind;
  long lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string n_text;
    std::string value_text;
    if (!std::getline(fields, n_text, ',') || !std::getline(fields, value_text, ',')) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": expected n,value_rational,...");
    }
    long n = 0;
    Rational v;
    try {
      std::size_t used = 0;
      n = std::stol(n_text, &used);
      if (used != n_text.size()) throw std::invalid_argument("trailing characters");
      v = Rational::parse(value_text);
    } catch (const std::exception& e) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": " + e.what());
    }
    if (t.values.empty()) {
      t.first_index = n;
    } else if (n != t.last_index() + 1) {
      throw InputError(path.string() + ":" + std::to_string(lineno) + ": indices must be consecutive");
    }
    t.values.push_back(std::move(v));
  }
  if (t.values.empty()) throw InputError(path.string() + ": trace is empty");
  t.finalize();
  return t;
}

}  // namespace osc
