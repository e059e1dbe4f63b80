#include "osc/equations/equation_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "osc/error.hpp"

namespace osc {

using nlohmann::json;

namespace {

class Issues {
 public:
  void add(const std::string& path, const std::string& msg) { list_.push_back(path + ": " + msg); }
  bool empty() const { return list_.empty(); }
  [[noreturn]] void raise() {
    std::string msg = "invalid equation file: " + list_.front();
    if (list_.size() > 1) msg += " (and " + std::to_string(list_.size() - 1) + " more)";
    throw InputError(msg, list_);
  }

 private:
  std::vector<std::string> list_;
};

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& path,
                    Issues& issues) {
  for (const auto& [key, _] : obj.items()) {
    if (!known.count(key)) issues.add(path + "." + key, "unknown field");
  }
}

std::optional<long> get_integer(const json& obj, const std::string& key, const std::string& path,
                                Issues& issues, bool required) {
  if (!obj.contains(key)) {
    if (required) issues.add(path + "." + key, "missing required field");
    return std::nullopt;
  }
  const json& v = obj.at(key);
  if (!v.is_number_integer()) {
    issues.add(path + "." + key, "expected an integer");
    return std::nullopt;
  }
  return v.get<long>();
}

std::optional<Rational> parse_rational(const json& v, const std::string& path, Issues& issues) {
  if (!v.is_string()) {
    issues.add(path, "rationals must be strings such as \"3/10\"");
    return std::nullopt;
  }
  try {
    return Rational::parse(v.get<std::string>());
  } catch (const std::exception& e) {
    issues.add(path, e.what());
    return std::nullopt;
  }
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw InputError(path.string() + ": " + e.what());
  }
}

EquationDocument EquationDocument::parse(const json& doc) {
  Issues issues;
  EquationDocument out;
  if (!doc.is_object()) {
    issues.add("$", "expected a JSON object");
    issues.raise();
  }
  reject_unknown(doc, {"kind", "horizon", "params", "terms", "name", "allow_nondelay"}, "$", issues);

  if (!doc.contains("kind") || !doc["kind"].is_string()) {
    issues.add("$.kind", "expected \"retarded\" or \"advanced\"");
  } else if (doc["kind"] == "retarded") {
    out.kind_ = EquationKind::Retarded;
  } else if (doc["kind"] == "advanced") {
    out.kind_ = EquationKind::Advanced;
  } else {
    issues.add("$.kind", "expected \"retarded\" or \"advanced\"");
  }
  out.horizon_ = get_integer(doc, "horizon", "$", issues, false);
  if (doc.contains("name")) {
    if (doc["name"].is_string()) {
      out.name_ = doc["name"].get<std::string>();
    } else {
      issues.add("$.name", "expected a string");
    }
  }
  if (doc.contains("allow_nondelay")) {
    if (!doc["allow_nondelay"].is_boolean()) {
      issues.add("$.allow_nondelay", "expected a boolean");
    } else if (doc["allow_nondelay"].get<bool>()) {
      issues.add("$.allow_nondelay", "non-delay arguments tau(n) = n are not supported");
    }
  }
  if (doc.contains("params")) {
    if (!doc["params"].is_object()) {
      issues.add("$.params", "expected an object of name -> rational");
    } else {
      for (const auto& [key, v] : doc["params"].items()) {
        if (auto q = parse_rational(v, "$.params." + key, issues)) out.params_[key] = *q;
      }
    }
  }

  auto slot = [&](const json& v, const std::string& path) {
    Slot s;
    if (v.is_string() && !v.get<std::string>().empty() && v.get<std::string>()[0] == '$') {
      s.param = v.get<std::string>().substr(1);
      if (!out.params_.count(s.param)) issues.add(path, "undeclared parameter '" + s.param + "'");
    } else {
      s.value = parse_rational(v, path, issues);
    }
    return s;
  };

  if (!doc.contains("terms") || !doc["terms"].is_array() || doc["terms"].empty()) {
    issues.add("$.terms", "expected a nonempty array");
  } else {
    for (std::size_t i = 0; i < doc["terms"].size(); ++i) {
      const json& t = doc["terms"][i];
      const std::string path = "$.terms[" + std::to_string(i) + "]";
      TermDoc td;
      if (!t.is_object()) {
        issues.add(path, "expected an object");
        continue;
      }
      reject_unknown(t, {"coeff", "arg"}, path, issues);
      if (!t.contains("coeff") || !t["coeff"].is_object()) {
        issues.add(path + ".coeff", "expected an object");
      } else {
        const json& c = t["coeff"];
        reject_unknown(c, {"preamble", "period", "start"}, path + ".coeff", issues);
        if (c.contains("preamble")) {
          if (!c["preamble"].is_array()) {
            issues.add(path + ".coeff.preamble", "expected an array");
          } else {
            for (std::size_t k = 0; k < c["preamble"].size(); ++k) {
              td.preamble.push_back(
                  slot(c["preamble"][k], path + ".coeff.preamble[" + std::to_string(k) + "]"));
            }
          }
        }
        if (!c.contains("period") || !c["period"].is_array() || c["period"].empty()) {
          issues.add(path + ".coeff.period", "expected a nonempty array");
        } else {
          for (std::size_t k = 0; k < c["period"].size(); ++k) {
            td.period.push_back(
                slot(c["period"][k], path + ".coeff.period[" + std::to_string(k) + "]"));
          }
        }
        td.start = get_integer(c, "start", path + ".coeff", issues, false).value_or(0);
      }
      if (!t.contains("arg") || !t["arg"].is_object()) {
        issues.add(path + ".arg", "expected an object");
      } else {
        const json& a = t["arg"];
        const std::string ap = path + ".arg";
        reject_unknown(a, {"modulus", "cases", "overrides"}, ap, issues);
        const auto modulus = get_integer(a, "modulus", ap, issues, true);
        if (modulus && *modulus < 1) issues.add(ap + ".modulus", "must be positive");
        if (!a.contains("cases") || !a["cases"].is_array()) {
          issues.add(ap + ".cases", "expected an array");
        } else {
          if (modulus && static_cast<long>(a["cases"].size()) != *modulus) {
            issues.add(ap + ".cases", "expected exactly modulus = " + std::to_string(*modulus) +
                                          " entries");
          }
          for (std::size_t k = 0; k < a["cases"].size(); ++k) {
            const json& cs = a["cases"][k];
            const std::string cp = ap + ".cases[" + std::to_string(k) + "]";
            if (!cs.is_object()) {
              issues.add(cp, "expected an object");
              continue;
            }
            reject_unknown(cs, {"kind", "value"}, cp, issues);
            const auto value = get_integer(cs, "value", cp, issues, true);
            ArgumentCase ac;
            if (cs.contains("kind") && cs["kind"] == "offset") {
              ac.kind = ArgumentCase::Kind::Offset;
            } else if (cs.contains("kind") && cs["kind"] == "constant") {
              ac.kind = ArgumentCase::Kind::Constant;
            } else {
              issues.add(cp + ".kind", "expected \"offset\" or \"constant\"");
            }
            ac.value = value.value_or(1);
            td.cases.push_back(ac);
          }
        }
        if (a.contains("overrides")) {
          if (!a["overrides"].is_array()) {
            issues.add(ap + ".overrides", "expected an array of [n, value] pairs");
          } else {
            for (std::size_t k = 0; k < a["overrides"].size(); ++k) {
              const json& o = a["overrides"][k];
              const std::string op = ap + ".overrides[" + std::to_string(k) + "]";
              if (!o.is_array() || o.size() != 2 || !o[0].is_number_integer() ||
                  !o[1].is_number_integer()) {
                issues.add(op, "expected [n, value] with integer entries");
                continue;
              }
              if (!td.overrides.emplace(o[0].get<long>(), o[1].get<long>()).second) {
                issues.add(op, "duplicate override index");
              }
            }
          }
        }
      }
      out.terms_.push_back(std::move(td));
    }
  }
  if (!issues.empty()) issues.raise();
  return out;
}

EquationDocument EquationDocument::load(const std::filesystem::path& path) {
  return parse(read_json_file(path));
}

EquationSpec EquationDocument::instantiate(const ParamBindings& bindings) const {
  ParamBindings values = params_;
  for (const auto& [k, v] : bindings) {
    if (!params_.count(k)) throw InputError("unknown parameter '" + k + "'");
    values[k] = v;
  }
  auto resolve = [&](const std::vector<Slot>& slots) {
    std::vector<Rational> out;
    out.reserve(slots.size());
    for (const auto& s : slots) out.push_back(s.value ? *s.value : values.at(s.param));
    return out;
  };
  std::vector<Term> terms;
  for (const auto& td : terms_) {
    terms.push_back(Term{PeriodicSequence(resolve(td.preamble), resolve(td.period), td.start),
                         ArgumentRule(td.cases, td.overrides)});
  }
  return EquationSpec(kind_, std::move(terms), horizon_);
}

EquationSpec parse_equation(const json& doc) { return EquationDocument::parse(doc).instantiate(); }

EquationSpec load_equation(const std::filesystem::path& path) {
  return EquationDocument::load(path).instantiate();
}

json to_json(const EquationSpec& eq) {
  json doc;
  doc["kind"] = to_string(eq.kind());
  doc["horizon"] = eq.horizon();
  doc["terms"] = json::array();
  for (const auto& t : eq.terms()) {
    json coeff;
    coeff["preamble"] = json::array();
    for (const auto& q : t.coeff.preamble()) coeff["preamble"].push_back(q.str());
    coeff["period"] = json::array();
    for (const auto& q : t.coeff.period()) coeff["period"].push_back(q.str());
    if (t.coeff.start_index() != 0) coeff["start"] = t.coeff.start_index();
    json arg;
    arg["modulus"] = t.arg.modulus();
    arg["cases"] = json::array();
    for (const auto& c : t.arg.cases()) {
      arg["cases"].push_back(
          {{"kind", c.kind == ArgumentCase::Kind::Offset ? "offset" : "constant"},
           {"value", c.value}});
    }
    if (!t.arg.overrides().empty()) {
      arg["overrides"] = json::array();
      for (const auto& [n, v] : t.arg.overrides()) arg["overrides"].push_back({n, v});
    }
    doc["terms"].push_back({{"coeff", coeff}, {"arg", arg}});
  }
  return doc;
}

}  // namespace osc
