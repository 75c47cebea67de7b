#include "kproper/json_io.hpp"

#include <fstream>
#include <sstream>

#include "kproper/errors.hpp"

namespace kproper::io {

namespace {

std::string child(const std::string& ptr, std::string_view key) { return ptr + "/" + std::string(key); }
std::string child(const std::string& ptr, std::size_t i) { return ptr + "/" + std::to_string(i); }
std::string where(const std::string& ptr) { return ptr.empty() ? "/" : ptr; }

const json& array_at(const json& j, const std::string& ptr) {
  if (!j.is_array()) throw ParseError("expected an array", where(ptr));
  return j;
}

IntVector read_int_list(const json& j, const std::string& ptr) {
  IntVector out;
  const auto& a = array_at(j, ptr);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(read_integer(a[i], child(ptr, i)));
  return out;
}

std::size_t read_index(const json& j, const std::string& ptr) {
  const auto v = read_integer(j, ptr);
  if (v < 0) throw ParseError("expected a non-negative index", where(ptr));
  return static_cast<std::size_t>(v);
}

std::string read_string(const json& j, const std::string& ptr) {
  if (!j.is_string()) throw ParseError("expected a string", where(ptr));
  return j.get<std::string>();
}

bool read_bool(const json& j, const std::string& ptr) {
  if (!j.is_boolean()) throw ParseError("expected true or false", where(ptr));
  return j.get<bool>();
}

template <class T, class F>
std::vector<T> read_list(const json& j, const std::string& ptr, F&& read) {
  std::vector<T> out;
  const auto& a = array_at(j, ptr);
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(read(a[i], child(ptr, i)));
  return out;
}

json optional_rational(const std::optional<Rational>& x) { return x ? to_json(*x) : json(nullptr); }

std::optional<Rational> read_optional_rational(const json& obj, std::string_view key, const std::string& ptr) {
  if (!obj.contains(key) || obj.at(std::string(key)).is_null()) return std::nullopt;
  return read_rational(obj.at(std::string(key)), child(ptr, key));
}

json bracket_json(const Bracket& b) { return json::array({to_json(b.lo), to_json(b.hi)}); }

std::optional<Bracket> read_bracket(const json& obj, std::string_view key, const std::string& ptr) {
  if (!obj.contains(key) || obj.at(std::string(key)).is_null()) return std::nullopt;
  const auto p = child(ptr, key);
  const auto v = read_rational_list(obj.at(std::string(key)), p);
  if (v.size() != 2) throw ParseError("bracket needs exactly two endpoints", p);
  return Bracket{v[0], v[1]};
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what(), "offset " + std::to_string(e.byte));
  }
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_json(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(e.message(), path + ":" + e.location());
  }
}

const json& field(const json& obj, std::string_view key, const std::string& ptr) {
  if (!obj.is_object()) throw ParseError("expected an object", where(ptr));
  auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ParseError("missing field \"" + std::string(key) + "\"", where(ptr));
  return *it;
}

Rational read_rational(const json& j, const std::string& ptr) {
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const ParseError& e) {
      throw ParseError(e.message(), where(ptr));
    }
  }
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  throw ParseError("expected a rational string such as \"3/4\"", where(ptr));
}

RatVector read_rational_list(const json& j, const std::string& ptr) {
  return read_list<Rational>(j, ptr, [](const json& x, const std::string& p) { return read_rational(x, p); });
}

std::int64_t read_integer(const json& j, const std::string& ptr) {
  if (!j.is_number_integer()) throw ParseError("expected an integer", where(ptr));
  return j.get<std::int64_t>();
}

json to_json(const Rational& x) { return x.str(); }

json to_json(const RatVector& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

json to_json(const IntMatrix& m) {
  json out = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(m.row(r));
  return out;
}

json to_json(const Fan& fan) {
  json cones = json::array();
  for (const auto& c : fan.max_cones()) cones.push_back(c);
  return json{{"dim", fan.dim()}, {"rays", fan.rays()}, {"max_cones", cones}};
}

Fan fan_from_json(const json& j, const std::string& ptr) {
  const auto dim = read_integer(field(j, "dim", ptr), child(ptr, "dim"));
  if (dim < 1) throw ParseError("dim must be positive", child(ptr, "dim"));
  const auto rays = read_list<IntVector>(field(j, "rays", ptr), child(ptr, "rays"), read_int_list);
  const auto cones = read_list<std::vector<std::size_t>>(
      field(j, "max_cones", ptr), child(ptr, "max_cones"), [](const json& c, const std::string& p) {
        return read_list<std::size_t>(c, p, read_index);
      });
  return Fan(static_cast<std::size_t>(dim), rays, cones);
}

json to_json(const Polytope& p) {
  json hrep = json::array();
  for (const auto& h : p.hrep()) hrep.push_back({{"normal", h.normal}, {"offset", to_json(h.offset)}});
  json eqs = json::array();
  for (const auto& e : p.equalities()) eqs.push_back({{"normal", to_json(e.normal)}, {"rhs", to_json(e.rhs)}});
  json out{{"dim", p.dim()}, {"hrep", hrep}, {"equalities", eqs}};
  if (p.dim() <= 3) {
    json vrep = json::array();
    for (const auto& v : p.vertices()) vrep.push_back(to_json(v));
    out["vrep"] = vrep;
  }
  return out;
}

Polytope polytope_from_json(const json& j, const std::string& ptr) {
  const auto hp = child(ptr, "hrep");
  const auto hrep = read_list<Halfspace>(field(j, "hrep", ptr), hp, [](const json& h, const std::string& p) {
    return Halfspace{read_int_list(field(h, "normal", p), child(p, "normal")),
                     read_rational(field(h, "offset", p), child(p, "offset"))};
  });
  std::vector<Hyperplane> eqs;
  if (j.contains("equalities"))
    eqs = read_list<Hyperplane>(j["equalities"], child(ptr, "equalities"), [](const json& e, const std::string& p) {
      return Hyperplane{read_rational_list(field(e, "normal", p), child(p, "normal")),
                        read_rational(field(e, "rhs", p), child(p, "rhs"))};
    });
  std::size_t dim = 0;
  if (j.contains("dim")) {
    dim = read_index(j["dim"], child(ptr, "dim"));
  } else if (!hrep.empty()) {
    dim = hrep.front().normal.size();
  } else {
    throw ParseError("cannot infer dimension of an empty H-representation; add \"dim\"", where(ptr));
  }
  Polytope p(dim, hrep, eqs);
  if (j.contains("vrep") && dim <= 3) {
    auto given = read_list<RatVector>(j["vrep"], child(ptr, "vrep"), read_rational_list);
    std::sort(given.begin(), given.end());
    if (given != p.vertices()) throw ParseError("vrep does not match the H-representation", child(ptr, "vrep"));
  }
  return p;
}

json to_json(const PicardClass& c) {
  return json{{"r", c.r()}, {"coords", to_json(c.coords())}};
}

PicardClass picard_class_from_json(const json& j, const std::string& ptr) {
  const auto r = read_integer(field(j, "r", ptr), child(ptr, "r"));
  const auto coords = read_rational_list(field(j, "coords", ptr), child(ptr, "coords"));
  if (r < 1 || r > 8) throw ParseError("r must lie in 1..8", child(ptr, "r"));
  if (coords.size() != static_cast<std::size_t>(r) + 1)
    throw ParseError("expected " + std::to_string(r + 1) + " coordinates (d, m_1..m_r)", child(ptr, "coords"));
  return PicardClass(static_cast<int>(r), coords);
}

json to_json(const AbstractSlice& s) {
  json curves = json::array();
  for (const auto& c : s.test_curves)
    curves.push_back({{"name", c.name}, {"l_pairing", to_json(c.l_pairing)}, {"k_pairing", to_json(c.k_pairing)}});
  return json{{"n", s.n},
              {"l_top", to_json(s.l_top)},
              {"k_l_top", to_json(s.k_l_top)},
              {"k_top", to_json(s.k_top)},
              {"test_curves", curves}};
}

AbstractSlice slice_from_json(const json& j, const std::string& ptr) {
  AbstractSlice s;
  s.n = read_index(field(j, "n", ptr), child(ptr, "n"));
  s.l_top = read_rational(field(j, "l_top", ptr), child(ptr, "l_top"));
  s.k_l_top = read_rational(field(j, "k_l_top", ptr), child(ptr, "k_l_top"));
  s.k_top = read_rational(field(j, "k_top", ptr), child(ptr, "k_top"));
  if (j.contains("test_curves"))
    s.test_curves = read_list<AbstractSlice::TestCurve>(
        j["test_curves"], child(ptr, "test_curves"), [](const json& c, const std::string& p) {
          return AbstractSlice::TestCurve{read_string(field(c, "name", p), child(p, "name")),
                                          read_rational(field(c, "l_pairing", p), child(p, "l_pairing")),
                                          read_rational(field(c, "k_pairing", p), child(p, "k_pairing"))};
        });
  return s;
}

json to_json(const SweepConfig& c) {
  return json{{"family", c.family},
              {"epsilon", to_json(c.epsilon)},
              {"lambda_min", to_json(c.lambda_min)},
              {"lambda_max", to_json(c.lambda_max)},
              {"step", to_json(c.step)},
              {"refine_tol", to_json(c.refine_tol)},
              {"conjectured_endpoints", to_json(c.conjectured_endpoints)},
              {"parallel", c.parallel}};
}

SweepConfig sweep_config_from_json(const json& j, const std::string& ptr) {
  SweepConfig c;
  c.family = read_string(field(j, "family", ptr), child(ptr, "family"));
  if (j.contains("epsilon")) c.epsilon = read_rational(j["epsilon"], child(ptr, "epsilon"));
  c.lambda_min = read_rational(field(j, "lambda_min", ptr), child(ptr, "lambda_min"));
  c.lambda_max = read_rational(field(j, "lambda_max", ptr), child(ptr, "lambda_max"));
  c.step = read_rational(field(j, "step", ptr), child(ptr, "step"));
  c.refine_tol = read_rational(field(j, "refine_tol", ptr), child(ptr, "refine_tol"));
  if (j.contains("conjectured_endpoints"))
    c.conjectured_endpoints = read_rational_list(j["conjectured_endpoints"], child(ptr, "conjectured_endpoints"));
  if (j.contains("parallel")) c.parallel = read_bool(j["parallel"], child(ptr, "parallel"));
  return c;
}

json to_json(const ConditionBounds& b) {
  return json{{"condition", b.condition},
              {"lower", optional_rational(b.lower)},
              {"lower_binding", b.lower_binding},
              {"upper", optional_rational(b.upper)},
              {"upper_binding", b.upper_binding},
              {"never", b.never}};
}

ConditionBounds condition_bounds_from_json(const json& j, const std::string& ptr) {
  ConditionBounds b;
  b.condition = read_string(field(j, "condition", ptr), child(ptr, "condition"));
  b.lower = read_optional_rational(j, "lower", ptr);
  b.lower_binding = read_string(field(j, "lower_binding", ptr), child(ptr, "lower_binding"));
  b.upper = read_optional_rational(j, "upper", ptr);
  b.upper_binding = read_string(field(j, "upper_binding", ptr), child(ptr, "upper_binding"));
  b.never = read_bool(field(j, "never", ptr), child(ptr, "never"));
  return b;
}

json to_json(const FeasibilityReport& r) {
  json intervals = json::array();
  for (const auto& iv : r.intervals) {
    json diag = json::array();
    for (const auto& d : iv.diagnostics) diag.push_back(to_json(d));
    intervals.push_back({{"lo_bracket", iv.lo_bracket ? bracket_json(*iv.lo_bracket) : json(nullptr)},
                         {"hi_bracket", iv.hi_bracket ? bracket_json(*iv.hi_bracket) : json(nullptr)},
                         {"witness", {{"lambda", to_json(iv.witness_lambda)}, {"a", to_json(iv.witness_a)}}},
                         {"witness_a_interval", json::array({to_json(iv.witness_a_lo), to_json(iv.witness_a_hi)})},
                         {"grid_points", iv.grid_points},
                         {"diagnostics", diag}});
  }
  json checks = json::array();
  for (const auto& e : r.endpoint_checks)
    checks.push_back({{"endpoint", to_json(e.endpoint)},
                      {"feasible_at", e.feasible_at},
                      {"feasible_below", e.feasible_below},
                      {"feasible_above", e.feasible_above},
                      {"verified", e.verified}});
  return json{{"family", r.family},
              {"epsilon", to_json(r.epsilon)},
              {"lambda_min", to_json(r.lambda_min)},
              {"lambda_max", to_json(r.lambda_max)},
              {"step", to_json(r.step)},
              {"refine_tol", to_json(r.refine_tol)},
              {"grid_size", r.grid_size},
              {"probes", r.probes},
              {"intervals", intervals},
              {"endpoint_checks", checks}};
}

FeasibilityReport feasibility_report_from_json(const json& j, const std::string& ptr) {
  FeasibilityReport r;
  r.family = read_string(field(j, "family", ptr), child(ptr, "family"));
  r.epsilon = read_rational(field(j, "epsilon", ptr), child(ptr, "epsilon"));
  r.lambda_min = read_rational(field(j, "lambda_min", ptr), child(ptr, "lambda_min"));
  r.lambda_max = read_rational(field(j, "lambda_max", ptr), child(ptr, "lambda_max"));
  r.step = read_rational(field(j, "step", ptr), child(ptr, "step"));
  r.refine_tol = read_rational(field(j, "refine_tol", ptr), child(ptr, "refine_tol"));
  r.grid_size = read_index(field(j, "grid_size", ptr), child(ptr, "grid_size"));
  r.probes = read_index(field(j, "probes", ptr), child(ptr, "probes"));
  r.intervals = read_list<FeasibleRange>(
      field(j, "intervals", ptr), child(ptr, "intervals"), [](const json& iv, const std::string& p) {
        FeasibleRange f;
        f.lo_bracket = read_bracket(iv, "lo_bracket", p);
        f.hi_bracket = read_bracket(iv, "hi_bracket", p);
        const auto wp = child(p, "witness");
        const auto& w = field(iv, "witness", p);
        f.witness_lambda = read_rational(field(w, "lambda", wp), child(wp, "lambda"));
        f.witness_a = read_rational(field(w, "a", wp), child(wp, "a"));
        const auto ap = child(p, "witness_a_interval");
        const auto ai = read_rational_list(field(iv, "witness_a_interval", p), ap);
        if (ai.size() != 2) throw ParseError("expected two endpoints", ap);
        f.witness_a_lo = ai[0];
        f.witness_a_hi = ai[1];
        f.grid_points = read_index(field(iv, "grid_points", p), child(p, "grid_points"));
        f.diagnostics = read_list<ConditionBounds>(field(iv, "diagnostics", p), child(p, "diagnostics"),
                                                   condition_bounds_from_json);
        return f;
      });
  r.endpoint_checks = read_list<EndpointCheck>(
      field(j, "endpoint_checks", ptr), child(ptr, "endpoint_checks"), [](const json& e, const std::string& p) {
        return EndpointCheck{read_rational(field(e, "endpoint", p), child(p, "endpoint")),
                             read_bool(field(e, "feasible_at", p), child(p, "feasible_at")),
                             read_bool(field(e, "feasible_below", p), child(p, "feasible_below")),
                             read_bool(field(e, "feasible_above", p), child(p, "feasible_above")),
                             read_bool(field(e, "verified", p), child(p, "verified"))};
      });
  return r;
}

json to_json(const PropernessReport& r) {
  json conditions = json::array();
  for (const auto& c : r.conditions) {
    json values = json::array();
    for (const auto& v : c.values) values.push_back({{"name", v.name}, {"value", to_json(v.value)}});
    conditions.push_back({{"name", c.name},
                          {"statement", c.statement},
                          {"holds", c.holds},
                          {"values", values},
                          {"binding", c.binding}});
  }
  return json{{"mode", r.mode},
              {"backend", r.backend},
              {"dimension", r.dimension},
              {"polarization", r.polarization},
              {"epsilon", optional_rational(r.epsilon)},
              {"alpha", optional_rational(r.alpha)},
              {"alpha_provenance", r.alpha_provenance},
              {"mu", optional_rational(r.mu)},
              {"conditions", conditions},
              {"criterion_satisfied", r.criterion_satisfied},
              {"scope", std::string(to_string(r.scope))},
              {"verdict", r.verdict}};
}

PropernessReport properness_report_from_json(const json& j, const std::string& ptr) {
  PropernessReport r;
  r.mode = read_string(field(j, "mode", ptr), child(ptr, "mode"));
  r.backend = read_string(field(j, "backend", ptr), child(ptr, "backend"));
  r.dimension = read_index(field(j, "dimension", ptr), child(ptr, "dimension"));
  r.polarization = read_string(field(j, "polarization", ptr), child(ptr, "polarization"));
  r.epsilon = read_optional_rational(j, "epsilon", ptr);
  r.alpha = read_optional_rational(j, "alpha", ptr);
  r.alpha_provenance = read_string(field(j, "alpha_provenance", ptr), child(ptr, "alpha_provenance"));
  r.mu = read_optional_rational(j, "mu", ptr);
  r.conditions = read_list<ConditionReport>(
      field(j, "conditions", ptr), child(ptr, "conditions"), [](const json& c, const std::string& p) {
        ConditionReport out;
        out.name = read_string(field(c, "name", p), child(p, "name"));
        out.statement = read_string(field(c, "statement", p), child(p, "statement"));
        out.holds = read_bool(field(c, "holds", p), child(p, "holds"));
        out.values = read_list<NamedValue>(field(c, "values", p), child(p, "values"),
                                           [](const json& v, const std::string& q) {
                                             return NamedValue{read_string(field(v, "name", q), child(q, "name")),
                                                               read_rational(field(v, "value", q), child(q, "value"))};
                                           });
        out.binding = read_string(field(c, "binding", p), child(p, "binding"));
        return out;
      });
  r.criterion_satisfied = read_bool(field(j, "criterion_satisfied", ptr), child(ptr, "criterion_satisfied"));
  const auto scope = read_string(field(j, "scope", ptr), child(ptr, "scope"));
  if (scope == to_string(Scope::all_potentials)) {
    r.scope = Scope::all_potentials;
  } else if (scope == to_string(Scope::invariant_potentials)) {
    r.scope = Scope::invariant_potentials;
  } else {
    throw ParseError("unknown scope \"" + scope + "\"", child(ptr, "scope"));
  }
  r.verdict = read_string(field(j, "verdict", ptr), child(ptr, "verdict"));
  return r;
}

}  // namespace kproper::io
