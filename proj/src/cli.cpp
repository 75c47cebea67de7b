#include "kproper/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "kproper/errors.hpp"

namespace kproper::cli {

using io::json;

namespace {

std::string approx_suffix(const std::string& s, bool approx) {
  if (!approx) return "";
  try {
    const Rational x = Rational::parse(s);
    if (x.is_integer()) return "";
    std::ostringstream o;
    o << "  (~" << std::setprecision(8) << x.approx() << ", approx)";
    return o.str();
  } catch (const ParseError&) {
    return "";
  }
}

std::string scalar_text(const json& v, bool approx) {
  if (v.is_string()) return v.get<std::string>() + approx_suffix(v.get<std::string>(), approx);
  if (v.is_null()) return "none";
  return v.dump();
}

bool is_flat(const json& v) {
  if (!v.is_array()) return !v.is_object();
  return std::all_of(v.begin(), v.end(), [](const json& x) { return is_flat(x) && !x.is_array(); }) ||
         std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_array() && is_flat(x); });
}

std::string flat_text(const json& v) {
  if (!v.is_array()) return v.is_string() ? v.get<std::string>() : v.dump();
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? ", " : "") + flat_text(v[i]);
  return out + ")";
}

void text_walk(const json& v, const std::string& indent, std::ostream& o, bool approx) {
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (value.is_object() || (value.is_array() && !is_flat(value))) {
        o << indent << key << ":\n";
        text_walk(value, indent + "  ", o, approx);
      } else if (value.is_array()) {
        o << indent << key << ": " << flat_text(value) << "\n";
      } else {
        o << indent << key << ": " << scalar_text(value, approx) << "\n";
      }
    }
  } else if (v.is_array()) {
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i].is_object() || (v[i].is_array() && !is_flat(v[i]))) {
        o << indent << "[" << i << "]\n";
        text_walk(v[i], indent + "  ", o, approx);
      } else {
        o << indent << "- " << (v[i].is_array() ? flat_text(v[i]) : scalar_text(v[i], approx)) << "\n";
      }
    }
  } else {
    o << indent << scalar_text(v, approx) << "\n";
  }
}

const ToricClassSpace& toric_space(const Backend& b, const std::string& what) {
  if (!b.fan) throw DomainError(what + " needs a toric backend, got " + b.name);
  return static_cast<const ToricClassSpace&>(*b.space);
}

std::string env_or_empty(const char* name) {
  const char* v = std::getenv(name);
  return v ? v : "";
}

json matrices_json(const std::vector<IntMatrix>& ms) {
  json out = json::array();
  for (const auto& m : ms) out.push_back(io::to_json(m));
  return out;
}

std::vector<IntMatrix> read_generators(const std::string& path, std::size_t dim) {
  const json j = io::read_json_file(path);
  if (!j.is_array()) throw ParseError("expected an array of matrices", path + ":/");
  std::vector<IntMatrix> out;
  for (std::size_t g = 0; g < j.size(); ++g) {
    const std::string p = path + ":/" + std::to_string(g);
    if (!j[g].is_array() || j[g].size() != dim) throw ParseError("expected a square matrix of size " + std::to_string(dim), p);
    std::vector<std::int64_t> data;
    for (std::size_t r = 0; r < dim; ++r) {
      const auto& row = j[g][r];
      if (!row.is_array() || row.size() != dim) throw ParseError("bad matrix row", p + "/" + std::to_string(r));
      for (std::size_t c = 0; c < dim; ++c) data.push_back(io::read_integer(row[c], p + "/" + std::to_string(r) + "/" + std::to_string(c)));
    }
    out.emplace_back(dim, dim, std::move(data));
  }
  return out;
}

json positivity_json(const ClassSpace& space, const RatVector& cls) {
  const auto v = space.positivity(cls);
  return json{{"class", space.describe(cls)},
              {"coeffs", io::to_json(cls)},
              {"ample", v.ample},
              {"nef", v.nef},
              {"min_value", io::to_json(v.min_value)},
              {"binding", v.binding},
              {"extra_failure", v.extra_failure ? json(*v.extra_failure) : json(nullptr)}};
}

json polytope_json(const Polytope& p, int lattice_k) {
  json out{{"dim", p.dim()}, {"bounded", p.bounded()}, {"affine_dimension", p.affine_dimension()}};
  json verts = json::array();
  for (const auto& v : p.vertices()) verts.push_back(io::to_json(v));
  out["vertices"] = verts;
  if (!p.bounded()) return out;
  const Rational vol = volume(p);
  out["volume"] = io::to_json(vol);
  if (p.dim() == 2 && p.affine_dimension() == 2) out["boundary_measure"] = io::to_json(boundary_measure(p));
  out["barycenter"] = vol.is_zero() ? json(nullptr) : io::to_json(barycenter(p));
  if (!p.empty()) {
    out["lattice_k"] = lattice_k;
    out["lattice_points"] = lattice_points(p, lattice_k).size();
  }
  return out;
}

AlphaSource alpha_source_for(const Backend& b, const RatVector& cls, const std::string& alpha_flag, GroupMode mode,
                             const std::vector<IntMatrix>& generators) {
  std::string flag = alpha_flag;
  if (flag.empty()) flag = b.fan ? "formula" : (b.picard_r == 8 ? "dervan" : "");
  if (flag.empty()) throw DomainError("alpha unavailable for backend " + b.name + "; pass --alpha <value>");
  if (flag == "formula") return TheoremAlpha{mode, generators};
  if (flag == "dervan") {
    if (b.picard_r != 8) throw DomainError("--alpha dervan applies to the dp1 backend only");
    const auto params = dp1_parameters(PicardClass(8, cls));
    if (!params)
      throw DomainError("--alpha dervan needs a class of the form a(3H - E1 - ... - E7 - lambda E8)");
    const auto& [a, lambda] = *params;
    return SuppliedAlpha{dervan_alpha_bound(lambda) / a, "supplied bound (Dervan)", false};
  }
  try {
    return SuppliedAlpha{Rational::parse(flag), "supplied value", false};
  } catch (const ParseError& e) {
    throw ParseError(std::string(e.what()) + " (expected formula, dervan, or a rational)", "--alpha");
  }
}

struct Options {
  std::string format = "json";
  bool approx = false;
  bool parallel = false;
  std::string input;
  std::string coeffs;
  std::string with;
  std::string group = "full";
  std::string generators;
  int oracle_depth = 0;
  int lattice_k = 1;
  std::string epsilon = "1";
  std::string mode = "theorem1";
  std::string alpha;
  std::string config;
  int r = 8;
};

}  // namespace

Backend parse_input(const std::string& name_or_path) {
  Backend b;
  b.name = name_or_path;
  if (name_or_path == "p2" || name_or_path == "dp6") {
    b.fan = builtin_fan(name_or_path);
  } else if (name_or_path == "dp1") {
    b.picard_r = 8;
  } else if (std::filesystem::exists(name_or_path)) {
    const json j = io::read_json_file(name_or_path);
    const std::string at = name_or_path + ":";
    try {
      if (j.is_object() && j.contains("rays")) {
        b.fan = std::make_shared<const Fan>(io::fan_from_json(j));
      } else if (j.is_object() && j.contains("l_top")) {
        b.slice = io::slice_from_json(j);
      } else if (j.is_object() && j.contains("r") && !j.contains("coords")) {
        const auto r = io::read_integer(j["r"], "/r");
        if (r < 1 || r > 8) throw ParseError("r must lie in 1..8", "/r");
        b.picard_r = static_cast<int>(r);
      } else {
        throw ParseError("expected a fan (\"rays\"), a Picard surface (\"r\") or a slice (\"l_top\")", "/");
      }
    } catch (const ParseError& e) {
      throw ParseError(e.message(), at + e.location());
    }
  } else {
    throw ParseError("unknown builtin \"" + name_or_path + "\" (expected p2, dp6, dp1) and no such file", "input");
  }
  if (b.fan) b.space = std::make_shared<const ToricClassSpace>(b.fan);
  if (b.picard_r) b.space = std::make_shared<const PicardClassSpace>(*b.picard_r);
  if (b.slice) b.space = std::make_shared<const SliceClassSpace>(*b.slice);
  return b;
}

RatVector parse_coeffs(const std::string& text, std::size_t expected, const std::string& flag) {
  RatVector out;
  if (std::filesystem::exists(text) || text.starts_with("[")) {
    const bool file = !text.starts_with("[");
    json j = file ? io::read_json_file(text) : io::parse_json(text);
    const std::string at = file ? text + ":" : flag + ":";
    std::string ptr;
    if (j.is_object()) {
      ptr = j.contains("coeffs") ? "/coeffs" : "/coords";
      j = io::field(j, ptr.substr(1));
    }
    try {
      out = io::read_rational_list(j, ptr);
    } catch (const ParseError& e) {
      throw ParseError(e.message(), at + e.location());
    }
  } else {
    std::size_t start = 0;
    for (std::size_t i = 0;; ++i) {
      const auto end = text.find(',', start);
      const std::string item = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
      try {
        out.push_back(Rational::parse(item));
      } catch (const ParseError& e) {
        throw ParseError(e.message(), flag + "[" + std::to_string(i) + "]");
      }
      if (end == std::string::npos) break;
      start = end + 1;
    }
  }
  if (out.size() != expected)
    throw ParseError("expected " + std::to_string(expected) + " coefficients, got " + std::to_string(out.size()), flag);
  return out;
}

std::string render(const json& data, Format format, bool approx) {
  if (format == Format::json) return data.dump(2) + "\n";
  std::ostringstream o;
  text_walk(data, "", o, approx);
  return o.str();
}

std::string render(const PropernessReport& r, Format format, bool approx) {
  if (format == Format::json) return render(io::to_json(r), format, approx);
  auto num = [&](const Rational& x) { return x.str() + approx_suffix(x.str(), approx); };
  std::ostringstream o;
  o << "mode: " << r.mode << "\n";
  o << "backend: " << r.backend << " (n = " << r.dimension << ")\n";
  o << "polarization: " << r.polarization << "\n";
  if (r.epsilon) o << "epsilon: " << num(*r.epsilon) << "\n";
  if (r.alpha) o << "alpha: " << num(*r.alpha) << "  [" << r.alpha_provenance << "]\n";
  if (r.mu) o << "mu: " << num(*r.mu) << "\n";
  for (const auto& c : r.conditions) {
    o << c.name << ": " << (c.holds ? "holds" : "FAILS") << "  " << c.statement << "\n";
    for (const auto& v : c.values) o << "    " << v.name << " = " << num(v.value) << "\n";
    if (!c.binding.empty()) o << "    binding: " << c.binding << "\n";
  }
  o << "verdict: " << r.verdict << "\n";
  o << "scope: " << to_string(r.scope) << "\n";
  return o.str();
}

std::string render(const FeasibilityReport& r, Format format, bool approx) {
  if (format == Format::json) return render(io::to_json(r), format, approx);
  auto num = [&](const Rational& x) { return x.str() + approx_suffix(x.str(), approx); };
  std::ostringstream o;
  o << "family: " << r.family << "  epsilon: " << num(r.epsilon) << "\n";
  o << "grid: [" << r.lambda_min << ", " << r.lambda_max << "] step " << r.step << " (" << r.grid_size
    << " points), refine_tol " << r.refine_tol << ", probes " << r.probes << "\n";
  if (r.intervals.empty()) o << "no feasible lambda on the grid\n";
  for (std::size_t i = 0; i < r.intervals.size(); ++i) {
    const auto& iv = r.intervals[i];
    o << "interval " << i + 1 << ":\n";
    o << "  lower endpoint in "
      << (iv.lo_bracket ? "[" + num(iv.lo_bracket->lo) + ", " + num(iv.lo_bracket->hi) + "]" : "grid start") << "\n";
    o << "  upper endpoint in "
      << (iv.hi_bracket ? "[" + num(iv.hi_bracket->lo) + ", " + num(iv.hi_bracket->hi) + "]" : "grid end") << "\n";
    o << "  witness: lambda = " << num(iv.witness_lambda) << ", a = " << num(iv.witness_a) << " (a in ("
      << iv.witness_a_lo << ", " << iv.witness_a_hi << "))\n";
    for (const auto& d : iv.diagnostics) {
      o << "    " << d.condition << ":";
      if (d.lower) o << " a > " << num(*d.lower) << " [" << d.lower_binding << "]";
      if (d.upper) o << " a < " << num(*d.upper) << " [" << d.upper_binding << "]";
      if (d.never) o << " never satisfiable [" << d.lower_binding << "]";
      o << "\n";
    }
  }
  for (const auto& e : r.endpoint_checks)
    o << "conjectured endpoint " << e.endpoint << ": " << (e.verified ? "verified" : "NOT verified")
      << " (feasible below " << e.feasible_below << ", at " << e.feasible_at << ", above " << e.feasible_above << ")\n";
  return o.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact checks of K-energy properness criteria on toric and blowup surfaces", "kproper"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--approx", opt.approx, "Append decimal approximations to text output (non-authoritative)");

  auto* fan = app.add_subcommand("fan", "Fan queries");
  fan->require_subcommand(1);
  auto* fan_validate = fan->add_subcommand("validate", "Smoothness and completeness");
  fan_validate->add_option("input", opt.input, "Builtin name or fan JSON file")->required();
  auto* fan_autos = fan->add_subcommand("autos", "Lattice automorphisms of the fan");
  fan_autos->add_option("input", opt.input, "Builtin name or fan JSON file")->required();

  auto* divisor = app.add_subcommand("divisor", "Divisor queries");
  divisor->require_subcommand(1);
  auto* ample = divisor->add_subcommand("ample", "Ampleness and nefness of a class");
  ample->add_option("input", opt.input, "Backend")->required();
  ample->add_option("--coeffs", opt.coeffs, "Coefficients: inline list, JSON array or file")->required();

  auto* polytope = app.add_subcommand("polytope", "Polytope queries");
  polytope->require_subcommand(1);
  auto* pinfo = polytope->add_subcommand("info", "Vertices, volume, boundary measure, barycenter");
  pinfo->add_option("input", opt.input, "Polytope JSON file, or toric backend with --coeffs")->required();
  pinfo->add_option("--coeffs", opt.coeffs, "Divisor coefficients (moment polytope)");
  pinfo->add_option("--lattice-k", opt.lattice_k, "Count points of P in (1/k)M")->check(CLI::PositiveNumber);

  auto* alpha = app.add_subcommand("alpha", "Alpha invariant from the toric vertex formula");
  alpha->add_option("input", opt.input, "Toric backend")->required();
  alpha->add_option("--coeffs", opt.coeffs, "Divisor coefficients (default -K)");
  alpha->add_option("--group", opt.group, "Group mode")->check(CLI::IsMember({"full", "torus", "explicit"}));
  alpha->add_option("--generators", opt.generators, "JSON file with generator matrices (explicit mode)");
  alpha->add_option("--oracle-depth", opt.oracle_depth, "Also run the lct oracle up to this level")
      ->check(CLI::NonNegativeNumber);

  auto* intersect = app.add_subcommand("intersect", "D^n, -K.D^(n-1), mu and Rbar");
  intersect->add_option("input", opt.input, "Backend")->required();
  intersect->add_option("--coeffs", opt.coeffs, "Class coordinates (default -K)");
  intersect->add_option("--with", opt.with, "Second class for D.E (surfaces)");

  auto* check = app.add_subcommand("check", "Properness criteria");
  check->add_option("input", opt.input, "Backend");
  check->add_option("--builtin", opt.input, "Builtin backend (p2, dp6, dp1)");
  check->add_option("--fan,--slice,--picard", opt.input, "Backend JSON file");
  check->add_option("--coeffs,--coords", opt.coeffs, "Polarization (default -K, or L for slices)");
  check->add_option("--epsilon", opt.epsilon, "Epsilon (canonical rational)");
  check->add_option("--mode", opt.mode, "Criterion")
      ->check(CLI::IsMember({"theorem1", "negative-c1", "fano", "jflow"}));
  check->add_option("--alpha", opt.alpha, "formula, dervan, or a rational value");
  check->add_option("--group", opt.group, "Group mode for the formula")
      ->check(CLI::IsMember({"full", "torus", "explicit"}));
  check->add_option("--generators", opt.generators, "JSON file with generator matrices (explicit mode)");
  check->add_option("--with", opt.with, "Second class W for --mode jflow");

  auto* sweep = app.add_subcommand("sweep", "Certified lambda sweep of a family");
  sweep->add_option("--config", opt.config, "Sweep config JSON file")->required();
  sweep->add_flag("--parallel", opt.parallel, "Evaluate the grid concurrently");

  auto* picard = app.add_subcommand("picard", "Blowups of P^2");
  picard->require_subcommand(1);
  auto* curves = picard->add_subcommand("curves", "(-1)-curves");
  curves->add_option("--r", opt.r, "Number of points")->check(CLI::Range(1, 8));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  const Format format = opt.format == "text" ? Format::text : Format::json;
  try {
    auto emit = [&](const json& j) { out << render(j, format, opt.approx); };
    auto coeffs_or = [&](const Backend& b, const std::string& text, const RatVector& fallback, const std::string& flag) {
      return text.empty() ? fallback : parse_coeffs(text, b.space->coordinate_count(), flag);
    };
    auto group_generators = [&](std::size_t dim) {
      if (opt.group != "explicit") return std::vector<IntMatrix>{};
      if (opt.generators.empty()) throw ParseError("explicit group mode needs --generators", "--generators");
      return read_generators(opt.generators, dim);
    };

    if (fan_validate->parsed() || fan_autos->parsed()) {
      const Backend b = parse_input(opt.input);
      const auto& space = toric_space(b, "fan");
      const Fan& f = *space.fan();
      if (fan_validate->parsed()) {
        const auto v = validate_fan(f);
        json j = io::to_json(f);
        j["smooth"] = v.smooth;
        j["complete"] = v.complete;
        emit(j);
      } else {
        const auto g = fan_automorphisms(f);
        emit(json{{"order", g.size()}, {"matrices", matrices_json(g)}});
      }
    } else if (ample->parsed()) {
      const Backend b = parse_input(opt.input);
      emit(positivity_json(*b.space, parse_coeffs(opt.coeffs, b.space->coordinate_count(), "--coeffs")));
    } else if (pinfo->parsed()) {
      if (opt.coeffs.empty() && std::filesystem::exists(opt.input)) {
        const json j = io::read_json_file(opt.input);
        if (j.is_object() && j.contains("hrep")) {
          try {
            emit(polytope_json(io::polytope_from_json(j), opt.lattice_k));
          } catch (const ParseError& e) {
            throw ParseError(e.message(), opt.input + ":" + e.location());
          }
          return 0;
        }
      }
      const Backend b = parse_input(opt.input);
      const auto& space = toric_space(b, "moment polytope");
      const auto cls = coeffs_or(b, opt.coeffs, Rational(-1) * space.canonical(), "--coeffs");
      emit(polytope_json(moment_polytope(space.divisor(cls)), opt.lattice_k));
    } else if (alpha->parsed()) {
      const Backend b = parse_input(opt.input);
      const auto& space = toric_space(b, "alpha");
      const auto cls = coeffs_or(b, opt.coeffs, Rational(-1) * space.canonical(), "--coeffs");
      const auto mode = parse_group_mode(opt.group);
      const auto ctx = make_symmetry_context(space.divisor(cls), mode, group_generators(space.dimension()));
      const auto w = alpha_witness(ctx);
      json j{{"class", space.describe(cls)},
             {"group", std::string(to_string(mode))},
             {"group_order", ctx.group.size()},
             {"barycenter", io::to_json(ctx.barycenter)},
             {"centered_coeffs", io::to_json(ctx.centered_coeffs)},
             {"alpha", io::to_json(w.value)},
             {"witness", {{"ray", w.ray + 1}, {"point", io::to_json(w.point)}}}};
      if (opt.oracle_depth > 0) {
        j["oracle_depth"] = opt.oracle_depth;
        j["oracle"] = io::to_json(alpha_oracle(ctx, opt.oracle_depth));
      }
      emit(j);
    } else if (intersect->parsed()) {
      const Backend b = parse_input(opt.input);
      const auto& space = *b.space;
      const auto cls = coeffs_or(b, opt.coeffs, Rational(-1) * space.canonical(), "--coeffs");
      const Rational deg = space.degree(cls);
      json j{{"class", space.describe(cls)},
             {"degree", io::to_json(deg)},
             {"anticanonical_degree", io::to_json(space.anticanonical_degree(cls))}};
      if (!deg.is_zero()) {
        const Rational mu = space.anticanonical_degree(cls) / deg;
        j["mu"] = io::to_json(mu);
        if (space.dimension() == 2) j["rbar"] = io::to_json(Rational(2) * mu);
      }
      if (!opt.with.empty()) {
        if (space.dimension() != 2) throw UnsupportedError("--with is available on surfaces only");
        const auto other = parse_coeffs(opt.with, space.coordinate_count(), "--with");
        j["with"] = space.describe(other);
        j["product"] = io::to_json(space.intersect({cls, other}));
      }
      emit(j);
    } else if (check->parsed()) {
      if (opt.input.empty()) throw ParseError("check needs a backend (positional, --builtin, --fan, --slice)", "input");
      const Backend b = parse_input(opt.input);
      const auto& space = *b.space;
      const RatVector fallback = b.slice ? SliceClassSpace::polarization() : Rational(-1) * space.canonical();
      const auto cls = coeffs_or(b, opt.coeffs, fallback, "--coeffs");
      const auto mode = parse_group_mode(opt.group);
      const auto gens = b.fan ? group_generators(space.dimension()) : std::vector<IntMatrix>{};
      Rational eps;
      try {
        eps = Rational::parse(opt.epsilon);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), "--epsilon");
      }
      if (opt.mode == "theorem1") {
        const auto source = eps.is_zero() ? AlphaSource{SuppliedAlpha{Rational(1)}}
                                          : alpha_source_for(b, cls, opt.alpha, mode, gens);
        out << render(check_theorem1(KClassSetup{b.space, cls, eps, source}), format, opt.approx);
      } else if (opt.mode == "negative-c1") {
        out << render(check_negative_c1(space, cls), format, opt.approx);
      } else if (opt.mode == "fano") {
        const RatVector anti = Rational(-1) * space.canonical();
        out << render(check_fano(space, alpha_source_for(b, anti, opt.alpha, mode, gens)), format, opt.approx);
      } else {
        if (opt.with.empty()) throw ParseError("--mode jflow needs --with <W>", "--with");
        const auto w = parse_coeffs(opt.with, space.coordinate_count(), "--with");
        const auto jc = jflow_check(space, cls, w);
        emit(json{{"mode", "jflow"},
                  {"d", space.describe(cls)},
                  {"w", space.describe(w)},
                  {"c", io::to_json(jc.c)},
                  {"test_class", space.describe(jc.test_class)},
                  {"test_coeffs", io::to_json(jc.test_class)},
                  {"min_value", io::to_json(jc.positivity.min_value)},
                  {"binding", jc.positivity.binding},
                  {"holds", jc.holds}});
      }
    } else if (sweep->parsed()) {
      auto config = io::read_json_file(opt.config);
      SweepConfig c;
      try {
        c = io::sweep_config_from_json(config);
      } catch (const ParseError& e) {
        throw ParseError(e.message(), opt.config + ":" + e.location());
      }
      if (opt.parallel) c.parallel = true;
      const std::string env = env_or_empty("KPROPER_PARALLEL");
      if (!env.empty()) c.parallel = env != "0";
      out << render(sweep_lambda(c), format, opt.approx);
    } else if (curves->parsed()) {
      const auto& list = exceptional_curves(opt.r);
      const auto census = exceptional_census(opt.r);
      json items = json::array();
      for (const auto& cv : list) items.push_back({{"class", cv.str()}, {"coords", io::to_json(cv.coords())}});
      emit(json{{"r", opt.r}, {"count", list.size()}, {"census_by_degree", census}, {"curves", items}});
    }
  } catch (const FanError& e) {
    json issues = json::array();
    for (const auto& i : e.issues()) issues.push_back({{"index", i.index}, {"message", i.message}});
    err << json{{"error", {{"type", "fan"}, {"message", e.what()}, {"issues", issues}}}}.dump(2) << "\n";
    return 1;
  } catch (const ParseError& e) {
    err << json{{"error", {{"type", "parse"}, {"message", e.message()}, {"location", e.location()}}}}.dump(2) << "\n";
    return 1;
  } catch (const UnsupportedError& e) {
    err << json{{"error", {{"type", "unsupported"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  } catch (const Error& e) {
    err << json{{"error", {{"type", "domain"}, {"message", e.what()}}}}.dump(2) << "\n";
    return 1;
  }
  return 0;
}

}  // namespace kproper::cli
