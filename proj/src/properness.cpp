#include "kproper/properness.hpp"

#include "kproper/errors.hpp"

namespace kproper {

namespace {

const char* const kProperAll = "K-energy proper on all potentials";
const char* const kProperInvariant = "K-energy proper on G-invariant potentials";
const char* const kNotSatisfied = "criterion not satisfied";

ConditionReport ampleness_condition(const ClassSpace& space, std::string name, std::string statement,
                                    const RatVector& cls, bool strict) {
  const auto pos = space.positivity(cls);
  ConditionReport c;
  c.name = std::move(name);
  c.statement = std::move(statement) + " [class " + space.describe(cls) + "]";
  c.holds = strict ? pos.ample : pos.nef;
  c.values.push_back({"min functional value", pos.min_value});
  c.binding = pos.extra_failure ? *pos.extra_failure : pos.binding;
  return c;
}

void finish(PropernessReport& r, bool invariant) {
  r.criterion_satisfied = true;
  for (const auto& c : r.conditions) r.criterion_satisfied = r.criterion_satisfied && c.holds;
  r.scope = invariant ? Scope::invariant_potentials : Scope::all_potentials;
  r.verdict = !r.criterion_satisfied ? kNotSatisfied : invariant ? kProperInvariant : kProperAll;
}

Rational slope(const ClassSpace& space, const RatVector& l) {
  const Rational deg = space.degree(l);
  if (deg.is_zero()) throw DomainError("L^n = 0");
  return space.anticanonical_degree(l) / deg;
}

}  // namespace

std::string_view to_string(Scope scope) {
  return scope == Scope::all_potentials ? "all potentials" : "G-invariant potentials";
}

AlphaEvaluation evaluate_alpha(const ClassSpace& space, const RatVector& cls, const AlphaSource& source) {
  if (const auto* supplied = std::get_if<SuppliedAlpha>(&source)) {
    if (supplied->value.sign() <= 0) throw DomainError("supplied alpha must be positive");
    return {supplied->value, supplied->provenance, supplied->group_invariant};
  }
  const auto& theorem = std::get<TheoremAlpha>(source);
  const auto* toric = dynamic_cast<const ToricClassSpace*>(&space);
  if (!toric) throw DomainError("alpha unavailable: the toric vertex formula needs a toric backend; supply a value");
  const auto ctx = make_symmetry_context(toric->divisor(cls), theorem.mode, theorem.generators);
  return {alpha_invariant(ctx),
          "toric vertex formula (group: " + std::string(to_string(theorem.mode)) + ", order " +
              std::to_string(ctx.group.size()) + ", with real torus)",
          true};
}

PropernessReport check_theorem1(const KClassSetup& setup) {
  const ClassSpace& space = *setup.space;
  const RatVector& l = setup.polarization;
  if (!space.is_ample(l)) throw DomainError("class not Kähler: polarization " + space.describe(l) + " is not ample");
  if (setup.epsilon.sign() < 0) throw DomainError("epsilon must be nonnegative");
  if (setup.epsilon.is_zero()) {
    auto r = check_negative_c1(space, l);
    r.mode = "negative-c1 (routed from epsilon = 0)";
    return r;
  }

  const auto n = static_cast<std::int64_t>(space.dimension());
  const Rational eps = setup.epsilon;
  const AlphaEvaluation alpha = evaluate_alpha(space, l, setup.alpha);
  const Rational mu = slope(space, l);
  const RatVector k = space.canonical();

  PropernessReport r;
  r.mode = "theorem1";
  r.backend = space.kind();
  r.dimension = space.dimension();
  r.polarization = space.describe(l);
  r.epsilon = eps;
  r.alpha = alpha.value;
  r.alpha_provenance = alpha.provenance;
  r.mu = mu;

  ConditionReport c1;
  c1.name = "condition (1)";
  c1.statement = "epsilon < (n+1)/n * alpha";
  const Rational bound = Rational(n + 1, 1) / Rational(n) * alpha.value;
  c1.holds = eps < bound;
  c1.values = {{"epsilon", eps}, {"alpha", alpha.value}, {"(n+1)/n * alpha", bound}};
  c1.binding = "alpha";
  r.conditions.push_back(std::move(c1));

  r.conditions.push_back(ampleness_condition(space, "condition (2)", "epsilon*L + K ample", eps * l + k, true));

  const RatVector f = (eps - Rational(n) * mu) * l - Rational(n - 1) * k;
  auto c3 = ampleness_condition(space, "condition (3)", "(epsilon - n*mu)*L - (n-1)*K ample", f, true);
  c3.values.push_back({"mu", mu});
  r.conditions.push_back(std::move(c3));

  finish(r, alpha.group_invariant);
  return r;
}

PropernessReport check_negative_c1(const ClassSpace& space, const RatVector& l) {
  const RatVector k = space.canonical();
  if (!space.is_ample(k)) throw DomainError("negative-c1 mode requires c1 < 0 (K ample)");
  if (!space.is_ample(l)) throw DomainError("class not Kähler: polarization " + space.describe(l) + " is not ample");
  const auto n = static_cast<std::int64_t>(space.dimension());
  const Rational mu = slope(space, l);

  PropernessReport r;
  r.mode = "negative-c1";
  r.backend = space.kind();
  r.dimension = space.dimension();
  r.polarization = space.describe(l);
  r.mu = mu;
  const RatVector cls = (Rational(-n) * mu) * l - Rational(n - 1) * k;
  auto c = ampleness_condition(space, "negative-c1 condition", "(-n*mu)*L - (n-1)*K nef", cls, false);
  c.values.push_back({"mu", mu});
  r.conditions.push_back(std::move(c));
  finish(r, false);
  return r;
}

PropernessReport check_fano(const ClassSpace& space, const AlphaSource& source) {
  const RatVector anti = Rational(-1) * space.canonical();
  if (!space.is_ample(anti)) throw DomainError("Fano mode requires -K ample");
  const auto n = static_cast<std::int64_t>(space.dimension());
  const AlphaEvaluation alpha = evaluate_alpha(space, anti, source);

  PropernessReport r;
  r.mode = "fano";
  r.backend = space.kind();
  r.dimension = space.dimension();
  r.polarization = space.describe(anti);
  r.alpha = alpha.value;
  r.alpha_provenance = alpha.provenance;
  r.mu = Rational(1);
  ConditionReport c;
  c.name = "fano condition";
  c.statement = "alpha(-K) > n/(n+1)";
  const Rational threshold(n, n + 1);
  c.holds = alpha.value > threshold;
  c.values = {{"alpha", alpha.value}, {"n/(n+1)", threshold}};
  c.binding = "alpha";
  r.conditions.push_back(std::move(c));
  finish(r, alpha.group_invariant);
  return r;
}

JflowCheck jflow_check(const ClassSpace& space, const RatVector& d, const RatVector& w) {
  if (space.dimension() != 2) throw UnsupportedError("the J-flow class condition is implemented for surfaces");
  const Rational dd = space.intersect({d, d});
  if (dd.sign() <= 0) throw DomainError("D^2 must be positive");
  if (!space.is_ample(d) || !space.is_ample(w)) throw DomainError("J-flow check needs ample D and W");
  JflowCheck out;
  out.c = space.intersect({w, d}) / dd;
  out.test_class = (Rational(2) * out.c) * d - w;
  out.positivity = space.positivity(out.test_class);
  out.holds = out.positivity.ample;
  return out;
}

bool jflow_condition_surface(const ClassSpace& space, const RatVector& d, const RatVector& w) {
  return jflow_check(space, d, w).holds;
}

}  // namespace kproper
