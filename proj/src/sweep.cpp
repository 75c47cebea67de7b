#include "kproper/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>

#include "kproper/errors.hpp"

namespace kproper {

namespace {

// Half-lines a * p + q > 0 for each functional of the class a * slope + offset.
void add_ampleness_bounds(const ClassSpace& space, const RatVector& slope, const RatVector& offset,
                          ConditionBounds& out) {
  for (const auto& f : space.functionals()) {
    const Rational p = dot(f.weights, slope);
    const Rational q = dot(f.weights, offset);
    if (p.is_zero()) {
      if (q.sign() <= 0) {
        out.never = true;
        out.lower_binding = f.name;
      }
      continue;
    }
    const Rational bound = -q / p;
    if (p.sign() > 0) {
      if (!out.lower || bound > *out.lower) {
        out.lower = bound;
        out.lower_binding = f.name;
      }
    } else if (!out.upper || bound < *out.upper) {
      out.upper = bound;
      out.upper_binding = f.name;
    }
  }
}

}  // namespace

Rational dervan_alpha_bound(const Rational& lambda) {
  if (lambda >= Rational(2)) throw DomainError("Dervan's bound needs lambda < 2");
  return min(Rational(1), (Rational(2) - lambda).inverse());
}

ParametricFamily toric_family(std::string name, std::shared_ptr<const Fan> fan, RatVector base,
                              RatVector direction, TheoremAlpha alpha) {
  auto space = std::make_shared<const ToricClassSpace>(std::move(fan));
  ParametricFamily f;
  f.name = std::move(name);
  f.base = std::move(base);
  f.direction = std::move(direction);
  f.alpha = [space, alpha](const Rational&, const RatVector& member) {
    return evaluate_alpha(*space, member, alpha);
  };
  f.space = std::move(space);
  return f;
}

ParametricFamily dp6_family(GroupMode mode) {
  const RatVector odd{1, 0, 1, 0, 1, 0};
  const RatVector even{0, 1, 0, 1, 0, 1};
  return toric_family("dp6", builtin_fan("dp6"), odd, even, TheoremAlpha{mode, {}});
}

ParametricFamily dp1_family() {
  ParametricFamily f;
  f.name = "dp1";
  f.space = std::make_shared<const PicardClassSpace>(8);
  f.base = dp1_class(Rational(0)).coords();
  f.direction = RatVector(9, Rational(0));
  f.direction[8] = Rational(1);
  f.alpha = [](const Rational& lambda, const RatVector&) {
    return AlphaEvaluation{dervan_alpha_bound(lambda), "supplied bound (Dervan)", false};
  };
  return f;
}

ParametricFamily family_by_name(std::string_view name) {
  if (name == "dp6") return dp6_family();
  if (name == "dp1") return dp1_family();
  throw ParseError("unknown family \"" + std::string(name) + "\" (expected dp6 or dp1)");
}

FeasibleInterval feasible_a_interval(const ParametricFamily& family, const Rational& lambda,
                                     const Rational& epsilon) {
  const ClassSpace& space = *family.space;
  if (epsilon.sign() <= 0) throw DomainError("epsilon must be positive for a scale interval");
  const RatVector l = family.member(lambda);
  if (!space.is_ample(l))
    throw DomainError("lambda = " + lambda.str() + " is outside the ample range of family " + family.name);

  const auto n = static_cast<std::int64_t>(space.dimension());
  const RatVector k = space.canonical();
  const AlphaEvaluation alpha = family.alpha(lambda, l);
  const Rational mu = space.anticanonical_degree(l) / space.degree(l);

  FeasibleInterval out;
  out.alpha = alpha.value;
  out.alpha_provenance = alpha.provenance;
  out.mu = mu;

  ConditionBounds positive{"a > 0", Rational(0), std::nullopt, "scale", "", false};
  ConditionBounds c1{"condition (1)", std::nullopt, Rational(n + 1) * alpha.value / (Rational(n) * epsilon),
                     "", "alpha", false};
  ConditionBounds c2{"condition (2)", std::nullopt, std::nullopt, "", "", false};
  add_ampleness_bounds(space, epsilon * l, k, c2);
  ConditionBounds c3{"condition (3)", std::nullopt, std::nullopt, "", "", false};
  add_ampleness_bounds(space, epsilon * l, Rational(-n) * mu * l - Rational(n - 1) * k, c3);
  out.conditions = {positive, c1, c2, c3};

  // Intersection of open half-lines: one open interval.
  bool never = false;
  std::optional<Rational> lo, hi;
  for (const auto& c : out.conditions) {
    never = never || c.never;
    if (c.lower && (!lo || *c.lower > *lo)) lo = c.lower;
    if (c.upper && (!hi || *c.upper < *hi)) hi = c.upper;
  }
  if (!lo || !hi) throw std::logic_error("scale interval is not bounded on both sides");
  out.lo = *lo;
  out.hi = *hi;
  out.empty = never || out.lo >= out.hi;

  if (!out.empty) {
    const Rational a = (out.lo + out.hi) / Rational(2);
    KClassSetup setup{family.space, a * l, epsilon, SuppliedAlpha{alpha.value / a, alpha.provenance}};
    if (!check_theorem1(setup).criterion_satisfied)
      throw std::logic_error("scale interval midpoint failed the direct check at lambda = " + lambda.str());
  }
  return out;
}

bool lambda_feasible(const ParametricFamily& family, const Rational& lambda, const Rational& epsilon) {
  if (!family.space->is_ample(family.member(lambda))) return false;
  return !feasible_a_interval(family, lambda, epsilon).empty;
}

FeasibilityReport sweep_lambda(const ParametricFamily& family, const SweepConfig& config) {
  if (config.step.sign() <= 0) throw DomainError("step must be positive");
  if (config.refine_tol.sign() <= 0) throw DomainError("refine_tol must be positive");
  if (config.lambda_min > config.lambda_max) throw DomainError("empty lambda grid");

  FeasibilityReport report;
  report.family = family.name;
  report.epsilon = config.epsilon;
  report.lambda_min = config.lambda_min;
  report.lambda_max = config.lambda_max;
  report.step = config.step;
  report.refine_tol = config.refine_tol;

  std::vector<Rational> grid;
  for (Rational x = config.lambda_min; x <= config.lambda_max; x += config.step) grid.push_back(x);
  if (grid.empty()) throw DomainError("empty lambda grid");
  report.grid_size = grid.size();

  std::atomic<std::size_t> probes{0};
  auto probe = [&](const Rational& lambda) {
    ++probes;
    return lambda_feasible(family, lambda, config.epsilon);
  };

  std::vector<char> feasible(grid.size(), 0);
  if (config.parallel) {
    const std::size_t workers = std::max<std::size_t>(1, std::thread::hardware_concurrency());
    std::vector<std::future<void>> jobs;
    for (std::size_t w = 0; w < workers; ++w)
      jobs.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < grid.size(); i += workers) feasible[i] = probe(grid[i]) ? 1 : 0;
      }));
    for (auto& j : jobs) j.get();
  } else {
    for (std::size_t i = 0; i < grid.size(); ++i) feasible[i] = probe(grid[i]) ? 1 : 0;
  }

  // Shrinks [bad, good] (in either order) until its width is at most refine_tol.
  auto refine = [&](Rational bad, Rational good) {
    while ((good - bad).abs() > config.refine_tol) {
      const Rational mid = (good + bad) / Rational(2);
      (probe(mid) ? good : bad) = mid;
    }
    return bad < good ? Bracket{bad, good} : Bracket{good, bad};
  };

  std::size_t i = 0;
  while (i < grid.size()) {
    if (!feasible[i]) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j + 1 < grid.size() && feasible[j + 1]) ++j;

    FeasibleRange range;
    range.grid_points = j - i + 1;
    if (i > 0) range.lo_bracket = refine(grid[i - 1], grid[i]);
    if (j + 1 < grid.size()) range.hi_bracket = refine(grid[j + 1], grid[j]);

    const Rational centre = (grid[i] + grid[j]) / Rational(2);
    std::size_t best = i;
    for (std::size_t t = i; t <= j; ++t) {
      const auto& x = grid[t];
      const auto& b = grid[best];
      if (x.denominator() < b.denominator() ||
          (x.denominator() == b.denominator() && (x - centre).abs() < (b - centre).abs()))
        best = t;
    }
    const auto interval = feasible_a_interval(family, grid[best], config.epsilon);
    range.witness_lambda = grid[best];
    range.witness_a = (interval.lo + interval.hi) / Rational(2);
    range.witness_a_lo = interval.lo;
    range.witness_a_hi = interval.hi;
    range.diagnostics = interval.conditions;
    report.intervals.push_back(std::move(range));
    i = j + 1;
  }

  for (const auto& e : config.conjectured_endpoints) {
    EndpointCheck c;
    c.endpoint = e;
    c.feasible_at = probe(e);
    c.feasible_below = probe(e - config.refine_tol);
    c.feasible_above = probe(e + config.refine_tol);
    c.verified = !c.feasible_at && c.feasible_below != c.feasible_above;
    report.endpoint_checks.push_back(c);
  }
  report.probes = probes.load();
  return report;
}

FeasibilityReport sweep_lambda(const SweepConfig& config) {
  return sweep_lambda(family_by_name(config.family), config);
}

}  // namespace kproper
