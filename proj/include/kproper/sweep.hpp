#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kproper/properness.hpp"

namespace kproper {

/// Classes L_lambda = base + lambda * direction on one backend, scaled by a
/// positive factor a, with the alpha invariant of the unscaled class known
/// as an exact function of lambda.
struct ParametricFamily {
  std::string name;
  std::shared_ptr<const ClassSpace> space;
  RatVector base;
  RatVector direction;
  std::function<AlphaEvaluation(const Rational& lambda, const RatVector& member)> alpha;

  RatVector member(const Rational& lambda) const { return base + lambda * direction; }
};

/// dp6: (D1 + D3 + D5) + lambda (D2 + D4 + D6) with alpha from the toric formula.
ParametricFamily dp6_family(GroupMode mode = GroupMode::full);
/// dp1: 3H - sum_{i<=7} E_i - lambda E_8 with Dervan's bound min{1, 1/(2 - lambda)}.
ParametricFamily dp1_family();
/// Any toric family; alpha from the toric formula with the given group.
ParametricFamily toric_family(std::string name, std::shared_ptr<const Fan> fan, RatVector base,
                              RatVector direction, TheoremAlpha alpha = {});
/// "dp6" or "dp1". Throws ParseError otherwise.
ParametricFamily family_by_name(std::string_view name);

/// min{1, 1/(2 - lambda)}; requires lambda < 2.
Rational dervan_alpha_bound(const Rational& lambda);

/// Tightest bounds on the scale a contributed by one condition.
struct ConditionBounds {
  std::string condition;
  std::optional<Rational> lower;   // a > lower
  std::optional<Rational> upper;   // a < upper
  std::string lower_binding;
  std::string upper_binding;
  bool never = false;              // some constraint fails for every a

  friend bool operator==(const ConditionBounds&, const ConditionBounds&) = default;
};

/// Open interval of scales a for which a * L_lambda passes all three
/// conditions at the given epsilon.
struct FeasibleInterval {
  bool empty = true;
  Rational lo;
  Rational hi;
  Rational alpha;                  // of the unscaled class
  std::string alpha_provenance;
  Rational mu;                     // of the unscaled class
  std::vector<ConditionBounds> conditions;
};

/// Every condition is affine in a for fixed lambda:
///   (1) a < (n+1) alpha_1 / (n epsilon)
///   (2) epsilon a L + K ample: one half-line per positivity functional
///   (3) (epsilon a - n mu_1) L - (n-1) K ample: likewise
/// Nonempty results are certified by re-running the checker at the midpoint.
/// Throws DomainError if L_lambda is not ample or epsilon <= 0.
FeasibleInterval feasible_a_interval(const ParametricFamily& family, const Rational& lambda,
                                     const Rational& epsilon);

/// L_lambda ample and feasible_a_interval nonempty; never throws for
/// non-ample members.
bool lambda_feasible(const ParametricFamily& family, const Rational& lambda, const Rational& epsilon);

struct SweepConfig {
  std::string family = "dp6";
  Rational epsilon{1};
  Rational lambda_min;
  Rational lambda_max;
  Rational step;
  Rational refine_tol;
  std::vector<Rational> conjectured_endpoints;
  bool parallel = false;

  friend bool operator==(const SweepConfig&, const SweepConfig&) = default;
};

/// [lo, hi] with lo and hi of opposite feasibility; the true endpoint lies inside.
struct Bracket {
  Rational lo;
  Rational hi;

  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
  friend bool operator==(const Bracket&, const Bracket&) = default;
};

struct FeasibleRange {
  std::optional<Bracket> lo_bracket;   // absent when feasible at the first grid point
  std::optional<Bracket> hi_bracket;   // absent when feasible at the last grid point
  Rational witness_lambda;
  Rational witness_a;
  Rational witness_a_lo;
  Rational witness_a_hi;
  std::size_t grid_points = 0;
  std::vector<ConditionBounds> diagnostics;   // at the witness lambda

  friend bool operator==(const FeasibleRange&, const FeasibleRange&) = default;
};

struct EndpointCheck {
  Rational endpoint;
  bool feasible_at = false;
  bool feasible_below = false;
  bool feasible_above = false;
  bool verified = false;   // infeasible at the point, feasibility flips across it

  friend bool operator==(const EndpointCheck&, const EndpointCheck&) = default;
};

struct FeasibilityReport {
  std::string family;
  Rational epsilon;
  Rational lambda_min;
  Rational lambda_max;
  Rational step;
  Rational refine_tol;
  std::size_t grid_size = 0;
  std::size_t probes = 0;
  std::vector<FeasibleRange> intervals;
  std::vector<EndpointCheck> endpoint_checks;

  friend bool operator==(const FeasibilityReport&, const FeasibilityReport&) = default;
};

/// Exact feasibility on the grid lambda_min + k step (k >= 0, <= lambda_max),
/// then bisection of every feasibility change down to refine_tol. Maximal
/// feasible runs become intervals with a witness at the grid point of smallest
/// denominator (ties: nearest the run's centre). Throws DomainError for an
/// empty grid or non-positive step/tolerance.
FeasibilityReport sweep_lambda(const ParametricFamily& family, const SweepConfig& config);
FeasibilityReport sweep_lambda(const SweepConfig& config);

}  // namespace kproper
