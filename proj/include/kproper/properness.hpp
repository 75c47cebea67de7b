#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "kproper/alpha.hpp"
#include "kproper/class_space.hpp"

namespace kproper {

/// Alpha from the toric vertex formula for the chosen group.
struct TheoremAlpha {
  GroupMode mode = GroupMode::full;
  std::vector<IntMatrix> generators;  // explicit mode only
};

/// Alpha (or a lower bound for it) supplied from outside.
struct SuppliedAlpha {
  Rational value;
  std::string provenance = "supplied value";
  bool group_invariant = false;
};

using AlphaSource = std::variant<TheoremAlpha, SuppliedAlpha>;

struct AlphaEvaluation {
  Rational value;
  std::string provenance;
  bool group_invariant = false;
};

/// Throws DomainError when the source cannot be evaluated on this backend.
AlphaEvaluation evaluate_alpha(const ClassSpace& space, const RatVector& cls, const AlphaSource& source);

enum class Scope { all_potentials, invariant_potentials };

std::string_view to_string(Scope scope);

struct NamedValue {
  std::string name;
  Rational value;

  friend bool operator==(const NamedValue&, const NamedValue&) = default;
};

struct ConditionReport {
  std::string name;        // "condition (1)", ...
  std::string statement;
  bool holds = false;
  std::vector<NamedValue> values;
  std::string binding;     // constraint closest to failing (or failing)

  friend bool operator==(const ConditionReport&, const ConditionReport&) = default;
};

struct PropernessReport {
  std::string mode;        // theorem1 | negative-c1 | fano
  std::string backend;
  std::size_t dimension = 0;
  std::string polarization;
  std::optional<Rational> epsilon;
  std::optional<Rational> alpha;
  std::string alpha_provenance;
  std::optional<Rational> mu;
  std::vector<ConditionReport> conditions;
  bool criterion_satisfied = false;
  Scope scope = Scope::all_potentials;
  std::string verdict;

  friend bool operator==(const PropernessReport&, const PropernessReport&) = default;
};

struct KClassSetup {
  std::shared_ptr<const ClassSpace> space;
  RatVector polarization;
  Rational epsilon{1};
  AlphaSource alpha = TheoremAlpha{};
};

/// The three divisor-form conditions for some epsilon:
///   (1) epsilon < (n+1)/n alpha(L)
///   (2) epsilon L + K ample
///   (3) (epsilon - n mu) L - (n-1) K ample, mu = -K.L^(n-1) / L^n.
/// epsilon = 0 is routed to check_negative_c1. A failing condition is
/// reported, never thrown. Throws DomainError when L is not ample.
PropernessReport check_theorem1(const KClassSetup& setup);

/// (-n mu) L - (n-1) K nef on a backend with K ample. Throws DomainError if
/// K is not ample.
PropernessReport check_negative_c1(const ClassSpace& space, const RatVector& polarization);

/// alpha(-K) > n/(n+1) on a backend with -K ample.
PropernessReport check_fano(const ClassSpace& space, const AlphaSource& alpha);

struct JflowCheck {
  Rational c;             // (W.D) / D^2
  RatVector test_class;   // 2c D - W
  PositivityVerdict positivity;
  bool holds = false;
};

/// Surface J-flow class condition: 2cD - W ample with c = (W.D)/D^2.
/// Throws UnsupportedError unless n = 2, DomainError if D^2 <= 0 or D, W not ample.
JflowCheck jflow_check(const ClassSpace& space, const RatVector& d, const RatVector& w);
bool jflow_condition_surface(const ClassSpace& space, const RatVector& d, const RatVector& w);

}  // namespace kproper
