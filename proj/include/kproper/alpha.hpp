#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "kproper/polytope.hpp"
#include "kproper/toric.hpp"

namespace kproper {

/// Which compact group the alpha invariant is taken for. The real torus is
/// always included; `full` adds the class stabilizer, `explicit_list` adds the
/// group generated by user-supplied fan automorphisms.
enum class GroupMode { full, torus, explicit_list };

std::string_view to_string(GroupMode mode);
/// "full", "torus" or "explicit". Throws ParseError otherwise.
GroupMode parse_group_mode(std::string_view text);

/// An ample toric divisor normalised so that its moment polytope has
/// barycenter 0, together with the finite group acting on it.
struct SymmetryContext {
  ToricDivisor divisor;
  GroupMode mode;
  std::vector<IntMatrix> group;   // acts on N; on M through transposes
  RatVector barycenter;           // of the original moment polytope
  Polytope centered_polytope;
  RatVector centered_coeffs;      // a_i + <barycenter, u_i>
};

/// Throws DomainError for non-ample divisors, or when an explicit generator
/// does not preserve the centered polytope.
SymmetryContext make_symmetry_context(const ToricDivisor& d, GroupMode mode,
                                      const std::vector<IntMatrix>& generators = {});

/// Fan automorphisms g whose transpose maps the barycenter-centered moment
/// polytope onto itself, i.e. the g with phi_D o g - phi_D linear.
std::vector<IntMatrix> class_stabilizer(const ToricDivisor& d);

/// Closure of a set of matrices under multiplication (finite groups only).
std::vector<IntMatrix> generate_group(const std::vector<IntMatrix>& generators, std::size_t dim);

struct AlphaWitness {
  Rational value;
  std::size_t ray;    // facet attaining the minimum
  RatVector point;    // vertex of the fixed subpolytope attaining it
};

/// min over rays i and fixed points y of 1 / (<y, u_i> + a_i'). The inner
/// minimum is attained at a vertex of the fixed subpolytope.
AlphaWitness alpha_witness(const SymmetryContext& ctx);
Rational alpha_invariant(const SymmetryContext& ctx);

inline constexpr int kDefaultOracleDepth = 12;

/// Brute-force upper bound from invariant sections. Levels are q = k * d,
/// k = 1..k_max, with d clearing the denominators of the divisor's own
/// coefficients so that qD is integral. A point m of qP_D in M is a section of
/// qD; in centered coordinates y = m - q*beta the group acts linearly and
/// preserves these points (stabilizer elements permute the integral vertices).
/// Each orbit gives the log canonical threshold of its product section,
///   min_i qN / (sum_{y in orbit} <y, u_i> + N q a_i'),
/// and the smallest value found is returned.
Rational alpha_oracle(const SymmetryContext& ctx, int k_max = kDefaultOracleDepth);

}  // namespace kproper
