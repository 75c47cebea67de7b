#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "kproper/errors.hpp"
#include "kproper/linalg.hpp"
#include "kproper/polytope.hpp"

namespace kproper {

struct FanIssue {
  enum class Kind { wrong_length, zero_ray, non_primitive_ray, duplicate_ray, bad_cone };
  Kind kind;
  std::size_t index;  // ray or cone index
  std::string message;
};

/// Raised when fan data cannot describe a simplicial fan at all.
class FanError : public DomainError {
 public:
  explicit FanError(std::vector<FanIssue> issues);
  const std::vector<FanIssue>& issues() const noexcept { return issues_; }

 private:
  std::vector<FanIssue> issues_;
};

/// Simplicial fan in N_R: primitive rays plus maximal cones given as index
/// sets of size dim. Smoothness and completeness are checked separately by
/// validate_fan().
class Fan {
 public:
  /// Throws FanError for malformed rays or cones.
  Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> max_cones);

  std::size_t dim() const { return dim_; }
  std::size_t ray_count() const { return rays_.size(); }
  const IntVector& ray(std::size_t i) const { return rays_[i]; }
  const std::vector<IntVector>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& max_cones() const { return cones_; }

  /// Image of the fan under g in GL(n, Z); ray and cone indices are kept.
  Fan transformed(const IntMatrix& g) const;

 private:
  std::size_t dim_;
  std::vector<IntVector> rays_;
  std::vector<std::vector<std::size_t>> cones_;
};

struct FanValidation {
  bool smooth = false;
  bool complete = false;
};

FanValidation validate_fan(const Fan& fan);

/// The lattice automorphisms of the fan: all g in GL(n, Z) permuting the rays
/// and the maximal cones. Sorted, identity included.
std::vector<IntMatrix> fan_automorphisms(const Fan& fan);

/// "p2" or "dp6". Throws ParseError for unknown names.
std::shared_ptr<const Fan> builtin_fan(std::string_view name);

/// Torus-invariant R-divisor sum a_i D_i.
class ToricDivisor {
 public:
  /// Throws DomainError if coeffs does not have one entry per ray.
  ToricDivisor(std::shared_ptr<const Fan> fan, RatVector coeffs);

  static ToricDivisor anticanonical(std::shared_ptr<const Fan> fan);
  static ToricDivisor canonical(std::shared_ptr<const Fan> fan);

  const Fan& fan() const { return *fan_; }
  const std::shared_ptr<const Fan>& fan_ptr() const { return fan_; }
  const RatVector& coeffs() const { return coeffs_; }
  const Rational& coeff(std::size_t i) const { return coeffs_[i]; }

  friend ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b);
  friend ToricDivisor operator-(const ToricDivisor& a, const ToricDivisor& b);
  friend ToricDivisor operator*(const Rational& s, const ToricDivisor& d);

 private:
  std::shared_ptr<const Fan> fan_;
  RatVector coeffs_;
};

/// phi_D(v), linear on each maximal cone with phi_D(u_i) = -a_i.
Rational support_value(const ToricDivisor& d, std::span<const std::int64_t> v);

/// m_sigma for each maximal cone: <m_sigma, u_i> = -a_i on the cone's rays.
std::vector<RatVector> cone_functionals(const ToricDivisor& d);

/// One strict-concavity inequality: weights . a = <m_sigma, u_j> + a_j for a
/// ray j outside the cone sigma. Linear in the coefficients.
struct ConcavityInequality {
  std::size_t cone;
  std::size_t ray;
  RatVector weights;
};

std::vector<ConcavityInequality> concavity_inequalities(const Fan& fan);

bool is_ample(const ToricDivisor& d);
bool is_nef(const ToricDivisor& d);

/// {m : <m, u_i> >= -a_i}.
Polytope moment_polytope(const ToricDivisor& d);

/// Data of ray i on a smooth complete surface fan: its two neighbours and the
/// integer c with u_prev + u_next = c u_i (so D_i^2 = -c).
struct SurfaceRay {
  std::size_t prev;
  std::size_t next;
  std::int64_t c;
};

/// Throws UnsupportedError unless dim == 2, DomainError if not smooth complete.
std::vector<SurfaceRay> surface_rays(const Fan& fan);

/// D . D' on a smooth complete surface via D . D_i = a_prev + a_next - c_i a_i.
Rational intersection_number(const ToricDivisor& d, const ToricDivisor& e);

/// D_1 ... D_n for nef divisors via mixed volumes of moment polytopes,
/// normalised so D^n = n! Vol(P_D). n <= 3.
Rational mixed_volume_intersection(const std::vector<ToricDivisor>& divisors);

/// D_1 ... D_n for arbitrary divisors. Surfaces use the wall formula; in
/// dimension 3 some input must be ample and the others are shifted by it into
/// the nef cone before expanding multilinearly into mixed volumes.
Rational top_intersection(const std::vector<ToricDivisor>& divisors);

struct SlopeQuantities {
  Rational degree;                 // D^n
  Rational anticanonical_degree;   // -K . D^(n-1)
  Rational mu;                     // -K . D^(n-1) / D^n
  std::optional<Rational> rbar;    // 2 mu, surfaces only
};

/// Throws DomainError if D is not ample or D^n = 0.
SlopeQuantities slope_quantities(const ToricDivisor& d);

}  // namespace kproper
