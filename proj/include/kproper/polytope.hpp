#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "kproper/linalg.hpp"

namespace kproper {

/// { m : <m, normal> >= offset }, normal primitive.
struct Halfspace {
  IntVector normal;
  Rational offset;

  friend bool operator==(const Halfspace&, const Halfspace&) = default;
};

/// { m : <m, normal> == rhs }.
struct Hyperplane {
  RatVector normal;
  Rational rhs;

  friend bool operator==(const Hyperplane&, const Hyperplane&) = default;
};

/// Exact convex polytope in M_R given by inequalities and optional equalities.
///
/// The vertex set is computed once at construction (dimension <= 3) and shared
/// between copies, so a Polytope can be read concurrently without locking.
/// Empty and lower-dimensional polytopes are ordinary values.
class Polytope {
 public:
  /// Normals are rescaled to primitive vectors (offsets divided accordingly).
  /// Throws DomainError for zero normals or mismatched lengths.
  Polytope(std::size_t dim, std::vector<Halfspace> hrep, std::vector<Hyperplane> equalities = {});

  std::size_t dim() const { return dim_; }
  const std::vector<Halfspace>& hrep() const { return hrep_; }
  const std::vector<Hyperplane>& equalities() const { return equalities_; }

  bool contains(std::span<const Rational> point) const;
  /// Lexicographically sorted vertices. Throws UnsupportedError for dim > 3.
  const std::vector<RatVector>& vertices() const;
  bool bounded() const;
  bool empty() const { return vertices().empty(); }
  /// Affine dimension of the (bounded) polytope; -1 when empty.
  int affine_dimension() const;

 private:
  std::size_t dim_;
  std::vector<Halfspace> hrep_;
  std::vector<Hyperplane> equalities_;
  std::shared_ptr<const std::vector<RatVector>> vertices_;
  bool bounded_ = false;
};

/// Same vertex sets (the natural notion of equality for bounded polytopes).
bool same_vertices(const Polytope& a, const Polytope& b);

const std::vector<RatVector>& vertices(const Polytope& p);

/// Euclidean volume; 0 for empty or lower-dimensional polytopes.
Rational volume(const Polytope& p);

/// Sum of lattice lengths of the edges of a full-dimensional polygon, i.e.
/// the facet measure with dsigma ^ dl = dVol for the primitive facet functional.
/// Throws UnsupportedError unless dim == 2, DomainError if not full-dimensional.
Rational boundary_measure(const Polytope& p);

/// Centroid. Throws DomainError when the volume is zero.
RatVector barycenter(const Polytope& p);

Polytope translate(const Polytope& p, std::span<const Rational> shift);

/// Scales by a positive rational.
Polytope dilate(const Polytope& p, const Rational& factor);

/// P intersected with the common fixed space of the transposes of `group`.
/// Throws DomainError if some g^T does not map the vertex set onto itself.
Polytope fixed_subpolytope(const Polytope& p, const std::vector<IntMatrix>& group);

/// Points of P in (1/k)M, sorted lexicographically.
/// Throws DomainError for unbounded P or k < 1.
std::vector<RatVector> lattice_points(const Polytope& p, int k);

/// Lattice length t of the segment from a to b: b - a = t * d with d primitive.
Rational lattice_length(std::span<const Rational> a, std::span<const Rational> b);

/// Polygon vertices in counterclockwise order (dim 2, full-dimensional).
std::vector<RatVector> ccw_polygon(const Polytope& p);

}  // namespace kproper
