#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "kproper/linalg.hpp"

namespace kproper {

/// Class d H - sum m_i E_i on the blowup of P^2 at r general points,
/// stored as coords = (d, m_1, ..., m_r).
class PicardClass {
 public:
  /// Throws DomainError unless 1 <= r <= 8 and coords has r + 1 entries.
  PicardClass(int r, RatVector coords);

  static PicardClass hyperplane(int r);
  static PicardClass exceptional(int r, int i);  // E_i, 1-based
  static PicardClass canonical(int r);           // -3H + sum E_i

  int r() const { return r_; }
  const RatVector& coords() const { return coords_; }
  const Rational& degree() const { return coords_[0]; }
  const Rational& multiplicity(int i) const { return coords_[static_cast<std::size_t>(i)]; }

  /// e.g. "6H-2E1-2E2-2E3-2E4-2E5-2E6-2E7-3E8".
  std::string str() const;

  friend PicardClass operator+(const PicardClass& a, const PicardClass& b);
  friend PicardClass operator-(const PicardClass& a, const PicardClass& b);
  friend PicardClass operator*(const Rational& s, const PicardClass& c);
  friend bool operator==(const PicardClass&, const PicardClass&) = default;

 private:
  int r_;
  RatVector coords_;
};

/// d d' - sum m_i m_i'. Throws DomainError when the surfaces differ.
Rational pairing(const PicardClass& a, const PicardClass& b);

/// All integral classes with C^2 = -1 and C.K = -1, sorted by degree then
/// lexicographically. Throws DomainError unless 1 <= r <= 8. Computed once per r.
const std::vector<PicardClass>& exceptional_curves(int r);

/// Number of exceptional classes of each degree 0..6.
std::array<std::size_t, 7> exceptional_census(int r);

/// Curves used for the Kleiman test: the exceptional classes plus the pencils
/// H - E_i (these generate the cone of curves for every 1 <= r <= 8; for r = 1
/// the exceptional class alone does not).
const std::vector<PicardClass>& test_curves(int r);

struct PicardPositivity {
  bool ample = false;
  bool nef = false;
  Rational min_pairing;
  std::string binding_curve;   // curve attaining the minimum pairing
  Rational self_intersection;
  /// Set when every curve pairing passes but D^2 fails.
  bool nakai_binding = false;
};

PicardPositivity picard_positivity(const PicardClass& d);
bool is_ample_picard(const PicardClass& d);
bool is_nef_picard(const PicardClass& d);

/// The degree-one del Pezzo family member 3H - sum_{i<=7} E_i - lambda E_8.
PicardClass dp1_class(const Rational& lambda);

/// (a, lambda) when c = a * dp1_class(lambda) with a > 0.
std::optional<std::pair<Rational, Rational>> dp1_parameters(const PicardClass& c);

}  // namespace kproper
