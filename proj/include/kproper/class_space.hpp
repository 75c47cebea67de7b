#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "kproper/linalg.hpp"
#include "kproper/picard.hpp"
#include "kproper/toric.hpp"

namespace kproper {

/// Linear functional on class coordinates; a class is ample when every
/// functional of its backend is strictly positive on it.
struct PositivityFunctional {
  std::string name;
  RatVector weights;
};

struct PositivityVerdict {
  bool ample = false;
  bool nef = false;
  Rational min_value;          // smallest functional value
  std::string binding;         // functional attaining it
  std::optional<std::string> extra_failure;  // e.g. a failed D^2 > 0 check
};

/// Divisor classes of one backend as rational coordinate vectors, with a
/// polyhedral ampleness test and top intersection products.
class ClassSpace {
 public:
  virtual ~ClassSpace() = default;

  virtual std::string kind() const = 0;
  /// Complex dimension n.
  virtual std::size_t dimension() const = 0;
  virtual std::size_t coordinate_count() const = 0;
  virtual RatVector canonical() const = 0;
  virtual const std::vector<PositivityFunctional>& functionals() const = 0;
  /// Product of exactly dimension() classes.
  virtual Rational intersect(const std::vector<RatVector>& classes) const = 0;
  /// Non-linear ampleness requirement beyond the functionals (nullopt: passes).
  virtual std::optional<std::string> extra_ampleness_failure(const RatVector&) const { return std::nullopt; }
  virtual std::string describe(const RatVector& cls) const;

  PositivityVerdict positivity(const RatVector& cls) const;
  bool is_ample(const RatVector& cls) const { return positivity(cls).ample; }
  bool is_nef(const RatVector& cls) const { return positivity(cls).nef; }
  /// cls^n.
  Rational degree(const RatVector& cls) const;
  /// -K . cls^(n-1).
  Rational anticanonical_degree(const RatVector& cls) const;
};

/// Torus-invariant divisors sum a_i D_i; coordinates are the a_i.
class ToricClassSpace : public ClassSpace {
 public:
  explicit ToricClassSpace(std::shared_ptr<const Fan> fan);

  std::string kind() const override { return "toric"; }
  std::size_t dimension() const override { return fan_->dim(); }
  std::size_t coordinate_count() const override { return fan_->ray_count(); }
  RatVector canonical() const override;
  const std::vector<PositivityFunctional>& functionals() const override { return functionals_; }
  Rational intersect(const std::vector<RatVector>& classes) const override;
  std::string describe(const RatVector& cls) const override;

  const std::shared_ptr<const Fan>& fan() const { return fan_; }
  ToricDivisor divisor(const RatVector& cls) const { return ToricDivisor(fan_, cls); }

 private:
  std::shared_ptr<const Fan> fan_;
  std::vector<PositivityFunctional> functionals_;
};

/// Blowup of P^2 at r general points; coordinates (d, m_1..m_r).
class PicardClassSpace : public ClassSpace {
 public:
  explicit PicardClassSpace(int r);

  std::string kind() const override { return "picard"; }
  std::size_t dimension() const override { return 2; }
  std::size_t coordinate_count() const override { return static_cast<std::size_t>(r_) + 1; }
  RatVector canonical() const override { return PicardClass::canonical(r_).coords(); }
  const std::vector<PositivityFunctional>& functionals() const override { return functionals_; }
  Rational intersect(const std::vector<RatVector>& classes) const override;
  std::optional<std::string> extra_ampleness_failure(const RatVector& cls) const override;
  std::string describe(const RatVector& cls) const override;

  int r() const { return r_; }

 private:
  int r_;
  std::vector<PositivityFunctional> functionals_;
};

/// Only intersection data on span{L, K} is known.
struct AbstractSlice {
  struct TestCurve {
    std::string name;
    Rational l_pairing;
    Rational k_pairing;
  };
  std::size_t n = 2;
  Rational l_top;       // L^n
  Rational k_l_top;     // K . L^(n-1)
  Rational k_top;       // K^n
  std::vector<TestCurve> test_curves;
};

/// Classes x L + y K with coordinates (x, y); positivity is tested against the
/// slice's curves.
class SliceClassSpace : public ClassSpace {
 public:
  /// Throws DomainError if L^n <= 0 or n < 1.
  explicit SliceClassSpace(AbstractSlice slice);

  std::string kind() const override { return "slice"; }
  std::size_t dimension() const override { return slice_.n; }
  std::size_t coordinate_count() const override { return 2; }
  RatVector canonical() const override { return {Rational(0), Rational(1)}; }
  const std::vector<PositivityFunctional>& functionals() const override { return functionals_; }
  /// Throws UnsupportedError when a monomial L^a K^b outside the known data is needed.
  Rational intersect(const std::vector<RatVector>& classes) const override;
  std::optional<std::string> extra_ampleness_failure(const RatVector& cls) const override;
  std::string describe(const RatVector& cls) const override;

  const AbstractSlice& slice() const { return slice_; }
  static RatVector polarization() { return {Rational(1), Rational(0)}; }

 private:
  AbstractSlice slice_;
  std::vector<PositivityFunctional> functionals_;
};

}  // namespace kproper
