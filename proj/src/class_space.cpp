#include "kproper/class_space.hpp"

#include "kproper/errors.hpp"

namespace kproper {

std::string ClassSpace::describe(const RatVector& cls) const {
  std::string out = "(";
  for (std::size_t i = 0; i < cls.size(); ++i) out += (i ? ", " : "") + cls[i].str();
  return out + ")";
}

PositivityVerdict ClassSpace::positivity(const RatVector& cls) const {
  if (cls.size() != coordinate_count()) throw DomainError("class has the wrong number of coordinates");
  PositivityVerdict v;
  bool first = true;
  for (const auto& f : functionals()) {
    const Rational value = dot(f.weights, cls);
    if (first || value < v.min_value) {
      v.min_value = value;
      v.binding = f.name;
      first = false;
    }
  }
  if (first) throw DomainError("backend has no positivity functionals");
  v.extra_failure = extra_ampleness_failure(cls);
  v.ample = v.min_value.sign() > 0 && !v.extra_failure;
  v.nef = v.min_value.sign() >= 0;
  return v;
}

Rational ClassSpace::degree(const RatVector& cls) const {
  return intersect(std::vector<RatVector>(dimension(), cls));
}

Rational ClassSpace::anticanonical_degree(const RatVector& cls) const {
  std::vector<RatVector> factors(dimension(), cls);
  factors.front() = Rational(-1) * canonical();
  return intersect(factors);
}

ToricClassSpace::ToricClassSpace(std::shared_ptr<const Fan> fan) : fan_(std::move(fan)) {
  // Named by rays, 1-based like describe(): "cone(D1,D2) vs D3".
  for (auto& ineq : concavity_inequalities(*fan_)) {
    std::string name = "cone(";
    for (std::size_t k = 0; k < fan_->max_cones()[ineq.cone].size(); ++k)
      name += (k ? ",D" : "D") + std::to_string(fan_->max_cones()[ineq.cone][k] + 1);
    functionals_.push_back({name + ") vs D" + std::to_string(ineq.ray + 1), std::move(ineq.weights)});
  }
}

RatVector ToricClassSpace::canonical() const { return RatVector(fan_->ray_count(), Rational(-1)); }

Rational ToricClassSpace::intersect(const std::vector<RatVector>& classes) const {
  std::vector<ToricDivisor> divisors;
  for (const auto& c : classes) divisors.emplace_back(fan_, c);
  return top_intersection(divisors);
}

std::string ToricClassSpace::describe(const RatVector& cls) const {
  std::string out;
  for (std::size_t i = 0; i < cls.size(); ++i) {
    if (cls[i].is_zero()) continue;
    const bool neg = cls[i].sign() < 0;
    if (!out.empty() || neg) out += neg ? " - " : " + ";
    if (cls[i].abs() != Rational(1)) out += cls[i].abs().str() + "*";
    out += "D" + std::to_string(i + 1);
  }
  return out.empty() ? "0" : out;
}

PicardClassSpace::PicardClassSpace(int r) : r_(r) {
  for (const auto& c : test_curves(r)) {
    // D . C = d d_C - sum m_i m_{C,i}
    RatVector w = c.coords();
    for (std::size_t i = 1; i < w.size(); ++i) w[i] = -w[i];
    functionals_.push_back({c.str(), std::move(w)});
  }
}

Rational PicardClassSpace::intersect(const std::vector<RatVector>& classes) const {
  if (classes.size() != 2) throw DomainError("surface intersection needs two classes");
  return pairing(PicardClass(r_, classes[0]), PicardClass(r_, classes[1]));
}

std::optional<std::string> PicardClassSpace::extra_ampleness_failure(const RatVector& cls) const {
  if (pairing(PicardClass(r_, cls), PicardClass(r_, cls)).sign() <= 0) return "self-intersection D^2 <= 0";
  return std::nullopt;
}

std::string PicardClassSpace::describe(const RatVector& cls) const { return PicardClass(r_, cls).str(); }

SliceClassSpace::SliceClassSpace(AbstractSlice slice) : slice_(std::move(slice)) {
  if (slice_.n < 1) throw DomainError("slice dimension must be positive");
  if (slice_.l_top.sign() <= 0) throw DomainError("slice requires L^n > 0");
  for (const auto& c : slice_.test_curves) functionals_.push_back({c.name, {c.l_pairing, c.k_pairing}});
}

Rational SliceClassSpace::intersect(const std::vector<RatVector>& classes) const {
  const std::size_t n = slice_.n;
  if (classes.size() != n) throw DomainError("slice intersection needs n classes");
  // poly[b] = coefficient of L^(n-b) K^b in the product.
  std::vector<Rational> poly{Rational(1)};
  for (const auto& c : classes) {
    std::vector<Rational> next(poly.size() + 1, Rational(0));
    for (std::size_t b = 0; b < poly.size(); ++b) {
      next[b] += poly[b] * c[0];
      next[b + 1] += poly[b] * c[1];
    }
    poly = std::move(next);
  }
  Rational total(0);
  for (std::size_t b = 0; b <= n; ++b) {
    if (poly[b].is_zero()) continue;
    if (b == 0) total += poly[b] * slice_.l_top;
    else if (b == 1) total += poly[b] * slice_.k_l_top;
    else if (b == n) total += poly[b] * slice_.k_top;
    else throw UnsupportedError("slice lacks the intersection number L^" + std::to_string(n - b) + " K^" + std::to_string(b));
  }
  return total;
}

std::optional<std::string> SliceClassSpace::extra_ampleness_failure(const RatVector& cls) const {
  try {
    if (degree(cls).sign() <= 0) return "top self-intersection <= 0";
  } catch (const UnsupportedError&) {
    // unknown mixed monomials: only the curve tests apply
  }
  return std::nullopt;
}

std::string SliceClassSpace::describe(const RatVector& cls) const {
  return cls[0].str() + "*L + " + cls[1].str() + "*K";
}

}  // namespace kproper
