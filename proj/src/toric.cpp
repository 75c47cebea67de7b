#include "kproper/toric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace kproper {

namespace {

std::string join_issues(const std::vector<FanIssue>& issues) {
  std::string msg = "invalid fan:";
  for (const auto& i : issues) msg += " " + i.message + ";";
  return msg;
}

RatMatrix cone_matrix(const Fan& fan, const std::vector<std::size_t>& cone) {
  std::vector<RatVector> cols;
  for (auto i : cone) cols.push_back(to_rational(fan.ray(i)));
  return RatMatrix::from_columns(cols);
}

// Coordinates of v in the basis given by the cone's rays.
std::optional<RatVector> cone_coordinates(const Fan& fan, const std::vector<std::size_t>& cone,
                                          std::span<const std::int64_t> v) {
  return solve_exact(cone_matrix(fan, cone), to_rational(v));
}

int sign_of_det(const std::vector<RatVector>& cols) {
  return determinant(RatMatrix::from_columns(cols)).sign();
}

}  // namespace

FanError::FanError(std::vector<FanIssue> issues)
    : DomainError(join_issues(issues)), issues_(std::move(issues)) {}

Fan::Fan(std::size_t dim, std::vector<IntVector> rays, std::vector<std::vector<std::size_t>> max_cones)
    : dim_(dim), rays_(std::move(rays)), cones_(std::move(max_cones)) {
  std::vector<FanIssue> issues;
  using K = FanIssue::Kind;
  if (dim_ == 0) issues.push_back({K::wrong_length, 0, "dimension must be positive"});
  if (rays_.empty()) issues.push_back({K::wrong_length, 0, "fan has no rays"});
  std::map<IntVector, std::size_t> seen;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    const auto& r = rays_[i];
    const std::string tag = "ray " + std::to_string(i);
    if (r.size() != dim_) {
      issues.push_back({K::wrong_length, i, tag + " has wrong length"});
      continue;
    }
    if (std::all_of(r.begin(), r.end(), [](auto x) { return x == 0; })) {
      issues.push_back({K::zero_ray, i, tag + " is zero"});
      continue;
    }
    if (primitive(r) != r) issues.push_back({K::non_primitive_ray, i, tag + " is not primitive"});
    if (auto [it, fresh] = seen.emplace(r, i); !fresh)
      issues.push_back({K::duplicate_ray, i, tag + " duplicates ray " + std::to_string(it->second)});
  }
  for (std::size_t c = 0; c < cones_.size(); ++c) {
    auto& cone = cones_[c];
    const std::string tag = "cone " + std::to_string(c);
    std::set<std::size_t> uniq(cone.begin(), cone.end());
    if (cone.size() != dim_ || uniq.size() != cone.size()) {
      issues.push_back({K::bad_cone, c, tag + " must list " + std::to_string(dim_) + " distinct rays"});
      continue;
    }
    if (*uniq.rbegin() >= rays_.size()) {
      issues.push_back({K::bad_cone, c, tag + " references a missing ray"});
      continue;
    }
  }
  if (!issues.empty()) throw FanError(std::move(issues));
  for (std::size_t c = 0; c < cones_.size(); ++c)
    if (determinant(cone_matrix(*this, cones_[c])).is_zero())
      issues.push_back({K::bad_cone, c, "cone " + std::to_string(c) + " is not simplicial"});
  if (!issues.empty()) throw FanError(std::move(issues));
}

Fan Fan::transformed(const IntMatrix& g) const {
  if (g.rows() != dim_ || g.cols() != dim_ || !is_unimodular(g))
    throw DomainError("fan transformation must be unimodular of the fan's dimension");
  std::vector<IntVector> rays;
  for (const auto& r : rays_) rays.push_back(matvec(g, r));
  return Fan(dim_, std::move(rays), cones_);
}

FanValidation validate_fan(const Fan& fan) {
  FanValidation out;
  const std::size_t n = fan.dim();
  out.smooth = std::all_of(fan.max_cones().begin(), fan.max_cones().end(), [&](const auto& cone) {
    return determinant(cone_matrix(fan, cone)).abs() == Rational(1);
  });
  if (fan.max_cones().empty()) return out;

  if (n == 1) {
    std::set<std::int64_t> dirs;
    for (const auto& cone : fan.max_cones()) dirs.insert(fan.ray(cone[0])[0]);
    out.complete = fan.max_cones().size() == 2 && dirs.size() == 2;
    return out;
  }

  // Each codimension-one face lies in exactly two maximal cones, on opposite sides.
  std::map<std::vector<std::size_t>, std::vector<std::size_t>> faces;  // face -> opposite rays
  for (const auto& cone : fan.max_cones()) {
    for (std::size_t drop = 0; drop < n; ++drop) {
      std::vector<std::size_t> face;
      for (std::size_t k = 0; k < n; ++k)
        if (k != drop) face.push_back(cone[k]);
      std::sort(face.begin(), face.end());
      faces[face].push_back(cone[drop]);
    }
  }
  for (const auto& [face, opposite] : faces) {
    if (opposite.size() != 2) return out;
    std::vector<RatVector> cols;
    for (auto i : face) cols.push_back(to_rational(fan.ray(i)));
    cols.push_back(to_rational(fan.ray(opposite[0])));
    const int s0 = sign_of_det(cols);
    cols.back() = to_rational(fan.ray(opposite[1]));
    if (s0 * sign_of_det(cols) >= 0) return out;
  }

  // A consistently glued cone complex covers N_R with constant multiplicity;
  // count cones containing an interior point of the first cone.
  IntVector probe(n, 0);
  for (auto i : fan.max_cones()[0])
    for (std::size_t j = 0; j < n; ++j) probe[j] += fan.ray(i)[j];
  std::size_t hits = 0;
  for (const auto& cone : fan.max_cones()) {
    const auto coords = cone_coordinates(fan, cone, probe);
    if (coords && std::all_of(coords->begin(), coords->end(), [](const Rational& x) { return x.sign() >= 0; }))
      ++hits;
  }
  out.complete = hits == 1;
  return out;
}

std::vector<IntMatrix> fan_automorphisms(const Fan& fan) {
  const std::size_t n = fan.dim();
  const auto& anchor = fan.max_cones().front();
  const auto basis_inv = inverse(cone_matrix(fan, anchor));
  if (!basis_inv) throw DomainError("anchor cone is degenerate");

  std::map<IntVector, std::size_t> index;
  for (std::size_t i = 0; i < fan.ray_count(); ++i) index.emplace(fan.ray(i), i);
  std::set<std::vector<std::size_t>> cones;
  for (auto cone : fan.max_cones()) {
    std::sort(cone.begin(), cone.end());
    cones.insert(cone);
  }

  std::set<IntMatrix> found;
  std::vector<std::size_t> target(n);
  auto consider = [&]() {
    std::vector<RatVector> cols;
    for (auto t : target) cols.push_back(to_rational(fan.ray(t)));
    const RatMatrix g = RatMatrix::from_columns(cols) * *basis_inv;
    if (!std::all_of(g.data().begin(), g.data().end(), [](const Rational& x) { return x.is_integer(); }))
      return;
    const IntMatrix gi = to_integer(g);
    if (!is_unimodular(gi)) return;
    std::vector<std::size_t> perm(fan.ray_count());
    for (std::size_t i = 0; i < fan.ray_count(); ++i) {
      const auto it = index.find(matvec(gi, fan.ray(i)));
      if (it == index.end()) return;
      perm[i] = it->second;
    }
    for (const auto& cone : cones) {
      std::vector<std::size_t> image;
      for (auto i : cone) image.push_back(perm[i]);
      std::sort(image.begin(), image.end());
      if (!cones.contains(image)) return;
    }
    found.insert(gi);
  };
  auto recurse = [&](auto&& self, std::size_t k) -> void {
    if (k == n) {
      consider();
      return;
    }
    for (std::size_t r = 0; r < fan.ray_count(); ++r) {
      if (std::find(target.begin(), target.begin() + k, r) != target.begin() + k) continue;
      target[k] = r;
      self(self, k + 1);
    }
  };
  recurse(recurse, 0);
  return {found.begin(), found.end()};
}

std::shared_ptr<const Fan> builtin_fan(std::string_view name) {
  if (name == "p2")
    return std::make_shared<const Fan>(2, std::vector<IntVector>{{1, 0}, {0, 1}, {-1, -1}},
                                       std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}, {2, 0}});
  if (name == "dp6")
    return std::make_shared<const Fan>(
        2, std::vector<IntVector>{{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}},
        std::vector<std::vector<std::size_t>>{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  throw ParseError("unknown builtin fan \"" + std::string(name) + "\" (expected p2 or dp6)");
}

ToricDivisor::ToricDivisor(std::shared_ptr<const Fan> fan, RatVector coeffs)
    : fan_(std::move(fan)), coeffs_(std::move(coeffs)) {
  if (!fan_) throw DomainError("divisor without a fan");
  if (coeffs_.size() != fan_->ray_count())
    throw DomainError("divisor has " + std::to_string(coeffs_.size()) + " coefficients but the fan has " +
                      std::to_string(fan_->ray_count()) + " rays");
}

ToricDivisor ToricDivisor::anticanonical(std::shared_ptr<const Fan> fan) {
  const auto n = fan->ray_count();
  return ToricDivisor(std::move(fan), RatVector(n, Rational(1)));
}

ToricDivisor ToricDivisor::canonical(std::shared_ptr<const Fan> fan) {
  const auto n = fan->ray_count();
  return ToricDivisor(std::move(fan), RatVector(n, Rational(-1)));
}

ToricDivisor operator+(const ToricDivisor& a, const ToricDivisor& b) {
  return ToricDivisor(a.fan_, a.coeffs_ + b.coeffs_);
}

ToricDivisor operator-(const ToricDivisor& a, const ToricDivisor& b) {
  return ToricDivisor(a.fan_, a.coeffs_ - b.coeffs_);
}

ToricDivisor operator*(const Rational& s, const ToricDivisor& d) { return ToricDivisor(d.fan_, s * d.coeffs_); }

Rational support_value(const ToricDivisor& d, std::span<const std::int64_t> v) {
  const Fan& fan = d.fan();
  if (v.size() != fan.dim()) throw DomainError("support_value: vector has wrong dimension");
  for (const auto& cone : fan.max_cones()) {
    const auto coords = cone_coordinates(fan, cone, v);
    if (!coords) continue;
    if (std::any_of(coords->begin(), coords->end(), [](const Rational& x) { return x.sign() < 0; })) continue;
    Rational value(0);
    for (std::size_t k = 0; k < cone.size(); ++k) value -= (*coords)[k] * d.coeff(cone[k]);
    return value;
  }
  throw DomainError("vector lies outside the support of the fan");
}

std::vector<RatVector> cone_functionals(const ToricDivisor& d) {
  const Fan& fan = d.fan();
  std::vector<RatVector> out;
  for (const auto& cone : fan.max_cones()) {
    RatVector rhs;
    for (auto i : cone) rhs.push_back(-d.coeff(i));
    out.push_back(*solve_exact(cone_matrix(fan, cone).transpose(), rhs));
  }
  return out;
}

std::vector<ConcavityInequality> concavity_inequalities(const Fan& fan) {
  std::vector<ConcavityInequality> out;
  for (std::size_t c = 0; c < fan.max_cones().size(); ++c) {
    const auto& cone = fan.max_cones()[c];
    for (std::size_t j = 0; j < fan.ray_count(); ++j) {
      if (std::find(cone.begin(), cone.end(), j) != cone.end()) continue;
      // <m_sigma, u_j> = -sum_k w_k a_{sigma_k} where u_j = sum_k w_k u_{sigma_k}.
      const auto w = *cone_coordinates(fan, cone, fan.ray(j));
      RatVector weights(fan.ray_count(), Rational(0));
      weights[j] = Rational(1);
      for (std::size_t k = 0; k < cone.size(); ++k) weights[cone[k]] -= w[k];
      out.push_back({c, j, std::move(weights)});
    }
  }
  return out;
}

bool is_ample(const ToricDivisor& d) {
  for (const auto& ineq : concavity_inequalities(d.fan()))
    if (dot(ineq.weights, d.coeffs()).sign() <= 0) return false;
  return true;
}

bool is_nef(const ToricDivisor& d) {
  for (const auto& ineq : concavity_inequalities(d.fan()))
    if (dot(ineq.weights, d.coeffs()).sign() < 0) return false;
  return true;
}

Polytope moment_polytope(const ToricDivisor& d) {
  std::vector<Halfspace> hrep;
  for (std::size_t i = 0; i < d.fan().ray_count(); ++i) hrep.push_back({d.fan().ray(i), -d.coeff(i)});
  return Polytope(d.fan().dim(), std::move(hrep));
}

std::vector<SurfaceRay> surface_rays(const Fan& fan) {
  if (fan.dim() != 2) throw UnsupportedError("surface formula only");
  const auto v = validate_fan(fan);
  if (!v.smooth || !v.complete) throw DomainError("surface intersection numbers need a smooth complete fan");
  std::vector<std::vector<std::size_t>> nbrs(fan.ray_count());
  for (const auto& cone : fan.max_cones()) {
    nbrs[cone[0]].push_back(cone[1]);
    nbrs[cone[1]].push_back(cone[0]);
  }
  std::vector<SurfaceRay> out;
  for (std::size_t i = 0; i < fan.ray_count(); ++i) {
    const auto& u = fan.ray(i);
    const auto& a = fan.ray(nbrs[i][0]);
    const auto& b = fan.ray(nbrs[i][1]);
    const std::int64_t sx = a[0] + b[0], sy = a[1] + b[1];
    // sum is parallel to u_i; u_i primitive so the ratio is an integer
    if (sx * u[1] - sy * u[0] != 0) throw DomainError("neighbour sum is not parallel to the ray");
    const std::int64_t c = u[0] != 0 ? sx / u[0] : sy / u[1];
    out.push_back({nbrs[i][0], nbrs[i][1], c});
  }
  return out;
}

Rational intersection_number(const ToricDivisor& d, const ToricDivisor& e) {
  const auto rays = surface_rays(d.fan());
  Rational total(0);
  for (std::size_t i = 0; i < rays.size(); ++i) {
    if (e.coeff(i).is_zero()) continue;
    const auto& r = rays[i];
    const Rational d_dot_di = d.coeff(r.prev) + d.coeff(r.next) - Rational(r.c) * d.coeff(i);
    total += e.coeff(i) * d_dot_di;
  }
  return total;
}

Rational mixed_volume_intersection(const std::vector<ToricDivisor>& divisors) {
  if (divisors.empty()) throw DomainError("mixed volume of no divisors");
  const std::size_t n = divisors.front().fan().dim();
  if (n > 3) throw UnsupportedError("mixed volumes are implemented for dimension <= 3");
  if (divisors.size() != n) throw DomainError("mixed volume needs exactly dim divisors");
  for (const auto& d : divisors)
    if (!is_nef(d)) throw DomainError("mixed_volume_intersection requires nef divisors");
  Rational total(0);
  for (unsigned mask = 1; mask < (1u << n); ++mask) {
    RatVector sum(divisors.front().coeffs().size(), Rational(0));
    int count = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1u << i)) {
        sum = sum + divisors[i].coeffs();
        ++count;
      }
    const Rational vol = volume(moment_polytope(ToricDivisor(divisors.front().fan_ptr(), sum)));
    total += ((n - count) % 2 == 0) ? vol : -vol;
  }
  return total;
}

Rational top_intersection(const std::vector<ToricDivisor>& divisors) {
  if (divisors.empty()) throw DomainError("intersection of no divisors");
  const std::size_t n = divisors.front().fan().dim();
  if (divisors.size() != n) throw DomainError("top intersection needs exactly dim divisors");
  if (n == 2) return intersection_number(divisors[0], divisors[1]);
  if (n != 3) throw UnsupportedError("intersection numbers are implemented for dimension 2 and 3");

  const auto ample = std::find_if(divisors.begin(), divisors.end(), [](const auto& d) { return is_ample(d); });
  if (ample == divisors.end()) throw UnsupportedError("dimension-3 intersection needs an ample factor");
  const ToricDivisor& h = *ample;

  // X_i = N_i - t_i H with N_i = X_i + t_i H nef.
  std::vector<ToricDivisor> shifted;
  std::vector<Rational> shifts;
  for (const auto& x : divisors) {
    Rational t(0);
    while (!is_nef(x + t * h)) t = t.is_zero() ? Rational(1) : t * Rational(2);
    shifted.push_back(x + t * h);
    shifts.push_back(t);
  }
  Rational total(0);
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    std::vector<ToricDivisor> factors;
    Rational coeff(1);
    for (std::size_t i = 0; i < n; ++i) {
      if (mask & (1u << i)) {
        factors.push_back(shifted[i]);
      } else {
        factors.push_back(h);
        coeff *= -shifts[i];
      }
    }
    if (!coeff.is_zero()) total += coeff * mixed_volume_intersection(factors);
  }
  return total;
}

SlopeQuantities slope_quantities(const ToricDivisor& d) {
  if (!is_ample(d)) throw DomainError("slope quantities need an ample divisor");
  const std::size_t n = d.fan().dim();
  const ToricDivisor anti = ToricDivisor::anticanonical(d.fan_ptr());
  std::vector<ToricDivisor> powers(n, d);
  SlopeQuantities out;
  out.degree = top_intersection(powers);
  powers.front() = anti;
  out.anticanonical_degree = top_intersection(powers);
  if (out.degree.is_zero()) throw DomainError("D^n = 0");
  out.mu = out.anticanonical_degree / out.degree;
  if (n == 2) out.rbar = Rational(2) * out.mu;
  return out;
}

}  // namespace kproper
