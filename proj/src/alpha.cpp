#include "kproper/alpha.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>

namespace kproper {

namespace {

bool preserves(const IntMatrix& g, const std::set<RatVector>& verts) {
  const IntMatrix gt = g.transpose();
  return std::all_of(verts.begin(), verts.end(),
                     [&](const RatVector& v) { return verts.contains(matvec(gt, v)); });
}

}  // namespace

std::string_view to_string(GroupMode mode) {
  switch (mode) {
    case GroupMode::full: return "full";
    case GroupMode::torus: return "torus";
    case GroupMode::explicit_list: return "explicit";
  }
  return "?";
}

GroupMode parse_group_mode(std::string_view text) {
  if (text == "full") return GroupMode::full;
  if (text == "torus") return GroupMode::torus;
  if (text == "explicit") return GroupMode::explicit_list;
  throw ParseError("unknown group mode \"" + std::string(text) + "\" (expected full, torus or explicit)");
}

std::vector<IntMatrix> generate_group(const std::vector<IntMatrix>& generators, std::size_t dim) {
  constexpr std::size_t kLimit = 100000;
  std::set<IntMatrix> group{IntMatrix::identity(dim)};
  std::vector<IntMatrix> frontier{IntMatrix::identity(dim)};
  while (!frontier.empty()) {
    std::vector<IntMatrix> next;
    for (const auto& a : frontier)
      for (const auto& g : generators) {
        IntMatrix p = a * g;
        if (group.insert(p).second) next.push_back(std::move(p));
      }
    if (group.size() > kLimit) throw DomainError("generated group is too large (not finite?)");
    frontier = std::move(next);
  }
  return {group.begin(), group.end()};
}

std::vector<IntMatrix> class_stabilizer(const ToricDivisor& d) {
  if (!is_ample(d)) throw DomainError("class stabilizer requires an ample divisor");
  const Polytope p = moment_polytope(d);
  const Polytope centered = translate(p, Rational(-1) * barycenter(p));
  const std::set<RatVector> verts(centered.vertices().begin(), centered.vertices().end());
  std::vector<IntMatrix> out;
  for (const auto& g : fan_automorphisms(d.fan()))
    if (preserves(g, verts)) out.push_back(g);
  return out;
}

SymmetryContext make_symmetry_context(const ToricDivisor& d, GroupMode mode,
                                      const std::vector<IntMatrix>& generators) {
  if (!is_ample(d)) throw DomainError("alpha invariant requires an ample divisor");
  const Fan& fan = d.fan();
  const Polytope p = moment_polytope(d);
  RatVector beta = barycenter(p);
  Polytope centered = translate(p, Rational(-1) * beta);
  RatVector shifted;
  for (std::size_t i = 0; i < fan.ray_count(); ++i) shifted.push_back(d.coeff(i) + dot(beta, fan.ray(i)));

  std::vector<IntMatrix> group;
  switch (mode) {
    case GroupMode::torus:
      group = {IntMatrix::identity(fan.dim())};
      break;
    case GroupMode::full:
      group = class_stabilizer(d);
      break;
    case GroupMode::explicit_list: {
      const std::set<RatVector> verts(centered.vertices().begin(), centered.vertices().end());
      for (const auto& g : generators) {
        if (g.rows() != fan.dim() || g.cols() != fan.dim() || !is_unimodular(g))
          throw DomainError("explicit group element must be a unimodular matrix of the fan's dimension");
        if (!preserves(g, verts)) throw DomainError("group does not preserve polytope");
      }
      group = generate_group(generators, fan.dim());
      break;
    }
  }
  return SymmetryContext{d, mode, std::move(group), std::move(beta), std::move(centered), std::move(shifted)};
}

AlphaWitness alpha_witness(const SymmetryContext& ctx) {
  const Fan& fan = ctx.divisor.fan();
  const Polytope fixed = fixed_subpolytope(ctx.centered_polytope, ctx.group);
  const auto& verts = fixed.vertices();
  if (verts.empty()) throw DomainError("fixed subpolytope is empty");
  // 1/x is decreasing, so the minimum of 1/(<y,u_i> + a_i') is 1 over the maximum.
  std::optional<Rational> best;
  AlphaWitness w{Rational(0), 0, {}};
  for (std::size_t i = 0; i < fan.ray_count(); ++i)
    for (const auto& y : verts) {
      const Rational level = dot(y, fan.ray(i)) + ctx.centered_coeffs[i];
      if (!best || level > *best) {
        best = level;
        w.ray = i;
        w.point = y;
      }
    }
  if (best->sign() <= 0) throw DomainError("degenerate polytope in alpha computation");
  w.value = best->inverse();
  return w;
}

Rational alpha_invariant(const SymmetryContext& ctx) { return alpha_witness(ctx).value; }

Rational alpha_oracle(const SymmetryContext& ctx, int k_max) {
  if (k_max < 1) throw DomainError("oracle depth must be at least 1");
  const Fan& fan = ctx.divisor.fan();
  BigInt den(1);
  for (const auto& a : ctx.divisor.coeffs()) den = boost::multiprecision::lcm(den, a.denominator());
  const std::int64_t d = den.convert_to<std::int64_t>();
  const Polytope p = moment_polytope(ctx.divisor);

  std::vector<RatMatrix> transposes;
  for (const auto& g : ctx.group) transposes.push_back(to_rational(g.transpose()));
  std::vector<RatVector> rays;
  for (const auto& u : fan.rays()) rays.push_back(to_rational(u));

  std::optional<Rational> best;
  for (int k = 1; k <= k_max; ++k) {
    const Rational q(d * k);
    const RatVector shift = q * ctx.barycenter;
    // lattice_points returns m / q for m in qP_D; y = m - q beta.
    std::set<RatVector> remaining;
    for (const auto& pt : lattice_points(p, static_cast<int>(d * k))) remaining.insert(q * pt - shift);
    while (!remaining.empty()) {
      const RatVector seed = *remaining.begin();
      std::set<RatVector> orbit;
      for (const auto& gt : transposes) orbit.insert(matvec(gt, seed));
      for (const auto& y : orbit)
        if (remaining.erase(y) == 0 && y != seed) throw std::logic_error("stabilizer does not preserve sections");
      const Rational size(static_cast<std::int64_t>(orbit.size()));
      for (std::size_t i = 0; i < rays.size(); ++i) {
        Rational denom = size * q * ctx.centered_coeffs[i];
        for (const auto& y : orbit) denom += dot(y, rays[i]);
        if (denom.sign() <= 0) continue;  // section does not vanish on D_i
        const Rational lct = size * q / denom;
        if (!best || lct < *best) best = lct;
      }
    }
  }
  if (!best) throw DomainError("oracle found no sections");
  return *best;
}

}  // namespace kproper
