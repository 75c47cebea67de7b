#include <random>

#include "doctest.h"
#include "kproper/errors.hpp"
#include "kproper/toric.hpp"
#include "oracles.hpp"

using namespace kproper;

namespace {

std::shared_ptr<const Fan> dp6() { return builtin_fan("dp6"); }

ToricDivisor l_lambda(const Rational& lambda, const Rational& a = Rational(1)) {
  return ToricDivisor(dp6(), RatVector{a, a * lambda, a, a * lambda, a, a * lambda});
}

std::shared_ptr<const Fan> p3() {
  return std::make_shared<const Fan>(
      3, std::vector<IntVector>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}},
      std::vector<std::vector<std::size_t>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
}

std::shared_ptr<const Fan> p1_cubed() {
  std::vector<IntVector> rays{{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}, {0, 0, 1}, {0, 0, -1}};
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t x : {0, 1})
    for (std::size_t y : {2, 3})
      for (std::size_t z : {4, 5}) cones.push_back({x, y, z});
  return std::make_shared<const Fan>(3, rays, cones);
}

}  // namespace

TEST_CASE("fan validation") {
  for (const char* name : {"p2", "dp6"}) {
    const auto v = validate_fan(*builtin_fan(name));
    CHECK(v.smooth);
    CHECK(v.complete);
  }
  auto cones = dp6()->max_cones();
  cones.erase(cones.begin() + 2);
  const Fan holed(2, dp6()->rays(), cones);
  CHECK(validate_fan(holed).smooth);
  CHECK_FALSE(validate_fan(holed).complete);

  const Fan singular(2, {{1, 0}, {1, 2}, {-1, -1}}, {{0, 1}, {1, 2}, {2, 0}});
  CHECK_FALSE(validate_fan(singular).smooth);

  // Overlapping cones: every wall is shared twice but the plane is covered twice.
  const Fan doubled(2, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}},
                    {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 1}, {1, 2}, {2, 3}, {3, 0}});
  CHECK_FALSE(validate_fan(doubled).complete);

  CHECK(validate_fan(*p3()).complete);
  CHECK(validate_fan(*p1_cubed()).complete);
  CHECK(validate_fan(*p1_cubed()).smooth);

  // Rays need not be listed in angular order.
  const Fan shuffled(2, {{0, 1}, {1, 0}, {-1, -1}}, {{1, 0}, {0, 2}, {2, 1}});
  CHECK(validate_fan(shuffled).complete);
}

TEST_CASE("malformed fans raise structured errors") {
  auto issue_kinds = [](auto&& make) {
    try {
      make();
    } catch (const FanError& e) {
      std::vector<FanIssue::Kind> kinds;
      for (const auto& i : e.issues()) kinds.push_back(i.kind);
      return kinds;
    }
    return std::vector<FanIssue::Kind>{};
  };
  CHECK(issue_kinds([] { Fan(2, {{1, 0}, {1, 0}, {-1, -1}}, {{0, 2}}); }) ==
        std::vector{FanIssue::Kind::duplicate_ray});
  CHECK(issue_kinds([] { Fan(2, {{2, 0}, {0, 1}, {-1, -1}}, {{0, 1}}); }) ==
        std::vector{FanIssue::Kind::non_primitive_ray});
  CHECK(issue_kinds([] { Fan(2, {{0, 0}, {0, 1}}, {{0, 1}}); }) == std::vector{FanIssue::Kind::zero_ray});
  CHECK(issue_kinds([] { Fan(2, {{1, 0}, {0, 1}}, {{0, 5}}); }) == std::vector{FanIssue::Kind::bad_cone});
  CHECK(issue_kinds([] { Fan(2, {{1, 0, 0}, {0, 1}}, {{0, 1}}); }) == std::vector{FanIssue::Kind::wrong_length});
}

TEST_CASE("fan automorphisms") {
  const auto gp2 = fan_automorphisms(*builtin_fan("p2"));
  const auto gdp6 = fan_automorphisms(*dp6());
  CHECK(gp2.size() == 6);
  CHECK(gdp6.size() == 12);
  CHECK(gp2.size() == oracle::brute_force_automorphism_count(*builtin_fan("p2"), 2));
  CHECK(gdp6.size() == oracle::brute_force_automorphism_count(*dp6(), 2));
  CHECK(fan_automorphisms(*p1_cubed()).size() == 48);
  CHECK(fan_automorphisms(*p3()).size() == 24);

  for (const auto& group : {gp2, gdp6}) {
    const std::set<IntMatrix> s(group.begin(), group.end());
    CHECK(s.count(IntMatrix::identity(2)));
    for (const auto& g : group) {
      CHECK(is_unimodular(g));
      CHECK(s.count(to_integer(*inverse(to_rational(g)))));
      for (const auto& h : group) CHECK(s.count(g * h));
    }
  }
}

TEST_CASE("support function") {
  const auto anti = ToricDivisor::anticanonical(dp6());
  CHECK(support_value(anti, IntVector{1, 1}) == Rational(-1));
  CHECK(support_value(anti, IntVector{2, 1}) == Rational(-2));
  CHECK(support_value(l_lambda(Rational(3, 2)), IntVector{0, 0}) == Rational(0));

  std::mt19937 rng(17);
  std::uniform_int_distribution<int> e(-6, 6), k(1, 5);
  const ToricDivisor d(dp6(), RatVector{1, 1, Rational(3, 2), Rational(3, 2), Rational(3, 2), Rational(2, 3)});
  for (int i = 0; i < 100; ++i) {
    const IntVector v{e(rng), e(rng)};
    const int t = k(rng);
    CHECK(support_value(d, IntVector{t * v[0], t * v[1]}) == Rational(t) * support_value(d, v));
  }
}

TEST_CASE("dp6 ampleness") {
  CHECK(is_ample(l_lambda(Rational(1))));
  CHECK_FALSE(is_ample(l_lambda(Rational(1, 2))));
  CHECK(is_nef(l_lambda(Rational(1, 2))));
  const ToricDivisor zero(dp6(), RatVector(6, Rational(0)));
  CHECK(is_nef(zero));
  CHECK_FALSE(is_ample(zero));
  CHECK_FALSE(is_nef(ToricDivisor::canonical(dp6())));

  std::mt19937 rng(23);
  for (int i = 0; i < 300; ++i) {
    RatVector a;
    for (int j = 0; j < 6; ++j) a.push_back(oracle::random_rational(rng, -3, 6, 3));
    const ToricDivisor d(dp6(), a);
    if (is_ample(d)) CHECK(is_nef(d));
  }
}

TEST_CASE("moment polytopes") {
  const auto tri = moment_polytope(ToricDivisor::anticanonical(builtin_fan("p2")));
  CHECK(tri.vertices() == std::vector<RatVector>{RatVector{-1, -1}, RatVector{-1, 2}, RatVector{2, -1}});
  const auto point = moment_polytope(ToricDivisor(dp6(), RatVector(6, Rational(0))));
  CHECK(point.vertices() == std::vector<RatVector>{RatVector{0, 0}});
  const auto empty = moment_polytope(ToricDivisor::canonical(dp6()));
  CHECK(empty.empty());

  // Ample: one vertex per maximal cone, equal to m_sigma.
  std::mt19937 rng(29);
  int ample = 0;
  for (int i = 0; i < 300 && ample < 40; ++i) {
    RatVector a;
    for (int j = 0; j < 6; ++j) a.push_back(oracle::random_rational(rng, 0, 6, 3));
    const ToricDivisor d(dp6(), a);
    if (!is_ample(d)) continue;
    ++ample;
    auto ms = cone_functionals(d);
    std::sort(ms.begin(), ms.end());
    const auto p = moment_polytope(d);
    CHECK(p.vertices() == ms);
    CHECK(p.affine_dimension() == 2);
  }
}

TEST_CASE("surface intersection numbers") {
  const auto f = dp6();
  auto prime = [&](std::size_t i) {
    RatVector a(6, Rational(0));
    a[i] = 1;
    return ToricDivisor(f, a);
  };
  CHECK(intersection_number(prime(0), prime(1)) == Rational(1));
  CHECK(intersection_number(prime(0), prime(0)) == Rational(-1));
  CHECK(intersection_number(prime(0), prime(2)) == Rational(0));
  const auto anti = ToricDivisor::anticanonical(f);
  for (const Rational& l : {Rational(1, 2), Rational(3, 4), Rational(1), Rational(6, 5), Rational(7, 4)}) {
    CHECK(intersection_number(l_lambda(l), l_lambda(l)) == Rational(-3) + Rational(12) * l - Rational(3) * l * l);
    CHECK(intersection_number(anti, l_lambda(l)) == Rational(3) * (Rational(1) + l));
  }
  const auto p2 = ToricDivisor::anticanonical(builtin_fan("p2"));
  CHECK(intersection_number(p2, p2) == Rational(9));
  CHECK_THROWS_AS(intersection_number(ToricDivisor::anticanonical(p3()), ToricDivisor::anticanonical(p3())),
                  UnsupportedError);
}

TEST_CASE("mixed volumes") {
  const auto anti6 = ToricDivisor::anticanonical(dp6());
  const auto anti2 = ToricDivisor::anticanonical(builtin_fan("p2"));
  CHECK(mixed_volume_intersection({anti6, anti6}) == Rational(6));
  CHECK(mixed_volume_intersection({anti2, anti2}) == Rational(9));
  CHECK(mixed_volume_intersection({anti6, ToricDivisor(dp6(), RatVector(6, Rational(0)))}) == Rational(0));
  CHECK_THROWS_AS(mixed_volume_intersection({anti6, ToricDivisor::canonical(dp6())}), DomainError);

  // Wall formula and mixed volumes agree on nef pairs.
  std::mt19937 rng(31);
  int pairs = 0;
  for (int i = 0; i < 400 && pairs < 30; ++i) {
    RatVector a, b;
    for (int j = 0; j < 6; ++j) {
      a.push_back(oracle::random_rational(rng, 0, 4, 2));
      b.push_back(oracle::random_rational(rng, 0, 4, 2));
    }
    const ToricDivisor d(dp6(), a), e(dp6(), b);
    if (!is_nef(d) || !is_nef(e)) continue;
    ++pairs;
    CHECK(mixed_volume_intersection({d, e}) == intersection_number(d, e));
  }
  CHECK(pairs >= 10);

  const auto anti3 = ToricDivisor::anticanonical(p3());
  CHECK(mixed_volume_intersection({anti3, anti3, anti3}) == Rational(64));
  const auto anti111 = ToricDivisor::anticanonical(p1_cubed());
  CHECK(mixed_volume_intersection({anti111, anti111, anti111}) == Rational(48));
  // K^2 . (-K) on P^3 through the shifted expansion.
  const auto k3 = ToricDivisor::canonical(p3());
  CHECK(top_intersection({k3, k3, anti3}) == Rational(64));
  CHECK_THROWS_AS(top_intersection({k3, k3, k3}), UnsupportedError);
}

TEST_CASE("slope quantities") {
  const auto s = slope_quantities(l_lambda(Rational(1)));
  CHECK(s.mu == Rational(1));
  CHECK(*s.rbar == Rational(2));
  // Printed closed form 2(1+l)/(a l (4l - 1 - l^2)) at l = 1, a = 1.
  const Rational l(1), a(1);
  CHECK(*s.rbar == Rational(2) * (Rational(1) + l) / (a * l * (Rational(4) * l - Rational(1) - l * l)));

  for (const Rational& lam : {Rational(3, 4), Rational(1), Rational(7, 6), Rational(6, 5)})
    for (const Rational& sc : {Rational(1), Rational(5, 4), Rational(3)}) {
      const auto d = l_lambda(lam, sc);
      const auto q = slope_quantities(d);
      CHECK(*q.rbar == Rational(2) * (Rational(1) + lam) / (sc * (Rational(4) * lam - Rational(1) - lam * lam)));
      const auto p = moment_polytope(d);
      CHECK(*q.rbar == boundary_measure(p) / volume(p));
      CHECK(intersection_number(d, d) == Rational(2) * volume(p));
    }
  CHECK_THROWS_AS(slope_quantities(l_lambda(Rational(2))), DomainError);
}

TEST_CASE("equivariance under lattice changes of basis") {
  std::mt19937 rng(37);
  const auto f = dp6();
  const RatVector a{1, 1, Rational(3, 2), Rational(3, 2), Rational(3, 2), Rational(2, 3)};
  const ToricDivisor d(f, a);
  for (int i = 0; i < 20; ++i) {
    const auto g = oracle::random_unimodular(rng);
    const auto moved = std::make_shared<const Fan>(f->transformed(g));
    const ToricDivisor e(moved, a);
    CHECK(validate_fan(*moved).smooth);
    CHECK(validate_fan(*moved).complete);
    CHECK(is_ample(e) == is_ample(d));
    CHECK(volume(moment_polytope(e)) == volume(moment_polytope(d)));
    CHECK(intersection_number(e, e) == intersection_number(d, d));
    CHECK(slope_quantities(e).mu == slope_quantities(d).mu);
    CHECK(fan_automorphisms(*moved).size() == 12);
  }
}
