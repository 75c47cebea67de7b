#include <random>

#include "doctest.h"
#include "kproper/alpha.hpp"
#include "kproper/errors.hpp"
#include "oracles.hpp"

using namespace kproper;

namespace {

std::shared_ptr<const Fan> dp6() { return builtin_fan("dp6"); }

ToricDivisor l_lambda(const Rational& lambda, const Rational& a = Rational(1)) {
  return ToricDivisor(dp6(), RatVector{a, a * lambda, a, a * lambda, a, a * lambda});
}

Rational alpha_of(const ToricDivisor& d, GroupMode mode) { return alpha_invariant(make_symmetry_context(d, mode)); }

}  // namespace

TEST_CASE("class stabilizers") {
  CHECK(class_stabilizer(l_lambda(Rational(6, 5))).size() == 6);
  CHECK(class_stabilizer(ToricDivisor::anticanonical(dp6())).size() == 12);
  CHECK(class_stabilizer(ToricDivisor::anticanonical(builtin_fan("p2"))).size() == 6);
  // O(1) on P^2 has a non-integral barycenter but the full symmetry group.
  CHECK(class_stabilizer(ToricDivisor(builtin_fan("p2"), RatVector{1, 0, 0})).size() == 6);
  CHECK_THROWS_AS(class_stabilizer(l_lambda(Rational(2))), DomainError);

  const auto ctx = make_symmetry_context(l_lambda(Rational(6, 5)), GroupMode::full);
  for (const auto& g : ctx.group) {
    std::vector<RatVector> image;
    for (const auto& v : ctx.centered_polytope.vertices()) image.push_back(matvec(to_rational(g.transpose()), v));
    std::sort(image.begin(), image.end());
    CHECK(image == ctx.centered_polytope.vertices());
  }
  CHECK(barycenter(ctx.centered_polytope) == RatVector{0, 0});
}

TEST_CASE("alpha on the dp6 family matches min{1/a, 1/(a lambda)}") {
  for (const auto& [a, l] : {std::pair{Rational(1), Rational(1)}, std::pair{Rational(5, 4), Rational(6, 5)},
                             std::pair{Rational(3), Rational(3, 5)}, std::pair{Rational(2, 3), Rational(7, 4)},
                             std::pair{Rational(1), Rational(6, 5)}}) {
    CAPTURE(a);
    CAPTURE(l);
    CHECK(alpha_of(l_lambda(l, a), GroupMode::full) == min(Rational(1) / a, Rational(1) / (a * l)));
  }
  CHECK(alpha_of(ToricDivisor::anticanonical(dp6()), GroupMode::full) == Rational(1));
  const auto fixed = make_symmetry_context(l_lambda(Rational(6, 5)), GroupMode::full);
  CHECK(fixed_subpolytope(fixed.centered_polytope, fixed.group).vertices() == std::vector<RatVector>{RatVector{0, 0}});
}

TEST_CASE("torus mode on P^2") {
  const auto ctx = make_symmetry_context(ToricDivisor::anticanonical(builtin_fan("p2")), GroupMode::torus);
  CHECK(ctx.group.size() == 1);
  const auto w = alpha_witness(ctx);
  CHECK(w.value == Rational(1, 3));
  CHECK(w.point == RatVector{2, -1});
  CHECK(w.ray == 0);
}

TEST_CASE("explicit groups") {
  const IntMatrix rotation = IntMatrix::from_rows({{0, -1}, {1, -1}});
  const auto ctx = make_symmetry_context(ToricDivisor::anticanonical(dp6()), GroupMode::explicit_list, {rotation});
  CHECK(ctx.group.size() == 3);
  CHECK(alpha_invariant(ctx) == Rational(1));
  const IntMatrix swap = IntMatrix::from_rows({{0, 1}, {1, 0}});
  CHECK_THROWS_AS(make_symmetry_context(ToricDivisor(dp6(), RatVector{1, 1, 2, 1, 1, 1}), GroupMode::explicit_list, {swap}),
                  DomainError);
  CHECK(generate_group({rotation}, 2).size() == 3);
}

TEST_CASE("alpha errors") {
  CHECK_THROWS_AS(alpha_of(l_lambda(Rational(1, 2)), GroupMode::full), DomainError);
  CHECK_THROWS_AS(alpha_of(ToricDivisor(dp6(), RatVector(6, Rational(0))), GroupMode::torus), DomainError);
  CHECK(parse_group_mode("explicit") == GroupMode::explicit_list);
  CHECK_THROWS_AS(parse_group_mode("everything"), ParseError);
}

TEST_CASE("alpha properties on random ample divisors") {
  std::mt19937 rng(41);
  int tested = 0;
  for (int i = 0; i < 500 && tested < 40; ++i) {
    RatVector a;
    for (int j = 0; j < 6; ++j) a.push_back(oracle::random_rational(rng, 0, 8, 3));
    const ToricDivisor d(dp6(), a);
    if (!is_ample(d)) continue;
    ++tested;
    const Rational full = alpha_of(d, GroupMode::full);
    const Rational torus = alpha_of(d, GroupMode::torus);
    CHECK(full >= torus);

    const Rational t = oracle::random_rational(rng, 1, 9, 4);
    CHECK(alpha_of(t * d, GroupMode::full) == full / t);

    // Linear equivalence: a_i -> a_i + <m, u_i>.
    std::uniform_int_distribution<int> e(-3, 3);
    const IntVector m{e(rng), e(rng)};
    RatVector shifted = a;
    for (std::size_t k = 0; k < 6; ++k) shifted[k] += Rational(m[0] * dp6()->ray(k)[0] + m[1] * dp6()->ray(k)[1]);
    CHECK(alpha_of(ToricDivisor(dp6(), shifted), GroupMode::full) == full);

    // On P_D the facet distance <y,u_i> + a_i is >= 0 and vanishes on facet i.
    const auto p = moment_polytope(d);
    for (const auto& v : p.vertices())
      for (std::size_t k = 0; k < 6; ++k) CHECK((dot(v, to_rational(dp6()->ray(k))) + a[k]).sign() >= 0);
  }
  CHECK(tested >= 20);
}

TEST_CASE("lct oracle") {
  const auto anti = make_symmetry_context(ToricDivisor::anticanonical(dp6()), GroupMode::full);
  CHECK(alpha_oracle(anti, 1) == Rational(1));
  const auto p2 = make_symmetry_context(ToricDivisor::anticanonical(builtin_fan("p2")), GroupMode::torus);
  CHECK(alpha_oracle(p2, 1) == Rational(1, 3));
  const auto fam = make_symmetry_context(l_lambda(Rational(6, 5), Rational(5, 4)), GroupMode::full);
  Rational previous = alpha_oracle(fam, 1);
  for (int k = 2; k <= 4; ++k) {
    const Rational next = alpha_oracle(fam, k);
    CHECK(next <= previous);
    CHECK(next >= alpha_invariant(fam));
    previous = next;
  }
  CHECK_THROWS_AS(alpha_oracle(anti, 0), DomainError);
}
