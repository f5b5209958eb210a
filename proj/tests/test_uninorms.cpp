#include <doctest.h>

#include <cmath>

#include "bsa/registry.hpp"
#include "bsa/sampling.hpp"
#include "bsa/uninorms.hpp"

using namespace bsa;

namespace {
// closed-form oracle for the logit-generated uninorm:
// u(x)+u(y) = ln(xy / ((1-x)(1-y))), so U = xy / (xy + (1-x)(1-y))
double logit_uninorm_closed(double x, double y) {
  const double num = x * y;
  const double den = num + (1.0 - x) * (1.0 - y);
  return num / den;
}
}  // namespace

TEST_CASE("logit uninorm matches its closed form on the interior") {
  const Uninorm U = representable_from_generator(logit_generator());
  CHECK(U.neutral == 0.5);
  for (int i = 1; i < 20; ++i)
    for (int j = 1; j < 20; ++j) {
      const double x = i / 20.0, y = j / 20.0;
      CHECK(U(x, y) == doctest::Approx(logit_uninorm_closed(x, y)).epsilon(1e-9));
    }
  for (double x : {0.1, 0.5, 0.9}) CHECK(U(x, 0.5) == doctest::Approx(x).epsilon(1e-12));
}

TEST_CASE("infinity mode decides the corner conflict (0,1)") {
  Uninorm disj = representable_from_generator(logit_generator(InfinityMode::disjunctive));
  CHECK(disj(0.0, 1.0) == 1.0);
  Uninorm conj = representable_from_generator(logit_generator(InfinityMode::conjunctive));
  CHECK(conj(0.0, 1.0) == 0.0);
}

TEST_CASE("rescaling a strict pseudo-addition gives a uninorm with neutral 1/2") {
  const PseudoAddition p = resolve_pseudo_addition("prob_sum", BoundaryConvention::plus_one);
  const Uninorm U = from_pseudo_addition(p);
  CHECK(U.neutral == 0.5);
  REQUIRE(U.generator.has_value());
  // the identity U(z,t) = u^-1(u(z)+u(t)) on the interior
  const UninormGenerator& u = *U.generator;
  for (int i = 1; i < 30; ++i)
    for (int j = 1; j < 30; ++j) {
      const double z = i / 30.0, t = j / 30.0;
      CHECK(U(z, t) == doctest::Approx(u.invert(u(z) + u(t))).epsilon(1e-9));
    }
  // and the round trip back to [-1,1]
  const auto back = to_pseudo_addition(U);
  for (int i = 0; i < 100; ++i) {
    const double x = sample_bipolar(13, 2 * i);
    const double y = sample_bipolar(13, 2 * i + 1);
    CHECK(back(x, y) == doctest::Approx(pseudo_add(p, x, y)).epsilon(1e-9));
  }
}

TEST_CASE("rescaling requires strictness and the round trip requires neutral 1/2") {
  CHECK_THROWS_AS(from_pseudo_addition(make_pseudo_addition(conorm_lukasiewicz())),
                  NotStrict);
  Uninorm off = representable_from_generator(logit_generator());
  off.neutral = 0.25;
  CHECK_THROWS_AS(to_pseudo_addition(off), WrongNeutral);
}

TEST_CASE("decomposition recovers the dual pair of prob_sum") {
  const PseudoAddition p = resolve_pseudo_addition("prob_sum", BoundaryConvention::plus_one);
  const UninormDecomposition dec = decompose_uninorm(from_pseudo_addition(p));
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const double x = i / 20.0, y = j / 20.0;
      CHECK(dec.norm(x, y) == doctest::Approx(x * y).epsilon(1e-9));  // dual of prob_sum
      CHECK(dec.conorm(x, y) == doctest::Approx(x + y - x * y).epsilon(1e-9));
    }
}

TEST_CASE("composition fills the side rectangles with min or max") {
  const Uninorm U = resolve_uninorm("compose(T=min,S=max,e=0.5,fill=max)");
  CHECK(U(0.2, 0.4) == 0.2);   // both below e: rescaled min
  CHECK(U(0.6, 0.9) == 0.9);   // both above e: rescaled max
  CHECK(U(0.2, 0.9) == 0.9);   // mixed: the max fill
  const Uninorm V = resolve_uninorm("compose(T=min,S=max,e=0.5,fill=min)");
  CHECK(V(0.2, 0.9) == 0.2);
  for (double x : {0.1, 0.5, 0.8}) CHECK(U(x, 0.5) == x);
}

TEST_CASE("u_max: min below the antidiagonal, max above, 1/2 on it") {
  CHECK(u_max(0.2, 0.3) == 0.2);
  CHECK(u_max(0.6, 0.9) == 0.9);
  CHECK(u_max(0.3, 0.7) == 0.5);
  CHECK(u_max(0.5, 0.5) == 0.5);
  CHECK(u_max(0.0, 1.0) == 0.5);  // endpoints of the antidiagonal included
  CHECK(u_max(UnitValue(0.25), UnitValue(0.5)) == UnitValue(0.25));
}

TEST_CASE("u_max is not associative") {
  // (0.1 + 0.9 lands on the antidiagonal only in one bracketing)
  CHECK(u_max(u_max(0.1, 0.9), 0.7) == 0.7);
  CHECK(u_max(0.1, u_max(0.9, 0.7)) == 0.5);
}

TEST_CASE("strong negation from the logit generator is 1 - x") {
  const UninormGenerator u = logit_generator();
  for (double x : {0.1, 0.25, 0.5, 0.9})
    CHECK(strong_negation(u, UnitValue(x)).value() == doctest::Approx(1.0 - x).epsilon(1e-9));
  CHECK_THROWS_AS(strong_negation(u, UnitValue(0.0)), BoundaryInput);
  CHECK_THROWS_AS(strong_negation(u, UnitValue(1.0)), BoundaryInput);
}
