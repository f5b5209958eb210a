#include <doctest.h>

#include <cmath>

#include "bsa/conorms.hpp"
#include "bsa/registry.hpp"
#include "bsa/sampling.hpp"

using namespace bsa;

namespace {
// closed forms used as oracles against the generator-based evaluators
double prob_sum_closed(double x, double y) { return x + y - x * y; }
double luk_closed(double x, double y) { return std::min(1.0, x + y); }
}  // namespace

TEST_CASE("built-in conorms match their closed forms") {
  const TriangularConorm S = conorm_prob_sum();
  const TriangularConorm L = conorm_lukasiewicz();
  for (int i = 0; i <= 20; ++i)
    for (int j = 0; j <= 20; ++j) {
      const double x = i / 20.0, y = j / 20.0;
      CHECK(S(x, y) == doctest::Approx(prob_sum_closed(x, y)).epsilon(1e-12));
      CHECK(L(x, y) == doctest::Approx(luk_closed(x, y)).epsilon(1e-12));
    }
  CHECK(conorm_max()(0.3, 0.8) == 0.8);
  CHECK(norm_min()(0.3, 0.8) == 0.3);
  CHECK(norm_product()(0.5, 0.5) == 0.25);
  CHECK(norm_lukasiewicz()(0.7, 0.7) == doctest::Approx(0.4));
  CHECK(norm_lukasiewicz()(0.3, 0.3) == 0.0);
}

TEST_CASE("neutral and absorbing elements") {
  for (const char* name : {"prob_sum", "luk", "max"}) {
    const TriangularConorm S = resolve_conorm(name);
    for (double x : {0.0, 0.25, 0.9, 1.0}) {
      CHECK(S(x, 0.0) == x);
      CHECK(S(x, 1.0) == 1.0);
    }
  }
}

TEST_CASE("generator pseudo-inverse clamps and inverts") {
  const AdditiveGenerator s = *conorm_prob_sum().generator;
  CHECK(s.strict());
  CHECK(s(0.0) == 0.0);
  CHECK(s.invert(s(0.37)) == doctest::Approx(0.37).epsilon(1e-12));
  CHECK(s.invert(-1.0) == 0.0);
  CHECK(s.invert(std::numeric_limits<double>::infinity()) == 1.0);
  CHECK(generator_pseudo_inverse(s, ExtendedReal::pos_inf()) == UnitValue(1.0));
}

TEST_CASE("bisection fallback agrees with closed inverse") {
  AdditiveGenerator s = *conorm_prob_sum().generator;
  const auto closed = s.closed_inverse;
  s.closed_inverse = nullptr;  // force bisection
  for (double y : {0.01, 0.5, 1.7, 10.0})
    CHECK(s.invert(y) == doctest::Approx(closed(y)).epsilon(1e-9));
}

TEST_CASE("conorm_from_generator reproduces prob_sum from its generator") {
  const TriangularConorm rebuilt = conorm_from_generator(*conorm_prob_sum().generator);
  for (double x : {0.0, 0.2, 0.7, 1.0})
    for (double y : {0.0, 0.4, 1.0})
      CHECK(rebuilt(x, y) == doctest::Approx(prob_sum_closed(x, y)).epsilon(1e-12));
}

TEST_CASE("the ratio generator x/(1-x) gives a strict conorm") {
  const TriangularConorm S = resolve_conorm("gen:ratio");
  REQUIRE(S.generator.has_value());
  CHECK(S.generator->strict());
  // oracle: s(x)+s(y) inverted by hand
  const auto oracle = [](double x, double y) {
    const double v = x / (1.0 - x) + y / (1.0 - y);
    return v / (1.0 + v);
  };
  for (double x : {0.1, 0.5, 0.9})
    for (double y : {0.0, 0.3, 0.95})
      CHECK(S(x, y) == doctest::Approx(oracle(x, y)).epsilon(1e-12));
  CHECK(S(1.0, 0.3) == 1.0);
}

TEST_CASE("duality flips a norm into a conorm and back") {
  const TriangularConorm S = dual_of(norm_product());
  for (double x : {0.0, 0.3, 0.8})
    for (double y : {0.1, 1.0})
      CHECK(S(x, y) == doctest::Approx(prob_sum_closed(x, y)).epsilon(1e-12));
  const TriangularNorm T = dual_of(conorm_lukasiewicz());
  CHECK(T(0.7, 0.7) == doctest::Approx(0.4));
}

TEST_CASE("classification flags on samples") {
  SamplingPlan plan;
  plan.random_count = 200;
  const ClassificationTag ps = classify(conorm_prob_sum(), plan);
  CHECK(ps.strictly_monotone);
  CHECK(ps.archimedean);
  CHECK(!ps.idempotent);
  CHECK(!ps.nilpotent);
  const ClassificationTag lk = classify(conorm_lukasiewicz(), plan);
  CHECK(lk.nilpotent);
  CHECK(lk.archimedean);
  CHECK(!lk.strictly_monotone);
  const ClassificationTag mx = classify(conorm_max(), plan);
  CHECK(mx.idempotent);
  CHECK(!mx.archimedean);
}

TEST_CASE("ordinal sum: rescaled block above the corner, max outside") {
  const OrdinalSumSpec spec = make_ordinal_spec(0.5, conorm_prob_sum());
  const TriangularConorm S = ordinal_sum_upper(spec);
  CHECK(S(0.2, 0.4) == 0.4);          // below the block: maximum
  CHECK(S(0.3, 0.8) == 0.8);          // straddling: maximum
  CHECK(S(0.5, 0.7) == doctest::Approx(0.7).epsilon(1e-12));  // corner is neutral on the block
  // inside the block: a + (1-a) * S1((x-a)/(1-a), (y-a)/(1-a))
  const double x = 0.7, y = 0.9, a = 0.5;
  const double expected = a + (1 - a) * prob_sum_closed((x - a) / (1 - a), (y - a) / (1 - a));
  CHECK(S(x, y) == doctest::Approx(expected).epsilon(1e-12));
  CHECK(S(1.0, 0.2) == 1.0);
}

TEST_CASE("ordinal sum construction validates its inputs") {
  CHECK_THROWS_AS(ordinal_sum_upper(make_ordinal_spec(0.5, conorm_lukasiewicz())),
                  GeneratorShapeError);
  CHECK_THROWS_AS(make_ordinal_spec(0.5, conorm_max()), MissingGenerator);
  CHECK_THROWS_AS(ordinal_sum_upper(make_ordinal_spec(0.0, conorm_prob_sum())),
                  GeneratorShapeError);
}

TEST_CASE("family lookup") {
  CHECK(std::holds_alternative<TriangularConorm>(builtin("prob_sum")));
  CHECK(std::holds_alternative<TriangularNorm>(builtin("lukasiewicz_norm")));
  CHECK_THROWS_AS(builtin("nope"), UnknownFamily);
}
