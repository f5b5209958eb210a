#include <benchmark/benchmark.h>

#include "bsa/audit.hpp"
#include "bsa/expression.hpp"
#include "bsa/finite.hpp"
#include "bsa/registry.hpp"
#include "bsa/sampling.hpp"

namespace {

using namespace bsa;

void BM_PseudoAddRules(benchmark::State& state) {
  const PseudoAddition p = resolve_pseudo_addition("prob_sum", BoundaryConvention::plus_one);
  std::uint64_t i = 0;
  for (auto _ : state) {
    const double x = sample_bipolar(1, i++);
    const double y = sample_bipolar(1, i++);
    benchmark::DoNotOptimize(pseudo_add(p, x, y));
  }
}
BENCHMARK(BM_PseudoAddRules);

void BM_PseudoAddGenerator(benchmark::State& state) {
  const PseudoAddition p = resolve_pseudo_addition("prob_sum", BoundaryConvention::plus_one);
  std::uint64_t i = 0;
  for (auto _ : state) {
    const double x = sample_bipolar(1, i++);
    const double y = sample_bipolar(1, i++);
    benchmark::DoNotOptimize(pseudo_add_via_generator(p, x, y));
  }
}
BENCHMARK(BM_PseudoAddGenerator);

void BM_DifferenceBisection(benchmark::State& state) {
  const TriangularConorm S = resolve_conorm("prob_sum");
  std::uint64_t i = 0;
  for (auto _ : state) {
    const double x = sample_unit(2, i++);
    const double y = sample_unit(2, i++);
    benchmark::DoNotOptimize(s_difference_inf_oracle(S, x, y));
  }
}
BENCHMARK(BM_DifferenceBisection);

void BM_GroupAudit(benchmark::State& state) {
  const PseudoAddition p = resolve_pseudo_addition("prob_sum", BoundaryConvention::plus_one);
  SamplingPlan plan;
  plan.grid_resolution = 0;
  plan.random_count = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(audit_abelian_group(p, plan));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_GroupAudit)->Arg(1000)->Arg(10000);

void BM_ExpressionEval(benchmark::State& state) {
  const EvalContext ctx{resolve_pseudo_addition("prob_sum", BoundaryConvention::plus_one),
                        PseudoMultiplication{resolve_norm("product")}};
  const ExprPtr ast = parse_expression("((-0.3) (+) 0.6) (*) (0.6 svee (0.2 swedge 0.9))");
  for (auto _ : state) benchmark::DoNotOptimize(eval_expression(*ast, ctx));
}
BENCHMARK(BM_ExpressionEval);

void BM_FiniteEnumeration(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(enumerate_finite_tconorms(static_cast<int>(state.range(0))));
}
BENCHMARK(BM_FiniteEnumeration)->Arg(4)->Arg(5)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
