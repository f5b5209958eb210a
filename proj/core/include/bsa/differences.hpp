#ifndef BSA_DIFFERENCES_HPP
#define BSA_DIFFERENCES_HPP

#include <optional>

#include "bsa/conorms.hpp"

namespace bsa {

enum class DifferenceStrategy {
  generator_formula,
  inf_bisection,
  max_closed_form,
  ordinal_sum_formula,
};

/// The S-difference x (-)' y relative to a t-conorm, with a choice of
/// evaluation strategy.
struct DifferenceOperator {
  TriangularConorm conorm;
  DifferenceStrategy strategy = DifferenceStrategy::inf_bisection;
  std::optional<OrdinalSumSpec> ordinal;  // required for ordinal_sum_formula
};

/// Picks the natural strategy: closed form for max, generator formula when
/// a generator is attached, bisection otherwise.
DifferenceOperator make_difference(const TriangularConorm& S);
DifferenceOperator make_ordinal_difference(const OrdinalSumSpec& spec);

/// x (-)' y for x,y in [0,1]; exactly 0 on the diagonal.
double s_difference(const DifferenceOperator& d, double x, double y);
UnitValue s_difference(const DifferenceOperator& d, UnitValue x, UnitValue y);

/// Independent oracle: inf{ z | S(y,z) >= x } by bisection to 1e-12, with a
/// final downward rounding so the infimum is never over-reported.
double s_difference_inf_oracle(const TriangularConorm& S, double x, double y);

/// The three-branch symmetrized difference: positive for x>y, negated swap
/// for x<y, exactly 0 for x=y. Values land in [-1,1].
double symmetric_difference(const DifferenceOperator& d, double x, double y);
BipolarValue symmetric_difference(const DifferenceOperator& d, UnitValue x, UnitValue y);

/// Difference of the one-block ordinal sum: rescaled generator formula on
/// the upper square, max-difference outside it. Requires x >= y.
double ordinal_sum_difference(const OrdinalSumSpec& spec, double x, double y);

}  // namespace bsa

#endif
