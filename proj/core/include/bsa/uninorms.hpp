#ifndef BSA_UNINORMS_HPP
#define BSA_UNINORMS_HPP

#include "bsa/symmetric.hpp"

namespace bsa {

/// Strictly increasing map [0,1] -> [-inf,inf] with u(e) = 0.
struct UninormGenerator {
  std::function<double(double)> forward;
  std::function<double(double)> closed_inverse;  // may be empty -> bisection
  double neutral = 0.5;
  InfinityMode mode = InfinityMode::disjunctive;
  std::string name;

  double operator()(double x) const { return forward(x); }
  double invert(double y) const;
};

struct Uninorm {
  std::function<double(double, double)> eval;
  double neutral = 0.5;
  std::optional<UninormGenerator> generator;
  InfinityMode mode = InfinityMode::disjunctive;
  std::string label;

  double operator()(double x, double y) const { return eval(x, y); }
};

/// The logit generator ln(x/(1-x)), neutral 1/2.
UninormGenerator logit_generator(InfinityMode mode = InfinityMode::disjunctive);

/// U(x,y) = u^-1(u(x) + u(y)), with the mode resolving inf - inf.
Uninorm representable_from_generator(const UninormGenerator& gen);

/// Rescales a strict pseudo-addition from [-1,1] to [0,1]; neutral becomes
/// 1/2 and the generator becomes u(x) = g(2x-1).
Uninorm from_pseudo_addition(const PseudoAddition& p);

/// Inverse rescaling; requires neutral element 1/2.
std::function<double(double, double)> to_pseudo_addition(const Uninorm& U);

struct UninormDecomposition {
  TriangularNorm norm;
  TriangularConorm conorm;
};

/// Underlying t-norm and t-conorm by corner rescaling; generators are
/// attached when U is representable.
UninormDecomposition decompose_uninorm(const Uninorm& U);

enum class SideFill { min, max };

/// Partial composition: rescaled T below e, rescaled S above e, min or max
/// fill on the side rectangles. Associativity is audited, never assumed.
Uninorm compose_uninorm(const TriangularNorm& T, const TriangularConorm& S, double e,
                        SideFill fill);

/// The rescaled symmetric maximum. Not a uninorm (associativity fails);
/// the whole antidiagonal, endpoints included, maps to 1/2.
double u_max(double z, double t);
UnitValue u_max(UnitValue z, UnitValue t);

/// N(x) = u^-1(-u(x)); involutive and decreasing on ]0,1[.
UnitValue strong_negation(const UninormGenerator& gen, UnitValue x);

}  // namespace bsa

#endif
