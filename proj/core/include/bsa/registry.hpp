#ifndef BSA_REGISTRY_HPP
#define BSA_REGISTRY_HPP

#include <map>
#include <string>

#include "bsa/audit.hpp"
#include "bsa/uninorms.hpp"

namespace bsa {

/// One parsed operator spec: a head name plus optional key=value arguments,
/// e.g. "osum(a=0.5,upper=prob_sum)" or plain "prob_sum".
struct OpSpec {
  std::string head;
  std::map<std::string, std::string> args;
};

OpSpec parse_op_spec(const std::string& text);  // SyntaxError on malformed input

/// Named custom generators usable as "gen:<name>". Currently: "ratio",
/// s(x) = x/(1-x) with closed inverse y/(1+y).
AdditiveGenerator named_generator(const std::string& name);

/// Conorm-position specs: prob_sum | luk | max | gen:<name> | osum(a=,upper=).
TriangularConorm resolve_conorm(const std::string& text);

/// Norm-position specs: product | min | luk | gen:<name>.
TriangularNorm resolve_norm(const std::string& text);

PseudoAddition resolve_pseudo_addition(const std::string& conorm_text,
                                       BoundaryConvention boundary);

/// Uninorm-position specs: uninorm(gen=logit) | compose(T=,S=,e=,fill=).
Uninorm resolve_uninorm(const std::string& text);

/// Anything audit-able by name: the above plus svee | swedge | umax, with
/// conorm specs lifted to their pseudo-addition on [-1,1].
AuditableOp resolve_op(const std::string& text,
                       BoundaryConvention boundary = BoundaryConvention::plus_one);

}  // namespace bsa

#endif
