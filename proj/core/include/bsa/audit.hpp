#ifndef BSA_AUDIT_HPP
#define BSA_AUDIT_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "bsa/uninorms.hpp"

namespace bsa {

enum class LawKind {
  commutativity,
  associativity,
  neutral,
  absorbing,
  monotonicity,
  symmetry_inverse,
  distributivity,
  de_morgan,
};

std::string law_name(LawKind law);
int law_arity(LawKind law);

enum class RegionKind { full, open_interval, nonnegative, nonpositive };

std::string region_name(RegionKind region);

/// A monotone map into generator space plus the region where comparing
/// there is numerically meaningful.
struct GeneratorView {
  std::function<double(double)> to_gspace;
  std::function<bool(double)> in_domain;
};

/// A binary operation packaged for the audit engine, together with the
/// carrier interval and an optional map into generator space.
struct AuditableOp {
  std::function<double(double, double)> eval;
  double domain_lo = -1.0;
  double domain_hi = 1.0;
  std::optional<GeneratorView> generator;
  std::string label;
};

AuditableOp auditable(const PseudoAddition& p);
AuditableOp auditable(const PseudoMultiplication& m);
AuditableOp auditable(const TriangularConorm& S);
AuditableOp auditable(const TriangularNorm& T);
AuditableOp auditable(const Uninorm& U);
AuditableOp auditable_sym_max();
AuditableOp auditable_sym_min();
AuditableOp auditable_u_max();

struct LawSpec {
  LawKind law = LawKind::commutativity;
  RegionKind region = RegionKind::full;
  double constant = 0.0;               // target of neutral / absorbing / symmetry_inverse
  std::optional<AuditableOp> second;   // distributivity: the "over" op; de_morgan: the dual
  std::vector<double> axis_values;     // explicit grid override, optional
};

struct Counterexample {
  std::vector<double> inputs;
  double lhs = 0.0;
  double rhs = 0.0;
  double gap = 0.0;  // |lhs - rhs| in value space, recomputable from inputs
};

struct PropertyReport {
  std::string law;
  std::string domain;
  SamplingPlan plan;
  bool holds = true;  // verdict: holds_on_samples vs fails
  double max_violation = 0.0;
  std::optional<Counterexample> witness;
  long long samples_evaluated = 0;
};

/// Known associativity-breaking tuples, always pinned into 3-ary sampling
/// as regression points.
std::span<const std::array<double, 3>> pinned_witness_triples();

PropertyReport check_law(const AuditableOp& op, const LawSpec& law, const SamplingPlan& plan);

std::optional<Counterexample> search_counterexample(const AuditableOp& op, const LawSpec& law,
                                                    long long budget, std::uint64_t seed);

/// Re-evaluates a stored witness; used as the self-check after
/// deserialization.
double recompute_gap(const AuditableOp& op, const LawSpec& law, const Counterexample& ce);

struct GroupAuditReport {
  PropertyReport commutativity, associativity, neutral, inverses;
  bool all_hold() const {
    return commutativity.holds && associativity.holds && neutral.holds && inverses.holds;
  }
};

/// Group laws over the open interval ]-1,1[ (endpoints excluded).
GroupAuditReport audit_abelian_group(const PseudoAddition& p, const SamplingPlan& plan);

struct RingAuditReport {
  GroupAuditReport group;
  PropertyReport mul_associativity, mul_neutral, distributivity;
};

RingAuditReport audit_ring(const PseudoAddition& p, const PseudoMultiplication& m,
                           const SamplingPlan& plan);

/// Ordered-Abelian-group carrier description: interval with top/bottom, an
/// addition, an order-reversing negation and a neutral element.
struct OAGStructure {
  AuditableOp add;
  std::function<double(double)> negation;
  double neutral = 0.0;
  double top = 1.0;
  double bottom = -1.0;
  std::string label;
};

OAGStructure oag_from_pseudo_addition(const PseudoAddition& p);
OAGStructure oag_sym_max();

struct OAGAuditReport {
  PropertyReport i1_commutativity, i2_associativity, i3_neutral, i4_inverse, i5_translation;
  // extended (OAG+) items, filled only when requested
  std::optional<PropertyReport> extremal_absorbing;
  std::optional<PropertyReport> negation_swaps_bounds;
  std::optional<PropertyReport> closure;
  bool core_holds() const {
    return i1_commutativity.holds && i2_associativity.holds && i3_neutral.holds &&
           i4_inverse.holds && i5_translation.holds;
  }
};

OAGAuditReport audit_oag(const OAGStructure& s, const SamplingPlan& plan, bool extended);

struct NaryAssocResult {
  bool agree = true;
  std::vector<double> distinct_results;
};

/// Evaluates every parenthesization of the list (n <= 7, Catalan(6) = 132).
NaryAssocResult nary_assoc_oracle(const std::function<double(double, double)>& op,
                                  std::span<const double> values, double tolerance);

}  // namespace bsa

#endif
