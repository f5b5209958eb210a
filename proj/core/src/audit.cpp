#include "bsa/audit.hpp"

#include <algorithm>
#include <cmath>

#include "bsa/errors.hpp"

namespace bsa {

std::string law_name(LawKind law) {
  switch (law) {
    case LawKind::commutativity: return "commutativity";
    case LawKind::associativity: return "associativity";
    case LawKind::neutral: return "neutral";
    case LawKind::absorbing: return "absorbing";
    case LawKind::monotonicity: return "monotonicity";
    case LawKind::symmetry_inverse: return "symmetry_inverse";
    case LawKind::distributivity: return "distributivity";
    case LawKind::de_morgan: return "de_morgan";
  }
  return "?";
}

int law_arity(LawKind law) {
  switch (law) {
    case LawKind::neutral:
    case LawKind::absorbing:
    case LawKind::symmetry_inverse:
      return 1;
    case LawKind::commutativity:
    case LawKind::de_morgan:
      return 2;
    default:
      return 3;
  }
}

std::string region_name(RegionKind region) {
  switch (region) {
    case RegionKind::full: return "full";
    case RegionKind::open_interval: return "open_interval";
    case RegionKind::nonnegative: return "nonnegative";
    case RegionKind::nonpositive: return "nonpositive";
  }
  return "?";
}

// --- auditable wrappers ----------------------------------------------------

namespace {

GeneratorView unit_generator_view(const AdditiveGenerator& gen) {
  AdditiveGenerator g = gen;
  return {[g](double x) { return g.forward(x); },
          [](double x) { return x > kSaturationMargin && x < 1.0 - kSaturationMargin; }};
}

}  // namespace

AuditableOp auditable(const PseudoAddition& p) {
  AuditableOp op;
  PseudoAddition copy = p;
  op.eval = [copy](double x, double y) { return pseudo_add(copy, x, y); };
  op.domain_lo = -1.0;
  op.domain_hi = 1.0;
  if (p.generator) {
    SymmetricGenerator g = *p.generator;
    op.generator = GeneratorView{[g](double x) { return g(x); },
                                 [g](double x) { return g.contains(x); }};
  }
  op.label = "oplus<" + p.conorm.label + ">";
  return op;
}

AuditableOp auditable(const PseudoMultiplication& m) {
  PseudoMultiplication copy = m;
  return {[copy](double x, double y) { return pseudo_mul(copy, x, y); }, -1.0, 1.0,
          std::nullopt, "omul<" + m.norm.label + ">"};
}

AuditableOp auditable(const TriangularConorm& S) {
  AuditableOp op{S.eval, 0.0, 1.0, std::nullopt, S.label};
  if (S.generator) op.generator = unit_generator_view(*S.generator);
  return op;
}

AuditableOp auditable(const TriangularNorm& T) {
  AuditableOp op{T.eval, 0.0, 1.0, std::nullopt, T.label};
  if (T.generator) op.generator = unit_generator_view(*T.generator);
  return op;
}

AuditableOp auditable(const Uninorm& U) {
  AuditableOp op{U.eval, 0.0, 1.0, std::nullopt, U.label};
  if (U.generator) {
    UninormGenerator u = *U.generator;
    op.generator = GeneratorView{
        [u](double x) { return u.forward(x); },
        [](double x) { return x > kSaturationMargin && x < 1.0 - kSaturationMargin; }};
  }
  return op;
}

AuditableOp auditable_sym_max() {
  return {[](double x, double y) { return sym_max(x, y); }, -1.0, 1.0, std::nullopt, "svee"};
}

AuditableOp auditable_sym_min() {
  return {[](double x, double y) { return sym_min(x, y); }, -1.0, 1.0, std::nullopt, "swedge"};
}

AuditableOp auditable_u_max() {
  return {[](double x, double y) { return u_max(x, y); }, 0.0, 1.0, std::nullopt, "umax"};
}

// --- sampling --------------------------------------------------------------

std::span<const std::array<double, 3>> pinned_witness_triples() {
  static const std::array<std::array<double, 3>, 3> triples{{
      {-0.3, 0.6, 0.6},
      {0.5, 0.8, -0.8},
      {0.3, 0.7, -0.7},
  }};
  return {triples.data(), triples.size()};
}

namespace {

bool coordinate_admitted(double v, RegionKind region, double lo, double hi) {
  if (v < lo || v > hi) return false;
  switch (region) {
    case RegionKind::full: return true;
    case RegionKind::open_interval:
      return v > lo + kOpenIntervalShell && v < hi - kOpenIntervalShell;
    case RegionKind::nonnegative: return v >= 0.0;
    case RegionKind::nonpositive: return v <= 0.0;
  }
  return false;
}

double random_coordinate(RegionKind region, double lo, double hi, std::uint64_t seed,
                         std::uint64_t index) {
  const double r = sample_unit(seed, index);
  switch (region) {
    case RegionKind::nonnegative: return std::max(0.0, lo) + (hi - std::max(0.0, lo)) * r;
    case RegionKind::nonpositive: return lo + (std::min(0.0, hi) - lo) * r;
    default: return lo + (hi - lo) * r;
  }
}

struct LawOutcome {
  double lhs = 0.0;
  double rhs = 0.0;
  bool gspace_allowed = false;
  bool one_sided = false;  // monotonicity: only lhs > rhs is a violation
};

LawOutcome evaluate_law(const AuditableOp& op, const LawSpec& law, const double* t) {
  LawOutcome out;
  const auto& f = op.eval;
  switch (law.law) {
    case LawKind::commutativity:
      out.lhs = f(t[0], t[1]);
      out.rhs = f(t[1], t[0]);
      out.gspace_allowed = true;
      break;
    case LawKind::associativity:
      out.lhs = f(f(t[0], t[1]), t[2]);
      out.rhs = f(t[0], f(t[1], t[2]));
      out.gspace_allowed = true;
      break;
    case LawKind::neutral:
      out.lhs = f(t[0], law.constant);
      out.rhs = t[0];
      break;
    case LawKind::absorbing:
      out.lhs = f(t[0], law.constant);
      out.rhs = law.constant;
      break;
    case LawKind::monotonicity: {
      const double a = std::min(t[0], t[1]);
      const double b = std::max(t[0], t[1]);
      out.lhs = f(a, t[2]);
      out.rhs = f(b, t[2]);
      out.one_sided = true;
      break;
    }
    case LawKind::symmetry_inverse:
      out.lhs = f(t[0], t[0] == 0.0 ? 0.0 : -t[0]);
      out.rhs = law.constant;
      break;
    case LawKind::distributivity:
      out.lhs = f(t[0], law.second->eval(t[1], t[2]));
      out.rhs = law.second->eval(f(t[0], t[1]), f(t[0], t[2]));
      break;
    case LawKind::de_morgan:
      out.lhs = -f(-t[0], -t[1]);
      out.rhs = law.second->eval(t[0], t[1]);
      break;
  }
  return out;
}

struct Accumulator {
  PropertyReport* report;
  const AuditableOp* op;
  const LawSpec* law;
  const SamplingPlan* plan;

  void consider(const double* t, int arity) {
    const LawOutcome oc = evaluate_law(*op, *law, t);
    double gap;
    double tol;
    if (oc.one_sided) {
      gap = std::max(0.0, oc.lhs - oc.rhs);
      tol = plan->tolerance_value;
    } else if (oc.gspace_allowed && op->generator && op->generator->in_domain(oc.lhs) &&
               op->generator->in_domain(oc.rhs)) {
      gap = std::abs(op->generator->to_gspace(oc.lhs) - op->generator->to_gspace(oc.rhs));
      tol = plan->tolerance_generator;
    } else {
      gap = std::abs(oc.lhs - oc.rhs);
      tol = plan->tolerance_value;
    }
    ++report->samples_evaluated;
    report->max_violation = std::max(report->max_violation, gap);
    if (gap > tol) {
      report->holds = false;
      if (!report->witness) {
        Counterexample ce;
        ce.inputs.assign(t, t + arity);
        ce.lhs = oc.lhs;
        ce.rhs = oc.rhs;
        ce.gap = std::abs(oc.lhs - oc.rhs);
        report->witness = ce;
      }
    }
  }
};

std::vector<double> grid_axis(const AuditableOp& op, const LawSpec& law,
                              const SamplingPlan& plan) {
  if (!law.axis_values.empty()) return law.axis_values;
  double lo = op.domain_lo, hi = op.domain_hi;
  switch (law.region) {
    case RegionKind::open_interval:
      lo += kOpenIntervalShell;
      hi -= kOpenIntervalShell;
      break;
    case RegionKind::nonnegative: lo = std::max(lo, 0.0); break;
    case RegionKind::nonpositive: hi = std::min(hi, 0.0); break;
    case RegionKind::full: break;
  }
  return linspace(lo, hi, plan.grid_resolution);
}

// Runs fn over every arity-tuple drawn from axis values (odometer order).
template <typename Fn>
void for_each_tuple(const std::vector<double>& axis, int arity, Fn&& fn) {
  if (axis.empty()) return;
  const std::size_t n = axis.size();
  std::array<std::size_t, 3> idx{0, 0, 0};
  std::array<double, 3> t{};
  while (true) {
    for (int k = 0; k < arity; ++k) t[static_cast<std::size_t>(k)] = axis[idx[static_cast<std::size_t>(k)]];
    fn(t.data());
    int k = arity - 1;
    while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == n) {
      idx[static_cast<std::size_t>(k)] = 0;
      --k;
    }
    if (k < 0) break;
  }
}

}  // namespace

PropertyReport check_law(const AuditableOp& op, const LawSpec& law, const SamplingPlan& plan) {
  PropertyReport report;
  report.law = law_name(law.law);
  report.domain = region_name(law.region);
  report.plan = plan;
  Accumulator acc{&report, &op, &law, &plan};
  const int arity = law_arity(law.law);

  auto admitted = [&](const double* t) {
    for (int k = 0; k < arity; ++k)
      if (!coordinate_admitted(t[k], law.region, op.domain_lo, op.domain_hi)) return false;
    return true;
  };

  // pinned regression tuples first
  if (arity == 3)
    for (const auto& w : pinned_witness_triples())
      if (admitted(w.data())) acc.consider(w.data(), arity);

  // corner tuples
  std::vector<double> corners;
  for (double c : plan.corner_set)
    if (coordinate_admitted(c, law.region, op.domain_lo, op.domain_hi)) corners.push_back(c);
  for_each_tuple(corners, arity, [&](const double* t) { acc.consider(t, arity); });

  // grid tuples
  if (plan.grid_resolution > 0) {
    std::vector<double> axis = grid_axis(op, law, plan);
    axis.erase(std::remove_if(axis.begin(), axis.end(),
                              [&](double v) {
                                return !coordinate_admitted(v, law.region, op.domain_lo,
                                                            op.domain_hi);
                              }),
               axis.end());
    for_each_tuple(axis, arity, [&](const double* t) { acc.consider(t, arity); });
  }

  // random tuples
  std::array<double, 3> t{};
  for (long long i = 0; i < plan.random_count; ++i) {
    bool ok = true;
    for (int k = 0; k < arity; ++k) {
      t[static_cast<std::size_t>(k)] =
          random_coordinate(law.region, op.domain_lo, op.domain_hi, plan.seed,
                            static_cast<std::uint64_t>(i) * 3 + static_cast<std::uint64_t>(k));
      if (!coordinate_admitted(t[static_cast<std::size_t>(k)], law.region, op.domain_lo,
                               op.domain_hi))
        ok = false;
    }
    if (ok) acc.consider(t.data(), arity);
  }
  return report;
}

std::optional<Counterexample> search_counterexample(const AuditableOp& op, const LawSpec& law,
                                                    long long budget, std::uint64_t seed) {
  if (budget <= 0) throw PreconditionViolated("search_counterexample: budget must be positive");
  SamplingPlan plan;
  plan.seed = seed;
  plan.grid_resolution = 0;
  plan.random_count = 0;
  const int arity = law_arity(law.law);
  long long used = 0;

  auto admitted = [&](const double* t) {
    for (int k = 0; k < arity; ++k)
      if (!coordinate_admitted(t[k], law.region, op.domain_lo, op.domain_hi)) return false;
    return true;
  };
  auto probe = [&](const double* t) -> std::optional<Counterexample> {
    const LawOutcome oc = evaluate_law(op, law, t);
    const double gap =
        oc.one_sided ? std::max(0.0, oc.lhs - oc.rhs) : std::abs(oc.lhs - oc.rhs);
    if (gap > plan.tolerance_value) {
      Counterexample ce;
      ce.inputs.assign(t, t + arity);
      ce.lhs = oc.lhs;
      ce.rhs = oc.rhs;
      ce.gap = std::abs(oc.lhs - oc.rhs);
      return ce;
    }
    return std::nullopt;
  };

  if (arity == 3)
    for (const auto& w : pinned_witness_triples()) {
      if (used >= budget) return std::nullopt;
      if (!admitted(w.data())) continue;
      ++used;
      if (auto ce = probe(w.data())) return ce;
    }
  std::array<double, 3> t{};
  for (std::uint64_t i = 0; used < budget; ++i) {
    bool ok = true;
    for (int k = 0; k < arity; ++k) {
      t[static_cast<std::size_t>(k)] = random_coordinate(
          law.region, op.domain_lo, op.domain_hi, seed, i * 3 + static_cast<std::uint64_t>(k));
      if (!coordinate_admitted(t[static_cast<std::size_t>(k)], law.region, op.domain_lo,
                               op.domain_hi))
        ok = false;
    }
    if (!ok) continue;
    ++used;
    if (auto ce = probe(t.data())) return ce;
  }
  return std::nullopt;
}

double recompute_gap(const AuditableOp& op, const LawSpec& law, const Counterexample& ce) {
  if (static_cast<int>(ce.inputs.size()) != law_arity(law.law))
    throw PreconditionViolated("recompute_gap: arity mismatch");
  const LawOutcome oc = evaluate_law(op, law, ce.inputs.data());
  return oc.one_sided ? std::max(0.0, oc.lhs - oc.rhs) : std::abs(oc.lhs - oc.rhs);
}

// --- structured audits -----------------------------------------------------

GroupAuditReport audit_abelian_group(const PseudoAddition& p, const SamplingPlan& plan) {
  const AuditableOp op = auditable(p);
  GroupAuditReport r;
  r.commutativity = check_law(op, {LawKind::commutativity, RegionKind::open_interval}, plan);
  r.associativity = check_law(op, {LawKind::associativity, RegionKind::open_interval}, plan);
  r.neutral = check_law(op, {LawKind::neutral, RegionKind::open_interval, 0.0}, plan);
  r.inverses = check_law(op, {LawKind::symmetry_inverse, RegionKind::open_interval, 0.0}, plan);
  return r;
}

RingAuditReport audit_ring(const PseudoAddition& p, const PseudoMultiplication& m,
                           const SamplingPlan& plan) {
  RingAuditReport r;
  r.group = audit_abelian_group(p, plan);
  const AuditableOp mul = auditable(m);
  const AuditableOp add = auditable(p);
  r.mul_associativity = check_law(mul, {LawKind::associativity, RegionKind::full}, plan);
  r.mul_neutral = check_law(mul, {LawKind::neutral, RegionKind::full, 1.0}, plan);
  LawSpec dist{LawKind::distributivity, RegionKind::open_interval};
  dist.second = add;
  r.distributivity = check_law(mul, dist, plan);
  return r;
}

OAGStructure oag_from_pseudo_addition(const PseudoAddition& p) {
  OAGStructure s;
  s.add = auditable(p);
  s.negation = [](double x) { return x == 0.0 ? 0.0 : -x; };
  s.neutral = 0.0;
  s.top = 1.0;
  s.bottom = -1.0;
  s.label = s.add.label;
  return s;
}

OAGStructure oag_sym_max() {
  OAGStructure s;
  s.add = auditable_sym_max();
  s.negation = [](double x) { return x == 0.0 ? 0.0 : -x; };
  s.neutral = 0.0;
  s.top = 1.0;
  s.bottom = -1.0;
  s.label = "svee";
  return s;
}

OAGAuditReport audit_oag(const OAGStructure& s, const SamplingPlan& plan, bool extended) {
  OAGAuditReport r;
  const AuditableOp& op = s.add;
  r.i1_commutativity = check_law(op, {LawKind::commutativity, RegionKind::open_interval}, plan);
  r.i2_associativity = check_law(op, {LawKind::associativity, RegionKind::open_interval}, plan);
  r.i3_neutral = check_law(op, {LawKind::neutral, RegionKind::open_interval, s.neutral}, plan);
  r.i4_inverse =
      check_law(op, {LawKind::symmetry_inverse, RegionKind::open_interval, s.neutral}, plan);
  r.i5_translation = check_law(op, {LawKind::monotonicity, RegionKind::open_interval}, plan);
  if (!extended) return r;

  // OAG+ item: top and bottom absorb. 1 (+) (-1) lands here, so this item
  // reports the configured boundary convention rather than hiding it.
  {
    PropertyReport rep;
    rep.law = "extremal_absorbing";
    rep.domain = "full";
    rep.plan = plan;
    auto push = [&](double x) {
      const double gt = std::abs(op.eval(s.top, x) - s.top);
      const double gb = std::abs(op.eval(s.bottom, x) - s.bottom);
      ++rep.samples_evaluated;
      const double gap = std::max(gt, gb);
      rep.max_violation = std::max(rep.max_violation, gap);
      if (gap > plan.tolerance_value) {
        rep.holds = false;
        if (!rep.witness) {
          Counterexample ce;
          ce.inputs = {x};
          if (gt >= gb) {
            ce.lhs = op.eval(s.top, x);
            ce.rhs = s.top;
          } else {
            ce.lhs = op.eval(s.bottom, x);
            ce.rhs = s.bottom;
          }
          ce.gap = gap;
          rep.witness = ce;
        }
      }
    };
    for (double c : plan.corner_set)
      if (c >= op.domain_lo && c <= op.domain_hi) push(c);
    for (long long i = 0; i < std::min<long long>(plan.random_count, 1000); ++i)
      push(random_coordinate(RegionKind::full, op.domain_lo, op.domain_hi, plan.seed,
                             static_cast<std::uint64_t>(i)));
    r.extremal_absorbing = rep;
  }
  {
    PropertyReport rep;
    rep.law = "negation_swaps_bounds";
    rep.domain = "full";
    rep.plan = plan;
    rep.samples_evaluated = 2;
    const double g1 = std::abs(s.negation(s.top) - s.bottom);
    const double g2 = std::abs(s.negation(s.bottom) - s.top);
    rep.max_violation = std::max(g1, g2);
    rep.holds = rep.max_violation <= plan.tolerance_value;
    if (!rep.holds)
      rep.witness = Counterexample{{s.top}, s.negation(s.top), s.bottom, rep.max_violation};
    r.negation_swaps_bounds = rep;
  }
  {
    // closure: nonextremal inputs must give a nonextremal sum; gaps here
    // are 0/1 indicators of an exact hit on top or bottom
    PropertyReport rep;
    rep.law = "nonextremal_closure";
    rep.domain = "open_interval";
    rep.plan = plan;
    auto push = [&](double x, double y) {
      const double v = op.eval(x, y);
      const bool extremal = v >= s.top || v <= s.bottom;
      ++rep.samples_evaluated;
      if (extremal) {
        rep.max_violation = 1.0;
        rep.holds = false;
        if (!rep.witness) rep.witness = Counterexample{{x, y}, v, v, 1.0};
      }
    };
    std::vector<double> corners;
    for (double c : plan.corner_set)
      if (coordinate_admitted(c, RegionKind::open_interval, op.domain_lo, op.domain_hi))
        corners.push_back(c);
    for (double x : corners)
      for (double y : corners) push(x, y);
    for (long long i = 0; i < std::min<long long>(plan.random_count, 10000); ++i) {
      const double x = random_coordinate(RegionKind::open_interval, op.domain_lo, op.domain_hi,
                                         plan.seed, static_cast<std::uint64_t>(2 * i));
      const double y = random_coordinate(RegionKind::open_interval, op.domain_lo, op.domain_hi,
                                         plan.seed, static_cast<std::uint64_t>(2 * i + 1));
      push(x, y);
    }
    r.closure = rep;
  }
  return r;
}

// --- n-ary associativity oracle -------------------------------------------

namespace {

void collect_bracketings(const std::function<double(double, double)>& op,
                         std::span<const double> values, int i, int j,
                         std::vector<std::vector<double>>& memo_store,
                         std::vector<int>& memo_index, int n, std::vector<double>& out) {
  const int key = i * n + j;
  if (memo_index[static_cast<std::size_t>(key)] >= 0) {
    out = memo_store[static_cast<std::size_t>(memo_index[static_cast<std::size_t>(key)])];
    return;
  }
  std::vector<double> result;
  if (i == j) {
    result.push_back(values[static_cast<std::size_t>(i)]);
  } else {
    for (int k = i; k < j; ++k) {
      std::vector<double> left, right;
      collect_bracketings(op, values, i, k, memo_store, memo_index, n, left);
      collect_bracketings(op, values, k + 1, j, memo_store, memo_index, n, right);
      for (double l : left)
        for (double r : right) {
          const double v = op(l, r);
          if (std::find(result.begin(), result.end(), v) == result.end()) result.push_back(v);
        }
    }
  }
  memo_index[static_cast<std::size_t>(key)] = static_cast<int>(memo_store.size());
  memo_store.push_back(result);
  out = std::move(result);
}

}  // namespace

NaryAssocResult nary_assoc_oracle(const std::function<double(double, double)>& op,
                                  std::span<const double> values, double tolerance) {
  const int n = static_cast<int>(values.size());
  if (n < 2) throw PreconditionViolated("nary_assoc_oracle: need at least 2 values");
  if (n > 7) throw SizeLimit("nary_assoc_oracle: exhaustive bracketing limited to n <= 7");
  std::vector<std::vector<double>> memo_store;
  std::vector<int> memo_index(static_cast<std::size_t>(n * n), -1);
  std::vector<double> all;
  collect_bracketings(op, values, 0, n - 1, memo_store, memo_index, n, all);
  std::sort(all.begin(), all.end());
  NaryAssocResult res;
  res.agree = all.back() - all.front() <= tolerance;
  // cluster within tolerance
  for (double v : all)
    if (res.distinct_results.empty() || v - res.distinct_results.back() > tolerance)
      res.distinct_results.push_back(v);
  return res;
}

}  // namespace bsa
