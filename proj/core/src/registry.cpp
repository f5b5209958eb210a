#include "bsa/registry.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>

#include "bsa/errors.hpp"

namespace bsa {

OpSpec parse_op_spec(const std::string& text) {
  OpSpec spec;
  std::size_t i = 0;
  const auto head_char = [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == ':';
  };
  while (i < text.size() && head_char(text[i])) ++i;
  if (i == 0) throw SyntaxError("operator spec: expected a name", 0);
  spec.head = text.substr(0, i);
  if (i == text.size()) return spec;
  if (text[i] != '(') throw SyntaxError("operator spec: expected '('", i);
  ++i;
  while (true) {
    std::size_t key_start = i;
    while (i < text.size() && text[i] != '=' && text[i] != ')' && text[i] != ',') ++i;
    if (i >= text.size() || text[i] != '=')
      throw SyntaxError("operator spec: expected key=value", i);
    const std::string key = text.substr(key_start, i - key_start);
    ++i;
    std::size_t val_start = i;
    int depth = 0;  // allow nested specs like upper=osum(...)
    while (i < text.size() && (depth > 0 || (text[i] != ',' && text[i] != ')'))) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      ++i;
    }
    if (i >= text.size()) throw SyntaxError("operator spec: unterminated argument list", i);
    spec.args[key] = text.substr(val_start, i - val_start);
    if (text[i] == ')') {
      ++i;
      break;
    }
    ++i;  // skip ','
  }
  if (i != text.size()) throw SyntaxError("operator spec: trailing characters", i);
  return spec;
}

namespace {

double numeric_arg(const OpSpec& spec, const std::string& key, double fallback,
                   bool required = false) {
  auto it = spec.args.find(key);
  if (it == spec.args.end()) {
    if (required) throw ConfigError(spec.head + ": missing argument '" + key + "'");
    return fallback;
  }
  char* end = nullptr;
  const double v = std::strtod(it->second.c_str(), &end);
  if (end == it->second.c_str() || *end != '\0')
    throw ConfigError(spec.head + ": argument '" + key + "' is not a number");
  return v;
}

std::string string_arg(const OpSpec& spec, const std::string& key,
                       const std::string& fallback) {
  auto it = spec.args.find(key);
  return it == spec.args.end() ? fallback : it->second;
}

}  // namespace

AdditiveGenerator named_generator(const std::string& name) {
  if (name == "ratio") {
    AdditiveGenerator g;
    g.forward = [](double x) { return x / (1.0 - x); };
    g.closed_inverse = [](double y) { return y / (1.0 + y); };
    g.direction = GeneratorDirection::increasing;
    g.endpoint_value = std::numeric_limits<double>::infinity();
    g.name = "ratio";
    return g;
  }
  throw UnknownFamily("no generator named '" + name + "'");
}

TriangularConorm resolve_conorm(const std::string& text) {
  const OpSpec spec = parse_op_spec(text);
  if (spec.head == "prob_sum") return conorm_prob_sum();
  if (spec.head == "luk" || spec.head == "lukasiewicz_conorm") return conorm_lukasiewicz();
  if (spec.head == "max") return conorm_max();
  if (spec.head.rfind("gen:", 0) == 0)
    return conorm_from_generator(named_generator(spec.head.substr(4)));
  if (spec.head == "osum") {
    const double a = numeric_arg(spec, "a", 0.5);
    const TriangularConorm upper = resolve_conorm(string_arg(spec, "upper", "prob_sum"));
    return ordinal_sum_upper(make_ordinal_spec(a, upper));
  }
  if (spec.head == "osum2") {
    const double a = numeric_arg(spec, "a", 0.5);
    return ordinal_sum_two_block(a, resolve_conorm(string_arg(spec, "upper", "prob_sum")),
                                 resolve_conorm(string_arg(spec, "lower", "prob_sum")));
  }
  throw UnknownOperator("not a t-conorm spec: " + text);
}

TriangularNorm resolve_norm(const std::string& text) {
  const OpSpec spec = parse_op_spec(text);
  if (spec.head == "product") return norm_product();
  if (spec.head == "min") return norm_min();
  if (spec.head == "luk" || spec.head == "lukasiewicz_norm") return norm_lukasiewicz();
  if (spec.head.rfind("gen:", 0) == 0) {
    // a conorm-shaped generator in norm position is flipped by duality
    AdditiveGenerator g = named_generator(spec.head.substr(4));
    if (g.direction == GeneratorDirection::increasing)
      return dual_of(conorm_from_generator(g));
    return norm_from_generator(g);
  }
  throw UnknownOperator("not a t-norm spec: " + text);
}

PseudoAddition resolve_pseudo_addition(const std::string& conorm_text,
                                       BoundaryConvention boundary) {
  const OpSpec spec = parse_op_spec(conorm_text);
  if (spec.head == "osum") {
    const double a = numeric_arg(spec, "a", 0.5);
    const TriangularConorm upper = resolve_conorm(string_arg(spec, "upper", "prob_sum"));
    return make_ordinal_pseudo_addition(make_ordinal_spec(a, upper), boundary);
  }
  return make_pseudo_addition(resolve_conorm(conorm_text), boundary);
}

Uninorm resolve_uninorm(const std::string& text) {
  const OpSpec spec = parse_op_spec(text);
  if (spec.head == "uninorm") {
    const std::string gen = string_arg(spec, "gen", "logit");
    if (gen == "logit") return representable_from_generator(logit_generator());
    throw UnknownFamily("no uninorm generator named '" + gen + "'");
  }
  if (spec.head == "compose") {
    const TriangularNorm T = resolve_norm(string_arg(spec, "T", "min"));
    const TriangularConorm S = resolve_conorm(string_arg(spec, "S", "max"));
    const double e = numeric_arg(spec, "e", 0.5);
    const std::string fill = string_arg(spec, "fill", "max");
    if (fill != "min" && fill != "max")
      throw ConfigError("compose: fill must be min or max");
    return compose_uninorm(T, S, e, fill == "min" ? SideFill::min : SideFill::max);
  }
  throw UnknownOperator("not a uninorm spec: " + text);
}

AuditableOp resolve_op(const std::string& text, BoundaryConvention boundary) {
  const OpSpec spec = parse_op_spec(text);
  if (spec.head == "svee") return auditable_sym_max();
  if (spec.head == "swedge") return auditable_sym_min();
  if (spec.head == "umax") return auditable_u_max();
  if (spec.head == "uninorm" || spec.head == "compose")
    return auditable(resolve_uninorm(text));
  if (spec.head == "product" || spec.head == "min" || spec.head == "lukasiewicz_norm")
    return auditable(PseudoMultiplication{resolve_norm(text)});
  return auditable(resolve_pseudo_addition(text, boundary));
}

}  // namespace bsa
