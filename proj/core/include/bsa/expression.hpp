#ifndef BSA_EXPRESSION_HPP
#define BSA_EXPRESSION_HPP

#include <memory>
#include <string>
#include <vector>

#include "bsa/symmetric.hpp"

namespace bsa {

/// Infix operators of the expression grammar. "(+)" and "(*)" are the
/// configurable pseudo-addition/multiplication; svee/swedge are the fixed
/// symmetric maximum/minimum.
enum class ExprOp { pseudo_add, pseudo_mul, sym_max_op, sym_min_op };

std::string expr_op_token(ExprOp op);

struct ExprNode;
using ExprPtr = std::unique_ptr<ExprNode>;

struct ExprNode {
  enum class Kind { literal, binary, fold } kind = Kind::literal;
  double value = 0.0;                    // literal
  ExprOp op = ExprOp::pseudo_add;       // binary / fold
  ExprPtr left, right;                  // binary
  std::vector<ExprPtr> items;           // fold
};

/// Grammar: expr := operand [binop operand]; operand := literal | '(' expr ')'
///          | 'fold' '(' opname ';' expr {',' expr} ')'.
/// No precedence and no chaining — grouping is always explicit.
ExprPtr parse_expression(const std::string& text);

/// Inverse of parse_expression up to whitespace: parse(print(ast)) == ast.
std::string print_expression(const ExprNode& ast);

struct EvalContext {
  PseudoAddition add;
  PseudoMultiplication mul;
};

/// Bottom-up evaluation; fold(svee; ...) follows sym_max_fold, so the
/// result may be an undefined-aggregate interval instead of a number.
FoldResult eval_expression(const ExprNode& ast, const EvalContext& ctx);

}  // namespace bsa

#endif
