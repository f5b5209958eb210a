#include "bsa/expression.hpp"

#include <cctype>
#include <cstdlib>
#include <sstream>

#include "bsa/errors.hpp"

namespace bsa {

std::string expr_op_token(ExprOp op) {
  switch (op) {
    case ExprOp::pseudo_add: return "(+)";
    case ExprOp::pseudo_mul: return "(*)";
    case ExprOp::sym_max_op: return "svee";
    case ExprOp::sym_min_op: return "swedge";
  }
  return "?";
}

namespace {

struct Token {
  enum class Kind { lparen, rparen, comma, semicolon, binop, fold_kw, number, end };
  Kind kind = Kind::end;
  ExprOp op = ExprOp::pseudo_add;
  double value = 0.0;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    current_.pos = i_;
    if (i_ >= text_.size()) {
      current_.kind = Token::Kind::end;
      return;
    }
    const char c = text_[i_];
    // "(+)" / "(*)" before a bare "("
    if (c == '(' && i_ + 2 < text_.size() && text_[i_ + 2] == ')' &&
        (text_[i_ + 1] == '+' || text_[i_ + 1] == '*')) {
      current_.kind = Token::Kind::binop;
      current_.op = text_[i_ + 1] == '+' ? ExprOp::pseudo_add : ExprOp::pseudo_mul;
      i_ += 3;
      return;
    }
    if (c == '(' || c == ')' || c == ',' || c == ';') {
      current_.kind = c == '(' ? Token::Kind::lparen
                    : c == ')' ? Token::Kind::rparen
                    : c == ',' ? Token::Kind::comma
                               : Token::Kind::semicolon;
      ++i_;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < text_.size() && std::isalpha(static_cast<unsigned char>(text_[j]))) ++j;
      const std::string word = text_.substr(i_, j - i_);
      if (word == "svee" || word == "swedge") {
        current_.kind = Token::Kind::binop;
        current_.op = word == "svee" ? ExprOp::sym_max_op : ExprOp::sym_min_op;
      } else if (word == "fold") {
        current_.kind = Token::Kind::fold_kw;
      } else {
        throw UnknownOperator("unknown operator '" + word + "' at position " +
                              std::to_string(i_));
      }
      i_ = j;
      return;
    }
    if (c == '-' || c == '.' || std::isdigit(static_cast<unsigned char>(c))) {
      char* end = nullptr;
      const double v = std::strtod(text_.c_str() + i_, &end);
      if (end == text_.c_str() + i_) throw SyntaxError("malformed number", i_);
      current_.kind = Token::Kind::number;
      current_.value = v;
      i_ = static_cast<std::size_t>(end - text_.c_str());
      return;
    }
    throw SyntaxError(std::string("unexpected character '") + c + "'", i_);
  }

  const std::string& text_;
  std::size_t i_ = 0;
  Token current_;
};

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  ExprPtr parse() {
    ExprPtr e = expression();
    if (lex_.peek().kind != Token::Kind::end)
      throw SyntaxError("trailing input after expression (grouping required?)",
                        lex_.peek().pos);
    return e;
  }

 private:
  // expr := operand [binop operand] — at most one infix operator per level;
  // chains like "a (+) b (+) c" are rejected to keep grouping explicit.
  ExprPtr expression() {
    ExprPtr left = operand();
    if (lex_.peek().kind != Token::Kind::binop) return left;
    const Token op = lex_.take();
    ExprPtr right = operand();
    if (lex_.peek().kind == Token::Kind::binop)
      throw SyntaxError("operator chains need explicit parentheses", lex_.peek().pos);
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::binary;
    node->op = op.op;
    node->left = std::move(left);
    node->right = std::move(right);
    return node;
  }

  ExprPtr operand() {
    const Token t = lex_.peek();
    switch (t.kind) {
      case Token::Kind::number: {
        lex_.take();
        if (t.value < -1.0 || t.value > 1.0)
          throw SyntaxError("literal outside [-1,1]", t.pos);
        auto node = std::make_unique<ExprNode>();
        node->kind = ExprNode::Kind::literal;
        node->value = t.value;
        return node;
      }
      case Token::Kind::lparen: {
        lex_.take();
        ExprPtr inner = expression();
        expect(Token::Kind::rparen, "')'");
        return inner;
      }
      case Token::Kind::fold_kw:
        return fold();
      default:
        throw SyntaxError("expected a literal, '(' or fold(...)", t.pos);
    }
  }

  ExprPtr fold() {
    lex_.take();  // 'fold'
    expect(Token::Kind::lparen, "'('");
    const Token op = lex_.peek();
    if (op.kind != Token::Kind::binop)
      throw SyntaxError("fold: expected an operator name", op.pos);
    lex_.take();
    expect(Token::Kind::semicolon, "';'");
    auto node = std::make_unique<ExprNode>();
    node->kind = ExprNode::Kind::fold;
    node->op = op.op;
    node->items.push_back(expression());
    while (lex_.peek().kind == Token::Kind::comma) {
      lex_.take();
      node->items.push_back(expression());
    }
    expect(Token::Kind::rparen, "')'");
    return node;
  }

  void expect(Token::Kind kind, const char* what) {
    if (lex_.peek().kind != kind)
      throw SyntaxError(std::string("expected ") + what, lex_.peek().pos);
    lex_.take();
  }

  Lexer lex_;
};

void print_node(const ExprNode& n, std::ostream& os, bool parenthesize) {
  switch (n.kind) {
    case ExprNode::Kind::literal: {
      std::ostringstream tmp;
      tmp.precision(17);
      tmp << n.value;
      os << tmp.str();
      break;
    }
    case ExprNode::Kind::binary:
      if (parenthesize) os << '(';
      print_node(*n.left, os, true);
      os << ' ' << expr_op_token(n.op) << ' ';
      print_node(*n.right, os, true);
      if (parenthesize) os << ')';
      break;
    case ExprNode::Kind::fold:
      os << "fold(" << expr_op_token(n.op) << ";";
      for (std::size_t i = 0; i < n.items.size(); ++i) {
        os << (i ? ", " : " ");
        print_node(*n.items[i], os, true);
      }
      os << ')';
      break;
  }
}

double must_be_number(FoldResult r, const char* where) {
  if (auto* v = std::get_if<double>(&r)) return *v;
  throw PreconditionViolated(std::string(where) +
                             ": operand evaluated to an undefined aggregate");
}

double apply_op(ExprOp op, const EvalContext& ctx, double a, double b) {
  switch (op) {
    case ExprOp::pseudo_add: return pseudo_add(ctx.add, a, b);
    case ExprOp::pseudo_mul: return pseudo_mul(ctx.mul, a, b);
    case ExprOp::sym_max_op: return sym_max(a, b);
    case ExprOp::sym_min_op: return sym_min(a, b);
  }
  throw PreconditionViolated("unreachable operator");
}

}  // namespace

ExprPtr parse_expression(const std::string& text) { return Parser(text).parse(); }

std::string print_expression(const ExprNode& ast) {
  std::ostringstream os;
  print_node(ast, os, false);
  return os.str();
}

FoldResult eval_expression(const ExprNode& ast, const EvalContext& ctx) {
  switch (ast.kind) {
    case ExprNode::Kind::literal:
      return ast.value;
    case ExprNode::Kind::binary: {
      const double a = must_be_number(eval_expression(*ast.left, ctx), "binary operator");
      const double b = must_be_number(eval_expression(*ast.right, ctx), "binary operator");
      return apply_op(ast.op, ctx, a, b);
    }
    case ExprNode::Kind::fold: {
      std::vector<double> values;
      values.reserve(ast.items.size());
      for (const auto& item : ast.items)
        values.push_back(must_be_number(eval_expression(*item, ctx), "fold"));
      if (ast.op == ExprOp::sym_max_op) return sym_max_fold(values);
      if (values.empty()) throw EmptyList("fold over an empty list");
      double acc = values[0];
      for (std::size_t i = 1; i < values.size(); ++i)
        acc = apply_op(ast.op, ctx, acc, values[i]);
      return acc;
    }
  }
  throw PreconditionViolated("unreachable node kind");
}

}  // namespace bsa
