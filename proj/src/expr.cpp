#include "fracmax/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <memory>
#include <string>
#include <utility>

#include "fracmax/errors.hpp"

namespace fracmax {

struct Expression::Node {
  enum class Kind { Number, Var, Add, Sub, Mul, Div, Pow, Neg, Exp, Ln };

  Kind kind;
  double value = 0.0;
  std::shared_ptr<const Node> lhs, rhs;
};

namespace {

using Node = Expression::Node;
using NodePtr = std::shared_ptr<const Node>;

NodePtr make_node(Node::Kind kind, NodePtr lhs = nullptr, NodePtr rhs = nullptr) {
  auto n = std::make_shared<Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

NodePtr make_number(double v) {
  auto n = std::make_shared<Node>();
  n->kind = Node::Kind::Number;
  n->value = v;
  return n;
}

double eval_node(const Node& n, double x) {
  switch (n.kind) {
    case Node::Kind::Number: return n.value;
    case Node::Kind::Var: return x;
    case Node::Kind::Add: return eval_node(*n.lhs, x) + eval_node(*n.rhs, x);
    case Node::Kind::Sub: return eval_node(*n.lhs, x) - eval_node(*n.rhs, x);
    case Node::Kind::Mul: return eval_node(*n.lhs, x) * eval_node(*n.rhs, x);
    case Node::Kind::Div: return eval_node(*n.lhs, x) / eval_node(*n.rhs, x);
    case Node::Kind::Pow: return std::pow(eval_node(*n.lhs, x), eval_node(*n.rhs, x));
    case Node::Kind::Neg: return -eval_node(*n.lhs, x);
    case Node::Kind::Exp: return std::exp(eval_node(*n.lhs, x));
    case Node::Kind::Ln: return std::log(eval_node(*n.lhs, x));
  }
  return 0.0;
}

class Parser {
public:
  explicit Parser(const std::string& text) : text_(text) {}

  NodePtr run() {
    NodePtr root = parse_expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return root;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ExprParseError("expression error at offset " + std::to_string(pos_) + ": " + msg,
                         pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  NodePtr parse_expr() {
    NodePtr lhs = parse_term();
    for (;;) {
      if (eat('+'))
        lhs = make_node(Node::Kind::Add, lhs, parse_term());
      else if (eat('-'))
        lhs = make_node(Node::Kind::Sub, lhs, parse_term());
      else
        return lhs;
    }
  }

  NodePtr parse_term() {
    NodePtr lhs = parse_unary();
    for (;;) {
      if (eat('*'))
        lhs = make_node(Node::Kind::Mul, lhs, parse_unary());
      else if (eat('/'))
        lhs = make_node(Node::Kind::Div, lhs, parse_unary());
      else
        return lhs;
    }
  }

  NodePtr parse_unary() {
    if (eat('-')) return make_node(Node::Kind::Neg, parse_unary());
    return parse_power();
  }

  NodePtr parse_power() {
    NodePtr base = parse_primary();
    if (eat('^')) return make_node(Node::Kind::Pow, base, parse_unary());
    return base;
  }

  NodePtr parse_primary() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      NodePtr inner = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return parse_number();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_ident();
    if (c == '\0') fail("unexpected end of expression");
    fail(std::string("unexpected character '") + c + "'");
  }

  NodePtr parse_number() {
    skip_ws();
    double value = 0.0;
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    auto res = std::from_chars(begin, end, value);
    if (res.ec != std::errc{}) fail("malformed number");
    pos_ = static_cast<std::size_t>(res.ptr - text_.data());
    return make_number(value);
  }

  NodePtr parse_ident() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalnum(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    const std::string name = text_.substr(start, pos_ - start);
    if (name == "x") return make_node(Node::Kind::Var);
    if (name == "pi") return make_number(3.141592653589793);
    if (name == "e") return make_number(2.718281828459045);
    if (name == "exp" || name == "ln") {
      if (!eat('(')) fail("expected '(' after " + name);
      NodePtr arg = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return make_node(name == "exp" ? Node::Kind::Exp : Node::Kind::Ln, arg);
    }
    pos_ = start;
    fail("unknown identifier '" + name + "'");
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression::Expression(std::shared_ptr<const Node> root, std::string text)
    : root_(std::move(root)), text_(std::move(text)) {}

Expression Expression::parse(const std::string& text) {
  Parser parser(text);
  return Expression(parser.run(), text);
}

double Expression::operator()(double x) const { return eval_node(*root_, x); }

}  // namespace fracmax
