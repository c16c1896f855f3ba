#pragma once

#include <memory>
#include <string>

namespace fracmax {

/// A parsed arithmetic expression in one variable. The grammar covers
/// +, -, *, /, ^ (right-associative), unary minus, exp(...), ln(...),
/// numeric literals, the constants pi and e, and the variable x.
class Expression {
public:
  /// Throws ExprParseError with the offending character offset.
  static Expression parse(const std::string& text);

  double operator()(double x) const;

  /// The original source text, kept verbatim for round-tripping.
  const std::string& text() const { return text_; }

  struct Node;

private:
  Expression(std::shared_ptr<const Node> root, std::string text);

  std::shared_ptr<const Node> root_;
  std::string text_;
};

}  // namespace fracmax
