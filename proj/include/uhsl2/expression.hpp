#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

#include "uhsl2/element.hpp"
#include "uhsl2/numeric.hpp"

namespace uhsl2 {

struct Expression;
using ExprPtr = std::shared_ptr<const Expression>;

namespace expr {

struct Literal {
  Rational value;
};
struct Generator {
  Color color;
};
struct DividedMono {
  NormalMonomial exponents;
};
struct Exp {
  Color color;
};
struct Sum {
  ExprPtr lhs, rhs;
};
struct StarProduct {
  ExprPtr lhs, rhs;
};
struct ScalarMul {
  Rational scalar;
  ExprPtr operand;
};
struct Negate {
  ExprPtr operand;
};

}  // namespace expr

/// Immutable abstract syntax tree for algebra expressions.
struct Expression {
  using Node = std::variant<expr::Literal, expr::Generator, expr::DividedMono, expr::Exp,
                            expr::Sum, expr::StarProduct, expr::ScalarMul, expr::Negate>;
  Node node;
};

// Constructors for building trees by hand.
ExprPtr make_literal(const Rational& q);
ExprPtr make_generator(Color c);
ExprPtr make_divided(const NormalMonomial& m);
ExprPtr make_exp(Color c);
ExprPtr make_sum(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_star(ExprPtr lhs, ExprPtr rhs);
ExprPtr make_scalar_mul(const Rational& q, ExprPtr operand);
ExprPtr make_negate(ExprPtr operand);

/// Structural equality of trees.
bool equal(const Expression& a, const Expression& b);

/// Syntax error carrying the byte offset where parsing failed.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Grammar:
///   expr   := term (('+' | '-') term)*
///   term   := factor ('*' factor)*
///   factor := rational | gen | 'm(' nat ',' nat ',' nat ',' nat ')'
///           | 'exp(' gen ')' | '(' expr ')' | '-' factor
///   gen    := 'x' | 'y' | 'z' | 'h'
/// '*' is the noncommutative product; juxtaposition is an error. A leading
/// literal in a product chain becomes a ScalarMul, `a - b` becomes
/// Sum(a, Negate(b)) and a '-' directly before a number is part of it.
ExprPtr parse(std::string_view text);

/// Prints text that parses back to the same tree.
std::string to_string(const Expression& e);

bool contains_exp(const Expression& e);

/// Bottom-up evaluation; exp(.) nodes need a cap and throw UsageError
/// without one. With a cap every intermediate is truncated to it.
Element eval(const Expression& e, std::optional<unsigned> cap);

}  // namespace uhsl2
