#include "uhsl2/expression.hpp"

#include <cctype>
#include <limits>

#include "uhsl2/algebra.hpp"

namespace uhsl2 {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

ExprPtr wrap(Expression::Node node) {
  return std::make_shared<const Expression>(Expression{std::move(node)});
}

char gen_letter(Color c) { return static_cast<char>(color_letter(c) - 'A' + 'a'); }

}  // namespace

ExprPtr make_literal(const Rational& q) { return wrap(expr::Literal{q}); }
ExprPtr make_generator(Color c) { return wrap(expr::Generator{c}); }
ExprPtr make_divided(const NormalMonomial& m) { return wrap(expr::DividedMono{m}); }
ExprPtr make_exp(Color c) { return wrap(expr::Exp{c}); }
ExprPtr make_sum(ExprPtr lhs, ExprPtr rhs) {
  return wrap(expr::Sum{std::move(lhs), std::move(rhs)});
}
ExprPtr make_star(ExprPtr lhs, ExprPtr rhs) {
  return wrap(expr::StarProduct{std::move(lhs), std::move(rhs)});
}
ExprPtr make_scalar_mul(const Rational& q, ExprPtr operand) {
  return wrap(expr::ScalarMul{q, std::move(operand)});
}
ExprPtr make_negate(ExprPtr operand) { return wrap(expr::Negate{std::move(operand)}); }

bool equal(const Expression& a, const Expression& b) {
  if (a.node.index() != b.node.index()) return false;
  return std::visit(
      overloaded{
          [&](const expr::Literal& x) { return x.value == std::get<expr::Literal>(b.node).value; },
          [&](const expr::Generator& x) {
            return x.color == std::get<expr::Generator>(b.node).color;
          },
          [&](const expr::DividedMono& x) {
            return x.exponents == std::get<expr::DividedMono>(b.node).exponents;
          },
          [&](const expr::Exp& x) { return x.color == std::get<expr::Exp>(b.node).color; },
          [&](const expr::Sum& x) {
            const auto& y = std::get<expr::Sum>(b.node);
            return equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
          },
          [&](const expr::StarProduct& x) {
            const auto& y = std::get<expr::StarProduct>(b.node);
            return equal(*x.lhs, *y.lhs) && equal(*x.rhs, *y.rhs);
          },
          [&](const expr::ScalarMul& x) {
            const auto& y = std::get<expr::ScalarMul>(b.node);
            return x.scalar == y.scalar && equal(*x.operand, *y.operand);
          },
          [&](const expr::Negate& x) {
            return equal(*x.operand, *std::get<expr::Negate>(b.node).operand);
          },
      },
      a.node);
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position) {}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    skip_ws();
    if (pos_ < text_.size()) {
      fail(std::string("unexpected '") + text_[pos_] + "' (products need an explicit '*')");
    }
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  void expect(char c) {
    if (!peek(c)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "', got end of input");
      fail(std::string("expected '") + c + "', got '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  bool at_digit() const {
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }

  Integer parse_digits() {
    if (!at_digit()) fail("expected a number");
    const std::size_t start = pos_;
    while (at_digit()) ++pos_;
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned parse_nat() {
    skip_ws();
    const std::size_t start = pos_;
    Integer v = parse_digits();
    if (v > std::numeric_limits<unsigned>::max()) throw ParseError("exponent too large", start);
    return v.convert_to<unsigned>();
  }

  Rational parse_rational(bool negative) {
    const Integer num = parse_digits();
    Integer den = 1;
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      const std::size_t at = pos_;
      den = parse_digits();
      if (den == 0) throw ParseError("zero denominator", at);
    }
    Rational q(num, den);
    return negative ? Rational(-q) : q;
  }

  std::optional<Color> generator_at(std::size_t p) const {
    if (p >= text_.size()) return std::nullopt;
    switch (text_[p]) {
      case 'x': return Color::X;
      case 'y': return Color::Y;
      case 'z': return Color::Z;
      case 'h': return Color::H;
    }
    return std::nullopt;
  }

  bool identifier_char(std::size_t p) const {
    return p < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[p])) || text_[p] == '_');
  }

  ExprPtr parse_expr() {
    ExprPtr acc = parse_term();
    while (true) {
      if (peek('+')) {
        ++pos_;
        acc = make_sum(acc, parse_term());
      } else if (peek('-')) {
        ++pos_;
        acc = make_sum(acc, make_negate(parse_term()));
      } else {
        return acc;
      }
    }
  }

  ExprPtr parse_term() {
    bool bare_literal = false;
    ExprPtr acc = parse_factor(&bare_literal);
    while (peek('*')) {
      ++pos_;
      ExprPtr rhs = parse_factor(nullptr);
      if (bare_literal) {
        acc = make_scalar_mul(std::get<expr::Literal>(acc->node).value, rhs);
        bare_literal = false;
      } else {
        acc = make_star(acc, rhs);
      }
    }
    return acc;
  }

  ExprPtr parse_factor(bool* bare_literal) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];

    if (c == '-') {
      ++pos_;
      skip_ws();
      if (at_digit()) {
        if (bare_literal) *bare_literal = true;
        return make_literal(parse_rational(true));
      }
      return make_negate(parse_factor(nullptr));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      if (bare_literal) *bare_literal = true;
      return make_literal(parse_rational(false));
    }
    if (c == '(') {
      ++pos_;
      ExprPtr inner = parse_expr();
      expect(')');
      return inner;
    }
    if (text_.substr(pos_, 3) == "exp" && !identifier_char(pos_ + 3)) {
      pos_ += 3;
      expect('(');
      skip_ws();
      auto g = generator_at(pos_);
      if (!g || identifier_char(pos_ + 1)) fail("exp(...) takes one of x, y, z, h");
      ++pos_;
      expect(')');
      return make_exp(*g);
    }
    if (c == 'm' && !identifier_char(pos_ + 1)) {
      ++pos_;
      expect('(');
      NormalMonomial m;
      m.x = parse_nat();
      expect(',');
      m.y = parse_nat();
      expect(',');
      m.z = parse_nat();
      expect(',');
      m.h = parse_nat();
      expect(')');
      return make_divided(m);
    }
    if (auto g = generator_at(pos_); g && !identifier_char(pos_ + 1)) {
      ++pos_;
      return make_generator(*g);
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

ExprPtr parse(std::string_view text) { return Parser(text).parse_all(); }

// ---------------------------------------------------------------------------
// Printer

namespace {

std::string print_expr(const Expression& e);
std::string print_term(const Expression& e);

std::string print_factor(const Expression& e) {
  return std::visit(
      overloaded{
          [](const expr::Literal& x) { return x.value.str(); },
          [](const expr::Generator& x) { return std::string(1, gen_letter(x.color)); },
          [](const expr::DividedMono& x) {
            const auto& m = x.exponents;
            return "m(" + std::to_string(m.x) + "," + std::to_string(m.y) + "," +
                   std::to_string(m.z) + "," + std::to_string(m.h) + ")";
          },
          [](const expr::Exp& x) { return std::string("exp(") + gen_letter(x.color) + ")"; },
          [](const expr::Negate& x) {
            // A literal right after '-' would merge into a negative number.
            if (std::holds_alternative<expr::Literal>(x.operand->node)) {
              return "-(" + print_factor(*x.operand) + ")";
            }
            return "-" + print_factor(*x.operand);
          },
          [&](const auto&) { return "(" + print_expr(e) + ")"; },
      },
      e.node);
}

std::string print_term(const Expression& e) {
  if (const auto* p = std::get_if<expr::StarProduct>(&e.node)) {
    // A bare leading literal would parse back as a ScalarMul.
    std::string left = std::holds_alternative<expr::Literal>(p->lhs->node)
                           ? "(" + print_factor(*p->lhs) + ")"
                           : print_term(*p->lhs);
    return left + " * " + print_factor(*p->rhs);
  }
  if (const auto* s = std::get_if<expr::ScalarMul>(&e.node)) {
    return s->scalar.str() + " * " + print_factor(*s->operand);
  }
  return print_factor(e);
}

std::string print_expr(const Expression& e) {
  if (const auto* s = std::get_if<expr::Sum>(&e.node)) {
    if (const auto* n = std::get_if<expr::Negate>(&s->rhs->node)) {
      return print_expr(*s->lhs) + " - " + print_term(*n->operand);
    }
    return print_expr(*s->lhs) + " + " + print_term(*s->rhs);
  }
  return print_term(e);
}

}  // namespace

std::string to_string(const Expression& e) { return print_expr(e); }

// ---------------------------------------------------------------------------
// Evaluation

bool contains_exp(const Expression& e) {
  return std::visit(
      overloaded{
          [](const expr::Exp&) { return true; },
          [](const expr::Sum& s) { return contains_exp(*s.lhs) || contains_exp(*s.rhs); },
          [](const expr::StarProduct& s) {
            return contains_exp(*s.lhs) || contains_exp(*s.rhs);
          },
          [](const expr::ScalarMul& s) { return contains_exp(*s.operand); },
          [](const expr::Negate& s) { return contains_exp(*s.operand); },
          [](const auto&) { return false; },
      },
      e.node);
}

Element eval(const Expression& e, std::optional<unsigned> cap) {
  return std::visit(
      overloaded{
          [&](const expr::Literal& x) { return Element::scalar(x.value, cap); },
          [&](const expr::Generator& x) { return generator(x.color, cap); },
          [&](const expr::DividedMono& x) { return Element::monomial(x.exponents, 1, cap); },
          [&](const expr::Exp& x) {
            if (!cap) {
              throw UsageError(std::string("exp(") + gen_letter(x.color) +
                               ") needs an explicit degree cap");
            }
            return exp_series(x.color, *cap);
          },
          [&](const expr::Sum& x) { return add(eval(*x.lhs, cap), eval(*x.rhs, cap)); },
          [&](const expr::StarProduct& x) { return star(eval(*x.lhs, cap), eval(*x.rhs, cap)); },
          [&](const expr::ScalarMul& x) { return scalar_mul(x.scalar, eval(*x.operand, cap)); },
          [&](const expr::Negate& x) { return negate(eval(*x.operand, cap)); },
      },
      e.node);
}

}  // namespace uhsl2
