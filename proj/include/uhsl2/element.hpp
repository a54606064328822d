#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <ostream>

#include "uhsl2/numeric.hpp"

namespace uhsl2 {

enum class Color : std::uint8_t { X = 0, Y = 1, Z = 2, H = 3 };

char color_letter(Color c);  // 'X', 'Y', 'Z', 'H'

/// Exponent tuple of the divided-power basis monomial
/// x^x y^y z^z h^h / (x! y! z! h!).
struct NormalMonomial {
  unsigned x = 0;
  unsigned y = 0;
  unsigned z = 0;
  unsigned h = 0;

  unsigned degree() const { return x + y + z + h; }
  unsigned exponent(Color c) const;
  static NormalMonomial of_color(Color c, unsigned power);

  friend auto operator<=>(const NormalMonomial&, const NormalMonomial&) = default;
};

std::ostream& operator<<(std::ostream& os, const NormalMonomial& m);

/// Finitely supported linear combination of divided-power basis monomials
/// with exact rational coefficients. When a degree cap is present, no
/// monomial of higher total degree is ever stored.
class Element {
 public:
  using Terms = std::map<NormalMonomial, Rational>;

  Element() = default;
  explicit Element(std::optional<unsigned> cap) : cap_(cap) {}

  static Element unit(std::optional<unsigned> cap = std::nullopt);
  static Element monomial(const NormalMonomial& m, const Rational& coeff = 1,
                          std::optional<unsigned> cap = std::nullopt);
  static Element scalar(const Rational& q, std::optional<unsigned> cap = std::nullopt);

  const Terms& terms() const { return terms_; }
  std::optional<unsigned> cap() const { return cap_; }
  Rational coefficient(const NormalMonomial& m) const;
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Adds c to the coefficient of m, dropping it if it leaves the cap.
  void accumulate(const NormalMonomial& m, const Rational& c);

  // Same element with a (possibly tighter) cap applied.
  Element truncated(std::optional<unsigned> cap) const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.terms_ == b.terms_;
  }

 private:
  Terms terms_;
  std::optional<unsigned> cap_;
};

/// Cap of a binary result. Absent caps defer to the other operand; two
/// different explicit caps are a UsageError.
std::optional<unsigned> combine_caps(std::optional<unsigned> a, std::optional<unsigned> b);

Element add(const Element& f, const Element& g);
Element negate(const Element& f);
Element scalar_mul(const Rational& q, const Element& f);

inline Element operator+(const Element& f, const Element& g) { return add(f, g); }
inline Element operator-(const Element& f) { return negate(f); }
inline Element operator-(const Element& f, const Element& g) { return add(f, negate(g)); }

std::ostream& operator<<(std::ostream& os, const Element& f);

}  // namespace uhsl2
