#pragma once

#include <map>
#include <ostream>
#include <utility>

#include "uhsl2/numeric.hpp"

namespace uhsl2 {

/// Polynomial with integer coefficients in two commuting indeterminates y, h.
/// Zero coefficients are never stored.
class BiPoly {
 public:
  using Exponents = std::pair<unsigned, unsigned>;  // (y-degree, h-degree)

  BiPoly() = default;
  BiPoly(const Integer& constant);  // NOLINT: integers embed as constants
  BiPoly(int constant) : BiPoly(Integer(constant)) {}  // NOLINT

  static BiPoly y() { return monomial(1, 0, 1); }
  static BiPoly h() { return monomial(0, 1, 1); }
  static BiPoly monomial(unsigned y_deg, unsigned h_deg, const Integer& coeff);

  const std::map<Exponents, Integer>& terms() const { return terms_; }
  Integer coefficient(unsigned y_deg, unsigned h_deg) const;
  bool is_zero() const { return terms_.empty(); }

  BiPoly& operator+=(const BiPoly& other);
  BiPoly& operator-=(const BiPoly& other);
  BiPoly& operator*=(const BiPoly& other);

  friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
  friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
  friend BiPoly operator*(BiPoly a, const BiPoly& b) { return a *= b; }
  friend BiPoly operator-(const BiPoly& a) { return BiPoly() - a; }
  friend bool operator==(const BiPoly&, const BiPoly&) = default;

 private:
  void accumulate(const Exponents& e, const Integer& c);

  std::map<Exponents, Integer> terms_;
};

std::ostream& operator<<(std::ostream& os, const BiPoly& p);

}  // namespace uhsl2
