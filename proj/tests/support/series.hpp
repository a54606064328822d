#pragma once

// Truncated power series in four commuting variables x, y, z, h. Used as an
// independent reference for products of exponentials: ordinary commutative
// multiplication only, nothing from the star product.

#include <array>
#include <map>

#include "uhsl2/element.hpp"
#include "uhsl2/numeric.hpp"

namespace testsupport {

using uhsl2::Rational;

class Series {
 public:
  using Key = std::array<unsigned, 4>;

  explicit Series(unsigned cap) : cap_(cap) {}

  static Series constant(unsigned cap, const Rational& c) {
    Series s(cap);
    s.add({0, 0, 0, 0}, c);
    return s;
  }
  static Series variable(unsigned cap, uhsl2::Color c, const Rational& scale = 1) {
    Series s(cap);
    Key k{};
    k[static_cast<int>(c)] = 1;
    s.add(k, scale);
    return s;
  }

  void add(const Key& k, const Rational& c) {
    if (k[0] + k[1] + k[2] + k[3] > cap_ || c == 0) return;
    Rational& slot = terms_[k];
    slot += c;
    if (slot == 0) terms_.erase(k);
  }

  friend Series operator+(const Series& a, const Series& b) {
    Series out = a;
    for (const auto& [k, c] : b.terms_) out.add(k, c);
    return out;
  }

  friend Series operator*(const Series& a, const Series& b) {
    Series out(a.cap_);
    for (const auto& [k1, c1] : a.terms_)
      for (const auto& [k2, c2] : b.terms_)
        out.add({k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2], k1[3] + k2[3]}, c1 * c2);
    return out;
  }

  Series scaled(const Rational& q) const {
    Series out(cap_);
    for (const auto& [k, c] : terms_) out.add(k, q * c);
    return out;
  }

  // exp(s) = sum_k s^k / k!, for s without constant term.
  friend Series exp(const Series& s) {
    Series out = constant(s.cap_, 1);
    Series power = constant(s.cap_, 1);
    for (unsigned k = 1; k <= s.cap_; ++k) {
      power = power * s;
      out = out + power.scaled(Rational(1, uhsl2::factorial(k)));
    }
    return out;
  }

  // Coordinates in the divided-power basis: multiply by a! b! c! d!.
  uhsl2::Element to_divided() const {
    uhsl2::Element out(cap_);
    for (const auto& [k, c] : terms_) {
      const Rational scale = uhsl2::factorial(k[0]) * uhsl2::factorial(k[1]) *
                             uhsl2::factorial(k[2]) * uhsl2::factorial(k[3]);
      out.accumulate({k[0], k[1], k[2], k[3]}, c * scale);
    }
    return out;
  }

 private:
  unsigned cap_;
  std::map<Key, Rational> terms_;
};

}  // namespace testsupport
