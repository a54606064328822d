#include "uhsl2/element.hpp"

#include <sstream>

namespace uhsl2 {

char color_letter(Color c) {
  switch (c) {
    case Color::X: return 'X';
    case Color::Y: return 'Y';
    case Color::Z: return 'Z';
    case Color::H: return 'H';
  }
  return '?';
}

unsigned NormalMonomial::exponent(Color c) const {
  switch (c) {
    case Color::X: return x;
    case Color::Y: return y;
    case Color::Z: return z;
    case Color::H: return h;
  }
  return 0;
}

NormalMonomial NormalMonomial::of_color(Color c, unsigned power) {
  NormalMonomial m;
  switch (c) {
    case Color::X: m.x = power; break;
    case Color::Y: m.y = power; break;
    case Color::Z: m.z = power; break;
    case Color::H: m.h = power; break;
  }
  return m;
}

std::ostream& operator<<(std::ostream& os, const NormalMonomial& m) {
  return os << '(' << m.x << ',' << m.y << ',' << m.z << ',' << m.h << ')';
}

Element Element::unit(std::optional<unsigned> cap) {
  return monomial(NormalMonomial{}, 1, cap);
}

Element Element::monomial(const NormalMonomial& m, const Rational& coeff,
                          std::optional<unsigned> cap) {
  Element e(cap);
  e.accumulate(m, coeff);
  return e;
}

Element Element::scalar(const Rational& q, std::optional<unsigned> cap) {
  return monomial(NormalMonomial{}, q, cap);
}

Rational Element::coefficient(const NormalMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Element::accumulate(const NormalMonomial& m, const Rational& c) {
  if (c == 0) return;
  if (cap_ && m.degree() > *cap_) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Element Element::truncated(std::optional<unsigned> cap) const {
  std::optional<unsigned> effective = cap_;
  if (cap && (!effective || *cap < *effective)) effective = cap;
  Element out(effective);
  for (const auto& [m, c] : terms_) out.accumulate(m, c);
  return out;
}

std::optional<unsigned> combine_caps(std::optional<unsigned> a, std::optional<unsigned> b) {
  if (a && b && *a != *b) {
    std::ostringstream msg;
    msg << "degree cap mismatch: " << *a << " vs " << *b;
    throw UsageError(msg.str());
  }
  return a ? a : b;
}

Element add(const Element& f, const Element& g) {
  Element out(combine_caps(f.cap(), g.cap()));
  for (const auto& [m, c] : f.terms()) out.accumulate(m, c);
  for (const auto& [m, c] : g.terms()) out.accumulate(m, c);
  return out;
}

Element negate(const Element& f) {
  Element out(f.cap());
  for (const auto& [m, c] : f.terms()) out.accumulate(m, -c);
  return out;
}

Element scalar_mul(const Rational& q, const Element& f) {
  Element out(f.cap());
  if (q == 0) return out;
  for (const auto& [m, c] : f.terms()) out.accumulate(m, q * c);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Element& f) {
  os << '{';
  bool first = true;
  for (const auto& [m, c] : f.terms()) {
    if (!first) os << ", ";
    first = false;
    os << m << ": " << c;
  }
  return os << '}';
}

}  // namespace uhsl2
