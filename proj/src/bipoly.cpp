#include "uhsl2/bipoly.hpp"

namespace uhsl2 {

BiPoly::BiPoly(const Integer& constant) {
  if (constant != 0) terms_.emplace(Exponents{0, 0}, constant);
}

BiPoly BiPoly::monomial(unsigned y_deg, unsigned h_deg, const Integer& coeff) {
  BiPoly p;
  p.accumulate({y_deg, h_deg}, coeff);
  return p;
}

Integer BiPoly::coefficient(unsigned y_deg, unsigned h_deg) const {
  auto it = terms_.find({y_deg, h_deg});
  return it == terms_.end() ? Integer(0) : it->second;
}

void BiPoly::accumulate(const Exponents& e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BiPoly& BiPoly::operator+=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) accumulate(e, c);
  return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& other) {
  for (const auto& [e, c] : other.terms_) accumulate(e, -c);
  return *this;
}

BiPoly& BiPoly::operator*=(const BiPoly& other) {
  BiPoly product;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : other.terms_) {
      product.accumulate({e1.first + e2.first, e1.second + e2.second}, c1 * c2);
    }
  }
  terms_ = std::move(product.terms_);
  return *this;
}

std::ostream& operator<<(std::ostream& os, const BiPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (const auto& [e, c] : p.terms()) {
    if (!first) os << " + ";
    first = false;
    os << c;
    if (e.first) os << "*y^" << e.first;
    if (e.second) os << "*h^" << e.second;
  }
  return os;
}

}  // namespace uhsl2
