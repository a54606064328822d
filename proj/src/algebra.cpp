#include "uhsl2/algebra.hpp"

#include <algorithm>
#include <sstream>

#include "uhsl2/combinatorics.hpp"

namespace uhsl2 {

NormalMonomial ProductIndexAssignment::left_input() const {
  return {x_left, y_left + h_from_yx, z_left + h_exchanged, h_left};
}

NormalMonomial ProductIndexAssignment::right_input() const {
  return {x_right + h_exchanged, y_right + h_from_zy, z_right, h_right};
}

NormalMonomial ProductIndexAssignment::output() const {
  return {x_left + x_right, y_left + y_right + y_created, z_left + z_right,
          h_left + h_right + h_exchanged + h_ordered + h_from_yx + h_from_zy};
}

Integer ProductIndexAssignment::weight() const {
  Integer w = multinomial({x_left, x_right});
  w *= multinomial({y_left, y_right, y_created});
  w *= multinomial({z_left, z_right});
  w *= multinomial({h_left, h_right, h_exchanged, h_ordered, h_from_yx, h_from_zy});
  w *= ipow(Integer(2 * x_right), h_from_yx);
  w *= ipow(Integer(2 * z_left), h_from_zy);
  w *= factorial(y_created);
  w *= factorial(h_ordered);
  w *= shifted_elem(Integer(z_left + x_right), h_ordered, h_exchanged);
  return (h_exchanged % 2 == 0) ? w : Integer(-w);
}

void for_each_assignment(const NormalMonomial& left, const NormalMonomial& right,
                         const std::function<void(const ProductIndexAssignment&)>& visit) {
  const unsigned max_exchanged = std::min(left.z, right.x);
  for (unsigned v = 0; v <= max_exchanged; ++v) {
    for (unsigned w = 0; w <= v; ++w) {
      for (unsigned i = 0; i <= left.y; ++i) {
        for (unsigned u = 0; u <= right.y; ++u) {
          ProductIndexAssignment p;
          p.x_left = left.x;
          p.x_right = right.x - v;
          p.y_left = left.y - i;
          p.y_right = right.y - u;
          p.y_created = v - w;
          p.z_left = left.z - v;
          p.z_right = right.z;
          p.h_left = left.h;
          p.h_right = right.h;
          p.h_exchanged = v;
          p.h_ordered = w;
          p.h_from_yx = i;
          p.h_from_zy = u;
          visit(p);
        }
      }
    }
  }
}

Element normal_order_zy(unsigned a, unsigned b) {
  Element out;
  for (unsigned k = 0; k <= b; ++k) {
    out.accumulate({0, b - k, a, k}, Rational(ipow(Integer(2 * a), k)));
  }
  return out;
}

Element normal_order_yx(unsigned a, unsigned b) {
  Element out;
  for (unsigned k = 0; k <= a; ++k) {
    out.accumulate({b, a - k, 0, k}, Rational(ipow(Integer(2 * b), k)));
  }
  return out;
}

Element normal_order_zx(unsigned a, unsigned b) {
  Element out;
  const unsigned top = std::min(a, b);
  for (unsigned v = 0; v <= top; ++v) {
    for (unsigned w = 0; w <= v; ++w) {
      Integer c = factorial(v - w) * falling_factorial(Integer(v + w), w) *
                  shifted_elem(Integer(a + b - 2 * v), w, v);
      if (v % 2 == 1) c = -c;
      out.accumulate({b - v, v - w, a - v, v + w}, Rational(c));
    }
  }
  return out;
}

Element normal_order_zx_binomial_form(unsigned a, unsigned b) {
  Element out;
  const unsigned top = std::min(a, b);
  for (unsigned v = 0; v <= top; ++v) {
    for (unsigned w = 0; w <= v; ++w) {
      Integer c = factorial(v - w) * binomial(v + w, w) * factorial(w) *
                  shifted_elem(Integer(a + b - 2 * v), w, v);
      if (v % 2 == 1) c = -c;
      out.accumulate({b - v, v - w, a - v, v + w}, Rational(c));
    }
  }
  return out;
}

Element mono_star_mono(const NormalMonomial& left, const NormalMonomial& right) {
  std::map<NormalMonomial, Integer> acc;
  for_each_assignment(left, right, [&](const ProductIndexAssignment& p) {
    Integer w = p.weight();
    if (w != 0) acc[p.output()] += w;
  });
  Element out;
  for (const auto& [m, c] : acc) out.accumulate(m, Rational(c));
  return out;
}

Element star(const Element& f, const Element& g) {
  Element out(combine_caps(f.cap(), g.cap()));
  const auto cap = out.cap();
  for (const auto& [m1, c1] : f.terms()) {
    for (const auto& [m2, c2] : g.terms()) {
      if (cap && m1.degree() + m2.degree() > *cap) continue;
      const Rational scale = c1 * c2;
      const Element product = mono_star_mono(m1, m2);
      for (const auto& [m, c] : product.terms()) {
        out.accumulate(m, scale * c);
      }
    }
  }
  return out;
}

Integer structural_coefficient(const NormalMonomial& left, const NormalMonomial& right,
                               const NormalMonomial& out) {
  const Rational c = mono_star_mono(left, right).coefficient(out);
  if (!is_integral(c)) {
    std::ostringstream msg;
    msg << "non-integral structural coefficient " << c << " for " << left << " * " << right
        << " -> " << out;
    throw IntegralityViolation(msg.str());
  }
  return numerator(c);
}

Element exp_series(Color color, unsigned cap) {
  Element out(cap);
  for (unsigned k = 0; k <= cap; ++k) out.accumulate(NormalMonomial::of_color(color, k), 1);
  return out;
}

Element generator(Color color, std::optional<unsigned> cap) {
  return Element::monomial(NormalMonomial::of_color(color, 1), 1, cap);
}

}  // namespace uhsl2
