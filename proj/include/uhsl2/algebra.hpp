#pragma once

#include <functional>
#include <optional>

#include "uhsl2/element.hpp"
#include "uhsl2/numeric.hpp"

namespace uhsl2 {

/// One summand of the closed product formula for
///   (x^a y^b z^c h^d / ...) * (x^k y^l z^m h^n / ...).
///
/// Blocks are named by where they come from:
///   x_left, x_right         x-letters of the left / right factor that survive
///   y_left, y_right         y-letters of the left / right factor that survive
///   y_created               y-letters produced when z's pass x's
///   z_left, z_right         surviving z-letters
///   h_left, h_right         h-letters already present in each factor
///   h_exchanged             z-x pairs annihilated into an h (carries the sign)
///   h_ordered               extra h's from the z-x exchange, one per dot
///   h_from_yx, h_from_zy    h's created when y passes x, resp. z passes y
///
/// Constraint: y_created + h_ordered = h_exchanged.
struct ProductIndexAssignment {
  unsigned x_left = 0, x_right = 0;
  unsigned y_left = 0, y_right = 0, y_created = 0;
  unsigned z_left = 0, z_right = 0;
  unsigned h_left = 0, h_right = 0, h_exchanged = 0, h_ordered = 0, h_from_yx = 0,
           h_from_zy = 0;

  // Exponents of the left and right input monomials this assignment reads.
  NormalMonomial left_input() const;
  NormalMonomial right_input() const;
  NormalMonomial output() const;

  // The signed integer weight of this summand.
  Integer weight() const;

  friend bool operator==(const ProductIndexAssignment&,
                         const ProductIndexAssignment&) = default;
};

/// Calls `visit` once for every assignment whose inputs are (left, right).
/// h_exchanged is the outer loop, h_ordered <= h_exchanged the next; the
/// y/h splits for the y-x and z-y passes are the inner loops.
void for_each_assignment(const NormalMonomial& left, const NormalMonomial& right,
                         const std::function<void(const ProductIndexAssignment&)>& visit);

// z^a/a! * y^b/b! = sum_k (2a)^k y^{b-k}/(b-k)! z^a/a! h^k/k!
Element normal_order_zy(unsigned a, unsigned b);
// y^a/a! * x^b/b! = sum_k (2b)^k x^b/b! y^{a-k}/(a-k)! h^k/k!
Element normal_order_yx(unsigned a, unsigned b);
// z^a/a! * x^b/b!, double sum over 0 <= w <= v <= min(a,b) with the factor
// (-1)^v (v-w)! (v+w)_w (a+b-2v)^w_v.
Element normal_order_zx(unsigned a, unsigned b);
// Same sum with (v+w)_w rewritten as binom(v+w, w) w!.
Element normal_order_zx_binomial_form(unsigned a, unsigned b);

/// Product of two divided basis monomials via the closed formula.
Element mono_star_mono(const NormalMonomial& left, const NormalMonomial& right);

/// Bilinear extension of mono_star_mono. With a degree cap, pairs whose
/// total degree exceeds it are skipped (the product is graded).
Element star(const Element& f, const Element& g);

/// Coefficient of `out` in left * right. Throws IntegralityViolation if it
/// is not an integer.
Integer structural_coefficient(const NormalMonomial& left, const NormalMonomial& right,
                               const NormalMonomial& out);

/// sum_{k=0}^{cap} of the divided powers of one generator, capped at `cap`.
Element exp_series(Color color, unsigned cap);

/// Element with a single generator x, y, z or h.
Element generator(Color color, std::optional<unsigned> cap = std::nullopt);

}  // namespace uhsl2
