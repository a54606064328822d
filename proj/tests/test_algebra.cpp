#include <catch_amalgamated.hpp>

#include <random>

#include "support/random.hpp"
#include "support/series.hpp"
#include "uhsl2/algebra.hpp"
#include "uhsl2/combinatorics.hpp"
#include "uhsl2/verify.hpp"

using namespace uhsl2;

namespace {

const NormalMonomial X{1, 0, 0, 0}, Y{0, 1, 0, 0}, Z{0, 0, 1, 0}, H{0, 0, 0, 1};

Element elem(std::initializer_list<std::pair<NormalMonomial, int>> terms) {
  Element e;
  for (const auto& [m, c] : terms) e.accumulate(m, c);
  return e;
}

}  // namespace

TEST_CASE("defining relations", "[algebra]") {
  CHECK(mono_star_mono(Y, X) == elem({{{1, 1, 0, 0}, 1}, {{1, 0, 0, 1}, 2}}));
  CHECK(mono_star_mono(Z, X) == elem({{{1, 0, 1, 0}, 1}, {{0, 1, 0, 1}, -1}}));
  CHECK(mono_star_mono(Z, Y) == elem({{{0, 1, 1, 0}, 1}, {{0, 0, 1, 1}, 2}}));
  CHECK(mono_star_mono(X, Y) == elem({{{1, 1, 0, 0}, 1}}));
  CHECK(mono_star_mono(X, Z) == elem({{{1, 0, 1, 0}, 1}}));
  CHECK(mono_star_mono(Y, Z) == elem({{{0, 1, 1, 0}, 1}}));
}

TEST_CASE("worked products", "[algebra]") {
  CHECK(mono_star_mono(Z, {2, 0, 0, 0}) == expected_z_times_x2());
  CHECK(mono_star_mono({0, 0, 2, 0}, {2, 0, 0, 0}) == expected_z2_times_x2());

  CHECK(structural_coefficient({0, 1, 0, 0}, X, {1, 0, 0, 1}) == 2);
  CHECK(structural_coefficient(Z, X, {0, 1, 0, 1}) == -1);
  CHECK(structural_coefficient({0, 0, 2, 0}, {2, 0, 0, 0}, {0, 1, 0, 3}) == 3);
  CHECK(structural_coefficient(Z, X, {5, 5, 5, 5}) == 0);
}

TEST_CASE("index assignments", "[algebra]") {
  SECTION("every assignment reads back its inputs and satisfies the constraint") {
    const NormalMonomial l{1, 2, 3, 1}, r{3, 1, 2, 2};
    std::size_t count = 0;
    for_each_assignment(l, r, [&](const ProductIndexAssignment& p) {
      ++count;
      CHECK(p.left_input() == l);
      CHECK(p.right_input() == r);
      CHECK(p.y_created + p.h_ordered == p.h_exchanged);
      CHECK(p.output().degree() == l.degree() + r.degree());
    });
    // (v, w) pairs with w <= v <= 3, times 3 * 2 splits of the y's.
    CHECK(count == 10 * 3 * 2);
  }
  SECTION("the z x^2/2! expansion term by term") {
    // One z-x exchange that creates a y: the x y h term.
    ProductIndexAssignment p;
    p.x_left = 0;
    p.x_right = 1;
    p.y_created = 1;
    p.h_exchanged = 1;
    CHECK(p.left_input() == Z);
    CHECK(p.right_input() == NormalMonomial{2, 0, 0, 0});
    CHECK(p.output() == NormalMonomial{1, 1, 0, 1});
    CHECK(p.weight() == -1);
  }
}

TEST_CASE("two-generator normal orderings", "[algebra]") {
  for (unsigned a = 0; a <= 5; ++a)
    for (unsigned b = 0; b <= 5; ++b) {
      INFO("a=" << a << " b=" << b);
      CHECK(mono_star_mono({0, 0, a, 0}, {0, b, 0, 0}) == normal_order_zy(a, b));
      CHECK(mono_star_mono({0, a, 0, 0}, {b, 0, 0, 0}) == normal_order_yx(a, b));
      CHECK(mono_star_mono({0, 0, a, 0}, {b, 0, 0, 0}) == normal_order_zx(a, b));
      CHECK(normal_order_zx(a, b) == normal_order_zx_binomial_form(a, b));
    }
}

TEST_CASE("unit and centrality", "[algebra][property]") {
  std::mt19937_64 rng(20240611);
  const Element one = Element::unit();
  const Element h = Element::monomial(H);
  for (int i = 0; i < 50; ++i) {
    const Element f = testsupport::random_element(rng, 4);
    CHECK(star(one, f) == f);
    CHECK(star(f, one) == f);
    CHECK(star(h, f) == star(f, h));
  }
}

TEST_CASE("associativity", "[algebra][property]") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 60; ++i) {
    const Element f = testsupport::random_element(rng, 3);
    const Element g = testsupport::random_element(rng, 3);
    const Element e = testsupport::random_element(rng, 3);
    CHECK(star(star(f, g), e) == star(f, star(g, e)));
  }
}

TEST_CASE("bilinearity", "[algebra][property]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const Element f = testsupport::random_element(rng, 3);
    const Element g = testsupport::random_element(rng, 3);
    const Element e = testsupport::random_element(rng, 3);
    CHECK(star(f + g, e) == star(f, e) + star(g, e));
    CHECK(star(e, scalar_mul(Rational(-3, 2), f)) == scalar_mul(Rational(-3, 2), star(e, f)));
  }
}

TEST_CASE("grading", "[algebra][property]") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    const NormalMonomial l = testsupport::random_monomial(rng, 5);
    const NormalMonomial r = testsupport::random_monomial(rng, 5);
    const Element product = mono_star_mono(l, r);
    for (const auto& [m, c] : product.terms()) {
      CHECK(m.degree() == l.degree() + r.degree());
    }
  }
}

TEST_CASE("caps truncate consistently", "[algebra]") {
  const Element f = exp_series(Color::Z, 5);
  const Element g = exp_series(Color::X, 5);
  const Element capped = star(f, g);
  CHECK(capped.cap() == 5u);
  auto uncapped = [](const Element& e) {
    Element out;
    for (const auto& [m, c] : e.terms()) out.accumulate(m, c);
    return out;
  };
  const Element full = star(uncapped(f), uncapped(g));
  CHECK_FALSE(full.cap().has_value());
  CHECK(full.size() > capped.size());
  CHECK(capped == full.truncated(5));
}

TEST_CASE("products of exponentials", "[algebra]") {
  using testsupport::Series;
  constexpr unsigned cap = 5;
  const Series x = Series::variable(cap, Color::X), y = Series::variable(cap, Color::Y);
  const Series z = Series::variable(cap, Color::Z), two_h = Series::variable(cap, Color::H, 2);

  SECTION("e^y * e^x = e^{x e^{2h}} e^y") {
    const Element want = (exp(x * exp(two_h)) * exp(y)).to_divided();
    CHECK(star(exp_series(Color::Y, cap), exp_series(Color::X, cap)) == want);
  }
  SECTION("e^z * e^y = e^y e^{z e^{2h}}") {
    const Element want = (exp(y) * exp(z * exp(two_h))).to_divided();
    CHECK(star(exp_series(Color::Z, cap), exp_series(Color::Y, cap)) == want);
  }
  SECTION("e^z * e^x is the signed double sum") {
    Element want(cap);
    for (unsigned a = 0; a <= cap; ++a)
      for (unsigned c = 0; a + c <= cap; ++c)
        for (unsigned v = 0; v <= cap; ++v)
          for (unsigned w = 0; w <= v; ++w) {
            Integer k = factorial(v - w) * falling_factorial(Integer(v + w), w) *
                        shifted_elem(Integer(a + c), w, v);
            if (v % 2) k = -k;
            want.accumulate({a, v - w, c, v + w}, k);
          }
    CHECK(star(exp_series(Color::Z, cap), exp_series(Color::X, cap)) == want);
  }
}
