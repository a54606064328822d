#include "uhsl2/verify.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <sstream>
#include <thread>

#include "uhsl2/algebra.hpp"
#include "uhsl2/bipoly.hpp"
#include "uhsl2/combinatorics.hpp"
#include "uhsl2/rewrite.hpp"
#include "uhsl2/species.hpp"

namespace uhsl2 {

namespace {

std::vector<NormalMonomial> monomials_with_max_exponent(unsigned e) {
  std::vector<NormalMonomial> out;
  for (unsigned a = 0; a <= e; ++a)
    for (unsigned b = 0; b <= e; ++b)
      for (unsigned c = 0; c <= e; ++c)
        for (unsigned d = 0; d <= e; ++d) out.push_back({a, b, c, d});
  return out;
}

}  // namespace

OracleSweepReport oracle_sweep(unsigned max_exp, unsigned threads) {
  const std::vector<NormalMonomial> monos = monomials_with_max_exponent(max_exp);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  OracleSweepReport report;
  std::mutex mu;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    OracleSweepReport local;
    for (std::size_t i = next++; i < monos.size(); i = next++) {
      const NormalMonomial& left = monos[i];
      for (const NormalMonomial& right : monos) {
        ++local.pairs;
        const Element closed = mono_star_mono(left, right);
        const Element oracle = oracle_star(left, right);
        local.coefficients += oracle.size();
        for (const auto& [m, c] : oracle.terms()) {
          if (!is_integral(c)) ++local.integrality_violations;
        }
        if (closed != oracle) {
          ++local.mismatch_count;
          if (local.mismatches.size() < 8) local.mismatches.emplace_back(left, right);
        }
      }
    }
    std::lock_guard<std::mutex> lock(mu);
    report.pairs += local.pairs;
    report.coefficients += local.coefficients;
    report.mismatch_count += local.mismatch_count;
    report.integrality_violations += local.integrality_violations;
    for (auto& p : local.mismatches) {
      if (report.mismatches.size() < 8) report.mismatches.push_back(p);
    }
  };

  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  std::sort(report.mismatches.begin(), report.mismatches.end());
  return report;
}

Element expected_z_times_x2() {
  Element e;
  e.accumulate({2, 0, 1, 0}, 1);
  e.accumulate({1, 1, 0, 1}, -1);
  e.accumulate({1, 0, 0, 2}, -2);
  return e;
}

Element expected_z2_times_x2() {
  Element e;
  e.accumulate({2, 0, 2, 0}, 1);
  e.accumulate({1, 1, 1, 1}, -1);
  e.accumulate({1, 0, 1, 2}, -4);
  e.accumulate({0, 2, 0, 2}, 2);
  e.accumulate({0, 1, 0, 3}, 3);
  return e;
}

namespace {

std::string render(const Element& e) {
  std::ostringstream os;
  os << e;
  return os.str();
}

// Closed formula, rewrite oracle and species count against one expected product.
CheckResult three_paths(std::string name, const NormalMonomial& left,
                        const NormalMonomial& right, const FunctorSpec& f,
                        const FunctorSpec& g, const Element& expected) {
  const unsigned total = left.degree() + right.degree();
  const Element closed = mono_star_mono(left, right);
  const Element oracle = oracle_star(left, right);
  const Element species = species_product(f, g, total);

  CheckResult r{std::move(name), true, "closed formula, rewriting and species agree"};
  std::ostringstream why;
  if (closed != expected) why << "closed formula gave " << render(closed) << "; ";
  if (oracle != expected) why << "rewriting gave " << render(oracle) << "; ";
  if (species != expected) why << "species count gave " << render(species) << "; ";
  if (!why.str().empty()) {
    r.passed = false;
    r.detail = why.str() + "expected " + render(expected);
  }
  return r;
}

template <class Pred>
CheckResult sweep(std::string name, std::string scope, Pred&& holds) {
  std::string failure;
  const bool ok = holds(failure);
  return {std::move(name), ok, ok ? std::move(scope) : failure};
}

}  // namespace

std::vector<CheckResult> identity_catalog() {
  using functor::DividedPower;
  using functor::Singleton;
  std::vector<CheckResult> out;

  const NormalMonomial x{1, 0, 0, 0}, y{0, 1, 0, 0}, z{0, 0, 1, 0};
  {
    Element e;
    e.accumulate({1, 1, 0, 0}, 1);
    e.accumulate({1, 0, 0, 1}, 2);
    out.push_back(three_paths("yx = xy + 2xh", y, x, Singleton{Color::Y}, Singleton{Color::X}, e));
  }
  {
    Element e;
    e.accumulate({1, 0, 1, 0}, 1);
    e.accumulate({0, 1, 0, 1}, -1);
    out.push_back(three_paths("zx = xz - yh", z, x, Singleton{Color::Z}, Singleton{Color::X}, e));
  }
  {
    Element e;
    e.accumulate({0, 1, 1, 0}, 1);
    e.accumulate({0, 0, 1, 1}, 2);
    out.push_back(three_paths("zy = yz + 2zh", z, y, Singleton{Color::Z}, Singleton{Color::Y}, e));
  }
  {
    const NormalMonomial x2{2, 0, 0, 0}, z2{0, 0, 2, 0};
    out.push_back(three_paths("z * x^2/2! = x^2/2! z - xyh - 2x h^2/2!", z, x2,
                              DividedPower{z}, DividedPower{x2}, expected_z_times_x2()));
    out.push_back(three_paths("z^2/2! * x^2/2! five-term expansion", z2, x2, DividedPower{z2},
                              DividedPower{x2}, expected_z2_times_x2()));
  }

  out.push_back(sweep("(a)^3_4 = 4a^3 + 18a^2 + 22a + 6", "a = 0..10", [](std::string& why) {
    for (int a = 0; a <= 10; ++a) {
      const Integer got = shifted_elem(Integer(a), 3, 4);
      const Integer want = 4 * a * a * a + 18 * a * a + 22 * a + 6;
      if (got != want) {
        why = "a = " + std::to_string(a) + ": got " + got.str() + ", want " + want.str();
        return false;
      }
    }
    return true;
  }));

  out.push_back(sweep("(a)^0_n = 1 and (a)^s_n = 0 for s > n", "a = -4..8, n = 0..6",
                      [](std::string& why) {
                        for (int a = -4; a <= 8; ++a) {
                          for (unsigned n = 0; n <= 6; ++n) {
                            if (shifted_elem(Integer(a), 0, n) != 1 ||
                                shifted_elem(Integer(a), n + 1, n) != 0) {
                              why = "a = " + std::to_string(a) + ", n = " + std::to_string(n);
                              return false;
                            }
                          }
                        }
                        return true;
                      }));

  out.push_back(sweep("(a)^s_n = (a)^s_{n-1} + (a+n-1)(a)^{s-1}_{n-1}",
                      "a = -4..8, 1 <= s <= n <= 6", [](std::string& why) {
                        for (int a = -4; a <= 8; ++a) {
                          for (unsigned n = 1; n <= 6; ++n) {
                            for (unsigned s = 1; s <= n; ++s) {
                              const Integer lhs = shifted_elem(Integer(a), s, n);
                              const Integer rhs =
                                  shifted_elem(Integer(a), s, n - 1) +
                                  Integer(a + static_cast<int>(n) - 1) *
                                      shifted_elem(Integer(a), s - 1, n - 1);
                              if (lhs != rhs) {
                                why = "a = " + std::to_string(a) + ", s = " +
                                      std::to_string(s) + ", n = " + std::to_string(n);
                                return false;
                              }
                            }
                          }
                        }
                        return true;
                      }));

  out.push_back(sweep("(a)^s_n counts dotted tableaux", "a, s, n = 0..6", [](std::string& why) {
    for (unsigned a = 0; a <= 6; ++a)
      for (unsigned s = 0; s <= 6; ++s)
        for (unsigned n = 0; n <= 6; ++n) {
          if (shifted_elem(Integer(a), s, n) != tableaux_count_oracle(a, s, n)) {
            why = "a = " + std::to_string(a) + ", s = " + std::to_string(s) +
                  ", n = " + std::to_string(n);
            return false;
          }
        }
    return true;
  }));

  // Symbolic in a and h, with the indeterminate y standing in for a.
  out.push_back(sweep("(a)_{n,-h} = (a-(n-1)h)(a)_{n-1,-h} = a(a-h)_{n-1,-h}", "n = 1..8",
                      [](std::string& why) {
                        const BiPoly a = BiPoly::y(), h = BiPoly::h(), minus_h = -h;
                        for (unsigned n = 1; n <= 8; ++n) {
                          const BiPoly full = pochhammer_k(a, n, minus_h);
                          const BiPoly first =
                              (a - BiPoly(static_cast<int>(n) - 1) * h) *
                              pochhammer_k(a, n - 1, minus_h);
                          const BiPoly second = a * pochhammer_k(a - h, n - 1, minus_h);
                          if (full != first || full != second) {
                            why = "n = " + std::to_string(n);
                            return false;
                          }
                        }
                        return true;
                      }));

  out.push_back(sweep("(y+(a-(n+1))h)_{n,-h} = sum_w (a-2n)^w_n y^{n-w} h^w",
                      "a = -4..8, n = 0..6", [](std::string& why) {
                        for (int a = -4; a <= 8; ++a) {
                          for (unsigned n = 0; n <= 6; ++n) {
                            if (vam3_lhs(Integer(a), n) != vam3_rhs(Integer(a), n)) {
                              why = "a = " + std::to_string(a) + ", n = " + std::to_string(n);
                              return false;
                            }
                          }
                        }
                        return true;
                      }));

  out.push_back(sweep("pure two-generator products match their normal-ordering sums",
                      "zy, yx, zx for a, b = 0..5", [](std::string& why) {
                        for (unsigned a = 0; a <= 5; ++a) {
                          for (unsigned b = 0; b <= 5; ++b) {
                            const NormalMonomial za{0, 0, a, 0}, ya{0, a, 0, 0};
                            const NormalMonomial yb{0, b, 0, 0}, xb{b, 0, 0, 0};
                            const std::string at =
                                " at a = " + std::to_string(a) + ", b = " + std::to_string(b);
                            if (mono_star_mono(za, yb) != normal_order_zy(a, b)) {
                              why = "zy" + at;
                              return false;
                            }
                            if (mono_star_mono(ya, xb) != normal_order_yx(a, b)) {
                              why = "yx" + at;
                              return false;
                            }
                            if (mono_star_mono(za, xb) != normal_order_zx(a, b) ||
                                normal_order_zx(a, b) != normal_order_zx_binomial_form(a, b)) {
                              why = "zx" + at;
                              return false;
                            }
                          }
                        }
                        return true;
                      }));
  return out;
}

}  // namespace uhsl2
