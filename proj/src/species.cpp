#include "uhsl2/species.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

#include "uhsl2/algebra.hpp"

namespace uhsl2 {

std::ostream& operator<<(std::ostream& os, const ColoredSizes& s) {
  return os << '(' << s.nx << ',' << s.ny << ',' << s.nz << ',' << s.nh << ')';
}

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

char lower(Color c) { return static_cast<char>(color_letter(c) - 'A' + 'a'); }

}  // namespace

std::string to_string(const FunctorSpec& f) {
  return std::visit(
      overloaded{
          [](const functor::DividedPower& d) {
            std::ostringstream os;
            os << "m(" << d.exponents.x << ',' << d.exponents.y << ',' << d.exponents.z << ','
               << d.exponents.h << ')';
            return os.str();
          },
          [](const functor::Singleton& s) { return std::string(1, lower(s.color)); },
          [](const functor::Exponential& e) {
            return std::string("exp(") + lower(e.color) + ")";
          },
      },
      f);
}

unsigned functor_value(const FunctorSpec& f, const ColoredSizes& s) {
  return std::visit(
      overloaded{
          [&](const functor::DividedPower& d) -> unsigned {
            return s.as_monomial() == d.exponents ? 1 : 0;
          },
          [&](const functor::Singleton& single) -> unsigned {
            return s.as_monomial() == NormalMonomial::of_color(single.color, 1) ? 1 : 0;
          },
          [&](const functor::Exponential& e) -> unsigned {
            // Only the chosen color may be populated.
            return s.total() == s.as_monomial().exponent(e.color) ? 1 : 0;
          },
      },
      f);
}

std::vector<ColoredSizes> sizes_up_to(unsigned max_total) {
  std::vector<ColoredSizes> out;
  for (unsigned a = 0; a <= max_total; ++a)
    for (unsigned b = 0; a + b <= max_total; ++b)
      for (unsigned c = 0; a + b + c <= max_total; ++c)
        for (unsigned d = 0; a + b + c + d <= max_total; ++d) out.push_back({a, b, c, d});
  return out;
}

Element valuation(const FunctorSpec& f, unsigned cap) {
  Element out(cap);
  for (const ColoredSizes& s : sizes_up_to(cap)) {
    if (functor_value(f, s)) out.accumulate(s.as_monomial(), 1);
  }
  return out;
}

namespace {

void walk_ascending(unsigned base, unsigned m, unsigned k, unsigned next_component,
                    std::uint64_t& count) {
  if (k == 0) {
    ++count;
    return;
  }
  for (unsigned j = next_component; j + k <= m; ++j) {
    for (unsigned point = 0; point < base + j; ++point) {
      walk_ascending(base, m, k - 1, j + 1, count);
    }
  }
}

}  // namespace

Integer ascending_maps_count(unsigned base, unsigned m, unsigned k) {
  static std::mutex mu;
  static std::map<std::array<unsigned, 3>, Integer> memo;
  const std::array<unsigned, 3> key{base, m, k};
  {
    std::lock_guard<std::mutex> lock(mu);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  std::uint64_t count = 0;
  walk_ascending(base, m, k, 0, count);
  Integer result(count);
  std::lock_guard<std::mutex> lock(mu);
  memo.emplace(key, result);
  return result;
}

const std::vector<std::pair<std::vector<unsigned>, std::uint64_t>>& labelled_block_tally(
    unsigned n, unsigned blocks) {
  using Tally = std::vector<std::pair<std::vector<unsigned>, std::uint64_t>>;
  static std::mutex mu;
  static std::map<std::pair<unsigned, unsigned>, std::unique_ptr<Tally>> memo;

  std::lock_guard<std::mutex> lock(mu);
  auto& slot = memo[{n, blocks}];
  if (slot) return *slot;

  // Odometer over all functions [n] -> [blocks].
  std::map<std::vector<unsigned>, std::uint64_t> counts;
  std::vector<unsigned> assignment(n, 0);
  while (true) {
    std::vector<unsigned> sizes(blocks, 0);
    for (unsigned b : assignment) ++sizes[b];
    ++counts[sizes];

    std::size_t i = 0;
    while (i < n && ++assignment[i] == blocks) assignment[i++] = 0;
    if (i == n) break;
  }
  slot = std::make_unique<Tally>(counts.begin(), counts.end());
  return *slot;
}

void for_each_species_configuration(
    const FunctorSpec& f, const FunctorSpec& g, const ColoredSizes& s,
    const std::function<void(const BlockSizes&, std::uint64_t, const Integer&)>& visit) {
  const auto& h_tally = labelled_block_tally(s.nh, 6);
  const auto& y_tally = labelled_block_tally(s.ny, 3);
  const auto& x_tally = labelled_block_tally(s.nx, 2);
  const auto& z_tally = labelled_block_tally(s.nz, 2);

  BlockSizes blk;
  for (const auto& [hv, h_count] : h_tally) {
    std::copy(hv.begin(), hv.end(), blk.h.begin());
    const unsigned h3 = blk.h[2];
    const unsigned h4 = blk.h[3];
    if (h4 > h3) continue;
    for (const auto& [yv, y_count] : y_tally) {
      if (yv[2] + h4 != h3) continue;
      std::copy(yv.begin(), yv.end(), blk.y.begin());
      for (const auto& [xv, x_count] : x_tally) {
        std::copy(xv.begin(), xv.end(), blk.x.begin());
        for (const auto& [zv, z_count] : z_tally) {
          std::copy(zv.begin(), zv.end(), blk.z.begin());
          const auto [x1, x2] = blk.x;
          const auto [y1, y2, y3] = blk.y;
          const auto [z1, z2] = blk.z;
          const auto [hh1, hh2, hh3, hh4, hh5, hh6] = blk.h;

          if (!functor_value(f, {x1, y1 + hh5, z1 + hh3, hh1})) continue;
          if (!functor_value(g, {x2 + hh3, y2 + hh6, z2, hh2})) continue;

          const std::uint64_t labelled = h_count * y_count * x_count * z_count;
          Integer c(labelled);
          c *= ipow(Integer(2 * x2), hh5);      // maps h5 -> x2 + x2
          c *= ipow(Integer(2 * z1), hh6);      // maps h6 -> z1 + z1
          c *= factorial(y3) * factorial(hh4);  // linear orders on y3, h4
          c *= ascending_maps_count(z1 + x2, y3 + hh4, hh4);
          if (c == 0) continue;
          if (hh3 % 2 == 1) c = -c;
          visit(blk, labelled, c);
        }
      }
    }
  }
}

Integer star_species(const FunctorSpec& f, const FunctorSpec& g, const ColoredSizes& s) {
  Integer total = 0;
  for_each_species_configuration(
      f, g, s, [&](const BlockSizes&, std::uint64_t, const Integer& c) { total += c; });
  return total;
}

Element species_product(const FunctorSpec& f, const FunctorSpec& g, unsigned max_total) {
  Element out(max_total);
  for (const ColoredSizes& s : sizes_up_to(max_total)) {
    out.accumulate(s.as_monomial(), Rational(star_species(f, g, s)));
  }
  return out;
}

SpeciesReport species_coefficient_check(const FunctorSpec& f, const FunctorSpec& g,
                                        unsigned max_total, const Element& algebra_product) {
  SpeciesReport report;
  for (const ColoredSizes& s : sizes_up_to(max_total)) {
    const Integer count = star_species(f, g, s);
    const Rational expected = algebra_product.coefficient(s.as_monomial());
    ++report.checked;
    if (Rational(count) != expected) report.mismatches.push_back({s, count, expected});
  }
  return report;
}

SpeciesReport species_coefficient_check(const FunctorSpec& f, const FunctorSpec& g,
                                        unsigned max_total) {
  const Element product = star(valuation(f, max_total), valuation(g, max_total));
  return species_coefficient_check(f, g, max_total, product);
}

}  // namespace uhsl2
