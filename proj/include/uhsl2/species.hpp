#pragma once

#include <array>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "uhsl2/element.hpp"
#include "uhsl2/numeric.hpp"

namespace uhsl2 {

/// Cardinalities of the four color classes of a colored finite set.
struct ColoredSizes {
  unsigned nx = 0, ny = 0, nz = 0, nh = 0;

  unsigned total() const { return nx + ny + nz + nh; }
  NormalMonomial as_monomial() const { return {nx, ny, nz, nh}; }
  friend auto operator<=>(const ColoredSizes&, const ColoredSizes&) = default;
};

std::ostream& operator<<(std::ostream& os, const ColoredSizes& s);

namespace functor {

struct DividedPower {
  NormalMonomial exponents;
  friend bool operator==(const DividedPower&, const DividedPower&) = default;
};
struct Singleton {
  Color color;
  friend bool operator==(const Singleton&, const Singleton&) = default;
};
struct Exponential {
  Color color;
  friend bool operator==(const Exponential&, const Exponential&) = default;
};

}  // namespace functor

/// The rigid functors on four-colored sets used here. Each evaluates to 0 or
/// 1 depending only on the color-class sizes.
using FunctorSpec = std::variant<functor::DividedPower, functor::Singleton, functor::Exponential>;

std::string to_string(const FunctorSpec& f);

/// 0 or 1.
unsigned functor_value(const FunctorSpec& f, const ColoredSizes& s);

/// Generating series sum |F([a],[b],[c],[d])| x^a y^b z^c h^d / (a!b!c!d!),
/// truncated to total degree `cap`.
Element valuation(const FunctorSpec& f, unsigned cap);

/// Number of maps from a k-element ordered set into the disjoint union of
/// m components of sizes base, base+1, ..., base+m-1 whose component index
/// strictly increases along the order. Counted by walking every such map.
Integer ascending_maps_count(unsigned base, unsigned m, unsigned k);

/// Block sizes of one decomposition of a colored set:
///   x -> (x1, x2), y -> (y1, y2, y3), z -> (z1, z2), h -> (h1, ..., h6).
struct BlockSizes {
  std::array<unsigned, 2> x{};
  std::array<unsigned, 3> y{};
  std::array<unsigned, 2> z{};
  std::array<unsigned, 6> h{};
};

/// Number of labelled decompositions of an n-element set into `blocks`
/// ordered blocks with the given sizes, tallied by enumerating every
/// function [n] -> [blocks]. Results are memoized per (n, blocks).
const std::vector<std::pair<std::vector<unsigned>, std::uint64_t>>& labelled_block_tally(
    unsigned n, unsigned blocks);

/// Calls `visit(blocks, labelled_count, contribution)` for every block-size
/// configuration of `s` with |y3| + |h4| = |h3| whose contribution to
/// F * G at s is nonzero. `contribution` already includes the labelled count.
void for_each_species_configuration(
    const FunctorSpec& f, const FunctorSpec& g, const ColoredSizes& s,
    const std::function<void(const BlockSizes&, std::uint64_t, const Integer&)>& visit);

/// Signed number of (F * G)-structures on a colored set with sizes s.
Integer star_species(const FunctorSpec& f, const FunctorSpec& g, const ColoredSizes& s);

/// The element sum_s star_species(F, G, s) x^.. y^.. z^.. h^.. / (..!) over all
/// sizes with total <= max_total, capped at max_total.
Element species_product(const FunctorSpec& f, const FunctorSpec& g, unsigned max_total);

struct SpeciesMismatch {
  ColoredSizes sizes;
  Integer species_count;
  Rational algebra_coefficient;
};

struct SpeciesReport {
  std::size_t checked = 0;
  std::vector<SpeciesMismatch> mismatches;
  bool ok() const { return mismatches.empty(); }
};

/// Compares star_species(F, G, s) with the coefficient of s in
/// star(|F|, |G|) for every s with total <= max_total.
SpeciesReport species_coefficient_check(const FunctorSpec& f, const FunctorSpec& g,
                                        unsigned max_total);

/// Same check against a precomputed algebraic product.
SpeciesReport species_coefficient_check(const FunctorSpec& f, const FunctorSpec& g,
                                        unsigned max_total, const Element& algebra_product);

/// All size tuples with total <= max_total, lexicographic.
std::vector<ColoredSizes> sizes_up_to(unsigned max_total);

}  // namespace uhsl2
