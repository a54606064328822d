#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "uhsl2/element.hpp"
#include "uhsl2/numeric.hpp"

namespace uhsl2 {

/// A word in the free algebra on X, Y, Z, H. Letters are stored as the
/// uppercase characters 'X', 'Y', 'Z', 'H'.
class FreeWord {
 public:
  FreeWord() = default;
  // Accepts upper- or lowercase letters; throws UsageError on anything else.
  explicit FreeWord(std::string_view letters);

  static FreeWord power(Color c, unsigned n);
  static FreeWord from_monomial(const NormalMonomial& m);

  const std::string& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_normal() const;

  friend FreeWord operator+(const FreeWord& a, const FreeWord& b);
  friend auto operator<=>(const FreeWord&, const FreeWord&) = default;

 private:
  std::string letters_;
};

std::ostream& operator<<(std::ostream& os, const FreeWord& w);

/// Integer linear combination of free words; zero coefficients are never stored.
class WordSum {
 public:
  using Terms = std::map<FreeWord, Integer>;

  WordSum() = default;
  WordSum(const FreeWord& w, const Integer& c = 1) { accumulate(w, c); }

  void accumulate(const FreeWord& w, const Integer& c);
  const Terms& terms() const { return terms_; }
  Integer coefficient(const FreeWord& w) const;
  bool is_zero() const { return terms_.empty(); }

  friend bool operator==(const WordSum&, const WordSum&) = default;

 private:
  Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const WordSum& s);

enum class RewriteStrategy { Leftmost, Rightmost };

/// Rewrites the leftmost (or rightmost) adjacent pair out of the order
/// X < Y < Z < H using
///   YX -> XY + 2 XH,  ZX -> XZ - YH,  ZY -> YZ + 2 ZH,  H? -> ?H.
/// Returns nullopt when w is already normal.
std::optional<WordSum> rewrite_step(const FreeWord& w,
                                    RewriteStrategy strategy = RewriteStrategy::Leftmost);

/// Termination measure: (letters other than H, inversions). Every rewrite
/// step strictly decreases it lexicographically.
std::pair<std::size_t, std::size_t> rewrite_measure(const FreeWord& w);

/// Applies rewrite_step until every word is normal.
WordSum normalize(const FreeWord& w, RewriteStrategy strategy = RewriteStrategy::Leftmost);
WordSum normalize(const WordSum& s, RewriteStrategy strategy = RewriteStrategy::Leftmost);

/// Converts normal words (plain monomials) to divided-basis coefficients.
/// Throws ContractViolation on a non-normal word.
Element to_element(const WordSum& s);

/// Product of two divided basis monomials by rewriting the concatenated
/// plain word and dividing out the input factorials.
Element oracle_star(const NormalMonomial& left, const NormalMonomial& right);

}  // namespace uhsl2
