#include "uhsl2/rewrite.hpp"

#include <cctype>
#include <tuple>

namespace uhsl2 {

namespace {

int rank(char letter) {
  switch (letter) {
    case 'X': return 0;
    case 'Y': return 1;
    case 'Z': return 2;
    case 'H': return 3;
  }
  return -1;
}

struct Rule {
  int coefficient;        // of the contracted two-letter term
  std::string_view tail;  // two-letter replacement; empty for plain swaps
};

// Right-hand side extra term for an out-of-order pair (hi, lo).
Rule rule_for(char hi, char lo) {
  if (hi == 'Y' && lo == 'X') return {2, "XH"};
  if (hi == 'Z' && lo == 'X') return {-1, "YH"};
  if (hi == 'Z' && lo == 'Y') return {2, "ZH"};
  return {0, ""};  // H commutes with everything
}

}  // namespace

FreeWord::FreeWord(std::string_view letters) {
  letters_.reserve(letters.size());
  for (char ch : letters) {
    char up = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
    if (rank(up) < 0) throw UsageError(std::string("invalid letter in word: ") + ch);
    letters_.push_back(up);
  }
}

FreeWord FreeWord::power(Color c, unsigned n) {
  FreeWord w;
  w.letters_.assign(n, color_letter(c));
  return w;
}

FreeWord FreeWord::from_monomial(const NormalMonomial& m) {
  return power(Color::X, m.x) + power(Color::Y, m.y) + power(Color::Z, m.z) +
         power(Color::H, m.h);
}

bool FreeWord::is_normal() const {
  for (std::size_t i = 0; i + 1 < letters_.size(); ++i) {
    if (rank(letters_[i]) > rank(letters_[i + 1])) return false;
  }
  return true;
}

FreeWord operator+(const FreeWord& a, const FreeWord& b) {
  FreeWord w;
  w.letters_ = a.letters_ + b.letters_;
  return w;
}

std::ostream& operator<<(std::ostream& os, const FreeWord& w) {
  return os << (w.letters().empty() ? std::string("1") : w.letters());
}

void WordSum::accumulate(const FreeWord& w, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(w, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

Integer WordSum::coefficient(const FreeWord& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? Integer(0) : it->second;
}

std::ostream& operator<<(std::ostream& os, const WordSum& s) {
  os << '{';
  bool first = true;
  for (const auto& [w, c] : s.terms()) {
    if (!first) os << ", ";
    first = false;
    os << w << ": " << c;
  }
  return os << '}';
}

std::optional<WordSum> rewrite_step(const FreeWord& w, RewriteStrategy strategy) {
  const std::string& s = w.letters();
  const std::size_t n = s.size();
  if (n < 2) return std::nullopt;

  std::size_t pos = n;
  if (strategy == RewriteStrategy::Leftmost) {
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (rank(s[i]) > rank(s[i + 1])) {
        pos = i;
        break;
      }
    }
  } else {
    for (std::size_t i = n - 1; i-- > 0;) {
      if (rank(s[i]) > rank(s[i + 1])) {
        pos = i;
        break;
      }
    }
  }
  if (pos == n) return std::nullopt;

  std::string swapped = s;
  std::swap(swapped[pos], swapped[pos + 1]);
  WordSum out{FreeWord(swapped)};

  const Rule rule = rule_for(s[pos], s[pos + 1]);
  if (rule.coefficient != 0) {
    std::string contracted = s;
    contracted[pos] = rule.tail[0];
    contracted[pos + 1] = rule.tail[1];
    out.accumulate(FreeWord(contracted), rule.coefficient);
  }
  return out;
}

std::pair<std::size_t, std::size_t> rewrite_measure(const FreeWord& w) {
  const std::string& s = w.letters();
  std::size_t non_h = 0;
  std::size_t inversions = 0;
  std::size_t seen[4] = {0, 0, 0, 0};
  for (char ch : s) {
    const int r = rank(ch);
    if (ch != 'H') ++non_h;
    for (int higher = r + 1; higher < 4; ++higher) inversions += seen[higher];
    ++seen[r];
  }
  return {non_h, inversions};
}

WordSum normalize(const WordSum& s, RewriteStrategy strategy) {
  // Words are expanded in decreasing measure order. Every child of a word
  // has a strictly smaller measure, so all contributions to a word are
  // merged before it is expanded and each word is rewritten at most once.
  using Key = std::tuple<std::size_t, std::size_t, FreeWord>;
  std::map<Key, Integer> pending;
  auto push = [&](const FreeWord& w, const Integer& c) {
    auto [non_h, inv] = rewrite_measure(w);
    auto [it, inserted] = pending.try_emplace(Key{non_h, inv, w}, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) pending.erase(it);
    }
  };
  for (const auto& [w, c] : s.terms()) push(w, c);

  WordSum result;
  while (!pending.empty()) {
    auto node = pending.extract(std::prev(pending.end()));
    const FreeWord& w = std::get<2>(node.key());
    const Integer& c = node.mapped();
    auto step = rewrite_step(w, strategy);
    if (!step) {
      result.accumulate(w, c);
      continue;
    }
    for (const auto& [child, k] : step->terms()) push(child, c * k);
  }
  return result;
}

WordSum normalize(const FreeWord& w, RewriteStrategy strategy) {
  return normalize(WordSum(w), strategy);
}

Element to_element(const WordSum& s) {
  Element out;
  for (const auto& [w, c] : s.terms()) {
    if (!w.is_normal()) {
      throw ContractViolation("to_element: word is not normal-ordered: " + w.letters());
    }
    NormalMonomial m;
    for (char ch : w.letters()) {
      switch (ch) {
        case 'X': ++m.x; break;
        case 'Y': ++m.y; break;
        case 'Z': ++m.z; break;
        case 'H': ++m.h; break;
      }
    }
    const Integer scale = factorial(m.x) * factorial(m.y) * factorial(m.z) * factorial(m.h);
    out.accumulate(m, Rational(c * scale));
  }
  return out;
}

Element oracle_star(const NormalMonomial& left, const NormalMonomial& right) {
  const FreeWord word = FreeWord::from_monomial(left) + FreeWord::from_monomial(right);
  const Element plain = to_element(normalize(word));
  const Integer divisor = factorial(left.x) * factorial(left.y) * factorial(left.z) *
                          factorial(left.h) * factorial(right.x) * factorial(right.y) *
                          factorial(right.z) * factorial(right.h);
  return scalar_mul(Rational(Integer(1), divisor), plain);
}

}  // namespace uhsl2
