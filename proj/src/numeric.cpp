#include "uhsl2/numeric.hpp"

#include <mutex>
#include <numeric>
#include <vector>

namespace uhsl2 {

Integer factorial(unsigned n) {
  static std::mutex mu;
  static std::vector<Integer> table{Integer(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (table.size() <= n) {
    table.push_back(table.back() * static_cast<unsigned>(table.size()));
  }
  return table[n];
}

Integer binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  return factorial(n) / (factorial(k) * factorial(n - k));
}

Integer multinomial(std::span<const unsigned> parts) {
  unsigned total = std::accumulate(parts.begin(), parts.end(), 0u);
  Integer denom = 1;
  for (unsigned p : parts) denom *= factorial(p);
  return factorial(total) / denom;
}

Integer multinomial(std::initializer_list<unsigned> parts) {
  return multinomial(std::span<const unsigned>(parts.begin(), parts.size()));
}

Integer ipow(const Integer& base, unsigned exp) {
  return boost::multiprecision::pow(base, exp);
}

}  // namespace uhsl2
