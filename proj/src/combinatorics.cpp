#include "uhsl2/combinatorics.hpp"

#include <cstdint>
#include <vector>

namespace uhsl2 {

Integer elementary_symmetric(unsigned s, std::span<const Integer> values) {
  const std::size_t n = values.size();
  if (s == 0) return 1;
  if (s > n) return 0;

  // Walk the s-subsets {i_1 < ... < i_s} in lexicographic order.
  std::vector<std::size_t> idx(s);
  for (unsigned j = 0; j < s; ++j) idx[j] = j;
  Integer total = 0;
  while (true) {
    Integer prod = 1;
    for (std::size_t i : idx) prod *= values[i];
    total += prod;

    int j = static_cast<int>(s) - 1;
    while (j >= 0 && idx[j] == n - s + j) --j;
    if (j < 0) break;
    ++idx[j];
    for (unsigned t = j + 1; t < s; ++t) idx[t] = idx[t - 1] + 1;
  }
  return total;
}

Integer shifted_elem(const Integer& a, unsigned s, unsigned n) {
  if (s > n) return 0;
  // row[t] holds (a)^t_m for the current m, t = 0..s.
  std::vector<Integer> row(s + 1, Integer(0));
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    const Integer top = a + (m - 1);
    for (unsigned t = std::min(s, m); t >= 1; --t) row[t] += top * row[t - 1];
  }
  return row[s];
}

namespace {

void place_dots(const std::vector<unsigned>& rows, std::size_t row, unsigned dots_left,
                std::uint64_t& count) {
  if (dots_left == 0) {
    ++count;
    return;
  }
  if (rows.size() - row < dots_left) return;
  // Row left empty.
  place_dots(rows, row + 1, dots_left, count);
  // One dot in each cell of this row.
  for (unsigned cell = 0; cell < rows[row]; ++cell) {
    place_dots(rows, row + 1, dots_left - 1, count);
  }
}

}  // namespace

Integer tableaux_count_oracle(unsigned a, unsigned s, unsigned n) {
  std::vector<unsigned> rows;
  for (unsigned i = n; i-- > 0;) rows.push_back(a + i);
  std::uint64_t count = 0;
  place_dots(rows, 0, s, count);
  return Integer(count);
}

Integer falling_factorial(const Integer& a, unsigned n) {
  Integer result = 1;
  for (unsigned i = 0; i < n; ++i) result *= a - i;
  return result;
}

BiPoly vam3_lhs(const Integer& a, unsigned n) {
  const BiPoly start = BiPoly::y() + BiPoly(a - (n + 1)) * BiPoly::h();
  return pochhammer_k(start, n, -BiPoly::h());
}

BiPoly vam3_rhs(const Integer& a, unsigned n) {
  BiPoly sum;
  const Integer base = a - 2 * Integer(n);
  for (unsigned w = 0; w <= n; ++w) {
    sum += BiPoly::monomial(n - w, w, shifted_elem(base, w, n));
  }
  return sum;
}

}  // namespace uhsl2
