#pragma once

#include <span>

#include "uhsl2/bipoly.hpp"
#include "uhsl2/numeric.hpp"

namespace uhsl2 {

/// Sum over all s-element subsets of `values` of the product of the subset.
/// Evaluated by direct subset enumeration; 1 for s = 0, 0 for s > n.
Integer elementary_symmetric(unsigned s, std::span<const Integer> values);

/// The shifted symbol (a)^s_n = e_s(a, a+1, ..., a+n-1), computed by the
/// recursion (a)^s_n = (a)^s_{n-1} + (a+n-1) (a)^{s-1}_{n-1} with
/// (a)^0_n = 1 and (a)^s_n = 0 for s > n. Polynomial in a, so negative a is
/// accepted.
Integer shifted_elem(const Integer& a, unsigned s, unsigned n);

/// Counts placements of s unlabeled dots into a tableau with rows of length
/// a+n-1, ..., a+1, a, at most one dot per row, by walking every placement.
Integer tableaux_count_oracle(unsigned a, unsigned s, unsigned n);

/// a (a-1) ... (a-n+1); 1 for n = 0.
Integer falling_factorial(const Integer& a, unsigned n);

/// Pochhammer k-symbol a (a+k) (a+2k) ... (a+(n-1)k) over any commutative
/// ring type. The empty product (n = 0) is 1.
template <typename Ring>
Ring pochhammer_k(const Ring& a, unsigned n, const Ring& k) {
  Ring result(1);
  Ring factor = a;
  for (unsigned i = 0; i < n; ++i) {
    result = result * factor;
    factor = factor + k;
  }
  return result;
}

/// (y + (a-(n+1)) h)_{n,-h}, i.e. the product of y + (a-(n+i+1)) h over
/// i = 0..n-1.
BiPoly vam3_lhs(const Integer& a, unsigned n);

/// sum_{w=0}^{n} (a-2n)^w_n y^{n-w} h^w.
BiPoly vam3_rhs(const Integer& a, unsigned n);

}  // namespace uhsl2
