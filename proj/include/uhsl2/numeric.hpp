#pragma once

#include <span>
#include <stdexcept>
#include <string>

#include <boost/multiprecision/gmp.hpp>

namespace uhsl2 {

using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;

/// Raised when a caller violates an API contract (bad cap combination,
/// malformed input document, missing degree cap).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation receives input outside its precondition, e.g. a
/// non-normal word handed to the divided-basis converter.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// A structural coefficient turned out non-integral. This is never a valid
/// outcome; it means the product formula or its index bookkeeping is wrong.
class IntegralityViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);

// n! / (k_1! ... k_r!) where n = sum k_i.
Integer multinomial(std::span<const unsigned> parts);
Integer multinomial(std::initializer_list<unsigned> parts);

// base^exp with 0^0 = 1.
Integer ipow(const Integer& base, unsigned exp);

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

}  // namespace uhsl2
