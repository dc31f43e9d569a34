#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace qcoh {

using Int = mpz_class;
using Rational = mpq_class;

/// Raised when a value the theory guarantees to be integral is not.
class IntegralityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Binomial coefficient extended by zero: C(n, m) = 0 whenever n < 0, m < 0
/// or n - m < 0.
Int binomial_z(long n, long m);

/// Exact conversion; throws IntegralityError if `q` has a denominator.
Int to_int(const Rational& q, std::string_view what = "value");

std::string to_string(const Int& v);
std::string to_string(const Rational& v);

/// Parses a base-10 integer string (optional leading '-').
Int parse_int(std::string_view text);

}  // namespace qcoh
