#include "qcoh/exact.hpp"

namespace qcoh {

Int binomial_z(long n, long m) {
  if (n < 0 || m < 0 || n - m < 0) return Int(0);
  Int out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(m));
  return out;
}

Int to_int(const Rational& q, std::string_view what) {
  Rational c = q;
  c.canonicalize();
  if (c.get_den() != 1) {
    throw IntegralityError(std::string(what) + " is not an integer: " + c.get_str());
  }
  return c.get_num();
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rational& v) { return v.get_str(); }

Int parse_int(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty integer literal");
  std::size_t start = (s[0] == '-') ? 1 : 0;
  if (start == s.size()) throw std::invalid_argument("bad integer literal: " + s);
  for (std::size_t i = start; i < s.size(); ++i) {
    if (s[i] < '0' || s[i] > '9') throw std::invalid_argument("bad integer literal: " + s);
  }
  return Int(s, 10);
}

}  // namespace qcoh
