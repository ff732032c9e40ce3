#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtcl {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

#define GTCL_ASSERT(cond, msg)                                             \
  do {                                                                     \
    if (!(cond)) throw std::logic_error(std::string("gtcl: ") + (msg));    \
  } while (0)

/// Exact rational from a numerator/denominator pair of either sign.
inline Rational make_rational(Integer num, Integer den) {
  if (den == 0) throw std::domain_error("gtcl: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

/// "p/q", reduced, q > 0; integers render as "p/1" and zero as "0/1".
inline std::string format_rational(const Rational& value) {
  return numerator(value).str() + "/" + denominator(value).str();
}

inline Rational parse_rational(const std::string& text) {
  try {
    auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    Integer num(text.substr(0, slash));
    Integer den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return make_rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("gtcl: malformed rational '" + text + "'");
  }
}

/// n!, memoized across calls.
inline Integer factorial(long long n) {
  if (n < 0) throw std::domain_error("gtcl: factorial of a negative argument");
  static std::mutex guard;
  static std::vector<Integer> table = {1};
  std::lock_guard<std::mutex> lock(guard);
  while (static_cast<long long>(table.size()) <= n)
    table.push_back(table.back() * static_cast<long long>(table.size()));
  return table[static_cast<std::size_t>(n)];
}

}  // namespace gtcl
