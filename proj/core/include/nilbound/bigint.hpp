#ifndef NILBOUND_BIGINT_HPP
#define NILBOUND_BIGINT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>

namespace nilbound {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Returns e with n == p^e, or nullopt when n is not a power of p (n == 1
/// gives 0).
inline std::optional<unsigned> exact_log(BigInt n, unsigned p) {
  if (n < 1 || p < 2)
    return std::nullopt;
  unsigned e = 0;
  while (n != 1) {
    if (n % p != 0)
      return std::nullopt;
    n /= p;
    ++e;
  }
  return e;
}

inline BigInt big_pow(unsigned base, unsigned exponent) {
  return boost::multiprecision::pow(BigInt(base), exponent);
}

} // namespace nilbound

#endif // NILBOUND_BIGINT_HPP
