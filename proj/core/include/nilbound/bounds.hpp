#ifndef NILBOUND_BOUNDS_HPP
#define NILBOUND_BOUNDS_HPP

#include "nilbound/bigint.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace nilbound {

/// Exponents (base-p logarithms of group orders) and related counts. All
/// arithmetic on them is overflow-checked and throws std::overflow_error
/// rather than wrapping.
using Exponent = std::uint64_t;

/// An ordered tuple (a_1, ..., a_c) of non-negative integers summing to k.
struct Composition {
  std::vector<unsigned> parts;

  std::size_t length() const noexcept { return parts.size(); }
  unsigned total() const noexcept;

  friend bool operator==(const Composition &, const Composition &) = default;
};

/// T(a) = sum_i a_i * (1 + s + ... + s^{i-1}) with s = a_1 + ... + a_{i-1}.
///
/// The geometric sum form is used on purpose: it is the only reading of
/// ((s^i - 1)/(s - 1)) that is defined at s = 0 (value 1) and s = 1 (value
/// i), and both cases occur at maximizers once zero parts are allowed.
Exponent composition_value(const Composition &a);

struct CompositionMax {
  Exponent value = 0;
  Composition witness; ///< lexicographically least maximizer
};

/// F(k, c): max of composition_value over compositions of k into c
/// non-negative parts. Prefix-sum dynamic program, O(c k^2).
CompositionMax f_upper(unsigned k, unsigned c);

/// Same quantity by enumerating all C(k+c-1, c-1) compositions in
/// lexicographic order. Reference implementation for f_upper.
CompositionMax f_upper_bruteforce(unsigned k, unsigned c);

/// The tabulated closed forms of F(k, c) for 1 <= c <= 4, evaluated in exact
/// rational arithmetic. Throws std::invalid_argument for c outside 1..4 and
/// InvariantViolation("table formula mismatch") if a row evaluates to a
/// non-integer.
Exponent f_closed(unsigned k, unsigned c);

/// k * (1 + k + ... + k^{c-1}); equals k(k^c - 1)/(k - 1) for k > 1 and c
/// for k = 1.
Exponent elementary_bound(unsigned k, unsigned c);

/// k + floor(k/2) * ceil(k/2), the exact exponent at class 2.
Exponent class2_exponent(unsigned k);

/// (k/c) * C(k(c-1)/c, c-1). Throws std::invalid_argument("divisibility
/// required") unless c divides k.
Exponent binomial_lower(unsigned k, unsigned c);

/// (c-1)^{c-1} / c^c, with 0^0 = 1.
Rational asymptotic_coefficient(unsigned c);

/// Number of monomials in v variables of total degree i with every exponent
/// at most p-1: the coefficient of x^i in (1 + x + ... + x^{p-1})^v.
Exponent monomial_count(unsigned v, unsigned i, unsigned p);

bool is_prime(std::uint64_t n);

/// prod p_i^{e_i} over a map {p_i^{alpha_i} -> e_i}. Keys must be prime
/// powers with pairwise distinct primes; otherwise std::invalid_argument.
BigInt combine_multiplicative(const std::map<std::uint64_t, Exponent> &factors);

/// Every bound exponent for one (p, k, c).
struct BoundReport {
  unsigned p = 0;
  unsigned k = 0;
  unsigned c = 0;
  Exponent f_upper = 0;
  Exponent elementary = 0;
  std::optional<Exponent> class2_exact;   ///< present when c >= 2
  std::optional<Exponent> binomial_lower; ///< present when c divides k
  Composition witness;
  Rational asymptotic_coefficient;
};

/// Throws std::invalid_argument for non-prime p or k, c < 1.
BoundReport bound_report(unsigned p, unsigned k, unsigned c);

nlohmann::json to_json(const BoundReport &r);
nlohmann::json rational_to_json(const Rational &q);

} // namespace nilbound

#endif // NILBOUND_BOUNDS_HPP
