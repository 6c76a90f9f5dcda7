#include "nilbound/bounds.hpp"

#include "nilbound/errors.hpp"

#include <limits>
#include <numeric>
#include <stdexcept>

namespace nilbound {

namespace {

Exponent checked_add(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("exponent overflow");
  return r;
}

Exponent checked_mul(Exponent a, Exponent b) {
  Exponent r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("exponent overflow");
  return r;
}

/// 1 + s + ... + s^{len-1}
Exponent geometric_sum(Exponent s, unsigned len) {
  Exponent sum = 0;
  Exponent term = 1;
  for (unsigned t = 0; t < len; ++t) {
    sum = checked_add(sum, term);
    if (t + 1 < len)
      term = checked_mul(term, s);
  }
  return sum;
}

Exponent to_exponent(const BigInt &x) {
  if (x < 0 || x > std::numeric_limits<Exponent>::max())
    throw std::overflow_error("exponent overflow");
  return x.convert_to<Exponent>();
}

BigInt binomial(unsigned n, unsigned r) {
  if (r > n)
    return 0;
  BigInt result = 1;
  for (unsigned i = 1; i <= r; ++i) {
    result *= n - r + i;
    result /= i;
  }
  return result;
}

void require_positive(unsigned k, unsigned c) {
  if (k == 0 || c == 0)
    throw std::invalid_argument("k and c must be positive");
}

} // namespace

unsigned Composition::total() const noexcept {
  return std::accumulate(parts.begin(), parts.end(), 0u);
}

Exponent composition_value(const Composition &a) {
  Exponent total = 0;
  Exponent prefix = 0;
  for (std::size_t i = 0; i < a.parts.size(); ++i) {
    const Exponent s_i = geometric_sum(prefix, static_cast<unsigned>(i + 1));
    total = checked_add(total, checked_mul(a.parts[i], s_i));
    prefix += a.parts[i];
  }
  return total;
}

CompositionMax f_upper(unsigned k, unsigned c) {
  require_positive(k, c);
  // best[i][s]: largest contribution of parts i..c-1 given prefix sum s,
  // the remaining parts summing to k - s.
  std::vector<std::vector<Exponent>> best(c + 1, std::vector<Exponent>(k + 1, 0));
  std::vector<std::vector<Exponent>> weight(c, std::vector<Exponent>(k + 1, 0));
  for (unsigned i = 0; i < c; ++i)
    for (unsigned s = 0; s <= k; ++s)
      weight[i][s] = geometric_sum(s, i + 1);

  // best[c][s] is only reachable for s == k; the final part absorbs the
  // remainder, so it is handled in closed form.
  for (unsigned s = 0; s <= k; ++s)
    best[c - 1][s] = checked_mul(k - s, weight[c - 1][s]);
  for (unsigned i = c - 1; i-- > 0;)
    for (unsigned s = 0; s <= k; ++s) {
      Exponent m = 0;
      for (unsigned a = 0; a + s <= k; ++a)
        m = std::max(m, checked_add(checked_mul(a, weight[i][s]), best[i + 1][s + a]));
      best[i][s] = m;
    }

  CompositionMax out;
  out.value = best[0][0];
  unsigned s = 0;
  for (unsigned i = 0; i + 1 < c; ++i) {
    for (unsigned a = 0; a + s <= k; ++a)
      if (checked_add(checked_mul(a, weight[i][s]), best[i + 1][s + a]) == best[i][s]) {
        out.witness.parts.push_back(a);
        s += a;
        break;
      }
  }
  out.witness.parts.push_back(k - s);
  return out;
}

CompositionMax f_upper_bruteforce(unsigned k, unsigned c) {
  require_positive(k, c);
  CompositionMax out;
  bool have = false;
  Composition current;
  current.parts.assign(c, 0);

  // parts[0] ascending, then parts[1] ascending, ...: lexicographic order.
  auto rec = [&](auto &&self, unsigned i, unsigned remaining) -> void {
    if (i + 1 == c) {
      current.parts[i] = remaining;
      const Exponent v = composition_value(current);
      if (!have || v > out.value) {
        out.value = v;
        out.witness = current;
        have = true;
      }
      return;
    }
    for (unsigned a = 0; a <= remaining; ++a) {
      current.parts[i] = a;
      self(self, i + 1, remaining - a);
    }
  };
  rec(rec, 0, k);
  return out;
}

Exponent f_closed(unsigned k, unsigned c) {
  if (k == 0)
    throw std::invalid_argument("k must be positive");
  const Rational K(k);
  Rational v;
  auto R = [](long long n, long long d) { return Rational(n, d); };
  switch (c) {
  case 1:
    v = K;
    break;
  case 2:
    v = Rational((k / 2) * ((k + 1) / 2) + k);
    break;
  case 3: {
    const Rational lead = R(4, 27) * K * K * K + R(1, 3) * K * K;
    switch (k % 3) {
    case 0: v = lead + K; break;
    case 1: v = lead + R(8, 9) * K - R(10, 27); break;
    default: v = lead + R(8, 9) * K - R(8, 27); break;
    }
    break;
  }
  case 4: {
    if (k == 2)
      return 5;
    if (k == 6)
      return 188;
    const Rational lead = R(27, 256) * K * K * K * K + R(13, 64) * K * K * K;
    switch (k % 4) {
    case 0: v = lead + R(3, 8) * K * K + K; break;
    case 1: v = lead + R(41, 128) * K * K + R(53, 64) * K - R(117, 256); break;
    case 2: v = lead + R(1, 8) * K * K + R(7, 16) * K - R(11, 16); break;
    default: v = lead + R(37, 128) * K * K + R(57, 64) * K - R(77, 256); break;
    }
    break;
  }
  default:
    throw std::invalid_argument("closed form only tabulated for 1 <= c <= 4");
  }
  if (denominator(v) != 1)
    throw InvariantViolation("table formula mismatch");
  return to_exponent(numerator(v));
}

Exponent elementary_bound(unsigned k, unsigned c) {
  require_positive(k, c);
  return checked_mul(k, geometric_sum(k, c));
}

Exponent class2_exponent(unsigned k) {
  if (k == 0)
    throw std::invalid_argument("k must be positive");
  return Exponent{k} + Exponent{k / 2} * Exponent{(k + 1) / 2};
}

Exponent binomial_lower(unsigned k, unsigned c) {
  require_positive(k, c);
  if (k % c != 0)
    throw std::invalid_argument("divisibility required");
  const unsigned u = k / c;
  return to_exponent(BigInt(u) * binomial(k - u, c - 1));
}

Rational asymptotic_coefficient(unsigned c) {
  if (c == 0)
    throw std::invalid_argument("c must be positive");
  const BigInt num = boost::multiprecision::pow(BigInt(c - 1), c - 1); // pow(0, 0) == 1
  const BigInt den = boost::multiprecision::pow(BigInt(c), c);
  return Rational(num, den);
}

Exponent monomial_count(unsigned v, unsigned i, unsigned p) {
  if (p < 2)
    throw std::invalid_argument("p must be at least 2");
  // coefficients of (1 + x + ... + x^{p-1})^j truncated at degree i
  std::vector<BigInt> coeff(i + 1, 0);
  coeff[0] = 1;
  for (unsigned j = 0; j < v; ++j) {
    std::vector<BigInt> next(i + 1, 0);
    for (unsigned d = 0; d <= i; ++d) {
      if (coeff[d] == 0)
        continue;
      for (unsigned e = 0; e < p && d + e <= i; ++e)
        next[d + e] += coeff[d];
    }
    coeff = std::move(next);
  }
  return to_exponent(coeff[i]);
}

bool is_prime(std::uint64_t n) {
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

BigInt combine_multiplicative(const std::map<std::uint64_t, Exponent> &factors) {
  std::map<std::uint64_t, bool> seen;
  BigInt product = 1;
  for (const auto &[prime_power, exponent] : factors) {
    if (prime_power < 2)
      throw std::invalid_argument("factor keys must be prime powers");
    std::uint64_t p = 2;
    while (prime_power % p != 0)
      ++p;
    std::uint64_t rest = prime_power;
    while (rest % p == 0)
      rest /= p;
    if (rest != 1)
      throw std::invalid_argument("factor key " + std::to_string(prime_power) +
                                  " is not a prime power");
    if (seen[p])
      throw std::invalid_argument("repeated prime base " + std::to_string(p));
    seen[p] = true;
    if (exponent > std::numeric_limits<unsigned>::max())
      throw std::overflow_error("exponent overflow");
    product *= boost::multiprecision::pow(BigInt(p), static_cast<unsigned>(exponent));
  }
  return product;
}

BoundReport bound_report(unsigned p, unsigned k, unsigned c) {
  if (!is_prime(p))
    throw std::invalid_argument("p must be prime");
  require_positive(k, c);
  BoundReport r;
  r.p = p;
  r.k = k;
  r.c = c;
  const CompositionMax m = f_upper(k, c);
  r.f_upper = m.value;
  r.witness = m.witness;
  r.elementary = elementary_bound(k, c);
  if (c >= 2)
    r.class2_exact = class2_exponent(k);
  if (k % c == 0)
    r.binomial_lower = binomial_lower(k, c);
  r.asymptotic_coefficient = asymptotic_coefficient(c);
  return r;
}

nlohmann::json rational_to_json(const Rational &q) {
  auto part = [](const BigInt &x) -> nlohmann::json {
    if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
      return x.convert_to<std::int64_t>();
    return x.str();
  };
  return {{"num", part(numerator(q))}, {"den", part(denominator(q))}};
}

nlohmann::json to_json(const BoundReport &r) {
  nlohmann::json j;
  j["p"] = r.p;
  j["k"] = r.k;
  j["c"] = r.c;
  j["f_upper"] = r.f_upper;
  j["elementary"] = r.elementary;
  j["class2_exact"] = r.class2_exact ? nlohmann::json(*r.class2_exact) : nlohmann::json();
  j["binomial_lower"] = r.binomial_lower ? nlohmann::json(*r.binomial_lower) : nlohmann::json();
  j["witness_composition"] = r.witness.parts;
  j["asymptotic_coefficient"] = rational_to_json(r.asymptotic_coefficient);
  return j;
}

} // namespace nilbound
