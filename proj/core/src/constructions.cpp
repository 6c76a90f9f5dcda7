#include "nilbound/constructions.hpp"

#include "nilbound/bounds.hpp"
#include "nilbound/errors.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace nilbound {

namespace {

/// Little-endian mixed-radix coordinates.
class MixedRadix {
public:
  explicit MixedRadix(std::vector<unsigned> radices) : radices_(std::move(radices)) {
    size_ = 1;
    for (unsigned r : radices_)
      size_ *= r;
  }

  std::size_t size() const noexcept { return size_; }

  std::vector<unsigned> decode(std::size_t index) const {
    std::vector<unsigned> x(radices_.size());
    for (std::size_t i = 0; i < radices_.size(); ++i) {
      x[i] = static_cast<unsigned>(index % radices_[i]);
      index /= radices_[i];
    }
    return x;
  }

  std::size_t encode(const std::vector<unsigned> &x) const {
    std::size_t index = 0;
    for (std::size_t i = radices_.size(); i-- > 0;)
      index = index * radices_[i] + x[i] % radices_[i];
    return index;
  }

  /// Permutation of the coordinate space induced by `f`.
  template <typename F>
  Permutation induced(F f) const {
    std::vector<Point> images(size_);
    for (std::size_t i = 0; i < size_; ++i)
      images[i] = static_cast<Point>(encode(f(decode(i))));
    return Permutation(std::move(images));
  }

private:
  std::vector<unsigned> radices_;
  std::size_t size_;
};

void require_prime(unsigned p) {
  if (!is_prime(p))
    throw std::invalid_argument("p must be prime");
}

bool balanced_split(unsigned k, unsigned m) {
  return m == k / 2 || m == (k + 1) / 2;
}

std::size_t checked_power(unsigned base, unsigned exponent, std::size_t cap) {
  std::size_t r = 1;
  for (unsigned i = 0; i < exponent; ++i) {
    if (r > cap / base)
      return cap + 1;
    r *= base;
  }
  return r;
}

/// Exponent vectors of reduced monomials in v variables with degree < c,
/// ordered by degree, then lexicographically.
std::vector<std::vector<unsigned>> reduced_monomials(unsigned p, unsigned v, unsigned c) {
  std::vector<std::vector<unsigned>> all;
  std::vector<unsigned> e(v, 0);
  auto rec = [&](auto &&self, unsigned i) -> void {
    if (i == v) {
      all.push_back(e);
      return;
    }
    for (unsigned j = 0; j < p; ++j) {
      e[i] = j;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  std::vector<std::vector<unsigned>> out;
  for (const auto &m : all) {
    unsigned d = 0;
    for (unsigned x : m)
      d += x;
    if (d < c)
      out.push_back(m);
  }
  std::stable_sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    unsigned da = 0, db = 0;
    for (unsigned x : a)
      da += x;
    for (unsigned x : b)
      db += x;
    return da < db;
  });
  return out;
}

unsigned param(const GroupBlueprint &bp, const std::string &name) {
  auto it = bp.params.find(name);
  if (it == bp.params.end())
    throw std::invalid_argument(kind_name(bp.kind) + ": missing parameter \"" + name + "\"");
  return it->second;
}

unsigned param_or(const GroupBlueprint &bp, const std::string &name, unsigned fallback) {
  auto it = bp.params.find(name);
  return it == bp.params.end() ? fallback : it->second;
}

Prediction prime_power_prediction(std::size_t degree, unsigned p, Exponent log_order, int cls) {
  Prediction pred;
  pred.degree = degree;
  pred.p = p;
  pred.log_p_order = static_cast<unsigned>(log_order);
  pred.order = big_pow(p, static_cast<unsigned>(log_order));
  pred.class_bound = cls;
  return pred;
}

} // namespace

PermGroup affine_unitriangular(unsigned p, unsigned k, unsigned m) {
  require_prime(p);
  if (k == 0)
    throw std::invalid_argument("k must be positive");
  if (!balanced_split(k, m) || m < 1 || m > k)
    throw std::invalid_argument("m out of range");

  const MixedRadix space(std::vector<unsigned>(k, p));
  std::vector<Permutation> gens;
  for (unsigned i = 0; i < k; ++i)
    gens.push_back(space.induced([&](std::vector<unsigned> x) {
      x[i] = (x[i] + 1) % p;
      return x;
    }));
  // Row vector times [[I_m, 0], [E_{r,s}, I_{k-m}]]: coordinate s gains x_r.
  for (unsigned r = m; r < k; ++r)
    for (unsigned s = 0; s < m; ++s)
      gens.push_back(space.induced([&](std::vector<unsigned> x) {
        x[s] = (x[s] + x[r]) % p;
        return x;
      }));
  return PermGroup(space.size(), std::move(gens));
}

PermGroup abelian_class2_group(unsigned p, unsigned k, unsigned m, unsigned a) {
  require_prime(p);
  if (k == 0)
    throw std::invalid_argument("k must be positive");
  if (!balanced_split(k, m))
    throw std::invalid_argument("m out of range");
  if (a > std::min(m, k - m))
    throw std::invalid_argument("a out of range");

  // Coordinates: [0, a) mod p^2 carry v_1..v_a; then k-2a coordinates mod p,
  // the first m-a of which carry the complement generators w_j and the rest
  // the remaining generators v_{a+1}..v_{k-m}.
  const unsigned nshort = k - 2 * a;
  const unsigned nw = m - a;
  std::vector<unsigned> radices(a, p * p);
  radices.insert(radices.end(), nshort, p);
  const MixedRadix space(radices);
  const unsigned ncoords = a + nshort;

  // Z basis: p * e_t (t < a), then e_{a+j} (j < m-a).
  std::vector<std::vector<unsigned>> z_basis;
  for (unsigned t = 0; t < a; ++t) {
    std::vector<unsigned> z(ncoords, 0);
    z[t] = p;
    z_basis.push_back(z);
  }
  for (unsigned j = 0; j < nw; ++j) {
    std::vector<unsigned> z(ncoords, 0);
    z[a + j] = 1;
    z_basis.push_back(z);
  }
  // Coordinate of each v_i; x_i mod p is its coefficient modulo Z.
  std::vector<unsigned> v_coord;
  for (unsigned t = 0; t < a; ++t)
    v_coord.push_back(t);
  for (unsigned j = a + nw; j < ncoords; ++j)
    v_coord.push_back(j);

  std::vector<Permutation> gens;
  for (unsigned i = 0; i < ncoords; ++i)
    gens.push_back(space.induced([&](std::vector<unsigned> x) {
      x[i] += 1;
      return x;
    }));
  for (unsigned vi : v_coord)
    for (const auto &z : z_basis)
      gens.push_back(space.induced([&](std::vector<unsigned> x) {
        const unsigned coeff = x[vi] % p;
        for (unsigned t = 0; t < ncoords; ++t)
          x[t] += coeff * z[t];
        return x;
      }));
  return PermGroup(space.size(), std::move(gens));
}

PermGroup product_action(const PermGroup &g, const PermGroup &h) {
  const std::size_t dg = g.degree(), dh = h.degree();
  const std::size_t n = dg * dh;
  std::vector<Permutation> gens;
  for (const Permutation &x : g.generators()) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < dg; ++i)
      for (std::size_t j = 0; j < dh; ++j)
        images[i * dh + j] = static_cast<Point>(x[static_cast<Point>(i)] * dh + j);
    gens.emplace_back(std::move(images));
  }
  for (const Permutation &y : h.generators()) {
    std::vector<Point> images(n);
    for (std::size_t i = 0; i < dg; ++i)
      for (std::size_t j = 0; j < dh; ++j)
        images[i * dh + j] = static_cast<Point>(i * dh + y[static_cast<Point>(j)]);
    gens.emplace_back(std::move(images));
  }
  return PermGroup(n, std::move(gens));
}

PermGroup iterated_wreath_sylow(unsigned p, unsigned k, std::size_t max_degree) {
  require_prime(p);
  if (k == 0)
    throw std::invalid_argument("k must be positive");
  const std::size_t degree = checked_power(p, k, max_degree);
  if (degree > max_degree)
    throw GuardExceeded("iterated wreath product degree exceeds guard of " +
                        std::to_string(max_degree));
  const MixedRadix space(std::vector<unsigned>(k, p));
  std::vector<Permutation> gens;
  for (unsigned level = 0; level < k; ++level)
    gens.push_back(space.induced([&](std::vector<unsigned> x) {
      for (unsigned lower = 0; lower < level; ++lower)
        if (x[lower] != 0)
          return x;
      x[level] = (x[level] + 1) % p;
      return x;
    }));
  return PermGroup(degree, std::move(gens));
}

PermGroup wreath_polynomial_group(unsigned p, unsigned u, unsigned v, unsigned c,
                                  std::size_t max_degree) {
  require_prime(p);
  if (u == 0 || v == 0 || c == 0)
    throw std::invalid_argument("u, v and c must be positive");
  const std::size_t degree = checked_power(p, u + v, max_degree);
  if (degree > max_degree)
    throw GuardExceeded("wreath product degree exceeds guard of " + std::to_string(max_degree));

  // Coordinates: y_0..y_{v-1} (low), then x_0..x_{u-1} (high), so that the
  // index is index(x) * p^v + index(y).
  const MixedRadix space(std::vector<unsigned>(u + v, p));
  std::vector<Permutation> gens;
  for (unsigned j = 0; j < v; ++j)
    gens.push_back(space.induced([&](std::vector<unsigned> z) {
      z[j] = (z[j] + 1) % p;
      return z;
    }));
  const auto monomials = reduced_monomials(p, v, c);
  for (unsigned r = 0; r < u; ++r)
    for (const auto &mono : monomials)
      gens.push_back(space.induced([&](std::vector<unsigned> z) {
        unsigned value = 1;
        for (unsigned j = 0; j < v; ++j)
          for (unsigned e = 0; e < mono[j]; ++e)
            value = value * z[j] % p;
        z[v + r] = (z[v + r] + value) % p;
        return z;
      }));
  return PermGroup(degree, std::move(gens));
}

PermGroup dihedral_times_abelian(unsigned k, unsigned c) {
  if (c < 1 || c >= k)
    throw std::invalid_argument("dihedral_times_abelian requires 1 <= c <= k - 1");
  const std::size_t n = std::size_t{1} << c; // rotation order
  const std::size_t degree = std::size_t{1} << k;
  // point = i + n * j + 2n * bits  <->  r^i s^j e^bits
  auto act = [&](std::size_t rot, std::size_t ref, std::size_t bits) {
    std::vector<Point> images(degree);
    for (std::size_t x = 0; x < degree; ++x) {
      const std::size_t i = x % n, j = (x / n) % 2, b = x / (2 * n);
      // (r^i s^j)(r^rot s^ref) = r^{i + (-1)^j rot} s^{j + ref}
      const std::size_t ni = j == 0 ? (i + rot) % n : (i + n - rot) % n;
      const std::size_t nj = j ^ ref;
      images[x] = static_cast<Point>(ni + n * nj + 2 * n * (b ^ bits));
    }
    return Permutation(std::move(images));
  };
  std::vector<Permutation> gens{act(1, 0, 0), act(0, 1, 0)};
  for (unsigned t = 0; t + c + 1 < k; ++t)
    gens.push_back(act(0, 0, std::size_t{1} << t));
  return PermGroup(degree, std::move(gens));
}

std::string kind_name(BlueprintKind kind) {
  switch (kind) {
  case BlueprintKind::AffineUnitriangular: return "affine-unitriangular";
  case BlueprintKind::AbelianClass2: return "abelian-class2";
  case BlueprintKind::Product: return "product";
  case BlueprintKind::SylowWreath: return "sylow-wreath";
  case BlueprintKind::WreathPolynomial: return "wreath-polynomial";
  case BlueprintKind::DihedralAbelian: return "dihedral-abelian";
  }
  return "unknown";
}

Prediction predict(const GroupBlueprint &bp) {
  switch (bp.kind) {
  case BlueprintKind::AffineUnitriangular: {
    const unsigned p = param(bp, "p"), k = param(bp, "k"), m = param_or(bp, "m", k / 2);
    require_prime(p);
    if (k == 0 || !balanced_split(k, m) || m < 1)
      throw std::invalid_argument("m out of range");
    return prime_power_prediction(checked_power(p, k, SIZE_MAX), p, k + m * (k - m), k > 1 ? 2 : 1);
  }
  case BlueprintKind::AbelianClass2: {
    const unsigned p = param(bp, "p"), k = param(bp, "k");
    const unsigned m = param_or(bp, "m", k / 2), a = param_or(bp, "a", 0);
    require_prime(p);
    if (k == 0 || !balanced_split(k, m) || a > std::min(m, k - m))
      throw std::invalid_argument("abelian-class2 parameters out of range");
    return prime_power_prediction(checked_power(p, k, SIZE_MAX), p, k + m * (k - m), k > 1 ? 2 : 1);
  }
  case BlueprintKind::Product: {
    if (bp.factors.empty())
      throw std::invalid_argument("product needs at least one factor");
    Prediction pred = predict(bp.factors.front());
    for (std::size_t i = 1; i < bp.factors.size(); ++i) {
      const Prediction f = predict(bp.factors[i]);
      pred.degree *= f.degree;
      pred.order *= f.order;
      if (pred.p && f.p && *pred.p == *f.p) {
        *pred.log_p_order += *f.log_p_order;
      } else {
        pred.p.reset();
        pred.log_p_order.reset();
      }
      pred.class_bound = std::max(*pred.class_bound, *f.class_bound);
    }
    return pred;
  }
  case BlueprintKind::SylowWreath: {
    const unsigned p = param(bp, "p"), k = param(bp, "k");
    require_prime(p);
    if (k == 0)
      throw std::invalid_argument("k must be positive");
    // log_p order (p^k - 1)/(p - 1); class p^{k-1}
    Exponent log_order = 0, level = 1;
    for (unsigned i = 0; i < k; ++i, level *= p)
      log_order += level;
    return prime_power_prediction(checked_power(p, k, SIZE_MAX), p, log_order,
                                  static_cast<int>(level / p));
  }
  case BlueprintKind::WreathPolynomial: {
    const unsigned p = param(bp, "p"), u = param(bp, "u"), v = param(bp, "v"), c = param(bp, "c");
    require_prime(p);
    if (u == 0 || v == 0 || c == 0)
      throw std::invalid_argument("u, v and c must be positive");
    Exponent monomials = 0;
    for (unsigned i = 0; i < c; ++i)
      monomials += monomial_count(v, i, p);
    const int cls = static_cast<int>(std::min<unsigned>(c, v * (p - 1) + 1));
    return prime_power_prediction(checked_power(p, u + v, SIZE_MAX), p, v + u * monomials, cls);
  }
  case BlueprintKind::DihedralAbelian: {
    const unsigned k = param(bp, "k"), c = param(bp, "c");
    if (c < 1 || c >= k)
      throw std::invalid_argument("dihedral-abelian requires 1 <= c <= k - 1");
    return prime_power_prediction(std::size_t{1} << k, 2, k, static_cast<int>(c));
  }
  }
  throw std::invalid_argument("unknown blueprint kind");
}

Realization realize(const GroupBlueprint &bp) {
  Realization r;
  r.prediction = predict(bp);
  switch (bp.kind) {
  case BlueprintKind::AffineUnitriangular: {
    const unsigned k = param(bp, "k");
    r.group = affine_unitriangular(param(bp, "p"), k, param_or(bp, "m", k / 2));
    break;
  }
  case BlueprintKind::AbelianClass2: {
    const unsigned k = param(bp, "k");
    r.group = abelian_class2_group(param(bp, "p"), k, param_or(bp, "m", k / 2),
                                   param_or(bp, "a", 0));
    break;
  }
  case BlueprintKind::Product: {
    std::optional<PermGroup> acc;
    for (const GroupBlueprint &f : bp.factors) {
      Realization fr = realize(f);
      if (!fr.group)
        return r;
      acc = acc ? product_action(*acc, *fr.group) : *fr.group;
    }
    r.group = std::move(acc);
    break;
  }
  case BlueprintKind::SylowWreath:
    try {
      r.group = iterated_wreath_sylow(param(bp, "p"), param(bp, "k"));
    } catch (const GuardExceeded &) {
    }
    break;
  case BlueprintKind::WreathPolynomial:
    try {
      r.group = wreath_polynomial_group(param(bp, "p"), param(bp, "u"), param(bp, "v"),
                                        param(bp, "c"));
    } catch (const GuardExceeded &) {
    }
    break;
  case BlueprintKind::DihedralAbelian:
    r.group = dihedral_times_abelian(param(bp, "k"), param(bp, "c"));
    break;
  }
  return r;
}

Prediction describe(const PermGroup &g) {
  Prediction pred;
  pred.degree = g.degree();
  pred.order = g.order();
  if (pred.order > 1) {
    unsigned p = 2;
    while (pred.order % p != 0)
      ++p;
    if (auto e = exact_log(pred.order, p)) {
      pred.p = p;
      pred.log_p_order = *e;
    }
  }
  pred.class_bound = lower_central_series(g).nilpotency_class;
  return pred;
}

void verify_prediction(const Prediction &expected, const PermGroup &g) {
  const Prediction actual = describe(g);
  if (actual.degree != expected.degree)
    throw InvariantViolation("degree " + std::to_string(actual.degree) + " != predicted " +
                             std::to_string(expected.degree));
  if (actual.order != expected.order)
    throw InvariantViolation("order " + actual.order.str() + " != predicted " +
                             expected.order.str());
  if (actual.class_bound != expected.class_bound)
    throw InvariantViolation("nilpotency class does not match prediction");
  if (!is_transitive(g))
    throw InvariantViolation("construction is not transitive");
}

GroupBlueprint blueprint_from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
    throw ParseError("blueprint needs a string \"kind\"");
  static const std::map<std::string, BlueprintKind> kinds = {
      {"affine-unitriangular", BlueprintKind::AffineUnitriangular},
      {"abelian-class2", BlueprintKind::AbelianClass2},
      {"product", BlueprintKind::Product},
      {"sylow-wreath", BlueprintKind::SylowWreath},
      {"wreath-polynomial", BlueprintKind::WreathPolynomial},
      {"dihedral-abelian", BlueprintKind::DihedralAbelian},
  };
  const auto name = j["kind"].get<std::string>();
  auto it = kinds.find(name);
  if (it == kinds.end())
    throw ParseError("unknown blueprint kind \"" + name + "\"");

  GroupBlueprint bp;
  bp.kind = it->second;
  const nlohmann::json params = j.value("params", nlohmann::json::object());
  if (!params.is_object())
    throw ParseError("\"params\" must be an object");
  for (const auto &[key, value] : params.items()) {
    if (bp.kind == BlueprintKind::Product && key == "factors") {
      if (!value.is_array())
        throw ParseError("\"factors\" must be an array");
      for (const auto &f : value)
        bp.factors.push_back(blueprint_from_json(f));
      continue;
    }
    if (!value.is_number_unsigned())
      throw ParseError("parameter \"" + key + "\" must be a non-negative integer");
    bp.params[key] = value.get<unsigned>();
  }
  return bp;
}

nlohmann::json to_json(const GroupBlueprint &bp) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto &[key, value] : bp.params)
    params[key] = value;
  if (bp.kind == BlueprintKind::Product) {
    nlohmann::json factors = nlohmann::json::array();
    for (const auto &f : bp.factors)
      factors.push_back(to_json(f));
    params["factors"] = std::move(factors);
  }
  return {{"kind", kind_name(bp.kind)}, {"params", std::move(params)}};
}

nlohmann::json to_json(const Prediction &pred) {
  nlohmann::json j;
  j["degree"] = pred.degree;
  j["order"] = pred.order.str();
  j["p"] = pred.p ? nlohmann::json(*pred.p) : nlohmann::json();
  j["log_p_order"] = pred.log_p_order ? nlohmann::json(*pred.log_p_order) : nlohmann::json();
  j["class_bound"] = pred.class_bound ? nlohmann::json(*pred.class_bound) : nlohmann::json();
  return j;
}

} // namespace nilbound
