#include "nilbound/search.hpp"

#include "nilbound/bounds.hpp"
#include "nilbound/constructions.hpp"
#include "nilbound/errors.hpp"
#include "nilbound/group_json.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <unordered_set>

namespace nilbound {

namespace {

using Index = std::uint16_t;

/// Fixed-width set of element indices.
class ElementSet {
public:
  ElementSet() = default;
  explicit ElementSet(std::size_t n) : words_((n + 63) / 64, 0) {}

  void insert(Index i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool contains(Index i) const { return (words_[i / 64] >> (i % 64)) & 1; }
  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_)
      n += static_cast<std::size_t>(__builtin_popcountll(w));
    return n;
  }

  friend bool operator==(const ElementSet &, const ElementSet &) = default;
  friend auto operator<=>(const ElementSet &, const ElementSet &) = default;

  struct Hash {
    std::size_t operator()(const ElementSet &s) const noexcept {
      std::size_t h = 0;
      for (auto w : s.words_)
        h ^= w + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h;
    }
  };

private:
  std::vector<std::uint64_t> words_;
};

/// Multiplication table of a small permutation group, elements sorted so
/// that index 0 is the identity.
class GroupTable {
public:
  explicit GroupTable(const PermGroup &s) : degree_(s.degree()) {
    elements_ = s.elements();
    std::sort(elements_.begin(), elements_.end());
    const std::size_t n = elements_.size();
    auto index_of = [&](const Permutation &x) {
      auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
      return static_cast<Index>(it - elements_.begin());
    };
    mul_.assign(n * n, 0);
    inv_.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      inv_[i] = index_of(elements_[i].inverse());
      for (std::size_t j = 0; j < n; ++j)
        mul_[i * n + j] = index_of(elements_[i] * elements_[j]);
    }
  }

  std::size_t size() const noexcept { return elements_.size(); }
  std::size_t degree() const noexcept { return degree_; }
  Index mul(Index a, Index b) const { return mul_[a * elements_.size() + b]; }
  Index inv(Index a) const { return inv_[a]; }
  Index conj(Index h, Index g) const { return mul(inv(g), mul(h, g)); }
  Index comm(Index x, Index y) const { return mul(mul(inv(x), inv(y)), mul(x, y)); }
  const Permutation &element(Index i) const { return elements_[i]; }

  Index pow(Index g, unsigned e) const {
    Index r = 0;
    for (unsigned i = 0; i < e; ++i)
      r = mul(r, g);
    return r;
  }

  /// Subgroup generated by `gens`.
  ElementSet closure(const std::vector<Index> &gens, std::vector<Index> *members = nullptr) const {
    ElementSet set(size());
    std::vector<Index> list{0};
    set.insert(0);
    for (std::size_t i = 0; i < list.size(); ++i)
      for (Index g : gens) {
        const Index y = mul(list[i], g);
        if (!set.contains(y)) {
          set.insert(y);
          list.push_back(y);
        }
      }
    if (members)
      *members = std::move(list);
    return set;
  }

private:
  std::size_t degree_;
  std::vector<Permutation> elements_;
  std::vector<Index> mul_;
  std::vector<Index> inv_;
};

struct Node {
  ElementSet set;
  std::vector<Index> members; ///< ascending
  std::vector<Index> gens;
};

std::vector<Index> members_of(const ElementSet &set, std::size_t n) {
  std::vector<Index> out;
  for (std::size_t i = 0; i < n; ++i)
    if (set.contains(static_cast<Index>(i)))
      out.push_back(static_cast<Index>(i));
  return out;
}

unsigned prime_of_order(const BigInt &order) {
  if (order == 1)
    return 0;
  unsigned p = 2;
  while (order % p != 0)
    ++p;
  if (!exact_log(order, p))
    throw std::invalid_argument("subgroup search requires a p-group");
  return p;
}

/// Lattice walk over the subgroups of a p-group, one order at a time.
class SubgroupWalker {
public:
  SubgroupWalker(const PermGroup &s, const SubgroupSearchOptions &options)
      : options_(options) {
    if (s.order() > options.max_order)
      throw GuardExceeded("search budget exceeded: ambient order " + s.order().str() +
                          " above guard " + std::to_string(options.max_order));
    p_ = prime_of_order(s.order());
    table_.emplace(s);
  }

  const GroupTable &table() const { return *table_; }

  /// Calls visit(node) for each subgroup (or class representative).
  template <typename Visit>
  std::size_t run(Visit visit) {
    const GroupTable &t = *table_;
    std::vector<Node> layer(1);
    layer[0].set = t.closure({}, &layer[0].members);
    std::size_t count = 0;
    std::unordered_set<ElementSet, ElementSet::Hash> seen;

    while (!layer.empty()) {
      for (const Node &node : layer) {
        if (++count > options_.max_count)
          throw GuardExceeded("search budget exceeded: more than " +
                              std::to_string(options_.max_count) + " subgroups");
        visit(node);
      }
      if (p_ == 0)
        break;

      // Extension candidates per parent, computed independently and merged
      // in parent order so the result does not depend on scheduling.
      std::vector<std::vector<Node>> produced(layer.size());
      auto work = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i)
          produced[i] = extensions(layer[i]);
      };
      const unsigned nthreads = std::max(1u, std::min<unsigned>(options_.threads,
                                                                static_cast<unsigned>(layer.size())));
      if (nthreads == 1) {
        work(0, layer.size());
      } else {
        std::vector<std::thread> pool;
        const std::size_t chunk = (layer.size() + nthreads - 1) / nthreads;
        for (unsigned w = 0; w < nthreads; ++w) {
          const std::size_t b = w * chunk, e = std::min(layer.size(), b + chunk);
          if (b < e)
            pool.emplace_back(work, b, e);
        }
        for (auto &th : pool)
          th.join();
      }

      std::vector<Node> next;
      seen.clear();
      for (auto &batch : produced)
        for (Node &child : batch) {
          ElementSet key = options_.dedupe == SubgroupSearchOptions::Dedupe::Set
                               ? child.set
                               : canonical_conjugate(child);
          if (seen.insert(std::move(key)).second)
            next.push_back(std::move(child));
        }
      layer = std::move(next);
    }
    return count;
  }

private:
  std::vector<Node> extensions(const Node &h) const {
    const GroupTable &t = *table_;
    const std::size_t n = t.size();
    std::vector<Node> out;
    ElementSet covered = h.set;
    for (std::size_t gi = 0; gi < n; ++gi) {
      const auto g = static_cast<Index>(gi);
      if (covered.contains(g))
        continue;
      if (!h.set.contains(t.pow(g, p_)))
        continue;
      bool normalizes = true;
      for (Index x : h.gens)
        if (!h.set.contains(t.conj(x, g))) {
          normalizes = false;
          break;
        }
      if (!normalizes)
        continue;
      // <H, g> = H u Hg u ... u Hg^{p-1}
      Node child;
      child.set = ElementSet(n);
      Index gt = 0;
      for (unsigned e = 0; e < p_; ++e, gt = t.mul(gt, g))
        for (Index x : h.members)
          child.set.insert(t.mul(x, gt));
      child.members = members_of(child.set, n);
      child.gens = h.gens;
      child.gens.push_back(g);
      for (Index x : child.members)
        covered.insert(x);
      out.push_back(std::move(child));
    }
    return out;
  }

  ElementSet canonical_conjugate(const Node &node) const {
    const GroupTable &t = *table_;
    ElementSet best = node.set;
    for (std::size_t xi = 1; xi < t.size(); ++xi) {
      ElementSet conj(t.size());
      for (Index h : node.members)
        conj.insert(t.conj(h, static_cast<Index>(xi)));
      if (conj < best)
        best = std::move(conj);
    }
    return best;
  }

  SubgroupSearchOptions options_;
  unsigned p_ = 0;
  std::optional<GroupTable> table_;
};

PermGroup to_group(const GroupTable &t, const Node &node) {
  std::vector<Permutation> gens;
  for (Index g : node.gens)
    gens.push_back(t.element(g));
  return PermGroup(t.degree(), std::move(gens));
}

bool transitive_in_table(const GroupTable &t, const Node &node) {
  std::vector<bool> hit(t.degree(), false);
  std::size_t count = 0;
  for (Index x : node.members) {
    const Point y = t.element(x)[0];
    if (!hit[y]) {
      hit[y] = true;
      ++count;
    }
  }
  return count == t.degree();
}

/// Nilpotency class of a p-subgroup, by iterating gamma_{i+1} = [gamma_i, H]
/// on element sets.
int class_in_table(const GroupTable &t, const Node &node) {
  std::vector<Index> term = node.members;
  int cls = 0;
  while (term.size() > 1) {
    std::vector<Index> comms;
    ElementSet seen(t.size());
    for (Index x : term)
      for (Index y : node.gens) {
        const Index c = t.comm(x, y);
        if (!seen.contains(c)) {
          seen.insert(c);
          comms.push_back(c);
        }
      }
    // [gamma_i, H] is normal in H: close the commutators under conjugation
    // by H as well as multiplication.
    std::vector<Index> gens = comms;
    ElementSet next = t.closure(gens);
    bool grew = true;
    while (grew) {
      grew = false;
      for (Index c : members_of(next, t.size()))
        for (Index y : node.gens) {
          const Index d = t.conj(c, y);
          if (!next.contains(d)) {
            gens.push_back(d);
            grew = true;
          }
        }
      if (grew)
        next = t.closure(gens);
    }
    std::vector<Index> next_members = members_of(next, t.size());
    if (next_members.size() == term.size())
      throw std::domain_error("not nilpotent");
    term = std::move(next_members);
    ++cls;
  }
  return cls;
}

} // namespace

void for_each_subgroup(const PermGroup &s, const SubgroupSearchOptions &options,
                       const std::function<void(const PermGroup &)> &visit) {
  SubgroupWalker walker(s, options);
  walker.run([&](const Node &node) { visit(to_group(walker.table(), node)); });
}

std::vector<PermGroup> enumerate_subgroups(const PermGroup &s, const SubgroupSearchOptions &options) {
  std::vector<PermGroup> out;
  for_each_subgroup(s, options, [&](const PermGroup &g) { out.push_back(g); });
  return out;
}

SearchRow fnil_exact(unsigned p, unsigned k, unsigned c_max, const ExactSearchOptions &options) {
  if (!is_prime(p))
    throw std::invalid_argument("p must be prime");
  if (k == 0 || c_max == 0)
    throw std::invalid_argument("k and c_max must be positive");
  std::size_t degree = 1;
  for (unsigned i = 0; i < k && degree <= options.max_degree; ++i)
    degree *= p;
  if (degree > options.max_degree)
    throw GuardExceeded("exhaustive search refused for degree " + std::to_string(p) + "^" +
                        std::to_string(k) + " (guard " + std::to_string(options.max_degree) +
                        "); use the constructions for lower bounds and the bound "
                        "functions for upper bounds");

  const PermGroup sylow = iterated_wreath_sylow(p, k, options.max_degree);
  SubgroupWalker walker(sylow, options.subgroups);
  const GroupTable &t = walker.table();

  SearchRow row;
  row.p = p;
  row.k = k;
  row.c_max = c_max;

  // best[c] = (log order, witness) over transitive subgroups of class exactly c
  std::map<int, std::pair<unsigned, Node>> best;
  row.subgroups_examined = walker.run([&](const Node &node) {
    if (!transitive_in_table(t, node))
      return;
    const int cls = class_in_table(t, node);
    const unsigned log_order = *exact_log(BigInt(node.members.size()), p);
    auto it = best.find(cls);
    if (it == best.end() || log_order > it->second.first)
      best[cls] = {log_order, node};
  });

  for (unsigned c = 1; c <= c_max; ++c) {
    const Node *witness = nullptr;
    unsigned value = 0;
    for (const auto &[cls, entry] : best) {
      if (cls > static_cast<int>(c))
        break;
      if (!witness || entry.first > value) {
        value = entry.first;
        witness = &entry.second;
      }
    }
    if (!witness)
      throw InvariantViolation("no transitive subgroup found");
    row.exponents.push_back(value);
    row.witnesses.push_back(to_group(t, *witness));
  }
  return row;
}

bool AuditReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const AuditCheck &c) { return c.passed; });
}

std::string AuditReport::failures() const {
  std::ostringstream out;
  for (const AuditCheck &c : checks)
    if (!c.passed)
      out << c.name << ": " << c.detail << '\n';
  return out.str();
}

AuditReport audit_row(const SearchRow &row) {
  AuditReport report;
  auto check = [&](std::string name, bool ok, std::string detail) {
    report.checks.push_back({std::move(name), ok, ok ? std::string() : std::move(detail)});
  };

  if (row.exponents.empty()) {
    check("non-empty row", false, "row has no exponents");
    return report;
  }
  check("abelian-regular", row.exponents[0] == row.k,
        "abelian-regular violation: exponent " + std::to_string(row.exponents[0]) +
            " at class 1, expected " + std::to_string(row.k));

  Exponent sylow_cap = 0, level = 1;
  for (unsigned i = 0; i < row.k; ++i, level *= row.p)
    sylow_cap += level;

  for (std::size_t i = 0; i < row.exponents.size(); ++i) {
    const auto c = static_cast<unsigned>(i + 1);
    const Exponent bound = f_upper(row.k, c).value;
    check("upper bound c=" + std::to_string(c), row.exponents[i] <= bound,
          "upper-bound violation: exponent " + std::to_string(row.exponents[i]) +
              " exceeds F(k,c) = " + std::to_string(bound));
    check("sylow cap c=" + std::to_string(c), row.exponents[i] <= sylow_cap,
          "exponent exceeds the Sylow order exponent " + std::to_string(sylow_cap));
    if (i > 0)
      check("monotone c=" + std::to_string(c), row.exponents[i] >= row.exponents[i - 1],
            "exponents decrease from class " + std::to_string(c - 1));
  }
  if (row.exponents.size() >= 2)
    check("class-2 exact", row.exponents[1] == class2_exponent(row.k),
          "class-2 mismatch: exponent " + std::to_string(row.exponents[1]) + ", expected " +
              std::to_string(class2_exponent(row.k)));

  if (!row.witnesses.empty()) {
    if (row.witnesses.size() != row.exponents.size()) {
      check("witness count", false, "one witness per class expected");
      return report;
    }
    std::size_t degree = 1;
    for (unsigned i = 0; i < row.k; ++i)
      degree *= row.p;
    for (std::size_t i = 0; i < row.witnesses.size(); ++i) {
      const auto c = static_cast<int>(i + 1);
      const PermGroup reloaded = group_from_json(group_to_json(row.witnesses[i]));
      const Prediction d = describe(reloaded);
      const bool ok = d.degree == degree && is_transitive(reloaded) &&
                      d.order == big_pow(row.p, row.exponents[i]) && d.class_bound &&
                      *d.class_bound <= c;
      check("witness c=" + std::to_string(c), ok,
            "witness does not reproduce degree, transitivity, order or class");
    }
  }
  return report;
}

nlohmann::json to_json(const SearchRow &row) {
  nlohmann::json witnesses = nlohmann::json::array();
  for (const PermGroup &g : row.witnesses)
    witnesses.push_back(group_to_json(g));
  return {{"p", row.p},
          {"k", row.k},
          {"c_max", row.c_max},
          {"exponents", row.exponents},
          {"witnesses", std::move(witnesses)},
          {"subgroups_examined", row.subgroups_examined}};
}

const std::vector<unsigned> &reference_table2_row(unsigned k) {
  static const std::vector<std::vector<unsigned>> rows = {
      {1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1},
      {2, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3, 3},
      {3, 5, 6, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7, 7},
      {4, 8, 10, 12, 13, 14, 14, 15, 15, 15, 15, 15, 15, 15, 15, 15},
      {5, 11, 17, 19, 22, 25, 26, 27, 28, 29, 29, 30, 30, 30, 30, 31},
  };
  if (k < 1 || k > rows.size())
    throw std::out_of_range("reference rows exist for k = 1..5");
  return rows[k - 1];
}

} // namespace nilbound
