#ifndef NILBOUND_SEARCH_HPP
#define NILBOUND_SEARCH_HPP

#include "nilbound/perm_group.hpp"

#include <nlohmann/json.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace nilbound {

/// Default cap on the number of subgroups a search may visit. The CLI lets
/// NILBOUND_BUDGET override it.
inline constexpr std::size_t kDefaultSearchBudget = 1'000'000;

struct SubgroupSearchOptions {
  enum class Dedupe { Set, Conjugacy };

  Dedupe dedupe = Dedupe::Set;
  std::size_t max_count = kDefaultSearchBudget;
  /// Largest ambient order accepted (2^7 covers the degree-8 Sylow
  /// 2-subgroup, and 3^4 the degree-9 Sylow 3-subgroup).
  std::size_t max_order = 128;
  /// Worker threads per extension layer; results do not depend on it.
  unsigned threads = 1;
};

/// Every subgroup of the p-group `s` (Set), or one per s-conjugacy class
/// (Conjugacy), in order of increasing size. Subgroups of order p^{i+1} are
/// grown from those of order p^i as <H, g> with g normalizing H and
/// g^p in H; duplicates are removed by the subgroup's element set.
///
/// Throws std::invalid_argument if |s| is not a prime power, and
/// GuardExceeded("search budget exceeded") past either limit.
std::vector<PermGroup> enumerate_subgroups(const PermGroup &s,
                                           const SubgroupSearchOptions &options = {});

/// Streaming form of enumerate_subgroups.
void for_each_subgroup(const PermGroup &s, const SubgroupSearchOptions &options,
                       const std::function<void(const PermGroup &)> &visit);

struct SearchRow {
  unsigned p = 0;
  unsigned k = 0;
  unsigned c_max = 0;
  /// exponents[c-1]: largest log_p |G| over transitive G of class <= c.
  std::vector<unsigned> exponents;
  /// witnesses[c-1] attains exponents[c-1]. May be empty for rows that were
  /// not produced by a search.
  std::vector<PermGroup> witnesses;
  std::size_t subgroups_examined = 0;
};

struct ExactSearchOptions {
  SubgroupSearchOptions subgroups{SubgroupSearchOptions::Dedupe::Conjugacy};
  /// Largest degree p^k searched exhaustively.
  std::size_t max_degree = 9;
};

/// Maximum order of a transitive nilpotent group of degree p^k and class at
/// most c, for c = 1..c_max, found by searching every subgroup of the Sylow
/// p-subgroup of Sym(p^k).
///
/// Searching a single Sylow subgroup loses nothing: any transitive p-group
/// of degree p^k is conjugate in Sym(p^k) into it, and conjugation preserves
/// order, class and transitivity.
///
/// Throws GuardExceeded when p^k > options.max_degree.
SearchRow fnil_exact(unsigned p, unsigned k, unsigned c_max, const ExactSearchOptions &options = {});

struct AuditCheck {
  std::string name;
  bool passed = true;
  std::string detail;
};

struct AuditReport {
  std::vector<AuditCheck> checks;

  bool passed() const;
  /// Failing checks only, "name: detail" per line.
  std::string failures() const;
};

/// Checks a row against the abelian-regular value, the composition upper
/// bound, the exact class-2 value, monotonicity and the Sylow cap, then
/// re-analyzes each witness from its generators. Never throws on a failed
/// check.
AuditReport audit_row(const SearchRow &row);

/// {"p", "k", "c_max", "exponents", "witnesses": [group JSON, ...],
///  "subgroups_examined"}
nlohmann::json to_json(const SearchRow &row);

/// Reference values of log_2 F_Nil(2^k, c) for k = 1..5 and c = 1..16,
/// from an external computer-algebra computation. Rows k <= 3 are
/// recomputed by fnil_exact; rows k = 4, 5 are reference data only.
const std::vector<unsigned> &reference_table2_row(unsigned k);

} // namespace nilbound

#endif // NILBOUND_SEARCH_HPP
