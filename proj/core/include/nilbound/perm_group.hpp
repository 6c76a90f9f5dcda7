#ifndef NILBOUND_PERM_GROUP_HPP
#define NILBOUND_PERM_GROUP_HPP

#include "nilbound/bigint.hpp"
#include "nilbound/permutation.hpp"
#include "nilbound/stab_chain.hpp"

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace nilbound {

/// Default cap on the number of elements an operation may enumerate.
inline constexpr std::size_t kElementScanLimit = 1'000'000;

/// A permutation group given by generators.
///
/// The stabilizer chain is built eagerly in the constructor and never
/// modified afterwards, so a PermGroup can be shared freely across threads.
/// Copies share the chain.
class PermGroup {
public:
  /// Throws std::invalid_argument if a generator's degree differs from
  /// `degree`. Identity generators are accepted and kept.
  PermGroup(std::size_t degree, std::vector<Permutation> generators);

  static PermGroup trivial(std::size_t degree) { return PermGroup(degree, {}); }

  std::size_t degree() const noexcept { return degree_; }
  const std::vector<Permutation> &generators() const noexcept { return generators_; }
  const StabChain &chain() const noexcept { return *chain_; }

  BigInt order() const { return chain_->order(); }
  bool contains(const Permutation &g) const { return chain_->contains(g); }
  bool is_trivial() const { return chain_->depth() == 0; }

  /// All elements, in chain order. Throws GuardExceeded past `limit`.
  std::vector<Permutation> elements(std::size_t limit = kElementScanLimit) const;

private:
  std::size_t degree_;
  std::vector<Permutation> generators_;
  std::shared_ptr<const StabChain> chain_;
};

/// Lower central series G = gamma_1 > gamma_2 > ... . `terms` stops at the
/// trivial group (nilpotent) or at the first repeated term (not nilpotent).
struct CentralSeries {
  std::vector<PermGroup> terms;
  std::optional<int> nilpotency_class;

  bool nilpotent() const noexcept { return nilpotency_class.has_value(); }
};

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens);

inline BigInt order(const PermGroup &g) { return g.order(); }

/// Sorted orbit of `point`. Throws std::out_of_range for a bad point.
std::vector<Point> orbit(const PermGroup &g, Point point);

/// All orbits, each sorted, ordered by least element.
std::vector<std::vector<Point>> orbits(const PermGroup &g);

PermGroup point_stabilizer(const PermGroup &g, Point point);

/// Subgroup fixing every point of `points`.
PermGroup pointwise_stabilizer(const PermGroup &g, std::span<const Point> points);

/// Smallest normal subgroup of g containing `seeds`. Throws
/// std::invalid_argument if a seed is not in g.
PermGroup normal_closure(const PermGroup &g, std::span<const Permutation> seeds);

/// [A, B], computed as the normal closure in <A, B> of the commutators of
/// generator pairs. A and B must be subgroups of g.
PermGroup commutator_subgroup(const PermGroup &g, const PermGroup &a, const PermGroup &b);

CentralSeries lower_central_series(const PermGroup &g);

/// Least c with gamma_{c+1}(g) = 1; 0 for the trivial group. Throws
/// std::domain_error("not nilpotent") otherwise.
int nilpotency_class(const PermGroup &g);

/// Z(g), by scanning elements. Throws GuardExceeded("too large for center
/// scan") when |g| exceeds `limit`.
PermGroup center(const PermGroup &g, std::size_t limit = kElementScanLimit);

bool is_transitive(const PermGroup &g);
bool is_regular(const PermGroup &g);
bool is_abelian(const PermGroup &g);

/// Every generator of h lies in g.
bool is_subgroup(const PermGroup &h, const PermGroup &g);

/// Same degree and same element set.
bool same_group(const PermGroup &a, const PermGroup &b);

} // namespace nilbound

#endif // NILBOUND_PERM_GROUP_HPP
