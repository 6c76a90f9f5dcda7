#ifndef NILBOUND_STAB_CHAIN_HPP
#define NILBOUND_STAB_CHAIN_HPP

#include "nilbound/bigint.hpp"
#include "nilbound/permutation.hpp"

#include <cstddef>
#include <deque>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace nilbound {

/// Base and strong generating set, grown incrementally by the deterministic
/// Schreier-Sims algorithm.
///
/// Level i stores base point b_i, a generating set of the pointwise
/// stabilizer G^(i) of b_0..b_{i-1}, and a transversal u_beta (b_i^u_beta ==
/// beta) for the orbit of b_i under G^(i). Every g in G factors uniquely as
/// u_{m-1} ... u_1 u_0 with u_i taken from level i.
class StabChain {
public:
  /// `base_prefix` fixes the first base points; further points are chosen
  /// as needed while generators are added.
  explicit StabChain(std::size_t degree, std::span<const Point> base_prefix = {});

  /// Adds g to the group. No-op when g is already a member.
  void extend(const Permutation &g);

  bool contains(const Permutation &g) const;

  std::size_t degree() const noexcept { return degree_; }
  std::size_t depth() const noexcept { return levels_.size(); }
  Point base_point(std::size_t level) const { return levels_.at(level).base; }
  const std::vector<Point> &orbit(std::size_t level) const { return levels_.at(level).orbit; }

  /// Generators of the pointwise stabilizer of the first `level` base points.
  /// Past the last level this is empty (the trivial group).
  std::vector<Permutation> generators(std::size_t level = 0) const;

  BigInt order() const;

  /// Calls `visit` once for every group element. The caller is responsible
  /// for keeping the order small enough to enumerate.
  void for_each_element(const std::function<void(const Permutation &)> &visit) const;

private:
  struct Level {
    Point base = 0;
    std::vector<Permutation> gens;
    std::vector<Point> orbit;
    std::vector<std::optional<Permutation>> transversal;
    std::vector<std::optional<Permutation>> transversal_inv;
  };

  void add_level(Point base);
  void extend_at(std::size_t level, const Permutation &g);
  /// Strips g through levels >= `from`; returns the residue and the level
  /// at which stripping stopped (depth() when it went all the way through).
  std::pair<Permutation, std::size_t> strip(Permutation g, std::size_t from) const;

  std::size_t degree_;
  // deque: recursive extension appends levels while references are live.
  std::deque<Level> levels_;
};

} // namespace nilbound

#endif // NILBOUND_STAB_CHAIN_HPP
