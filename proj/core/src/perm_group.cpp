#include "nilbound/perm_group.hpp"

#include "nilbound/errors.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace nilbound {

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators)
    : degree_(degree), generators_(std::move(generators)) {
  if (degree == 0)
    throw std::invalid_argument("degree must be positive");
  auto chain = std::make_shared<StabChain>(degree);
  for (const Permutation &g : generators_) {
    if (g.degree() != degree)
      throw std::invalid_argument("degree mismatch");
    chain->extend(g);
  }
  chain_ = std::move(chain);
}

std::vector<Permutation> PermGroup::elements(std::size_t limit) const {
  if (order() > limit)
    throw GuardExceeded("group too large to enumerate");
  std::vector<Permutation> out;
  out.reserve(static_cast<std::size_t>(order()));
  chain_->for_each_element([&](const Permutation &g) { out.push_back(g); });
  return out;
}

PermGroup group_from_generators(std::size_t degree, std::vector<Permutation> gens) {
  return PermGroup(degree, std::move(gens));
}

std::vector<Point> orbit(const PermGroup &g, Point point) {
  if (point >= g.degree())
    throw std::out_of_range("point out of range");
  std::vector<bool> seen(g.degree(), false);
  std::vector<Point> out{point};
  seen[point] = true;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const Permutation &s : g.generators()) {
      const Point y = s[out[i]];
      if (!seen[y]) {
        seen[y] = true;
        out.push_back(y);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::vector<Point>> orbits(const PermGroup &g) {
  std::vector<bool> seen(g.degree(), false);
  std::vector<std::vector<Point>> out;
  for (Point x = 0; x < g.degree(); ++x) {
    if (seen[x])
      continue;
    auto o = orbit(g, x);
    for (Point y : o)
      seen[y] = true;
    out.push_back(std::move(o));
  }
  return out;
}

PermGroup pointwise_stabilizer(const PermGroup &g, std::span<const Point> points) {
  for (Point x : points)
    if (x >= g.degree())
      throw std::out_of_range("point out of range");
  std::vector<Point> base;
  for (Point x : points)
    if (std::find(base.begin(), base.end(), x) == base.end())
      base.push_back(x);
  StabChain chain(g.degree(), base);
  for (const Permutation &s : g.generators())
    chain.extend(s);
  return PermGroup(g.degree(), chain.generators(base.size()));
}

PermGroup point_stabilizer(const PermGroup &g, Point point) {
  const Point pts[] = {point};
  return pointwise_stabilizer(g, pts);
}

PermGroup normal_closure(const PermGroup &g, std::span<const Permutation> seeds) {
  StabChain chain(g.degree());
  std::vector<Permutation> gens;
  std::deque<Permutation> pending;
  auto add = [&](const Permutation &x) {
    if (chain.contains(x))
      return;
    chain.extend(x);
    gens.push_back(x);
    pending.push_back(x);
  };
  for (const Permutation &s : seeds) {
    if (!g.contains(s))
      throw std::invalid_argument("seed not in group");
    add(s);
  }
  // Closing under conjugation by generators suffices in a finite group.
  while (!pending.empty()) {
    const Permutation n = std::move(pending.front());
    pending.pop_front();
    for (const Permutation &s : g.generators())
      add(conjugate(n, s));
  }
  return PermGroup(g.degree(), std::move(gens));
}

PermGroup commutator_subgroup(const PermGroup &g, const PermGroup &a, const PermGroup &b) {
  if (!is_subgroup(a, g) || !is_subgroup(b, g))
    throw std::invalid_argument("commutator arguments must be subgroups");
  std::vector<Permutation> joint = a.generators();
  joint.insert(joint.end(), b.generators().begin(), b.generators().end());
  const PermGroup ab(g.degree(), std::move(joint));

  std::vector<Permutation> seeds;
  for (const Permutation &x : a.generators())
    for (const Permutation &y : b.generators()) {
      Permutation c = commutator(x, y);
      if (!c.is_identity())
        seeds.push_back(std::move(c));
    }
  return normal_closure(ab, seeds);
}

CentralSeries lower_central_series(const PermGroup &g) {
  CentralSeries series;
  series.terms.push_back(g);
  while (true) {
    const PermGroup &last = series.terms.back();
    if (last.is_trivial()) {
      series.nilpotency_class = static_cast<int>(series.terms.size()) - 1;
      break;
    }
    PermGroup next = commutator_subgroup(g, last, g);
    if (next.order() == last.order())
      break;
    series.terms.push_back(std::move(next));
  }
  return series;
}

int nilpotency_class(const PermGroup &g) {
  const CentralSeries series = lower_central_series(g);
  if (!series.nilpotent())
    throw std::domain_error("not nilpotent");
  return *series.nilpotency_class;
}

PermGroup center(const PermGroup &g, std::size_t limit) {
  if (g.order() > limit)
    throw GuardExceeded("too large for center scan");
  StabChain chain(g.degree());
  std::vector<Permutation> gens;
  g.chain().for_each_element([&](const Permutation &x) {
    if (chain.contains(x))
      return;
    for (const Permutation &s : g.generators())
      if (x * s != s * x)
        return;
    chain.extend(x);
    gens.push_back(x);
  });
  return PermGroup(g.degree(), std::move(gens));
}

bool is_transitive(const PermGroup &g) {
  return orbit(g, 0).size() == g.degree();
}

bool is_regular(const PermGroup &g) {
  return is_transitive(g) && g.order() == g.degree();
}

bool is_abelian(const PermGroup &g) {
  const auto &gens = g.generators();
  for (std::size_t i = 0; i < gens.size(); ++i)
    for (std::size_t j = i + 1; j < gens.size(); ++j)
      if (gens[i] * gens[j] != gens[j] * gens[i])
        return false;
  return true;
}

bool is_subgroup(const PermGroup &h, const PermGroup &g) {
  if (h.degree() != g.degree())
    return false;
  return std::all_of(h.generators().begin(), h.generators().end(),
                     [&](const Permutation &x) { return g.contains(x); });
}

bool same_group(const PermGroup &a, const PermGroup &b) {
  return a.order() == b.order() && is_subgroup(a, b);
}

} // namespace nilbound
