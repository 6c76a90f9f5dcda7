#include "corpus.hpp"
#include "oracles.hpp"

#include "nilbound/errors.hpp"
#include "nilbound/group_json.hpp"
#include "nilbound/perm_group.hpp"

#include <doctest.h>

#include <set>

using namespace nilbound;

namespace {

struct Case {
  corpus::Entry entry;
  oracle::ElementSet elements;
};

const std::vector<Case> &cases() {
  static const std::vector<Case> all = [] {
    std::vector<Case> out;
    for (auto &e : corpus::groups())
      out.push_back({e, oracle::naive_closure(e.group.degree(), e.group.generators())});
    return out;
  }();
  return all;
}

std::set<Point> oracle_orbit(const oracle::ElementSet &g, Point pt) {
  std::set<Point> orb;
  for (const auto &x : g)
    orb.insert(x[pt]);
  return orb;
}

oracle::ElementSet as_set(const PermGroup &g) {
  const auto elems = g.elements();
  return {elems.begin(), elems.end()};
}

} // namespace

TEST_CASE("corpus has at least twenty groups of order at most 10^4") {
  CHECK(cases().size() >= 20);
  for (const auto &c : cases())
    CHECK(c.elements.size() <= 10'000);
}

TEST_CASE("order and membership agree with naive closure") {
  for (const auto &c : cases()) {
    CAPTURE(c.entry.name);
    const PermGroup &g = c.entry.group;
    CHECK(g.order() == c.elements.size());
    CHECK(as_set(g) == c.elements);
    if (g.degree() <= 6)
      for (const auto &x : oracle::symmetric_group(g.degree()))
        CHECK(g.contains(x) == (c.elements.count(x) == 1));
  }
}

TEST_CASE("known orders") {
  using corpus::cyc;
  CHECK(PermGroup(4, {cyc(4, {{0, 1, 2, 3}})}).order() == 4);
  CHECK(PermGroup(4, {cyc(4, {{0, 1, 2, 3}}), cyc(4, {{0, 2}})}).order() == 8);
  CHECK(PermGroup::trivial(5).order() == 1);
  CHECK_THROWS_AS(PermGroup(3, {cyc(4, {{0, 1}})}), std::invalid_argument);
}

TEST_CASE("orbits and orbit-stabilizer at every point") {
  for (const auto &c : cases()) {
    CAPTURE(c.entry.name);
    const PermGroup &g = c.entry.group;
    std::set<std::set<Point>> expected_orbits;
    for (Point pt = 0; pt < g.degree(); ++pt) {
      const auto expected = oracle_orbit(c.elements, pt);
      expected_orbits.insert(expected);
      const auto orb = orbit(g, pt);
      CHECK(std::set<Point>(orb.begin(), orb.end()) == expected);

      const PermGroup stab = point_stabilizer(g, pt);
      CHECK(stab.order() * orb.size() == g.order());
      oracle::ElementSet fixing;
      for (const auto &x : c.elements)
        if (x[pt] == pt)
          fixing.insert(x);
      CHECK(as_set(stab) == fixing);
    }
    std::set<std::set<Point>> got;
    for (const auto &o : orbits(g))
      got.insert({o.begin(), o.end()});
    CHECK(got == expected_orbits);
    CHECK(is_transitive(g) == (expected_orbits.size() == 1));
  }
  CHECK_THROWS_AS(orbit(cases().front().entry.group, 99), std::out_of_range);
}

TEST_CASE("commutators, lower central series and class agree with element computations") {
  for (const auto &c : cases()) {
    CAPTURE(c.entry.name);
    const PermGroup &g = c.entry.group;
    const std::size_t n = g.degree();
    const auto derived = oracle::commutator_subgroup(n, c.elements, c.elements);
    CHECK(as_set(commutator_subgroup(g, g, g)) == derived);

    const CentralSeries series = lower_central_series(g);
    oracle::ElementSet term = c.elements;
    for (const PermGroup &t : series.terms) {
      CHECK(as_set(t) == term);
      term = oracle::commutator_subgroup(n, term, c.elements);
    }
    const int expected = oracle::nilpotency_class(n, c.elements);
    if (expected < 0) {
      CHECK_FALSE(series.nilpotent());
      CHECK_THROWS_AS(nilpotency_class(g), std::domain_error);
    } else {
      REQUIRE(series.nilpotent());
      CHECK(*series.nilpotency_class == expected);
      CHECK(nilpotency_class(g) == expected);
    }
  }
}

TEST_CASE("center, abelian and regular agree with element scans") {
  for (const auto &c : cases()) {
    CAPTURE(c.entry.name);
    const PermGroup &g = c.entry.group;
    const auto z = oracle::center(c.elements);
    CHECK(as_set(center(g)) == z);
    CHECK(is_abelian(g) == (z.size() == c.elements.size()));
    const bool regular = oracle_orbit(c.elements, 0).size() == g.degree() &&
                         c.elements.size() == g.degree();
    CHECK(is_regular(g) == regular);
  }
  CHECK_THROWS_AS(center(cases().back().entry.group, 4), GuardExceeded);
}

TEST_CASE("nonidentity central elements of transitive groups fix no point") {
  for (const auto &c : cases()) {
    if (!is_transitive(c.entry.group))
      continue;
    CAPTURE(c.entry.name);
    for (const auto &z : oracle::center(c.elements)) {
      if (z.is_identity())
        continue;
      for (Point pt = 0; pt < z.degree(); ++pt)
        CHECK(z[pt] != pt);
    }
  }
}

TEST_CASE("intersection of l point stabilizers has index at most n^l") {
  for (const auto &c : cases()) {
    const PermGroup &g = c.entry.group;
    if (!is_transitive(g))
      continue;
    CAPTURE(c.entry.name);
    const std::size_t n = g.degree();
    std::vector<Point> points;
    BigInt bound = 1;
    for (Point pt = 0; pt < n && pt < 4; ++pt) {
      points.push_back(static_cast<Point>((pt * 3 + 1) % n));
      bound *= n;
      const PermGroup inter = pointwise_stabilizer(g, points);
      CHECK(g.order() % inter.order() == 0);
      CHECK(g.order() / inter.order() <= bound);
      oracle::ElementSet fixing;
      for (const auto &x : c.elements)
        if (std::all_of(points.begin(), points.end(), [&](Point q) { return x[q] == q; }))
          fixing.insert(x);
      CHECK(as_set(inter) == fixing);
    }
  }
}

TEST_CASE("transitive abelian groups are regular") {
  for (const auto &c : cases()) {
    const PermGroup &g = c.entry.group;
    if (is_transitive(g) && is_abelian(g)) {
      CAPTURE(c.entry.name);
      CHECK(is_regular(g));
    }
  }
}

TEST_CASE("normal closure of one generator") {
  for (const auto &c : cases()) {
    const PermGroup &g = c.entry.group;
    if (g.generators().empty())
      continue;
    CAPTURE(c.entry.name);
    const Permutation seed = g.generators().front();
    std::vector<Permutation> conjugates;
    for (const auto &x : c.elements)
      conjugates.push_back(conjugate(seed, x));
    const auto expected = oracle::closure_of(g.degree(), conjugates);
    const std::vector<Permutation> seeds{seed};
    CHECK(as_set(normal_closure(g, seeds)) == expected);
  }
  const PermGroup c4(4, {corpus::cyc(4, {{0, 1, 2, 3}})});
  const std::vector<Permutation> outside{corpus::cyc(4, {{0, 1}})};
  CHECK_THROWS_AS(normal_closure(c4, outside), std::invalid_argument);
}

TEST_CASE("subgroup relations") {
  const PermGroup s4(4, {corpus::cyc(4, {{0, 1, 2, 3}}), corpus::cyc(4, {{0, 1}})});
  const PermGroup d4(4, {corpus::cyc(4, {{0, 1, 2, 3}}), corpus::cyc(4, {{0, 2}})});
  const PermGroup d4b(4, {corpus::cyc(4, {{0, 3, 2, 1}}), corpus::cyc(4, {{1, 3}})});
  CHECK(is_subgroup(d4, s4));
  CHECK_FALSE(is_subgroup(s4, d4));
  CHECK(same_group(d4, d4b));
  CHECK_FALSE(same_group(d4, s4));
  CHECK_THROWS_AS(commutator_subgroup(d4, s4, d4), std::invalid_argument);
}

TEST_CASE("group JSON round trip and error positions") {
  for (const auto &c : cases()) {
    const PermGroup back = group_from_json(group_to_json(c.entry.group));
    CHECK(same_group(back, c.entry.group));
    CHECK(group_to_json(back) == group_to_json(c.entry.group));
  }
  using nlohmann::json;
  CHECK_THROWS_WITH_AS(group_from_json(json::parse(R"({"degree":3,"generators":[[0,1,2],[0,0,1]]})")),
                       doctest::Contains("generator 1, position 1"), ParseError);
  CHECK_THROWS_WITH_AS(group_from_json(json::parse(R"({"degree":3,"generators":[[0,1,5]]})")),
                       doctest::Contains("position 2"), ParseError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"degree":3,"generators":[[0,1]]})")),
                  ParseError);
  CHECK_THROWS_AS(group_from_json(json::parse(R"({"generators":[]})")), ParseError);
}
