#include "oracles.hpp"

#include "nilbound/bounds.hpp"
#include "nilbound/constructions.hpp"
#include "nilbound/errors.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace nilbound;
using nlohmann::json;

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

struct Facts {
  std::size_t order;
  int cls;
  bool transitive;
  std::size_t center;
};

Facts facts(const PermGroup &g) {
  const auto elems = oracle::naive_closure(g.degree(), g.generators(), 20'000);
  std::set<Point> orb;
  for (const auto &x : elems)
    orb.insert(x[0]);
  return {elems.size(), oracle::nilpotency_class(g.degree(), elems), orb.size() == g.degree(),
          oracle::center(elems).size()};
}

} // namespace

TEST_CASE("affine unitriangular groups") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {3, 2}, {2, 4}, {5, 2}}) {
    CAPTURE(p);
    CAPTURE(k);
    for (unsigned m : {k / 2, (k + 1) / 2}) {
      const PermGroup g = affine_unitriangular(p, k, m);
      const Facts f = facts(g);
      CHECK(g.degree() == ipow(p, k));
      CHECK(f.order == ipow(p, k + m * (k - m)));
      CHECK(f.order == ipow(p, class2_exponent(k)));
      CHECK(f.cls == 2);
      CHECK(f.transitive);
      if (m == k / 2)
        CHECK(f.center == ipow(p, m));
    }
  }
  const Facts f = facts(affine_unitriangular(3, 2, 1));
  CHECK(f.order == 27);
  CHECK(f.center == 3);
  CHECK_THROWS_AS(affine_unitriangular(2, 4, 1), std::invalid_argument);
  CHECK_THROWS_AS(affine_unitriangular(4, 2, 1), std::invalid_argument);
}

TEST_CASE("abelian class-2 family") {
  for (auto [p, k] : std::vector<std::pair<unsigned, unsigned>>{{2, 2}, {2, 3}, {2, 4}, {3, 2}, {3, 3}, {5, 2}})
    for (unsigned m : {k / 2, (k + 1) / 2})
      for (unsigned a = 0; a <= std::min(m, k - m); ++a) {
        CAPTURE(p);
        CAPTURE(k);
        CAPTURE(m);
        CAPTURE(a);
        const PermGroup g = abelian_class2_group(p, k, m, a);
        const Facts f = facts(g);
        CHECK(g.degree() == ipow(p, k));
        CHECK(f.order == ipow(p, class2_exponent(k)));
        CHECK(f.cls == 2);
        CHECK(f.transitive);
      }
  CHECK_THROWS_AS(abelian_class2_group(2, 4, 2, 3), std::invalid_argument);
}

TEST_CASE("product action") {
  const PermGroup c2(2, {Permutation::from_cycles(2, {{0, 1}})});
  const PermGroup c3(3, {Permutation::from_cycles(3, {{0, 1, 2}})});
  const PermGroup g = product_action(c2, c3);
  CHECK(g.degree() == 6);
  CHECK(g.order() == 6);
  CHECK(is_regular(g));
  CHECK(is_abelian(g));
  // (i, j) is point i * 3 + j
  const auto &gens = g.generators();
  REQUIRE(gens.size() == 2);
  CHECK(gens[0][0 * 3 + 2] == 1 * 3 + 2);
  CHECK(gens[1][1 * 3 + 2] == 1 * 3 + 0);
}

TEST_CASE("iterated wreath Sylow subgroups") {
  CHECK(facts(iterated_wreath_sylow(2, 2)).order == 8);
  CHECK(facts(iterated_wreath_sylow(2, 3)).order == 128);
  CHECK(facts(iterated_wreath_sylow(2, 3)).cls == 4);
  CHECK(facts(iterated_wreath_sylow(3, 2)).order == 81);
  CHECK(facts(iterated_wreath_sylow(3, 2)).cls == 3);
  CHECK(iterated_wreath_sylow(2, 5).order() == BigInt(1) << 31);
  CHECK_THROWS_AS(iterated_wreath_sylow(2, 6), GuardExceeded);
}

TEST_CASE("wreath polynomial groups") {
  const PermGroup g = wreath_polynomial_group(2, 2, 2, 2);
  const Facts f = facts(g);
  CHECK(g.degree() == 16);
  CHECK(f.order == 256);
  CHECK(f.cls == 2);
  CHECK(f.transitive);
  CHECK(facts(wreath_polynomial_group(2, 1, 1, 2)).order == 8);
  CHECK(facts(wreath_polynomial_group(3, 1, 1, 3)).order == 81);
  CHECK(facts(wreath_polynomial_group(3, 1, 1, 3)).cls == 3);
  CHECK_THROWS_AS(wreath_polynomial_group(2, 4, 4, 2), GuardExceeded);
}

TEST_CASE("dihedral times elementary abelian") {
  for (auto [k, c] : std::vector<std::pair<unsigned, unsigned>>{{2, 1}, {3, 2}, {4, 2}, {4, 3}, {5, 4}, {5, 2}}) {
    CAPTURE(k);
    CAPTURE(c);
    const PermGroup g = dihedral_times_abelian(k, c);
    const Facts f = facts(g);
    CHECK(g.degree() == ipow(2, k));
    CHECK(f.order == ipow(2, k));
    CHECK(f.cls == static_cast<int>(c));
    CHECK(is_regular(g));
  }
  CHECK_THROWS_AS(dihedral_times_abelian(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(dihedral_times_abelian(3, 0), std::invalid_argument);
}

TEST_CASE("predictions match realized groups") {
  const std::vector<std::string> blueprints = {
      R"({"kind":"affine-unitriangular","params":{"p":2,"k":2,"m":1}})",
      R"({"kind":"affine-unitriangular","params":{"p":3,"k":3}})",
      R"({"kind":"abelian-class2","params":{"p":2,"k":4,"m":2,"a":2}})",
      R"({"kind":"sylow-wreath","params":{"p":2,"k":4}})",
      R"({"kind":"wreath-polynomial","params":{"p":2,"u":2,"v":2,"c":2}})",
      R"({"kind":"wreath-polynomial","params":{"p":2,"u":1,"v":4,"c":5}})",
      R"({"kind":"dihedral-abelian","params":{"k":5,"c":4}})",
      R"({"kind":"product","params":{"factors":[
           {"kind":"dihedral-abelian","params":{"k":2,"c":1}},
           {"kind":"sylow-wreath","params":{"p":3,"k":1}}]}})",
  };
  for (const auto &text : blueprints) {
    CAPTURE(text);
    const GroupBlueprint bp = blueprint_from_json(json::parse(text));
    const Realization r = realize(bp);
    REQUIRE(r.group);
    CHECK(describe(*r.group) == r.prediction);
    CHECK_NOTHROW(verify_prediction(r.prediction, *r.group));
    CHECK(blueprint_from_json(to_json(bp)).kind == bp.kind);
    CHECK(to_json(blueprint_from_json(to_json(bp))) == to_json(bp));
  }
}

TEST_CASE("product prediction") {
  const GroupBlueprint bp = blueprint_from_json(json::parse(R"({"kind":"product","params":{"factors":[
      {"kind":"dihedral-abelian","params":{"k":2,"c":1}},
      {"kind":"sylow-wreath","params":{"p":3,"k":1}}]}})"));
  const Prediction pred = predict(bp);
  CHECK(pred.degree == 12);
  CHECK(pred.order == 12);
  CHECK_FALSE(pred.p);
  CHECK(pred.class_bound == 1);
}

TEST_CASE("verification catches a wrong prediction") {
  const PermGroup g = affine_unitriangular(2, 2, 1);
  Prediction pred = describe(g);
  pred.order *= 2;
  CHECK_THROWS_AS(verify_prediction(pred, g), InvariantViolation);
  pred = describe(g);
  pred.class_bound = 3;
  CHECK_THROWS_AS(verify_prediction(pred, g), InvariantViolation);
  const PermGroup intransitive(4, {Permutation::from_cycles(4, {{0, 1}})});
  CHECK_THROWS_AS(verify_prediction(describe(intransitive), intransitive), InvariantViolation);
}

TEST_CASE("guard refusal leaves a prediction without a group") {
  const Realization r = realize(blueprint_from_json(json::parse(R"({"kind":"sylow-wreath","params":{"p":2,"k":6}})")));
  CHECK_FALSE(r.group);
  CHECK(r.prediction.log_p_order == 63u);
  CHECK(r.prediction.class_bound == 32);
}

TEST_CASE("blueprint parsing errors") {
  CHECK_THROWS_AS(blueprint_from_json(json::parse(R"({"params":{}})")), ParseError);
  CHECK_THROWS_AS(blueprint_from_json(json::parse(R"({"kind":"nope"})")), ParseError);
  CHECK_THROWS_AS(blueprint_from_json(json::parse(R"({"kind":"sylow-wreath","params":{"p":-2,"k":1}})")),
                  ParseError);
  CHECK_THROWS_AS(predict(blueprint_from_json(json::parse(R"({"kind":"sylow-wreath","params":{"p":2}})"))),
                  std::invalid_argument);
  CHECK_THROWS_AS(predict(blueprint_from_json(json::parse(R"({"kind":"sylow-wreath","params":{"p":6,"k":1}})"))),
                  std::invalid_argument);
}
