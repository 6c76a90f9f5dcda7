#ifndef NILBOUND_CONSTRUCTIONS_HPP
#define NILBOUND_CONSTRUCTIONS_HPP

#include "nilbound/bigint.hpp"
#include "nilbound/perm_group.hpp"

#include <nlohmann/json.hpp>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace nilbound {

// Point encodings are fixed so that generator JSON is reproducible:
//  - vectors over Z/p (or mixed radix) are little-endian: x_0 + x_1 r_0 + ...
//  - product_action pairs (i, j) as i * deg(H) + j
//  - wreath_polynomial_group pairs (x, y) in U x V as index(x) * p^v + index(y)

/// Affine group V x| H on V = F_p^k, where H is the block unitriangular
/// group [[I_m, 0], [A, I_{k-m}]] acting by v -> vh + w. Generators: the k
/// unit translations, then one elementary matrix (adding coordinate r into
/// coordinate s) for each r in [m, k), s in [0, m). Requires m in
/// {floor(k/2), ceil(k/2)} and 1 <= m <= k.
PermGroup affine_unitriangular(unsigned p, unsigned k, unsigned m);

/// V x| H on V = C_{p^2}^a x C_p^{k-2a}. Z < V has order p^m and contains
/// the p-th powers; H is generated by the automorphisms v_i -> v_i z that fix
/// the complement generators w_j. Requires m in {floor(k/2), ceil(k/2)} and
/// a <= min(m, k - m).
///
/// Generators: first the k - a unit translations t_0..t_{k-a-1}, with the a
/// coordinates of order p^2 first, then the automorphisms. Z is generated by
/// t_i^p (i < a) and t_{a+j} (j < m - a).
PermGroup abelian_class2_group(unsigned p, unsigned k, unsigned m, unsigned a);

/// G x H on Delta x Lambda, coordinatewise.
PermGroup product_action(const PermGroup &g, const PermGroup &h);

/// Sylow p-subgroup of Sym(p^k): the k-fold iterated wreath product of C_p.
/// Generator l adds 1 to base-p digit l of a point whose lower digits are
/// all zero. Throws GuardExceeded when p^k > max_degree.
PermGroup iterated_wreath_sylow(unsigned p, unsigned k, std::size_t max_degree = 32);

/// V x| {f : V -> U reduced polynomial, deg f < c} acting on U x V by
/// (x, y) -> (x + f(y), y + t), with U = F_p^u and V = F_p^v. Throws
/// GuardExceeded when p^{u+v} > max_degree.
PermGroup wreath_polynomial_group(unsigned p, unsigned u, unsigned v, unsigned c,
                                  std::size_t max_degree = 64);

/// D_{2^{c+1}} x C_2^{k-c-1} in its right regular action on 2^k points.
/// Requires 1 <= c <= k - 1; c = 1 gives the elementary abelian group.
PermGroup dihedral_times_abelian(unsigned k, unsigned c);

/// Closed-form description of a construction's result.
struct Prediction {
  std::size_t degree = 0;
  BigInt order = 1;
  std::optional<unsigned> p;           ///< set when order is a power of one prime
  std::optional<unsigned> log_p_order;
  std::optional<int> class_bound;      ///< exact class; absent if not nilpotent

  friend bool operator==(const Prediction &, const Prediction &) = default;
};

enum class BlueprintKind {
  AffineUnitriangular,
  AbelianClass2,
  Product,
  SylowWreath,
  WreathPolynomial,
  DihedralAbelian,
};

struct GroupBlueprint {
  BlueprintKind kind{};
  std::map<std::string, unsigned> params;
  std::vector<GroupBlueprint> factors; ///< product only
};

/// Throws std::invalid_argument for missing or inadmissible parameters.
Prediction predict(const GroupBlueprint &bp);

struct Realization {
  Prediction prediction;
  std::optional<PermGroup> group; ///< absent when the realization guard refused
};

/// Predicts and, within guards, builds the group. Does not verify.
Realization realize(const GroupBlueprint &bp);

/// The prediction block of an actual group: degree, order, prime, class.
Prediction describe(const PermGroup &g);

/// Throws InvariantViolation naming the first field where the group
/// disagrees with the prediction.
void verify_prediction(const Prediction &expected, const PermGroup &g);

std::string kind_name(BlueprintKind kind);

/// {"kind": ..., "params": {...}}; product takes {"factors": [bp, ...]}.
GroupBlueprint blueprint_from_json(const nlohmann::json &j);
nlohmann::json to_json(const GroupBlueprint &bp);
nlohmann::json to_json(const Prediction &pred);

} // namespace nilbound

#endif // NILBOUND_CONSTRUCTIONS_HPP
