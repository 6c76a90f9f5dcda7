#ifndef NILBOUND_GROUP_JSON_HPP
#define NILBOUND_GROUP_JSON_HPP

#include "nilbound/perm_group.hpp"

#include <nlohmann/json.hpp>

namespace nilbound {

/// {"degree": n, "generators": [[img_0, ..., img_{n-1}], ...]}
nlohmann::json group_to_json(const PermGroup &g);

/// Inverse of group_to_json. Throws ParseError with the generator index and
/// position of the first entry that breaks the format or bijectivity.
PermGroup group_from_json(const nlohmann::json &j);

} // namespace nilbound

#endif // NILBOUND_GROUP_JSON_HPP
