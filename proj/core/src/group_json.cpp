#include "nilbound/group_json.hpp"

#include "nilbound/errors.hpp"

#include <string>

namespace nilbound {

nlohmann::json group_to_json(const PermGroup &g) {
  nlohmann::json gens = nlohmann::json::array();
  for (const Permutation &p : g.generators())
    gens.push_back(std::vector<Point>(p.images().begin(), p.images().end()));
  return {{"degree", g.degree()}, {"generators", std::move(gens)}};
}

PermGroup group_from_json(const nlohmann::json &j) {
  if (!j.is_object())
    throw ParseError("group JSON must be an object");
  if (!j.contains("degree") || !j["degree"].is_number_unsigned() || j["degree"].get<std::size_t>() == 0)
    throw ParseError("\"degree\" must be a positive integer");
  if (!j.contains("generators") || !j["generators"].is_array())
    throw ParseError("\"generators\" must be an array");

  const auto degree = j["degree"].get<std::size_t>();
  std::vector<Permutation> gens;
  const auto &arr = j["generators"];
  for (std::size_t gi = 0; gi < arr.size(); ++gi) {
    const std::string where = "generator " + std::to_string(gi);
    const auto &imgs = arr[gi];
    if (!imgs.is_array())
      throw ParseError(where + ": not an array");
    if (imgs.size() != degree)
      throw ParseError(where + ": expected " + std::to_string(degree) + " images, got " +
                       std::to_string(imgs.size()));
    std::vector<Point> images(degree);
    std::vector<bool> seen(degree, false);
    for (std::size_t i = 0; i < degree; ++i) {
      const auto &v = imgs[i];
      if (!v.is_number_unsigned() || v.get<std::size_t>() >= degree)
        throw ParseError(where + ", position " + std::to_string(i) + ": image out of range");
      const auto x = v.get<Point>();
      if (seen[x])
        throw ParseError(where + ", position " + std::to_string(i) + ": repeated image " +
                         std::to_string(x) + " (not a bijection)");
      seen[x] = true;
      images[i] = x;
    }
    gens.emplace_back(std::move(images));
  }
  return PermGroup(degree, std::move(gens));
}

} // namespace nilbound
