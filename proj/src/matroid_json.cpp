#include "corank/matroid_json.hpp"

#include <fstream>
#include <stdexcept>

#include "corank/catalog.hpp"

namespace corank {

Matroid matroid_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw std::invalid_argument("matroid JSON must be an object with a \"type\" field");
  const std::string type = j.at("type").get<std::string>();
  if (type == "uniform") return Matroid::uniform(j.at("r").get<int>(), j.at("n").get<int>());
  if (type == "graphic") {
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2)
        throw std::invalid_argument("graphic edge must be a pair [u,v]");
      edges.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Matroid::graphic(j.at("vertices").get<int>(), edges);
  }
  if (type == "linear") {
    std::vector<std::vector<std::int64_t>> columns;
    for (const auto& col : j.at("columns")) columns.push_back(col.get<std::vector<std::int64_t>>());
    return Matroid::linear(j.at("p").get<std::int64_t>(), columns);
  }
  if (type == "vector_space")
    return Matroid::vector_space(j.at("d").get<int>(), j.at("q").get<std::int64_t>());
  if (type == "projective")
    return Matroid::projective(j.at("d").get<int>(), j.at("q").get<std::int64_t>());
  if (type == "catalog") return catalog_matroid(j.at("name").get<std::string>());
  throw std::invalid_argument("unknown matroid type '" + type + "'");
}

Matroid load_matroid(const std::string& source) {
  constexpr std::string_view prefix = "catalog:";
  if (source.starts_with(prefix)) return catalog_matroid(source.substr(prefix.size()));
  if (!source.empty() && source.front() == '{') {
    try {
      return matroid_from_json(nlohmann::json::parse(source));
    } catch (const nlohmann::json::parse_error& e) {
      throw std::invalid_argument(std::string("malformed matroid JSON: ") + e.what());
    }
  }
  std::ifstream in(source);
  if (!in) throw std::invalid_argument("cannot open matroid file '" + source + "'");
  try {
    nlohmann::json j;
    in >> j;
    return matroid_from_json(j);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument("malformed matroid JSON in '" + source + "': " + e.what());
  }
}

}  // namespace corank
