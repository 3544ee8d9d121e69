#include "corank/catalog.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace corank {

namespace {

Matroid cycle_graph(int k) {
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
  return Matroid::graphic(k, edges);
}

Matroid complete_k4() {
  return Matroid::graphic(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

const std::map<std::string, std::function<Matroid()>>& base_entries() {
  static const auto* entries = [] {
    auto* m = new std::map<std::string, std::function<Matroid()>>();
    for (int n = 0; n <= 6; ++n)
      for (int r = 0; r <= n; ++r)
        (*m)["U_" + std::to_string(r) + "_" + std::to_string(n)] = [r, n] {
          return Matroid::uniform(r, n);
        };
    (*m)["C3"] = [] { return cycle_graph(3); };
    (*m)["C4"] = [] { return cycle_graph(4); };
    (*m)["C5"] = [] { return cycle_graph(5); };
    (*m)["K4"] = [] { return complete_k4(); };
    (*m)["Fano"] = [] { return Matroid::projective(3, 2); };
    (*m)["GF_2_1"] = [] { return Matroid::vector_space(1, 2); };
    (*m)["GF_2_2"] = [] { return Matroid::vector_space(2, 2); };
    (*m)["GF_2_3"] = [] { return Matroid::vector_space(3, 2); };
    (*m)["GF_3_2"] = [] { return Matroid::vector_space(2, 3); };
    (*m)["PG_1_2"] = [] { return Matroid::projective(2, 2); };
    (*m)["PG_2_2"] = [] { return Matroid::projective(3, 2); };
    return m;
  }();
  return *entries;
}

}  // namespace

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const auto& [name, make] : base_entries()) names.push_back(name);
  const std::size_t base_count = names.size();
  for (std::size_t i = 0; i < base_count; ++i) names.push_back(names[i] + "_dual");
  return names;
}

bool catalog_has(const std::string& name) {
  if (base_entries().count(name)) return true;
  constexpr std::string_view suffix = "_dual";
  if (name.size() > suffix.size() && name.ends_with(suffix))
    return base_entries().count(name.substr(0, name.size() - suffix.size())) > 0;
  return false;
}

Matroid catalog_matroid(const std::string& name) {
  auto it = base_entries().find(name);
  if (it != base_entries().end()) return it->second();
  constexpr std::string_view suffix = "_dual";
  if (name.size() > suffix.size() && name.ends_with(suffix)) {
    auto base = base_entries().find(name.substr(0, name.size() - suffix.size()));
    if (base != base_entries().end()) return base->second().dual();
  }
  throw std::invalid_argument("unknown catalog matroid '" + name + "'");
}

}  // namespace corank
