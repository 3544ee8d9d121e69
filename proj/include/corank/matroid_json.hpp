#pragma once

#include <string>

#include <json.hpp>

#include "corank/matroid.hpp"

namespace corank {

// Matroid descriptors:
//   {"type":"uniform","r":2,"n":3}
//   {"type":"graphic","vertices":4,"edges":[[0,1],[1,2]]}
//   {"type":"linear","p":2,"columns":[[1,0],[0,1],[1,1]]}
//   {"type":"vector_space","d":2,"q":2}
//   {"type":"projective","d":3,"q":2}
//   {"type":"catalog","name":"K4"}
Matroid matroid_from_json(const nlohmann::json& j);

// Accepts "catalog:NAME", a literal JSON object string, or a path to a JSON file.
Matroid load_matroid(const std::string& source);

}  // namespace corank
