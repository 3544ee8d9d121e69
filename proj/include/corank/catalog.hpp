#pragma once

#include <string>
#include <vector>

#include "corank/matroid.hpp"

namespace corank {

// Named desk-scale matroids: uniforms U_r_n for r <= n <= 6, cycles C3..C5,
// K4, Fano, GF_q_d vector spaces, PG projective planes, and the dual of each
// entry under the _dual suffix.
std::vector<std::string> catalog_names();
bool catalog_has(const std::string& name);
Matroid catalog_matroid(const std::string& name);

}  // namespace corank
