#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "corank/matroid.hpp"
#include "corank/poly.hpp"

namespace corank {

// The convolution-multiplication identities. 1, 4, 6, 7 are multivariate
// (one x_e / y_e per element); 2, 3, 5, 8, 9, eq4 are bivariate. eq4 sums
// over all subsets; eq4_cyclic restricts the same sum to cyclic flats.
enum class IdentityId { i1, i2, i3, i4, i5, i6, i7, i8, i9, eq4, eq4_cyclic };

std::string identity_name(IdentityId id);
IdentityId parse_identity(const std::string& name);
bool identity_is_multivariate(IdentityId id);

struct VerifyOptions {
  // Multivariate identities are checked symbolically up to this size...
  int multivariate_exact_cap = 8;
  // ...then by evaluation at random rational points up to this size.
  int multivariate_eval_cap = 12;
  int bivariate_cap = 12;
  int eval_rounds = 5;
  std::uint64_t eval_seed = 1;
  bool collect_terms = false;
};

struct IdentityReport {
  std::string identity;
  std::string matroid;
  MultiPoly lhs;
  MultiPoly rhs;
  bool equal = false;
  // True when equality was established by random evaluation instead of
  // canonical-form comparison.
  bool probabilistic = false;
  // Optional per-term breakdown of the RHS: (T, summand).
  std::vector<std::pair<SubsetMask, MultiPoly>> terms;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

IdentityReport verify(const Matroid& m, IdentityId id, const VerifyOptions& opts = {},
                      const std::string& label = "");

// For identities whose sum admits vanishing-term restrictions (5: flats;
// 8 and eq4: cyclic flats): computes the RHS over all subsets, over flats,
// and (where applicable) over cyclic flats, and reports whether every range
// gives the same polynomial as the LHS.
struct RestrictionReport {
  std::string identity;
  std::string matroid;
  MultiPoly lhs;
  MultiPoly sum_all_subsets;
  MultiPoly sum_flats;
  std::optional<MultiPoly> sum_cyclic_flats;
  bool equal = false;

  nlohmann::json to_json() const;
  std::string to_text() const;
};

RestrictionReport verify_restriction_argument(const Matroid& m, IdentityId id,
                                              const VerifyOptions& opts = {},
                                              const std::string& label = "");

}  // namespace corank
