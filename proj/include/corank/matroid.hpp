#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "corank/gfmat.hpp"
#include "corank/subset_mask.hpp"

namespace corank {

// Default ceiling for 2^n subset enumeration (flats, invariants, identities).
inline constexpr int kDefaultEnumCap = 20;
// Default ceiling on q^d for vector-space / projective ground sets.
inline constexpr long long kDefaultSpaceCap = 1 << 13;

// Pure rank oracle on a fixed base ground set 0..size-1. Implementations are
// immutable after construction and safe for concurrent use.
class RankOracle {
 public:
  virtual ~RankOracle() = default;
  // `elems` holds distinct base element ids in ascending order.
  virtual int rank(std::span<const int> elems) const = 0;
  virtual int size() const = 0;
  virtual std::string describe() const = 0;
};

// Matroid on ground set 0..size()-1, presented over a shared base oracle with
// a restriction/contraction/dual history. Elements of minors are relabeled to
// 0..n-1; element_ids() maps back to the base labels. All state is fixed at
// construction (rank tables included), so values may be shared across threads.
class Matroid {
 public:
  static Matroid uniform(int r, int n);
  static Matroid graphic(int vertex_count, const std::vector<std::pair<int, int>>& edges);
  static Matroid linear(std::int64_t p, const std::vector<std::vector<std::int64_t>>& columns);
  static Matroid vector_space(int d, std::int64_t q, long long cap = kDefaultSpaceCap);
  static Matroid projective(int d, std::int64_t q, long long cap = kDefaultSpaceCap);
  // Ranks for all 2^n subsets, indexed by bitmask; validated for
  // normalization, monotonicity and unit increase.
  static Matroid from_rank_table(int n, const std::vector<int>& ranks);

  int size() const { return static_cast<int>(elems_.size()); }
  int rank() const { return rank_; }

  // Fast path; requires size() <= 64. Bit i of `subset` selects element i.
  int rank_bits(std::uint64_t subset) const;
  int rank(const SubsetMask& subset) const;

  SubsetMask closure(const SubsetMask& subset) const;
  SubsetMask loops() const;
  SubsetMask isthmuses() const;

  Matroid restrict_to(const SubsetMask& keep) const;
  Matroid contract(const SubsetMask& away) const;
  Matroid dual() const;

  // Base labels of the live elements, ascending; element i of this matroid is
  // base element element_ids()[i].
  const std::vector<int>& element_ids() const { return elems_; }

  std::string describe() const;

 private:
  Matroid(std::shared_ptr<const RankOracle> base, std::vector<int> elems,
          std::vector<int> contracted, bool dualized);

  int minor_rank(std::span<const int> base_elems) const;  // before dualizing
  int rank_of_ids(std::span<const int> local_ids) const;

  std::shared_ptr<const RankOracle> base_;
  std::vector<int> elems_;       // live base ids, ascending
  std::vector<int> contracted_;  // contracted base ids, ascending
  bool dual_ = false;
  int contracted_rank_ = 0;  // base rank of the contracted set
  int minor_full_rank_ = 0;  // rank of the (non-dualized) minor
  int rank_ = 0;
  std::vector<std::uint8_t> table_;  // rank per local bitmask when n <= 16
};

// The flats of a matroid with containment order and Mobius values mu(bottom, X).
struct FlatLattice {
  std::vector<SubsetMask> flats;  // sorted by size then value; flats[0] is the bottom
  std::vector<int> ranks;
  std::vector<long long> mobius;

  const SubsetMask& bottom() const { return flats.front(); }
  int index_of(const SubsetMask& flat) const;  // -1 if not a flat
};

FlatLattice flats(const Matroid& m, int cap = kDefaultEnumCap);
long long mobius(const Matroid& m, const SubsetMask& flat, int cap = kDefaultEnumCap);
std::vector<SubsetMask> cyclic_flats(const Matroid& m, int cap = kDefaultEnumCap);

// Exhaustive rank-axiom check: normalization, monotone unit increase,
// submodularity. Intended for small ground sets (2^n * n^2 work).
struct AxiomReport {
  bool ok = true;
  std::string violation;  // empty when ok
};
AxiomReport check_rank_axioms(const Matroid& m, int cap = 12);

}  // namespace corank
