#pragma once

#include "corank/matroid.hpp"
#include "corank/poly.hpp"

namespace corank {

enum class InvariantKind {
  subset_corank,
  size_corank,
  rank_generating,
  tutte_paper,
  tutte_standard,
  characteristic,
  char_normalized,
  sc_normalized,
};

enum class TutteConvention { paper, standard };
enum class CharRoute { mobius, sc_specialization };

// SC(M; x_e.., l) = sum over subsets A of prod_{e in A} x_e * l^{r - rk A}.
// Variables are indexed by the matroid's base element labels.
MultiPoly subset_corank(const Matroid& m, int cap = kDefaultEnumCap);

// SC(M; x, l) = sum_A x^|A| l^{r - rk A}.
MultiPoly size_corank(const Matroid& m, int cap = kDefaultEnumCap);

// R(M; x, l) = sum_A x^{|A| - rk A} l^{r - rk A}.
MultiPoly rank_generating(const Matroid& m, int cap = kDefaultEnumCap);

// paper convention: R(M; x-1, l-1); standard convention swaps the variable
// roles so the corank variable comes first, printed in x and y.
MultiPoly tutte(const Matroid& m, TutteConvention convention, int cap = kDefaultEnumCap);

// chi(M; l): zero when M has a loop. The mobius route sums mu over the flat
// lattice; the sc route evaluates SC(M; -1, l). They agree.
MultiPoly characteristic(const Matroid& m, CharRoute route = CharRoute::mobius,
                         int cap = kDefaultEnumCap);

// l^{ambient_rank - sub_rank} * p, for the normalized invariants of a
// submatroid inside a larger ambient matroid.
MultiPoly normalized(const MultiPoly& p, int ambient_rank, int sub_rank);

MultiPoly compute_invariant(const Matroid& m, InvariantKind kind, int cap = kDefaultEnumCap);

}  // namespace corank
