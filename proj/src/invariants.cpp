#include "corank/invariants.hpp"

#include <bit>
#include <stdexcept>

namespace corank {

namespace {

void require_cap(const Matroid& m, int cap, const char* op) {
  if (m.size() > cap)
    throw std::invalid_argument(std::string(op) + ": ground set size " +
                                std::to_string(m.size()) + " exceeds enumeration cap " +
                                std::to_string(cap));
}

}  // namespace

MultiPoly subset_corank(const Matroid& m, int cap) {
  require_cap(m, cap, "subset_corank");
  const int n = m.size();
  const int r = m.rank();
  const auto& ids = m.element_ids();
  MultiPoly out;
  for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a) {
    std::vector<std::pair<Variable, int>> factors;
    for (int e = 0; e < n; ++e)
      if (a >> e & 1) factors.emplace_back(Variable::x(ids[e]), 1);
    const int corank = r - m.rank_bits(a);
    if (corank > 0) factors.emplace_back(Variable::lambda(), corank);
    out.add_term(Monomial(std::move(factors)), 1);
  }
  return out;
}

MultiPoly size_corank(const Matroid& m, int cap) {
  require_cap(m, cap, "size_corank");
  const int n = m.size();
  const int r = m.rank();
  MultiPoly out;
  for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a) {
    std::vector<std::pair<Variable, int>> factors;
    const int sz = std::popcount(a);
    if (sz > 0) factors.emplace_back(Variable::x(), sz);
    const int corank = r - m.rank_bits(a);
    if (corank > 0) factors.emplace_back(Variable::lambda(), corank);
    out.add_term(Monomial(std::move(factors)), 1);
  }
  return out;
}

MultiPoly rank_generating(const Matroid& m, int cap) {
  require_cap(m, cap, "rank_generating");
  const int n = m.size();
  const int r = m.rank();
  MultiPoly out;
  for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a) {
    const int rk = m.rank_bits(a);
    std::vector<std::pair<Variable, int>> factors;
    const int nullity = std::popcount(a) - rk;
    if (nullity > 0) factors.emplace_back(Variable::x(), nullity);
    if (r - rk > 0) factors.emplace_back(Variable::lambda(), r - rk);
    out.add_term(Monomial(std::move(factors)), 1);
  }
  return out;
}

MultiPoly tutte(const Matroid& m, TutteConvention convention, int cap) {
  const MultiPoly r = rank_generating(m, cap);
  const MultiPoly one = MultiPoly::one();
  if (convention == TutteConvention::paper) {
    return r.substitute({{Variable::x(), MultiPoly::var(Variable::x()) - one},
                         {Variable::lambda(), MultiPoly::var(Variable::lambda()) - one}});
  }
  // corank slot first: nullity variable becomes y, corank variable becomes x
  return r.substitute({{Variable::x(), MultiPoly::var(Variable::y()) - one},
                       {Variable::lambda(), MultiPoly::var(Variable::x()) - one}});
}

MultiPoly characteristic(const Matroid& m, CharRoute route, int cap) {
  require_cap(m, cap, "characteristic");
  if (route == CharRoute::sc_specialization) {
    // SC(M; -1, l), summed directly
    const int n = m.size();
    const int r = m.rank();
    MultiPoly out;
    for (std::uint64_t a = 0; a < (std::uint64_t(1) << n); ++a) {
      const int corank = r - m.rank_bits(a);
      const Rational sign = (std::popcount(a) % 2 == 0) ? 1 : -1;
      out.add_term(Monomial::var(Variable::lambda(), corank), sign);
    }
    return out;
  }
  if (!m.loops().empty()) return MultiPoly::zero();
  const FlatLattice lat = flats(m, cap);
  const int r = m.rank();
  MultiPoly out;
  for (std::size_t i = 0; i < lat.flats.size(); ++i)
    out.add_term(Monomial::var(Variable::lambda(), r - lat.ranks[i]), Rational(lat.mobius[i]));
  return out;
}

MultiPoly normalized(const MultiPoly& p, int ambient_rank, int sub_rank) {
  if (ambient_rank < sub_rank)
    throw std::invalid_argument("normalized: ambient rank below submatroid rank");
  return p * MultiPoly::term(Monomial::var(Variable::lambda(), ambient_rank - sub_rank), 1);
}

MultiPoly compute_invariant(const Matroid& m, InvariantKind kind, int cap) {
  switch (kind) {
    case InvariantKind::subset_corank:
      return subset_corank(m, cap);
    case InvariantKind::size_corank:
      return size_corank(m, cap);
    case InvariantKind::rank_generating:
      return rank_generating(m, cap);
    case InvariantKind::tutte_paper:
      return tutte(m, TutteConvention::paper, cap);
    case InvariantKind::tutte_standard:
      return tutte(m, TutteConvention::standard, cap);
    case InvariantKind::characteristic:
      return characteristic(m, CharRoute::mobius, cap);
    case InvariantKind::char_normalized:
      return characteristic(m, CharRoute::mobius, cap);  // ambient = m itself
    case InvariantKind::sc_normalized:
      return size_corank(m, cap);
  }
  throw std::logic_error("unknown invariant kind");
}

}  // namespace corank
