#include "corank/matroid.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "corank/rational.hpp"

namespace corank {

namespace {

class UniformOracle final : public RankOracle {
 public:
  UniformOracle(int r, int n) : r_(r), n_(n) {}
  int rank(std::span<const int> elems) const override {
    return std::min(r_, static_cast<int>(elems.size()));
  }
  int size() const override { return n_; }
  std::string describe() const override {
    return "uniform(r=" + std::to_string(r_) + ",n=" + std::to_string(n_) + ")";
  }

 private:
  int r_, n_;
};

class GraphicOracle final : public RankOracle {
 public:
  GraphicOracle(int vertices, std::vector<std::pair<int, int>> edges)
      : vertices_(vertices), edges_(std::move(edges)) {}

  int rank(std::span<const int> elems) const override {
    // vertices touched minus components of the selected edge subgraph
    std::vector<int> parent(vertices_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
      while (parent[v] != v) v = parent[v] = parent[parent[v]];
      return v;
    };
    int rank = 0;
    for (int e : elems) {
      const auto [u, v] = edges_[e];
      const int ru = find(u), rv = find(v);
      if (ru != rv) {
        parent[ru] = rv;
        ++rank;
      }
    }
    return rank;
  }
  int size() const override { return static_cast<int>(edges_.size()); }
  std::string describe() const override {
    return "graphic(vertices=" + std::to_string(vertices_) +
           ",edges=" + std::to_string(edges_.size()) + ")";
  }

 private:
  int vertices_;
  std::vector<std::pair<int, int>> edges_;
};

class LinearOracle final : public RankOracle {
 public:
  LinearOracle(std::int64_t p, std::vector<std::vector<std::int64_t>> columns, std::string label)
      : p_(p), columns_(std::move(columns)), label_(std::move(label)) {}

  int rank(std::span<const int> elems) const override {
    std::vector<std::vector<std::int64_t>> cols;
    cols.reserve(elems.size());
    for (int e : elems) cols.push_back(columns_[e]);
    return gf_rank(p_, cols);
  }
  int size() const override { return static_cast<int>(columns_.size()); }
  std::string describe() const override { return label_; }
  const std::vector<std::vector<std::int64_t>>& columns() const { return columns_; }
  std::int64_t field() const { return p_; }

 private:
  std::int64_t p_;
  std::vector<std::vector<std::int64_t>> columns_;
  std::string label_;
};

class ExplicitOracle final : public RankOracle {
 public:
  ExplicitOracle(int n, std::vector<int> ranks) : n_(n), ranks_(std::move(ranks)) {}
  int rank(std::span<const int> elems) const override {
    std::uint32_t mask = 0;
    for (int e : elems) mask |= 1u << e;
    return ranks_[mask];
  }
  int size() const override { return n_; }
  std::string describe() const override { return "explicit(n=" + std::to_string(n_) + ")"; }

 private:
  int n_;
  std::vector<int> ranks_;
};

std::vector<int> all_ids(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

Matroid::Matroid(std::shared_ptr<const RankOracle> base, std::vector<int> elems,
                 std::vector<int> contracted, bool dualized)
    : base_(std::move(base)),
      elems_(std::move(elems)),
      contracted_(std::move(contracted)),
      dual_(dualized) {
  contracted_rank_ = base_->rank(contracted_);
  std::vector<int> everything;
  everything.reserve(elems_.size() + contracted_.size());
  std::merge(elems_.begin(), elems_.end(), contracted_.begin(), contracted_.end(),
             std::back_inserter(everything));
  minor_full_rank_ = base_->rank(everything) - contracted_rank_;
  rank_ = dual_ ? static_cast<int>(elems_.size()) - minor_full_rank_ : minor_full_rank_;

  const int n = size();
  if (n <= 16) {
    const std::size_t total = std::size_t(1) << n;
    std::vector<int> inner(total);
    std::vector<int> scratch;
    for (std::uint64_t m = 0; m < total; ++m) {
      scratch.clear();
      for (int i = 0; i < n; ++i)
        if (m >> i & 1) scratch.push_back(elems_[i]);
      inner[m] = minor_rank(scratch);
    }
    table_.resize(total);
    const std::uint64_t full = total - 1;
    for (std::uint64_t m = 0; m < total; ++m) {
      // dual rank: |A| + rk(E\A) - r over the inner minor
      const int value = dual_ ? std::popcount(m) + inner[full ^ m] - minor_full_rank_ : inner[m];
      table_[m] = static_cast<std::uint8_t>(value);
    }
  }
}

int Matroid::rank_bits(std::uint64_t subset) const {
  const int n = size();
  if (n > 64) throw std::logic_error("rank_bits requires at most 64 elements");
  if (n < 64 && (subset >> n) != 0) throw std::invalid_argument("subset outside ground set");
  if (!table_.empty()) return table_[subset];
  std::vector<int> ids;
  for (int i = 0; i < n; ++i)
    if (subset >> i & 1) ids.push_back(i);
  return rank_of_ids(ids);
}

int Matroid::rank(const SubsetMask& subset) const {
  if (subset.width() != size()) throw std::invalid_argument("subset width mismatch");
  if (size() <= 64) return rank_bits(subset.to_bits());
  return rank_of_ids(subset.indices());
}

int Matroid::minor_rank(std::span<const int> base_elems) const {
  std::vector<int> with_contracted;
  with_contracted.reserve(base_elems.size() + contracted_.size());
  std::merge(base_elems.begin(), base_elems.end(), contracted_.begin(), contracted_.end(),
             std::back_inserter(with_contracted));
  return base_->rank(with_contracted) - contracted_rank_;
}

int Matroid::rank_of_ids(std::span<const int> local_ids) const {
  std::vector<int> base_ids;
  base_ids.reserve(local_ids.size());
  for (int i : local_ids) base_ids.push_back(elems_[i]);
  const int inner = minor_rank(base_ids);
  if (!dual_) return inner;
  // dual rank: |A| + rk(E\A) - r over the inner minor
  std::vector<int> rest;
  std::set_difference(elems_.begin(), elems_.end(), base_ids.begin(), base_ids.end(),
                      std::back_inserter(rest));
  return static_cast<int>(local_ids.size()) + minor_rank(rest) - minor_full_rank_;
}

SubsetMask Matroid::closure(const SubsetMask& subset) const {
  if (subset.width() != size()) throw std::invalid_argument("subset width mismatch");
  const int base_rank = rank(subset);
  SubsetMask cl = subset;
  for (int e = 0; e < size(); ++e) {
    if (subset.test(e)) continue;
    SubsetMask with = subset;
    with.set(e);
    if (rank(with) == base_rank) cl.set(e);
  }
  return cl;
}

SubsetMask Matroid::loops() const { return closure(SubsetMask(size())); }

SubsetMask Matroid::isthmuses() const {
  SubsetMask out(size());
  const SubsetMask everything = SubsetMask::full(size());
  for (int e = 0; e < size(); ++e) {
    SubsetMask without = everything;
    without.set(e, false);
    if (rank(without) == rank_ - 1) out.set(e);
  }
  return out;
}

Matroid Matroid::restrict_to(const SubsetMask& keep) const {
  if (keep.width() != size()) throw std::invalid_argument("subset width mismatch");
  std::vector<int> kept_base, dropped_base;
  for (int i = 0; i < size(); ++i)
    (keep.test(i) ? kept_base : dropped_base).push_back(elems_[i]);
  if (!dual_) return Matroid(base_, std::move(kept_base), contracted_, false);
  // (M^dual)|T = (M / (E\T))^dual
  std::vector<int> contr = contracted_;
  contr.insert(contr.end(), dropped_base.begin(), dropped_base.end());
  std::sort(contr.begin(), contr.end());
  return Matroid(base_, std::move(kept_base), std::move(contr), true);
}

Matroid Matroid::contract(const SubsetMask& away) const {
  if (away.width() != size()) throw std::invalid_argument("subset width mismatch");
  std::vector<int> kept_base, removed_base;
  for (int i = 0; i < size(); ++i)
    (away.test(i) ? removed_base : kept_base).push_back(elems_[i]);
  if (dual_)  // (M^dual)/T = (M|(E\T))^dual
    return Matroid(base_, std::move(kept_base), contracted_, true);
  std::vector<int> contr = contracted_;
  contr.insert(contr.end(), removed_base.begin(), removed_base.end());
  std::sort(contr.begin(), contr.end());
  return Matroid(base_, std::move(kept_base), std::move(contr), false);
}

Matroid Matroid::dual() const { return Matroid(base_, elems_, contracted_, !dual_); }

std::string Matroid::describe() const {
  std::string s = base_->describe();
  if (static_cast<int>(elems_.size()) != base_->size() || !contracted_.empty()) {
    s += "[minor n=" + std::to_string(elems_.size()) + "]";
  }
  if (dual_) s += "^*";
  return s;
}

Matroid Matroid::uniform(int r, int n) {
  if (r < 0 || n < 0) throw std::invalid_argument("uniform: negative parameter");
  if (r > n) throw std::invalid_argument("uniform: rank exceeds ground set size");
  return Matroid(std::make_shared<UniformOracle>(r, n), all_ids(n), {}, false);
}

Matroid Matroid::graphic(int vertex_count, const std::vector<std::pair<int, int>>& edges) {
  if (vertex_count < 0) throw std::invalid_argument("graphic: negative vertex count");
  for (const auto& [u, v] : edges)
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("graphic: edge endpoint out of range");
  return Matroid(std::make_shared<GraphicOracle>(vertex_count, edges),
                 all_ids(static_cast<int>(edges.size())), {}, false);
}

Matroid Matroid::linear(std::int64_t p, const std::vector<std::vector<std::int64_t>>& columns) {
  if (!is_prime(p)) throw std::invalid_argument("linear: field order must be prime, got " +
                                                std::to_string(p));
  const std::size_t height = columns.empty() ? 0 : columns[0].size();
  std::vector<std::vector<std::int64_t>> reduced;
  reduced.reserve(columns.size());
  for (const auto& col : columns) {
    if (col.size() != height) throw std::invalid_argument("linear: ragged columns");
    auto c = col;
    for (auto& e : c) e = ((e % p) + p) % p;
    reduced.push_back(std::move(c));
  }
  const int n = static_cast<int>(columns.size());
  return Matroid(std::make_shared<LinearOracle>(
                     p, std::move(reduced),
                     "linear(p=" + std::to_string(p) + ",n=" + std::to_string(n) + ")"),
                 all_ids(n), {}, false);
}

Matroid Matroid::vector_space(int d, std::int64_t q, long long cap) {
  if (d < 0) throw std::invalid_argument("vector_space: negative dimension");
  if (!is_prime(q)) throw std::invalid_argument("vector_space: q must be prime, got " +
                                                std::to_string(q));
  BigInt total = big_pow(BigInt(q), d);
  if (total > cap)
    throw std::invalid_argument("vector_space: q^d = " + total.str() + " exceeds cap " +
                                std::to_string(cap));
  const long long count = total.convert_to<long long>();
  // element id i is the vector with base-q digits of i, least significant first
  std::vector<std::vector<std::int64_t>> columns;
  columns.reserve(count);
  for (long long i = 0; i < count; ++i) {
    std::vector<std::int64_t> v(d);
    long long rem = i;
    for (int k = 0; k < d; ++k) {
      v[k] = rem % q;
      rem /= q;
    }
    columns.push_back(std::move(v));
  }
  return Matroid(std::make_shared<LinearOracle>(
                     q, std::move(columns),
                     "vector_space(d=" + std::to_string(d) + ",q=" + std::to_string(q) + ")"),
                 all_ids(static_cast<int>(count)), {}, false);
}

Matroid Matroid::projective(int d, std::int64_t q, long long cap) {
  if (d < 0) throw std::invalid_argument("projective: negative dimension");
  if (!is_prime(q)) throw std::invalid_argument("projective: q must be prime, got " +
                                                std::to_string(q));
  BigInt total = big_pow(BigInt(q), d);
  if (total > cap)
    throw std::invalid_argument("projective: q^d = " + total.str() + " exceeds cap " +
                                std::to_string(cap));
  const long long count = total.convert_to<long long>();
  // one representative per 1-dimensional subspace: first nonzero digit is 1
  std::vector<std::vector<std::int64_t>> columns;
  for (long long i = 1; i < count; ++i) {
    std::vector<std::int64_t> v(d);
    long long rem = i;
    for (int k = 0; k < d; ++k) {
      v[k] = rem % q;
      rem /= q;
    }
    std::int64_t first = 0;
    for (int k = 0; k < d; ++k)
      if (v[k] != 0) {
        first = v[k];
        break;
      }
    if (first == 1) columns.push_back(std::move(v));
  }
  const int n = static_cast<int>(columns.size());
  return Matroid(std::make_shared<LinearOracle>(
                     q, std::move(columns),
                     "projective(d=" + std::to_string(d) + ",q=" + std::to_string(q) + ")"),
                 all_ids(n), {}, false);
}

Matroid Matroid::from_rank_table(int n, const std::vector<int>& ranks) {
  if (n < 0 || n > 20) throw std::invalid_argument("rank table: n must be in 0..20");
  if (ranks.size() != (std::size_t(1) << n))
    throw std::invalid_argument("rank table: expected 2^n entries");
  if (ranks[0] != 0) throw std::invalid_argument("rank table: rank of empty set must be 0");
  for (std::uint32_t m = 0; m < ranks.size(); ++m)
    for (int e = 0; e < n; ++e) {
      if (m >> e & 1) continue;
      const int with = ranks[m | (1u << e)];
      if (with < ranks[m] || with > ranks[m] + 1)
        throw std::invalid_argument("rank table: not monotone unit-increasing");
    }
  return Matroid(std::make_shared<ExplicitOracle>(n, ranks), all_ids(n), {}, false);
}

int FlatLattice::index_of(const SubsetMask& flat) const {
  for (std::size_t i = 0; i < flats.size(); ++i)
    if (flats[i] == flat) return static_cast<int>(i);
  return -1;
}

FlatLattice flats(const Matroid& m, int cap) {
  const int n = m.size();
  if (n > cap)
    throw std::invalid_argument("flats: ground set size " + std::to_string(n) +
                                " exceeds enumeration cap " + std::to_string(cap));
  FlatLattice lat;
  // a set is a flat iff no outside element keeps the rank
  for (std::uint64_t mask = 0; mask < (std::uint64_t(1) << n); ++mask) {
    const int rk = m.rank_bits(mask);
    bool flat = true;
    for (int e = 0; e < n && flat; ++e)
      if (!(mask >> e & 1) && m.rank_bits(mask | (std::uint64_t(1) << e)) == rk) flat = false;
    if (flat) {
      lat.flats.push_back(SubsetMask::from_bits(mask, n));
      lat.ranks.push_back(rk);
    }
  }
  std::vector<std::size_t> order(lat.flats.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return lat.flats[a] < lat.flats[b]; });
  FlatLattice sorted;
  for (std::size_t i : order) {
    sorted.flats.push_back(lat.flats[i]);
    sorted.ranks.push_back(lat.ranks[i]);
  }
  // mu(bottom, X) by the defining recursion over the containment order
  sorted.mobius.assign(sorted.flats.size(), 0);
  for (std::size_t i = 0; i < sorted.flats.size(); ++i) {
    if (i == 0) {
      sorted.mobius[0] = 1;
      continue;
    }
    long long acc = 0;
    for (std::size_t j = 0; j < i; ++j)
      if (sorted.flats[j].is_subset_of(sorted.flats[i])) acc += sorted.mobius[j];
    sorted.mobius[i] = -acc;
  }
  return sorted;
}

long long mobius(const Matroid& m, const SubsetMask& flat, int cap) {
  const FlatLattice lat = flats(m, cap);
  const int idx = lat.index_of(flat);
  if (idx < 0) throw std::invalid_argument("mobius: " + flat.to_string() + " is not a flat");
  return lat.mobius[idx];
}

std::vector<SubsetMask> cyclic_flats(const Matroid& m, int cap) {
  std::vector<SubsetMask> out;
  for (const auto& f : flats(m, cap).flats) {
    if (m.restrict_to(f).isthmuses().empty()) out.push_back(f);
  }
  return out;
}

AxiomReport check_rank_axioms(const Matroid& m, int cap) {
  const int n = m.size();
  if (n > cap) return {false, "ground set too large for exhaustive check"};
  if (m.rank_bits(0) != 0) return {false, "rank of empty set is not 0"};
  const std::uint64_t full = n == 0 ? 0 : ((std::uint64_t(1) << n) - 1);
  if (m.rank_bits(full) != m.rank()) return {false, "rank(E) differs from reported rank"};
  for (std::uint64_t a = 0; a <= full; ++a) {
    const int ra = m.rank_bits(a);
    if (ra < 0) return {false, "negative rank"};
    for (int e = 0; e < n; ++e) {
      if (a >> e & 1) continue;
      const std::uint64_t ae = a | (std::uint64_t(1) << e);
      const int rae = m.rank_bits(ae);
      if (rae < ra || rae > ra + 1)
        return {false, "unit increase fails at " + SubsetMask::from_bits(a, n).to_string() +
                           " + element " + std::to_string(e)};
      for (int f = e + 1; f < n; ++f) {
        if (a >> f & 1) continue;
        const std::uint64_t af = a | (std::uint64_t(1) << f);
        const std::uint64_t aef = ae | af;
        if (rae + m.rank_bits(af) < m.rank_bits(aef) + ra)
          return {false, "submodularity fails at " + SubsetMask::from_bits(a, n).to_string() +
                             " with elements " + std::to_string(e) + "," + std::to_string(f)};
      }
    }
    if (full == 0) break;
  }
  return {};
}

}  // namespace corank
