#include "corank/gfmat.hpp"

#include <stdexcept>

namespace corank {

GFMatrix GFMatrix::zero(std::int64_t p, int rows, int cols) {
  GFMatrix a;
  a.p = p;
  a.rows = rows;
  a.cols = cols;
  a.m.assign(rows, std::vector<std::int64_t>(cols, 0));
  return a;
}

GFMatrix GFMatrix::identity(std::int64_t p, int n) {
  GFMatrix a = zero(p, n, n);
  for (int i = 0; i < n; ++i) a.m[i][i] = 1;
  return a;
}

std::vector<std::int64_t> GFMatrix::column(int c) const {
  std::vector<std::int64_t> col(rows);
  for (int i = 0; i < rows; ++i) col[i] = m[i][c];
  return col;
}

std::int64_t mod_inverse(std::int64_t a, std::int64_t p) {
  // extended euclid; p prime, a != 0 mod p
  std::int64_t t = 0, new_t = 1, r = p, new_r = a % p;
  while (new_r != 0) {
    const std::int64_t q = r / new_r;
    t -= q * new_t;
    std::swap(t, new_t);
    r -= q * new_r;
    std::swap(r, new_r);
  }
  if (r != 1) throw std::invalid_argument("not invertible mod p");
  return ((t % p) + p) % p;
}

int gf_rank(std::int64_t p, const std::vector<std::vector<std::int64_t>>& columns) {
  if (columns.empty()) return 0;
  const int height = static_cast<int>(columns[0].size());
  // eliminate on copies of the columns
  std::vector<std::vector<std::int64_t>> basis;
  std::vector<int> pivot_row;
  int rank = 0;
  for (const auto& col : columns) {
    std::vector<std::int64_t> v = col;
    for (auto& e : v) e = ((e % p) + p) % p;
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const std::int64_t factor = v[pivot_row[b]];
      if (factor == 0) continue;
      for (int i = 0; i < height; ++i) v[i] = (v[i] - factor * basis[b][i] % p + p * p) % p;
    }
    int pr = -1;
    for (int i = 0; i < height; ++i)
      if (v[i] != 0) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    const std::int64_t inv = mod_inverse(v[pr], p);
    for (int i = 0; i < height; ++i) v[i] = v[i] * inv % p;
    basis.push_back(std::move(v));
    pivot_row.push_back(pr);
    ++rank;
  }
  return rank;
}

std::vector<int> gf_rref(GFMatrix& a) {
  const std::int64_t p = a.p;
  std::vector<int> pivots;
  int row = 0;
  for (int col = 0; col < a.cols && row < a.rows; ++col) {
    int pivot = -1;
    for (int i = row; i < a.rows; ++i)
      if (a.m[i][col] % p != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    std::swap(a.m[row], a.m[pivot]);
    const std::int64_t inv = mod_inverse(((a.m[row][col] % p) + p) % p, p);
    for (int j = 0; j < a.cols; ++j) a.m[row][j] = ((a.m[row][j] * inv) % p + p) % p;
    for (int i = 0; i < a.rows; ++i) {
      if (i == row) continue;
      const std::int64_t f = ((a.m[i][col] % p) + p) % p;
      if (f == 0) continue;
      for (int j = 0; j < a.cols; ++j)
        a.m[i][j] = ((a.m[i][j] - f * a.m[row][j]) % p + p * p) % p;
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

GFMatrix gf_row_basis(const GFMatrix& a) {
  GFMatrix r = a;
  const auto pivots = gf_rref(r);
  r.m.resize(pivots.size());
  r.rows = static_cast<int>(pivots.size());
  return r;
}

GFMatrix gf_select_columns(const GFMatrix& a, const std::vector<int>& cols) {
  GFMatrix r = GFMatrix::zero(a.p, a.rows, static_cast<int>(cols.size()));
  for (int i = 0; i < a.rows; ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) r.m[i][j] = a.m[i][cols[j]];
  return r;
}

GFMatrix gf_null_space_basis(const GFMatrix& a) {
  GFMatrix rref = a;
  const auto pivots = gf_rref(rref);
  const int rank = static_cast<int>(pivots.size());
  std::vector<bool> is_pivot(a.cols, false);
  for (int c : pivots) is_pivot[c] = true;

  GFMatrix out = GFMatrix::zero(a.p, a.cols - rank, a.cols);
  int row = 0;
  for (int free_col = 0; free_col < a.cols; ++free_col) {
    if (is_pivot[free_col]) continue;
    out.m[row][free_col] = 1;
    for (int i = 0; i < rank; ++i) {
      const std::int64_t v = rref.m[i][free_col];
      if (v != 0) out.m[row][pivots[i]] = (a.p - v) % a.p;
    }
    ++row;
  }
  return out;
}

}  // namespace corank
