#pragma once

#include <cstdint>
#include <vector>

namespace corank {

// Dense matrix over the prime field GF(p); entries stored reduced mod p.
struct GFMatrix {
  std::int64_t p = 2;
  int rows = 0;
  int cols = 0;
  std::vector<std::vector<std::int64_t>> m;  // row-major

  static GFMatrix zero(std::int64_t p, int rows, int cols);
  static GFMatrix identity(std::int64_t p, int n);
  std::vector<std::int64_t> column(int c) const;
};

std::int64_t mod_inverse(std::int64_t a, std::int64_t p);

// Rank of a set of column vectors over GF(p).
int gf_rank(std::int64_t p, const std::vector<std::vector<std::int64_t>>& columns);

// Reduced row echelon form; returns the pivot column indices.
std::vector<int> gf_rref(GFMatrix& a);

// Row-reduces and drops zero rows, so the rows form a basis of the row space.
GFMatrix gf_row_basis(const GFMatrix& a);

// Column submatrix.
GFMatrix gf_select_columns(const GFMatrix& a, const std::vector<int>& cols);

// A matrix over the same field whose row space is the null space of `a`
// (rows are a basis). If `a` represents a matroid on its columns, the result
// represents the dual matroid.
GFMatrix gf_null_space_basis(const GFMatrix& a);

}  // namespace corank
