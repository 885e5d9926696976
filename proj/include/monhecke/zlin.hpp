#pragma once

#include <cstdint>
#include <vector>

#include "monhecke/laurent.hpp"  // Int

namespace monhecke {

using ZVec = std::vector<std::int64_t>;

// Small dense integer matrix, row-major. Lattice actions here stay well within
// int64 at the enumeration scales the library supports.
struct ZMat {
  int rows = 0, cols = 0;
  std::vector<std::int64_t> a;

  ZMat() = default;
  ZMat(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c, 0) {}
  static ZMat identity(int n);

  std::int64_t& at(int i, int j) { return a[static_cast<size_t>(i) * cols + j]; }
  std::int64_t at(int i, int j) const { return a[static_cast<size_t>(i) * cols + j]; }

  bool operator==(const ZMat& o) const { return rows == o.rows && cols == o.cols && a == o.a; }
  bool operator<(const ZMat& o) const { return a < o.a; }

  ZMat mul(const ZMat& o) const;
  ZVec apply(const ZVec& v) const;
  ZMat transpose() const;
};

std::int64_t dot(const ZVec& x, const ZVec& y);
ZVec add(const ZVec& x, const ZVec& y);
ZVec sub(const ZVec& x, const ZVec& y);
ZVec scale(std::int64_t c, const ZVec& x);
bool is_zero(const ZVec& x);
bool all_nonneg(const ZVec& x);
bool all_nonpos(const ZVec& x);

// Rank over Q of the lattice spanned by the given vectors (exact, big-int
// fraction-free elimination).
int zrank(const std::vector<ZVec>& vectors);

// Indices of a maximal linearly independent subset, scanning left to right.
std::vector<int> independent_columns(const std::vector<ZVec>& columns);

// Basis of the integer kernel {x : M x = 0} of an integer matrix given by
// rows; returned vectors are integral and span the kernel lattice over Q
// (sufficient for the kernel-triviality tests used here).
std::vector<std::vector<Int>> zkernel(const std::vector<std::vector<Int>>& rows_mat, int ncols);

}  // namespace monhecke
