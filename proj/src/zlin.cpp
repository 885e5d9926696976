#include "monhecke/zlin.hpp"

#include <algorithm>

#include "monhecke/errors.hpp"

namespace monhecke {

ZMat ZMat::identity(int n) {
  ZMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

ZMat ZMat::mul(const ZMat& o) const {
  require(cols == o.rows, Err::DimensionMismatch, "matrix product shape");
  ZMat out(rows, o.cols);
  for (int i = 0; i < rows; ++i)
    for (int k = 0; k < cols; ++k) {
      std::int64_t v = at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < o.cols; ++j) out.at(i, j) += v * o.at(k, j);
    }
  return out;
}

ZVec ZMat::apply(const ZVec& v) const {
  require(static_cast<int>(v.size()) == cols, Err::DimensionMismatch, "matrix-vector shape");
  ZVec out(static_cast<size_t>(rows), 0);
  for (int i = 0; i < rows; ++i) {
    std::int64_t s = 0;
    for (int j = 0; j < cols; ++j) s += at(i, j) * v[static_cast<size_t>(j)];
    out[static_cast<size_t>(i)] = s;
  }
  return out;
}

ZMat ZMat::transpose() const {
  ZMat out(cols, rows);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) out.at(j, i) = at(i, j);
  return out;
}

std::int64_t dot(const ZVec& x, const ZVec& y) {
  require(x.size() == y.size(), Err::DimensionMismatch, "dot product shape");
  std::int64_t s = 0;
  for (size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

ZVec add(const ZVec& x, const ZVec& y) {
  require(x.size() == y.size(), Err::DimensionMismatch, "vector sum shape");
  ZVec out(x);
  for (size_t i = 0; i < x.size(); ++i) out[i] += y[i];
  return out;
}

ZVec sub(const ZVec& x, const ZVec& y) {
  require(x.size() == y.size(), Err::DimensionMismatch, "vector difference shape");
  ZVec out(x);
  for (size_t i = 0; i < x.size(); ++i) out[i] -= y[i];
  return out;
}

ZVec scale(std::int64_t c, const ZVec& x) {
  ZVec out(x);
  for (auto& v : out) v *= c;
  return out;
}

bool is_zero(const ZVec& x) {
  return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v == 0; });
}

bool all_nonneg(const ZVec& x) {
  return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v >= 0; });
}

bool all_nonpos(const ZVec& x) {
  return std::all_of(x.begin(), x.end(), [](std::int64_t v) { return v <= 0; });
}

namespace {

// Fraction-free Gaussian elimination; returns pivot column indices.
std::vector<int> pivot_columns(std::vector<std::vector<Int>> m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t nrows = m.size(), ncols = m[0].size();
  size_t row = 0;
  for (size_t col = 0; col < ncols && row < nrows; ++col) {
    size_t sel = row;
    while (sel < nrows && m[sel][col] == 0) ++sel;
    if (sel == nrows) continue;
    std::swap(m[sel], m[row]);
    for (size_t i = row + 1; i < nrows; ++i) {
      if (m[i][col] == 0) continue;
      Int a = m[row][col], b = m[i][col];
      for (size_t j = col; j < ncols; ++j) m[i][j] = m[i][j] * a - m[row][j] * b;
    }
    pivots.push_back(static_cast<int>(col));
    ++row;
  }
  return pivots;
}

std::vector<std::vector<Int>> to_big_rows(const std::vector<ZVec>& vectors) {
  std::vector<std::vector<Int>> rows;
  rows.reserve(vectors.size());
  for (const auto& v : vectors) {
    std::vector<Int> r;
    r.reserve(v.size());
    for (auto x : v) r.emplace_back(x);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace

int zrank(const std::vector<ZVec>& vectors) {
  if (vectors.empty()) return 0;
  return static_cast<int>(pivot_columns(to_big_rows(vectors)).size());
}

std::vector<int> independent_columns(const std::vector<ZVec>& columns) {
  if (columns.empty()) return {};
  // Transpose so that the given vectors become matrix columns, then record
  // which of them carry pivots.
  size_t n = columns.size(), dim = columns[0].size();
  std::vector<std::vector<Int>> m(dim, std::vector<Int>(n));
  for (size_t j = 0; j < n; ++j)
    for (size_t i = 0; i < dim; ++i) m[i][j] = columns[j][i];
  return pivot_columns(std::move(m));
}

std::vector<std::vector<Int>> zkernel(const std::vector<std::vector<Int>>& rows_mat, int ncols) {
  // Pairs (value, tag): value = M * e_j, tag = e_j. Integer row reduction of
  // the values by repeated Euclidean steps keeps the tags a basis of Z^n;
  // tags whose value vanished form a basis of the kernel lattice.
  size_t nrows = rows_mat.size();
  size_t n = static_cast<size_t>(ncols);
  std::vector<std::vector<Int>> value(n, std::vector<Int>(nrows, 0));
  std::vector<std::vector<Int>> tag(n, std::vector<Int>(n, 0));
  for (size_t j = 0; j < n; ++j) {
    tag[j][j] = 1;
    for (size_t i = 0; i < nrows; ++i) value[j][i] = rows_mat[i][j];
  }
  size_t fixed = 0;
  for (size_t coord = 0; coord < nrows && fixed < n; ++coord) {
    // Eliminate coordinate `coord` across rows [fixed, n) by gcd reduction.
    while (true) {
      size_t best = n;
      for (size_t r = fixed; r < n; ++r) {
        if (value[r][coord] == 0) continue;
        if (best == n || abs(value[r][coord]) < abs(value[best][coord])) best = r;
      }
      if (best == n) break;  // all zero
      std::swap(value[fixed], value[best]);
      std::swap(tag[fixed], tag[best]);
      bool clean = true;
      for (size_t r = fixed + 1; r < n; ++r) {
        if (value[r][coord] == 0) continue;
        Int q = value[r][coord] / value[fixed][coord];
        if (q != 0) {
          for (size_t i = 0; i < nrows; ++i) value[r][i] -= q * value[fixed][i];
          for (size_t i = 0; i < n; ++i) tag[r][i] -= q * tag[fixed][i];
        }
        if (value[r][coord] != 0) clean = false;
      }
      if (clean) {
        ++fixed;
        break;
      }
    }
  }
  std::vector<std::vector<Int>> kernel;
  for (size_t r = fixed; r < n; ++r) {
    bool zero = std::all_of(value[r].begin(), value[r].end(),
                            [](const Int& x) { return x == 0; });
    if (zero) kernel.push_back(tag[r]);
  }
  return kernel;
}

}  // namespace monhecke
