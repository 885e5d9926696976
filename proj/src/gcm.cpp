#include "monhecke/gcm.hpp"

#include <algorithm>

#include "monhecke/errors.hpp"

namespace monhecke {

const char* gcm_type_name(GcmType t) {
  switch (t) {
    case GcmType::Finite: return "finite";
    case GcmType::Affine: return "affine";
    case GcmType::Indefinite: return "indefinite";
  }
  return "?";
}

GCM::GCM(std::vector<std::vector<std::int64_t>> entries) : a_(std::move(entries)) {
  n_ = static_cast<int>(a_.size());
  for (const auto& row : a_)
    require(static_cast<int>(row.size()) == n_, Err::ParseError, "GCM must be square");
  for (int i = 0; i < n_; ++i) {
    require(at(i, i) == 2, Err::ParseError, "GCM diagonal entries must be 2");
    for (int j = 0; j < n_; ++j) {
      if (i == j) continue;
      require(at(i, j) <= 0, Err::ParseError, "GCM off-diagonal entries must be <= 0");
      require((at(i, j) == 0) == (at(j, i) == 0), Err::ParseError,
              "GCM zero entries must be symmetric");
    }
  }
}

namespace {

// Determinant of a principal submatrix, exact.
Int subdet(const GCM& g, const std::vector<int>& idx) {
  size_t k = idx.size();
  std::vector<std::vector<Int>> m(k, std::vector<Int>(k));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) m[i][j] = g.at(idx[i], idx[j]);
  // Fraction-free elimination (Bareiss).
  Int prev = 1;
  Int sign = 1;
  for (size_t col = 0; col < k; ++col) {
    size_t sel = col;
    while (sel < k && m[sel][col] == 0) ++sel;
    if (sel == k) return Int(0);
    if (sel != col) {
      std::swap(m[sel], m[col]);
      sign = -sign;
    }
    for (size_t i = col + 1; i < k; ++i) {
      for (size_t j = col + 1; j < k; ++j)
        m[i][j] = (m[i][j] * m[col][col] - m[i][col] * m[col][j]) / prev;
      m[i][col] = 0;
    }
    prev = m[col][col];
  }
  return sign * m[k - 1][k - 1];
}

// Classification of an indecomposable GCM by the principal-minor criterion:
// finite iff every principal minor is positive; affine iff det = 0 and every
// proper principal minor is positive.
GcmType classify_component(const GCM& g, const std::vector<int>& comp) {
  size_t k = comp.size();
  bool proper_positive = true;
  for (std::uint64_t mask = 1; mask + 1 < (1ull << k); ++mask) {
    std::vector<int> idx;
    for (size_t i = 0; i < k; ++i)
      if (mask & (1ull << i)) idx.push_back(comp[i]);
    if (subdet(g, idx) <= 0) {
      proper_positive = false;
      break;
    }
  }
  Int full = subdet(g, comp);
  if (proper_positive && full > 0) return GcmType::Finite;
  if (proper_positive && full == 0) return GcmType::Affine;
  return GcmType::Indefinite;
}

}  // namespace

std::vector<std::vector<int>> GCM::components() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(static_cast<size_t>(n_), false);
  for (int start = 0; start < n_; ++start) {
    if (seen[static_cast<size_t>(start)]) continue;
    std::vector<int> comp{start};
    seen[static_cast<size_t>(start)] = true;
    for (size_t q = 0; q < comp.size(); ++q)
      for (int j = 0; j < n_; ++j)
        if (!seen[static_cast<size_t>(j)] && at(comp[q], j) != 0) {
          seen[static_cast<size_t>(j)] = true;
          comp.push_back(j);
        }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

GcmType GCM::classify() const {
  bool any_affine = false;
  for (const auto& comp : components()) {
    switch (classify_component(*this, comp)) {
      case GcmType::Finite: break;
      case GcmType::Affine: any_affine = true; break;
      case GcmType::Indefinite: return GcmType::Indefinite;
    }
  }
  return any_affine ? GcmType::Affine : GcmType::Finite;
}

int crystallographic_order(std::int64_t c) {
  switch (c) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: return 0;
  }
}

int GCM::coxeter_m(int i, int j) const {
  if (i == j) return 1;
  return crystallographic_order(at(i, j) * at(j, i));
}

GCM GCM::submatrix(const std::vector<int>& indices) const {
  std::vector<std::vector<std::int64_t>> e;
  for (int i : indices) {
    std::vector<std::int64_t> row;
    for (int j : indices) row.push_back(at(i, j));
    e.push_back(std::move(row));
  }
  return GCM(std::move(e));
}

}  // namespace monhecke
