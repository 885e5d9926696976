#pragma once

#include <vector>

#include "monhecke/coxsys.hpp"
#include "monhecke/laurent.hpp"

namespace monhecke {

// Kazhdan-Lusztig data of a finite Coxeter system, indexed by CoxeterSystem
// element indices. Internally the table is computed by the standard
// recursion for the self-dual basis b_y = sum_x h_{x,y} H_x with b_s = H_s + v;
// entry(x, y) exposes the classical polynomial P_{x,y} in the variable v with
// q = v^2 (nonnegative exponents).
class KLTable {
 public:
  explicit KLTable(const CoxeterSystem& cox);

  const std::vector<std::vector<int>>& coxeter_matrix() const { return coxm_; }
  int size() const { return static_cast<int>(h_.size()); }

  // h_{x,y}(v): coefficient of H_x in b_y.
  const LaurentPoly& h(int x, int y) const { return h_[static_cast<size_t>(x)][static_cast<size_t>(y)]; }
  // Classical P_{x,y} at q = v^2; zero unless x <=_L y, 1 on the diagonal.
  LaurentPoly entry(int x, int y, const CoxeterSystem& cox) const;
  // Coefficient of v^{l(y)-l(x)-1} in entry(x,y).
  Int mu(int x, int y, const CoxeterSystem& cox) const;

  // Rebuild a table from cached classical entries without recursion.
  static KLTable from_entries(const CoxeterSystem& cox,
                              const std::vector<std::vector<LaurentPoly>>& P);

  bool operator==(const KLTable& o) const { return coxm_ == o.coxm_ && h_ == o.h_; }

 private:
  KLTable() = default;
  std::vector<std::vector<int>> coxm_;
  std::vector<std::vector<LaurentPoly>> h_;  // h_[x][y]
};

}  // namespace monhecke
