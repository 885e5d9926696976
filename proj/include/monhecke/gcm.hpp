#pragma once

#include <string>
#include <vector>

#include "monhecke/zlin.hpp"

namespace monhecke {

enum class GcmType { Finite, Affine, Indefinite };

const char* gcm_type_name(GcmType t);

// Generalized Cartan matrix. Convention fixed for the whole library:
// a[j][i] = <alpha_i, alpha_j^vee> (row index = coroot side), so that the
// reflection s_i acts on a cocharacter by lambda - <alpha_i, lambda> alpha_i^vee.
class GCM {
 public:
  GCM() = default;
  explicit GCM(std::vector<std::vector<std::int64_t>> entries);

  int rank() const { return n_; }
  std::int64_t at(int i, int j) const { return a_[static_cast<size_t>(i)][static_cast<size_t>(j)]; }
  const std::vector<std::vector<std::int64_t>>& entries() const { return a_; }

  // <alpha_i, alpha_j^vee>
  std::int64_t pairing(int root_i, int coroot_j) const { return at(coroot_j, root_i); }

  GcmType classify() const;
  bool is_finite_type() const { return classify() == GcmType::Finite; }
  // Connected components of the Coxeter diagram, each a sorted index list.
  std::vector<std::vector<int>> components() const;
  // Coxeter exponent m_ij from a_ij * a_ji (0,1,2,3 -> 2,3,4,6; >=4 -> 0 for infinity).
  int coxeter_m(int i, int j) const;
  GCM submatrix(const std::vector<int>& indices) const;

  bool operator==(const GCM& o) const { return a_ == o.a_; }

 private:
  int n_ = 0;
  std::vector<std::vector<std::int64_t>> a_;
};

// m value for the product order of two reflections from the product of
// pairings c = <alpha_s, alpha_t^vee><alpha_t, alpha_s^vee>; 0 means infinite.
int crystallographic_order(std::int64_t c);

}  // namespace monhecke
