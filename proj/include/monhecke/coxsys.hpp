#pragma once

#include <vector>

#include "monhecke/endoscopy.hpp"

namespace monhecke {

// A finite Coxeter system (W_L°, S_L°) realized inside W, with product
// tables, the Coxeter length ell_L, canonical words over the endosimple
// generators, and the Bruhat order of the subsystem. Index 0 is the identity.
class CoxeterSystem {
 public:
  CoxeterSystem(const RootDatum& datum, const EndoDatum& endo);

  const RootDatum& datum() const { return *datum_; }
  const EndoDatum& endo() const { return *endo_; }

  int size() const { return static_cast<int>(elements_.size()); }
  int num_gens() const { return static_cast<int>(endo_->gens.size()); }
  const WeylElt& element(int idx) const { return elements_[static_cast<size_t>(idx)]; }
  int length(int idx) const { return length_[static_cast<size_t>(idx)]; }
  const std::vector<int>& canonical_word(int idx) const { return words_[static_cast<size_t>(idx)]; }
  int inverse(int idx) const { return inverse_[static_cast<size_t>(idx)]; }

  // Index of an element of W_L° (throws NotInBlock if absent).
  int index_of(const WeylElt& w) const;
  // Element of a generator word (indices into S_L°).
  int element_of_word(const std::vector<int>& gen_word) const;

  int left_mul(int gen, int idx) const { return left_[static_cast<size_t>(gen)][static_cast<size_t>(idx)]; }
  int right_mul(int idx, int gen) const { return right_[static_cast<size_t>(gen)][static_cast<size_t>(idx)]; }
  bool is_left_descent(int gen, int idx) const { return length(left_mul(gen, idx)) < length(idx); }
  bool is_right_descent(int idx, int gen) const { return length(right_mul(idx, gen)) < length(idx); }

  // Bruhat order of (W_L°, S_L°), by the lifting property.
  bool bruhat_leq(int x, int y) const;

  // Indices sorted by (length, canonical word); identity first.
  const std::vector<int>& by_length() const { return order_; }

 private:
  const RootDatum* datum_;
  const EndoDatum* endo_;
  std::vector<WeylElt> elements_;
  std::vector<int> length_;
  std::vector<std::vector<int>> words_;
  std::vector<int> inverse_;
  std::vector<std::vector<int>> left_;   // [gen][idx]
  std::vector<std::vector<int>> right_;  // [gen][idx]
  std::vector<int> order_;
};

}  // namespace monhecke
