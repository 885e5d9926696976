#pragma once

#include "monhecke/algebroid.hpp"

namespace monhecke {

// The finite-orbit monodromic Hecke algebra H^o: free module on T_w 1_L for
// (w, L) in W x orbit, multiplied through the algebroid via
// phi(T_w 1_L) = T_w^L.
class OrbitAlgebra {
 public:
  OrbitAlgebra(const RootDatum& datum, std::vector<MultLocalSystem> orbit);

  const RootDatum& datum() const { return *datum_; }
  const std::vector<MultLocalSystem>& orbit() const { return orbit_; }
  int char_index(const MultLocalSystem& L) const;

  struct Elt {
    // (w, index of L in the orbit) -> coefficient of T_w 1_L
    std::map<std::pair<WeylElt, int>, LaurentPoly> terms;
    bool operator==(const Elt& o) const { return terms == o.terms; }
  };

  Elt zero() const { return {}; }
  Elt t_times_one(const WeylElt& w, int char_idx) const;  // T_w 1_L
  Elt one_char(int char_idx) const { return t_times_one(datum_->identity(), char_idx); }
  Elt unit() const;          // 1 = sum_L 1_L
  Elt t_elt(const WeylElt& w) const;  // T_w = sum_L T_w 1_L

  Elt add(const Elt& a, const Elt& b) const;
  Elt scale(const Elt& a, const LaurentPoly& p) const;
  Elt mul(const Elt& a, const Elt& b) const;

  // phi(T_w 1_L) = T_w^L: the algebroid component of an element in
  // Hom(L, target); used by the relation checker.
  AlgebroidElt phi_component(const Elt& a, int char_idx) const;

  std::string str(const Elt& a) const;

 private:
  const RootDatum* datum_;
  std::vector<MultLocalSystem> orbit_;
};

// Verifies defining relations (1)-(5) of H^o on the whole orbit; returns a
// list of human-readable failures (empty = all hold).
std::vector<std::string> orbit_algebra_relation_failures(const OrbitAlgebra& alg);

}  // namespace monhecke
