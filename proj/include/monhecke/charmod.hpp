#pragma once

#include <string>
#include <vector>

#include "monhecke/rootdatum.hpp"

namespace monhecke {

// Finitely generated abelian group Z/m_1 x ... x Z/m_k x Z^f, elements stored
// as one slot per factor (torsion slots reduced to [0, m)).
struct AbGroup {
  std::vector<std::int64_t> torsion;  // invariant factors, each >= 2
  int free_rank = 0;

  int slots() const { return static_cast<int>(torsion.size()) + free_rank; }
  bool is_finite() const { return free_rank == 0; }
  ZVec zero() const { return ZVec(static_cast<size_t>(slots()), 0); }
  ZVec reduce(ZVec x) const;
  ZVec add(const ZVec& x, const ZVec& y) const;
  ZVec neg(const ZVec& x) const;
  ZVec scale(std::int64_t c, const ZVec& x) const;
  bool is_zero_elt(const ZVec& x) const { return monhecke::is_zero(x); }
  // All elements; finite groups only.
  std::vector<ZVec> elements() const;

  bool operator==(const AbGroup& o) const {
    return torsion == o.torsion && free_rank == o.free_rank;
  }
  std::string str() const;
  static AbGroup cyclic(std::int64_t m) { return AbGroup{{m}, 0}; }
};

// Homomorphism X_*(T) -> A: the algebraic stand-in for a multiplicative rank
// one local system on the torus. values[i] is the image of the i-th standard
// basis vector of X_*.
class MultLocalSystem {
 public:
  MultLocalSystem(const RootDatum* datum, AbGroup target, std::vector<ZVec> values);

  static MultLocalSystem trivial(const RootDatum& datum, AbGroup target);

  const RootDatum& datum() const { return *datum_; }
  const AbGroup& target() const { return target_; }
  const std::vector<ZVec>& values() const { return values_; }

  ZVec evaluate(const ZVec& cochar) const;
  bool kills(const ZVec& cochar) const { return target_.is_zero_elt(evaluate(cochar)); }
  // s_i in W_L° for a simple reflection: L(alpha_i^vee) = 0.
  bool simple_in_endo_group(int i) const { return kills(datum_->simple_coroot(i)); }

  bool operator==(const MultLocalSystem& o) const;
  bool operator!=(const MultLocalSystem& o) const { return !(*this == o); }
  bool operator<(const MultLocalSystem& o) const;

  std::string str() const;

 private:
  const RootDatum* datum_;
  AbGroup target_;
  std::vector<ZVec> values_;
};

// (w . L)(lambda) = L(w^{-1} lambda)
MultLocalSystem act(const RootDatum& datum, const WeylElt& w, const MultLocalSystem& L);
MultLocalSystem act_simple(const RootDatum& datum, int i, const MultLocalSystem& L);

struct OrbitResult {
  std::vector<MultLocalSystem> characters;  // sorted, deterministic
  bool complete = false;
};

// BFS closure of {L} under the simple reflections, stopping once more than
// `bound` characters appear (bound kUnbounded = no cap; always terminates for
// finite W).
OrbitResult orbit(const MultLocalSystem& L, int bound = kUnbounded);

struct EndoRootsResult {
  std::vector<RealRoot> roots;  // both signs, sorted
  bool complete = false;
};

// Phi_re,L (with coroots): real roots alpha with L(alpha^vee) = 0, enumerated
// from w . alpha_s with l(w) <= bound (kUnbounded = all; finite type only).
EndoRootsResult endoscopic_coroots(const MultLocalSystem& L, int bound);

// Extension criterion to the Levi of J: L(alpha_j^vee) = 0 for all j in J.
// J must be of finite type.
bool can_extend_to_levi(const MultLocalSystem& L, const std::vector<int>& J);

// Homomorphism between finitely generated abelian groups, given by images of
// the source generators. Injectivity is decided exactly on construction.
class CoeffHom {
 public:
  CoeffHom(AbGroup source, AbGroup dest, std::vector<ZVec> gen_images);

  static CoeffHom identity(const AbGroup& g);

  const AbGroup& source() const { return source_; }
  const AbGroup& dest() const { return dest_; }
  bool injective() const { return injective_; }

  ZVec apply(const ZVec& x) const;
  // this o other
  CoeffHom compose(const CoeffHom& other) const;

 private:
  bool compute_injective() const;

  AbGroup source_;
  AbGroup dest_;
  std::vector<ZVec> gen_images_;
  bool injective_ = false;
};

// Postcompose the values of L with h (h.source must equal L.target).
MultLocalSystem change_coefficients(const MultLocalSystem& L, const CoeffHom& h);

}  // namespace monhecke
