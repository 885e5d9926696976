#pragma once

#include <optional>
#include <vector>

#include "monhecke/charmod.hpp"

namespace monhecke {

// If t is a reflection r_alpha, returns the positive real root alpha
// (with witness); otherwise nullopt.
std::optional<RealRoot> reflection_root(const RootDatum& datum, const WeylElt& t);

// Number of inversions of w lying in Phi_re,L (= the block length of w in its
// block with source L; exact in every type via the finite inversion set).
int ell_L(const RootDatum& datum, const WeylElt& w, const MultLocalSystem& L);

// Dyer's criterion: t = r_alpha with alpha in Phi_re,L^+ and exactly one
// inversion of t lying in Phi_re,L. Throws NotAReflection if t is not a
// reflection.
bool is_endosimple(const RootDatum& datum, const WeylElt& t, const MultLocalSystem& L);

struct EndosimpleGen {
  WeylElt refl;
  RealRoot alpha;  // positive root with r_alpha = refl
};

// The computed endoscopy package for L.
struct EndoDatum {
  MultLocalSystem L;
  std::vector<RealRoot> phi;          // Phi_re,L, both signs, sorted
  std::vector<EndosimpleGen> gens;    // S_L°, sorted by (length, word)
  GCM endo_gcm;                       // entries [t][s] = <alpha_s, alpha_t^vee>
  std::vector<std::vector<int>> coxeter_matrix;  // m_st, 0 = infinity
  bool complete = false;

  int endo_rank() const { return static_cast<int>(gens.size()); }
};

// Enumerate Phi_re,L^+ within the length bound, filter by Dyer's criterion,
// assemble the endoscopic GCM and Coxeter matrix. bound = kUnbounded requires
// finite type.
EndoDatum endosimple_generators(const RootDatum& datum, const MultLocalSystem& L, int bound);

// Elements of W_L° (finite closure of the endosimple generators).
std::vector<WeylElt> endo_weyl_group(const RootDatum& datum, const EndoDatum& endo);

struct Block {
  MultLocalSystem source;
  MultLocalSystem target;
  WeylElt min_elt;                // w^beta
  std::vector<WeylElt> members;   // sorted

  bool contains(const WeylElt& w) const;
};

// The right W_L°-coset partition of {w : w . L = L2}, finite type only.
// Empty when L2 is not in the orbit of L. Blocks are sorted by min_elt.
std::vector<Block> blocks(const RootDatum& datum, const MultLocalSystem& L,
                          const MultLocalSystem& L2);

// The block of the product of representatives; gamma.source must equal
// beta.target. min_elt of the result is recomputed independently (shortest
// member), so w^gamma w^beta = w^{gamma beta} stays a testable identity.
Block block_product(const RootDatum& datum, const Block& gamma, const Block& beta);

// Block length of w in beta, cross-checked against ell_L(w^{beta,-1} w).
int ell_beta(const RootDatum& datum, const WeylElt& w, const Block& beta);

// An expression (s_1..s_k) with source character L is endo-reduced when its
// count of coroot-killing steps equals the block length of its product.
bool is_endo_reduced(const RootDatum& datum, const std::vector<int>& word,
                     const MultLocalSystem& L);

struct PalindromeParts {
  std::vector<int> prefix;  // (s_1, ..., s_k)
  int middle = 0;           // t
  std::vector<int> suffix;  // (s_k, ..., s_1)
};

// Split an endo-reduced expression of an endosimple reflection as
// (s_1..s_k, t, s_k..s_1) and verify: s_k...s_1 is minimal in its block and
// t is simple in the endoscopic group of (s_k...s_1) . L.
PalindromeParts palindrome_decompose(const RootDatum& datum, const std::vector<int>& word,
                                     const MultLocalSystem& L);

}  // namespace monhecke
