#pragma once

#include <optional>
#include <string>
#include <vector>

#include "monhecke/gcm.hpp"
#include "monhecke/zlin.hpp"

namespace monhecke {

// Unbounded marker for enumeration depths.
inline constexpr int kUnbounded = -1;

enum class LatticeKind { SimplyConnected, Adjoint, Explicit };

struct LatticeSpec {
  LatticeKind kind = LatticeKind::SimplyConnected;
  std::vector<ZVec> roots;    // only for Explicit
  std::vector<ZVec> coroots;  // only for Explicit
  static LatticeSpec sc() { return {LatticeKind::SimplyConnected, {}, {}}; }
  static LatticeSpec ad() { return {LatticeKind::Adjoint, {}, {}}; }
};

// Weyl group element: canonical ShortLex-minimal reduced word, the action on
// the cocharacter lattice X_*, and the action on root coordinates (the basis
// of simple roots). Identity of elements is decided by the lattice action.
struct WeylElt {
  std::vector<int> word;  // canonical
  ZMat cochar;            // r x r action on X_*
  ZMat rootc;             // n x n action on root coordinates

  int length() const { return static_cast<int>(word.size()); }
  bool is_identity() const { return word.empty(); }
  bool operator==(const WeylElt& o) const { return cochar == o.cochar; }
  bool operator!=(const WeylElt& o) const { return !(*this == o); }
  // Deterministic ordering compatible with equality (canonical words are
  // unique per element): ShortLex on the canonical word.
  bool operator<(const WeylElt& o) const {
    if (word.size() != o.word.size()) return word.size() < o.word.size();
    return word < o.word;
  }
};

// A real root together with its coroot and a witness (w, s) with
// root = w . alpha_s, coroot = w . alpha_s^vee.
struct RealRoot {
  ZVec root;          // in X
  ZVec coroot;        // in X_*
  ZVec root_coords;   // coefficients over the simple roots
  ZVec coroot_coords; // coefficients over the simple coroots
  bool positive = false;
  std::vector<int> witness_w;  // not necessarily reduced
  int witness_s = 0;

  bool operator==(const RealRoot& o) const { return root_coords == o.root_coords; }
  bool operator<(const RealRoot& o) const { return root_coords < o.root_coords; }
};

struct PositiveRootsResult {
  std::vector<RealRoot> roots;  // positive roots only, sorted
  bool complete = false;
};

// A Kac-Moody root datum: GCM plus simple roots/coroots in dual lattices
// X ~ Z^r and X_* ~ Z^r, with <alpha_i, alpha_j^vee> = gcm[j][i]. Provides
// Weyl group element arithmetic on top of the lattice actions.
class RootDatum {
 public:
  RootDatum(GCM gcm, const LatticeSpec& lattice);

  const GCM& gcm() const { return gcm_; }
  int rank() const { return gcm_.rank(); }          // number of simple reflections
  int lattice_rank() const { return r_; }
  GcmType type() const { return type_; }
  bool is_finite_type() const { return type_ == GcmType::Finite; }

  const ZVec& simple_root(int i) const { return roots_[static_cast<size_t>(i)]; }
  const ZVec& simple_coroot(int i) const { return coroots_[static_cast<size_t>(i)]; }

  // <mu, lambda> for mu in X, lambda in X_* (coordinate dot product).
  static std::int64_t pair(const ZVec& mu, const ZVec& lambda) { return dot(mu, lambda); }

  WeylElt identity() const;
  WeylElt simple(int i) const;
  // Canonical element of an arbitrary word (indices < rank()).
  WeylElt normalize(const std::vector<int>& word) const;
  WeylElt mul(const WeylElt& a, const WeylElt& b) const;
  WeylElt mul_simple(const WeylElt& a, int i) const;  // a * s_i
  WeylElt inverse(const WeylElt& a) const;

  // Action on the cocharacter lattice X_*.
  ZVec apply(const WeylElt& w, const ZVec& lambda) const;
  // Contragredient action on the character lattice X.
  ZVec apply_char(const WeylElt& w, const ZVec& mu) const;

  // True iff l(s_i w) < l(w).
  bool is_left_descent(const WeylElt& w, int i) const;
  // True iff l(w s_i) < l(w).
  bool is_right_descent(const WeylElt& w, int i) const;

  // The l(w) positive real roots alpha with w . alpha < 0, sorted.
  std::vector<RealRoot> inversions(const WeylElt& w) const;

  // Subword-property Bruhat order.
  bool bruhat_leq(const WeylElt& x, const WeylElt& y) const;

  // All elements with l(w) <= bound (kUnbounded = whole group, finite type
  // only), BFS by length, deduplicated, sorted by (length, word).
  std::vector<WeylElt> enumerate(int length_bound) const;

  // Positive real roots w . alpha_s with l(w) <= bound (kUnbounded = all,
  // finite type only). complete is set when the closure stabilized.
  PositiveRootsResult positive_real_roots(int length_bound) const;

  // RealRoot for w . alpha_s given a witness word for w.
  RealRoot real_root(const std::vector<int>& witness_w, int s) const;
  // The reflection r_alpha as a group element.
  WeylElt reflection(const RealRoot& alpha) const;

 private:
  void build_generators();
  std::vector<int> peel_canonical(ZMat inv_rootc) const;

  GCM gcm_;
  GcmType type_ = GcmType::Indefinite;
  int r_ = 0;
  std::vector<ZVec> roots_;
  std::vector<ZVec> coroots_;
  std::vector<ZMat> gen_cochar_;  // s_i on X_*
  std::vector<ZMat> gen_char_;    // s_i on X
  std::vector<ZMat> gen_rootc_;   // s_i on root coordinates
  std::vector<ZMat> gen_corootc_; // s_i on coroot coordinates
};

}  // namespace monhecke
