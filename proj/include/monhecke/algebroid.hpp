#pragma once

#include <map>
#include <memory>
#include <string>

#include "monhecke/coxsys.hpp"
#include "monhecke/kl.hpp"
#include "monhecke/laurent.hpp"

namespace monhecke {

// Element of a morphism space {L -> L'} of the monodromic Hecke algebroid:
// a Z[v,v^-1]-combination of T_w with w . L = L'.
class AlgebroidElt {
 public:
  AlgebroidElt(MultLocalSystem source, MultLocalSystem target);

  static AlgebroidElt t_basis(const WeylElt& w, const MultLocalSystem& L);
  static AlgebroidElt unit(const MultLocalSystem& L);  // T_e

  const MultLocalSystem& source() const { return source_; }
  const MultLocalSystem& target() const { return target_; }
  const RootDatum& datum() const { return source_.datum(); }
  const std::map<WeylElt, LaurentPoly>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  LaurentPoly coeff(const WeylElt& w) const;
  void add_term(const WeylElt& w, const LaurentPoly& p);

  AlgebroidElt& operator+=(const AlgebroidElt& o);
  AlgebroidElt& operator-=(const AlgebroidElt& o);
  friend AlgebroidElt operator+(AlgebroidElt a, const AlgebroidElt& b) { return a += b; }
  friend AlgebroidElt operator-(AlgebroidElt a, const AlgebroidElt& b) { return a -= b; }
  AlgebroidElt scaled(const LaurentPoly& p) const;

  bool operator==(const AlgebroidElt& o) const;
  bool operator!=(const AlgebroidElt& o) const { return !(*this == o); }

  std::string str() const;

 private:
  MultLocalSystem source_;
  MultLocalSystem target_;
  std::map<WeylElt, LaurentPoly> terms_;
};

// Left multiplication by T_s at the target character (the defining relation).
AlgebroidElt mul_simple_left(int s, const AlgebroidElt& A);

// Composition A o B (A.source must equal B.target).
AlgebroidElt compose(const AlgebroidElt& A, const AlgebroidElt& B);

// (T_w^L)^{-1}, an element of Hom(w L, L).
AlgebroidElt invert_t(const WeylElt& w, const MultLocalSystem& L);

// bar(sum p_w T_w) = sum p_w(v^-1) (T_{w^-1})^{-1}.
AlgebroidElt bar(const AlgebroidElt& A);

// H_s = v^-1 T_s + v^-1 T_e when s is endoscopic for L, else v^-1 T_s.
AlgebroidElt underline_h_s(int s, const MultLocalSystem& L);

// H_{s_1}^{s_2...s_k L} ... H_{s_k}^{L}.
AlgebroidElt bott_samelson(const std::vector<int>& word, const MultLocalSystem& L);

enum class FormWeight { Flat, WLen };

// <T_x, T_y> = delta (flat) or v^{2 l(x)} delta (wlen).
LaurentPoly standard_form(const AlgebroidElt& A, const AlgebroidElt& B, FormWeight weight);

// <BS(x), BS(y)> for word inputs landing in the same morphism space.
LaurentPoly hom_pairing(const std::vector<int>& x_word, const std::vector<int>& y_word,
                        const MultLocalSystem& L, FormWeight weight);

struct ChMultResult {
  AlgebroidElt product;
  AlgebroidElt expected;
  bool matches = false;
};

// (v^{-2n} T_w^{sL}) o H_s^{L} against the four-case table
// v^{-2n-k} T_{ws} (s not endoscopic) / v^{-2n-k}(T_{ws} + T_w) (s endoscopic),
// k = l(ws) - l(w).
ChMultResult ch_mult_check(const WeylElt& w, int n_shift, int s, const MultLocalSystem& L);

// Shared lazily-built endoscopy data for one root datum: endosimple data,
// Coxeter systems, KL tables, block partitions.
class EndoscopyCache {
 public:
  explicit EndoscopyCache(const RootDatum& datum) : datum_(&datum) {}

  const RootDatum& datum() const { return *datum_; }
  const EndoDatum& endo(const MultLocalSystem& L);
  const CoxeterSystem& coxsys(const MultLocalSystem& L);
  const KLTable& kl(const MultLocalSystem& L);
  const std::vector<Block>& block_set(const MultLocalSystem& L, const MultLocalSystem& L2);
  const Block& block_of(const WeylElt& w, const MultLocalSystem& L);
  // Preload a cached KL table (must match the Coxeter matrix of L's system).
  void set_kl(const MultLocalSystem& L, KLTable table);

 private:
  const RootDatum* datum_;
  std::map<MultLocalSystem, EndoDatum> endo_;
  std::map<MultLocalSystem, std::unique_ptr<CoxeterSystem>> cox_;
  std::map<MultLocalSystem, KLTable> kl_;
  std::map<std::pair<MultLocalSystem, MultLocalSystem>, std::vector<Block>> blocks_;
};

// Canonical basis element through the endoscopic transport of the classical
// KL basis of (W_L°, S_L°): C_w = sum_x h_{x,u}(v^-1) v^{-ell_L(x)} T_{w^beta x}
// with u = (w^beta)^{-1} w. geometric=true rescales to v^{ell_beta(w)-l(w)} C_w.
AlgebroidElt canonical_basis(EndoscopyCache& cache, const WeylElt& w,
                             const MultLocalSystem& L, bool geometric = false);

// Multiplicities m_x with bott_samelson(word) = sum m_x * pH_x (geometric
// normalization), by greedy peeling from maximal support.
std::map<WeylElt, LaurentPoly> bs_decompose(EndoscopyCache& cache, const std::vector<int>& word,
                                            const MultLocalSystem& L);

}  // namespace monhecke
