#pragma once

#include "monhecke/algebroid.hpp"

namespace monhecke {

// Element of a morphism space of the endoscopic Hecke algebroid E^o: the
// block-graded sum over beta of standard Hecke-algebra summands H(W_L°) with
// basis Ttilde_w, w in beta. Terms are keyed by the ambient Weyl element
// w = w^beta u; the block grading is recovered from the block partition.
class EndoAlgebroidElt {
 public:
  EndoAlgebroidElt(MultLocalSystem source, MultLocalSystem target);

  static EndoAlgebroidElt t_basis(const WeylElt& w, const MultLocalSystem& L);
  static EndoAlgebroidElt unit(const MultLocalSystem& L);

  const MultLocalSystem& source() const { return source_; }
  const MultLocalSystem& target() const { return target_; }
  const std::map<WeylElt, LaurentPoly>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  void add_term(const WeylElt& w, const LaurentPoly& p);
  LaurentPoly coeff(const WeylElt& w) const;
  EndoAlgebroidElt scaled(const LaurentPoly& p) const;
  EndoAlgebroidElt& operator+=(const EndoAlgebroidElt& o);

  bool operator==(const EndoAlgebroidElt& o) const;
  bool operator!=(const EndoAlgebroidElt& o) const { return !(*this == o); }

 private:
  MultLocalSystem source_;
  MultLocalSystem target_;
  std::map<WeylElt, LaurentPoly> terms_;
};

// Blockwise composition (A, B) -> beta^{-1}(A) . B: conjugate A's endoscopic
// part through w^beta, multiply in H(W_L°), regrade to the product block.
EndoAlgebroidElt endo_compose(EndoscopyCache& cache, const EndoAlgebroidElt& A,
                              const EndoAlgebroidElt& B);

// theta: Ttilde_w -> T_w.
AlgebroidElt theta(const EndoAlgebroidElt& E);

// Blockwise flat standard form: <Ttilde_x, Ttilde_y> = delta.
LaurentPoly endo_standard_form(const EndoAlgebroidElt& A, const EndoAlgebroidElt& B);

// Htilde_t = v^-1 Ttilde_t + v^-1 Ttilde_e for an endosimple generator index
// (into S_L°), an endomorphism of L in E^o.
EndoAlgebroidElt endo_underline_h(EndoscopyCache& cache, int gen, const MultLocalSystem& L);

// Product Htilde_{t_1} ... Htilde_{t_k} over generator indices, computed in
// the plain endoscopic Hecke algebra H(W_L°) (neutral block).
EndoAlgebroidElt endo_bott_samelson(EndoscopyCache& cache, const std::vector<int>& gen_word,
                                    const MultLocalSystem& L);

}  // namespace monhecke
