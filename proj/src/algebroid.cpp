#include "monhecke/algebroid.hpp"

#include <sstream>

#include "monhecke/errors.hpp"

namespace monhecke {

AlgebroidElt::AlgebroidElt(MultLocalSystem source, MultLocalSystem target)
    : source_(std::move(source)), target_(std::move(target)) {}

AlgebroidElt AlgebroidElt::t_basis(const WeylElt& w, const MultLocalSystem& L) {
  AlgebroidElt out(L, act(L.datum(), w, L));
  out.terms_.emplace(w, LaurentPoly(1));
  return out;
}

AlgebroidElt AlgebroidElt::unit(const MultLocalSystem& L) {
  return t_basis(L.datum().identity(), L);
}

LaurentPoly AlgebroidElt::coeff(const WeylElt& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? LaurentPoly() : it->second;
}

void AlgebroidElt::add_term(const WeylElt& w, const LaurentPoly& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = terms_.emplace(w, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

AlgebroidElt& AlgebroidElt::operator+=(const AlgebroidElt& o) {
  require(source_ == o.source_ && target_ == o.target_, Err::SpaceMismatch,
          "cannot add elements of different morphism spaces");
  for (const auto& [w, p] : o.terms_) add_term(w, p);
  return *this;
}

AlgebroidElt& AlgebroidElt::operator-=(const AlgebroidElt& o) {
  require(source_ == o.source_ && target_ == o.target_, Err::SpaceMismatch,
          "cannot subtract elements of different morphism spaces");
  for (const auto& [w, p] : o.terms_) add_term(w, -p);
  return *this;
}

AlgebroidElt AlgebroidElt::scaled(const LaurentPoly& p) const {
  AlgebroidElt out(source_, target_);
  if (p.is_zero()) return out;
  for (const auto& [w, q] : terms_) out.terms_.emplace(w, q * p);
  return out;
}

bool AlgebroidElt::operator==(const AlgebroidElt& o) const {
  return source_ == o.source_ && target_ == o.target_ && terms_ == o.terms_;
}

std::string AlgebroidElt::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, p] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.str() << ")*T[";
    for (size_t i = 0; i < w.word.size(); ++i) {
      if (i) os << ",";
      os << w.word[i] + 1;
    }
    if (w.word.empty()) os << "e";
    os << "]";
  }
  return os.str();
}

AlgebroidElt mul_simple_left(int s, const AlgebroidElt& A) {
  const RootDatum& datum = A.datum();
  // Membership of s in W_{target}° decides the quadratic case; for a simple
  // reflection this is the coroot-vanishing test.
  bool member = A.target().simple_in_endo_group(s);
  AlgebroidElt out(A.source(), act_simple(datum, s, A.target()));
  const LaurentPoly v2 = LaurentPoly::v_pow(2);
  const LaurentPoly v2m1 = LaurentPoly::v_pow(2) - LaurentPoly(1);
  for (const auto& [x, p] : A.terms()) {
    WeylElt sx = datum.normalize([&] {
      std::vector<int> word{s};
      word.insert(word.end(), x.word.begin(), x.word.end());
      return word;
    }());
    if (sx.length() > x.length()) {
      out.add_term(sx, p);
    } else if (member) {
      out.add_term(x, p * v2m1);
      out.add_term(sx, p * v2);
    } else {
      out.add_term(sx, p * v2);
    }
  }
  return out;
}

AlgebroidElt compose(const AlgebroidElt& A, const AlgebroidElt& B) {
  require(A.source() == B.target(), Err::CompositionMismatch,
          "compose needs A.source == B.target");
  AlgebroidElt out(B.source(), A.target());
  for (const auto& [y, p] : A.terms()) {
    AlgebroidElt acc = B;
    for (auto it = y.word.rbegin(); it != y.word.rend(); ++it)
      acc = mul_simple_left(*it, acc);
    require(acc.target() == A.target(), Err::Internal,
            "composition landed in the wrong morphism space");
    for (const auto& [w, q] : acc.terms()) out.add_term(w, p * q);
  }
  return out;
}

namespace {

// (T_s^L)^{-1} in Hom(sL, L).
AlgebroidElt simple_inverse(int s, const MultLocalSystem& L) {
  const RootDatum& datum = L.datum();
  MultLocalSystem sL = act_simple(datum, s, L);
  AlgebroidElt out(sL, L);
  WeylElt se = datum.simple(s);
  if (L.simple_in_endo_group(s)) {
    out.add_term(se, LaurentPoly::v_pow(-2));
    out.add_term(datum.identity(), LaurentPoly::v_pow(-2) - LaurentPoly(1));
  } else {
    out.add_term(se, LaurentPoly::v_pow(-2));
  }
  return out;
}

}  // namespace

AlgebroidElt invert_t(const WeylElt& w, const MultLocalSystem& L) {
  const RootDatum& datum = L.datum();
  // T_w = T_{s_1}^{s_2..s_k L} ... T_{s_k}^{L}; invert factors in reverse.
  std::vector<MultLocalSystem> chain{L};  // chain[j] = s_{k-j+1} ... s_k L
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    chain.push_back(act_simple(datum, *it, chain.back()));
  MultLocalSystem wL = chain.back();
  AlgebroidElt acc = AlgebroidElt::unit(wL);
  int k = w.length();
  for (int j = 0; j < k; ++j) {
    // factor T_{s_{j+1}} lives at character chain[k - j - 1].
    AlgebroidElt inv = simple_inverse(w.word[static_cast<size_t>(j)],
                                      chain[static_cast<size_t>(k - j - 1)]);
    acc = compose(inv, acc);
  }
  return acc;
}

AlgebroidElt bar(const AlgebroidElt& A) {
  const RootDatum& datum = A.datum();
  AlgebroidElt out(A.source(), A.target());
  for (const auto& [w, p] : A.terms()) {
    AlgebroidElt inv = invert_t(datum.inverse(w), A.target());
    out += inv.scaled(p.bar());
  }
  return out;
}

AlgebroidElt underline_h_s(int s, const MultLocalSystem& L) {
  const RootDatum& datum = L.datum();
  AlgebroidElt out(L, act_simple(datum, s, L));
  out.add_term(datum.simple(s), LaurentPoly::v_pow(-1));
  if (L.simple_in_endo_group(s)) out.add_term(datum.identity(), LaurentPoly::v_pow(-1));
  return out;
}

AlgebroidElt bott_samelson(const std::vector<int>& word, const MultLocalSystem& L) {
  AlgebroidElt acc = AlgebroidElt::unit(L);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    acc = compose(underline_h_s(*it, acc.target()), acc);
  return acc;
}

LaurentPoly standard_form(const AlgebroidElt& A, const AlgebroidElt& B, FormWeight weight) {
  require(A.source() == B.source() && A.target() == B.target(), Err::SpaceMismatch,
          "standard form needs a common morphism space");
  LaurentPoly out;
  for (const auto& [w, p] : A.terms()) {
    LaurentPoly q = B.coeff(w);
    if (q.is_zero()) continue;
    LaurentPoly contrib = p * q;
    if (weight == FormWeight::WLen) contrib = contrib.shifted(2 * w.length());
    out += contrib;
  }
  return out;
}

LaurentPoly hom_pairing(const std::vector<int>& x_word, const std::vector<int>& y_word,
                        const MultLocalSystem& L, FormWeight weight) {
  AlgebroidElt X = bott_samelson(x_word, L);
  AlgebroidElt Y = bott_samelson(y_word, L);
  require(X.target() == Y.target(), Err::SpaceMismatch,
          "expressions do not land in the same morphism space");
  return standard_form(X, Y, weight);
}

ChMultResult ch_mult_check(const WeylElt& w, int n_shift, int s, const MultLocalSystem& L) {
  const RootDatum& datum = L.datum();
  MultLocalSystem sL = act_simple(datum, s, L);
  AlgebroidElt F = AlgebroidElt::t_basis(w, sL).scaled(LaurentPoly::v_pow(-2 * n_shift));
  ChMultResult res{compose(F, underline_h_s(s, L)), AlgebroidElt(L, F.target()), false};
  WeylElt ws = datum.mul_simple(w, s);
  int k = ws.length() - w.length();
  AlgebroidElt expected(L, res.product.target());
  expected.add_term(ws, LaurentPoly::v_pow(-2 * n_shift - k));
  if (L.simple_in_endo_group(s)) expected.add_term(w, LaurentPoly::v_pow(-2 * n_shift - k));
  res.expected = std::move(expected);
  res.matches = res.product == res.expected;
  return res;
}

const EndoDatum& EndoscopyCache::endo(const MultLocalSystem& L) {
  auto it = endo_.find(L);
  if (it == endo_.end())
    it = endo_.emplace(L, endosimple_generators(*datum_, L, kUnbounded)).first;
  return it->second;
}

const CoxeterSystem& EndoscopyCache::coxsys(const MultLocalSystem& L) {
  auto it = cox_.find(L);
  if (it == cox_.end()) {
    const EndoDatum& e = endo(L);
    it = cox_.emplace(L, std::make_unique<CoxeterSystem>(*datum_, e)).first;
  }
  return *it->second;
}

const KLTable& EndoscopyCache::kl(const MultLocalSystem& L) {
  auto it = kl_.find(L);
  if (it == kl_.end()) it = kl_.emplace(L, KLTable(coxsys(L))).first;
  return it->second;
}

void EndoscopyCache::set_kl(const MultLocalSystem& L, KLTable table) {
  require(table.coxeter_matrix() == coxsys(L).endo().coxeter_matrix, Err::CorruptCache,
          "KL table does not match the Coxeter matrix of this character");
  kl_.erase(L);
  kl_.emplace(L, std::move(table));
}

const std::vector<Block>& EndoscopyCache::block_set(const MultLocalSystem& L,
                                                    const MultLocalSystem& L2) {
  auto key = std::make_pair(L, L2);
  auto it = blocks_.find(key);
  if (it == blocks_.end()) it = blocks_.emplace(key, blocks(*datum_, L, L2)).first;
  return it->second;
}

const Block& EndoscopyCache::block_of(const WeylElt& w, const MultLocalSystem& L) {
  const auto& set = block_set(L, act(*datum_, w, L));
  for (const auto& b : set)
    if (b.contains(w)) return b;
  fail(Err::NotInBlock, "element missing from its own transporter partition");
}

AlgebroidElt canonical_basis(EndoscopyCache& cache, const WeylElt& w,
                             const MultLocalSystem& L, bool geometric) {
  const RootDatum& datum = cache.datum();
  const Block& beta = cache.block_of(w, L);
  const CoxeterSystem& cox = cache.coxsys(L);
  const KLTable& table = cache.kl(L);
  WeylElt u = datum.mul(datum.inverse(beta.min_elt), w);
  int ui = cox.index_of(u);
  AlgebroidElt out(L, act(datum, w, L));
  for (int x = 0; x < cox.size(); ++x) {
    const LaurentPoly& hx = table.h(x, ui);
    if (hx.is_zero()) continue;
    WeylElt wx = datum.mul(beta.min_elt, cox.element(x));
    // Transport weight: v^{-ell_L(x)} for the plain transport normalization;
    // the geometric normalization weights each term by the ambient length
    // v^{-l(w^beta x)}, which is the one fixed by bar (terms can differ by
    // more than a global monomial when l and ell_L drift apart on the block).
    int weight = geometric ? -wx.length() : -cox.length(x);
    out.add_term(wx, hx.bar().shifted(weight));
  }
  return out;
}

std::map<WeylElt, LaurentPoly> bs_decompose(EndoscopyCache& cache, const std::vector<int>& word,
                                            const MultLocalSystem& L) {
  AlgebroidElt rest = bott_samelson(word, L);
  std::map<WeylElt, LaurentPoly> out;
  while (!rest.is_zero()) {
    // A maximal-length term is <=_beta-maximal inside its block.
    auto top = rest.terms().begin();
    for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
      if (it->first.length() > top->first.length()) top = it;
    WeylElt w = top->first;
    LaurentPoly mult = top->second.shifted(w.length());  // / v^{-l(w)}
    AlgebroidElt ph = canonical_basis(cache, w, L, /*geometric=*/true);
    rest -= ph.scaled(mult);
    require(rest.coeff(w).is_zero(), Err::Internal, "peeling failed to clear the top term");
    out.emplace(std::move(w), std::move(mult));
  }
  return out;
}

}  // namespace monhecke
