#include "monhecke/kl.hpp"

#include "monhecke/errors.hpp"

namespace monhecke {

KLTable::KLTable(const CoxeterSystem& cox) : coxm_(cox.endo().coxeter_matrix) {
  int sz = cox.size();
  h_.assign(static_cast<size_t>(sz), std::vector<LaurentPoly>(static_cast<size_t>(sz)));
  const LaurentPoly v = LaurentPoly::v_pow(1);
  const LaurentPoly vinv = LaurentPoly::v_pow(-1);
  for (int y : cox.by_length()) {
    if (cox.length(y) == 0) {
      h_[0][0] = LaurentPoly(1);
      continue;
    }
    int t = cox.canonical_word(y).back();
    int z = cox.right_mul(y, t);
    // b_z * b_t expanded over the H-basis.
    std::vector<LaurentPoly> acc(static_cast<size_t>(sz));
    for (int x = 0; x < sz; ++x) {
      const LaurentPoly& hz = h_[static_cast<size_t>(x)][static_cast<size_t>(z)];
      if (hz.is_zero()) continue;
      int xt = cox.right_mul(x, t);
      acc[static_cast<size_t>(xt)] += hz;
      acc[static_cast<size_t>(x)] += hz * (cox.length(xt) > cox.length(x) ? v : vinv);
    }
    // Subtract mu(x, z) b_x over x < z with xt < x.
    for (int x = 0; x < sz; ++x) {
      if (x == z || h_[static_cast<size_t>(x)][static_cast<size_t>(z)].is_zero()) continue;
      if (cox.length(cox.right_mul(x, t)) > cox.length(x)) continue;
      Int m = h_[static_cast<size_t>(x)][static_cast<size_t>(z)].coeff(1);
      if (m == 0) continue;
      LaurentPoly mp(m);
      for (int u = 0; u < sz; ++u) {
        const LaurentPoly& hu = h_[static_cast<size_t>(u)][static_cast<size_t>(x)];
        if (!hu.is_zero()) acc[static_cast<size_t>(u)] -= mp * hu;
      }
    }
    for (int x = 0; x < sz; ++x) h_[static_cast<size_t>(x)][static_cast<size_t>(y)] = std::move(acc[static_cast<size_t>(x)]);
    require(h_[static_cast<size_t>(y)][static_cast<size_t>(y)].is_one(), Err::Internal,
            "KL recursion lost unitriangularity");
    for (int x = 0; x < sz; ++x) {
      const LaurentPoly& hx = h_[static_cast<size_t>(x)][static_cast<size_t>(y)];
      if (hx.is_zero() || x == y) continue;
      require(hx.is_polynomial() && hx.min_exp() >= 1 &&
                  hx.max_exp() <= cox.length(y) - cox.length(x),
              Err::Internal, "KL polynomial out of its degree window");
    }
  }
}

LaurentPoly KLTable::entry(int x, int y, const CoxeterSystem& cox) const {
  const LaurentPoly& hx = h_[static_cast<size_t>(x)][static_cast<size_t>(y)];
  if (hx.is_zero()) return LaurentPoly();
  return hx.bar().shifted(cox.length(y) - cox.length(x));
}

Int KLTable::mu(int x, int y, const CoxeterSystem& cox) const {
  return entry(x, y, cox).coeff(cox.length(y) - cox.length(x) - 1);
}

KLTable KLTable::from_entries(const CoxeterSystem& cox,
                              const std::vector<std::vector<LaurentPoly>>& P) {
  int sz = cox.size();
  require(static_cast<int>(P.size()) == sz, Err::CorruptCache, "entry table has wrong size");
  KLTable out;
  out.coxm_ = cox.endo().coxeter_matrix;
  out.h_.assign(static_cast<size_t>(sz), std::vector<LaurentPoly>(static_cast<size_t>(sz)));
  for (int x = 0; x < sz; ++x)
    for (int y = 0; y < sz; ++y) {
      const LaurentPoly& p = P[static_cast<size_t>(x)][static_cast<size_t>(y)];
      out.h_[static_cast<size_t>(x)][static_cast<size_t>(y)] =
          p.is_zero() ? LaurentPoly()
                      : p.bar().shifted(cox.length(y) - cox.length(x));
    }
  return out;
}

}  // namespace monhecke
