#include "monhecke/orbit_algebra.hpp"

#include <algorithm>
#include <sstream>

#include "monhecke/errors.hpp"

namespace monhecke {

OrbitAlgebra::OrbitAlgebra(const RootDatum& datum, std::vector<MultLocalSystem> orbit)
    : datum_(&datum), orbit_(std::move(orbit)) {
  require(!orbit_.empty(), Err::InfiniteOrbit, "orbit algebra needs a nonempty finite orbit");
  std::sort(orbit_.begin(), orbit_.end());
  // Closure under the simple reflections.
  for (const auto& L : orbit_)
    for (int i = 0; i < datum.rank(); ++i)
      require(std::binary_search(orbit_.begin(), orbit_.end(), act_simple(datum, i, L)),
              Err::InfiniteOrbit, "character list is not W-stable");
}

int OrbitAlgebra::char_index(const MultLocalSystem& L) const {
  auto it = std::lower_bound(orbit_.begin(), orbit_.end(), L);
  require(it != orbit_.end() && *it == L, Err::GroupMismatch, "character not in the orbit");
  return static_cast<int>(it - orbit_.begin());
}

OrbitAlgebra::Elt OrbitAlgebra::t_times_one(const WeylElt& w, int char_idx) const {
  Elt out;
  out.terms.emplace(std::make_pair(w, char_idx), LaurentPoly(1));
  return out;
}

OrbitAlgebra::Elt OrbitAlgebra::unit() const {
  Elt out;
  for (int i = 0; i < static_cast<int>(orbit_.size()); ++i)
    out.terms.emplace(std::make_pair(datum_->identity(), i), LaurentPoly(1));
  return out;
}

OrbitAlgebra::Elt OrbitAlgebra::t_elt(const WeylElt& w) const {
  Elt out;
  for (int i = 0; i < static_cast<int>(orbit_.size()); ++i)
    out.terms.emplace(std::make_pair(w, i), LaurentPoly(1));
  return out;
}

OrbitAlgebra::Elt OrbitAlgebra::add(const Elt& a, const Elt& b) const {
  Elt out = a;
  for (const auto& [k, p] : b.terms) {
    auto [it, fresh] = out.terms.emplace(k, p);
    if (!fresh) {
      it->second += p;
      if (it->second.is_zero()) out.terms.erase(it);
    }
  }
  return out;
}

OrbitAlgebra::Elt OrbitAlgebra::scale(const Elt& a, const LaurentPoly& p) const {
  Elt out;
  if (p.is_zero()) return out;
  for (const auto& [k, q] : a.terms) out.terms.emplace(k, q * p);
  return out;
}

OrbitAlgebra::Elt OrbitAlgebra::mul(const Elt& a, const Elt& b) const {
  // (T_x 1_L)(T_y 1_M) = delta_{L, y.M} T_x T_y 1_M, with T_x T_y computed in
  // the algebroid at source M.
  Elt out;
  for (const auto& [kb, pb] : b.terms) {
    const auto& [y, mi] = kb;
    const MultLocalSystem& M = orbit_[static_cast<size_t>(mi)];
    MultLocalSystem yM = act(*datum_, y, M);
    int yMi = char_index(yM);
    for (const auto& [ka, pa] : a.terms) {
      const auto& [x, li] = ka;
      if (li != yMi) continue;
      AlgebroidElt prod = compose(AlgebroidElt::t_basis(x, yM), AlgebroidElt::t_basis(y, M));
      for (const auto& [w, c] : prod.terms()) {
        auto key = std::make_pair(w, mi);
        LaurentPoly contrib = pa * pb * c;
        auto [it, fresh] = out.terms.emplace(key, contrib);
        if (!fresh) {
          it->second += contrib;
          if (it->second.is_zero()) out.terms.erase(it);
        }
      }
    }
  }
  return out;
}

AlgebroidElt OrbitAlgebra::phi_component(const Elt& a, int char_idx) const {
  const MultLocalSystem& L = orbit_[static_cast<size_t>(char_idx)];
  // Terms T_w 1_L all map into Hom(L, w L); a component is only well formed
  // when the targets agree, which callers arrange by fixing w's block.
  AlgebroidElt out(L, L);
  bool first = true;
  for (const auto& [k, p] : a.terms) {
    if (k.second != char_idx) continue;
    if (first) {
      out = AlgebroidElt(L, act(*datum_, k.first, L));
      first = false;
    }
    AlgebroidElt term = AlgebroidElt::t_basis(k.first, L).scaled(p);
    require(term.target() == out.target(), Err::SpaceMismatch,
            "phi component mixes morphism spaces");
    out += term;
  }
  return out;
}

std::string OrbitAlgebra::str(const Elt& a) const {
  if (a.terms.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, p] : a.terms) {
    if (!first) os << " + ";
    first = false;
    os << "(" << p.str() << ")*T[";
    for (size_t i = 0; i < k.first.word.size(); ++i) {
      if (i) os << ",";
      os << k.first.word[i] + 1;
    }
    if (k.first.word.empty()) os << "e";
    os << "]1_{" << k.second << "}";
  }
  return os.str();
}

std::vector<std::string> orbit_algebra_relation_failures(const OrbitAlgebra& alg) {
  std::vector<std::string> failures;
  const RootDatum& datum = alg.datum();
  int n = static_cast<int>(alg.orbit().size());
  auto check = [&failures](bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  };

  // (1) 1_L 1_M = delta 1_L
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto prod = alg.mul(alg.one_char(i), alg.one_char(j));
      auto expect = (i == j) ? alg.one_char(i) : alg.zero();
      check(prod == expect, "relation (1) fails at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    }

  // (2) T_x T_y = T_{xy} when lengths add; sampled over all pairs of the
  // whole group for finite type.
  std::vector<WeylElt> elems = datum.enumerate(kUnbounded);
  for (const auto& x : elems)
    for (const auto& y : elems) {
      WeylElt xy = datum.mul(x, y);
      if (xy.length() != x.length() + y.length()) continue;
      check(alg.mul(alg.t_elt(x), alg.t_elt(y)) == alg.t_elt(xy),
            "relation (2) fails at a length-additive pair");
    }

  // (3) T_x 1_L = 1_{xL} T_x
  for (const auto& x : elems)
    for (int i = 0; i < n; ++i) {
      auto lhs = alg.mul(alg.t_elt(x), alg.one_char(i));
      int xi = alg.char_index(act(datum, x, alg.orbit()[static_cast<size_t>(i)]));
      auto rhs = alg.mul(alg.one_char(xi), alg.t_elt(x));
      check(lhs == rhs, "relation (3) fails");
    }

  // (4) T_s^2 = v^2 T_e + (v^2-1) sum_{L : s in W_L°} T_s 1_L
  for (int s = 0; s < datum.rank(); ++s) {
    auto lhs = alg.mul(alg.t_elt(datum.simple(s)), alg.t_elt(datum.simple(s)));
    auto rhs = alg.scale(alg.t_elt(datum.identity()), LaurentPoly::v_pow(2));
    LaurentPoly v2m1 = LaurentPoly::v_pow(2) - LaurentPoly(1);
    for (int i = 0; i < n; ++i)
      if (alg.orbit()[static_cast<size_t>(i)].simple_in_endo_group(s))
        rhs = alg.add(rhs, alg.scale(alg.t_times_one(datum.simple(s), i), v2m1));
    check(lhs == rhs, "relation (4) fails at s=" + std::to_string(s + 1));
  }

  // (5) T_e = sum_L 1_L acts as the unit.
  for (const auto& x : elems)
    for (int i = 0; i < n; ++i) {
      auto t = alg.t_times_one(x, i);
      check(alg.mul(alg.unit(), t) == t && alg.mul(t, alg.unit()) == t,
            "relation (5) fails (unit law)");
    }
  return failures;
}

}  // namespace monhecke
