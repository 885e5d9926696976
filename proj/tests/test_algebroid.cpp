#include <doctest.h>

#include <random>

#include "monhecke/algebroid.hpp"
#include "monhecke/errors.hpp"

#include "test_util.hpp"
#include "monhecke/io.hpp"

using namespace monhecke;

namespace {

const LaurentPoly kOne(1);
const LaurentPoly kV = LaurentPoly::v_pow(1);
const LaurentPoly kVinv = LaurentPoly::v_pow(-1);
const LaurentPoly kV2 = LaurentPoly::v_pow(2);
const LaurentPoly kV2inv = LaurentPoly::v_pow(-2);

}  // namespace

TEST_CASE("t_basis and quadratic relation cases") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem triv = MultLocalSystem::trivial(sl2, AbGroup::cyclic(2));
  MultLocalSystem order2(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  WeylElt s = sl2.simple(0);

  // s in W_L°: T_s T_s = (v^2-1) T_s + v^2 T_e
  AlgebroidElt ts = AlgebroidElt::t_basis(s, triv);
  AlgebroidElt sq = compose(ts, ts);
  AlgebroidElt expect(triv, triv);
  expect.add_term(s, kV2 - kOne);
  expect.add_term(sl2.identity(), kV2);
  CHECK(sq == expect);

  // s not in W_L°: T_s^{sL} T_s^L = v^2 T_e
  AlgebroidElt ts2 = AlgebroidElt::t_basis(s, order2);
  AlgebroidElt sq2 = compose(AlgebroidElt::t_basis(s, ts2.target()), ts2);
  AlgebroidElt expect2(order2, order2);
  expect2.add_term(sl2.identity(), kV2);
  CHECK(sq2 == expect2);

  // T_s o T_e = T_s
  CHECK(compose(ts, AlgebroidElt::unit(triv)) == ts);

  // normalized words construct the same element
  auto a2 = make_named_datum("A2");
  MultLocalSystem t2 = MultLocalSystem::trivial(*a2, AbGroup::cyclic(2));
  CHECK(AlgebroidElt::t_basis(a2->normalize({1, 0, 1}), t2) ==
        AlgebroidElt::t_basis(a2->normalize({0, 1, 0}), t2));
}

TEST_CASE("compose: length-additive products and mismatches") {
  auto a2 = make_named_datum("A2");
  MultLocalSystem chi(a2.get(), AbGroup::cyclic(3), {ZVec{1}, ZVec{2}});
  WeylElt x = a2->simple(0);
  WeylElt y = a2->simple(1);
  WeylElt xy = a2->mul(x, y);
  REQUIRE(xy.length() == 2);
  AlgebroidElt ty = AlgebroidElt::t_basis(y, chi);
  AlgebroidElt tx = AlgebroidElt::t_basis(x, ty.target());
  CHECK(compose(tx, ty) == AlgebroidElt::t_basis(xy, chi));
  CHECK_THROWS_AS(compose(ty, ty), MhError);  // target/source mismatch
}

TEST_CASE("invert_t: examples and two-sided inverses everywhere") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem triv = MultLocalSystem::trivial(sl2, AbGroup::cyclic(2));
  MultLocalSystem order2(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  WeylElt s = sl2.simple(0);

  CHECK(invert_t(sl2.identity(), triv) == AlgebroidElt::unit(triv));

  AlgebroidElt inv1 = invert_t(s, triv);
  AlgebroidElt expect1(triv, triv);
  expect1.add_term(s, kV2inv);
  expect1.add_term(sl2.identity(), kV2inv - kOne);
  CHECK(inv1 == expect1);

  AlgebroidElt inv2 = invert_t(s, order2);
  AlgebroidElt expect2(order2, order2);
  expect2.add_term(s, kV2inv);
  CHECK(inv2 == expect2);

  for (const char* name : {"A2", "B2", "A3"}) {
    auto d = make_named_datum(name);
    std::vector<ZVec> vals(static_cast<size_t>(d->lattice_rank()), ZVec{1});
    MultLocalSystem L(d.get(), AbGroup::cyclic(2), vals);
    for (const auto& w : d->enumerate(kUnbounded)) {
      AlgebroidElt tw = AlgebroidElt::t_basis(w, L);
      AlgebroidElt inv = invert_t(w, L);
      CHECK(compose(inv, tw) == AlgebroidElt::unit(L));
      CHECK(compose(tw, inv) == AlgebroidElt::unit(tw.target()));
    }
  }
}

TEST_CASE("bar: involution and compatibility with composition") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem triv = MultLocalSystem::trivial(sl2, AbGroup::cyclic(2));
  WeylElt s = sl2.simple(0);
  CHECK(bar(AlgebroidElt::unit(triv)) == AlgebroidElt::unit(triv));

  AlgebroidElt barts = bar(AlgebroidElt::t_basis(s, triv));
  AlgebroidElt expect(triv, triv);
  expect.add_term(s, kV2inv);
  expect.add_term(sl2.identity(), kV2inv - kOne);
  CHECK(barts == expect);

  auto b2 = make_named_datum("B2");
  MultLocalSystem L(b2.get(), AbGroup::cyclic(2), {ZVec{1}, ZVec{0}});
  std::mt19937_64 rng(3);
  std::vector<WeylElt> elems = b2->enumerate(kUnbounded);
  for (int trial = 0; trial < 40; ++trial) {
    const WeylElt& w0 = elems[rng() % elems.size()];
    MultLocalSystem L2 = act(*b2, w0, L);
    AlgebroidElt A(L, L2);
    for (const auto& w : elems)
      if (act(*b2, w, L) == L2 && rng() % 2)
        A.add_term(w, LaurentPoly::monomial(static_cast<long>(rng() % 5) - 2,
                                            static_cast<int>(rng() % 5) - 2));
    CHECK(bar(bar(A)) == A);
    // bar commutes with composition
    const WeylElt& u = elems[rng() % elems.size()];
    AlgebroidElt B = AlgebroidElt::t_basis(u, A.target());
    CHECK(bar(compose(B, A)) == compose(bar(B), bar(A)));
  }
}

TEST_CASE("underline_h_s and bott_samelson") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem triv = MultLocalSystem::trivial(sl2, AbGroup::cyclic(2));
  MultLocalSystem order2(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  WeylElt s = sl2.simple(0);

  AlgebroidElt h1 = underline_h_s(0, triv);
  AlgebroidElt expect1(triv, triv);
  expect1.add_term(s, kVinv);
  expect1.add_term(sl2.identity(), kVinv);
  CHECK(h1 == expect1);

  AlgebroidElt h2 = underline_h_s(0, order2);
  AlgebroidElt expect2(order2, order2);
  expect2.add_term(s, kVinv);
  CHECK(h2 == expect2);

  // H_s^2 = (v + v^-1) H_s for s in W_L°
  CHECK(compose(h1, h1) == h1.scaled(kV + kVinv));

  // empty word gives T_e; single letter gives H_s
  CHECK(bott_samelson({}, triv) == AlgebroidElt::unit(triv));
  CHECK(bott_samelson({0}, triv) == h1);

  // (s, s) with s not in W_L°: cancels to T_e
  CHECK(bott_samelson({0, 0}, order2) == AlgebroidElt::unit(order2));
}

TEST_CASE("standard_form and hom_pairing") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem triv = MultLocalSystem::trivial(sl2, AbGroup::cyclic(2));
  MultLocalSystem order2(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  WeylElt s = sl2.simple(0);

  AlgebroidElt te = AlgebroidElt::unit(triv);
  AlgebroidElt ts = AlgebroidElt::t_basis(s, triv);
  CHECK(standard_form(te, te, FormWeight::Flat) == kOne);
  CHECK(standard_form(ts, ts, FormWeight::Flat) == kOne);
  CHECK(standard_form(ts, te, FormWeight::Flat) == LaurentPoly());
  CHECK(standard_form(ts, ts, FormWeight::WLen) == kV2);

  CHECK(hom_pairing({}, {}, triv, FormWeight::Flat) == kOne);
  // <H_s, H_s> flat: 2v^-2 when s in W_L°, v^-2 otherwise
  CHECK(hom_pairing({0}, {0}, triv, FormWeight::Flat) == kV2inv + kV2inv);
  CHECK(hom_pairing({0}, {0}, order2, FormWeight::Flat) == kV2inv);
  // <empty, y> flat = coefficient of T_e in BS(y)
  CHECK(hom_pairing({}, {0, 0}, triv, FormWeight::Flat) ==
        bott_samelson({0, 0}, triv).coeff(sl2.identity()));
}

TEST_CASE("ch_mult_check: unit case and all branches") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem triv = MultLocalSystem::trivial(sl2, AbGroup::cyclic(2));
  ChMultResult r = ch_mult_check(sl2.identity(), 0, 0, triv);
  CHECK(r.matches);
  CHECK(r.product == underline_h_s(0, triv));

  auto b2 = make_named_datum("B2");
  MultLocalSystem L(b2.get(), AbGroup::cyclic(2), {ZVec{1}, ZVec{0}});
  for (const auto& w : b2->enumerate(kUnbounded))
    for (int g = 0; g < 2; ++g)
      for (int n : {-1, 0, 2}) CHECK(ch_mult_check(w, n, g, L).matches);
}

TEST_CASE("canonical basis: rank-one shapes") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem triv = MultLocalSystem::trivial(sl2, AbGroup::cyclic(2));
  EndoscopyCache cache(sl2);
  WeylElt s = sl2.simple(0);

  // C_s = pH_s = v^-1 T_s + v^-1 T_e for simple s in W_L°
  AlgebroidElt expect(triv, triv);
  expect.add_term(s, kVinv);
  expect.add_term(sl2.identity(), kVinv);
  CHECK(canonical_basis(cache, s, triv, false) == expect);
  CHECK(canonical_basis(cache, s, triv, true) == expect);
  CHECK(canonical_basis(cache, sl2.identity(), triv, false) == AlgebroidElt::unit(triv));

  // minimal block elements: C = T_{w^beta}, pH = v^{-l} T_{w^beta}
  MultLocalSystem order2(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  EndoscopyCache cache2(sl2);
  AlgebroidElt c = canonical_basis(cache2, s, order2, false);
  CHECK(c == AlgebroidElt::t_basis(s, order2));
  AlgebroidElt ph = canonical_basis(cache2, s, order2, true);
  CHECK(ph == AlgebroidElt::t_basis(s, order2).scaled(kVinv));
  // the sharpened bar identity on a non-neutral block
  CHECK(bar(c) == c.scaled(kV2inv));
  CHECK(bar(ph) == ph);
}

TEST_CASE("canonical basis: endosimple non-simple reflection in B2") {
  auto b2 = make_named_datum("B2");
  MultLocalSystem L(b2.get(), AbGroup::cyclic(2), {ZVec{1}, ZVec{0}});
  EndoscopyCache cache(*b2);
  const EndoDatum& endo = cache.endo(L);
  const EndosimpleGen* t = nullptr;
  for (const auto& g : endo.gens)
    if (g.refl.length() > 1) t = &g;
  REQUIRE(t != nullptr);
  REQUIRE(t->refl.length() == 3);

  // plain transport: v^-1 (T_t + T_e); not bar-invariant on a defect block
  AlgebroidElt c = canonical_basis(cache, t->refl, L, false);
  AlgebroidElt expect(L, L);
  expect.add_term(t->refl, kVinv);
  expect.add_term(b2->identity(), kVinv);
  CHECK(c == expect);

  // geometric normalization: v^-3 T_t + v^-1 T_e, the bar self-dual element
  AlgebroidElt ph = canonical_basis(cache, t->refl, L, true);
  AlgebroidElt expect_ph(L, L);
  expect_ph.add_term(t->refl, LaurentPoly::v_pow(-3));
  expect_ph.add_term(b2->identity(), kVinv);
  CHECK(ph == expect_ph);
  CHECK(bar(ph) == ph);
  CHECK(bar(c) != c);
}

TEST_CASE("geometric canonical elements are bar self-dual on every block") {
  auto b2 = make_named_datum("B2");
  MultLocalSystem L0(b2.get(), AbGroup::cyclic(2), {ZVec{1}, ZVec{0}});
  EndoscopyCache cache(*b2);
  for (const auto& L : orbit(L0).characters)
    for (const auto& w : b2->enumerate(kUnbounded)) {
      AlgebroidElt ph = canonical_basis(cache, w, L, true);
      CHECK(bar(ph) == ph);
      CHECK(ph.coeff(w) == LaurentPoly::v_pow(-w.length()));
    }
  // same datum with an order-3 character on A2
  auto a2 = make_named_datum("A2");
  MultLocalSystem chi(a2.get(), AbGroup::cyclic(3), {ZVec{1}, ZVec{2}});
  EndoscopyCache cache2(*a2);
  for (const auto& L : orbit(chi).characters)
    for (const auto& w : a2->enumerate(kUnbounded)) {
      AlgebroidElt ph = canonical_basis(cache2, w, L, true);
      CHECK(bar(ph) == ph);
    }
  // and G2 with the order-2 character, across the whole orbit
  auto g2 = make_named_datum("G2");
  MultLocalSystem xi(g2.get(), AbGroup::cyclic(2), {ZVec{1}, ZVec{0}});
  EndoscopyCache cache3(*g2);
  for (const auto& L : orbit(xi).characters)
    for (const auto& w : g2->enumerate(kUnbounded)) {
      AlgebroidElt ph = canonical_basis(cache3, w, L, true);
      CHECK(bar(ph) == ph);
      CHECK(ph.coeff(w) == LaurentPoly::v_pow(-w.length()));
    }
}

TEST_CASE("bs_decompose: spec examples and nonnegativity") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem triv = MultLocalSystem::trivial(sl2, AbGroup::cyclic(2));
  MultLocalSystem order2(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  EndoscopyCache cache(sl2);
  WeylElt s = sl2.simple(0);

  auto d1 = bs_decompose(cache, {0}, triv);
  CHECK(d1 == std::map<WeylElt, LaurentPoly>{{s, kOne}});

  auto d2 = bs_decompose(cache, {0, 0}, triv);
  CHECK(d2 == std::map<WeylElt, LaurentPoly>{{s, kV + kVinv}});

  EndoscopyCache cache2(sl2);
  auto d3 = bs_decompose(cache2, {0, 0}, order2);
  CHECK(d3 == std::map<WeylElt, LaurentPoly>{{sl2.identity(), kOne}});

  // multiplicities of reduced-word BS elements: nonnegative, bar-symmetric
  auto b2 = make_named_datum("B2");
  MultLocalSystem L(b2.get(), AbGroup::cyclic(2), {ZVec{1}, ZVec{0}});
  EndoscopyCache cache3(*b2);
  for (const auto& w : b2->enumerate(kUnbounded)) {
    auto dec = bs_decompose(cache3, w.word, L);
    for (const auto& [x, m] : dec) {
      CHECK(m.has_nonneg_coeffs());
      CHECK(m.is_bar_symmetric());
    }
    CHECK(dec.count(w) == 1);
  }
}
