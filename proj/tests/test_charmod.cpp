#include <doctest.h>

#include <random>
#include <set>

#include "monhecke/charmod.hpp"
#include "monhecke/errors.hpp"

#include "test_util.hpp"
#include "monhecke/io.hpp"

using namespace monhecke;

TEST_CASE("evaluate: basis and torsion examples") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem triv = MultLocalSystem::trivial(sl2, AbGroup::cyclic(2));
  CHECK(triv.evaluate(ZVec{5}) == ZVec{0});

  MultLocalSystem order2(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  CHECK(order2.evaluate(sl2.simple_coroot(0)) == ZVec{1});

  RootDatum pgl2(make_gcm({{2}}), LatticeSpec::ad());
  MultLocalSystem order2_ad(&pgl2, AbGroup::cyclic(2), {ZVec{1}});
  CHECK(order2_ad.evaluate(pgl2.simple_coroot(0)) == ZVec{0});  // 2*1 = 0 mod 2
  CHECK_THROWS_AS(order2_ad.evaluate(ZVec{1, 2}), MhError);
}

TEST_CASE("act: examples and action axiom") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem L(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  CHECK(act(sl2, sl2.identity(), L) == L);
  CHECK(act(sl2, sl2.simple(0), L) == L);  // L(-a) = -L(a) = L(a) in Z/2

  auto b2 = make_named_datum("B2");
  std::mt19937_64 rng(11);
  std::vector<WeylElt> elems = b2->enumerate(kUnbounded);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<ZVec> values{ZVec{static_cast<std::int64_t>(rng() % 4)},
                             ZVec{static_cast<std::int64_t>(rng() % 4)}};
    MultLocalSystem M(b2.get(), AbGroup::cyclic(4), values);
    const WeylElt& x = elems[rng() % elems.size()];
    const WeylElt& y = elems[rng() % elems.size()];
    CHECK(act(*b2, b2->mul(x, y), M) == act(*b2, x, act(*b2, y, M)));
  }
}

TEST_CASE("orbit closure") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem triv = MultLocalSystem::trivial(sl2, AbGroup::cyclic(2));
  OrbitResult r = orbit(triv);
  CHECK(r.complete);
  CHECK(r.characters.size() == 1);

  MultLocalSystem order2(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  r = orbit(order2);
  CHECK(r.complete);
  CHECK(r.characters == std::vector<MultLocalSystem>{order2});

  auto b2 = make_named_datum("B2");
  MultLocalSystem L(b2.get(), AbGroup::cyclic(2), {ZVec{1}, ZVec{0}});
  r = orbit(L);
  CHECK(r.complete);
  // closed under every simple reflection
  for (const auto& M : r.characters)
    for (int i = 0; i < 2; ++i) {
      auto moved = act_simple(*b2, i, M);
      CHECK(std::count(r.characters.begin(), r.characters.end(), moved) == 1);
    }
}

TEST_CASE("orbit bound produces an incomplete prefix") {
  // free-rank target on affine A1 gives an infinite orbit
  auto aff = make_named_datum("A1~");
  AbGroup z{{}, 1};
  MultLocalSystem L(aff.get(), z, {ZVec{1}, ZVec{0}, ZVec{0}});
  OrbitResult r = orbit(L, 5);
  CHECK_FALSE(r.complete);
  CHECK(r.characters.size() == 5);
}

TEST_CASE("endoscopic coroots: SL2 and PGL2 examples") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem triv = MultLocalSystem::trivial(sl2, AbGroup::cyclic(2));
  EndoRootsResult r = endoscopic_coroots(triv, kUnbounded);
  CHECK(r.complete);
  CHECK(r.roots.size() == 2);  // both signs

  MultLocalSystem order2(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  CHECK(endoscopic_coroots(order2, kUnbounded).roots.empty());

  RootDatum pgl2(make_gcm({{2}}), LatticeSpec::ad());
  MultLocalSystem order2_ad(&pgl2, AbGroup::cyclic(2), {ZVec{1}});
  CHECK(endoscopic_coroots(order2_ad, kUnbounded).roots.size() == 2);
}

TEST_CASE("endoscopic coroots: W-equivariance") {
  for (const char* name : {"B2", "G2"}) {
    auto d = make_named_datum(name);
    for (std::int64_t a = 0; a < 2; ++a)
      for (std::int64_t b = 0; b < 2; ++b) {
        MultLocalSystem L(d.get(), AbGroup::cyclic(2), {ZVec{a}, ZVec{b}});
        auto phi = endoscopic_coroots(L, kUnbounded);
        for (const auto& w : d->enumerate(kUnbounded)) {
          MultLocalSystem wL = act(*d, w, L);
          auto phi_w = endoscopic_coroots(wL, kUnbounded);
          std::set<ZVec> expect;
          for (const auto& rr : phi.roots) expect.insert(d->apply(w, rr.coroot));
          std::set<ZVec> got;
          for (const auto& rr : phi_w.roots) got.insert(rr.coroot);
          CHECK(got == expect);
        }
      }
  }
}

TEST_CASE("stabilizer is a subgroup and matches fixed points") {
  auto g2 = make_named_datum("G2");
  MultLocalSystem L(g2.get(), AbGroup::cyclic(3), {ZVec{1}, ZVec{0}});
  std::vector<WeylElt> stab;
  for (const auto& w : g2->enumerate(kUnbounded))
    if (act(*g2, w, L) == L) stab.push_back(w);
  for (const auto& x : stab)
    for (const auto& y : stab) {
      WeylElt xy = g2->mul(x, y);
      CHECK(act(*g2, xy, L) == L);
      CHECK(std::count(stab.begin(), stab.end(), xy) == 1);
    }
}

TEST_CASE("can_extend_to_levi") {
  auto b2 = make_named_datum("B2");
  MultLocalSystem triv = MultLocalSystem::trivial(*b2, AbGroup::cyclic(2));
  CHECK(can_extend_to_levi(triv, {0}));
  CHECK(can_extend_to_levi(triv, {0, 1}));
  CHECK(can_extend_to_levi(triv, {}));

  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem order2(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  CHECK_FALSE(can_extend_to_levi(order2, {0}));

  MultLocalSystem L(b2.get(), AbGroup::cyclic(2), {ZVec{1}, ZVec{0}});
  CHECK_FALSE(can_extend_to_levi(L, {0}));
  CHECK(can_extend_to_levi(L, {1}));

  auto aff = make_named_datum("A1~");
  MultLocalSystem afft = MultLocalSystem::trivial(*aff, AbGroup::cyclic(2));
  CHECK_THROWS_AS(can_extend_to_levi(afft, {0, 1}), MhError);  // non-finite J
}

TEST_CASE("coefficient homs: validation, injectivity, composition") {
  AbGroup z2 = AbGroup::cyclic(2), z4 = AbGroup::cyclic(4);
  CoeffHom dbl(z2, z4, {ZVec{2}});
  CHECK(dbl.injective());
  CoeffHom red(z4, z2, {ZVec{1}});
  CHECK_FALSE(red.injective());
  CHECK(CoeffHom::identity(z2).injective());
  CHECK_THROWS_AS(CoeffHom(z2, z4, {ZVec{1}}), MhError);  // 2*1 != 0 mod 4

  // Z -> Z/2 is not injective; Z -> Z doubling is.
  AbGroup z{{}, 1};
  CHECK_FALSE(CoeffHom(z, z2, {ZVec{1}}).injective());
  CHECK(CoeffHom(z, z, {ZVec{2}}).injective());

  // composition: reduction o doubling kills Z/2 inside Z/4
  CoeffHom comp = red.compose(dbl);
  CHECK(comp.apply(ZVec{1}) == ZVec{0});
  CHECK_FALSE(comp.injective());

  // multi-factor source: Z/2 x Z/2 -> Z/4 can never be injective
  AbGroup z22{{2, 2}, 0};
  CoeffHom squeeze(z22, z4, {ZVec{2}, ZVec{2}});
  CHECK_FALSE(squeeze.injective());
  // but Z/2 x Z/2 -> Z/2 x Z/4 slotwise is
  AbGroup z24{{2, 4}, 0};
  CoeffHom slot(z22, z24, {ZVec{1, 0}, ZVec{0, 2}});
  CHECK(slot.injective());
}

TEST_CASE("finite group element enumeration") {
  AbGroup z6 = AbGroup::cyclic(6);
  CHECK(z6.elements().size() == 6);
  AbGroup z23{{2, 3}, 0};
  auto elts = z23.elements();
  CHECK(elts.size() == 6);
  std::set<ZVec> uniq(elts.begin(), elts.end());
  CHECK(uniq.size() == 6);
  AbGroup z{{}, 1};
  CHECK_THROWS_AS(z.elements(), MhError);
}

TEST_CASE("character ordering is consistent across targets") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem a(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  MultLocalSystem b(&sl2, AbGroup::cyclic(4), {ZVec{1}});
  CHECK(a != b);
  CHECK((a < b || b < a));  // distinct characters never tie as map keys
  std::set<MultLocalSystem> keys{a, b};
  CHECK(keys.size() == 2);
}

TEST_CASE("change_coefficients: examples") {
  RootDatum sl2(make_gcm({{2}}), LatticeSpec::sc());
  MultLocalSystem order2(&sl2, AbGroup::cyclic(2), {ZVec{1}});
  CHECK(change_coefficients(order2, CoeffHom::identity(order2.target())) == order2);

  CoeffHom dbl(AbGroup::cyclic(2), AbGroup::cyclic(4), {ZVec{2}});
  MultLocalSystem lifted = change_coefficients(order2, dbl);
  CHECK(lifted.evaluate(ZVec{1}) == ZVec{2});
  CHECK(endoscopic_coroots(lifted, kUnbounded).roots.empty());

  // non-injective reduction can grow Phi
  MultLocalSystem two_mod4(&sl2, AbGroup::cyclic(4), {ZVec{2}});
  CHECK(endoscopic_coroots(two_mod4, kUnbounded).roots.empty());
  CoeffHom red(AbGroup::cyclic(4), AbGroup::cyclic(2), {ZVec{1}});
  MultLocalSystem dropped = change_coefficients(two_mod4, red);
  CHECK(dropped.evaluate(ZVec{1}) == ZVec{0});
  CHECK(endoscopic_coroots(dropped, kUnbounded).roots.size() == 2);

  CHECK_THROWS_AS(change_coefficients(order2, red), MhError);  // group mismatch
}

TEST_CASE("unit-injective invariance of Phi over B2 and G2") {
  for (const char* name : {"B2", "G2"}) {
    auto d = make_named_datum(name);
    for (std::int64_t m : {2, 3, 4, 5, 6}) {
      // embed Z/m into Z/2m by doubling: injective
      CoeffHom emb(AbGroup::cyclic(m), AbGroup::cyclic(2 * m), {ZVec{2}});
      REQUIRE(emb.injective());
      for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = 0; b < m; ++b) {
          MultLocalSystem L(d.get(), AbGroup::cyclic(m), {ZVec{a}, ZVec{b}});
          MultLocalSystem L2 = change_coefficients(L, emb);
          auto phi1 = endoscopic_coroots(L, kUnbounded);
          auto phi2 = endoscopic_coroots(L2, kUnbounded);
          std::set<ZVec> s1, s2;
          for (const auto& rr : phi1.roots) s1.insert(rr.coroot);
          for (const auto& rr : phi2.roots) s2.insert(rr.coroot);
          CHECK(s1 == s2);
        }
    }
  }
}

TEST_CASE("split surjections lift characters with the same Phi") {
  // p: Z/6 -> Z/2 (mod 2) splits via s: Z/2 -> Z/6, 1 -> 3; p o s = id.
  AbGroup z2 = AbGroup::cyclic(2), z6 = AbGroup::cyclic(6);
  CoeffHom p(z6, z2, {ZVec{1}});
  CoeffHom sec(z2, z6, {ZVec{3}});
  REQUIRE(sec.injective());
  CHECK(p.compose(sec).apply(ZVec{1}) == ZVec{1});

  auto b2 = make_named_datum("B2");
  for (std::int64_t a = 0; a < 2; ++a)
    for (std::int64_t b = 0; b < 2; ++b) {
      MultLocalSystem L(b2.get(), z2, {ZVec{a}, ZVec{b}});
      MultLocalSystem lift = change_coefficients(L, sec);
      CHECK(change_coefficients(lift, p) == L);
      auto phiL = endoscopic_coroots(L, kUnbounded);
      auto phiLift = endoscopic_coroots(lift, kUnbounded);
      CHECK(phiL.roots.size() == phiLift.roots.size());
    }
}
