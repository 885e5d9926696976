#include "monhecke/endoscopy.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "monhecke/errors.hpp"

namespace monhecke {

std::optional<RealRoot> reflection_root(const RootDatum& datum, const WeylElt& t) {
  if (t.length() % 2 == 0) return std::nullopt;
  for (const RealRoot& alpha : datum.inversions(t)) {
    ZVec image = t.rootc.apply(alpha.root_coords);
    if (image != scale(-1, alpha.root_coords)) continue;
    if (datum.reflection(alpha) == t) return alpha;
    return std::nullopt;  // t negates alpha but is not r_alpha
  }
  return std::nullopt;
}

int ell_L(const RootDatum& datum, const WeylElt& w, const MultLocalSystem& L) {
  int count = 0;
  for (const RealRoot& alpha : datum.inversions(w))
    if (L.kills(alpha.coroot)) ++count;
  return count;
}

bool is_endosimple(const RootDatum& datum, const WeylElt& t, const MultLocalSystem& L) {
  auto alpha = reflection_root(datum, t);
  require(alpha.has_value(), Err::NotAReflection, "element is not a reflection");
  if (!L.kills(alpha->coroot)) return false;  // t not in W_L°
  return ell_L(datum, t, L) == 1;
}

EndoDatum endosimple_generators(const RootDatum& datum, const MultLocalSystem& L, int bound) {
  EndoRootsResult phi = endoscopic_coroots(L, bound);
  EndoDatum out{L, std::move(phi.roots), {}, GCM(), {}, phi.complete};
  for (const RealRoot& alpha : out.phi) {
    if (!alpha.positive) continue;
    WeylElt t = datum.reflection(alpha);
    if (ell_L(datum, t, L) == 1) out.gens.push_back(EndosimpleGen{std::move(t), alpha});
  }
  std::sort(out.gens.begin(), out.gens.end(),
            [](const EndosimpleGen& a, const EndosimpleGen& b) { return a.refl < b.refl; });
  int k = static_cast<int>(out.gens.size());
  std::vector<std::vector<std::int64_t>> entries(static_cast<size_t>(k),
                                                 std::vector<std::int64_t>(static_cast<size_t>(k)));
  for (int ti = 0; ti < k; ++ti)
    for (int si = 0; si < k; ++si)
      entries[static_cast<size_t>(ti)][static_cast<size_t>(si)] =
          dot(out.gens[static_cast<size_t>(si)].alpha.root, out.gens[static_cast<size_t>(ti)].alpha.coroot);
  if (k > 0) out.endo_gcm = GCM(std::move(entries));
  out.coxeter_matrix.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), 1));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      if (i != j)
        out.coxeter_matrix[static_cast<size_t>(i)][static_cast<size_t>(j)] =
            crystallographic_order(out.endo_gcm.at(i, j) * out.endo_gcm.at(j, i));
  return out;
}

std::vector<WeylElt> endo_weyl_group(const RootDatum& datum, const EndoDatum& endo) {
  std::set<WeylElt> seen;
  std::vector<WeylElt> frontier{datum.identity()};
  seen.insert(frontier[0]);
  while (!frontier.empty()) {
    std::vector<WeylElt> next;
    for (const auto& w : frontier)
      for (const auto& g : endo.gens) {
        WeylElt w2 = datum.mul(w, g.refl);
        if (seen.insert(w2).second) next.push_back(std::move(w2));
      }
    frontier = std::move(next);
  }
  return std::vector<WeylElt>(seen.begin(), seen.end());
}

bool Block::contains(const WeylElt& w) const {
  return std::binary_search(members.begin(), members.end(), w);
}

std::vector<Block> blocks(const RootDatum& datum, const MultLocalSystem& L,
                          const MultLocalSystem& L2) {
  require(datum.is_finite_type(), Err::InfiniteGroup, "block enumeration requires finite type");
  std::vector<WeylElt> transporter;
  for (const auto& w : datum.enumerate(kUnbounded))
    if (act(datum, w, L) == L2) transporter.push_back(w);
  if (transporter.empty()) return {};

  EndoDatum endo = endosimple_generators(datum, L, kUnbounded);
  std::set<WeylElt> subgroup;
  for (auto& u : endo_weyl_group(datum, endo)) subgroup.insert(std::move(u));

  std::vector<Block> out;
  std::set<WeylElt> assigned;
  for (const auto& w : transporter) {
    if (assigned.count(w)) continue;
    Block b{L, L2, datum.identity(), {}};
    for (const auto& u : subgroup) b.members.push_back(datum.mul(w, u));
    std::sort(b.members.begin(), b.members.end());
    for (const auto& m : b.members) assigned.insert(m);
    b.min_elt = b.members.front();  // sorted by (length, word): front is shortest
    require(b.members.size() < 2 || b.members[1].length() > b.min_elt.length(), Err::Internal,
            "block minimal element must be unique");
    out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [](const Block& a, const Block& b) { return a.min_elt < b.min_elt; });
  return out;
}

Block block_product(const RootDatum& datum, const Block& gamma, const Block& beta) {
  require(gamma.source == beta.target, Err::CompositionMismatch,
          "blocks are not composable (source/target mismatch)");
  WeylElt z = datum.mul(gamma.min_elt, beta.min_elt);
  // The product block is z W_L° for the source character of beta.
  EndoDatum endo = endosimple_generators(datum, beta.source, kUnbounded);
  Block out{beta.source, gamma.target, datum.identity(), {}};
  for (const auto& u : endo_weyl_group(datum, endo)) out.members.push_back(datum.mul(z, u));
  std::sort(out.members.begin(), out.members.end());
  out.min_elt = out.members.front();
  return out;
}

int ell_beta(const RootDatum& datum, const WeylElt& w, const Block& beta) {
  require(beta.contains(w), Err::NotInBlock, "element does not lie in the block");
  int by_inversions = ell_L(datum, w, beta.source);
  WeylElt u = datum.mul(datum.inverse(beta.min_elt), w);
  int by_conjugate = ell_L(datum, u, beta.source);
  require(by_inversions == by_conjugate, Err::Internal,
          "block length disagrees with its w^beta-conjugate computation");
  return by_inversions;
}

bool is_endo_reduced(const RootDatum& datum, const std::vector<int>& word,
                     const MultLocalSystem& L) {
  // Characters along the word: chain[k] = L, chain[i] = s_i . chain[i+1].
  // Step i contributes when chain[i+1] kills alpha_{s_i}^vee; the count of
  // contributing steps of a reduced word equals the inversion count of the
  // product in Phi_re,L, which is the block length.
  int k = static_cast<int>(word.size());
  std::vector<MultLocalSystem> chain;
  chain.reserve(static_cast<size_t>(k) + 1);
  chain.push_back(L);
  for (int i = k - 1; i >= 0; --i)
    chain.push_back(act_simple(datum, word[static_cast<size_t>(i)], chain.back()));
  // chain[j] = s_{k-j+1} ... s_k . L, so chain[k - i] = L_{i+1} in word order.
  int count = 0;
  for (int i = 0; i < k; ++i)
    if (chain[static_cast<size_t>(k - 1 - i)].kills(
            datum.simple_coroot(word[static_cast<size_t>(i)])))
      ++count;
  WeylElt w = datum.normalize(word);
  return count == ell_L(datum, w, L);
}

PalindromeParts palindrome_decompose(const RootDatum& datum, const std::vector<int>& word,
                                     const MultLocalSystem& L) {
  require(!word.empty() && word.size() % 2 == 1, Err::NotPalindromic,
          "expression must have odd length");
  std::vector<int> rev(word.rbegin(), word.rend());
  require(rev == word, Err::NotPalindromic, "expression is not palindromic");
  require(is_endo_reduced(datum, word, L), Err::NotPalindromic,
          "expression is not endo-reduced");
  size_t k = word.size() / 2;
  PalindromeParts parts;
  parts.prefix.assign(word.begin(), word.begin() + static_cast<std::ptrdiff_t>(k));
  parts.middle = word[k];
  parts.suffix.assign(word.begin() + static_cast<std::ptrdiff_t>(k) + 1, word.end());

  // u = s_k ... s_1 must be minimal in its block (no L-inversions).
  std::vector<int> u_word(parts.prefix.rbegin(), parts.prefix.rend());
  WeylElt u = datum.normalize(u_word);
  require(ell_L(datum, u, L) == 0, Err::NotPalindromic,
          "reversed prefix is not minimal in its block");
  // The middle letter must be simple in the endoscopic group of u . L.
  MultLocalSystem uL = act(datum, u, L);
  require(uL.simple_in_endo_group(parts.middle), Err::NotPalindromic,
          "middle letter is not endoscopic for the translated character");
  return parts;
}

}  // namespace monhecke
