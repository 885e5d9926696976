#include "monhecke/coxsys.hpp"

#include <algorithm>
#include <map>

#include "monhecke/errors.hpp"

namespace monhecke {

CoxeterSystem::CoxeterSystem(const RootDatum& datum, const EndoDatum& endo)
    : datum_(&datum), endo_(&endo) {
  require(endo.complete, Err::InfiniteGroup,
          "Coxeter system requires a complete endoscopic datum");
  std::vector<WeylElt> elems = endo_weyl_group(datum, endo);
  // Sort by ell_L, then by the ambient canonical word; gives identity first
  // and a deterministic indexing.
  std::vector<std::pair<int, WeylElt>> keyed;
  keyed.reserve(elems.size());
  for (auto& w : elems) {
    int l = ell_L(datum, w, endo.L);
    keyed.emplace_back(l, std::move(w));
  }
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first < b.first;
    return a.second < b.second;
  });
  std::map<WeylElt, int> index;
  for (auto& [l, w] : keyed) {
    index.emplace(w, static_cast<int>(elements_.size()));
    length_.push_back(l);
    elements_.push_back(std::move(w));
  }

  int n = num_gens();
  int sz = size();
  left_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(sz), -1));
  right_.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(sz), -1));
  inverse_.assign(static_cast<size_t>(sz), -1);
  for (int i = 0; i < sz; ++i) {
    for (int g = 0; g < n; ++g) {
      const WeylElt& t = endo_->gens[static_cast<size_t>(g)].refl;
      auto lit = index.find(datum.mul(t, elements_[static_cast<size_t>(i)]));
      auto rit = index.find(datum.mul(elements_[static_cast<size_t>(i)], t));
      require(lit != index.end() && rit != index.end(), Err::Internal,
              "endoscopic subgroup is not closed under its generators");
      left_[static_cast<size_t>(g)][static_cast<size_t>(i)] = lit->second;
      right_[static_cast<size_t>(g)][static_cast<size_t>(i)] = rit->second;
      require(std::abs(length_[static_cast<size_t>(lit->second)] - length_[static_cast<size_t>(i)]) == 1,
              Err::Internal, "ell_L must change by one under a generator");
    }
    auto iit = index.find(datum.inverse(elements_[static_cast<size_t>(i)]));
    require(iit != index.end(), Err::Internal, "endoscopic subgroup not closed under inverse");
    inverse_[static_cast<size_t>(i)] = iit->second;
  }

  // Canonical ShortLex words over the generators, by greedy least left
  // descent.
  words_.assign(static_cast<size_t>(sz), {});
  for (int i = 0; i < sz; ++i) {
    std::vector<int> word;
    int cur = i;
    while (length_[static_cast<size_t>(cur)] > 0) {
      int g = 0;
      while (g < n && !is_left_descent(g, cur)) ++g;
      require(g < n, Err::Internal, "element of positive ell_L has no left descent");
      word.push_back(g);
      cur = left_mul(g, cur);
    }
    require(static_cast<int>(word.size()) == length_[static_cast<size_t>(i)], Err::Internal,
            "canonical endo word length must equal ell_L");
    words_[static_cast<size_t>(i)] = std::move(word);
  }

  order_.resize(static_cast<size_t>(sz));
  for (int i = 0; i < sz; ++i) order_[static_cast<size_t>(i)] = i;
  std::sort(order_.begin(), order_.end(), [this](int a, int b) {
    if (length_[static_cast<size_t>(a)] != length_[static_cast<size_t>(b)])
      return length_[static_cast<size_t>(a)] < length_[static_cast<size_t>(b)];
    return words_[static_cast<size_t>(a)] < words_[static_cast<size_t>(b)];
  });
}

int CoxeterSystem::index_of(const WeylElt& w) const {
  for (int i = 0; i < size(); ++i)
    if (elements_[static_cast<size_t>(i)] == w) return i;
  fail(Err::NotInBlock, "element does not lie in the endoscopic Weyl group");
}

int CoxeterSystem::element_of_word(const std::vector<int>& gen_word) const {
  int cur = 0;
  for (int g : gen_word) {
    require(g >= 0 && g < num_gens(), Err::ParseError, "generator index out of range");
    cur = right_mul(cur, g);
  }
  return cur;
}

bool CoxeterSystem::bruhat_leq(int x, int y) const {
  for (;;) {
    if (length(x) > length(y)) return false;
    if (length(y) == 0) return length(x) == 0;
    if (length(x) == 0) return true;
    int g = words_[static_cast<size_t>(y)].back();
    // words are built from left descents; the last letter of the canonical
    // word read as written gives w = g_1 ... g_k, so g_k is a right descent.
    y = right_mul(y, g);
    if (is_right_descent(x, g)) x = right_mul(x, g);
  }
}

}  // namespace monhecke
