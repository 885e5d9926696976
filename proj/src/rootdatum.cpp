#include "monhecke/rootdatum.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "monhecke/errors.hpp"

namespace monhecke {

namespace {

bool column_nonpos(const ZMat& m, int col) {
  for (int i = 0; i < m.rows; ++i)
    if (m.at(i, col) > 0) return false;
  return true;
}

}  // namespace

RootDatum::RootDatum(GCM gcm, const LatticeSpec& lattice) : gcm_(std::move(gcm)) {
  int n = gcm_.rank();
  require(n >= 1, Err::ParseError, "root datum needs rank >= 1");
  type_ = gcm_.classify();

  switch (lattice.kind) {
    case LatticeKind::SimplyConnected: {
      std::vector<ZVec> cols(static_cast<size_t>(n), ZVec(static_cast<size_t>(n)));
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) cols[static_cast<size_t>(j)][static_cast<size_t>(i)] = gcm_.at(i, j);
      std::vector<int> pivots = independent_columns(cols);
      int d = n - static_cast<int>(pivots.size());
      r_ = n + d;
      // Coroots are standard basis vectors; roots are GCM columns, with one
      // marker coordinate per non-pivot column to keep the roots independent
      // (the standard enlarged realization for a singular GCM).
      std::vector<bool> is_pivot(static_cast<size_t>(n), false);
      for (int p : pivots) is_pivot[static_cast<size_t>(p)] = true;
      int marker = n;
      for (int i = 0; i < n; ++i) {
        ZVec coroot(static_cast<size_t>(r_), 0);
        coroot[static_cast<size_t>(i)] = 1;
        coroots_.push_back(std::move(coroot));
        ZVec root(static_cast<size_t>(r_), 0);
        for (int p = 0; p < n; ++p) root[static_cast<size_t>(p)] = gcm_.at(p, i);
        if (!is_pivot[static_cast<size_t>(i)]) root[static_cast<size_t>(marker++)] = 1;
        roots_.push_back(std::move(root));
      }
      break;
    }
    case LatticeKind::Adjoint: {
      std::vector<ZVec> cols(static_cast<size_t>(n), ZVec(static_cast<size_t>(n)));
      for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) cols[static_cast<size_t>(j)][static_cast<size_t>(i)] = gcm_.at(i, j);
      require(zrank(cols) == n, Err::SingularAdjoint,
              "adjoint lattice requires an invertible GCM (give explicit vectors instead)");
      r_ = n;
      for (int i = 0; i < n; ++i) {
        ZVec root(static_cast<size_t>(n), 0);
        root[static_cast<size_t>(i)] = 1;
        roots_.push_back(std::move(root));
        ZVec coroot(static_cast<size_t>(n), 0);
        for (int j = 0; j < n; ++j) coroot[static_cast<size_t>(j)] = gcm_.at(i, j);
        coroots_.push_back(std::move(coroot));
      }
      break;
    }
    case LatticeKind::Explicit: {
      require(static_cast<int>(lattice.roots.size()) == n &&
                  static_cast<int>(lattice.coroots.size()) == n,
              Err::ParseError, "explicit lattice needs one root and one coroot per index");
      require(!lattice.roots[0].empty(), Err::ParseError, "explicit lattice rank must be >= 1");
      r_ = static_cast<int>(lattice.roots[0].size());
      for (const auto& v : lattice.roots)
        require(static_cast<int>(v.size()) == r_, Err::ParseError, "inconsistent root dimensions");
      for (const auto& v : lattice.coroots)
        require(static_cast<int>(v.size()) == r_, Err::ParseError, "inconsistent coroot dimensions");
      roots_ = lattice.roots;
      coroots_ = lattice.coroots;
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          require(dot(roots_[static_cast<size_t>(i)], coroots_[static_cast<size_t>(j)]) == gcm_.at(j, i),
                  Err::PairingMismatch,
                  "explicit vectors contradict the GCM at (" + std::to_string(i) + "," +
                      std::to_string(j) + ")");
      break;
    }
  }

  require(zrank(roots_) == n, Err::DegenerateLattice,
          "simple roots are linearly dependent; the Weyl action would not be faithful");
  require(zrank(coroots_) == n, Err::DegenerateLattice,
          "simple coroots are linearly dependent; the Weyl action would not be faithful");

  build_generators();
}

void RootDatum::build_generators() {
  int n = gcm_.rank();
  for (int i = 0; i < n; ++i) {
    const ZVec& alpha = roots_[static_cast<size_t>(i)];
    const ZVec& alphav = coroots_[static_cast<size_t>(i)];
    ZMat mc = ZMat::identity(r_);  // lambda - <alpha_i, lambda> alpha_i^vee
    for (int p = 0; p < r_; ++p)
      for (int q = 0; q < r_; ++q)
        mc.at(p, q) -= alphav[static_cast<size_t>(p)] * alpha[static_cast<size_t>(q)];
    gen_cochar_.push_back(std::move(mc));

    ZMat mx = ZMat::identity(r_);  // mu - <mu, alpha_i^vee> alpha_i
    for (int p = 0; p < r_; ++p)
      for (int q = 0; q < r_; ++q)
        mx.at(p, q) -= alpha[static_cast<size_t>(p)] * alphav[static_cast<size_t>(q)];
    gen_char_.push_back(std::move(mx));

    ZMat rc = ZMat::identity(n);  // on root coordinates: c_i -= sum_j a[i][j] c_j
    for (int q = 0; q < n; ++q) rc.at(i, q) -= gcm_.at(i, q);
    gen_rootc_.push_back(std::move(rc));

    ZMat cc = ZMat::identity(n);  // on coroot coordinates: c_i -= sum_j a[j][i] c_j
    for (int q = 0; q < n; ++q) cc.at(i, q) -= gcm_.at(q, i);
    gen_corootc_.push_back(std::move(cc));
  }
}

WeylElt RootDatum::identity() const {
  return WeylElt{{}, ZMat::identity(r_), ZMat::identity(gcm_.rank())};
}

WeylElt RootDatum::simple(int i) const {
  require(i >= 0 && i < gcm_.rank(), Err::ParseError, "simple reflection index out of range");
  return WeylElt{{i}, gen_cochar_[static_cast<size_t>(i)], gen_rootc_[static_cast<size_t>(i)]};
}

// Extract the ShortLex-minimal reduced word of w from the root-coordinate
// matrix of w^{-1}: the first letter of the lex-least reduced word is the
// least left descent, and i is a left descent iff w^{-1} alpha_i < 0.
std::vector<int> RootDatum::peel_canonical(ZMat inv_rootc) const {
  int n = gcm_.rank();
  std::vector<int> word;
  for (;;) {
    int descent = -1;
    for (int i = 0; i < n; ++i)
      if (column_nonpos(inv_rootc, i)) {
        descent = i;
        break;
      }
    if (descent < 0) break;
    word.push_back(descent);
    inv_rootc = inv_rootc.mul(gen_rootc_[static_cast<size_t>(descent)]);
  }
  require(inv_rootc == ZMat::identity(n), Err::Internal, "descent peeling did not terminate at e");
  return word;
}

WeylElt RootDatum::normalize(const std::vector<int>& word) const {
  int n = gcm_.rank();
  for (int i : word)
    require(i >= 0 && i < n, Err::ParseError, "word letter out of range");
  ZMat inv = ZMat::identity(n);
  for (auto it = word.rbegin(); it != word.rend(); ++it)
    inv = inv.mul(gen_rootc_[static_cast<size_t>(*it)]);
  std::vector<int> canon = peel_canonical(std::move(inv));
  WeylElt w{std::move(canon), ZMat::identity(r_), ZMat::identity(n)};
  for (int i : w.word) {
    w.cochar = w.cochar.mul(gen_cochar_[static_cast<size_t>(i)]);
    w.rootc = w.rootc.mul(gen_rootc_[static_cast<size_t>(i)]);
  }
  return w;
}

WeylElt RootDatum::mul(const WeylElt& a, const WeylElt& b) const {
  std::vector<int> word(a.word);
  word.insert(word.end(), b.word.begin(), b.word.end());
  return normalize(word);
}

WeylElt RootDatum::mul_simple(const WeylElt& a, int i) const {
  std::vector<int> word(a.word);
  word.push_back(i);
  return normalize(word);
}

WeylElt RootDatum::inverse(const WeylElt& a) const {
  std::vector<int> word(a.word.rbegin(), a.word.rend());
  return normalize(word);
}

ZVec RootDatum::apply(const WeylElt& w, const ZVec& lambda) const {
  require(static_cast<int>(lambda.size()) == r_, Err::DimensionMismatch,
          "cocharacter has wrong dimension");
  return w.cochar.apply(lambda);
}

ZVec RootDatum::apply_char(const WeylElt& w, const ZVec& mu) const {
  require(static_cast<int>(mu.size()) == r_, Err::DimensionMismatch,
          "character has wrong dimension");
  ZVec out = mu;
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    out = gen_char_[static_cast<size_t>(*it)].apply(out);
  return out;
}

bool RootDatum::is_right_descent(const WeylElt& w, int i) const {
  // l(w s_i) < l(w) iff w alpha_i < 0.
  return column_nonpos(w.rootc, i);
}

bool RootDatum::is_left_descent(const WeylElt& w, int i) const {
  // l(s_i w) < l(w) iff w^{-1} alpha_i < 0 iff (column i of w.rootc, read as a
  // row of the transpose) ... computed via the inverse element.
  ZMat inv = ZMat::identity(gcm_.rank());
  for (auto it = w.word.rbegin(); it != w.word.rend(); ++it)
    inv = inv.mul(gen_rootc_[static_cast<size_t>(*it)]);
  return column_nonpos(inv, i);
}

std::vector<RealRoot> RootDatum::inversions(const WeylElt& w) const {
  int n = gcm_.rank();
  int k = w.length();
  std::vector<RealRoot> out;
  out.reserve(static_cast<size_t>(k));
  // Inv(w) = { u_j . alpha_{s_j} : u_j = s_k ... s_{j+1} } for the reduced
  // word w = s_1 ... s_k.
  ZMat u_char = ZMat::identity(r_);
  ZMat u_cochar = ZMat::identity(r_);
  ZMat u_rc = ZMat::identity(n);
  ZMat u_cc = ZMat::identity(n);
  std::vector<int> u_word;
  for (int j = k - 1; j >= 0; --j) {
    int s = w.word[static_cast<size_t>(j)];
    RealRoot rr;
    rr.root = u_char.apply(roots_[static_cast<size_t>(s)]);
    rr.coroot = u_cochar.apply(coroots_[static_cast<size_t>(s)]);
    ZVec es(static_cast<size_t>(n), 0);
    es[static_cast<size_t>(s)] = 1;
    rr.root_coords = u_rc.apply(es);
    rr.coroot_coords = u_cc.apply(es);
    rr.positive = true;
    require(all_nonneg(rr.root_coords) && all_nonneg(rr.coroot_coords), Err::Internal,
            "inversion of a reduced word must be positive");
    rr.witness_w = u_word;
    rr.witness_s = s;
    out.push_back(std::move(rr));
    // u_{j-1} = u_j s_j: extend the suffix action on the right.
    u_char = u_char.mul(gen_char_[static_cast<size_t>(s)]);
    u_cochar = u_cochar.mul(gen_cochar_[static_cast<size_t>(s)]);
    u_rc = u_rc.mul(gen_rootc_[static_cast<size_t>(s)]);
    u_cc = u_cc.mul(gen_corootc_[static_cast<size_t>(s)]);
    u_word.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool RootDatum::bruhat_leq(const WeylElt& x_in, const WeylElt& y_in) const {
  // Lifting property: for a right descent s of y,
  //   x <= y  iff  (xs <= ys when xs < x) else (x <= ys).
  WeylElt x = x_in, y = y_in;
  for (;;) {
    if (x.length() > y.length()) return false;
    if (y.length() == 0) return x.length() == 0;
    if (x.length() == 0) return true;
    int s = y.word.back();
    y = mul_simple(y, s);
    if (is_right_descent(x, s)) x = mul_simple(x, s);
  }
}

std::vector<WeylElt> RootDatum::enumerate(int length_bound) const {
  require(length_bound != kUnbounded || is_finite_type(), Err::InfiniteGroup,
          "unbounded enumeration requires finite type");
  int n = gcm_.rank();
  std::vector<WeylElt> all;
  std::set<ZMat> seen;
  std::vector<WeylElt> level{identity()};
  seen.insert(level[0].cochar);
  all.push_back(level[0]);
  int depth = 0;
  while (!level.empty() && (length_bound == kUnbounded || depth < length_bound)) {
    std::vector<WeylElt> next;
    for (const auto& w : level)
      for (int i = 0; i < n; ++i) {
        if (is_right_descent(w, i)) continue;
        WeylElt w2 = mul_simple(w, i);
        if (seen.insert(w2.cochar).second) next.push_back(std::move(w2));
      }
    for (auto& w : next) all.push_back(w);
    level = std::move(next);
    ++depth;
  }
  std::sort(all.begin(), all.end());
  return all;
}

PositiveRootsResult RootDatum::positive_real_roots(int length_bound) const {
  require(length_bound != kUnbounded || is_finite_type(), Err::InfiniteGroup,
          "unbounded root enumeration requires finite type");
  int n = gcm_.rank();
  PositiveRootsResult res;
  std::set<ZVec> seen;
  std::vector<RealRoot> level;
  for (int s = 0; s < n; ++s) {
    RealRoot rr = real_root({}, s);
    if (seen.insert(rr.root_coords).second) level.push_back(std::move(rr));
  }
  res.roots = level;
  int depth = 0;
  while (!level.empty() && (length_bound == kUnbounded || depth < length_bound)) {
    std::vector<RealRoot> next;
    for (const auto& beta : level)
      for (int i = 0; i < n; ++i) {
        RealRoot gamma;
        gamma.root = gen_char_[static_cast<size_t>(i)].apply(beta.root);
        gamma.coroot = gen_cochar_[static_cast<size_t>(i)].apply(beta.coroot);
        gamma.root_coords = gen_rootc_[static_cast<size_t>(i)].apply(beta.root_coords);
        gamma.coroot_coords = gen_corootc_[static_cast<size_t>(i)].apply(beta.coroot_coords);
        if (!all_nonneg(gamma.root_coords)) continue;  // only s_i alpha_i turns negative
        gamma.positive = true;
        gamma.witness_w.reserve(beta.witness_w.size() + 1);
        gamma.witness_w.push_back(i);
        gamma.witness_w.insert(gamma.witness_w.end(), beta.witness_w.begin(),
                               beta.witness_w.end());
        gamma.witness_s = beta.witness_s;
        if (seen.insert(gamma.root_coords).second) next.push_back(std::move(gamma));
      }
    for (const auto& rr : next) res.roots.push_back(rr);
    ++depth;
    if (next.empty()) {
      res.complete = true;
      break;
    }
    level = std::move(next);
  }
  if (length_bound == kUnbounded) res.complete = true;
  std::sort(res.roots.begin(), res.roots.end());
  return res;
}

RealRoot RootDatum::real_root(const std::vector<int>& witness_w, int s) const {
  int n = gcm_.rank();
  require(s >= 0 && s < n, Err::ParseError, "simple index out of range");
  RealRoot rr;
  rr.root = roots_[static_cast<size_t>(s)];
  rr.coroot = coroots_[static_cast<size_t>(s)];
  rr.root_coords.assign(static_cast<size_t>(n), 0);
  rr.root_coords[static_cast<size_t>(s)] = 1;
  rr.coroot_coords = rr.root_coords;
  for (auto it = witness_w.rbegin(); it != witness_w.rend(); ++it) {
    size_t i = static_cast<size_t>(*it);
    rr.root = gen_char_[i].apply(rr.root);
    rr.coroot = gen_cochar_[i].apply(rr.coroot);
    rr.root_coords = gen_rootc_[i].apply(rr.root_coords);
    rr.coroot_coords = gen_corootc_[i].apply(rr.coroot_coords);
  }
  bool pos = all_nonneg(rr.root_coords);
  require(pos || all_nonpos(rr.root_coords), Err::Internal,
          "real root coordinates must be all-nonneg or all-nonpos");
  rr.positive = pos;
  rr.witness_w = witness_w;
  rr.witness_s = s;
  return rr;
}

WeylElt RootDatum::reflection(const RealRoot& alpha) const {
  std::vector<int> word(alpha.witness_w);
  word.push_back(alpha.witness_s);
  word.insert(word.end(), alpha.witness_w.rbegin(), alpha.witness_w.rend());
  return normalize(word);
}

}  // namespace monhecke
