#include "monhecke/charmod.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "monhecke/errors.hpp"

namespace monhecke {

ZVec AbGroup::reduce(ZVec x) const {
  require(static_cast<int>(x.size()) == slots(), Err::DimensionMismatch,
          "group element has wrong number of slots");
  for (size_t i = 0; i < torsion.size(); ++i) {
    std::int64_t m = torsion[i];
    x[i] %= m;
    if (x[i] < 0) x[i] += m;
  }
  return x;
}

ZVec AbGroup::add(const ZVec& x, const ZVec& y) const {
  return reduce(monhecke::add(x, y));
}

ZVec AbGroup::neg(const ZVec& x) const { return reduce(monhecke::scale(-1, x)); }

ZVec AbGroup::scale(std::int64_t c, const ZVec& x) const {
  return reduce(monhecke::scale(c, x));
}

std::vector<ZVec> AbGroup::elements() const {
  require(is_finite(), Err::InfiniteGroup, "cannot list elements of an infinite group");
  std::vector<ZVec> out{zero()};
  for (size_t i = 0; i < torsion.size(); ++i) {
    std::vector<ZVec> next;
    for (const auto& e : out)
      for (std::int64_t v = 0; v < torsion[i]; ++v) {
        ZVec e2 = e;
        e2[i] = v;
        next.push_back(std::move(e2));
      }
    out = std::move(next);
  }
  return out;
}

std::string AbGroup::str() const {
  std::ostringstream os;
  bool first = true;
  for (auto m : torsion) {
    if (!first) os << "x";
    os << "Z/" << m;
    first = false;
  }
  if (free_rank > 0) {
    if (!first) os << "x";
    os << "Z^" << free_rank;
    first = false;
  }
  if (first) os << "Z^0";
  return os.str();
}

MultLocalSystem::MultLocalSystem(const RootDatum* datum, AbGroup target,
                                 std::vector<ZVec> values)
    : datum_(datum), target_(std::move(target)), values_(std::move(values)) {
  require(datum_ != nullptr, Err::Internal, "character needs a root datum");
  require(static_cast<int>(values_.size()) == datum_->lattice_rank(), Err::DimensionMismatch,
          "character needs one value per basis cocharacter");
  for (auto& v : values_) v = target_.reduce(v);
}

MultLocalSystem MultLocalSystem::trivial(const RootDatum& datum, AbGroup target) {
  std::vector<ZVec> values(static_cast<size_t>(datum.lattice_rank()), target.zero());
  return MultLocalSystem(&datum, std::move(target), std::move(values));
}

ZVec MultLocalSystem::evaluate(const ZVec& cochar) const {
  require(static_cast<int>(cochar.size()) == datum_->lattice_rank(), Err::DimensionMismatch,
          "cocharacter has wrong dimension");
  ZVec acc = target_.zero();
  for (size_t i = 0; i < values_.size(); ++i)
    if (cochar[i] != 0) acc = target_.add(acc, target_.scale(cochar[i], values_[i]));
  return acc;
}

bool MultLocalSystem::operator==(const MultLocalSystem& o) const {
  return datum_ == o.datum_ && target_ == o.target_ && values_ == o.values_;
}

bool MultLocalSystem::operator<(const MultLocalSystem& o) const {
  if (datum_ != o.datum_) return datum_ < o.datum_;
  if (!(target_ == o.target_)) {
    if (target_.torsion != o.target_.torsion) return target_.torsion < o.target_.torsion;
    return target_.free_rank < o.target_.free_rank;
  }
  return values_ < o.values_;
}

std::string MultLocalSystem::str() const {
  std::ostringstream os;
  os << target_.str() << ":";
  for (size_t i = 0; i < values_.size(); ++i) {
    if (i) os << ";";
    for (size_t j = 0; j < values_[i].size(); ++j) {
      if (j) os << ",";
      os << values_[i][j];
    }
  }
  return os.str();
}

MultLocalSystem act(const RootDatum& datum, const WeylElt& w, const MultLocalSystem& L) {
  WeylElt winv = datum.inverse(w);
  int r = datum.lattice_rank();
  // (w.L)(e_j) = L(w^{-1} e_j) = sum_i Minv[i][j] values[i]
  std::vector<ZVec> values(static_cast<size_t>(r), L.target().zero());
  for (int j = 0; j < r; ++j) {
    ZVec acc = L.target().zero();
    for (int i = 0; i < r; ++i) {
      std::int64_t c = winv.cochar.at(i, j);
      if (c != 0) acc = L.target().add(acc, L.target().scale(c, L.values()[static_cast<size_t>(i)]));
    }
    values[static_cast<size_t>(j)] = std::move(acc);
  }
  return MultLocalSystem(&L.datum(), L.target(), std::move(values));
}

MultLocalSystem act_simple(const RootDatum& datum, int i, const MultLocalSystem& L) {
  return act(datum, datum.simple(i), L);
}

OrbitResult orbit(const MultLocalSystem& L, int bound) {
  const RootDatum& datum = L.datum();
  OrbitResult res;
  std::set<MultLocalSystem> seen{L};
  std::vector<MultLocalSystem> frontier{L};
  res.complete = true;
  while (!frontier.empty()) {
    std::vector<MultLocalSystem> next;
    for (const auto& cur : frontier)
      for (int i = 0; i < datum.rank(); ++i) {
        MultLocalSystem moved = act_simple(datum, i, cur);
        if (seen.count(moved)) continue;
        if (bound != kUnbounded && static_cast<int>(seen.size()) >= bound) {
          res.complete = false;
          res.characters.assign(seen.begin(), seen.end());
          return res;
        }
        seen.insert(moved);
        next.push_back(std::move(moved));
      }
    frontier = std::move(next);
  }
  res.characters.assign(seen.begin(), seen.end());
  return res;
}

EndoRootsResult endoscopic_coroots(const MultLocalSystem& L, int bound) {
  const RootDatum& datum = L.datum();
  PositiveRootsResult pos = datum.positive_real_roots(bound);
  EndoRootsResult res;
  res.complete = pos.complete;
  for (const auto& rr : pos.roots) {
    if (!L.kills(rr.coroot)) continue;
    res.roots.push_back(rr);
    RealRoot neg = rr;
    neg.positive = false;
    neg.root = scale(-1, rr.root);
    neg.coroot = scale(-1, rr.coroot);
    neg.root_coords = scale(-1, rr.root_coords);
    neg.coroot_coords = scale(-1, rr.coroot_coords);
    // witness for -alpha: (w r_s, s) since w s . alpha_s = -w . alpha_s
    neg.witness_w = rr.witness_w;
    neg.witness_w.push_back(rr.witness_s);
    res.roots.push_back(std::move(neg));
  }
  std::sort(res.roots.begin(), res.roots.end());
  return res;
}

bool can_extend_to_levi(const MultLocalSystem& L, const std::vector<int>& J) {
  const RootDatum& datum = L.datum();
  for (int j : J)
    require(j >= 0 && j < datum.rank(), Err::ParseError, "parabolic index out of range");
  require(J.empty() || datum.gcm().submatrix(J).is_finite_type(), Err::NonFiniteParabolic,
          "parabolic subset must be of finite type");
  return std::all_of(J.begin(), J.end(),
                     [&](int j) { return L.kills(datum.simple_coroot(j)); });
}

CoeffHom::CoeffHom(AbGroup source, AbGroup dest, std::vector<ZVec> gen_images)
    : source_(std::move(source)), dest_(std::move(dest)), gen_images_(std::move(gen_images)) {
  require(static_cast<int>(gen_images_.size()) == source_.slots(), Err::DimensionMismatch,
          "need one image per source generator");
  for (auto& v : gen_images_) v = dest_.reduce(v);
  // Torsion compatibility: m_i * image_i = 0 in dest.
  for (size_t i = 0; i < source_.torsion.size(); ++i)
    require(dest_.is_zero_elt(dest_.scale(source_.torsion[i], gen_images_[i])),
            Err::GroupMismatch, "generator image violates the torsion relation");
  injective_ = compute_injective();
}

CoeffHom CoeffHom::identity(const AbGroup& g) {
  std::vector<ZVec> images;
  for (int i = 0; i < g.slots(); ++i) {
    ZVec e = g.zero();
    e[static_cast<size_t>(i)] = 1;
    images.push_back(std::move(e));
  }
  return CoeffHom(g, g, std::move(images));
}

ZVec CoeffHom::apply(const ZVec& x) const {
  require(static_cast<int>(x.size()) == source_.slots(), Err::GroupMismatch,
          "element not in the source group");
  ZVec acc = dest_.zero();
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] != 0) acc = dest_.add(acc, dest_.scale(x[i], gen_images_[i]));
  return acc;
}

CoeffHom CoeffHom::compose(const CoeffHom& other) const {
  require(other.dest_ == source_, Err::GroupMismatch, "composition group mismatch");
  std::vector<ZVec> images;
  images.reserve(other.gen_images_.size());
  for (const auto& img : other.gen_images_) images.push_back(apply(img));
  return CoeffHom(other.source_, dest_, std::move(images));
}

bool CoeffHom::compute_injective() const {
  // phi: Z^a/U -> Z^b/V lifts to F: Z^a -> Z^b. Injective iff every integer
  // solution of F x in V-lattice lies in U. Solutions are the projection of
  // the integer kernel of [F | V].
  int a = source_.slots();
  int b = dest_.slots();
  int vcols = static_cast<int>(dest_.torsion.size());
  std::vector<std::vector<Int>> m(static_cast<size_t>(b),
                                  std::vector<Int>(static_cast<size_t>(a + vcols), 0));
  for (int i = 0; i < b; ++i)
    for (int j = 0; j < a; ++j) m[static_cast<size_t>(i)][static_cast<size_t>(j)] = gen_images_[static_cast<size_t>(j)][static_cast<size_t>(i)];
  for (int k = 0; k < vcols; ++k)
    m[static_cast<size_t>(k)][static_cast<size_t>(a + k)] = dest_.torsion[static_cast<size_t>(k)];
  auto kernel = zkernel(m, a + vcols);
  for (const auto& vec : kernel) {
    // x-part must lie in U: multiples of m_i on torsion slots, 0 on free slots.
    for (int j = 0; j < a; ++j) {
      const Int& xj = vec[static_cast<size_t>(j)];
      if (j < static_cast<int>(source_.torsion.size())) {
        if (xj % source_.torsion[static_cast<size_t>(j)] != 0) return false;
      } else if (xj != 0) {
        return false;
      }
    }
  }
  return true;
}

MultLocalSystem change_coefficients(const MultLocalSystem& L, const CoeffHom& h) {
  require(h.source() == L.target(), Err::GroupMismatch,
          "coefficient hom source must match the character target");
  std::vector<ZVec> values;
  values.reserve(L.values().size());
  for (const auto& v : L.values()) values.push_back(h.apply(v));
  return MultLocalSystem(&L.datum(), h.dest(), std::move(values));
}

}  // namespace monhecke
