#include "monhecke/laurent.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "monhecke/errors.hpp"

namespace monhecke {

LaurentPoly::LaurentPoly(const Int& constant) {
  if (constant != 0) terms_.emplace_back(0, constant);
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
  LaurentPoly p;
  if (coeff != 0) p.terms_.emplace_back(exp, std::move(coeff));
  return p;
}

bool LaurentPoly::is_one() const {
  return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
}

Int LaurentPoly::coeff(int exp) const {
  auto it = std::lower_bound(
      terms_.begin(), terms_.end(), exp,
      [](const std::pair<int, Int>& t, int e) { return t.first < e; });
  if (it != terms_.end() && it->first == exp) return it->second;
  return Int(0);
}

int LaurentPoly::min_exp() const {
  require(!terms_.empty(), Err::Internal, "min_exp of zero polynomial");
  return terms_.front().first;
}

int LaurentPoly::max_exp() const {
  require(!terms_.empty(), Err::Internal, "max_exp of zero polynomial");
  return terms_.back().first;
}

void LaurentPoly::prune() {
  terms_.erase(std::remove_if(terms_.begin(), terms_.end(),
                              [](const auto& t) { return t.second == 0; }),
               terms_.end());
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  std::vector<std::pair<int, Int>> out;
  out.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() ||
        (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
      out.push_back(terms_[i++]);
    } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
      out.push_back(o.terms_[j++]);
    } else {
      Int c = terms_[i].second + o.terms_[j].second;
      if (c != 0) out.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) { return *this += -o; }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p(*this);
  for (auto& t : p.terms_) t.second = -t.second;
  return p;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  // Convolution accumulated in a dense window; spans here are tiny.
  int lo = a.min_exp() + b.min_exp();
  int hi = a.max_exp() + b.max_exp();
  std::vector<Int> acc(static_cast<size_t>(hi - lo + 1));
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) acc[static_cast<size_t>(ea + eb - lo)] += ca * cb;
  for (int e = lo; e <= hi; ++e) {
    Int& c = acc[static_cast<size_t>(e - lo)];
    if (c != 0) out.terms_.emplace_back(e, std::move(c));
  }
  return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  *this = *this * o;
  return *this;
}

LaurentPoly LaurentPoly::bar() const {
  LaurentPoly p;
  p.terms_.reserve(terms_.size());
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it)
    p.terms_.emplace_back(-it->first, it->second);
  return p;
}

LaurentPoly LaurentPoly::shifted(int exp) const {
  LaurentPoly p(*this);
  for (auto& t : p.terms_) t.first += exp;
  return p;
}

bool LaurentPoly::is_polynomial() const {
  return terms_.empty() || terms_.front().first >= 0;
}

bool LaurentPoly::has_nonneg_coeffs() const {
  return std::all_of(terms_.begin(), terms_.end(),
                     [](const auto& t) { return t.second >= 0; });
}

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Int a = c;
    if (first) {
      if (a < 0) {
        os << "-";
        a = -a;
      }
    } else {
      os << (a < 0 ? " - " : " + ");
      if (a < 0) a = -a;
    }
    first = false;
    if (e == 0) {
      os << a.str();
    } else {
      if (a != 1) os << a.str() << "*";
      os << "v";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

namespace {

struct Cursor {
  const std::string& s;
  size_t i = 0;
  void skip_ws() {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
  }
  bool eof() {
    skip_ws();
    return i >= s.size();
  }
  char peek() {
    skip_ws();
    return i < s.size() ? s[i] : '\0';
  }
};

long long parse_integer(Cursor& c) {
  c.skip_ws();
  size_t start = c.i;
  if (c.i < c.s.size() && (c.s[c.i] == '+' || c.s[c.i] == '-')) ++c.i;
  size_t digits = c.i;
  while (c.i < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.i]))) ++c.i;
  require(c.i > digits, Err::ParseError,
          "expected integer at position " + std::to_string(start) + " in polynomial");
  return std::stoll(c.s.substr(start, c.i - start));
}

}  // namespace

LaurentPoly LaurentPoly::parse(const std::string& text) {
  Cursor c{text};
  LaurentPoly out;
  bool any = false;
  while (!c.eof()) {
    int sign = 1;
    char p = c.peek();
    if (p == '+' || p == '-') {
      sign = (p == '-') ? -1 : 1;
      ++c.i;
    } else {
      require(!any, Err::ParseError, "expected '+' or '-' between terms");
    }
    any = true;
    Int coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
      coeff = parse_integer(c);
      saw_coeff = true;
    }
    int exp = 0;
    c.skip_ws();
    if (c.i < c.s.size() && (c.s[c.i] == '*' || c.s[c.i] == 'v')) {
      if (c.s[c.i] == '*') {
        ++c.i;
        c.skip_ws();
      }
      require(c.i < c.s.size() && c.s[c.i] == 'v', Err::ParseError, "expected 'v'");
      ++c.i;
      c.skip_ws();
      if (c.i < c.s.size() && c.s[c.i] == '^') {
        ++c.i;
        exp = static_cast<int>(parse_integer(c));
      } else {
        exp = 1;
      }
    } else {
      require(saw_coeff, Err::ParseError, "empty term in polynomial");
    }
    out += monomial(sign * coeff, exp);
  }
  require(any, Err::ParseError, "empty polynomial text (use \"0\")");
  return out;
}

const char* err_name(Err kind) {
  switch (kind) {
    case Err::ParseError: return "ParseError";
    case Err::DimensionMismatch: return "DimensionMismatch";
    case Err::PairingMismatch: return "PairingMismatch";
    case Err::SingularAdjoint: return "SingularAdjoint";
    case Err::DegenerateLattice: return "DegenerateLattice";
    case Err::InfiniteGroup: return "InfiniteGroup";
    case Err::InfiniteOrbit: return "InfiniteOrbit";
    case Err::OrbitTruncated: return "OrbitTruncated";
    case Err::NonFiniteParabolic: return "NonFiniteParabolic";
    case Err::GroupMismatch: return "GroupMismatch";
    case Err::NotAReflection: return "NotAReflection";
    case Err::NotInBlock: return "NotInBlock";
    case Err::NotPalindromic: return "NotPalindromic";
    case Err::CompositionMismatch: return "CompositionMismatch";
    case Err::SpaceMismatch: return "SpaceMismatch";
    case Err::UnknownSuite: return "UnknownSuite";
    case Err::CorruptCache: return "CorruptCache";
    case Err::Internal: return "Internal";
  }
  return "Unknown";
}

}  // namespace monhecke
