#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace monhecke {

using Int = boost::multiprecision::cpp_int;

// Element of Z[v, v^-1], stored as (exponent, coefficient) pairs sorted by
// exponent with no zero coefficients. Equality is structural, which makes it
// exact equality in the ring.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(const Int& constant);  // NOLINT: implicit by design
  LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}
  LaurentPoly(int constant) : LaurentPoly(Int(constant)) {}

  // c * v^e
  static LaurentPoly monomial(Int coeff, int exp);
  // v^e
  static LaurentPoly v_pow(int exp) { return monomial(1, exp); }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  const std::vector<std::pair<int, Int>>& terms() const { return terms_; }
  Int coeff(int exp) const;
  int min_exp() const;  // requires nonzero
  int max_exp() const;  // requires nonzero

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly operator-() const;

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }
  bool operator<(const LaurentPoly& o) const { return terms_ < o.terms_; }

  // v -> v^-1
  LaurentPoly bar() const;
  // multiply by v^e
  LaurentPoly shifted(int exp) const;

  // all exponents >= 0 (the zero polynomial qualifies)
  bool is_polynomial() const;
  // all coefficients >= 0
  bool has_nonneg_coeffs() const;
  // invariant under v -> v^-1
  bool is_bar_symmetric() const { return *this == bar(); }

  // Rendering like "v^-2 + 2 + v^2"; parse accepts the same grammar.
  std::string str() const;
  static LaurentPoly parse(const std::string& text);

 private:
  void prune();
  std::vector<std::pair<int, Int>> terms_;
};

}  // namespace monhecke
