#pragma once

// Exact arithmetic in the Laurent ring Z[t^{+-1}] with the involution
// t |-> t^{-1}.  Coefficients are GMP integers; a polynomial is stored as
// a trimmed coefficient vector together with its lowest exponent, so the
// zero polynomial is the empty vector with lowest exponent 0.

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace zsurf {

using Int = mpz_class;
using Rat = mpq_class;

class LaurentPoly {
public:
  LaurentPoly() = default;
  explicit LaurentPoly(long constant) : LaurentPoly(Int(constant)) {}
  explicit LaurentPoly(const Int& constant);
  // coefficient of t^{lowest+i} sits at coeffs[i]; trailing/leading zeros
  // are trimmed on construction.
  LaurentPoly(int lowest, std::vector<Int> coeffs);

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly one() { return LaurentPoly(1); }
  // c * t^k
  static LaurentPoly monomial(const Int& c, int k);

  bool is_zero() const { return coeffs_.empty(); }
  bool is_one() const;
  // true iff p = +-t^k
  bool is_unit() const;

  int lowest_exponent() const { return lowest_; }
  int highest_exponent() const;
  // highest - lowest for nonzero p, 0 for p = 0
  int degree_spread() const;
  const std::vector<Int>& coefficients() const { return coeffs_; }
  // coefficient of t^k (0 outside the stored range)
  Int coeff(int k) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  // p(t^{-1})
  LaurentPoly involute() const;
  // sum of coefficients, i.e. p(1)
  Int eval_one() const;
  // multiply by t^k
  LaurentPoly shifted(int k) const;

  size_t hash() const;

private:
  void trim();

  int lowest_ = 0;
  std::vector<Int> coeffs_;
};

// Exact quotient p/d in Z[t^{+-1}], or nullopt when d does not divide p.
// d = 0 is a precondition violation and throws.
std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& d);

// Delta_n = -n t + (2n+1) - n t^{-1}, the twist-knot Alexander polynomial.
LaurentPoly twist_alexander(long n);

// z = (t-1)(t^{-1}-1) = 2 - t - t^{-1}
LaurentPoly z_poly();
// t - 1
LaurentPoly t_minus_one();
// (t-1)^k for k >= 0
LaurentPoly t_minus_one_pow(int k);

// Canonical associate: multiply by +-t^k so the lowest exponent is 0 and
// the lowest coefficient is positive.  Rejects the zero polynomial.
LaurentPoly normalize_unit(const LaurentPoly& p);

// A gcd in the UFD Z[t^{+-1}], returned in normalize_unit form.  Computed
// as gcd of integer contents times a primitive-part gcd (Gauss's lemma).
// Both arguments zero is a precondition violation.
LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q);

// p == q up to multiplication by a unit +-t^k
bool associates(const LaurentPoly& p, const LaurentPoly& q);

// Coefficients of p written in powers of u = t-1, truncated below u^k.
// t^{-1} expands as 1 - u + u^2 - ... in the truncated ring.
std::vector<Int> truncate_in_u(const LaurentPoly& p, int k);

}  // namespace zsurf
