#include "zsurf/laurent.hpp"

#include <algorithm>
#include <stdexcept>

namespace zsurf {

LaurentPoly::LaurentPoly(const Int& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(int lowest, std::vector<Int> coeffs)
    : lowest_(lowest), coeffs_(std::move(coeffs)) {
  trim();
}

LaurentPoly LaurentPoly::monomial(const Int& c, int k) {
  return LaurentPoly(k, {c});
}

void LaurentPoly::trim() {
  size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    lowest_ = 0;
    return;
  }
  size_t tail = coeffs_.size();
  while (tail > lead && coeffs_[tail - 1] == 0) --tail;
  if (lead > 0 || tail < coeffs_.size()) {
    coeffs_ = std::vector<Int>(coeffs_.begin() + lead, coeffs_.begin() + tail);
    lowest_ += static_cast<int>(lead);
  }
}

bool LaurentPoly::is_one() const {
  return coeffs_.size() == 1 && lowest_ == 0 && coeffs_[0] == 1;
}

bool LaurentPoly::is_unit() const {
  return coeffs_.size() == 1 && (coeffs_[0] == 1 || coeffs_[0] == -1);
}

int LaurentPoly::highest_exponent() const {
  if (is_zero()) return 0;
  return lowest_ + static_cast<int>(coeffs_.size()) - 1;
}

int LaurentPoly::degree_spread() const {
  return is_zero() ? 0 : static_cast<int>(coeffs_.size()) - 1;
}

Int LaurentPoly::coeff(int k) const {
  if (is_zero() || k < lowest_ || k > highest_exponent()) return 0;
  return coeffs_[k - lowest_];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r(*this);
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  if (rhs.is_zero()) return *this;
  if (is_zero()) return *this = rhs;
  int lo = std::min(lowest_, rhs.lowest_);
  int hi = std::max(highest_exponent(), rhs.highest_exponent());
  std::vector<Int> out(static_cast<size_t>(hi - lo + 1));
  for (size_t i = 0; i < coeffs_.size(); ++i) out[lowest_ - lo + i] += coeffs_[i];
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) out[rhs.lowest_ - lo + i] += rhs.coeffs_[i];
  lowest_ = lo;
  coeffs_ = std::move(out);
  trim();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) { return *this += -rhs; }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.is_zero() || b.is_zero()) return LaurentPoly();
  std::vector<Int> out(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return LaurentPoly(a.lowest_ + b.lowest_, std::move(out));
}

LaurentPoly LaurentPoly::involute() const {
  if (is_zero()) return LaurentPoly();
  std::vector<Int> rev(coeffs_.rbegin(), coeffs_.rend());
  return LaurentPoly(-highest_exponent(), std::move(rev));
}

Int LaurentPoly::eval_one() const {
  Int s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  if (is_zero()) return LaurentPoly();
  return LaurentPoly(lowest_ + k, coeffs_);
}

size_t LaurentPoly::hash() const {
  size_t h = static_cast<size_t>(lowest_) * 1000003u;
  for (const auto& c : coeffs_) {
    h = h * 31 + mpz_get_ui(c.get_mpz_t());
    h ^= h >> 17;
  }
  return h;
}

namespace {

// Ordinary-polynomial long division over Q; returns quotient iff the
// remainder vanishes.  Inputs are the coefficient vectors (low to high).
std::optional<std::vector<Rat>> rat_divide(const std::vector<Int>& num,
                                           const std::vector<Int>& den) {
  std::vector<Rat> rem(num.begin(), num.end());
  const size_t dn = den.size();
  if (rem.size() < dn) return std::nullopt;
  std::vector<Rat> quot(rem.size() - dn + 1);
  Rat lead(den.back());
  for (size_t k = quot.size(); k-- > 0;) {
    Rat q = rem[k + dn - 1] / lead;
    q.canonicalize();
    quot[k] = q;
    if (q != 0)
      for (size_t j = 0; j < dn; ++j) rem[k + j] -= q * Rat(den[j]);
  }
  for (size_t j = 0; j + 1 < dn; ++j)
    if (rem[j] != 0) return std::nullopt;
  return quot;
}

}  // namespace

std::optional<LaurentPoly> exact_divide(const LaurentPoly& p, const LaurentPoly& d) {
  if (d.is_zero()) throw std::invalid_argument("exact_divide: division by zero");
  if (p.is_zero()) return LaurentPoly();
  auto quot = rat_divide(p.coefficients(), d.coefficients());
  if (!quot) return std::nullopt;
  std::vector<Int> out(quot->size());
  for (size_t i = 0; i < quot->size(); ++i) {
    if ((*quot)[i].get_den() != 1) return std::nullopt;
    out[i] = (*quot)[i].get_num();
  }
  return LaurentPoly(p.lowest_exponent() - d.lowest_exponent(), std::move(out));
}

LaurentPoly twist_alexander(long n) {
  return LaurentPoly(-1, {Int(-n), Int(2 * n + 1), Int(-n)});
}

LaurentPoly z_poly() { return LaurentPoly(-1, {Int(-1), Int(2), Int(-1)}); }

LaurentPoly t_minus_one() { return LaurentPoly(0, {Int(-1), Int(1)}); }

LaurentPoly t_minus_one_pow(int k) {
  LaurentPoly r = LaurentPoly::one();
  for (int i = 0; i < k; ++i) r = r * t_minus_one();
  return r;
}

LaurentPoly normalize_unit(const LaurentPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("normalize_unit: zero polynomial");
  std::vector<Int> c = p.coefficients();
  if (c.front() < 0)
    for (auto& x : c) x = -x;
  return LaurentPoly(0, std::move(c));
}

namespace {

Int content(const std::vector<Int>& c) {
  Int g = 0;
  for (const auto& x : c) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

std::vector<Int> divide_out(const std::vector<Int>& c, const Int& g) {
  std::vector<Int> r(c.size());
  for (size_t i = 0; i < c.size(); ++i) r[i] = c[i] / g;
  return r;
}

void trim_back(std::vector<Int>& v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
}

// pseudo-remainder: repeatedly r <- lc(b) r - lc(r) b x^{deg r - deg b}
std::vector<Int> pseudo_rem(std::vector<Int> r, const std::vector<Int>& b) {
  const Int lead = b.back();
  while (r.size() >= b.size()) {
    Int top = r.back();
    for (auto& x : r) x *= lead;
    const size_t shift = r.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) r[shift + j] -= top * b[j];
    trim_back(r);
  }
  return r;
}

// Primitive pseudo-remainder sequence on ordinary integer polynomials.
std::vector<Int> primitive_prs_gcd(std::vector<Int> a, std::vector<Int> b) {
  if (a.size() < b.size()) std::swap(a, b);
  while (!b.empty()) {
    std::vector<Int> r = pseudo_rem(a, b);
    a = std::move(b);
    if (r.empty()) {
      b.clear();
    } else {
      b = divide_out(r, content(r));
    }
  }
  return a;
}

}  // namespace

LaurentPoly laurent_gcd(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() && q.is_zero())
    throw std::invalid_argument("laurent_gcd: both arguments zero");
  if (p.is_zero()) return normalize_unit(q);
  if (q.is_zero()) return normalize_unit(p);
  Int cp = content(p.coefficients());
  Int cq = content(q.coefficients());
  Int cg;
  mpz_gcd(cg.get_mpz_t(), cp.get_mpz_t(), cq.get_mpz_t());
  std::vector<Int> g =
      primitive_prs_gcd(divide_out(p.coefficients(), cp), divide_out(q.coefficients(), cq));
  Int gc = content(g);
  g = divide_out(g, gc);
  for (auto& x : g) x *= cg;
  return normalize_unit(LaurentPoly(0, std::move(g)));
}

bool associates(const LaurentPoly& p, const LaurentPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return normalize_unit(p) == normalize_unit(q);
}

std::vector<Int> truncate_in_u(const LaurentPoly& p, int k) {
  std::vector<Int> out(static_cast<size_t>(k));
  if (p.is_zero()) return out;

  auto mul_trunc = [k](const std::vector<Int>& a, const std::vector<Int>& b) {
    std::vector<Int> r(static_cast<size_t>(k));
    for (int i = 0; i < k; ++i)
      for (int j = 0; i + j < k; ++j) r[i + j] += a[i] * b[j];
    return r;
  };

  std::vector<Int> t_pos(static_cast<size_t>(k)), t_neg(static_cast<size_t>(k));
  t_pos[0] = 1;
  if (k > 1) t_pos[1] = 1;  // t = 1 + u
  for (int i = 0; i < k; ++i) t_neg[i] = (i % 2 == 0) ? 1 : -1;  // t^{-1} = 1 - u + u^2 - ...

  // power table around exponent 0
  const int lo = p.lowest_exponent();
  const int hi = p.highest_exponent();
  std::vector<Int> cur(static_cast<size_t>(k));
  cur[0] = 1;
  for (int e = 0; e <= std::max(hi, 0); ++e) {
    if (e >= lo && e <= hi && p.coeff(e) != 0)
      for (int i = 0; i < k; ++i) out[i] += p.coeff(e) * cur[i];
    cur = mul_trunc(cur, t_pos);
  }
  cur.assign(static_cast<size_t>(k), 0);
  cur[0] = 1;
  for (int e = -1; e >= std::min(lo, 0); --e) {
    cur = mul_trunc(cur, t_neg);
    if (e >= lo && e <= hi && p.coeff(e) != 0)
      for (int i = 0; i < k; ++i) out[i] += p.coeff(e) * cur[i];
  }
  return out;
}

}  // namespace zsurf
