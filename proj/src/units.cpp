#include "zsurf/units.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace zsurf {

std::string to_string(UnitGroupClass c) {
  switch (c) {
    case UnitGroupClass::Trivial: return "Trivial";
    case UnitGroupClass::Z2: return "Z2";
    case UnitGroupClass::Z4: return "Z4";
    case UnitGroupClass::Infinite: return "Infinite";
  }
  return "?";
}

bool is_unitary(const LaurentPoly& x, const LaurentPoly& delta) {
  if (delta.is_zero()) throw std::invalid_argument("is_unitary: delta must be nonzero");
  return exact_divide(x * x.involute() - LaurentPoly::one(), delta).has_value();
}

QuadElem quad_one(long n) { return {Rat(1), Rat(0), n}; }

QuadElem quad_mul(const QuadElem& x, const QuadElem& y) {
  if (x.n != y.n) throw std::invalid_argument("quad_mul: mixed moduli");
  // (a + bt)(a' + b't) with t^2 = ((2n+1) t - n)/n
  Rat tt_lin(2 * x.n + 1, x.n), tt_const(-x.n, x.n);
  tt_lin.canonicalize();
  tt_const.canonicalize();
  QuadElem r{x.a * y.a + x.b * y.b * tt_const, x.a * y.b + x.b * y.a + x.b * y.b * tt_lin, x.n};
  r.a.canonicalize();
  r.b.canonicalize();
  return r;
}

QuadElem quad_conj(const QuadElem& x) {
  Rat tinv_const(2 * x.n + 1, x.n);
  tinv_const.canonicalize();
  QuadElem r{x.a + x.b * tinv_const, -x.b, x.n};
  r.a.canonicalize();
  return r;
}

QuadElem quad_mul_t(const QuadElem& x, int direction) {
  QuadElem t{Rat(0), Rat(1), x.n};
  if (direction >= 0) return quad_mul(x, t);
  return quad_mul(x, quad_conj(t));  // t^{-1} = conj(t)
}

bool quad_is_unitary(const QuadElem& x) {
  QuadElem p = quad_mul(x, quad_conj(x));
  return p.a == 1 && p.b == 0;
}

QuadElem reduce_quadratic(const LaurentPoly& p, long n) {
  if (n == 0) throw std::invalid_argument("reduce_quadratic: n must be nonzero");
  QuadElem acc{Rat(0), Rat(0), n};
  if (p.is_zero()) return acc;
  // powers of t and t^{-1} in normal form
  QuadElem t{Rat(0), Rat(1), n};
  QuadElem tinv = quad_conj(t);
  QuadElem cur = quad_one(n);
  for (int e = 0; e <= std::max(p.highest_exponent(), 0); ++e) {
    Int coef = p.coeff(e);
    if (coef != 0) {
      acc.a += Rat(coef) * cur.a;
      acc.b += Rat(coef) * cur.b;
    }
    cur = quad_mul(cur, t);
  }
  cur = quad_one(n);
  for (int e = -1; e >= std::min(p.lowest_exponent(), 0); --e) {
    cur = quad_mul(cur, tinv);
    Int coef = p.coeff(e);
    if (coef != 0) {
      acc.a += Rat(coef) * cur.a;
      acc.b += Rat(coef) * cur.b;
    }
  }
  acc.a.canonicalize();
  acc.b.canonicalize();
  return acc;
}

namespace {

// -n = p^k for a prime p, k >= 1; returns k
std::optional<long> prime_power_exponent(long n) {
  if (n >= -1) return std::nullopt;
  long m = -n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    long k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    return m == 1 ? std::optional<long>(k) : std::nullopt;
  }
  return 1;  // m itself is prime
}

}  // namespace

UnitGroupClass classify_unit_group(long n) {
  if (n == -1 || n == 0) return UnitGroupClass::Trivial;
  if (n == 1 || n == 2) return UnitGroupClass::Z2;
  if (auto k = prime_power_exponent(n))
    return *k % 2 == 1 ? UnitGroupClass::Z2 : UnitGroupClass::Z4;
  return UnitGroupClass::Infinite;
}

namespace {

long expected_class_count(UnitGroupClass c) {
  switch (c) {
    case UnitGroupClass::Trivial: return 1;
    case UnitGroupClass::Z2: return 2;
    case UnitGroupClass::Z4: return 4;
    case UnitGroupClass::Infinite: return -1;
  }
  return -1;
}

// All unitary units a + bt with a = A/|n|^s, b = B/|n|^s, |A|,|B| bounded.
// The unitary condition is the quadratic equation
//   n A^2 + (2n+1) A B + n B^2 = n |n|^{2s}.
std::vector<QuadElem> enumerate_units(long n, const UnitSearchBounds& bounds) {
  std::vector<QuadElem> found;
  const Int nn(n);
  Int denom = 1;
  const Int d_abs = abs(Int(n));
  for (int s = 0; s <= bounds.denom_power_bound; ++s, denom *= d_abs) {
    if (s > 0 && d_abs == 1) break;  // no new denominators for |n| = 1
    const Int rhs = nn * denom * denom;
    for (long a_num = -bounds.numerator_bound; a_num <= bounds.numerator_bound; ++a_num) {
      const Int a(a_num);
      // n B^2 + (2n+1) a B + (n a^2 - rhs) = 0
      Int disc = (4 * nn + 1) * a * a + 4 * nn * rhs;
      if (disc < 0) continue;
      Int root;
      mpz_sqrt(root.get_mpz_t(), disc.get_mpz_t());
      if (root * root != disc) continue;
      for (int pm = 0; pm < (root == 0 ? 1 : 2); ++pm) {
        Int num = -(2 * nn + 1) * a + (pm == 0 ? root : -root);
        if (num % (2 * nn) != 0) continue;
        Int b = num / (2 * nn);
        if (abs(b) > bounds.numerator_bound) continue;
        if (s > 0 && a % d_abs == 0 && b % d_abs == 0) continue;  // not reduced
        QuadElem u{Rat(a) / Rat(denom), Rat(b) / Rat(denom), n};
        u.a.canonicalize();
        u.b.canonicalize();
        if (quad_is_unitary(u)) found.push_back(u);
      }
    }
  }
  std::sort(found.begin(), found.end());
  found.erase(std::unique(found.begin(), found.end()), found.end());
  return found;
}

}  // namespace

UnitGroupReport enumerate_unit_classes(long n, const UnitSearchBounds& bounds) {
  UnitGroupReport rep;
  rep.n = n;
  rep.classification = classify_unit_group(n);
  if (n == 0) {
    // Delta_0 = 1: the quotient ring collapses and the class group is trivial
    rep.representatives.push_back(quad_one(1));
    return rep;
  }

  std::vector<QuadElem> units = enumerate_units(n, bounds);
  // partition modulo multiplication by t^{+-k}
  std::map<QuadElem, int> cls;
  int n_classes = 0;
  for (const auto& u : units) {
    if (cls.count(u)) continue;
    const int id = n_classes++;
    QuadElem fwd = u, bwd = u;
    cls[u] = id;
    for (int k = 0; k < bounds.k_bound; ++k) {
      fwd = quad_mul_t(fwd, +1);
      bwd = quad_mul_t(bwd, -1);
      if (!cls.count(fwd)) cls[fwd] = id;
      if (!cls.count(bwd)) cls[bwd] = id;
    }
  }
  // canonical representative per class: fewest t-content first (smallest
  // |b|, then smallest |a|), so the classes of +-1 are represented by +-1
  auto simpler = [](const QuadElem& x, const QuadElem& y) {
    if (int c = cmp(abs(x.b), abs(y.b))) return c < 0;
    if (int c = cmp(abs(x.a), abs(y.a))) return c < 0;
    return x < y;
  };
  rep.representatives.assign(static_cast<size_t>(n_classes), QuadElem{});
  std::vector<bool> seen(static_cast<size_t>(n_classes), false);
  for (const auto& u : units) {
    int id = cls.at(u);
    if (!seen[id] || simpler(u, rep.representatives[id])) {
      rep.representatives[id] = u;
      seen[id] = true;
    }
  }

  // group structure by multiplication-table closure on representatives
  auto class_of = [&](const QuadElem& x) -> int {
    auto it = cls.find(x);
    return it == cls.end() ? -1 : it->second;
  };
  bool closed = true;
  std::vector<std::vector<int>> table(static_cast<size_t>(n_classes),
                                      std::vector<int>(static_cast<size_t>(n_classes), -1));
  for (int i = 0; i < n_classes; ++i)
    for (int j = 0; j < n_classes; ++j) {
      int c = class_of(quad_mul(rep.representatives[i], rep.representatives[j]));
      table[i][j] = c;
      if (c < 0) closed = false;
    }

  const long expected = expected_class_count(rep.classification);
  if (expected > 0) {
    if (n_classes != expected || !closed) rep.bound_exhausted = true;
    if (n_classes == expected && closed) {
      // cyclic of order 4 must contain an order-4 element
      int id_class = class_of(quad_one(n));
      bool has_order4 = false;
      for (int i = 0; i < n_classes; ++i)
        if (table[i][i] != id_class && table[i][i] >= 0) has_order4 = true;
      bool structure_ok = true;
      if (rep.classification == UnitGroupClass::Z4 && !has_order4) structure_ok = false;
      if (rep.classification != UnitGroupClass::Z4 && n_classes == 4 && has_order4)
        structure_ok = false;
      if (rep.classification == UnitGroupClass::Trivial && n_classes != 1) structure_ok = false;
      if (!structure_ok) rep.table_disagrees = true;
    }
  } else {
    // infinite: look for a unit outside the classes of +-1
    int id_class = class_of(quad_one(n));
    QuadElem minus_one{Rat(-1), Rat(0), n};
    int neg_class = class_of(minus_one);
    for (const auto& u : units) {
      int c = class_of(u);
      if (c != id_class && c != neg_class) {
        rep.witness = u;
        break;
      }
    }
    if (!rep.witness) rep.bound_exhausted = true;
  }
  return rep;
}

DiskCount disk_count(long n, int sign, bool presentable) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("disk_count: sign must be +-1");
  if (!presentable) return {DiskCountKind::Zero, 0};
  switch (classify_unit_group(n)) {
    case UnitGroupClass::Trivial: return {DiskCountKind::Finite, 1};
    case UnitGroupClass::Z2: return {DiskCountKind::Finite, 2};
    case UnitGroupClass::Z4: return {DiskCountKind::Finite, 4};
    case UnitGroupClass::Infinite: return {DiskCountKind::Infinite, 0};
  }
  return {DiskCountKind::Zero, 0};
}

std::vector<LaurentPoly> truncated_unitary(int k, long bound) {
  if (k < 1) throw std::invalid_argument("truncated_unitary: k must be >= 1");
  const LaurentPoly delta = t_minus_one_pow(k);
  std::vector<LaurentPoly> out;
  std::vector<long> digits(static_cast<size_t>(k), -bound);
  while (true) {
    LaurentPoly x;
    for (int i = 0; i < k; ++i)
      if (digits[i] != 0) x += LaurentPoly(digits[i]) * t_minus_one_pow(i);
    if (is_unitary(x, delta)) out.push_back(x);
    int pos = 0;
    while (pos < k && digits[pos] == bound) digits[pos++] = -bound;
    if (pos == k) break;
    ++digits[pos];
  }
  return out;
}

}  // namespace zsurf
