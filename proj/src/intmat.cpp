#include "zsurf/intmat.hpp"

#include <algorithm>
#include <stdexcept>

namespace zsurf {

IntMat IntMat::identity(int n) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMat IntMat::diagonal(const std::vector<Int>& d) {
  IntMat m(static_cast<int>(d.size()), static_cast<int>(d.size()));
  for (size_t i = 0; i < d.size(); ++i) m.at(static_cast<int>(i), static_cast<int>(i)) = d[i];
  return m;
}

bool IntMat::is_zero() const {
  return std::all_of(e_.begin(), e_.end(), [](const Int& x) { return x == 0; });
}

bool IntMat::is_identity() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (at(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool IntMat::is_symmetric() const {
  if (!is_square()) return false;
  for (int i = 0; i < rows_; ++i)
    for (int j = i + 1; j < cols_; ++j)
      if (at(i, j) != at(j, i)) return false;
  return true;
}

IntMat IntMat::transpose() const {
  IntMat m(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
  return m;
}

IntMat IntMat::operator-() const {
  IntMat m(*this);
  for (auto& x : m.e_) x = -x;
  return m;
}

IntMat operator+(const IntMat& a, const IntMat& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("IntMat: size mismatch");
  IntMat m(a);
  for (size_t i = 0; i < m.e_.size(); ++i) m.e_[i] += b.e_[i];
  return m;
}

IntMat operator-(const IntMat& a, const IntMat& b) { return a + (-b); }

IntMat operator*(const IntMat& a, const IntMat& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("IntMat: size mismatch");
  IntMat m(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k) {
      const Int& aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols_; ++j) m.at(i, j) += aik * b.at(k, j);
    }
  return m;
}

std::vector<Int> IntMat::apply(const std::vector<Int>& v) const {
  if (static_cast<int>(v.size()) != cols_) throw std::invalid_argument("IntMat: size mismatch");
  std::vector<Int> out(static_cast<size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j) out[i] += at(i, j) * v[j];
  return out;
}

Int IntMat::det() const {
  if (!is_square()) throw std::invalid_argument("det: not square");
  const int n = rows_;
  if (n == 0) return 1;
  IntMat m(*this);
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m.at(k, k) == 0) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          p = i;
          break;
        }
      if (p < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(p, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        Int num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        m.at(i, j) = num / prev;  // Bareiss: exact
      }
    prev = m.at(k, k);
  }
  return sign > 0 ? m.at(n - 1, n - 1) : -m.at(n - 1, n - 1);
}

std::optional<IntMat> IntMat::inverse_unimodular() const {
  if (!is_square()) return std::nullopt;
  Int d = det();
  if (d != 1 && d != -1) return std::nullopt;
  const int n = rows_;
  // adjugate via cofactors; sizes here are small
  IntMat inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMat minor(n - 1, n - 1);
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc) = at(r, c);
          ++cc;
        }
        ++rr;
      }
      Int cof = minor.det();
      if ((i + j) % 2 == 1) cof = -cof;
      inv.at(i, j) = d * cof;
    }
  return inv;
}

int IntMat::rank() const { return smith_normal_form(*this).rank; }

namespace {

void swap_rows(IntMat& m, int a, int b) {
  for (int j = 0; j < m.cols(); ++j) std::swap(m.at(a, j), m.at(b, j));
}
void swap_cols(IntMat& m, int a, int b) {
  for (int i = 0; i < m.rows(); ++i) std::swap(m.at(i, a), m.at(i, b));
}
void add_row(IntMat& m, int dst, int src, const Int& f) {
  for (int j = 0; j < m.cols(); ++j) m.at(dst, j) += f * m.at(src, j);
}
void add_col(IntMat& m, int dst, int src, const Int& f) {
  for (int i = 0; i < m.rows(); ++i) m.at(i, dst) += f * m.at(i, src);
}
void negate_row(IntMat& m, int r) {
  for (int j = 0; j < m.cols(); ++j) m.at(r, j) = -m.at(r, j);
}

}  // namespace

SmithResult smith_normal_form(const IntMat& a) {
  SmithResult res{IntMat::identity(a.rows()), a, IntMat::identity(a.cols()), 0};
  IntMat& d = res.d;
  int t = 0;
  const int bound = std::min(a.rows(), a.cols());
  while (t < bound) {
    // find pivot: smallest nonzero |entry| in the remaining block
    int pi = -1, pj = -1;
    for (int i = t; i < d.rows(); ++i)
      for (int j = t; j < d.cols(); ++j)
        if (d.at(i, j) != 0 &&
            (pi < 0 || cmp(abs(d.at(i, j)), abs(d.at(pi, pj))) < 0)) {
          pi = i;
          pj = j;
        }
    if (pi < 0) break;
    if (pi != t) {
      swap_rows(d, pi, t);
      swap_rows(res.u, pi, t);
    }
    if (pj != t) {
      swap_cols(d, pj, t);
      swap_cols(res.v, pj, t);
    }
    bool clean = true;
    for (int i = t + 1; i < d.rows(); ++i) {
      if (d.at(i, t) == 0) continue;
      Int q = d.at(i, t) / d.at(t, t);
      add_row(d, i, t, -q);
      add_row(res.u, i, t, -q);
      if (d.at(i, t) != 0) clean = false;
    }
    for (int j = t + 1; j < d.cols(); ++j) {
      if (d.at(t, j) == 0) continue;
      Int q = d.at(t, j) / d.at(t, t);
      add_col(d, j, t, -q);
      add_col(res.v, j, t, -q);
      if (d.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;  // re-pivot on a smaller entry
    if (d.at(t, t) < 0) {
      negate_row(d, t);
      negate_row(res.u, t);
    }
    ++t;
  }
  res.rank = t;
  // divisibility chain
  for (int i = 0; i + 1 < t; ++i)
    for (int j = i + 1; j < t; ++j) {
      if (d.at(j, j) % d.at(i, i) == 0) continue;
      // fold entry j into i via the standard gcd trick
      add_col(d, i, j, 1);
      add_col(res.v, i, j, 1);
      // re-run the clearing from column i
      while (true) {
        Int q = d.at(j, i) / d.at(i, i);
        add_row(d, j, i, -q);
        add_row(res.u, j, i, -q);
        if (d.at(j, i) == 0) break;
        swap_rows(d, i, j);
        swap_rows(res.u, i, j);
      }
      Int q = d.at(i, j) / d.at(i, i);
      add_col(d, j, i, -q);
      add_col(res.v, j, i, -q);
      if (d.at(i, i) < 0) {
        negate_row(d, i);
        negate_row(res.u, i);
      }
      if (d.at(j, j) < 0) {
        negate_row(d, j);
        negate_row(res.u, j);
      }
    }
  return res;
}

std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b) {
  if (static_cast<int>(b.size()) != a.rows()) throw std::invalid_argument("solve: size mismatch");
  SmithResult s = smith_normal_form(a);
  std::vector<Int> c = s.u.apply(b);
  std::vector<Int> y(static_cast<size_t>(a.cols()));
  for (int i = 0; i < a.rows(); ++i) {
    if (i < s.rank) {
      if (c[i] % s.d.at(i, i) != 0) return std::nullopt;
      y[i] = c[i] / s.d.at(i, i);
    } else if (c[i] != 0) {
      return std::nullopt;
    }
  }
  return s.v.apply(y);
}

int lattice_rank(const IntMat& a) { return a.rank(); }

std::vector<Int> characteristic_polynomial(const IntMat& s) {
  if (!s.is_square()) throw std::invalid_argument("characteristic_polynomial: not square");
  const int n = s.rows();
  // det(x I - s) computed over Z[x] via LaurentPoly entries (powers >= 0)
  std::vector<std::vector<LaurentPoly>> m(static_cast<size_t>(n),
                                          std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      m[i][j] = LaurentPoly(-s.at(i, j));
      if (i == j) m[i][j] += LaurentPoly::monomial(1, 1);
    }
  // fraction-free elimination mirroring IntMat::det
  LaurentPoly prev = LaurentPoly::one();
  for (int k = 0; k + 1 < n; ++k) {
    // pivots are leading principal minors of xI - s: monic in x, never zero
    if (m[k][k].is_zero()) throw std::logic_error("characteristic_polynomial: zero pivot");
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("characteristic_polynomial: Bareiss division failed");
        m[i][j] = *q;
      }
    prev = m[k][k];
  }
  LaurentPoly det = n == 0 ? LaurentPoly::one() : m[n - 1][n - 1];
  std::vector<Int> out(static_cast<size_t>(n) + 1);
  for (int e = 0; e <= n; ++e) out[e] = det.coeff(e);
  return out;
}

namespace {

using RatVec = std::vector<Rat>;

RatVec rat_rem(const RatVec& a, const RatVec& b) {
  RatVec r = a;
  while (r.size() >= b.size() && !r.empty()) {
    if (r.back() == 0) {
      r.pop_back();
      continue;
    }
    Rat q = r.back() / b.back();
    size_t off = r.size() - b.size();
    for (size_t j = 0; j < b.size(); ++j) r[off + j] -= q * b[j];
    while (!r.empty() && r.back() == 0) r.pop_back();
  }
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

int sign_at_infinity(const RatVec& p, int dir) {
  if (p.empty()) return 0;
  int s = sgn(p.back());
  if (dir < 0 && (p.size() - 1) % 2 == 1) s = -s;
  return s;
}

int sign_at_zero(const RatVec& p) {
  for (const auto& c : p)
    if (c != 0) return sgn(c);
  return 0;
}

int sign_changes(const std::vector<int>& signs) {
  int changes = 0, last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

std::pair<int, int> signature(const IntMat& s) {
  if (!s.is_symmetric()) throw std::invalid_argument("signature: not symmetric");
  std::vector<Int> cp = characteristic_polynomial(s);
  // strip the eigenvalue 0 factors so the Sturm chain counts only nonzero roots
  size_t zeros = 0;
  while (zeros < cp.size() && cp[zeros] == 0) ++zeros;
  RatVec p(cp.begin() + static_cast<long>(zeros), cp.end());
  if (p.size() <= 1) return {0, 0};
  RatVec dp(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) dp[i - 1] = Rat(static_cast<long>(i)) * p[i];
  std::vector<RatVec> chain{p, dp};
  while (chain.back().size() > 1) {
    RatVec r = rat_rem(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  std::vector<int> at_minus, at_zero, at_plus;
  for (const auto& q : chain) {
    at_minus.push_back(sign_at_infinity(q, -1));
    at_zero.push_back(sign_at_zero(q));
    at_plus.push_back(sign_at_infinity(q, +1));
  }
  int pos = sign_changes(at_zero) - sign_changes(at_plus);
  int neg = sign_changes(at_minus) - sign_changes(at_zero);
  return {pos, neg};
}

}  // namespace zsurf
