#include "zsurf/forms.hpp"

#include <functional>
#include <stdexcept>

namespace zsurf {

PolyMat poly_identity(int n) {
  PolyMat m(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i) m[i][i] = LaurentPoly::one();
  return m;
}

PolyMat poly_mul(const PolyMat& a, const PolyMat& b) {
  const size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  for (const auto& row : a)
    if (row.size() != k) throw std::invalid_argument("poly_mul: size mismatch");
  PolyMat out(n, std::vector<LaurentPoly>(m));
  for (size_t i = 0; i < n; ++i)
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
    }
  return out;
}

PolyMat poly_involute_transpose(const PolyMat& a) {
  const size_t n = a.size(), m = a.empty() ? 0 : a[0].size();
  PolyMat out(m, std::vector<LaurentPoly>(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < m; ++j) out[j][i] = a[i][j].involute();
  return out;
}

bool poly_is_hermitian(const PolyMat& a) {
  const size_t n = a.size();
  for (const auto& row : a)
    if (row.size() != n) return false;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j)
      if (a[j][i] != a[i][j].involute()) return false;
  return true;
}

LaurentPoly poly_det(const PolyMat& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) return LaurentPoly::one();
  PolyMat m = a;
  LaurentPoly prev = LaurentPoly::one();
  int sign = 1;
  for (int k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      int p = -1;
      for (int i = k + 1; i < n; ++i)
        if (!m[i][k].is_zero()) {
          p = i;
          break;
        }
      if (p < 0) return LaurentPoly();
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j) {
        LaurentPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_divide(num, prev);
        if (!q) throw std::logic_error("poly_det: Bareiss division failed");
        m[i][j] = *q;
      }
    prev = m[k][k];
  }
  LaurentPoly det = m[n - 1][n - 1];
  return sign > 0 ? det : -det;
}

HermMatrix::HermMatrix(PolyMat entries) : m_(std::move(entries)) {
  if (!poly_is_hermitian(m_)) throw std::invalid_argument("HermMatrix: not hermitian");
}

IntMat HermMatrix::eval_one() const {
  const int n = size();
  IntMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.at(i, j) = m_[i][j].eval_one();
  return out;
}

HermMatrix signed_standard_form(const std::vector<int>& signs, int g) {
  const int c = static_cast<int>(signs.size());
  const int n = c + 2 * g;
  PolyMat m(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 0; i < c; ++i) {
    if (signs[i] != 1 && signs[i] != -1)
      throw std::invalid_argument("signed_standard_form: signs must be +-1");
    m[i][i] = signs[i] == 1 ? z_poly() : -z_poly();
  }
  for (int k = 0; k < g; ++k) {
    int r = c + 2 * k;
    m[r][r + 1] = t_minus_one();
    m[r + 1][r] = t_minus_one().involute();
  }
  return HermMatrix(std::move(m));
}

HermMatrix standard_form(int c_plus, int c_minus, int g) {
  std::vector<int> signs;
  signs.insert(signs.end(), static_cast<size_t>(c_plus), 1);
  signs.insert(signs.end(), static_cast<size_t>(c_minus), -1);
  return signed_standard_form(signs, g);
}

HermMatrix transform(const HermMatrix& a, const PolyMat& p) {
  if (static_cast<int>(p.size()) != a.size())
    throw std::invalid_argument("transform: size mismatch");
  return HermMatrix(poly_mul(poly_mul(p, a.entries()), poly_involute_transpose(p)));
}

FactorZResult factor_out_z(const HermMatrix& b) {
  const int n = b.size();
  const LaurentPoly z = z_poly();
  PolyMat out(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      auto q = exact_divide(b.at(i, j), z);
      if (!q) return FactorZResult{std::nullopt, i, j};
      out[i][j] = *q;
    }
  return FactorZResult{HermMatrix(std::move(out)), -1, -1};
}

IntMat diag_signature_matrix(int c_plus, int c_minus) {
  std::vector<Int> d;
  d.insert(d.end(), static_cast<size_t>(c_plus), Int(1));
  d.insert(d.end(), static_cast<size_t>(c_minus), Int(-1));
  return IntMat::diagonal(d);
}

namespace {

bool diag_all_even(const IntMat& s) {
  for (int i = 0; i < s.rows(); ++i)
    if (s.at(i, i) % 2 != 0) return false;
  return true;
}

}  // namespace

CongruenceResult congruent_over_Z(const IntMat& s, const IntMat& t, int entry_bound) {
  if (!s.is_square() || !t.is_square() || s.rows() != t.rows())
    throw std::invalid_argument("congruent_over_Z: size mismatch");
  if (!s.is_symmetric() || !t.is_symmetric())
    throw std::invalid_argument("congruent_over_Z: matrices must be symmetric");
  const int n = s.rows();
  if (n == 0) return {CongruenceResult::Kind::Witness, IntMat(0, 0), ""};

  // invariant screens: P S P^T = T with det P = +-1 preserves all of these
  if (s.det() != t.det())
    return {CongruenceResult::Kind::RefutedByInvariant, IntMat(), "determinant"};
  if (signature(s) != signature(t))
    return {CongruenceResult::Kind::RefutedByInvariant, IntMat(), "signature"};
  if (diag_all_even(s) != diag_all_even(t))
    return {CongruenceResult::Kind::RefutedByInvariant, IntMat(), "parity of diagonal"};

  // backtracking over rows of P: row i must satisfy r_i S r_j^T = T_{ij}
  std::vector<std::vector<Int>> rows;
  std::vector<Int> cur(static_cast<size_t>(n));
  IntMat witness(n, n);
  std::function<bool(int)> place = [&](int i) -> bool {
    std::function<bool(int)> fill = [&](int pos) -> bool {
      if (pos == n) {
        // check inner products against T for all previous rows and self
        std::vector<Int> sc(static_cast<size_t>(n));
        for (int a = 0; a < n; ++a)
          for (int b = 0; b < n; ++b) sc[a] += s.at(a, b) * cur[b];
        Int self = 0;
        for (int a = 0; a < n; ++a) self += cur[a] * sc[a];
        if (self != t.at(i, i)) return false;
        for (int j = 0; j < i; ++j) {
          Int cross = 0;
          for (int a = 0; a < n; ++a) cross += rows[j][a] * sc[a];
          if (cross != t.at(i, j)) return false;
        }
        rows.push_back(cur);
        if (place(i + 1)) return true;
        rows.pop_back();
        return false;
      }
      for (long v = -entry_bound; v <= entry_bound; ++v) {
        cur[pos] = v;
        if (fill(pos + 1)) return true;
      }
      return false;
    };
    if (i == n) {
      IntMat p(n, n);
      for (int r = 0; r < n; ++r)
        for (int c = 0; c < n; ++c) p.at(r, c) = rows[r][c];
      Int d = p.det();
      if (d != 1 && d != -1) return false;
      witness = p;
      return true;
    }
    return fill(0);
  };
  if (place(0)) {
    // re-verify the witness before returning it
    if (witness * s * witness.transpose() == t)
      return {CongruenceResult::Kind::Witness, witness, ""};
    throw std::logic_error("congruent_over_Z: witness verification failed");
  }
  return {CongruenceResult::Kind::NoWitnessWithinBound, IntMat(), ""};
}

bool UnknottingCheck::all_pass() const {
  for (const auto& [name, ok] : checks)
    if (!ok) return false;
  return true;
}

UnknottingCheck check_unknotting_condition(const HermMatrix& a, int c_plus, int c_minus,
                                           int entry_bound) {
  UnknottingCheck rep;
  const int c = c_plus + c_minus;
  rep.checks.emplace_back("size equals c_plus + c_minus", a.size() == c);
  rep.checks.emplace_back("hermitian", poly_is_hermitian(a.entries()));
  rep.checks.emplace_back("nondegenerate", !a.determinant().is_zero());
  if (a.size() == c) {
    rep.congruence = congruent_over_Z(a.eval_one(), diag_signature_matrix(c_plus, c_minus),
                                      entry_bound);
    rep.checks.emplace_back("A(1) congruent to I_{c+,c-}",
                            rep.congruence.kind == CongruenceResult::Kind::Witness);
  } else {
    rep.checks.emplace_back("A(1) congruent to I_{c+,c-}", false);
  }
  return rep;
}

}  // namespace zsurf
