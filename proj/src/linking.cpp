#include "zsurf/linking.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace zsurf {

bool FracValue::is_integral() const {
  if (den.is_zero()) throw std::invalid_argument("FracValue: zero denominator");
  return exact_divide(num, den).has_value();
}

FracValue frac_add(const FracValue& a, const FracValue& b) {
  return {a.num * b.den + b.num * a.den, a.den * b.den};
}

FracValue frac_scale(const LaurentPoly& p, const FracValue& a) { return {p * a.num, a.den}; }

FracValue frac_involute(const FracValue& a) { return {a.num.involute(), a.den.involute()}; }

bool frac_equal(const FracValue& v, const FracValue& w) {
  // v - w integral <=> den1*den2 divides num1*den2 - num2*den1
  return FracValue{v.num * w.den - w.num * v.den, v.den * w.den}.is_integral();
}

PolyMat poly_adjugate(const PolyMat& a) {
  const int n = static_cast<int>(a.size());
  PolyMat adj(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      PolyMat minor(static_cast<size_t>(n - 1), std::vector<LaurentPoly>(static_cast<size_t>(n - 1)));
      for (int r = 0, rr = 0; r < n; ++r) {
        if (r == j) continue;
        for (int c = 0, cc = 0; c < n; ++c) {
          if (c == i) continue;
          minor[rr][cc] = a[r][c];
          ++cc;
        }
        ++rr;
      }
      LaurentPoly cof = poly_det(minor);
      adj[i][j] = ((i + j) % 2 == 0) ? cof : -cof;
    }
  return adj;
}

FracValue boundary_form_value(const HermMatrix& a, int i, int j) {
  if (i < 0 || j < 0 || i >= a.size() || j >= a.size())
    throw std::invalid_argument("boundary_form_value: index out of range");
  LaurentPoly det = a.determinant();
  if (det.is_zero()) throw std::invalid_argument("boundary_form_value: degenerate matrix");
  PolyMat adj = poly_adjugate(a.entries());
  return {adj[i][j], det};
}

const StdFormData& std_form_data(const std::vector<int>& signs, int g) {
  static std::map<std::pair<std::vector<int>, int>, StdFormData> cache;
  static std::mutex mutex;
  std::lock_guard lock(mutex);
  auto key = std::make_pair(signs, g);
  auto it = cache.find(key);
  if (it == cache.end()) {
    HermMatrix a = signed_standard_form(signs, g);
    it = cache.emplace(key, StdFormData{poly_adjugate(a.entries()), a.determinant()}).first;
  }
  return it->second;
}

FracValue std_bl_value(const StdCokerElem& u, const StdCokerElem& v,
                       const std::vector<int>& signs, int g) {
  const int c = static_cast<int>(signs.size());
  if (static_cast<int>(u.a.size()) != c || static_cast<int>(u.b.size()) != c ||
      static_cast<int>(v.a.size()) != c || static_cast<int>(v.b.size()) != c ||
      static_cast<int>(u.e.size()) != 2 * g || static_cast<int>(v.e.size()) != 2 * g)
    throw std::invalid_argument("std_bl_value: element does not match context");

  const StdFormData& data = std_form_data(signs, g);
  const LaurentPoly& det = data.det;
  const PolyMat& adj = data.adj;

  // dual coordinates of u over Z[t^{+-1}]: a_i + b_i (t-1) on the x part,
  // the integer e_j on the y part
  auto coords = [&](const StdCokerElem& w) {
    std::vector<LaurentPoly> out(static_cast<size_t>(c + 2 * g));
    for (int i = 0; i < c; ++i)
      out[i] = LaurentPoly(w.a[i]) + LaurentPoly(w.b[i]) * t_minus_one();
    for (int j = 0; j < 2 * g; ++j) out[c + j] = LaurentPoly(w.e[j]);
    return out;
  };
  std::vector<LaurentPoly> cu = coords(u), cv = coords(v);

  LaurentPoly num;
  for (int i = 0; i < c + 2 * g; ++i) {
    if (cu[i].is_zero()) continue;
    for (int j = 0; j < c + 2 * g; ++j) {
      if (cv[j].is_zero() || adj[i][j].is_zero()) continue;
      num += cu[i] * cv[j].involute() * adj[i][j];
    }
  }
  return {num, det};
}

}  // namespace zsurf
