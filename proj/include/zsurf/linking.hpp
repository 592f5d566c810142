#pragma once

// Boundary linking form values ell_A([x],[y]) = x^T A^{-1} ybar in
// Q(t)/Z[t^{+-1}], and the standard Blanchfield form of the plumbed
// manifold evaluated on canonical coker elements.

#include <vector>

#include "zsurf/forms.hpp"
#include "zsurf/laurent.hpp"

namespace zsurf {

// An element of Q(t)/Z[t^{+-1}], stored as an unreduced fraction.
// Equality is only ever tested modulo Z[t^{+-1}] via frac_equal.
struct FracValue {
  LaurentPoly num;
  LaurentPoly den = LaurentPoly::one();

  bool is_integral() const;
};

FracValue frac_add(const FracValue& a, const FracValue& b);
FracValue frac_scale(const LaurentPoly& p, const FracValue& a);
FracValue frac_involute(const FracValue& a);
// v == w modulo Z[t^{+-1}]
bool frac_equal(const FracValue& v, const FracValue& w);

// Adjugate of a square polynomial matrix (sizes here stay small).
PolyMat poly_adjugate(const PolyMat& a);

// (i, j) entry of A^{-1} as adj(A)_{ij} / det(A); A must be nondegenerate.
FracValue boundary_form_value(const HermMatrix& a, int i, int j);

// Canonical element a_i x_i + b_i (t-1) x_i + e_j y_j of the standard
// boundary module (Z[t^{+-1}]/(t-1)^2)^c (+) Z_eps^{2g}.
struct StdCokerElem {
  std::vector<Int> a, b;  // length c
  std::vector<Int> e;     // length 2g
};

// Blanchfield value on canonical elements, expanded bilinearly from
// boundary_form_value of the signed standard matrix: linear in the first
// slot, conjugate-linear in the second.
FracValue std_bl_value(const StdCokerElem& u, const StdCokerElem& v,
                       const std::vector<int>& signs, int g);

// Adjugate and determinant of the signed standard matrix, cached per
// (signs, g) since every form-preservation check needs them.
struct StdFormData {
  PolyMat adj;
  LaurentPoly det;
};
const StdFormData& std_form_data(const std::vector<int>& signs, int g);

}  // namespace zsurf
