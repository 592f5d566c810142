#pragma once

// Hermitian matrices over Z[t^{+-1}]: the standard forms
// lambda_{c+,c-} (+) H2^g, exact determinants, evaluation at t = 1,
// z-factorisation, and the integer congruence checks behind the
// crossing-change condition.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zsurf/intmat.hpp"
#include "zsurf/laurent.hpp"

namespace zsurf {

using PolyMat = std::vector<std::vector<LaurentPoly>>;

PolyMat poly_identity(int n);
PolyMat poly_mul(const PolyMat& a, const PolyMat& b);
PolyMat poly_involute_transpose(const PolyMat& a);
bool poly_is_hermitian(const PolyMat& a);

// Fraction-free determinant of a square polynomial matrix (Bareiss, with
// exact division in the Laurent ring).  Empty matrix gives 1.
LaurentPoly poly_det(const PolyMat& a);

class HermMatrix {
public:
  HermMatrix() = default;
  // validates squareness and hermitian symmetry
  explicit HermMatrix(PolyMat entries);

  int size() const { return static_cast<int>(m_.size()); }
  const LaurentPoly& at(int i, int j) const { return m_[i][j]; }
  const PolyMat& entries() const { return m_; }

  friend bool operator==(const HermMatrix& a, const HermMatrix& b) = default;

  LaurentPoly determinant() const { return poly_det(m_); }
  IntMat eval_one() const;

private:
  PolyMat m_;
};

// (z)^{c+} (+) (-z)^{c-} (+) [[0, t-1], [t^{-1}-1, 0]]^{g}
HermMatrix standard_form(int c_plus, int c_minus, int g);

// diag entries eps_i * z followed by g hyperbolic blocks; signs has
// length c with entries +-1 (standard_form with a custom sign pattern).
HermMatrix signed_standard_form(const std::vector<int>& signs, int g);

// P * A * involute(P)^T for a square polynomial matrix P of matching size.
HermMatrix transform(const HermMatrix& a, const PolyMat& p);

struct FactorZResult {
  std::optional<HermMatrix> quotient;
  int bad_row = -1, bad_col = -1;  // first offending entry when not divisible
};
// Entrywise exact division by z = (t-1)(t^{-1}-1).
FactorZResult factor_out_z(const HermMatrix& b);

// diag(1 x c+, -1 x c-)
IntMat diag_signature_matrix(int c_plus, int c_minus);

struct CongruenceResult {
  enum class Kind { Witness, RefutedByInvariant, NoWitnessWithinBound } kind;
  IntMat witness;           // P with P S P^T = T, when kind == Witness
  std::string obstruction;  // which invariant refuted, when refuted
};

// Search for an integral congruence P S P^T = T with |entries of P| <=
// entry_bound, after screening by determinant, signature and diagonal
// parity.  NoWitnessWithinBound is not a proof of non-congruence.
CongruenceResult congruent_over_Z(const IntMat& s, const IntMat& t, int entry_bound);

struct UnknottingCheck {
  std::vector<std::pair<std::string, bool>> checks;
  CongruenceResult congruence{CongruenceResult::Kind::NoWitnessWithinBound, IntMat(), ""};
  bool all_pass() const;
};

// Condition: A is a size c+ + c- nondegenerate hermitian matrix whose
// evaluation at 1 is integrally congruent to diag(1 x c+, -1 x c-).
UnknottingCheck check_unknotting_condition(const HermMatrix& a, int c_plus, int c_minus,
                                           int entry_bound);

}  // namespace zsurf
