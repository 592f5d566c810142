#include "zsurf/classify.hpp"

#include <stdexcept>

namespace zsurf {

bool StandardnessReport::all_pass() const {
  for (const auto& [name, ok] : invariant_checks)
    if (!ok) return false;
  return !witness_verified || *witness_verified;
}

StandardnessReport standardness_report(const HermMatrix& lambda, int c_plus, int c_minus, int g,
                                       const std::optional<PolyMat>& witness) {
  StandardnessReport rep;
  const int c = c_plus + c_minus;
  const int n = 2 * g + c;
  rep.invariant_checks.emplace_back("size equals 2g + c", lambda.size() == n);
  rep.invariant_checks.emplace_back("hermitian", poly_is_hermitian(lambda.entries()));

  LaurentPoly det = lambda.determinant();
  bool det_ok = !det.is_zero() && associates(det, t_minus_one_pow(2 * (c + g)));
  rep.invariant_checks.emplace_back("determinant is (t-1)^{2(c+g)} up to units", det_ok);

  // closed ambient S^4 / D^4 case: lambda(1) must vanish outright
  rep.invariant_checks.emplace_back("evaluation at 1 is the zero matrix",
                                    lambda.size() == n && lambda.eval_one().is_zero());

  if (witness) {
    bool ok = false;
    if (static_cast<int>(witness->size()) == lambda.size())
      ok = transform(lambda, *witness) == standard_form(c_plus, c_minus, g);
    rep.witness_verified = ok;
  }
  return rep;
}

// the counts depend on the signature only; g is part of the call shape
SurfaceCountResult surface_count(int c_plus, int c_minus, [[maybe_unused]] int g,
                                 bool standard_lambda) {
  if (standard_lambda)
    return {SurfaceCountResult::Kind::Exact, 1,
            "standard exterior form: the surface is equivalent to the standard one"};
  if ((c_plus == 1 && c_minus == 0) || (c_plus == 0 && c_minus == 1))
    return {SurfaceCountResult::Kind::Exact, 1,
            "single double point: the exterior form determines the surface"};
  if (c_plus == 1 && c_minus == 1)
    return {SurfaceCountResult::Kind::UpperBound, 2, "c+ = c- = 1: at most two classes"};
  if (c_plus == 0 || c_minus == 0) {
    const int c = c_plus + c_minus;
    long bound = 1;
    for (int i = 1; i <= c; ++i) bound *= 2 * i;  // 2^c c!
    return {SurfaceCountResult::Kind::UpperBound, bound,
            "definite signature: at most 2^c c! classes"};
  }
  return {SurfaceCountResult::Kind::Unknown, 0,
          "indefinite signature: the orthogonal group is infinite and no bound is proven"};
}

long quotient_size_1_0(long k_bound) {
  if (k_bound < 1) throw std::invalid_argument("quotient_size_1_0: bound must be >= 1");
  // Aut of the c = 1, g = 0 boundary module = unitary units of
  // Z[t^{+-1}]/(t-1)^2; the realized subgroup is {t^k}, i.e. the units
  // congruent to 1 + k(t-1).
  std::vector<LaurentPoly> units = truncated_unitary(2, k_bound);
  std::vector<LaurentPoly> reps;
  for (const auto& u : units) {
    bool realized_equivalent = false;
    for (const auto& r : reps) {
      // u ~ r iff u r^{-1} = t^k; units here satisfy r^{-1} = involute(r),
      // and t^k truncates to 1 + k(t-1)
      std::vector<Int> tr = truncate_in_u(u * r.involute(), 2);
      if (tr[0] == 1) {
        realized_equivalent = true;
        break;
      }
    }
    if (!realized_equivalent) reps.push_back(u);
  }
  return static_cast<long>(reps.size());
}

bool UnknottingReport::all_pass() const {
  if (factorization_ok && !*factorization_ok) return false;
  return condition.all_pass();
}

UnknottingReport unknotting_report(const HermMatrix& a, int c_plus, int c_minus, int entry_bound) {
  UnknottingReport rep;
  rep.condition = check_unknotting_condition(a, c_plus, c_minus, entry_bound);
  rep.notes = {
      "verified algebraically: the size/hermitian/nondegeneracy/congruence condition on A",
      "follows by cited equivalences, not computed: existence of the immersed disk, the "
      "crossing-change sequence, and the embedded disk in the blown-up manifold"};
  return rep;
}

UnknottingReport unknotting_report_from_b(const HermMatrix& b, int c_plus, int c_minus,
                                          int entry_bound) {
  FactorZResult f = factor_out_z(b);
  if (!f.quotient) {
    UnknottingReport rep;
    rep.factorization_ok = false;
    rep.bad_row = f.bad_row;
    rep.bad_col = f.bad_col;
    rep.notes = {"B does not factor as z A: entry (" + std::to_string(f.bad_row + 1) + ", " +
                 std::to_string(f.bad_col + 1) + ") is not divisible by z"};
    return rep;
  }
  UnknottingReport rep = unknotting_report(*f.quotient, c_plus, c_minus, entry_bound);
  rep.factorization_ok = true;
  rep.notes.insert(rep.notes.begin(), "B factored exactly as z A");
  return rep;
}

}  // namespace zsurf
