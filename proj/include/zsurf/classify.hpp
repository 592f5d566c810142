#pragma once

// Classification engines on top of the other modules: standardness
// screening of hermitian forms, surface-count bounds, the boundary
// automorphism quotient for one positive plumbing, and the
// crossing-change condition reports.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "zsurf/forms.hpp"
#include "zsurf/units.hpp"

namespace zsurf {

struct StandardnessReport {
  std::vector<std::pair<std::string, bool>> invariant_checks;
  std::optional<bool> witness_verified;  // present only when a witness was supplied
  bool all_pass() const;
};

// Necessary-condition screening of lambda against the standard form of
// signature (c+, c-) and genus g, with optional exact witness check
// P lambda involute(P)^T = standard.
StandardnessReport standardness_report(const HermMatrix& lambda, int c_plus, int c_minus, int g,
                                       const std::optional<PolyMat>& witness);

struct SurfaceCountResult {
  enum class Kind { Exact, UpperBound, Unknown } kind;
  long count = 0;       // for Exact / UpperBound
  std::string rationale;
};

// Counts of surfaces with a fixed exterior form: exact in the standard
// and single-double-point cases, explicit upper bounds in the definite
// and (1,1) cases, unknown otherwise.
SurfaceCountResult surface_count(int c_plus, int c_minus, int g, bool standard_lambda);

// Size of the quotient of the boundary automorphisms of the one-positive-
// plumbing module by the realized subgroup {t^k}; independent of the
// bound, and equal to 2.
long quotient_size_1_0(long k_bound);

struct UnknottingReport {
  // condition on A itself (size, hermitian, nondegenerate, congruence)
  UnknottingCheck condition;
  // when B was supplied: whether B = zA factored, and the offending
  // entry when it did not
  std::optional<bool> factorization_ok;
  int bad_row = -1, bad_col = -1;
  std::vector<std::string> notes;
  bool all_pass() const;
};

// Check the crossing-change condition on A directly.
UnknottingReport unknotting_report(const HermMatrix& a, int c_plus, int c_minus, int entry_bound);

// Given B claimed to present the boundary form of the union: factor
// B = zA and run the condition on A.
UnknottingReport unknotting_report_from_b(const HermMatrix& b, int c_plus, int c_minus,
                                          int entry_bound);

}  // namespace zsurf
