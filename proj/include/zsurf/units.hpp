#pragma once

// Unitary units x(t) x(t^{-1}) = 1 in Z[t^{+-1}]/Delta_n for the twist
// polynomials Delta_n = -nt + (2n+1) - nt^{-1}, and in the truncated
// rings Z[t^{+-1}]/(t-1)^k.  Elements of the quadratic quotient are kept
// in the normal form a + b t with a, b in Z[1/n].

#include <optional>
#include <string>
#include <vector>

#include "zsurf/laurent.hpp"

namespace zsurf {

enum class UnitGroupClass { Trivial, Z2, Z4, Infinite };
std::string to_string(UnitGroupClass c);

// true iff delta divides x involute(x) - 1
bool is_unitary(const LaurentPoly& x, const LaurentPoly& delta);

// a + b t in Z[t^{+-1}]/Delta_n, using t^2 = ((2n+1) t - n)/n.
struct QuadElem {
  Rat a, b;
  long n = 1;

  friend bool operator==(const QuadElem& x, const QuadElem& y) {
    return x.n == y.n && x.a == y.a && x.b == y.b;
  }
  friend bool operator<(const QuadElem& x, const QuadElem& y) {
    if (int c = cmp(x.a, y.a)) return c < 0;
    if (int c = cmp(x.b, y.b)) return c < 0;
    return x.n < y.n;
  }
};

QuadElem quad_one(long n);
QuadElem quad_mul(const QuadElem& x, const QuadElem& y);
// t |-> t^{-1} = (2n+1)/n - t
QuadElem quad_conj(const QuadElem& x);
// multiply by t^{+-1}
QuadElem quad_mul_t(const QuadElem& x, int direction);
bool quad_is_unitary(const QuadElem& x);

// Normal form of a Laurent polynomial in Z[t^{+-1}]/Delta_n (n != 0).
QuadElem reduce_quadratic(const LaurentPoly& p, long n);

// Closed-form classification of U(Delta_n)/{t^k}: Trivial for n in
// {-1, 0}; Z2 for n in {1, 2} and n = -p^k with k odd; Z4 for n = -p^k
// with k even; Infinite otherwise.
UnitGroupClass classify_unit_group(long n);

struct UnitGroupReport {
  long n = 0;
  UnitGroupClass classification = UnitGroupClass::Trivial;
  // one representative per {t^k}-class found (pairwise inequivalent)
  std::vector<QuadElem> representatives;
  // a unit not of the form +-t^k, when the group is infinite
  std::optional<QuadElem> witness;
  // bounded search found fewer classes than the closed form predicts, or
  // products escaped the searched region
  bool bound_exhausted = false;
  // multiplication-table structure of the found classes disagrees with
  // the closed form (never observed; reported loudly rather than resolved)
  bool table_disagrees = false;
};

struct UnitSearchBounds {
  long numerator_bound = 10000;
  int denom_power_bound = 6;
  int k_bound = 40;
};

// Bounded enumeration of unitary units in the quadratic normal form,
// partitioned modulo multiplication by t^{+-k}, with the group structure
// of the classes identified by multiplication-table closure and checked
// against the closed-form classification.
UnitGroupReport enumerate_unit_classes(long n, const UnitSearchBounds& bounds = {});

enum class DiskCountKind { Zero, Finite, Infinite };
struct DiskCount {
  DiskCountKind kind;
  long count = 0;  // meaningful when kind == Finite
};

// |U(Delta_n)/{t^k}| when the Blanchfield form is presentable by
// (eps Delta_n), and 0 otherwise.
DiskCount disk_count(long n, int sign, bool presentable);

// Unitary units of Z[t^{+-1}]/(t-1)^k of the form sum a_i (t-1)^i with
// |a_i| <= bound, in a deterministic order.
std::vector<LaurentPoly> truncated_unitary(int k, long bound);

}  // namespace zsurf
