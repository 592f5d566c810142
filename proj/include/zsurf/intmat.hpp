#pragma once

// Dense matrices over Z (GMP integers) with the exact routines the rest
// of the library leans on: fraction-free determinants, unimodular
// inverses, Smith normal form, lattice ranks and integer linear solving,
// plus eigenvalue sign counts through Sturm chains.

#include <gmpxx.h>

#include <optional>
#include <vector>

#include "zsurf/laurent.hpp"

namespace zsurf {

class IntMat {
public:
  IntMat() = default;
  IntMat(int rows, int cols) : rows_(rows), cols_(cols), e_(static_cast<size_t>(rows) * cols) {}
  static IntMat identity(int n);
  static IntMat diagonal(const std::vector<Int>& d);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Int& at(int i, int j) { return e_[static_cast<size_t>(i) * cols_ + j]; }
  const Int& at(int i, int j) const { return e_[static_cast<size_t>(i) * cols_ + j]; }

  bool is_square() const { return rows_ == cols_; }
  bool is_zero() const;
  bool is_identity() const;
  bool is_symmetric() const;

  IntMat transpose() const;
  IntMat operator-() const;
  friend IntMat operator+(const IntMat& a, const IntMat& b);
  friend IntMat operator-(const IntMat& a, const IntMat& b);
  friend IntMat operator*(const IntMat& a, const IntMat& b);
  friend bool operator==(const IntMat& a, const IntMat& b) = default;

  std::vector<Int> apply(const std::vector<Int>& v) const;

  // Fraction-free (Bareiss) determinant; empty matrix has determinant 1.
  Int det() const;
  // Exact inverse, defined only when det = +-1.
  std::optional<IntMat> inverse_unimodular() const;
  int rank() const;

private:
  int rows_ = 0, cols_ = 0;
  std::vector<Int> e_;
};

struct SmithResult {
  IntMat u, d, v;  // u * a * v = d with u, v unimodular, d diagonal
  int rank = 0;
};
SmithResult smith_normal_form(const IntMat& a);

// One solution of a x = b over Z, if any.
std::optional<std::vector<Int>> solve_integer(const IntMat& a, const std::vector<Int>& b);

// Rank of the lattice spanned by the columns of a.
int lattice_rank(const IntMat& a);

// (positive, negative) eigenvalue counts of a symmetric integer matrix,
// obtained from a Sturm chain of its characteristic polynomial.
std::pair<int, int> signature(const IntMat& s);

// Characteristic polynomial det(x I - s) as coefficients (low to high).
std::vector<Int> characteristic_polynomial(const IntMat& s);

}  // namespace zsurf
