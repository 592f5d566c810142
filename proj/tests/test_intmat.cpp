#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zsurf/intmat.hpp"
#include "zsurf/rng.hpp"

using namespace zsurf;

namespace {

IntMat random_mat(Rng& rng, int n, long bound) {
  IntMat m(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.at(i, j) = rng.range(-bound, bound);
  return m;
}

// cofactor-expansion determinant as an independent oracle
Int brute_det(const IntMat& m, std::vector<int> cols) {
  const int k = static_cast<int>(cols.size());
  const int row = m.rows() - k;
  if (k == 0) return 1;
  Int acc = 0;
  for (int pick = 0; pick < k; ++pick) {
    std::vector<int> rest;
    for (int j = 0; j < k; ++j)
      if (j != pick) rest.push_back(cols[j]);
    Int term = m.at(row, cols[pick]) * brute_det(m, rest);
    acc += (pick % 2 == 0) ? term : -term;
  }
  return acc;
}

Int brute_det(const IntMat& m) {
  std::vector<int> cols;
  for (int j = 0; j < m.cols(); ++j) cols.push_back(j);
  return brute_det(m, cols);
}

}  // namespace

TEST_CASE("determinant against cofactor oracle") {
  Rng rng(21);
  for (int trial = 0; trial < 150; ++trial) {
    int n = 1 + static_cast<int>(rng.below(5));
    IntMat m = random_mat(rng, n, 4);
    CHECK(m.det() == brute_det(m));
  }
  CHECK(IntMat(0, 0).det() == 1);
}

TEST_CASE("unimodular inverse") {
  Rng rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    // build a unimodular matrix from elementary operations
    IntMat m = IntMat::identity(n);
    for (int step = 0; step < 6; ++step) {
      IntMat e = IntMat::identity(n);
      int i = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
      int j = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
      if (i != j) e.at(i, j) = rng.range(-2, 2);
      m = m * e;
    }
    auto inv = m.inverse_unimodular();
    REQUIRE(inv);
    CHECK((m * *inv).is_identity());
    CHECK((*inv * m).is_identity());
  }
  CHECK(!IntMat::diagonal({Int(2)}).inverse_unimodular());
}

TEST_CASE("smith normal form") {
  Rng rng(23);
  for (int trial = 0; trial < 80; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(4));
    int cols = 1 + static_cast<int>(rng.below(4));
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) m.at(i, j) = rng.range(-6, 6);
    SmithResult s = smith_normal_form(m);
    CHECK(s.u * m * s.v == s.d);
    Int du = s.u.det();
    Int dv = s.v.det();
    CHECK((du == 1 || du == -1));
    CHECK((dv == 1 || dv == -1));
    // diagonal, nonnegative, divisibility chain
    for (int i = 0; i < s.d.rows(); ++i)
      for (int j = 0; j < s.d.cols(); ++j)
        if (i != j) CHECK(s.d.at(i, j) == 0);
    for (int i = 0; i + 1 < s.rank; ++i) {
      CHECK(s.d.at(i, i) > 0);
      CHECK(s.d.at(i + 1, i + 1) % s.d.at(i, i) == 0);
    }
  }
}

TEST_CASE("integer solve") {
  Rng rng(24);
  for (int trial = 0; trial < 80; ++trial) {
    int rows = 1 + static_cast<int>(rng.below(4));
    int cols = 1 + static_cast<int>(rng.below(4));
    IntMat a(rows, cols);
    for (int i = 0; i < rows; ++i)
      for (int j = 0; j < cols; ++j) a.at(i, j) = rng.range(-5, 5);
    std::vector<Int> x(static_cast<size_t>(cols));
    for (auto& v : x) v = rng.range(-4, 4);
    std::vector<Int> b = a.apply(x);
    auto sol = solve_integer(a, b);
    REQUIRE(sol);
    CHECK(a.apply(*sol) == b);
  }
  // inconsistent system
  IntMat a(1, 1);
  a.at(0, 0) = 2;
  CHECK(!solve_integer(a, {Int(3)}));
}

TEST_CASE("characteristic polynomial and signature") {
  IntMat s = IntMat::diagonal({Int(1), Int(-1), Int(3), Int(0)});
  auto cp = characteristic_polynomial(s);
  // x(x-1)(x+1)(x-3) = x^4 - 3x^3 - x^2 + 3x
  CHECK(cp == std::vector<Int>{Int(0), Int(3), Int(-1), Int(-3), Int(1)});
  CHECK(signature(s) == std::pair<int, int>{2, 1});

  IntMat hyp(2, 2);
  hyp.at(0, 1) = 1;
  hyp.at(1, 0) = 1;
  CHECK(signature(hyp) == std::pair<int, int>{1, 1});

  Rng rng(25);
  for (int trial = 0; trial < 40; ++trial) {
    int n = 1 + static_cast<int>(rng.below(4));
    IntMat m(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        m.at(i, j) = rng.range(-3, 3);
        m.at(j, i) = m.at(i, j);
      }
    auto [pos, neg] = signature(m);
    CHECK(pos + neg <= n);
    CHECK(pos + neg == m.rank());  // nonzero eigenvalue count equals rank
    // congruence by a random unimodular matrix preserves the signature
    IntMat p = IntMat::identity(n);
    for (int step = 0; step < 4; ++step) {
      IntMat e = IntMat::identity(n);
      int i = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
      int j = static_cast<int>(rng.below(static_cast<uint64_t>(n)));
      if (i != j) e.at(i, j) = rng.range(-2, 2);
      p = p * e;
    }
    CHECK(signature(p * m * p.transpose()) == std::make_pair(pos, neg));
  }
}
