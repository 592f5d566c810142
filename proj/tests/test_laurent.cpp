#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zsurf/laurent.hpp"
#include "zsurf/rng.hpp"

using namespace zsurf;

namespace {

// independent convolution oracle for products
LaurentPoly brute_mul(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly out;
  for (int i = a.lowest_exponent(); i <= a.highest_exponent(); ++i)
    for (int j = b.lowest_exponent(); j <= b.highest_exponent(); ++j)
      out += LaurentPoly::monomial(a.coeff(i) * b.coeff(j), i + j);
  return out;
}

LaurentPoly random_poly(Rng& rng, int max_terms = 5, long coeff_bound = 6) {
  LaurentPoly p;
  int terms = static_cast<int>(rng.below(static_cast<uint64_t>(max_terms) + 1));
  for (int i = 0; i < terms; ++i)
    p += LaurentPoly::monomial(Int(rng.range(-coeff_bound, coeff_bound)),
                               static_cast<int>(rng.range(-4, 4)));
  return p;
}

}  // namespace

TEST_CASE("arithmetic matches the convolution oracle") {
  // (t-1)(t^{-1}-1) = 2 - t - t^{-1}
  LaurentPoly tm1 = t_minus_one();
  LaurentPoly inv = tm1.involute();
  LaurentPoly expect = brute_mul(tm1, inv);
  CHECK(tm1 * inv == expect);
  CHECK(tm1 * inv == LaurentPoly(-1, {Int(-1), Int(2), Int(-1)}));
  CHECK(tm1 * inv == z_poly());

  LaurentPoly p = LaurentPoly(0, {Int(3), Int(0), Int(-2)});
  CHECK(p + LaurentPoly::zero() == p);
  CHECK(LaurentPoly::monomial(1, 1) * LaurentPoly::monomial(1, -1) == LaurentPoly::one());

  Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(a * b == brute_mul(a, b));
  }
}

TEST_CASE("trimmed representation invariants") {
  LaurentPoly p(3, {Int(0), Int(0), Int(5), Int(0)});
  CHECK(p.lowest_exponent() == 5);
  CHECK(p.coefficients().size() == 1);
  LaurentPoly q = p - p;
  CHECK(q.is_zero());
  CHECK(q.lowest_exponent() == 0);
  CHECK(q.coefficients().empty());
}

TEST_CASE("involute") {
  CHECK(LaurentPoly::monomial(1, 1).involute() == LaurentPoly::monomial(1, -1));
  // symmetric polynomial is fixed: coefficient reversal oracle
  LaurentPoly d6 = twist_alexander(6);
  CHECK(d6 == LaurentPoly(-1, {Int(-6), Int(13), Int(-6)}));
  CHECK(d6.involute() == d6);
  LaurentPoly p(0, {Int(1), Int(2)});
  CHECK(p.involute() == LaurentPoly(-1, {Int(2), Int(1)}));

  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK(a.involute().involute() == a);
    CHECK((a * b).involute() == a.involute() * b.involute());
  }
}

TEST_CASE("eval_one") {
  for (long n = -10; n <= 10; ++n) CHECK(twist_alexander(n).eval_one() == 1);
  CHECK(z_poly().eval_one() == 0);
  CHECK(LaurentPoly::zero().eval_one() == 0);

  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng);
    CHECK((a * b).eval_one() == a.eval_one() * b.eval_one());
  }
}

TEST_CASE("exact_divide") {
  LaurentPoly z = z_poly();
  LaurentPoly tp1(0, {Int(1), Int(1)});
  CHECK(*exact_divide(z * tp1, z) == tp1);
  CHECK(!exact_divide(t_minus_one(), z));
  // Delta_n - 1 = n z
  for (long n = -6; n <= 6; ++n) {
    if (n == 0) continue;
    auto q = exact_divide(twist_alexander(n) - LaurentPoly::one(), z);
    REQUIRE(q);
    CHECK(*q == LaurentPoly(n));
  }
  CHECK_THROWS_AS((void)exact_divide(z, LaurentPoly::zero()), std::invalid_argument);

  Rng rng(14);
  for (int trial = 0; trial < 200; ++trial) {
    LaurentPoly p = random_poly(rng);
    LaurentPoly d = random_poly(rng);
    if (d.is_zero()) continue;
    auto q = exact_divide(p * d, d);
    REQUIRE(q);
    CHECK(*q == p);
  }
}

TEST_CASE("twist_alexander") {
  CHECK(twist_alexander(0) == LaurentPoly::one());
  CHECK(twist_alexander(-1) == LaurentPoly(-1, {Int(1), Int(-1), Int(1)}));
  CHECK(twist_alexander(6) == LaurentPoly(-1, {Int(-6), Int(13), Int(-6)}));
  for (long n = -8; n <= 8; ++n)
    CHECK(twist_alexander(n) == LaurentPoly(n) * z_poly() + LaurentPoly::one());
}

TEST_CASE("gcd") {
  // any symmetric Delta with Delta(1) = 1 is coprime to t-1
  for (long n = -8; n <= 8; ++n)
    CHECK(laurent_gcd(twist_alexander(n), t_minus_one()).is_unit());
  LaurentPoly p = LaurentPoly(0, {Int(2), Int(0), Int(3)});
  CHECK(associates(laurent_gcd(p, p), p));
  CHECK(laurent_gcd(t_minus_one_pow(2), t_minus_one_pow(3)) == t_minus_one_pow(2));
  // content is respected
  CHECK(laurent_gcd(LaurentPoly(6), LaurentPoly(4)) == LaurentPoly(2));
  CHECK_THROWS_AS(laurent_gcd(LaurentPoly::zero(), LaurentPoly::zero()), std::invalid_argument);

  Rng rng(15);
  for (int trial = 0; trial < 60; ++trial) {
    LaurentPoly a = random_poly(rng), b = random_poly(rng), m = random_poly(rng);
    if (a.is_zero() || b.is_zero() || m.is_zero()) continue;
    LaurentPoly g = laurent_gcd(a * m, b * m);
    CHECK(exact_divide(g, m).has_value());  // m divides the gcd
    CHECK(exact_divide(a * m, g).has_value());
    CHECK(exact_divide(b * m, g).has_value());
  }
}

TEST_CASE("normalize_unit") {
  // z = -t^{-1} (t-1)^2
  LaurentPoly z = z_poly();
  CHECK(-LaurentPoly::monomial(1, -1) * t_minus_one_pow(2) == z);
  CHECK(normalize_unit(z) == t_minus_one_pow(2));
  CHECK(normalize_unit(LaurentPoly::one()) == LaurentPoly::one());
  CHECK(normalize_unit(LaurentPoly::monomial(-1, 3)) == LaurentPoly::one());
  CHECK_THROWS_AS(normalize_unit(LaurentPoly::zero()), std::invalid_argument);

  Rng rng(16);
  for (int trial = 0; trial < 100; ++trial) {
    LaurentPoly p = random_poly(rng);
    if (p.is_zero()) continue;
    int k = static_cast<int>(rng.range(-3, 3));
    LaurentPoly u = LaurentPoly::monomial(rng.flip() ? 1 : -1, k);
    CHECK(normalize_unit(u * p) == normalize_unit(p));
    CHECK(normalize_unit(normalize_unit(p)) == normalize_unit(p));
  }
}

TEST_CASE("truncation in powers of t-1") {
  // t = 1 + u, t^{-1} = 1 - u + u^2 - ...
  auto tr = truncate_in_u(LaurentPoly::monomial(1, -1), 3);
  CHECK(tr == std::vector<Int>{Int(1), Int(-1), Int(1)});
  auto trz = truncate_in_u(z_poly(), 3);
  CHECK(trz == std::vector<Int>{Int(0), Int(0), Int(-1)});  // z = -u^2 + u^3 - ...
  for (long k = -5; k <= 5; ++k) {
    auto t2 = truncate_in_u(LaurentPoly::monomial(1, static_cast<int>(k)), 2);
    CHECK(t2[0] == 1);
    CHECK(t2[1] == k);  // t^k = 1 + k u mod u^2
  }
}
