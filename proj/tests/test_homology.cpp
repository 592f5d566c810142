#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "zsurf/homology.hpp"

using namespace zsurf;

namespace {

PolyVec column(const PolyMat& m, int j) {
  PolyVec v(m.size());
  for (size_t i = 0; i < m.size(); ++i) v[i] = m[i][j];
  return v;
}

}  // namespace

TEST_CASE("q-block cell complex") {
  for (int sign : {1, -1}) {
    TwistedChainComplex cc = build_q_block(sign);
    CHECK(cc.ranks == std::vector<int>{2, 6, 4});
    CHECK(cc.dimensions_match());
    CHECK(cc.chain_condition());
    // Euler characteristic 2 - 6 + 4 = 0
    CHECK(cc.ranks[0] - cc.ranks[1] + cc.ranks[2] == 0);
  }

  // the omega relator reads (1-t) h2 - h3 in the kernel basis
  TwistedChainComplex cc = build_q_block(1);
  auto hs = q_block_kernel_generators();
  PolyVec omega_col = column(cc.boundaries[1], 3);
  PolyVec expect(6);
  for (size_t r = 0; r < 6; ++r)
    expect[r] = (LaurentPoly::one() - LaurentPoly::monomial(1, 1)) * hs[1][r] - hs[2][r];
  CHECK(omega_col == expect);
}

TEST_CASE("kernel certificate") {
  auto hs = q_block_kernel_generators();
  for (int sign : {1, -1}) CHECK(verify_kernel_generators(build_q_block(sign), hs));

  // dropping h2 breaks the certificate: the omega relator needs it
  std::vector<PolyVec> missing{hs[0], hs[2], hs[3]};
  CHECK(!verify_kernel_generators(build_q_block(1), missing));

  // a vector outside the kernel is rejected
  std::vector<PolyVec> bad = hs;
  bad[0][2] = LaurentPoly::one();  // z1e alone has nonzero boundary
  bad[0][0] = LaurentPoly::zero();
  CHECK(!verify_kernel_generators(build_q_block(1), bad));

  // trivial case: zero candidate spans a zero second boundary
  TwistedChainComplex trivial;
  trivial.ranks = {1, 1, 1};
  trivial.boundaries = {PolyMat{{LaurentPoly::zero()}}, PolyMat{{LaurentPoly::zero()}}};
  trivial.labels = {{"v"}, {"e"}, {"f"}};
  CHECK(verify_kernel_generators(trivial, {PolyVec{LaurentPoly::zero()}}));
}

TEST_CASE("block presentation extracted from the cells") {
  for (int sign : {1, -1}) {
    ModulePresentation pres = q_block_presentation(sign);
    CHECK(pres.generators.size() == 4);
    // relator coordinates are unique here (each kernel generator owns a
    // private cell), so the omega column must read (0, 1-t, -1, 0)
    CHECK(pres.relations[1][3] == LaurentPoly::one() - LaurentPoly::monomial(1, 1));
    CHECK(pres.relations[2][3] == -LaurentPoly::one());
    InvariantReport rep = invariants(pres);
    CHECK(rep.order == t_minus_one_pow(2));
    CHECK(rep.rank_at_one == 1);
    CHECK(rep.filtration == std::array<int, 2>{1, 1});
  }
}

TEST_CASE("sign relation is detected with the right sign only") {
  // [alpha1v] = +(t-1)[omega] for the positive plumbing and -(t-1)[omega]
  // for the negative one; certify_block checks both directions
  for (int sign : {1, -1}) {
    H1Presentation p = h1_presentation(0, sign == 1 ? 1 : 0, sign == 1 ? 0 : 1);
    REQUIRE(p.certificate.blocks.size() == 1);
    CHECK(p.certificate.blocks[0].sign == sign);
    CHECK(p.certificate.blocks[0].chain_condition);
    CHECK(p.certificate.blocks[0].kernel_generators_verified);
    CHECK(p.certificate.blocks[0].sign_relation_detected);
    CHECK(p.certificate.blocks[0].block_presentation_verified);
  }
}

TEST_CASE("h1 presentations") {
  H1Presentation p = h1_presentation(0, 1, 0);
  CHECK(p.presentation.generators == std::vector<std::string>{"w1"});
  CHECK(p.presentation.relations == PolyMat{{t_minus_one_pow(2)}});

  H1Presentation q = h1_presentation(1, 0, 0);
  CHECK(q.presentation.generators == std::vector<std::string>{"a1", "b1"});
  CHECK(q.presentation.relations[0][0] == t_minus_one());
  CHECK(q.presentation.relations[1][1] == t_minus_one());
  CHECK(q.certificate.blocks.empty());  // no plumbing blocks used

  H1Presentation r = h1_presentation(0, 0, 0);
  CHECK(r.presentation.generators.empty());

  H1Presentation s = h1_presentation(1, 2, 1);
  CHECK(s.presentation.generators.size() == 5);
  CHECK(s.certificate.blocks.size() == 2);  // one per plumbing sign
  CHECK(s.certificate.all_verified());
}

TEST_CASE("invariants") {
  InvariantReport rep = invariants(h1_presentation(1, 1, 0).presentation);
  CHECK(rep.order == t_minus_one_pow(4));
  CHECK(rep.rank_at_one == 3);
  CHECK(rep.untwisted_h1_rank == 4);
  CHECK(rep.filtration[0] == 3);
  CHECK(rep.filtration[1] == 1);

  InvariantReport triv = invariants(h1_presentation(0, 0, 0).presentation);
  CHECK(triv.order == LaurentPoly::one());
  CHECK(triv.rank_at_one == 0);

  InvariantReport big = invariants(h1_presentation(0, 2, 1).presentation);
  CHECK(big.order == t_minus_one_pow(6));

  // grid: order (t-1)^{2g+2c}, rank 2g+c, untwisted 2g+c+1
  for (int g = 0; g <= 3; ++g)
    for (int cp = 0; cp + g <= 4; ++cp)
      for (int cm = 0; cp + cm <= 3; ++cm) {
        int c = cp + cm;
        InvariantReport r = invariants(h1_presentation(g, cp, cm).presentation);
        CHECK(r.order == t_minus_one_pow(2 * g + 2 * c));
        CHECK(r.rank_at_one == 2 * g + c);
        CHECK(r.untwisted_h1_rank == 2 * g + c + 1);
        CHECK(r.filtration[0] == 2 * g + c);
        CHECK(r.filtration[1] == c);
      }

  // non-torsion presentations are rejected
  ModulePresentation free_mod;
  free_mod.generators = {"x"};
  free_mod.relations = {{LaurentPoly::zero()}};
  CHECK_THROWS_AS(invariants(free_mod), std::invalid_argument);
}

TEST_CASE("untwisted_ranks") {
  CHECK(untwisted_ranks(0, 1, 0) == std::array<int, 4>{1, 2, 1, 0});
  CHECK(untwisted_ranks(0, 0, 0) == std::array<int, 4>{1, 1, 0, 0});
  CHECK(untwisted_ranks(2, 1, 1) == std::array<int, 4>{1, 7, 6, 0});
}

TEST_CASE("pk_module_ranks") {
  PkModuleReport rep = pk_module_ranks(0, 1, 0, twist_alexander(1));
  CHECK(rep.untwisted_h1_rank == 2);
  CHECK(rep.twisted_order == normalize_unit(twist_alexander(1) * t_minus_one_pow(2)));
  CHECK(rep.delta_coprime_to_t_minus_one);

  // trivial Alexander polynomial: order (t-1)^{2g+2c}
  PkModuleReport triv = pk_module_ranks(2, 1, 0, LaurentPoly::one());
  CHECK(triv.twisted_order == t_minus_one_pow(6));

  for (long n = -6; n <= 6; ++n)
    CHECK(pk_module_ranks(1, 0, 1, twist_alexander(n)).delta_coprime_to_t_minus_one);

  // delta(1) = -1 is normalized; anything else rejected
  CHECK(pk_module_ranks(0, 1, 0, -twist_alexander(2)).twisted_order ==
        normalize_unit(twist_alexander(2) * t_minus_one_pow(2)));
  CHECK_THROWS_AS(pk_module_ranks(0, 1, 0, LaurentPoly(3)), std::invalid_argument);
  CHECK_THROWS_AS(pk_module_ranks(0, 1, 0, t_minus_one()), std::invalid_argument);
}
