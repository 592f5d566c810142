#pragma once

// Twisted cell homology of the plumbed pieces: the 2/6/4-cell complex of
// the single-plumbing block (both plumbing signs), certified kernel
// generators, assembled presentations of H_1 of the plumbed manifold
// with Z[t^{+-1}] coefficients, and the derived invariants (order, rank
// at t = 1, (t-1)-filtration).

#include <array>
#include <string>
#include <vector>

#include "zsurf/forms.hpp"
#include "zsurf/laurent.hpp"

namespace zsurf {

using PolyVec = std::vector<LaurentPoly>;

struct TwistedChainComplex {
  std::vector<int> ranks;              // cells per degree, degree 0 first
  std::vector<PolyMat> boundaries;     // boundaries[i] : C_{i+1} -> C_i
  std::vector<std::vector<std::string>> labels;

  bool dimensions_match() const;
  // boundary o boundary = 0 in every degree
  bool chain_condition() const;
};

// The lifted equivariant complex of the single-plumbing block: two
// 0-cells, six 1-cells, four 2-cells.  sign selects the plumbing sign,
// which flips the twist of the torus identification.
TwistedChainComplex build_q_block(int sign);

// Z[t^{+-1}]-linear span membership with a bounded-degree ansatz:
// coefficients p_l with target = sum p_l vectors[l], exponents of the
// p_l confined to a window derived from the degrees involved (widened
// once on failure), or nullopt.
std::optional<PolyVec> span_solve(const std::vector<PolyVec>& vectors, const PolyVec& target);
bool in_span(const std::vector<PolyVec>& vectors, const PolyVec& target);

// true iff every candidate is killed by the first boundary map and every
// column of the second is an explicit combination of the candidates
bool verify_kernel_generators(const TwistedChainComplex& cc,
                              const std::vector<PolyVec>& candidates);

// the four kernel generators of the q-block complex
std::vector<PolyVec> q_block_kernel_generators();

struct ModulePresentation {
  std::vector<std::string> generators;
  PolyMat relations;  // generators x relators; columns are relators
};

struct BlockCertificate {
  int sign = 0;
  bool chain_condition = false;
  bool kernel_generators_verified = false;
  // [alpha lift] = sign * (t-1) [omega lift] holds, and the opposite
  // sign relation fails
  bool sign_relation_detected = false;
  // the presentation read off the complex (relators rewritten in the
  // kernel basis) has order (t-1)^2 with a rank-one evaluation at t = 1
  bool block_presentation_verified = false;
};

// Relators of the q-block complex rewritten in the kernel basis h_1..h_4:
// the presentation of the block homology extracted from the cells.
ModulePresentation q_block_presentation(int sign);

struct PresentationCertificate {
  std::vector<BlockCertificate> blocks;
  std::vector<std::string> gluing_notes;
  bool all_verified() const;
};

struct H1Presentation {
  ModulePresentation presentation;
  PresentationCertificate certificate;
};

// H_1(P_g(c+,c-); Z[t^{+-1}]): 2g genus generators of order (t-1) and
// c plumbing generators of order (t-1)^2, assembled blockwise with the
// per-block kernel certificates attached.
H1Presentation h1_presentation(int g, int c_plus, int c_minus);

struct InvariantReport {
  LaurentPoly order;        // normalized gcd of maximal minors
  int rank_at_one = 0;      // Z-rank of coker of the relations at t = 1
  int untwisted_h1_rank = 0;  // rank_at_one + 1 (the fibre class)
  std::array<int, 2> filtration{};  // ranks of M/uM and uM/u^2M, u = t-1
};

// Derived invariants of a torsion presentation; throws when the maximal
// minor gcd vanishes (non-torsion).
InvariantReport invariants(const ModulePresentation& pres);

// (h0, h1, h2, h3) of the plumbed manifold with Z coefficients
std::array<int, 4> untwisted_ranks(int g, int c_plus, int c_minus);

struct PkModuleReport {
  int untwisted_h1_rank = 0;          // 2g + c + 1
  LaurentPoly twisted_order;          // Delta_K (t-1)^{2g+2c}, normalized
  bool delta_coprime_to_t_minus_one = false;
};

// Twisted/untwisted invariants of the closed union with a knot exterior
// whose Alexander polynomial is delta_k (symmetric, delta_k(1) = +-1).
PkModuleReport pk_module_ranks(int g, int c_plus, int c_minus, const LaurentPoly& delta_k);

}  // namespace zsurf
