// Acceptance suite: one pass/fail line per criterion, nonzero exit on
// any failure.  Criteria marked with their timing budgets are wall-clock
// checked so regressions surface here rather than in CI timeouts.

#include <chrono>
#include <iostream>
#include <sstream>
#include <vector>

#include "zsurf/classify.hpp"
#include "zsurf/cli.hpp"
#include "zsurf/homology.hpp"
#include "zsurf/random_words.hpp"
#include "zsurf/rng.hpp"
#include "zsurf/textio.hpp"

using namespace zsurf;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int number, const std::string& name, bool pass, const std::string& detail = "") {
  std::cout << "criterion " << number << " [" << name << "]: " << (pass ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << "  (" << detail << ")";
  std::cout << std::endl;
  if (!pass) ++failures;
}

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// the closed-form table, restated independently of the library routine
UnitGroupClass table_classification(long n) {
  if (n == -1 || n == 0) return UnitGroupClass::Trivial;
  if (n == 1 || n == 2) return UnitGroupClass::Z2;
  if (n < -1) {
    long m = -n;
    long p = 0;
    for (long d = 2; d * d <= m; ++d)
      if (m % d == 0) {
        p = d;
        break;
      }
    if (p == 0) p = m;
    long k = 0;
    while (m % p == 0) {
      m /= p;
      ++k;
    }
    if (m == 1) return k % 2 == 1 ? UnitGroupClass::Z2 : UnitGroupClass::Z4;
  }
  return UnitGroupClass::Infinite;
}

void criterion_1_unit_table() {
  auto start = Clock::now();
  bool ok = true;
  std::string detail;
  for (long n = -60; n <= 60 && ok; ++n) {
    UnitGroupClass expect = table_classification(n);
    if (classify_unit_group(n) != expect) {
      ok = false;
      detail = "classification mismatch at n=" + std::to_string(n);
      break;
    }
    long predicted = expect == UnitGroupClass::Trivial ? 1
                     : expect == UnitGroupClass::Z2    ? 2
                     : expect == UnitGroupClass::Z4    ? 4
                                                       : -1;
    if (predicted < 0) continue;
    UnitGroupReport rep = enumerate_unit_classes(n, UnitSearchBounds{});
    if (rep.classification != expect || rep.table_disagrees || rep.bound_exhausted ||
        static_cast<long>(rep.representatives.size()) != predicted) {
      ok = false;
      detail = "enumeration failed at n=" + std::to_string(n) + " (found " +
               std::to_string(rep.representatives.size()) + ", predicted " +
               std::to_string(predicted) + ")";
    }
  }
  double elapsed = seconds_since(start);
  if (ok && elapsed >= 60.0) {
    ok = false;
    detail = "too slow";
  }
  std::ostringstream d;
  d << "n in [-60, 60], " << elapsed << " s";
  report(1, "unit-group table", ok, detail.empty() ? d.str() : detail);
}

void criterion_2_disk_counts() {
  bool ok = true;
  auto trefoil = disk_count(-1, 1, true);
  ok = ok && trefoil.kind == DiskCountKind::Finite && trefoil.count == 1;
  ok = ok && disk_count(6, 1, true).kind == DiskCountKind::Infinite;
  for (long n : {-9L, -1L, 0L, 3L, 6L})
    for (int sign : {1, -1}) ok = ok && disk_count(n, sign, false).kind == DiskCountKind::Zero;
  report(2, "disk counts", ok);
}

std::vector<StdModuleContext> protocol_contexts() {
  std::vector<StdModuleContext> out;
  for (int cp = 0; cp <= 3; ++cp)
    for (int cm = 0; cp + cm <= 3; ++cm)
      for (int g = 0; g <= 2; ++g)
        if (cp + cm + g > 0) out.push_back({cp, cm, g});
  return out;
}

void criterion_3_decompose_roundtrip() {
  auto start = Clock::now();
  Rng rng(20250811);
  auto contexts = protocol_contexts();
  int done = 0, good = 0;
  while (done < 500) {
    const StdModuleContext& ctx = contexts[rng.below(contexts.size())];
    Word w = random_realized_word(rng, ctx, static_cast<int>(rng.below(13)));
    IntOrthogonal n = random_orthogonal(rng, ctx.c_plus, ctx.c_minus, 2);
    IntMat composed = eval_word(w, ctx).matrix() * boundary_of_orthogonal(n, ctx).matrix();
    ++done;
    try {
      Decomposition d = decompose(IsometryMatrix(ctx, composed));
      if (eval_word(d.word, ctx).matrix() * boundary_of_orthogonal(d.n, ctx).matrix() ==
          composed)
        ++good;
    } catch (const std::exception&) {
    }
  }
  double elapsed = seconds_since(start);
  bool ok = good == 500 && elapsed < 30.0;
  std::ostringstream d;
  d << good << "/500 exact, " << elapsed << " s";
  report(3, "decompose/recompose", ok, d.str());
}

void criterion_4_definite_roundtrip() {
  Rng rng(4);
  std::vector<std::pair<int, int>> signatures{{1, 0}, {2, 0}, {3, 0}, {0, 1}, {0, 2}, {0, 3},
                                              {1, 1}};
  int done = 0, good = 0, signed_perm_ok = 0, signed_perm_total = 0;
  for (const auto& [cp, cm] : signatures)
    for (int g = 0; g <= 2; ++g) {
      StdModuleContext ctx{cp, cm, g};
      for (int trial = 0; trial < 8; ++trial) {
        Word w = random_realized_word(rng, ctx, static_cast<int>(rng.below(13)));
        Word sp = random_signed_perm_word(rng, ctx, 4);
        Word all = w;
        all.insert(all.end(), sp.begin(), sp.end());
        IsometryMatrix f = eval_word(all, ctx);
        ++done;
        try {
          bool oneone = cp == 1 && cm == 1;
          DefiniteDecomposition d = oneone ? decompose_11(f) : decompose_definite(f);
          Word rec = d.word;
          rec.insert(rec.end(), d.signed_perm_word.begin(), d.signed_perm_word.end());
          if (eval_word(rec, ctx) == f) ++good;
          if (!oneone) {
            ++signed_perm_total;
            Decomposition full = decompose(f);
            signed_permutation_parts(full.n.n);  // throws unless signed perm
            ++signed_perm_ok;
          }
        } catch (const std::exception&) {
        }
      }
    }
  bool ok = good == done && signed_perm_ok == signed_perm_total;
  std::ostringstream d;
  d << good << "/" << done << " exact, " << signed_perm_ok << "/" << signed_perm_total
    << " signed permutations";
  report(4, "definite and (1,1) decompositions", ok, d.str());
}

void criterion_5_orthogonal_enumeration() {
  bool ok = true;
  std::string detail;
  long expected[] = {2, 8, 48, 384};
  for (int c = 1; c <= 4; ++c) {
    size_t h1 = enumerate_orthogonal(c, 0, 1).size();
    size_t h2 = c <= 3 ? enumerate_orthogonal(0, c, 2).size() : h1;
    if (h1 != static_cast<size_t>(expected[c - 1]) || h2 != h1) {
      ok = false;
      detail = "definite count wrong at c=" + std::to_string(c);
    }
  }
  if (enumerate_orthogonal(1, 1, 1).size() != 4 || enumerate_orthogonal(1, 1, 7).size() != 4) {
    ok = false;
    detail = "O(1,1) should have 4 elements";
  }
  size_t small = enumerate_orthogonal(2, 1, 3).size();
  size_t big = enumerate_orthogonal(2, 1, 10).size();
  if (!(big > small)) {
    ok = false;
    detail = "O(2,1) did not grow with the height";
  }
  std::ostringstream d;
  d << "2,8,48,384; |O(1,1)|=4; |O(2,1)| " << small << " -> " << big;
  report(5, "orthogonal enumeration", ok, detail.empty() ? d.str() : detail);
}

void criterion_6_generator_validity() {
  // gen() constructs an IsometryMatrix, whose constructor enforces
  // unimodularity, t-equivariance and form preservation; count every
  // token over every context
  int total = 0, valid = 0;
  for (int cp = 0; cp <= 3; ++cp)
    for (int cm = 0; cp + cm <= 3; ++cm)
      for (int g = 0; g <= 2; ++g) {
        StdModuleContext ctx{cp, cm, g};
        const int c = ctx.c();
        std::vector<GeneratorToken> tokens;
        for (int i = 0; i < c; ++i) {
          for (long k : {-2L, -1L, 1L, 2L}) tokens.push_back({ScaleT{i, k}, false});
          for (int i2 = 0; i2 < c; ++i2)
            if (i2 != i) tokens.push_back({Pmove{i, i2}, false});
          for (int j = 0; j < 2 * g; ++j) tokens.push_back({Qmove{i, j}, false});
          tokens.push_back({NegX{i}, false});
        }
        if (g >= 1) {
          tokens.push_back({SpMove{symplectic_j(g)}, false});
          for (int j = 0; j < 2 * g; j += 2) {
            IntMat tr = IntMat::identity(2 * g);
            tr.at(j, j + 1) = 1;
            tokens.push_back({SpMove{tr}, false});
            IntMat tr2 = IntMat::identity(2 * g);
            tr2.at(j + 1, j) = -2;
            tokens.push_back({SpMove{tr2}, false});
          }
        }
        for (int cls : {1, -1}) {
          int len = cls == 1 ? cp : cm;
          if (len < 2) continue;
          std::vector<int> rot(static_cast<size_t>(len));
          for (int i = 0; i < len; ++i) rot[i] = (i + 1) % len;
          tokens.push_back({PermX{rot, cls}, false});
          std::vector<int> swap01(static_cast<size_t>(len));
          for (int i = 0; i < len; ++i) swap01[i] = i;
          std::swap(swap01[0], swap01[1]);
          tokens.push_back({PermX{swap01, cls}, false});
        }
        size_t base = tokens.size();
        for (size_t i = 0; i < base; ++i) tokens.push_back({tokens[i].op, true});
        for (const auto& token : tokens) {
          ++total;
          try {
            gen(token, ctx);
            ++valid;
          } catch (const std::exception&) {
          }
        }
      }
  std::ostringstream d;
  d << valid << "/" << total << " tokens pass all three invariants";
  report(6, "generator validity", valid == total && total > 0, d.str());
}

void criterion_7_homology_grid() {
  bool ok = true;
  std::string detail;
  for (int sign : {1, -1}) {
    TwistedChainComplex cc = build_q_block(sign);
    if (!cc.dimensions_match() || !cc.chain_condition()) {
      ok = false;
      detail = "chain condition failed";
    }
    if (!verify_kernel_generators(cc, q_block_kernel_generators())) {
      ok = false;
      detail = "kernel certificate failed";
    }
  }
  for (int g = 0; g <= 3 && ok; ++g)
    for (int cp = 0; cp <= 3 && ok; ++cp)
      for (int cm = 0; cp + cm <= 3 && ok; ++cm) {
        int c = cp + cm;
        H1Presentation pres = h1_presentation(g, cp, cm);
        if (!pres.certificate.all_verified()) {
          ok = false;
          detail = "certificate failed (sign flip detection included)";
          break;
        }
        InvariantReport rep = invariants(pres.presentation);
        if (rep.order != t_minus_one_pow(2 * g + 2 * c) || rep.rank_at_one != 2 * g + c ||
            rep.untwisted_h1_rank != 2 * g + c + 1) {
          ok = false;
          detail = "invariants wrong at g=" + std::to_string(g) + " c=" + std::to_string(c);
          break;
        }
        auto ranks = untwisted_ranks(g, cp, cm);
        if (ranks != std::array<int, 4>{1, 2 * g + c + 1, 2 * g + c, 0}) {
          ok = false;
          detail = "untwisted ranks wrong";
        }
      }
  report(7, "homology grid", ok, detail);
}

void criterion_8_linking_identities() {
  Rng rng(8);
  bool ok = true;
  std::string detail;
  std::vector<std::vector<int>> sign_patterns{{1}, {-1}, {1, -1}, {1, 1, -1}, {-1, 1, -1}};
  for (const auto& signs : sign_patterns) {
    const int c = static_cast<int>(signs.size());
    for (int g = 0; g <= 2; ++g) {
      for (int i = 0; i < c; ++i) {
        StdCokerElem xi;
        xi.a.assign(static_cast<size_t>(c), 0);
        xi.b.assign(static_cast<size_t>(c), 0);
        xi.e.assign(static_cast<size_t>(2 * g), 0);
        xi.a[i] = 1;
        if (!frac_equal(std_bl_value(xi, xi, signs, g),
                        FracValue{LaurentPoly(signs[i]), z_poly()})) {
          ok = false;
          detail = "diagonal value wrong";
        }
      }
    }
  }
  const std::vector<int> signs{1, 1, -1};
  const int c = 3, g = 2;
  auto random_elem = [&](Rng& r) {
    StdCokerElem e;
    e.a.assign(static_cast<size_t>(c), 0);
    e.b.assign(static_cast<size_t>(c), 0);
    e.e.assign(static_cast<size_t>(2 * g), 0);
    for (auto& v : e.a) v = r.range(-4, 4);
    for (auto& v : e.b) v = r.range(-4, 4);
    for (auto& v : e.e) v = r.range(-4, 4);
    return e;
  };
  for (int trial = 0; trial < 1000 && ok; ++trial) {
    StdCokerElem u = random_elem(rng), v = random_elem(rng);
    FracValue uv = std_bl_value(u, v, signs, g);
    if (!frac_equal(uv, frac_involute(std_bl_value(v, u, signs, g)))) {
      ok = false;
      detail = "hermitian symmetry failed";
    }
    // (t-1)^2 annihilates x-type rows; (t-1) annihilates y-type rows
    StdCokerElem x0 = random_elem(rng);
    x0.e.assign(static_cast<size_t>(2 * g), 0);
    if (!frac_scale(t_minus_one_pow(2), std_bl_value(x0, v, signs, g)).is_integral()) {
      ok = false;
      detail = "x annihilator failed";
    }
    StdCokerElem y0 = random_elem(rng);
    y0.a.assign(static_cast<size_t>(c), 0);
    y0.b.assign(static_cast<size_t>(c), 0);
    if (!frac_scale(t_minus_one(), std_bl_value(y0, v, signs, g)).is_integral()) {
      ok = false;
      detail = "y annihilator failed";
    }
  }
  report(8, "linking-form identities", ok, detail.empty() ? "1000 random pairs" : detail);
}

void criterion_9_unknotting() {
  Rng rng(9);
  bool ok = true;
  std::string detail;
  int done = 0;
  while (done < 100) {
    int n = 1 + static_cast<int>(rng.below(4));
    PolyMat m(static_cast<size_t>(n), std::vector<LaurentPoly>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        LaurentPoly p;
        for (int term = 0; term < 2; ++term)
          p += LaurentPoly::monomial(Int(rng.range(-5, 5)), static_cast<int>(rng.range(-1, 1)));
        m[i][j] = p;
      }
    PolyMat mt = poly_involute_transpose(m);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m[i][j] += mt[i][j];
    HermMatrix a(m);
    if (a.eval_one().is_zero() && n > 1) continue;  // keep the sample varied
    PolyMat scaled = a.entries();
    for (auto& row : scaled)
      for (auto& e : row) e = e * z_poly();
    auto r = factor_out_z(HermMatrix(scaled));
    if (!r.quotient || !(*r.quotient == a)) {
      ok = false;
      detail = "z-factorization round-trip failed";
      break;
    }
    ++done;
  }
  HermMatrix trefoil(PolyMat{{twist_alexander(-1)}});
  if (!check_unknotting_condition(trefoil, 1, 0, 2).all_pass()) {
    ok = false;
    detail = "trefoil condition should pass";
  }
  for (long n = -12; n <= 12; ++n) {
    HermMatrix a(PolyMat{{twist_alexander(n)}});
    if (check_unknotting_condition(a, 0, 1, 3).all_pass()) {
      ok = false;
      detail = "sign obstruction missed at n=" + std::to_string(n);
    }
  }
  report(9, "unknotting condition", ok, detail.empty() ? "100 round-trips + sign checks" : detail);
}

void criterion_10_quotient() {
  bool ok = true;
  for (long bound : {1L, 2L, 4L, 9L, 20L})
    if (quotient_size_1_0(bound) != 2) ok = false;
  report(10, "boundary automorphism quotient", ok, "independent of the bound");
}

}  // namespace

int main() {
  criterion_1_unit_table();
  criterion_2_disk_counts();
  criterion_3_decompose_roundtrip();
  criterion_4_definite_roundtrip();
  criterion_5_orthogonal_enumeration();
  criterion_6_generator_validity();
  criterion_7_homology_grid();
  criterion_8_linking_identities();
  criterion_9_unknotting();
  criterion_10_quotient();
  if (failures == 0) {
    std::cout << "all acceptance criteria pass" << std::endl;
    return 0;
  }
  std::cout << failures << " criteria failed" << std::endl;
  return 1;
}
