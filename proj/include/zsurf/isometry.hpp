#pragma once

// The automorphism group of the standard boundary module
// (Z[t^{+-1}]/(t-1)^2)^c (+) Z_eps^{2g}: generator isometries, word
// evaluation, the constructive decompositions into generators times the
// boundary of an integer orthogonal matrix, and bounded enumeration of
// O(c+,c-;Z).
//
// Matrices act on coordinates with respect to the fixed Z-basis
// (x_1..x_c, (t-1)x_1..(t-1)x_c, y_1..y_{2g}); columns are images.

#include <string>
#include <variant>
#include <vector>

#include "zsurf/intmat.hpp"
#include "zsurf/linking.hpp"

namespace zsurf {

struct StdModuleContext {
  int c_plus = 0, c_minus = 0, g = 0;

  int c() const { return c_plus + c_minus; }
  int dim() const { return 2 * c() + 2 * g; }
  // +1 for i < c_plus, -1 after (0-based)
  std::vector<int> signs() const;
  int sign(int i) const { return i < c_plus ? 1 : -1; }
  // unipotent on the x part, identity on the y part
  IntMat t_action() const;

  friend bool operator==(const StdModuleContext&, const StdModuleContext&) = default;
};

// Generator tokens, following the realized isometry families plus the
// sign-flip and permutation isometries.  Indices are 0-based internally.
struct ScaleT {
  int i;
  long k;
};
struct Pmove {
  int i, i2;
};
struct Qmove {
  int i, j;  // j in [0, 2g): even j pairs with y_{j+1}, odd j with y_{j-1}
};
struct SpMove {
  IntMat a;  // 2g x 2g, A^T J A = J
};
struct NegX {
  int i;
};
struct PermX {
  std::vector<int> sigma;  // image list within the sign class, 0-based
  int sign_class;          // +1 or -1
};

struct GeneratorToken {
  std::variant<ScaleT, Pmove, Qmove, SpMove, NegX, PermX> op;
  bool inverted = false;
};

using Word = std::vector<GeneratorToken>;

// standard symplectic matrix J = (+)_k [[0,1],[-1,0]]
IntMat symplectic_j(int g);
bool is_symplectic(const IntMat& a);

class IsometryMatrix {
public:
  // validates all three invariants: determinant +-1, t-equivariance,
  // preservation of the standard Blanchfield values on basis pairs
  IsometryMatrix(StdModuleContext ctx, IntMat m);

  const StdModuleContext& ctx() const { return ctx_; }
  const IntMat& matrix() const { return m_; }

  friend bool operator==(const IsometryMatrix&, const IsometryMatrix&) = default;

private:
  StdModuleContext ctx_;
  IntMat m_;
};

// why a candidate matrix fails to be an isometry, for error messages
std::string isometry_violation(const StdModuleContext& ctx, const IntMat& m);

// The matrix of a single generator (inversion flag applied).
IsometryMatrix gen(const GeneratorToken& token, const StdModuleContext& ctx);

// Left-to-right product: eval_word({a, b, c}) = M(a) * M(b) * M(c).
IsometryMatrix eval_word(const Word& word, const StdModuleContext& ctx);

struct IntOrthogonal {
  int c_plus = 0, c_minus = 0;
  IntMat n;  // satisfies n * I_{c+,c-} * n^T = I_{c+,c-}
};

bool is_orthogonal(const IntOrthogonal& n);

// The induced boundary isometry: x and (t-1)x blocks carry the matrix
// (varpi^*)^{-1} = eps N eps determined by N, identity on the y part.
IsometryMatrix boundary_of_orthogonal(const IntOrthogonal& n, const StdModuleContext& ctx);

struct Decomposition {
  Word word;  // ScaleT / Pmove / Qmove / SpMove tokens only
  IntOrthogonal n;
};

// f = eval_word(word) o boundary_of_orthogonal(n), exactly.
Decomposition decompose(const IsometryMatrix& f);

struct DefiniteDecomposition {
  Word word;              // realized tokens
  Word signed_perm_word;  // NegX / PermX tokens
};

// Definite contexts (c_minus = 0 or c_plus = 0):
// f = eval_word(word ++ signed_perm_word).
DefiniteDecomposition decompose_definite(const IsometryMatrix& f);

// c_plus = c_minus = 1: the sign word only uses NegX tokens.
DefiniteDecomposition decompose_11(const IsometryMatrix& f);

// All N with N I_{c+,c-} N^T = I_{c+,c-} and |entries| <= height, by
// backtracking row search with norm pruning; complete within the bound.
std::vector<IntOrthogonal> enumerate_orthogonal(int c_plus, int c_minus, int height);

// signed permutation split N = P_sigma * diag(s): (sigma, signs)
std::pair<std::vector<int>, std::vector<int>> signed_permutation_parts(const IntMat& n);

}  // namespace zsurf
