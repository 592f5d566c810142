#include "zsurf/isometry.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace zsurf {

std::vector<int> StdModuleContext::signs() const {
  std::vector<int> s(static_cast<size_t>(c()));
  for (int i = 0; i < c(); ++i) s[i] = sign(i);
  return s;
}

IntMat StdModuleContext::t_action() const {
  // t x_i = x_i + (t-1) x_i, t (t-1) x_i = (t-1) x_i, t y_j = y_j
  IntMat m = IntMat::identity(dim());
  for (int i = 0; i < c(); ++i) m.at(c() + i, i) = 1;
  return m;
}

IntMat symplectic_j(int g) {
  IntMat j(2 * g, 2 * g);
  for (int k = 0; k < g; ++k) {
    j.at(2 * k, 2 * k + 1) = 1;
    j.at(2 * k + 1, 2 * k) = -1;
  }
  return j;
}

bool is_symplectic(const IntMat& a) {
  if (!a.is_square() || a.rows() % 2 != 0) return false;
  IntMat j = symplectic_j(a.rows() / 2);
  return a.transpose() * j * a == j;
}

namespace {

// Columns are the module coordinates (over Z[t^{+-1}], in the dual basis
// of the standard form) of the Z-basis vectors x_i, (t-1)x_i, y_j.
PolyMat coordinate_map(const StdModuleContext& ctx) {
  const int c = ctx.c(), g2 = 2 * ctx.g;
  PolyMat cm(static_cast<size_t>(c + g2),
             std::vector<LaurentPoly>(static_cast<size_t>(ctx.dim())));
  for (int i = 0; i < c; ++i) {
    cm[i][i] = LaurentPoly::one();
    cm[i][c + i] = t_minus_one();
  }
  for (int j = 0; j < g2; ++j) cm[c + j][2 * c + j] = LaurentPoly::one();
  return cm;
}

PolyMat to_poly(const IntMat& m) {
  PolyMat out(static_cast<size_t>(m.rows()),
              std::vector<LaurentPoly>(static_cast<size_t>(m.cols())));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j)
      if (m.at(i, j) != 0) out[i][j] = LaurentPoly(m.at(i, j));
  return out;
}

// V^T adj(A) conj(V) for the Gram values of the columns of V
PolyMat gram_numerators(const PolyMat& v, const PolyMat& adj) {
  PolyMat vt(v[0].size(), std::vector<LaurentPoly>(v.size()));
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = 0; j < v[0].size(); ++j) vt[j][i] = v[i][j];
  return poly_mul(poly_mul(vt, adj), poly_involute_transpose(vt));
}

}  // namespace

std::string isometry_violation(const StdModuleContext& ctx, const IntMat& m) {
  if (m.rows() != ctx.dim() || m.cols() != ctx.dim()) return "size mismatch with context";
  Int d = m.det();
  if (d != 1 && d != -1) return "determinant is not a unit";
  IntMat t = ctx.t_action();
  if (!(m * t == t * m)) return "does not commute with the t-action";
  const StdFormData& data = std_form_data(ctx.signs(), ctx.g);
  PolyMat cm = coordinate_map(ctx);
  PolyMat before = gram_numerators(cm, data.adj);
  PolyMat after = gram_numerators(poly_mul(cm, to_poly(m)), data.adj);
  for (int i = 0; i < ctx.dim(); ++i)
    for (int j = 0; j < ctx.dim(); ++j)
      if (!exact_divide(after[i][j] - before[i][j], data.det))
        return "does not preserve the linking form";
  return "";
}

IsometryMatrix::IsometryMatrix(StdModuleContext ctx, IntMat m)
    : ctx_(ctx), m_(std::move(m)) {
  std::string err = isometry_violation(ctx_, m_);
  if (!err.empty()) throw std::invalid_argument("IsometryMatrix: " + err);
}

namespace {

IntMat token_matrix(const GeneratorToken& token, const StdModuleContext& ctx) {
  const int c = ctx.c(), g = ctx.g, d = ctx.dim();
  IntMat m = IntMat::identity(d);

  if (const auto* s = std::get_if<ScaleT>(&token.op)) {
    if (s->i < 0 || s->i >= c) throw std::invalid_argument("ScaleT: index out of range");
    m.at(c + s->i, s->i) = s->k;  // x_i -> x_i + k (t-1) x_i
  } else if (const auto* p = std::get_if<Pmove>(&token.op)) {
    if (p->i < 0 || p->i >= c || p->i2 < 0 || p->i2 >= c || p->i == p->i2)
      throw std::invalid_argument("Pmove: invalid indices");
    m.at(c + p->i2, p->i) = ctx.sign(p->i2);  // x_i -> x_i + eps_{i'} (t-1) x_{i'}
    m.at(c + p->i, p->i2) = ctx.sign(p->i);   // x_{i'} -> eps_i (t-1) x_i + x_{i'}
  } else if (const auto* q = std::get_if<Qmove>(&token.op)) {
    if (q->i < 0 || q->i >= c || q->j < 0 || q->j >= 2 * g)
      throw std::invalid_argument("Qmove: invalid indices");
    const int base = 2 * c;
    if (q->j % 2 == 0) {
      // x_i -> x_i + y_j; y_{j+1} -> eps_i (t-1) x_i - y_j + y_{j+1}
      m.at(base + q->j, q->i) = 1;
      m.at(c + q->i, base + q->j + 1) = ctx.sign(q->i);
      m.at(base + q->j, base + q->j + 1) = -1;
    } else {
      // x_i -> x_i + y_j; y_{j-1} -> -eps_i (t-1) x_i + y_{j-1} + y_j.
      // The minus sign is what form preservation forces once the first
      // slot is the linear one.
      m.at(base + q->j, q->i) = 1;
      m.at(c + q->i, base + q->j - 1) = -ctx.sign(q->i);
      m.at(base + q->j, base + q->j - 1) = 1;
    }
  } else if (const auto* sp = std::get_if<SpMove>(&token.op)) {
    if (sp->a.rows() != 2 * g || sp->a.cols() != 2 * g)
      throw std::invalid_argument("SpMove: matrix size does not match genus");
    if (!is_symplectic(sp->a)) throw std::invalid_argument("SpMove: matrix is not symplectic");
    for (int r = 0; r < 2 * g; ++r)
      for (int cc = 0; cc < 2 * g; ++cc) m.at(2 * c + r, 2 * c + cc) = sp->a.at(r, cc);
  } else if (const auto* nx = std::get_if<NegX>(&token.op)) {
    if (nx->i < 0 || nx->i >= c) throw std::invalid_argument("NegX: index out of range");
    m.at(nx->i, nx->i) = -1;
    m.at(c + nx->i, c + nx->i) = -1;
  } else if (const auto* px = std::get_if<PermX>(&token.op)) {
    const int offset = px->sign_class == 1 ? 0 : ctx.c_plus;
    const int len = px->sign_class == 1 ? ctx.c_plus : ctx.c_minus;
    if (px->sign_class != 1 && px->sign_class != -1)
      throw std::invalid_argument("PermX: sign class must be +-1");
    if (static_cast<int>(px->sigma.size()) != len)
      throw std::invalid_argument("PermX: permutation length does not match sign class");
    std::vector<bool> seen(static_cast<size_t>(len), false);
    for (int v : px->sigma) {
      if (v < 0 || v >= len || seen[v]) throw std::invalid_argument("PermX: not a permutation");
      seen[v] = true;
    }
    for (int i = 0; i < len; ++i) {
      m.at(offset + i, offset + i) = 0;
      m.at(c + offset + i, c + offset + i) = 0;
    }
    for (int i = 0; i < len; ++i) {
      m.at(offset + px->sigma[i], offset + i) = 1;
      m.at(c + offset + px->sigma[i], c + offset + i) = 1;
    }
  }

  if (token.inverted) {
    auto inv = m.inverse_unimodular();
    if (!inv) throw std::logic_error("token_matrix: generator not invertible");
    return *inv;
  }
  return m;
}

}  // namespace

IsometryMatrix gen(const GeneratorToken& token, const StdModuleContext& ctx) {
  return IsometryMatrix(ctx, token_matrix(token, ctx));
}

namespace {

bool same_token(const GeneratorToken& a, const GeneratorToken& b) {
  if (a.inverted != b.inverted || a.op.index() != b.op.index()) return false;
  if (const auto* s = std::get_if<ScaleT>(&a.op))
    return s->i == std::get<ScaleT>(b.op).i && s->k == std::get<ScaleT>(b.op).k;
  if (const auto* p = std::get_if<Pmove>(&a.op))
    return p->i == std::get<Pmove>(b.op).i && p->i2 == std::get<Pmove>(b.op).i2;
  if (const auto* q = std::get_if<Qmove>(&a.op))
    return q->i == std::get<Qmove>(b.op).i && q->j == std::get<Qmove>(b.op).j;
  if (const auto* sp = std::get_if<SpMove>(&a.op)) return sp->a == std::get<SpMove>(b.op).a;
  if (const auto* n = std::get_if<NegX>(&a.op)) return n->i == std::get<NegX>(b.op).i;
  if (const auto* px = std::get_if<PermX>(&a.op))
    return px->sigma == std::get<PermX>(b.op).sigma &&
           px->sign_class == std::get<PermX>(b.op).sign_class;
  return false;
}

IntMat int_pow(IntMat base, size_t e) {
  IntMat acc = IntMat::identity(base.rows());
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

}  // namespace

IsometryMatrix eval_word(const Word& word, const StdModuleContext& ctx) {
  // runs of a repeated token are exponentiated by squaring
  IntMat m = IntMat::identity(ctx.dim());
  size_t pos = 0;
  while (pos < word.size()) {
    size_t run = 1;
    while (pos + run < word.size() && same_token(word[pos], word[pos + run])) ++run;
    m = m * int_pow(token_matrix(word[pos], ctx), run);
    pos += run;
  }
  return IsometryMatrix(ctx, std::move(m));
}

bool is_orthogonal(const IntOrthogonal& n) {
  const int c = n.c_plus + n.c_minus;
  if (n.n.rows() != c || n.n.cols() != c) return false;
  IntMat eps = diag_signature_matrix(n.c_plus, n.c_minus);
  return n.n * eps * n.n.transpose() == eps;
}

IsometryMatrix boundary_of_orthogonal(const IntOrthogonal& n, const StdModuleContext& ctx) {
  if (n.c_plus != ctx.c_plus || n.c_minus != ctx.c_minus)
    throw std::invalid_argument("boundary_of_orthogonal: signature mismatch with context");
  if (!is_orthogonal(n)) throw std::invalid_argument("boundary_of_orthogonal: N is not orthogonal");
  const int c = ctx.c();
  // (varpi^*)^{-1} = eps N eps on the duals
  IntMat eps = diag_signature_matrix(ctx.c_plus, ctx.c_minus);
  IntMat x_block = eps * n.n * eps;
  IntMat m = IntMat::identity(ctx.dim());
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      m.at(i, j) = x_block.at(i, j);
      m.at(c + i, c + j) = x_block.at(i, j);
    }
  return IsometryMatrix(ctx, std::move(m));
}

namespace {

struct Blocks {
  IntMat xx, bx, cx, dy, ey;  // named by (row-part)(column-part)
};

Blocks split_blocks(const StdModuleContext& ctx, const IntMat& m) {
  const int c = ctx.c(), g2 = 2 * ctx.g;
  Blocks b{IntMat(c, c), IntMat(c, c), IntMat(g2, c), IntMat(c, g2), IntMat(g2, g2)};
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < c; ++j) {
      b.xx.at(i, j) = m.at(i, j);
      b.bx.at(i, j) = m.at(c + i, j);
    }
  for (int i = 0; i < g2; ++i)
    for (int j = 0; j < c; ++j) b.cx.at(i, j) = m.at(2 * c + i, j);
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < g2; ++j) b.dy.at(i, j) = m.at(c + i, 2 * c + j);
  for (int i = 0; i < g2; ++i)
    for (int j = 0; j < g2; ++j) b.ey.at(i, j) = m.at(2 * c + i, 2 * c + j);
  return b;
}

IntMat sp_block_matrix(const StdModuleContext& ctx, const IntMat& a) {
  IntMat m = IntMat::identity(ctx.dim());
  for (int r = 0; r < 2 * ctx.g; ++r)
    for (int c2 = 0; c2 < 2 * ctx.g; ++c2) m.at(2 * ctx.c() + r, 2 * ctx.c() + c2) = a.at(r, c2);
  return m;
}

// Qmove(i, j)^m together with the symplectic transvection cancelling its
// E part; the run contributes m to the (j, i) entry of the C block and
// nothing to E.
void append_q_run(Word& word, const StdModuleContext& ctx, int i, int j, const Int& m) {
  if (m == 0) return;
  if (!m.fits_slong_p()) throw std::logic_error("decompose: Qmove exponent overflow");
  const long k = m.get_si();
  for (long a = 0; a < std::abs(k); ++a) word.push_back({Qmove{i, j}, k < 0});
  IntMat t = IntMat::identity(2 * ctx.g);
  if (j % 2 == 0)
    t.at(j, j + 1) = k;  // undo y_{j+1} -> -k y_j + y_{j+1}
  else
    t.at(j, j - 1) = -k;  // undo y_{j-1} -> k y_j + y_{j-1}
  word.push_back({SpMove{std::move(t)}, false});
}

}  // namespace

Decomposition decompose(const IsometryMatrix& f) {
  const StdModuleContext& ctx = f.ctx();
  const int c = ctx.c(), g2 = 2 * ctx.g;
  const IntMat eps = diag_signature_matrix(ctx.c_plus, ctx.c_minus);

  // Step 1: read the pure-x coefficients of f(x_i) and peel off the
  // boundary isometry they determine.
  Blocks fb = split_blocks(ctx, f.matrix());
  if (!(fb.xx.transpose() * eps * fb.xx == eps))
    throw std::invalid_argument("decompose: extracted N is not orthogonal");
  IntOrthogonal n{ctx.c_plus, ctx.c_minus, eps * fb.xx * eps};
  IntMat dn = boundary_of_orthogonal(n, ctx).matrix();
  auto dn_inv = dn.inverse_unimodular();
  IntMat r = f.matrix() * (*dn_inv);

  Blocks rb = split_blocks(ctx, r);
  if (!rb.xx.is_identity()) throw std::logic_error("decompose: x block not normalized");

  Word word;

  // Step 2: clear the y parts of the x columns with Qmove runs.  The
  // paired transvections keep the running E block equal to the identity,
  // so the C contributions are additive.
  for (int i = 0; i < c; ++i)
    for (int j = 0; j < g2; ++j) append_q_run(word, ctx, i, j, rb.cx.at(j, i));

  // Step 3: one SpMove carries the whole E block.
  IntMat q_hat = eval_word(word, ctx).matrix();
  auto q_inv = q_hat.inverse_unimodular();
  IntMat r2 = (*q_inv) * r;
  Blocks r2b = split_blocks(ctx, r2);
  if (!r2b.cx.is_zero()) throw std::logic_error("decompose: C block did not clear");
  if (!is_symplectic(r2b.ey))
    throw std::invalid_argument("decompose: E block is not symplectic");
  if (!r2b.ey.is_identity()) word.push_back({SpMove{r2b.ey}, false});
  auto sp_inv = sp_block_matrix(ctx, r2b.ey).inverse_unimodular();
  IntMat r3 = (*sp_inv) * r2;
  Blocks r3b = split_blocks(ctx, r3);
  if (!r3b.dy.is_zero() || !r3b.ey.is_identity() || !r3b.cx.is_zero())
    throw std::invalid_argument("decompose: input is not an isometry of the standard module");

  // Step 4: the remaining (t-1)-level coefficients are ScaleT exponents
  // on the diagonal and Pmove exponents off it.
  for (int i = 0; i < c; ++i) {
    Int k = r3b.bx.at(i, i);
    if (k != 0) {
      if (!k.fits_slong_p()) throw std::logic_error("decompose: ScaleT exponent overflow");
      word.push_back({ScaleT{i, k.get_si()}, false});
    }
  }
  for (int i = 0; i < c; ++i)
    for (int i2 = i + 1; i2 < c; ++i2) {
      Int lhs = ctx.sign(i) * r3b.bx.at(i, i2);
      Int rhs = ctx.sign(i2) * r3b.bx.at(i2, i);
      if (lhs != rhs)
        throw std::invalid_argument("decompose: (t-1) coefficients violate hermitian symmetry");
      const Int& m = rhs;  // Pmove(i,i2)^m adds m eps_{i2} to bx(i2,i)
      if (!m.fits_slong_p()) throw std::logic_error("decompose: Pmove exponent overflow");
      for (long a = 0; a < std::abs(m.get_si()); ++a)
        word.push_back({Pmove{i, i2}, m < 0});
    }

  // exact recomposition check
  if (!(eval_word(word, ctx).matrix() * dn == f.matrix()))
    throw std::logic_error("decompose: recomposition mismatch");
  return {std::move(word), std::move(n)};
}

std::pair<std::vector<int>, std::vector<int>> signed_permutation_parts(const IntMat& n) {
  const int c = n.rows();
  std::vector<int> sigma(static_cast<size_t>(c), -1), signs(static_cast<size_t>(c), 0);
  for (int j = 0; j < c; ++j) {
    for (int i = 0; i < c; ++i) {
      const Int& v = n.at(i, j);
      if (v == 0) continue;
      if ((v != 1 && v != -1) || sigma[j] >= 0)
        throw std::invalid_argument("signed_permutation_parts: not a signed permutation");
      sigma[j] = i;
      signs[j] = v > 0 ? 1 : -1;
    }
    if (sigma[j] < 0) throw std::invalid_argument("signed_permutation_parts: zero column");
  }
  return {sigma, signs};
}

DefiniteDecomposition decompose_definite(const IsometryMatrix& f) {
  const StdModuleContext& ctx = f.ctx();
  if (ctx.c_plus != 0 && ctx.c_minus != 0)
    throw std::invalid_argument("decompose_definite: context is indefinite");
  Decomposition d = decompose(f);
  auto [sigma, signs] = signed_permutation_parts(d.n.n);

  DefiniteDecomposition out{std::move(d.word), {}};
  bool trivial = true;
  for (size_t i = 0; i < sigma.size(); ++i)
    if (sigma[i] != static_cast<int>(i)) trivial = false;
  if (!trivial)
    out.signed_perm_word.push_back({PermX{sigma, ctx.c_plus > 0 ? 1 : -1}, false});
  for (size_t i = 0; i < signs.size(); ++i)
    if (signs[i] < 0) out.signed_perm_word.push_back({NegX{static_cast<int>(i)}, false});

  Word all = out.word;
  all.insert(all.end(), out.signed_perm_word.begin(), out.signed_perm_word.end());
  if (!(eval_word(all, ctx) == f)) throw std::logic_error("decompose_definite: mismatch");
  return out;
}

DefiniteDecomposition decompose_11(const IsometryMatrix& f) {
  const StdModuleContext& ctx = f.ctx();
  if (ctx.c_plus != 1 || ctx.c_minus != 1)
    throw std::invalid_argument("decompose_11: context must have c+ = c- = 1");
  Decomposition d = decompose(f);
  if (d.n.n.at(0, 1) != 0 || d.n.n.at(1, 0) != 0)
    throw std::invalid_argument("decompose_11: off-diagonal orthogonal part");

  DefiniteDecomposition out{std::move(d.word), {}};
  for (int i = 0; i < 2; ++i)
    if (d.n.n.at(i, i) < 0) out.signed_perm_word.push_back({NegX{i}, false});

  Word all = out.word;
  all.insert(all.end(), out.signed_perm_word.begin(), out.signed_perm_word.end());
  if (!(eval_word(all, ctx) == f)) throw std::logic_error("decompose_11: mismatch");
  return out;
}

std::vector<IntOrthogonal> enumerate_orthogonal(int c_plus, int c_minus, int height) {
  const int c = c_plus + c_minus;
  std::vector<IntOrthogonal> out;
  if (c == 0) {
    out.push_back({0, 0, IntMat(0, 0)});
    return out;
  }
  IntMat eps = diag_signature_matrix(c_plus, c_minus);
  auto eps_dot = [&](const std::vector<long>& a, const std::vector<long>& b) {
    Int s = 0;
    for (int k = 0; k < c; ++k) s += Int(a[k]) * b[k] * eps.at(k, k);
    return s;
  };

  // candidate rows for each target norm (+1 / -1)
  std::vector<std::vector<long>> plus_rows, minus_rows;
  std::vector<long> cur(static_cast<size_t>(c));
  std::function<void(int)> build = [&](int pos) {
    if (pos == c) {
      Int norm = eps_dot(cur, cur);
      if (norm == 1) plus_rows.push_back(cur);
      if (norm == -1) minus_rows.push_back(cur);
      return;
    }
    for (long v = -height; v <= height; ++v) {
      cur[pos] = v;
      build(pos + 1);
    }
  };
  build(0);

  std::vector<std::vector<long>> rows;
  std::function<void(int)> place = [&](int i) {
    if (i == c) {
      IntMat n(c, c);
      for (int r = 0; r < c; ++r)
        for (int j = 0; j < c; ++j) n.at(r, j) = rows[r][j];
      IntOrthogonal cand{c_plus, c_minus, std::move(n)};
      if (is_orthogonal(cand)) out.push_back(std::move(cand));
      return;
    }
    const auto& pool = i < c_plus ? plus_rows : minus_rows;
    for (const auto& r : pool) {
      bool ok = true;
      for (int j = 0; j < i && ok; ++j)
        if (eps_dot(rows[j], r) != 0) ok = false;
      if (!ok) continue;
      rows.push_back(r);
      place(i + 1);
      rows.pop_back();
    }
  };
  place(0);
  return out;
}

}  // namespace zsurf
