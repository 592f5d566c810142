#include "zsurf/random_words.hpp"

#include <stdexcept>

namespace zsurf {

namespace {

IntMat random_symplectic(Rng& rng, int g) {
  // short product of elementary transvections inside and across pairs
  IntMat a = IntMat::identity(2 * g);
  const int factors = static_cast<int>(rng.below(3)) + 1;
  for (int f = 0; f < factors; ++f) {
    IntMat t = IntMat::identity(2 * g);
    int k = static_cast<int>(rng.below(static_cast<uint64_t>(g)));
    long amount = rng.range(-2, 2);
    switch (rng.below(3)) {
      case 0: t.at(2 * k, 2 * k + 1) = amount; break;
      case 1: t.at(2 * k + 1, 2 * k) = amount; break;
      default: {
        // the rotation [[0,1],[-1,0]] on one pair
        t.at(2 * k, 2 * k) = 0;
        t.at(2 * k + 1, 2 * k + 1) = 0;
        t.at(2 * k, 2 * k + 1) = 1;
        t.at(2 * k + 1, 2 * k) = -1;
        break;
      }
    }
    a = a * t;
  }
  if (!is_symplectic(a)) throw std::logic_error("random_symplectic: lost symplecticity");
  return a;
}

}  // namespace

Word random_realized_word(Rng& rng, const StdModuleContext& ctx, int length) {
  const int c = ctx.c(), g = ctx.g;
  std::vector<int> kinds;
  if (c >= 1) kinds.push_back(0);             // ScaleT
  if (c >= 2) kinds.push_back(1);             // Pmove
  if (c >= 1 && g >= 1) kinds.push_back(2);   // Qmove
  if (g >= 1) kinds.push_back(3);             // SpMove
  Word word;
  if (kinds.empty()) return word;
  for (int step = 0; step < length; ++step) {
    GeneratorToken token;
    token.inverted = rng.flip();
    switch (kinds[rng.below(kinds.size())]) {
      case 0: {
        long k = 0;
        while (k == 0) k = rng.range(-2, 2);
        token.op = ScaleT{static_cast<int>(rng.below(static_cast<uint64_t>(c))), k};
        break;
      }
      case 1: {
        int i = static_cast<int>(rng.below(static_cast<uint64_t>(c)));
        int i2 = static_cast<int>(rng.below(static_cast<uint64_t>(c - 1)));
        if (i2 >= i) ++i2;
        token.op = Pmove{i, i2};
        break;
      }
      case 2:
        token.op = Qmove{static_cast<int>(rng.below(static_cast<uint64_t>(c))),
                         static_cast<int>(rng.below(static_cast<uint64_t>(2 * g)))};
        break;
      default:
        token.op = SpMove{random_symplectic(rng, g)};
        break;
    }
    word.push_back(std::move(token));
  }
  return word;
}

Word random_signed_perm_word(Rng& rng, const StdModuleContext& ctx, int length) {
  Word word;
  std::vector<int> classes;
  if (ctx.c_plus >= 1) classes.push_back(1);
  if (ctx.c_minus >= 1) classes.push_back(-1);
  if (classes.empty()) return word;
  for (int step = 0; step < length; ++step) {
    GeneratorToken token;
    if (rng.flip()) {
      token.op = NegX{static_cast<int>(rng.below(static_cast<uint64_t>(ctx.c())))};
    } else {
      int cls = classes[rng.below(classes.size())];
      int len = cls == 1 ? ctx.c_plus : ctx.c_minus;
      std::vector<int> sigma(static_cast<size_t>(len));
      for (int i = 0; i < len; ++i) sigma[i] = i;
      for (int i = len - 1; i > 0; --i)
        std::swap(sigma[i], sigma[rng.below(static_cast<uint64_t>(i + 1))]);
      token.op = PermX{std::move(sigma), cls};
    }
    word.push_back(std::move(token));
  }
  return word;
}

IntOrthogonal random_orthogonal(Rng& rng, int c_plus, int c_minus, int height) {
  std::vector<IntOrthogonal> all = enumerate_orthogonal(c_plus, c_minus, height);
  return all[rng.below(all.size())];
}

}  // namespace zsurf
