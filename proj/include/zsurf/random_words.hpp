#pragma once

// Seeded random generator words and orthogonal matrices, shared by the
// CLI and the round-trip test protocols.

#include "zsurf/isometry.hpp"
#include "zsurf/rng.hpp"

namespace zsurf {

// A random word of realized tokens (ScaleT, Pmove, Qmove, SpMove) valid
// in the context; SpMoves are short products of symplectic transvections.
Word random_realized_word(Rng& rng, const StdModuleContext& ctx, int length);

// A random word of NegX / PermX tokens valid in the context.
Word random_signed_perm_word(Rng& rng, const StdModuleContext& ctx, int length);

// A random element of O(c+, c-; Z) of height <= height, drawn uniformly
// from the bounded enumeration.
IntOrthogonal random_orthogonal(Rng& rng, int c_plus, int c_minus, int height);

}  // namespace zsurf
