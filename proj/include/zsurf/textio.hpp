#pragma once

// Text grammar and file formats: polynomials as signed `c*t^k` terms,
// matrices as {size, rows} records, generator words one token per line.

#include <string>

#include "zsurf/forms.hpp"
#include "zsurf/isometry.hpp"
#include "zsurf/laurent.hpp"

// vendored single-header json
#include "json.hpp"

namespace zsurf {

using Json = nlohmann::json;

// ascending by exponent, e.g. "-t^-1 + 2 - t"; "0" for zero
std::string poly_to_text(const LaurentPoly& p);
// signed terms `c*t^k`, `c`, `t^k`, `t` joined by +/-
LaurentPoly poly_from_text(const std::string& text);

// {"lowest": int, "coeffs": [int...]}
Json poly_to_json(const LaurentPoly& p);
LaurentPoly poly_from_json(const Json& j);

// {"size": n, "rows": [[poly-text, ...], ...]}
Json matrix_to_json(const PolyMat& m);
PolyMat matrix_from_json(const Json& j);
HermMatrix herm_from_json(const Json& j);

// integer matrices reuse the polynomial grammar (constant entries)
IntMat intmat_from_json(const Json& j);
Json intmat_to_json(const IntMat& m);

// one token per line: `scale_t i=1 k=-2`, `p i=1 i2=3 inv`, `q i=2 j=3`,
// `sp rows=[[...]]`, `neg i=1`, `perm sigma=[2,1,3] class=+`
// (indices are 1-based in the serialization)
std::string word_to_text(const Word& word);
Word word_from_text(const std::string& text);

std::string token_to_text(const GeneratorToken& token);

}  // namespace zsurf
