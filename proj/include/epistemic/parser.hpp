#pragma once

#include <string>
#include <string_view>

#include "epistemic/formula.hpp"

namespace epi {

// Concrete syntax, tightest to loosest:
//   ~f   []f   <>f   [g]f        prefix operators
//   f & g                        left-associative
//   f | g                        left-associative
//   f -> g                       right-associative, sugar for ~f | g
//   f <-> g                      non-associative, sugar for (f->g)&(g->f)
//   f => g                       non-associative indicative conditional
// Atoms match [a-z][a-z0-9_]*; `bot` and `top` (sugar for ~bot) are
// constants. Throws SyntaxError with a 1-based line/column.
Formula parse(std::string_view text);

// Canonical text with the fewest parentheses that still parse back to the
// same tree. Deterministic.
std::string render(const Formula& f);

}  // namespace epi
