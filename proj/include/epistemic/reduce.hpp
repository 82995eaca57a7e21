#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "epistemic/formula.hpp"

namespace epi {

// An axiom schema of the Yalcin logic (K, 4, 5, I1-I7) or one of the
// reduction axioms A1-A4. Parameters are the schema letters in order; the
// ones listed in `nonmodal` must be instantiated with nonmodal formulas.
struct AxiomSchema {
  std::string name;
  std::vector<std::string> params;
  std::vector<std::size_t> nonmodal;
  std::string text;  // the schema itself, in concrete syntax

  std::size_t arity() const { return params.size(); }
};

// K, 4, 5, I1..I7, A1..A4 in that order.
const std::vector<AxiomSchema>& axiom_schemas();
// Throws PreconditionError for an unknown name.
const AxiomSchema& axiom_schema(std::string_view name);

// The schema with its letters replaced by `parts`. Throws PreconditionError
// on an arity mismatch or a violated nonmodality side-condition.
Formula instantiate(const AxiomSchema& schema, std::span<const Formula> parts);

// One conditional whose sides are conditional- and update-free, rewritten to
// an equivalent formula without conditionals (Yalcin reading): the
// consequent goes to K45 CNF and each clause pi | <>d | []b1 | ... becomes
//   [](a -> pi) | [](a -> b1) | ... | ~[](a -> ~d).
Formula reduce_step(const Formula& f);

// Equivalent update-free formula, pushing [a] through the body:
//   [a]p = p, [a]bot = bot, [a]~b = ~[a]b, [a] distributes over & and |,
//   [a][]b = [](a -> [a]b), [a]<>b = <>(a & [a]b).
// `announcement` and `body` must be free of conditionals and updates. Valid
// under either reading of the conditional.
Formula push_update(const Formula& announcement, const Formula& body);

// A conditional-free formula equivalent to f under the Yalcin reading at every
// context. Conditionals are removed innermost first. An update [a][]b becomes
// a => b; any other update is pushed through with push_update.
Formula eliminate_conditionals(const Formula& f);

}  // namespace epi
