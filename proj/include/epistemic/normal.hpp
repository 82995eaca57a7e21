#pragma once

#include <span>
#include <vector>

#include "epistemic/formula.hpp"

namespace epi {

// pi & []box_part & <>d1 & ... & <>dm, every component nonmodal. A missing
// box part is ~bot.
struct DnfDisjunct {
  Formula pi;
  Formula box_part;
  std::vector<Formula> diamonds;
  bool operator==(const DnfDisjunct&) const = default;
};

// pi | <>diamond_part | []b1 | ... | []bm, every component nonmodal. A
// missing diamond part is bot.
struct CnfClause {
  Formula pi;
  Formula diamond_part;
  std::vector<Formula> boxes;
  bool operator==(const CnfClause&) const = default;
};

enum class Simplification {
  // Semantic when the formula has at most kMaxTableAtoms atoms.
  Auto,
  // Constant folding, duplicate removal, syntactic subsumption only.
  Syntactic,
  // Components handled as truth tables: unsatisfiable disjuncts dropped,
  // disjuncts sharing a modal part merged, subsumed disjuncts removed.
  Semantic,
};

struct NormalFormOptions {
  Simplification simplification = Simplification::Auto;
};

// Negation normal form of a conditional-free, update-free formula:
// negations only on atoms and bot.
Formula to_nnf(const Formula& f);

// Depth-one normal forms, equivalent to f at every pointed context. Output is
// duplicate-free and sorted by rendered components. Throw PreconditionError
// on formulas with conditionals or updates.
std::vector<DnfDisjunct> to_k45_dnf(const Formula& f, const NormalFormOptions& opts = {});
std::vector<CnfClause> to_k45_cnf(const Formula& f, const NormalFormOptions& opts = {});

Formula disjunct_to_formula(const DnfDisjunct& d);
Formula clause_to_formula(const CnfClause& c);
Formula dnf_to_formula(std::span<const DnfDisjunct> dnf);  // bot when empty
Formula cnf_to_formula(std::span<const CnfClause> cnf);    // ~bot when empty

}  // namespace epi
