#pragma once

#include <optional>
#include <span>

#include "epistemic/formula.hpp"
#include "epistemic/model.hpp"
#include "epistemic/oracle.hpp"

namespace epi {

// Outcome of a decision procedure. For satisfiability the witness is a
// satisfying context; for validity it is a countermodel. Every witness has
// been checked against the queried formula by direct evaluation.
struct Verdict {
  bool decided = false;
  std::optional<Countermodel> witness;

  explicit operator bool() const { return decided; }
};

inline constexpr int kMaxPropAtoms = 20;

// Exhaustive over assignments. Witness: a one-world model, context (0, {}).
// Throws PreconditionError on modal input, ResourceLimit past kMaxPropAtoms.
Verdict prop_sat(const Formula& f);

// Conditional- and update-free input only. Decided from the K45 DNF: a
// disjunct pi & []b & <>c1 & ... & <>cm is satisfiable iff pi and each
// b & ci are. Witness: world 0 satisfies pi, world i satisfies b & ci, and
// X = {1..m} (empty when m = 0).
Verdict k45_satisfiable(const Formula& f);
Verdict k45_valid(const Formula& f);

// Validity under the Yalcin reading: k45_valid of the conditional-free
// equivalent. A countermodel falsifies f itself under that reading.
Verdict yalcin_theorem(const Formula& f);

// Whether every state accepting all premises accepts the goal, decided as the
// theoremhood of ([]s1 & ... & []sn) -> []goal. A countermodel's state
// accepts the premises and not the goal.
Verdict informational_consequence(std::span<const Formula> premises, const Formula& goal);

// Validity under the maximal-subset reading, through dagger. A countermodel
// falsifies f itself under that reading.
Verdict km_valid(const Formula& f);

}  // namespace epi
