#pragma once

// Checks of the three parts of the info/good/max lemma for one antecedent
// family at one pointed model, using the reference evaluator.

#include <string>

#include "epistemic/translate.hpp"
#include "support/reference.hpp"

namespace lemma {

// Empty when all three parts hold at every world of the model relative to x;
// otherwise a description of the first failure.
std::string check(const epi::NamedDnf& theta, const epi::Model& m, const ref::State& x);

}  // namespace lemma
