#pragma once

#include <random>
#include <string>
#include <vector>

#include "epistemic/formula.hpp"
#include "epistemic/normal.hpp"

namespace gen {

struct Shape {
  std::vector<std::string> atoms{"p", "q"};
  int depth = 3;          // operator nesting
  int max_conditionals = 0;
  bool updates = false;
  bool modal = true;      // false: only ~ & | over atoms and bot
};

// Random formula of the given shape; deterministic for a given engine state.
epi::Formula formula(std::mt19937_64& rng, const Shape& shape);

// Random depth-one disjunct with nonmodal components over `atoms`.
epi::DnfDisjunct disjunct(std::mt19937_64& rng, const std::vector<std::string>& atoms,
                          int max_diamonds);

}  // namespace gen
