#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "epistemic/formula.hpp"
#include "epistemic/model.hpp"
#include "epistemic/semantics.hpp"

namespace epi {

// Bounded, exhaustive search over small models. These are refuters: a
// witness is conclusive, its absence only covers the bounds.

struct SearchBounds {
  std::vector<std::string> atoms;
  int max_worlds = 3;
};

struct Countermodel {
  Model model;
  PointedContext context;
};

struct CounterState {
  Model model;
  WorldSet state;
};

// Called for each model of the space (by index); returns the first witness
// within that model or nothing.
template <typename T>
using ModelProbe = std::function<std::optional<T>(std::uint64_t, const Model&)>;

// The first witness in enumeration order, scanning models one by one.
std::optional<Countermodel> first_witness_serial(const ModelSpace& space,
                                                 const ModelProbe<Countermodel>& probe);
// Same result, models scanned in parallel (OpenMP when available). The
// lowest model index with a witness wins, so output matches the serial scan.
std::optional<Countermodel> first_witness(const ModelSpace& space,
                                          const ModelProbe<Countermodel>& probe);

// First (model, context) in enumeration order at which f is false.
std::optional<Countermodel> validity_search(const Formula& f, SemanticsMode mode,
                                            const SearchBounds& bounds);
std::optional<Countermodel> validity_search_serial(const Formula& f, SemanticsMode mode,
                                                   const SearchBounds& bounds);

// First (model, context) at which f under mode_f and g under mode_g differ.
std::optional<Countermodel> disagreement_search(const Formula& f, SemanticsMode mode_f,
                                                const Formula& g, SemanticsMode mode_g,
                                                const SearchBounds& bounds);
std::optional<Countermodel> disagreement_search_serial(const Formula& f, SemanticsMode mode_f,
                                                       const Formula& g, SemanticsMode mode_g,
                                                       const SearchBounds& bounds);

// A state accepting every premise but not the goal.
std::optional<CounterState> informational_consequence_bounded(
    const std::vector<Formula>& premises, const Formula& goal, const SearchBounds& bounds,
    SemanticsMode mode = SemanticsMode::Yalcin);

// Union of the atoms of the given formulas, sorted.
std::vector<std::string> atoms_of_all(const std::vector<Formula>& fs);

}  // namespace epi
