#pragma once

#include <optional>
#include <string>
#include <vector>

#include "epistemic/formula.hpp"
#include "epistemic/model.hpp"

namespace epi {

// Whether the target atom's value in a state is fixed by the basis atoms.
struct DependenceQuery {
  std::string target;
  std::vector<std::string> basis;

  // Throws PreconditionError: empty basis, repeated atom, target in basis,
  // or an invalid atom name.
  void validate() const;
};

// Every two worlds of x that agree on the basis agree on the target.
bool depends_on(const Model& m, WorldSet x, const DependenceQuery& query);

// ([]p1 | []~p1) & ... & ([]pn | []~pn) => ([]q | []~q). Linear in n.
Formula depend_formula(const DependenceQuery& query);

inline constexpr std::size_t kMaxExpoBasis = 16;

// Conjunction over every state description s of the basis of
// [](s -> q) | [](s -> ~q). State descriptions run through sign patterns
// counting down in binary (p1 is the high bit, 1 is positive), so the
// all-positive description comes first. Exponential in n.
Formula expo_formula(const DependenceQuery& query);

struct SuccinctnessRow {
  std::size_t n;
  std::uint64_t depend_nodes;
  std::uint64_t expo_nodes;
  std::optional<std::uint64_t> dagger_nodes;  // empty when skipped or over a resource limit
};

inline constexpr std::size_t kMaxSuccinctnessN = 12;
// Largest basis for which the translated depend formula is attempted. At
// n = 4 the single-conditional translation exceeds its caps; larger n spend
// seconds before reaching them.
inline constexpr std::size_t kMaxDaggerBasis = 3;

// Sizes for the basis p1..pn and target q, n = 1..max_n.
std::vector<SuccinctnessRow> succinctness_report(std::size_t max_n);

}  // namespace epi
