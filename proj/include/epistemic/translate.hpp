#pragma once

#include <cstdint>
#include <vector>

#include "epistemic/formula.hpp"
#include "epistemic/normal.hpp"

namespace epi {

// An indexed family of depth-one disjuncts: the antecedent family
// (indices I) or the consequent family (indices J) of one conditional.
struct NamedDnf {
  std::vector<DnfDisjunct> disjuncts;

  std::size_t size() const { return disjuncts.size(); }
  const DnfDisjunct& operator[](std::size_t i) const { return disjuncts[i]; }
};

// A subset K of an index set {0..n-1}, n <= 63.
class SubsetIndex {
 public:
  SubsetIndex() = default;
  explicit SubsetIndex(std::uint64_t bits) : bits_(bits) {}
  static SubsetIndex of(std::initializer_list<std::size_t> members);

  std::uint64_t bits() const { return bits_; }
  bool contains(std::size_t i) const { return i < 64 && ((bits_ >> i) & 1U); }
  bool operator==(const SubsetIndex&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

// Largest antecedent family star will expand: max_K alone has 4^|I| guards.
inline constexpr std::size_t kMaxStarAntecedents = 10;
// Largest consequent family: the state_S loop is 2^|J| per K.
inline constexpr std::size_t kMaxStarConsequents = 14;
// Cap on 2^|I| * (2^|I| + 2^|J|), the number of top-level pieces star builds.
inline constexpr std::uint64_t kMaxStarWork = 1ULL << 22;

// (phi_k1 | ... ) & (psi_k1 & ...) over k in K: the nonmodal information in
// every world of a state picked out by K. K = {} gives bot & ~bot.
Formula build_info(SubsetIndex k, const NamedDnf& theta);
// Conjunction of <>(info_K & chi) over every diamond chi of every k in K.
Formula build_good(SubsetIndex k, const NamedDnf& theta);
// good_K & the guards for every L subset of I:
//   ([](info_K -> info_L) & <>(~info_K & info_L)) -> ~good_L.
Formula build_max(SubsetIndex k, const NamedDnf& theta);
// alpha_s for s in S, then ~alpha_s for s outside S, as one conjunction.
Formula build_state(SubsetIndex s, const NamedDnf& omega);

// The conditional theta => omega under the maximal-subset reading, as a
// formula without conditionals. Throws ResourceLimit past the caps above.
Formula star(const NamedDnf& theta, const NamedDnf& omega);

struct DaggerOptions {
  // Fold bot / ~bot constants in the output.
  bool simplify = false;
};

// Conditional-free formula agreeing with f under the maximal-subset reading
// at every context. Conditionals are translated innermost first: both sides
// are translated, brought to K45 DNF and fed to star. Updates are pushed
// through their bodies.
Formula dagger(const Formula& f, const DaggerOptions& opts = {});

// Bottom-up folding of bot and ~bot through the connectives and modals.
// Equivalent to f at every context.
Formula fold_constants(const Formula& f);

}  // namespace epi
