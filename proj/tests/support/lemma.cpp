#include "support/lemma.hpp"

#include <algorithm>

namespace lemma {

using namespace epi;

namespace {

bool theta_subset(ref::Evaluator& ev, const Formula& theta, const ref::State& y) {
  return ev.accepts(theta, y);
}

}  // namespace

std::string check(const NamedDnf& theta, const Model& m, const ref::State& x) {
  const Formula big = dnf_to_formula(theta.disjuncts);
  ref::Evaluator ev(m, ref::Reading::Yalcin);
  const std::uint64_t subsets = 1ULL << theta.size();
  std::vector<ref::State> info(subsets);
  std::vector<Formula> good(subsets), max(subsets);
  for (std::uint64_t k = 0; k < subsets; ++k) {
    info[k] = ev.truth_set(build_info(SubsetIndex(k), theta), x);
    good[k] = build_good(SubsetIndex(k), theta);
    max[k] = build_max(SubsetIndex(k), theta);
  }
  const auto maximal = ev.maximal_subsets(big, x);
  for (int w = 0; w < m.world_count(); ++w) {
    for (std::uint64_t l = 0; l < subsets; ++l) {
      if (ev.holds(good[l], w, x) && !theta_subset(ev, big, info[l])) {
        return "part 1 fails for L=" + std::to_string(l);
      }
      if (ev.holds(max[l], w, x) &&
          std::find(maximal.begin(), maximal.end(), info[l]) == maximal.end()) {
        return "part 3 fails for L=" + std::to_string(l);
      }
    }
    for (const ref::State& y : maximal) {
      bool found = false;
      for (std::uint64_t k = 0; k < subsets && !found; ++k) {
        found = info[k] == y && ev.holds(max[k], w, x);
      }
      if (!found) return "part 2 fails: no K for a maximal subset";
    }
  }
  return {};
}

}  // namespace lemma
