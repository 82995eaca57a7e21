#include "epistemic/translate.hpp"

#include <string>
#include <unordered_map>

#include "epistemic/error.hpp"
#include "epistemic/reduce.hpp"

namespace epi {

namespace {

void check_subset(SubsetIndex k, std::size_t n) {
  if (n < 64 && (k.bits() >> n) != 0) {
    throw PreconditionError("index subset out of range for a family of " + std::to_string(n));
  }
}

// Memoizes the per-subset builders for one antecedent family so that star
// shares every info_K / good_K node across its clauses.
class ThetaCache {
 public:
  explicit ThetaCache(const NamedDnf& theta) : theta_(theta) {}

  const Formula& info(std::uint64_t k) {
    auto it = info_.find(k);
    if (it != info_.end()) return it->second;
    std::vector<Formula> pis, boxes;
    for (std::size_t i = 0; i < theta_.size(); ++i) {
      if ((k >> i) & 1U) {
        pis.push_back(theta_[i].pi);
        boxes.push_back(theta_[i].box_part);
      }
    }
    return info_.emplace(k, conj(disj_all(pis), conj_all(boxes))).first->second;
  }

  const Formula& good(std::uint64_t k) {
    auto it = good_.find(k);
    if (it != good_.end()) return it->second;
    const Formula inf = info(k);
    std::vector<Formula> parts;
    for (std::size_t i = 0; i < theta_.size(); ++i) {
      if ((k >> i) & 1U) {
        for (const Formula& chi : theta_[i].diamonds) parts.push_back(diamond(conj(inf, chi)));
      }
    }
    return good_.emplace(k, conj_all(parts)).first->second;
  }

  Formula max(std::uint64_t k) {
    const std::uint64_t subsets = 1ULL << theta_.size();
    const Formula inf = info(k);
    const Formula not_inf = neg(inf);
    std::vector<Formula> guards;
    guards.reserve(subsets);
    for (std::uint64_t l = 0; l < subsets; ++l) {
      const Formula& inf_l = info(l);
      Formula larger = conj(box(implies(inf, inf_l)), diamond(conj(not_inf, inf_l)));
      guards.push_back(implies(larger, neg(good(l))));
    }
    return conj(good(k), conj_all(guards));
  }

 private:
  const NamedDnf& theta_;
  std::unordered_map<std::uint64_t, Formula> info_;
  std::unordered_map<std::uint64_t, Formula> good_;
};

class Translator {
 public:
  explicit Translator(const DaggerOptions& opts) : opts_(opts) {}

  Formula run(const Formula& f) {
    if (!f.has_conditional() && !f.has_update()) return f;
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second;
    Formula out = build(f);
    memo_.emplace(f.id(), out);
    return out;
  }

 private:
  Formula build(const Formula& f) {
    switch (f.op()) {
      case Op::Not: return neg(run(f.child(0)));
      case Op::Box: return box(run(f.child(0)));
      case Op::Diamond: return diamond(run(f.child(0)));
      case Op::And:
      case Op::Or: {
        std::vector<Formula> parts;
        for (const Formula& p : flatten(f, f.op())) parts.push_back(run(p));
        return f.op() == Op::And ? conj_all(parts) : disj_all(parts);
      }
      case Op::Cond: {
        NamedDnf theta{to_k45_dnf(run(f.lhs()))};
        NamedDnf omega{to_k45_dnf(run(f.rhs()))};
        Formula out = star(theta, omega);
        return opts_.simplify ? fold_constants(out) : out;
      }
      case Op::Update: return push_update(run(f.lhs()), run(f.rhs()));
      default: return f;
    }
  }

  DaggerOptions opts_;
  std::unordered_map<const void*, Formula> memo_;
};

}  // namespace

SubsetIndex SubsetIndex::of(std::initializer_list<std::size_t> members) {
  std::uint64_t bits = 0;
  for (std::size_t i : members) {
    if (i >= 64) throw PreconditionError("subset index out of range");
    bits |= 1ULL << i;
  }
  return SubsetIndex(bits);
}

Formula build_info(SubsetIndex k, const NamedDnf& theta) {
  check_subset(k, theta.size());
  return ThetaCache(theta).info(k.bits());
}

Formula build_good(SubsetIndex k, const NamedDnf& theta) {
  check_subset(k, theta.size());
  return ThetaCache(theta).good(k.bits());
}

Formula build_max(SubsetIndex k, const NamedDnf& theta) {
  check_subset(k, theta.size());
  if (theta.size() > kMaxStarAntecedents) throw ResourceLimit("antecedent family too large");
  return ThetaCache(theta).max(k.bits());
}

Formula build_state(SubsetIndex s, const NamedDnf& omega) {
  check_subset(s, omega.size());
  std::vector<Formula> parts;
  for (std::size_t j = 0; j < omega.size(); ++j) {
    if (s.contains(j)) parts.push_back(omega[j].pi);
  }
  for (std::size_t j = 0; j < omega.size(); ++j) {
    if (!s.contains(j)) parts.push_back(neg(omega[j].pi));
  }
  return conj_all(parts);
}

Formula star(const NamedDnf& theta, const NamedDnf& omega) {
  const std::size_t ni = theta.size(), nj = omega.size();
  if (ni > kMaxStarAntecedents || nj > kMaxStarConsequents) {
    throw ResourceLimit("conditional translation too large: " + std::to_string(ni) +
                        " antecedent and " + std::to_string(nj) + " consequent disjuncts");
  }
  const std::uint64_t ks = 1ULL << ni, ss = 1ULL << nj;
  if (ks * (ks + ss) > kMaxStarWork) throw ResourceLimit("conditional translation too large");

  ThetaCache cache(theta);
  std::vector<Formula> states;
  states.reserve(ss);
  for (std::uint64_t s = 0; s < ss; ++s) states.push_back(build_state(SubsetIndex(s), omega));

  std::vector<Formula> clauses;
  clauses.reserve(ks);
  for (std::uint64_t k = 0; k < ks; ++k) {
    const Formula inf = cache.info(k);
    // Per s: [](info_K -> beta_s) & the diamonds of omega_s relative to info_K.
    std::vector<Formula> supports;
    for (std::size_t j = 0; j < nj; ++j) {
      std::vector<Formula> dias;
      for (const Formula& g : omega[j].diamonds) dias.push_back(diamond(conj(inf, g)));
      supports.push_back(conj(box(implies(inf, omega[j].box_part)), conj_all(dias)));
    }
    std::vector<Formula> cases;
    cases.reserve(ss);
    for (std::uint64_t s = 0; s < ss; ++s) {
      std::vector<Formula> alts;
      for (std::size_t j = 0; j < nj; ++j) {
        if ((s >> j) & 1U) alts.push_back(supports[j]);
      }
      cases.push_back(implies(states[s], disj_all(alts)));
    }
    clauses.push_back(implies(cache.max(k), box(implies(inf, conj_all(cases)))));
  }
  return conj_all(clauses);
}

Formula dagger(const Formula& f, const DaggerOptions& opts) {
  return Translator(opts).run(f);
}

Formula fold_constants(const Formula& f) {
  std::unordered_map<const void*, Formula> memo;
  auto go = [&](auto& self, const Formula& g) -> Formula {
    if (g.op() == Op::Atom || g.op() == Op::Bottom) return g;
    if (auto it = memo.find(g.id()); it != memo.end()) return it->second;
    Formula out;
    switch (g.op()) {
      case Op::Not: {
        Formula c = self(self, g.child(0));
        out = c.op() == Op::Not ? c.child(0) : neg(c);
        break;
      }
      case Op::And:
      case Op::Or: {
        // The absorbing constant for this connective, and the neutral one.
        const bool is_and = g.op() == Op::And;
        std::vector<Formula> kept;
        bool absorbed = false;
        for (const Formula& p : flatten(g, g.op())) {
          Formula c = self(self, p);
          if (is_and ? c.is_bottom() : c.is_top()) {
            absorbed = true;
            break;
          }
          if (is_and ? c.is_top() : c.is_bottom()) continue;
          kept.push_back(c);
        }
        if (absorbed) {
          out = is_and ? Formula::bottom() : Formula::top();
        } else {
          out = is_and ? conj_all(kept) : disj_all(kept);
        }
        break;
      }
      case Op::Box: {
        Formula c = self(self, g.child(0));
        out = c.is_top() ? c : box(c);
        break;
      }
      case Op::Diamond: {
        Formula c = self(self, g.child(0));
        out = c.is_bottom() ? c : diamond(c);
        break;
      }
      case Op::Cond: out = cond(self(self, g.lhs()), self(self, g.rhs())); break;
      case Op::Update: out = update(self(self, g.lhs()), self(self, g.rhs())); break;
      default: break;
    }
    memo.emplace(g.id(), out);
    return out;
  };
  return go(go, f);
}

}  // namespace epi
