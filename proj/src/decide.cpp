#include "epistemic/decide.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "epistemic/error.hpp"
#include "epistemic/normal.hpp"
#include "epistemic/parser.hpp"
#include "epistemic/reduce.hpp"
#include "epistemic/semantics.hpp"
#include "epistemic/translate.hpp"

namespace epi {

namespace {

// A satisfying assignment (bit i = atom i) of a nonmodal formula, scanning
// 64 assignments per pass.
std::optional<std::uint64_t> find_assignment(const Formula& f,
                                             const std::vector<std::string>& atoms) {
  CompiledFormula prog(f);
  std::vector<int> slot;
  for (const std::string& a : prog.atoms()) {
    slot.push_back(static_cast<int>(std::find(atoms.begin(), atoms.end(), a) - atoms.begin()));
  }
  const std::uint64_t rows = 1ULL << atoms.size();
  std::vector<std::uint64_t> val(prog.nodes().size());
  for (std::uint64_t base = 0; base < rows; base += 64) {
    std::uint64_t live = rows - base >= 64 ? ~0ULL : (1ULL << (rows - base)) - 1;
    for (std::size_t n = 0; n < prog.nodes().size(); ++n) {
      const auto& node = prog.nodes()[n];
      std::uint64_t v = 0;
      switch (node.op) {
        case Op::Atom: {
          int i = slot[node.atom];
          for (int b = 0; b < 64; ++b) {
            if (((base + b) >> i) & 1U) v |= 1ULL << b;
          }
          break;
        }
        case Op::Bottom: v = 0; break;
        case Op::Not: v = ~val[node.kids[0]]; break;
        case Op::And:
          v = ~0ULL;
          for (int k : node.kids) v &= val[k];
          break;
        case Op::Or:
          for (int k : node.kids) v |= val[k];
          break;
        default: throw PreconditionError("prop_sat needs a nonmodal formula");
      }
      val[n] = v;
    }
    std::uint64_t hits = val[prog.root()] & live;
    if (hits) return base + std::countr_zero(hits);
  }
  return std::nullopt;
}

void check_prop(const Formula& f, const std::vector<std::string>& atoms) {
  if (!f.is_nonmodal()) throw PreconditionError("prop_sat needs a nonmodal formula");
  if (static_cast<int>(atoms.size()) > kMaxPropAtoms) {
    throw ResourceLimit("prop_sat handles at most " + std::to_string(kMaxPropAtoms) + " atoms");
  }
}

void set_world(Model& m, int world, std::uint64_t assignment, const std::vector<std::string>& atoms) {
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    if ((assignment >> i) & 1U) m.set_valuation(atoms[i], m.valuation(atoms[i]).with(world));
  }
}

// Internal consistency: a witness that does not check out is a bug, not a
// verdict.
void verify(const Countermodel& w, const Formula& f, SemanticsMode mode, bool expected) {
  if (eval(w.model, w.context, f, mode) != expected) {
    throw std::logic_error("decision witness failed re-verification for " + render(f));
  }
}

Verdict negate(Verdict v) {
  v.decided = !v.decided;
  return v;
}

}  // namespace

Verdict prop_sat(const Formula& f) {
  auto atoms = atoms_of(f);
  check_prop(f, atoms);
  auto hit = find_assignment(f, atoms);
  if (!hit) return {};
  Model m(1);
  set_world(m, 0, *hit, atoms);
  Verdict v{true, Countermodel{m, {0, WorldSet()}}};
  verify(*v.witness, f, SemanticsMode::Yalcin, true);
  return v;
}

Verdict k45_satisfiable(const Formula& f) {
  if (f.has_conditional() || f.has_update()) {
    throw PreconditionError("k45_satisfiable needs a formula without '=>' or updates");
  }
  auto atoms = atoms_of(f);
  if (static_cast<int>(atoms.size()) > kMaxPropAtoms) {
    throw ResourceLimit("k45_satisfiable handles at most " + std::to_string(kMaxPropAtoms) + " atoms");
  }
  for (const DnfDisjunct& d : to_k45_dnf(f)) {
    auto w = find_assignment(d.pi, atoms);
    if (!w) continue;
    std::vector<std::uint64_t> others;
    for (const Formula& chi : d.diamonds) {
      auto v = find_assignment(conj(d.box_part, chi), atoms);
      if (!v) break;
      others.push_back(*v);
    }
    if (others.size() != d.diamonds.size()) continue;
    if (others.size() + 1 > static_cast<std::size_t>(kMaxWorlds)) {
      throw ResourceLimit("satisfying model would need more than " + std::to_string(kMaxWorlds) +
                          " worlds");
    }
    Model m(static_cast<int>(others.size()) + 1);
    set_world(m, 0, *w, atoms);
    WorldSet x;
    for (std::size_t i = 0; i < others.size(); ++i) {
      set_world(m, static_cast<int>(i) + 1, others[i], atoms);
      x = x.with(static_cast<int>(i) + 1);
    }
    Verdict v{true, Countermodel{m, {0, x}}};
    verify(*v.witness, f, SemanticsMode::Yalcin, true);
    return v;
  }
  return {};
}

Verdict k45_valid(const Formula& f) {
  Verdict v = negate(k45_satisfiable(neg(f)));
  if (v.witness) verify(*v.witness, f, SemanticsMode::Yalcin, false);
  return v;
}

Verdict yalcin_theorem(const Formula& f) {
  Verdict v = k45_valid(eliminate_conditionals(f));
  if (v.witness) verify(*v.witness, f, SemanticsMode::Yalcin, false);
  return v;
}

Verdict informational_consequence(std::span<const Formula> premises, const Formula& goal) {
  std::vector<Formula> boxed;
  for (const Formula& p : premises) boxed.push_back(box(p));
  return yalcin_theorem(implies(conj_all(boxed), box(goal)));
}

Verdict km_valid(const Formula& f) {
  Verdict v = k45_valid(dagger(f));
  if (v.witness) verify(*v.witness, f, SemanticsMode::KM, false);
  return v;
}

}  // namespace epi
