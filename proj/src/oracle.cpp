#include "epistemic/oracle.hpp"

#include <atomic>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace epi {

std::optional<Countermodel> first_witness_serial(const ModelSpace& space,
                                                 const ModelProbe<Countermodel>& probe) {
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    if (auto hit = probe(i, space.at(i))) return hit;
  }
  return std::nullopt;
}

std::optional<Countermodel> first_witness(const ModelSpace& space,
                                          const ModelProbe<Countermodel>& probe) {
#ifdef _OPENMP
  const std::int64_t n = static_cast<std::int64_t>(space.size());
  if (n < 2 || omp_get_max_threads() < 2) return first_witness_serial(space, probe);
  std::atomic<std::int64_t> best{n};
  std::vector<std::optional<Countermodel>> hits(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    if (i > best.load(std::memory_order_relaxed)) continue;
    auto hit = probe(static_cast<std::uint64_t>(i), space.at(static_cast<std::uint64_t>(i)));
    if (!hit) continue;
    hits[static_cast<std::size_t>(i)] = std::move(hit);
    std::int64_t cur = best.load();
    while (i < cur && !best.compare_exchange_weak(cur, i)) {
    }
  }
  std::int64_t b = best.load();
  if (b == n) return std::nullopt;
  return hits[static_cast<std::size_t>(b)];
#else
  return first_witness_serial(space, probe);
#endif
}

namespace {

ModelProbe<Countermodel> falsifier(const CompiledFormula& program, SemanticsMode mode) {
  return [&program, mode](std::uint64_t, const Model& m) -> std::optional<Countermodel> {
    Evaluator ev(program, m, mode);
    std::uint64_t states = 1ULL << m.world_count();
    for (std::uint64_t x = 0; x < states; ++x) {
      WorldSet bad = m.worlds().minus(ev.satisfying(WorldSet(x)));
      if (!bad.empty()) {
        return Countermodel{m, {std::countr_zero(bad.bits()), WorldSet(x)}};
      }
    }
    return std::nullopt;
  };
}

ModelProbe<Countermodel> differ(const CompiledFormula& pf, SemanticsMode mf,
                                const CompiledFormula& pg, SemanticsMode mg) {
  return [&, mf, mg](std::uint64_t, const Model& m) -> std::optional<Countermodel> {
    Evaluator ef(pf, m, mf);
    Evaluator eg(pg, m, mg);
    std::uint64_t states = 1ULL << m.world_count();
    for (std::uint64_t x = 0; x < states; ++x) {
      WorldSet a = ef.satisfying(WorldSet(x));
      WorldSet b = eg.satisfying(WorldSet(x));
      if (a != b) {
        std::uint64_t diff = a.bits() ^ b.bits();
        return Countermodel{m, {std::countr_zero(diff), WorldSet(x)}};
      }
    }
    return std::nullopt;
  };
}

}  // namespace

std::optional<Countermodel> validity_search(const Formula& f, SemanticsMode mode,
                                            const SearchBounds& bounds) {
  CompiledFormula program(f);
  return first_witness(ModelSpace(bounds.atoms, bounds.max_worlds), falsifier(program, mode));
}

std::optional<Countermodel> validity_search_serial(const Formula& f, SemanticsMode mode,
                                                   const SearchBounds& bounds) {
  CompiledFormula program(f);
  return first_witness_serial(ModelSpace(bounds.atoms, bounds.max_worlds),
                              falsifier(program, mode));
}

std::optional<Countermodel> disagreement_search(const Formula& f, SemanticsMode mode_f,
                                                const Formula& g, SemanticsMode mode_g,
                                                const SearchBounds& bounds) {
  CompiledFormula pf(f), pg(g);
  return first_witness(ModelSpace(bounds.atoms, bounds.max_worlds),
                       differ(pf, mode_f, pg, mode_g));
}

std::optional<Countermodel> disagreement_search_serial(const Formula& f, SemanticsMode mode_f,
                                                       const Formula& g, SemanticsMode mode_g,
                                                       const SearchBounds& bounds) {
  CompiledFormula pf(f), pg(g);
  return first_witness_serial(ModelSpace(bounds.atoms, bounds.max_worlds),
                              differ(pf, mode_f, pg, mode_g));
}

std::optional<CounterState> informational_consequence_bounded(
    const std::vector<Formula>& premises, const Formula& goal, const SearchBounds& bounds,
    SemanticsMode mode) {
  std::vector<CompiledFormula> progs;
  for (const auto& p : premises) progs.emplace_back(p);
  CompiledFormula goal_prog(goal);
  auto probe = [&](std::uint64_t, const Model& m) -> std::optional<Countermodel> {
    std::vector<Evaluator> evs;
    for (const auto& p : progs) evs.emplace_back(p, m, mode);
    Evaluator goal_ev(goal_prog, m, mode);
    std::uint64_t states = 1ULL << m.world_count();
    for (std::uint64_t bits = 0; bits < states; ++bits) {
      WorldSet x(bits);
      bool premises_ok = true;
      for (auto& ev : evs) {
        if (!x.subset_of(ev.satisfying(x))) {
          premises_ok = false;
          break;
        }
      }
      if (premises_ok && !x.subset_of(goal_ev.satisfying(x))) {
        return Countermodel{m, {0, x}};
      }
    }
    return std::nullopt;
  };
  auto hit = first_witness(ModelSpace(bounds.atoms, bounds.max_worlds), probe);
  if (!hit) return std::nullopt;
  return CounterState{hit->model, hit->context.state};
}

std::vector<std::string> atoms_of_all(const std::vector<Formula>& fs) {
  std::set<std::string> names;
  for (const auto& f : fs) {
    for (auto& a : atoms_of(f)) names.insert(a);
  }
  return {names.begin(), names.end()};
}

}  // namespace epi
