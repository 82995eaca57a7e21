#include "epistemic/semantics.hpp"

#include <algorithm>

#include "epistemic/error.hpp"

namespace epi {

const char* mode_name(SemanticsMode mode) {
  return mode == SemanticsMode::Yalcin ? "yalcin" : "km";
}

CompiledFormula::CompiledFormula(const Formula& f) { root_ = compile(f); }

int CompiledFormula::compile(const Formula& f) {
  if (auto it = index_.find(f.id()); it != index_.end()) return it->second;
  Node node{f.op(), -1, {}};
  switch (f.op()) {
    case Op::Atom: {
      auto [it, inserted] = atom_index_.try_emplace(f.name(), static_cast<int>(atoms_.size()));
      if (inserted) atoms_.push_back(f.name());
      node.atom = it->second;
      break;
    }
    case Op::Bottom:
      break;
    case Op::And:
    case Op::Or:
      for (const Formula& part : flatten(f, f.op())) node.kids.push_back(compile(part));
      break;
    default:
      for (std::size_t i = 0; i < f.arity(); ++i) node.kids.push_back(compile(f.child(i)));
      break;
  }
  int idx = static_cast<int>(nodes_.size());
  nodes_.push_back(std::move(node));
  index_.emplace(f.id(), idx);
  return idx;
}

Evaluator::Evaluator(const CompiledFormula& program, const Model& model, SemanticsMode mode)
    : program_(program), mode_(mode), all_(model.worlds()) {
  for (const auto& a : program.atoms()) atom_sets_.push_back(model.valuation(a));
}

Evaluator::Frame& Evaluator::frame(WorldSet state) {
  auto& slot = frames_[state.bits()];
  if (!slot) {
    slot = std::make_unique<Frame>();
    slot->values.assign(program_.nodes().size(), 0);
    slot->done.assign(program_.nodes().size(), 0);
  }
  return *slot;
}

WorldSet Evaluator::value(int node, WorldSet state) {
  return value_in(node, state, frame(state));
}

WorldSet Evaluator::value_in(int node, WorldSet state, Frame& fr) {
  if (fr.done[node]) return WorldSet(fr.values[node]);
  WorldSet v = compute(node, state, fr);
  fr.values[node] = v.bits();
  fr.done[node] = 1;
  return v;
}

std::vector<WorldSet> Evaluator::maximal_subsets(int node, WorldSet state) {
  if (state.size() > kMaxKmStateSize) {
    throw ResourceLimit("information state too large for subset enumeration");
  }
  // Submasks of the state, largest first by popcount, so a candidate is
  // maximal iff no already-accepted set contains it.
  std::vector<std::uint64_t> subs;
  std::uint64_t s = state.bits();
  for (std::uint64_t y = s;; y = (y - 1) & s) {
    subs.push_back(y);
    if (y == 0) break;
  }
  std::stable_sort(subs.begin(), subs.end(), [](std::uint64_t a, std::uint64_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa > pb : a < b;
  });
  std::vector<WorldSet> out;
  for (std::uint64_t y : subs) {
    WorldSet ys(y);
    bool covered = std::any_of(out.begin(), out.end(),
                               [&](WorldSet m) { return ys.subset_of(m); });
    if (covered) continue;
    if (ys.subset_of(value(node, ys))) out.push_back(ys);
  }
  std::sort(out.begin(), out.end(),
            [](WorldSet a, WorldSet b) { return a.bits() < b.bits(); });
  return out;
}

WorldSet Evaluator::compute(int node, WorldSet state, Frame& fr) {
  const auto& n = program_.nodes()[node];
  switch (n.op) {
    case Op::Atom: return atom_sets_[n.atom];
    case Op::Bottom: return WorldSet();
    case Op::Not: return all_.minus(value_in(n.kids[0], state, fr));
    case Op::And: {
      WorldSet acc = all_;
      for (int k : n.kids) {
        acc = acc & value_in(k, state, fr);
        if (acc.empty()) break;
      }
      return acc;
    }
    case Op::Or: {
      WorldSet acc;
      for (int k : n.kids) {
        acc = acc | value_in(k, state, fr);
        if (acc == all_) break;
      }
      return acc;
    }
    case Op::Box:
      return state.subset_of(value_in(n.kids[0], state, fr)) ? all_ : WorldSet();
    case Op::Diamond:
      return state.intersects(value_in(n.kids[0], state, fr)) ? all_ : WorldSet();
    case Op::Update: {
      WorldSet shifted = state & value_in(n.kids[0], state, fr);
      return value(n.kids[1], shifted);
    }
    case Op::Cond: {
      if (mode_ == SemanticsMode::Yalcin) {
        WorldSet shifted = state & value_in(n.kids[0], state, fr);
        return shifted.subset_of(value(n.kids[1], shifted)) ? all_ : WorldSet();
      }
      for (WorldSet y : maximal_subsets(n.kids[0], state)) {
        if (!y.subset_of(value(n.kids[1], y))) return WorldSet();
      }
      return all_;
    }
  }
  return WorldSet();
}

bool eval(const Model& m, const PointedContext& ctx, const Formula& f, SemanticsMode mode) {
  if (ctx.world < 0 || ctx.world >= m.world_count() || !ctx.state.subset_of(m.worlds())) {
    throw ModelError("context out of range for model");
  }
  CompiledFormula program(f);
  Evaluator ev(program, m, mode);
  return ev.satisfying(ctx.state).contains(ctx.world);
}

WorldSet truth_set(const Model& m, WorldSet x, const Formula& f, SemanticsMode mode) {
  if (!x.subset_of(m.worlds())) throw ModelError("state out of range for model");
  CompiledFormula program(f);
  Evaluator ev(program, m, mode);
  return ev.satisfying(x) & x;
}

bool accepts(const Model& m, WorldSet x, const Formula& f, SemanticsMode mode) {
  return truth_set(m, x, f, mode) == x;
}

std::vector<WorldSet> maximal_subsets(const Model& m, WorldSet x, const Formula& f,
                                      SemanticsMode mode) {
  if (!x.subset_of(m.worlds())) throw ModelError("state out of range for model");
  CompiledFormula program(f);
  Evaluator ev(program, m, mode);
  return ev.maximal_subsets(program.root(), x);
}

}  // namespace epi
