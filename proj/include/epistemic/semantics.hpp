#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "epistemic/formula.hpp"
#include "epistemic/model.hpp"

namespace epi {

// The two readings of the conditional. Every other clause is shared.
//   Yalcin: a => c holds at X iff [] c holds at the a-worlds of X.
//   KM:     a => c holds at X iff [] c holds at every maximal a-subset of X.
enum class SemanticsMode { Yalcin, KM };

const char* mode_name(SemanticsMode mode);

// A formula flattened into a topologically ordered DAG with n-ary And/Or.
// Compile once, evaluate on many models.
class CompiledFormula {
 public:
  explicit CompiledFormula(const Formula& f);

  struct Node {
    Op op;
    int atom = -1;           // index into atoms()
    std::vector<int> kids;   // children indices (all < own index)
  };

  const std::vector<Node>& nodes() const { return nodes_; }
  int root() const { return root_; }
  const std::vector<std::string>& atoms() const { return atoms_; }

 private:
  int compile(const Formula& f);

  std::vector<Node> nodes_;
  std::vector<std::string> atoms_;
  std::unordered_map<const void*, int> index_;
  std::unordered_map<std::string, int> atom_index_;
  int root_ = -1;
};

// Evaluates a compiled formula on one model. For a state X, satisfying(X)
// returns every world w (in or out of X) with M,w,X |= f. Results are
// memoized per (node, state); reuse one evaluator across states of a model.
class Evaluator {
 public:
  Evaluator(const CompiledFormula& program, const Model& model, SemanticsMode mode);

  WorldSet satisfying(WorldSet state) { return value(program_.root(), state); }
  WorldSet value(int node, WorldSet state);

  // Maximal Y subset of `state` with Y subset of value(node, Y).
  std::vector<WorldSet> maximal_subsets(int node, WorldSet state);

 private:
  struct Frame {
    std::vector<std::uint64_t> values;
    std::vector<std::uint8_t> done;
  };
  Frame& frame(WorldSet state);
  WorldSet compute(int node, WorldSet state, Frame& fr);
  WorldSet value_in(int node, WorldSet state, Frame& fr);

  const CompiledFormula& program_;
  SemanticsMode mode_;
  WorldSet all_;
  std::vector<WorldSet> atom_sets_;
  std::unordered_map<std::uint64_t, std::unique_ptr<Frame>> frames_;
};

// M,w,X |= f.
bool eval(const Model& m, const PointedContext& ctx, const Formula& f, SemanticsMode mode);

// {v in X | M,v,X |= f}; always a subset of X.
WorldSet truth_set(const Model& m, WorldSet x, const Formula& f, SemanticsMode mode);

// X accepts f: f holds at every world of X relative to X. Vacuous for X = {}.
bool accepts(const Model& m, WorldSet x, const Formula& f, SemanticsMode mode);

// The maximal f-subsets of X: Y subset of X with Y subset of truth_set(Y, f),
// maximal under inclusion. Never empty; {{}} when no nonempty f-subset exists.
std::vector<WorldSet> maximal_subsets(const Model& m, WorldSet x, const Formula& f,
                                      SemanticsMode mode);

// Largest state size for which the KM clause enumerates subsets.
inline constexpr int kMaxKmStateSize = 20;

}  // namespace epi
