#include <random>

#include <gtest/gtest.h>

#include "epistemic/error.hpp"
#include "epistemic/model.hpp"
#include "epistemic/parser.hpp"
#include "epistemic/semantics.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace epi;

namespace {

Model example_two() { return parse_model("worlds 2\nval p: 0\nval q: 1"); }
const WorldSet kWV = WorldSet::full(2);
constexpr auto Y = SemanticsMode::Yalcin;
constexpr auto K = SemanticsMode::KM;

}  // namespace

TEST(Eval, ExampleTwo) {
  Formula f = parse("([]p|[]~p) => q");
  EXPECT_TRUE(eval(example_two(), {0, kWV}, f, Y));
  EXPECT_FALSE(eval(example_two(), {0, kWV}, f, K));
}

TEST(Eval, ExampleThree) {
  Model m = parse_model("worlds 2\nval p: 0");
  EXPECT_TRUE(eval(m, {0, kWV}, parse("(p & <>~p) => bot"), K));
}

TEST(Eval, EmptyStateBoxIsVacuous) {
  EXPECT_TRUE(eval(example_two(), {1, WorldSet()}, parse("[]bot"), Y));
  EXPECT_FALSE(eval(example_two(), {1, WorldSet()}, parse("<>~bot"), Y));
}

TEST(Eval, ContextRangeChecked) {
  EXPECT_THROW(eval(example_two(), {2, kWV}, parse("p"), Y), ModelError);
  EXPECT_THROW(eval(example_two(), {0, WorldSet::single(5)}, parse("p"), Y), ModelError);
}

TEST(TruthSet, Examples) {
  EXPECT_EQ(truth_set(example_two(), kWV, parse("[]p | []~p"), Y), WorldSet());
  EXPECT_EQ(truth_set(example_two(), WorldSet(), parse("~bot"), Y), WorldSet());
  EXPECT_EQ(truth_set(example_two(), kWV, parse("p"), Y), WorldSet::single(0));
}

TEST(Accepts, Examples) {
  EXPECT_TRUE(accepts(example_two(), kWV, parse("p | <>~p"), Y));
  EXPECT_TRUE(accepts(example_two(), WorldSet(), parse("bot"), Y));
  EXPECT_FALSE(accepts(example_two(), kWV, parse("[]p"), Y));
}

TEST(MaximalSubsets, Examples) {
  auto a = maximal_subsets(example_two(), kWV, parse("[]p|[]~p"), Y);
  EXPECT_EQ(a, (std::vector<WorldSet>{WorldSet::single(0), WorldSet::single(1)}));
  Model m = parse_model("worlds 2\nval p: 0");
  EXPECT_EQ(maximal_subsets(m, kWV, parse("p & <>~p"), Y), (std::vector<WorldSet>{WorldSet()}));
  EXPECT_EQ(maximal_subsets(m, kWV, parse("~bot"), Y), (std::vector<WorldSet>{kWV}));
}

TEST(MaximalSubsets, Properties) {
  std::mt19937_64 rng(3);
  gen::Shape s{.atoms = {"p", "q"}, .depth = 3, .max_conditionals = 1};
  auto models = ref::all_models({"p", "q"}, 3);
  for (int i = 0; i < 40; ++i) {
    Formula f = gen::formula(rng, s);
    for (const Model& m : models) {
      for (std::uint64_t xb = 0; xb < (1ULL << m.world_count()); ++xb) {
        WorldSet x(xb);
        auto subs = maximal_subsets(m, x, f, K);
        ASSERT_FALSE(subs.empty());
        for (std::size_t a = 0; a < subs.size(); ++a) {
          EXPECT_TRUE(subs[a].subset_of(x));
          EXPECT_TRUE(accepts(m, subs[a], f, K));
          for (std::size_t b = 0; b < subs.size(); ++b) {
            if (a != b) EXPECT_FALSE(subs[a].subset_of(subs[b]));
          }
        }
        for (std::uint64_t yb = xb;; yb = (yb - 1) & xb) {
          WorldSet y(yb);
          if (accepts(m, y, f, K)) {
            bool covered = false;
            for (const WorldSet& z : subs) covered = covered || y.subset_of(z);
            EXPECT_TRUE(covered);
          }
          if (yb == 0) break;
        }
      }
    }
  }
}

TEST(MaximalSubsets, LargeStateRejected) {
  Model m(25);
  EXPECT_THROW(maximal_subsets(m, WorldSet::full(25), parse("p"), K), ResourceLimit);
}

// The library evaluator against the independent reference, both readings,
// with updates and nested conditionals.
TEST(Eval, AgreesWithReference) {
  std::mt19937_64 rng(5);
  gen::Shape s{.atoms = {"p", "q"}, .depth = 4, .max_conditionals = 2, .updates = true};
  auto models = ref::all_models({"p", "q"}, 3);
  for (int i = 0; i < 150; ++i) {
    Formula f = gen::formula(rng, s);
    for (SemanticsMode mode : {Y, K}) {
      auto r = mode == Y ? ref::Reading::Yalcin : ref::Reading::KM;
      for (const Model& m : models) {
        ref::Evaluator ev(m, r);
        for (const auto& ctx : enumerate_contexts(m)) {
          ASSERT_EQ(eval(m, ctx, f, mode), ev.holds(f, ctx.world, ref::to_state(ctx.state)))
              << render(f) << "\n" << render_model(m);
        }
      }
    }
  }
}

TEST(Semantics, Invariants) {
  std::mt19937_64 rng(9);
  gen::Shape s{.atoms = {"p", "q"}, .depth = 3, .max_conditionals = 1};
  auto models = ref::all_models({"p", "q"}, 3);
  for (int i = 0; i < 60; ++i) {
    Formula a = gen::formula(rng, s), b = gen::formula(rng, s);
    Formula pi = gen::formula(rng, {.atoms = {"p", "q"}, .depth = 3, .modal = false});
    Formula c = gen::formula(rng, {.atoms = {"p", "q"}, .depth = 3});
    for (const Model& m : models) {
      for (std::uint64_t xb = 0; xb < (1ULL << m.world_count()); ++xb) {
        WorldSet x(xb);
        // World independence of modal and conditional formulas.
        for (Formula g : {box(a), diamond(a), cond(a, b)}) {
          for (auto mode : {Y, K}) {
            bool first = eval(m, {0, x}, g, mode);
            for (int w = 1; w < m.world_count(); ++w) EXPECT_EQ(eval(m, {w, x}, g, mode), first);
          }
        }
        for (int w = 0; w < m.world_count(); ++w) {
          // a => b agrees with [a][]b under the Yalcin reading.
          EXPECT_EQ(eval(m, {w, x}, cond(a, b), Y), eval(m, {w, x}, update(a, box(b)), Y));
          // Readings agree on a nonmodal antecedent with a conditional-free consequent.
          EXPECT_EQ(eval(m, {w, x}, cond(pi, c), Y), eval(m, {w, x}, cond(pi, c), K));
        }
        // Nonmodal locality and acceptance.
        EXPECT_EQ(truth_set(m, x, pi, Y), x & truth_set(m, m.worlds(), pi, Y));
        EXPECT_TRUE(truth_set(m, x, a, K).subset_of(x));
        EXPECT_EQ(accepts(m, x, a, K), truth_set(m, x, a, K) == x);
      }
    }
  }
}
