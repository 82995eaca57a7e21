#include <random>

#include <gtest/gtest.h>

#include "epistemic/oracle.hpp"
#include "epistemic/parser.hpp"
#include "support/generators.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace epi;

TEST(ValiditySearch, Examples) {
  SearchBounds b{{"p"}, 3};
  EXPECT_FALSE(validity_search(parse("<>[]p -> []p"), SemanticsMode::Yalcin, b));
  EXPECT_FALSE(validity_search(parse("p -> p"), SemanticsMode::Yalcin, b));
  auto c = validity_search(parse("[]p -> p"), SemanticsMode::Yalcin, b);
  ASSERT_TRUE(c);
  EXPECT_FALSE(c->context.state.contains(c->context.world));
  EXPECT_FALSE(eval(c->model, c->context, parse("[]p -> p"), SemanticsMode::Yalcin));
}

TEST(ConsequenceBounded, Examples) {
  SearchBounds b{{"p"}, 3};
  EXPECT_FALSE(informational_consequence_bounded({}, parse("p | <>~p"), b));
  Formula f = parse("[]p | q");
  EXPECT_FALSE(informational_consequence_bounded({f}, f, {{"p", "q"}, 3}));
  auto c = informational_consequence_bounded({}, parse("p"), b);
  ASSERT_TRUE(c);
  EXPECT_FALSE(accepts(c->model, c->state, parse("p"), SemanticsMode::Yalcin));
}

// The OpenMP kernels must return exactly what the serial scans return.
TEST(Parallel, MatchesSerial) {
#ifdef _OPENMP
  // Oversubscribe so the parallel path runs even on a single core.
  const int saved = omp_get_max_threads();
  omp_set_num_threads(4);
#endif
  std::mt19937_64 rng(21);
  gen::Shape s{.atoms = {"p", "q"}, .depth = 4, .max_conditionals = 2, .updates = true};
  SearchBounds b{{"p", "q"}, 3};
  for (int i = 0; i < 60; ++i) {
    Formula f = gen::formula(rng, s), g = gen::formula(rng, s);
    for (auto mode : {SemanticsMode::Yalcin, SemanticsMode::KM}) {
      auto a = validity_search(f, mode, b), c = validity_search_serial(f, mode, b);
      ASSERT_EQ(a.has_value(), c.has_value());
      if (a) {
        EXPECT_EQ(a->model, c->model);
        EXPECT_EQ(a->context, c->context);
      }
      auto d = disagreement_search(f, mode, g, SemanticsMode::KM, b);
      auto e = disagreement_search_serial(f, mode, g, SemanticsMode::KM, b);
      ASSERT_EQ(d.has_value(), e.has_value());
      if (d) {
        EXPECT_EQ(d->model, e->model);
        EXPECT_EQ(d->context, e->context);
      }
    }
  }
#ifdef _OPENMP
  omp_set_num_threads(saved);
#endif
}
