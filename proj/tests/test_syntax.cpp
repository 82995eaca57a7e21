#include <random>

#include <gtest/gtest.h>

#include "epistemic/error.hpp"
#include "epistemic/formula.hpp"
#include "epistemic/parser.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace epi;

namespace {

Formula p() { return Formula::atom("p"); }
Formula q() { return Formula::atom("q"); }

}  // namespace

TEST(Parse, DiamondNegation) {
  EXPECT_EQ(parse("p & <>~p"), conj(p(), diamond(neg(p()))));
}

TEST(Parse, ImplicationIsSugar) {
  EXPECT_EQ(parse("p -> q"), disj(neg(p()), q()));
}

TEST(Parse, ModalAntecedent) {
  EXPECT_EQ(parse("([]p | []~p) => q"), cond(disj(box(p()), box(neg(p()))), q()));
}

TEST(Parse, Biconditional) {
  Formula a = disj(neg(p()), q()), b = disj(neg(q()), p());
  EXPECT_EQ(parse("p <-> q"), conj(a, b));
}

TEST(Parse, TopIsNegatedBottom) { EXPECT_EQ(parse("top"), neg(Formula::bottom())); }

TEST(Parse, Precedence) {
  EXPECT_EQ(parse("~p & q | p"), disj(conj(neg(p()), q()), p()));
  EXPECT_EQ(parse("p -> q -> p"), parse("p -> (q -> p)"));
  EXPECT_EQ(parse("p & q & p"), conj(conj(p(), q()), p()));
  EXPECT_EQ(parse("[]p & q"), conj(box(p()), q()));
  EXPECT_EQ(parse("p | q => p"), cond(disj(p(), q()), p()));
}

TEST(Parse, UpdateOpener) {
  EXPECT_EQ(parse("[p][]q"), update(p(), box(q())));
  EXPECT_EQ(parse("[ p | q ]<>p"), update(disj(p(), q()), diamond(p())));
  EXPECT_EQ(parse("[][]p"), box(box(p())));
}

TEST(Parse, NestedConditionalNeedsParentheses) {
  EXPECT_THROW(parse("p => q => r"), SyntaxError);
  EXPECT_NO_THROW(parse("(p => q) => r"));
  EXPECT_THROW(parse("p <-> q <-> r"), SyntaxError);
}

TEST(Parse, ErrorsCarryPosition) {
  try {
    parse("p &\n  & q");
    FAIL();
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 3);
    EXPECT_FALSE(e.expected().empty());
  }
}

TEST(Parse, ReservedWords) {
  EXPECT_THROW(parse("true"), SyntaxError);
  EXPECT_THROW(parse("p & false"), SyntaxError);
  EXPECT_THROW(Formula::atom("bot"), PreconditionError);
  EXPECT_THROW(Formula::atom("P"), PreconditionError);
}

TEST(Parse, Garbage) {
  EXPECT_THROW(parse(""), SyntaxError);
  EXPECT_THROW(parse("p q"), SyntaxError);
  EXPECT_THROW(parse("(p"), SyntaxError);
  EXPECT_THROW(parse("p $ q"), SyntaxError);
}

TEST(Render, Examples) {
  EXPECT_EQ(render(conj(p(), q())), "p & q");
  EXPECT_EQ(render(cond(p(), box(q()))), "p => []q");
  EXPECT_EQ(render(neg(Formula::bottom())), "~bot");
  EXPECT_EQ(render(conj(p(), disj(q(), p()))), "p & (q | p)");
  EXPECT_EQ(render(disj(p(), conj(q(), p()))), "p | q & p");
  EXPECT_EQ(render(conj(p(), conj(q(), p()))), "p & (q & p)");
  EXPECT_EQ(render(cond(cond(p(), q()), p())), "(p => q) => p");
  EXPECT_EQ(render(update(p(), box(q()))), "[p][]q");
  EXPECT_EQ(render(neg(conj(p(), q()))), "~(p & q)");
}

TEST(Render, RoundTripRandom) {
  std::mt19937_64 rng(7);
  gen::Shape s{.atoms = {"p", "q", "r"}, .depth = 5, .max_conditionals = 3, .updates = true};
  for (int i = 0; i < 2000; ++i) {
    Formula f = gen::formula(rng, s);
    std::string text = render(f);
    ASSERT_EQ(parse(text), f) << text;
  }
}

TEST(Render, NoRemovableParentheses) {
  // Dropping any single pair of parentheses from the rendering must change
  // the parse (or break it).
  std::mt19937_64 rng(11);
  gen::Shape s{.atoms = {"p", "q"}, .depth = 4, .max_conditionals = 2, .updates = true};
  for (int i = 0; i < 300; ++i) {
    Formula f = gen::formula(rng, s);
    std::string text = render(f);
    for (std::size_t open = 0; open < text.size(); ++open) {
      if (text[open] != '(') continue;
      int depth = 0;
      std::size_t close = open;
      for (; close < text.size(); ++close) {
        if (text[close] == '(') ++depth;
        if (text[close] == ')' && --depth == 0) break;
      }
      std::string stripped = text.substr(0, open) + text.substr(open + 1, close - open - 1) +
                             text.substr(close + 1);
      bool same = false;
      try {
        same = parse(stripped) == f;
      } catch (const SyntaxError&) {
      }
      ASSERT_FALSE(same) << text << " vs " << stripped;
    }
  }
}

TEST(Desugar, ImplicationSound) {
  auto models = ref::all_models({"p", "q"}, 3);
  Formula a = box(p()), b = diamond(q());
  auto d = ref::compare(models, parse("[]p -> <>q"), ref::Reading::Yalcin, disj(neg(a), b),
                        ref::Reading::Yalcin);
  EXPECT_FALSE(d.found);
}

TEST(Metrics, Counts) {
  EXPECT_EQ(metrics(p()).node_count, 1u);
  EXPECT_EQ(metrics(p()).modal_depth, 0u);
  EXPECT_EQ(metrics(box(p())).node_count, 2u);
  EXPECT_EQ(metrics(box(p())).modal_depth, 1u);
  FormulaMetrics m = metrics(parse("(p => []q) => <>p"));
  EXPECT_EQ(m.conditional_count, 2u);
  EXPECT_EQ(m.modal_depth, 3u);
}

TEST(Nonmodal, Classification) {
  EXPECT_TRUE(is_nonmodal(parse("p & ~q")));
  EXPECT_FALSE(is_nonmodal(parse("[]p")));
  EXPECT_FALSE(is_nonmodal(parse("p => q")));
  EXPECT_FALSE(is_nonmodal(parse("[p]q")));
}

TEST(Nonmodal, ConditionalIsStateDependent) {
  // "p => q" takes different values at one world under two states.
  Model m(2);
  m.set_valuation("p", WorldSet::full(2));
  m.set_valuation("q", WorldSet::single(0));
  ref::Evaluator ev(m, ref::Reading::Yalcin);
  Formula f = parse("p => q");
  EXPECT_NE(ev.holds(f, 0, {0}), ev.holds(f, 0, {0, 1}));
}

TEST(Substitute, ReplacesOccurrence) {
  Formula f = parse("p & q");
  EXPECT_EQ(substitute(f, {1}, parse("~r")), parse("p & ~r"));
  EXPECT_EQ(substitute(f, {}, f), f);
  Formula g = parse("p => (bot | []q)");
  EXPECT_EQ(substitute(g, {1}, parse("[]q")), parse("p => []q"));
  EXPECT_THROW(substitute(f, {2}, p()), PreconditionError);
  EXPECT_THROW(substitute(f, {0, 0}, p()), PreconditionError);
}

TEST(Formula, LongChainsAreSafe) {
  Formula f = p();
  for (int i = 0; i < 200000; ++i) f = conj(f, q());
  EXPECT_EQ(flatten(f, Op::And).size(), 200001u);
  EXPECT_EQ(f, f);
  std::string text = render(f);
  EXPECT_EQ(parse(text), f);
  Formula g = p();
  for (int i = 0; i < 100000; ++i) g = neg(g);
  EXPECT_EQ(parse(render(g)), g);
}

TEST(Formula, AtomsSorted) {
  EXPECT_EQ(atoms_of(parse("r & (p => q) | p")), (std::vector<std::string>{"p", "q", "r"}));
}
