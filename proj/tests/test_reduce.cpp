#include <random>

#include <gtest/gtest.h>

#include "epistemic/error.hpp"
#include "epistemic/parser.hpp"
#include "epistemic/reduce.hpp"
#include "support/generators.hpp"
#include "support/reference.hpp"

using namespace epi;

namespace {

const std::vector<Model>& models3() {
  static const auto m = ref::all_models({"p", "q", "r"}, 3);
  return m;
}

bool yalcin_equivalent(const Formula& a, const Formula& b) {
  return !ref::compare(models3(), a, ref::Reading::Yalcin, b, ref::Reading::Yalcin).found;
}

Formula inst(const char* name, std::vector<const char*> parts) {
  std::vector<Formula> fs;
  for (const char* p : parts) fs.push_back(parse(p));
  return instantiate(axiom_schema(name), fs);
}

}  // namespace

TEST(Instantiate, Examples) {
  EXPECT_EQ(inst("I4", {"p", "q"}), parse("(p => q) -> (p => []q)"));
  EXPECT_EQ(inst("A2", {"p", "q", "r"}),
            parse("(p => (q & r)) <-> ((p => q) & (p => r))"));
  EXPECT_THROW(inst("A1", {"p", "[]q"}), PreconditionError);
  EXPECT_THROW(inst("I1", {"p", "p => q"}), PreconditionError);
  EXPECT_NO_THROW(inst("I1", {"[]p", "bot"}));
  EXPECT_THROW(inst("K", {"p"}), PreconditionError);
  EXPECT_THROW(axiom_schema("I8"), PreconditionError);
}

TEST(Instantiate, LettersDoNotCapture) {
  // A part mentioning a schema letter must not be substituted again.
  EXPECT_EQ(inst("4", {"phi"}), parse("<><>phi -> <>phi"));
  EXPECT_EQ(inst("K", {"psi", "phi"}), parse("[](psi -> phi) -> ([]psi -> []phi)"));
}

TEST(Schemas, AllListed) {
  std::vector<std::string> names;
  for (const auto& s : axiom_schemas()) names.push_back(s.name);
  EXPECT_EQ(names, (std::vector<std::string>{"K", "4", "5", "I1", "I2", "I3", "I4", "I5", "I6",
                                             "I7", "A1", "A2", "A3", "A4"}));
}

TEST(ReduceStep, Examples) {
  EXPECT_EQ(reduce_step(parse("p => q")), parse("[](p -> q)"));
  EXPECT_EQ(reduce_step(parse("p => (q & r)")), parse("[](p->q) & [](p->r)"));
  Formula a = reduce_step(parse("p => <>q"));
  EXPECT_TRUE(yalcin_equivalent(a, parse("[](p->bot) | ~[](p->~q)")));
  EXPECT_TRUE(yalcin_equivalent(a, parse("p => <>q")));
  Formula b = reduce_step(parse("p => []q"));
  EXPECT_TRUE(yalcin_equivalent(b, parse("[](p->bot) | [](p->q)")));
  EXPECT_THROW(reduce_step(parse("p")), PreconditionError);
  EXPECT_THROW(reduce_step(parse("p => (q => r)")), PreconditionError);
}

// The connective in the A3/A4 peeling steps: the disjunctive form preserves
// equivalence, the conjunctive one does not.
TEST(ReduceStep, PeelingConnective) {
  Formula lhs = parse("p => (q | <>r)");
  EXPECT_TRUE(yalcin_equivalent(lhs, parse("(p => q) | ~(p => ~r)")));
  EXPECT_FALSE(yalcin_equivalent(lhs, parse("(p => q) & ~(p => ~r)")));
  Formula lhs3 = parse("p => (q | []r)");
  EXPECT_TRUE(yalcin_equivalent(lhs3, parse("(p => q) | (p => r)")));
  EXPECT_FALSE(yalcin_equivalent(lhs3, parse("(p => q) & (p => r)")));
}

TEST(Eliminate, Examples) {
  Formula f = parse("(p => q) => r");
  Formula g = eliminate_conditionals(f);
  EXPECT_FALSE(g.has_conditional());
  EXPECT_TRUE(yalcin_equivalent(f, g));
  Formula plain = parse("[]p & <>q");
  EXPECT_EQ(eliminate_conditionals(plain), plain);
  Formula h = eliminate_conditionals(parse("p => []q"));
  EXPECT_TRUE(yalcin_equivalent(h, parse("[](p->bot) | [](p->q)")));
}

TEST(Eliminate, Updates) {
  Formula u = parse("[p][]q");
  EXPECT_EQ(eliminate_conditionals(u), eliminate_conditionals(parse("p => q")));
  for (const char* s : {"[p]<>q", "[<>p](q & [p]~<>r)", "[p => q]([]r | q)", "~[[]p]q"}) {
    Formula f = parse(s);
    Formula g = eliminate_conditionals(f);
    EXPECT_FALSE(g.has_conditional() || g.has_update()) << s;
    EXPECT_TRUE(yalcin_equivalent(f, g)) << s;
  }
}

TEST(Eliminate, RandomFaithful) {
  std::mt19937_64 rng(23);
  gen::Shape s{.atoms = {"p", "q"}, .depth = 4, .max_conditionals = 2, .updates = true};
  auto models = ref::all_models({"p", "q"}, 3);
  for (int i = 0; i < 100; ++i) {
    Formula f = gen::formula(rng, s);
    Formula g = eliminate_conditionals(f);
    ASSERT_FALSE(g.has_conditional() || g.has_update());
    ASSERT_FALSE(ref::compare(models, f, ref::Reading::Yalcin, g, ref::Reading::Yalcin).found)
        << render(f);
  }
}

TEST(PushUpdate, ValidUnderBothReadings) {
  Formula a = parse("<>p & q"), b = parse("[](p | <>q) & ~<>r");
  Formula u = update(a, b), v = push_update(a, b);
  EXPECT_FALSE(ref::compare(models3(), u, ref::Reading::KM, v, ref::Reading::KM).found);
  EXPECT_FALSE(ref::compare(models3(), u, ref::Reading::Yalcin, v, ref::Reading::Yalcin).found);
}

// Interderivability: rewriting with one schema set preserves
// equivalence with the other, checked semantically on instances.
TEST(Schemas, DerivedFormsEquivalent) {
  EXPECT_TRUE(yalcin_equivalent(parse("q => (p | bot)"), parse("q => p")));
  EXPECT_TRUE(yalcin_equivalent(parse("q => (bot | []p)"), parse("q => []p")));
  EXPECT_TRUE(yalcin_equivalent(parse("q => ((p | r) & (p | ~r))"), parse("q => p")));
}
