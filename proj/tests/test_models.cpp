#include <set>

#include <gtest/gtest.h>

#include "epistemic/error.hpp"
#include "epistemic/model.hpp"

using namespace epi;

TEST(ModelFile, ExampleTwo) {
  Model m = parse_model("worlds 2\nval p: 0\nval q: 1");
  EXPECT_EQ(m.world_count(), 2);
  EXPECT_EQ(m.valuation("p"), WorldSet::single(0));
  EXPECT_EQ(m.valuation("q"), WorldSet::single(1));
  EXPECT_TRUE(m.valuation("r").empty());
}

TEST(ModelFile, Variants) {
  Model one = parse_model("worlds 1");
  EXPECT_EQ(one.world_count(), 1);
  EXPECT_TRUE(one.valuations().empty());
  EXPECT_EQ(parse_model("worlds 2\nval p: 0 1").valuation("p"), WorldSet::full(2));
  Model c = parse_model("# header\n\nworlds 3\nval p:\nval q: 2\n");
  EXPECT_TRUE(c.valuation("p").empty());
  EXPECT_EQ(c.valuation("q"), WorldSet::single(2));
}

TEST(ModelFile, Errors) {
  EXPECT_THROW(parse_model(""), ModelError);
  EXPECT_THROW(parse_model("worlds 0"), ModelError);
  EXPECT_THROW(parse_model("worlds 63"), ModelError);
  EXPECT_THROW(parse_model("worlds 2\nval p: 2"), ModelError);
  EXPECT_THROW(parse_model("worlds 2\nval p: 0\nval p: 1"), ModelError);
  EXPECT_THROW(parse_model("worlds 2\nval p: 0 0"), ModelError);
  EXPECT_THROW(parse_model("worlds 2\nvals p: 0"), ModelError);
  EXPECT_THROW(parse_model("val p: 0\nworlds 2"), ModelError);
  EXPECT_THROW(parse_model("worlds 2\nval P: 0"), ModelError);
}

TEST(ModelFile, RoundTrip) {
  Model m(4);
  m.set_valuation("p", WorldSet::single(3).with(1));
  m.set_valuation("q", WorldSet());
  EXPECT_EQ(parse_model(render_model(m)), m);
}

TEST(WorldList, ParseAndRender) {
  EXPECT_EQ(parse_world_list("", 3), WorldSet());
  EXPECT_EQ(parse_world_list("0,2", 3), WorldSet::single(0).with(2));
  EXPECT_EQ(render_world_list(WorldSet::single(0).with(2)), "0,2");
  EXPECT_THROW(parse_world_list("3", 3), ModelError);
  EXPECT_THROW(parse_world_list("a", 3), ModelError);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate_models({"p"}, 1).size(), 2u);
  EXPECT_EQ(enumerate_models({"p", "q"}, 1).size(), 4u);
  // 2^(1*1) + 2^(2*1)
  EXPECT_EQ(enumerate_models({"p"}, 2).size(), 6u);
  EXPECT_EQ(ModelSpace({"p", "q"}, 3).size(), 4u + 16u + 64u);
}

TEST(Enumerate, DuplicateFreeAndDeterministic) {
  auto a = enumerate_models({"p", "q"}, 3);
  auto b = enumerate_models({"p", "q"}, 3);
  EXPECT_EQ(a, b);
  std::set<std::string> seen;
  for (const Model& m : a) EXPECT_TRUE(seen.insert(render_model(m)).second);
}

TEST(Enumerate, Contexts) {
  EXPECT_EQ(enumerate_contexts(Model(1)).size(), 2u);
  EXPECT_EQ(enumerate_contexts(Model(2)).size(), 8u);
  EXPECT_EQ(enumerate_contexts(Model(3)).size(), 24u);
  auto ctx = enumerate_contexts(Model(2));
  EXPECT_EQ(ctx.front().state, WorldSet());
  EXPECT_EQ(ctx.back().state, WorldSet::full(2));
}
