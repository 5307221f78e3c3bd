#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "extlab/catalog.hpp"
#include "extlab/module_expr.hpp"
#include "extlab/realize.hpp"
#include "extlab/suites.hpp"

using namespace extlab;
using namespace extlab::quiver;

namespace {

using Dims = std::vector<std::size_t>;

struct Loaded {
  AlgebraPtr alg;
  ModuleResolver res;
  explicit Loaded(const catalog::Entry& e) : alg(build_algebra(e.presentation)), res(alg) {}
  Dims dims(const std::string& expr) const { return res.resolve(expr).dims(); }
  int vertex(const std::string& name) const { return res.vertex(name); }
};

Loaded load(const std::string& name) {
  auto e = catalog::find(name);
  if (!e) throw std::runtime_error("no entry " + name);
  return Loaded(*e);
}

Dims self_ext(const Loaded& l, const std::string& simple, int depth) {
  const Module s = l.res.resolve(simple);
  const auto chain = syzygy_chain(s, depth);
  Dims out;
  for (int i = 1; i <= depth; ++i) out.push_back(ext_dim_from_chain(chain, s, i));
  return out;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST(Catalog, EveryEntryVerifies) {
  for (const auto& e : catalog::entries()) {
    const auto vs = catalog::verify_entry(e);
    ASSERT_FALSE(vs.empty()) << e.name;
    for (const auto& v : vs) EXPECT_EQ(v.status, Status::Pass) << e.name << " " << v.check << ": " << v.witness;
  }
}

TEST(Catalog, NamesAreUnique) {
  std::set<std::string> names;
  for (const auto& e : catalog::entries()) EXPECT_TRUE(names.insert(e.name).second) << e.name;
  EXPECT_FALSE(catalog::find("nope").has_value());
}

TEST(Catalog, LoopNonvanishingCounterexample) {
  const auto l = load("example_2_8");
  const auto d = catalog::loop_nonvanishing(l.alg, l.vertex("1"), 12);
  EXPECT_EQ(d, (Dims{1, 1, 0, 1, 1, 0, 1, 1, 1, 1, 1, 1}));
  EXPECT_EQ(self_ext(l, "S1", 12), d);
}

TEST(Catalog, SD3CValues) {
  const auto l = load("sd3c1");
  EXPECT_EQ(self_ext(l, "S0", 12), (Dims{1, 2, 3, 3, 4, 5, 5, 6, 7, 7, 8, 9}));
  EXPECT_EQ(l.dims("K2"), (Dims{3, 2, 2}));
  EXPECT_EQ(l.dims("W"), (Dims{2, 2, 2}));

  const auto l2 = load("sd3c2");
  EXPECT_EQ(l2.dims("K2"), (Dims{5, 4, 4}));
  EXPECT_EQ(l2.dims("W"), (Dims{4, 4, 4}));
  EXPECT_EQ(l2.dims("rhoL"), (Dims{2, 0, 0}));
  EXPECT_EQ(l2.dims("U"), (Dims{2, 2, 2}));
  EXPECT_EQ(catalog::radical_mod_socle(l2.res.resolve("P1")).dims(), (Dims{2, 1, 1}));
}

TEST(Catalog, SD2BValues) {
  const Dims loop{1, 1, 2, 3, 3, 3, 4, 5, 5, 5, 6, 7};
  for (const auto& name : {"sd2b3_s2", "sd2b3_s3"}) {
    const auto l = load(name);
    EXPECT_EQ(self_ext(l, "S0", 12), loop) << name;
    EXPECT_EQ(self_ext(l, "S1", 12), loop) << name;
  }
  const auto s2 = load("sd2b3_s2");
  EXPECT_EQ(s2.dims("K2"), (Dims{3, 4}));
  const auto s3 = load("sd2b3_s3");
  EXPECT_EQ(s3.dims("K2"), (Dims{4, 5}));
  EXPECT_EQ(omega_period(s2.res.resolve("W"), 8).period, 2);
  EXPECT_EQ(omega_period(load("sd2b3_s2_c0").res.resolve("W"), 8).period, 1);
}

TEST(Catalog, SD2AValues) {
  const auto l = load("sd2a2");
  EXPECT_EQ(l.dims("omega:1:X"), (Dims{5, 2}));
  EXPECT_EQ(l.dims("omega:2:X"), (Dims{3, 2}));
  EXPECT_EQ(l.dims("omega:3:S0"), (Dims{3, 1}));
  EXPECT_EQ(l.dims("W"), (Dims{4, 3}));
  EXPECT_EQ(catalog::loop_nonvanishing(l.alg, 0, 12), (Dims{1, 1, 1, 1, 2, 2, 1, 2, 3, 2, 2, 3}));
}

TEST(Catalog, HybridFamilyValues) {
  const auto t = load("triangle");
  EXPECT_EQ(t.alg->dimension(), 24u);
  EXPECT_EQ(t.alg->loewy_length(), 5);
  const auto tb = load("triangle_brauer");
  EXPECT_EQ(tb.alg->dimension(), 12u);
  EXPECT_EQ(tb.alg->loewy_length(), 3);

  const auto h = load("hybrid_loop");
  EXPECT_EQ(h.alg->dimension(), 11u);
  EXPECT_EQ(h.alg->loewy_length(), 4);
  EXPECT_EQ(catalog::loop_nonvanishing(h.alg, 0, 12), (Dims{1, 1, 1, 1, 2, 2, 1, 2, 3, 2, 2, 3}));
  const auto s1 = catalog::loop_nonvanishing(h.alg, 1, 6);
  EXPECT_EQ(s1, (Dims{1, 2, 3, 3, 4, 5}));

  const auto lb = load("loop_brauer");
  EXPECT_EQ(lb.dims("omega:2:S0"), (Dims{3, 3}));
}

TEST(Catalog, KleinFour) {
  const auto l = load("c2xc2");
  Dims want;
  for (std::size_t i = 1; i <= 12; ++i) want.push_back(i + 1);
  EXPECT_EQ(self_ext(l, "S0", 12), want);
}

TEST(Catalog, LoopPatterns) {
  using catalog::LoopPattern;
  EXPECT_TRUE(catalog::matches(LoopPattern::AllNonzero, {1, 1, 2, 3}));
  EXPECT_FALSE(catalog::matches(LoopPattern::AllNonzero, {1, 1, 0, 3}));
  EXPECT_TRUE(catalog::matches(LoopPattern::Except3Mod4, {1, 1, 0, 1, 1, 1, 0, 1}));
  EXPECT_TRUE(catalog::matches(LoopPattern::Ext3Vanishes, {1, 1, 0, 1, 1, 0}));
  EXPECT_EQ(catalog::pattern_string({1, 0, 2}), "1 0 2");
}

TEST(Catalog, SuiteErrors) {
  const auto l = load("sd3c1");
  // vertex 1 of the SD(3C) quiver carries no loop
  try {
    (void)catalog::loop_nonvanishing(l.alg, 1, 4);
    ADD_FAILURE() << "no error";
  } catch (const catalog::SuiteError& e) {
    EXPECT_EQ(e.kind(), "NoLoopAtVertex");
  }

  const auto e = *catalog::find("triangle_brauer");
  const auto tb = build_algebra(e.presentation);
  catalog::Report r(e.name);
  EXPECT_THROW(catalog::verify_quaternion_period4(r, tb, hybrid::BiserialQuiver::validate(*e.biserial), 0, {}), catalog::SuiteError);
}

TEST(Catalog, DataFilesMatchCatalog) {
  const std::string dir = std::string(EXTLAB_SOURCE_DIR) + "/data/";
  for (const auto& e : catalog::entries()) {
    EXPECT_EQ(slurp(dir + e.name + ".toml"), to_toml(e.presentation)) << e.name;
    EXPECT_EQ(presentation_from_toml(slurp(dir + e.name + ".toml")), e.presentation) << e.name;
    if (e.biserial) EXPECT_EQ(slurp(dir + e.name + ".biserial.toml"), hybrid::biserial_to_toml(*e.biserial)) << e.name;
    if (e.kupisch) EXPECT_EQ(kupisch_from_toml(slurp(dir + e.name + ".kupisch.toml")).kupisch(), e.kupisch->kupisch()) << e.name;
  }
}
