#include <gtest/gtest.h>

#include <sstream>

#include "extlab/theorem_lab.hpp"

using namespace extlab;
using namespace extlab::lab;
using nakayama::NakayamaAlgebra;
using nakayama::Shape;

namespace {

std::vector<std::vector<int>> series(const std::vector<NakayamaAlgebra>& as) {
  std::vector<std::vector<int>> out;
  for (const auto& a : as) out.push_back(a.kupisch());
  return out;
}

SweepConfig config(int n, int c, std::set<Shape> shapes = {Shape::Cyclic}) {
  SweepConfig cfg;
  cfg.n_max = n;
  cfg.c_max = c;
  cfg.shapes = std::move(shapes);
  return cfg;
}

NakayamaAlgebra cyc(std::vector<int> s) { return NakayamaAlgebra(Shape::Cyclic, std::move(s)); }

}  // namespace

TEST(Enumerate, SmallCases) {
  EXPECT_EQ(series(enumerate_kupisch(config(1, 3))), (std::vector<std::vector<int>>{{1}, {2}, {3}}));

  const auto two = series(enumerate_kupisch(config(2, 3)));
  for (const auto& s : std::vector<std::vector<int>>{{2, 2}, {2, 3}, {3, 3}}) {
    EXPECT_EQ(std::count(two.begin(), two.end(), s), 1);
  }
  EXPECT_EQ(std::count(two.begin(), two.end(), std::vector<int>{3, 2}), 0);

  const auto lin = enumerate_kupisch(config(2, 2, {Shape::Linear}));
  ASSERT_EQ(lin.size(), 1u);
  EXPECT_EQ(lin[0].kupisch(), (std::vector<int>{2, 1}));
  EXPECT_EQ(lin[0].shape(), Shape::Linear);
}

TEST(Enumerate, DefaultSweepSize) { EXPECT_EQ(enumerate_kupisch(SweepConfig{}).size(), 52u); }

TEST(Enumerate, NoRotationDuplicates) {
  const auto all = series(enumerate_kupisch(config(4, 6)));
  std::set<std::vector<int>> seen;
  for (auto s : all) {
    std::vector<int> best = s;
    for (std::size_t r = 0; r < s.size(); ++r) {
      std::rotate(s.begin(), s.begin() + 1, s.end());
      best = std::min(best, s);
    }
    EXPECT_TRUE(seen.insert(best).second);
  }
}

TEST(Checks, MinInequality) {
  const auto v = check_min_inequality(cyc({4, 4}));
  EXPECT_EQ(v.status, Status::Pass);
  EXPECT_EQ(v.instance, "cyclic[4,4]");
  EXPECT_EQ(v.witness, "64 ordered pairs");
  EXPECT_EQ(check_min_inequality(cyc({2, 3})).status, Status::Pass);
}

TEST(Checks, NonvanishingSkipsRigidAlgebras) {
  EXPECT_EQ(check_nonvanishing(cyc({2, 3}), 10).status, Status::Skipped);
  EXPECT_EQ(check_nonvanishing(cyc({3, 3}), 10).status, Status::Skipped);
  EXPECT_EQ(check_nonvanishing(cyc({4, 4}), 10).status, Status::Pass);
  EXPECT_EQ(check_nonvanishing(cyc({5, 5, 5}), 20).status, Status::Skipped);
  EXPECT_EQ(check_nonvanishing(cyc({6, 6, 6}), 20).status, Status::Pass);
}

TEST(Checks, LoewyBound) {
  EXPECT_EQ(check_loewy_bound(cyc({3, 3}), 10).status, Status::Skipped);
  EXPECT_EQ(check_loewy_bound(cyc({4, 4}), 10).status, Status::Pass);
  EXPECT_EQ(check_loewy_bound(cyc({2, 3}), 10).status, Status::Pass);
  EXPECT_EQ(check_loewy_bound(cyc({5, 5, 5}), 10).status, Status::Skipped);
}

TEST(Checks, RigidityAndDuality) {
  for (const auto& a : {cyc({4, 4}), cyc({2, 3}), cyc({5, 5, 5}), cyc({3, 4, 4}), NakayamaAlgebra(Shape::Linear, {3, 2, 1})}) {
    EXPECT_EQ(check_rigidity(a).status, Status::Pass) << instance_key(a);
    EXPECT_EQ(check_duality(a).status, Status::Pass) << instance_key(a);
  }
}

TEST(Checks, Oracle) {
  const auto v = cross_check_oracle(cyc({4, 4}), 2, 8);
  EXPECT_EQ(v.status, Status::Pass) << v.witness;
  EXPECT_EQ(v.check, "oracle-p2");
  EXPECT_NE(v.witness.find("dim 8"), std::string::npos);
  EXPECT_EQ(cross_check_oracle(cyc({5}), 5, 6).status, Status::Pass);
  EXPECT_EQ(cross_check_oracle(cyc({2, 3}), 3, 6).status, Status::Pass);
}

TEST(Checks, ExtremalSeries) {
  for (int n = 2; n <= 5; ++n) EXPECT_EQ(check_extremal_series(n).status, Status::Pass) << n;
  EXPECT_EQ(check_extremal_series(2).instance, "cyclic[2,3]");
  EXPECT_EQ(check_extremal_series(3).instance, "cyclic[3,5,4]");
  EXPECT_EQ(check_extremal_series(4).witness, "gldim 2, L=7");
}

TEST(Sweep, SmallSweepHasNoFailures) {
  auto cfg = config(2, 5);
  cfg.ext_depth = 12;
  const auto vs = sweep(cfg);
  EXPECT_FALSE(any_failed(vs));
  EXPECT_EQ(std::count_if(vs.begin(), vs.end(), [](const Verdict& v) { return v.check == "extremal-series"; }), 3);
}

TEST(Sweep, Deterministic) {
  auto cfg = config(2, 4, {Shape::Cyclic, Shape::Linear});
  cfg.threads = 3;
  const auto a = sweep(cfg);
  cfg.threads = 1;
  EXPECT_EQ(sweep(cfg), a);
}

TEST(Sweep, SelectedChecksOnly) {
  auto cfg = config(2, 4);
  cfg.checks = {"rigidity"};
  for (const auto& v : sweep(cfg)) EXPECT_EQ(v.check, "rigidity");
  cfg.checks = {"1.5"};
  EXPECT_THROW(sweep(cfg), std::invalid_argument);
}

TEST(Sweep, EmptyRange) { EXPECT_TRUE(sweep(config(1, 5, {Shape::Linear})).empty()); }

TEST(Report, JsonRoundTrip) {
  const auto vs = sweep(config(2, 3));
  std::ostringstream os;
  write_json_lines(os, vs, 24301);
  std::istringstream in(os.str());
  std::string line;
  std::vector<Verdict> back;
  while (std::getline(in, line)) {
    const auto j = nlohmann::json::parse(line);
    EXPECT_EQ(j.at("schema_version"), kReportSchemaVersion);
    EXPECT_EQ(j.at("seed"), 24301u);
    back.push_back(verdict_from_json(j));
  }
  EXPECT_EQ(back, vs);
}

TEST(Report, CsvQuoting) {
  std::ostringstream os;
  write_csv(os, {pass("cyclic[2,3]", "duality", "opposite [2,3]")});
  EXPECT_EQ(os.str(), "schema_version,instance,check,status,witness\n1,\"cyclic[2,3]\",duality,pass,\"opposite [2,3]\"\n");
  EXPECT_EQ(status_counts({pass("a", "b"), skipped("a", "c", "r")}), "1 pass, 0 fail, 1 skipped");
}
