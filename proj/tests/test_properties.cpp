#include <gtest/gtest.h>

#include "extlab/suites.hpp"
#include "extlab/theorem_lab.hpp"
#include "generators.hpp"

using namespace extlab;
using nakayama::NakayamaAlgebra;
using nakayama::SerialModule;
using nakayama::Shape;

namespace {

Shape any_shape(gen::Rng& rng) { return gen::uniform(rng, 0, 1) ? Shape::Linear : Shape::Cyclic; }

constexpr std::uint32_t kPrimes[] = {2, 3, 5};

}  // namespace

TEST(NakayamaProperty, ClosedFormsAgreeWithOracle) {
  gen::Rng rng(101);
  for (int t = 0; t < 40; ++t) {
    const auto a = gen::kupisch(rng, 4, 6, any_shape(rng));
    const auto p = kPrimes[gen::uniform(rng, 0, 2)];
    const auto v = lab::cross_check_oracle(a, p, 6);
    EXPECT_EQ(v.status, Status::Pass) << instance_key(a) << " p=" << p << ": " << v.witness;
  }
}

TEST(NakayamaProperty, HigherExtIsExt1OfSyzygy) {
  gen::Rng rng(202);
  for (int t = 0; t < 200; ++t) {
    const auto a = gen::kupisch(rng, 5, 9, any_shape(rng));
    const auto m = gen::serial_module(rng, a);
    const auto n = gen::serial_module(rng, a);
    const int i = gen::uniform(rng, 1, 8);
    std::optional<SerialModule> om = m;
    for (int j = 1; j < i && om; ++j) om = nakayama::syzygy(a, *om);
    const int want = om ? nakayama::ext1_dim(a, *om, n) : 0;
    EXPECT_EQ(nakayama::ext_dim(a, m, n, i), want) << instance_key(a) << " " << to_string(m) << " " << to_string(n) << " i=" << i;
  }
}

TEST(NakayamaProperty, OppositeAndDualAreInvolutions) {
  gen::Rng rng(303);
  for (int t = 0; t < 200; ++t) {
    const auto a = gen::kupisch(rng, 5, 9, any_shape(rng));
    const auto op = nakayama::opposite_algebra(a);
    EXPECT_EQ(nakayama::opposite_algebra(op), a) << instance_key(a);
    EXPECT_EQ(op.dimension(), a.dimension());
    const auto m = gen::serial_module(rng, a);
    const auto d = nakayama::dual_module(a, m);
    EXPECT_TRUE(nakayama::is_valid_module(op, d));
    EXPECT_EQ(nakayama::dual_module(op, d), m) << instance_key(a) << " " << to_string(m);
  }
}

TEST(NakayamaProperty, ExtDimensionsStayAboveMinimum) {
  gen::Rng rng(404);
  for (int t = 0; t < 60; ++t) {
    const auto a = gen::kupisch(rng, 4, 8, any_shape(rng));
    const auto v = lab::check_min_inequality(a);
    EXPECT_EQ(v.status, Status::Pass) << v.instance << ": " << v.witness;
  }
}

TEST(NakayamaProperty, RigidityCriterion) {
  gen::Rng rng(505);
  for (int t = 0; t < 60; ++t) {
    const auto a = gen::kupisch(rng, 4, 10, any_shape(rng));
    const auto v = lab::check_rigidity(a);
    EXPECT_EQ(v.status, Status::Pass) << v.instance << ": " << v.witness;
  }
}

TEST(HybridProperty, IdentitiesOnRandomData) {
  gen::Rng rng(606);
  int built = 0;
  for (int t = 0; t < 400 && built < 20; ++t) {
    const auto d = gen::biserial(rng, gen::uniform(rng, 1, 3));
    if (!d) continue;
    const auto b = hybrid::BiserialQuiver::validate(*d);
    // dim = sum of m n^2 over g-cycles; the path enumeration grows fast beyond small m n
    int dim = 0, mn = 0;
    for (const auto& cyc : b.g_cycles()) {
      dim += b.mn(cyc.front()) * b.n(cyc.front());
      mn = std::max(mn, b.mn(cyc.front()));
    }
    if (mn > 8 || dim > 60) continue;
    const auto p = kPrimes[gen::uniform(rng, 0, 2)];
    const auto alg = quiver::build_algebra(hybrid::build_hybrid(b, p));
    ++built;
    EXPECT_EQ(alg->dimension(), static_cast<std::size_t>(dim)) << hybrid::biserial_to_toml(*d);
    catalog::Report r("random");
    catalog::structural_checks(r, alg, b);
    for (const auto& v : r.verdicts()) EXPECT_EQ(v.status, Status::Pass) << hybrid::biserial_to_toml(*d) << v.check << ": " << v.witness;
    const auto c = alg->cartan();
    for (std::size_t i = 0; i < c.size(); ++i) {
      for (std::size_t j = 0; j < c.size(); ++j) EXPECT_EQ(c[i][j], c[j][i]) << hybrid::biserial_to_toml(*d);
    }
  }
  EXPECT_GE(built, 10);
}

TEST(ModuleProperty, IsoTestRespectsDirectSums) {
  gen::Rng rng(707);
  for (int t = 0; t < 25; ++t) {
    const auto a = gen::kupisch(rng, 3, 6, Shape::Cyclic);
    const auto alg = quiver::build_algebra(realize_kupisch(a, 2));
    const auto m = oracle_serial_module(alg, a, gen::serial_module(rng, a));
    const auto n = oracle_serial_module(alg, a, gen::serial_module(rng, a));
    EXPECT_EQ(quiver::iso_test(quiver::direct_sum(m, n), quiver::direct_sum(n, m)), quiver::IsoResult::Isomorphic);
    const auto same = quiver::iso_test(m, n);
    const auto sums = quiver::iso_test(quiver::direct_sum(m, m), quiver::direct_sum(m, n));
    EXPECT_EQ(same, sums) << instance_key(a);
    const auto om = quiver::syzygy(quiver::direct_sum(m, n));
    EXPECT_EQ(quiver::iso_test(om, quiver::direct_sum(quiver::syzygy(m), quiver::syzygy(n))), quiver::IsoResult::Isomorphic);
  }
}
