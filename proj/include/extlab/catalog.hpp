// Named presentations used by the verification suites and the CLI.
#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hybrid.hpp"
#include "nakayama.hpp"
#include "presentation.hpp"
#include "realize.hpp"

namespace extlab::catalog {

using quiver::ModuleDefinition;
using quiver::Presentation;

enum class Family { SymmetricCounterexample, SD3C, SD2B, SD2A, Hybrid, LocalGroup };

inline std::string to_string(Family f) {
  switch (f) {
    case Family::SymmetricCounterexample: return "counterexample";
    case Family::SD3C: return "sd3c";
    case Family::SD2B: return "sd2b";
    case Family::SD2A: return "sd2a";
    case Family::Hybrid: return "hybrid";
    case Family::LocalGroup: return "local";
  }
  return "?";
}

/// Data for the syzygy sequence at a hybrid vertex i0: alpha in T, beta = bar(alpha) not in T.
/// alpha1, alpha2_beta and beta1 are element expressions.
struct HybridVertexSpec {
  std::string vertex;
  std::string alpha;
  std::string beta;
  std::string alpha1;
  std::string alpha2_beta;
  std::string beta1;
  std::size_t expected_dim_u = 0;
};

struct Entry {
  std::string name;
  Family family = Family::Hybrid;
  std::string summary;
  Presentation presentation;
  std::optional<hybrid::BiserialQuiverData> biserial;
  std::optional<nakayama::NakayamaAlgebra> kupisch;
  std::optional<HybridVertexSpec> hybrid_vertex;
  int s = 0;
};

namespace detail {

inline quiver::Relation rel(std::vector<std::pair<long long, std::string>> terms) {
  quiver::Relation r;
  for (auto& [c, p] : terms) r.terms.push_back({c, quiver::parse_path_labels(p)});
  return r;
}

inline std::string power(const std::string& x, int e) {
  if (e == 1) return x;
  return x + "^" + std::to_string(e);
}

inline quiver::Quiver make_quiver(std::vector<std::string> vertices, std::vector<std::tuple<std::string, std::string, std::string>> arrows) {
  std::vector<quiver::Arrow> out;
  auto idx = [&](const std::string& v) {
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      if (vertices[i] == v) return static_cast<int>(i);
    }
    throw std::logic_error("catalog quiver uses unknown vertex " + v);
  };
  for (auto& [l, s, t] : arrows) out.push_back({l, idx(s), idx(t)});
  return quiver::Quiver(std::move(vertices), std::move(out));
}

inline ModuleDefinition generated(std::string name, std::string desc, std::vector<std::string> summands,
                                  std::vector<std::vector<std::string>> gens, std::vector<std::vector<std::string>> modulo = {}) {
  ModuleDefinition d;
  d.name = std::move(name);
  d.kind = "generated";
  d.description = std::move(desc);
  d.summands = std::move(summands);
  d.generators = std::move(gens);
  d.modulo = std::move(modulo);
  return d;
}

inline ModuleDefinition kernel(std::string name, std::string desc, std::vector<std::string> summands, std::vector<std::string> coeffs,
                               std::string vertex) {
  ModuleDefinition d;
  d.name = std::move(name);
  d.kind = "kernel";
  d.description = std::move(desc);
  d.summands = std::move(summands);
  d.generators = {std::move(coeffs)};
  d.vertex = std::move(vertex);
  return d;
}

inline ModuleDefinition top_kernel(std::string name, std::string desc, std::string base, std::string vertex) {
  ModuleDefinition d;
  d.name = std::move(name);
  d.kind = "top_kernel";
  d.description = std::move(desc);
  d.base = std::move(base);
  d.vertex = std::move(vertex);
  return d;
}

}  // namespace detail

/// Symmetric algebra over F_2 with a loop at vertex 1 whose simple has Ext^1 != 0 but Ext^3 = 0.
inline Entry symmetric_counterexample() {
  using detail::rel;
  Entry e;
  e.name = "example_2_8";
  e.family = Family::SymmetricCounterexample;
  e.summary = "representation-finite symmetric algebra, loop at vertex 1, Ext^3(S1,S1) = 0";
  auto& p = e.presentation;
  p.name = e.name;
  p.description = e.summary;
  p.characteristic = 2;
  p.loewy_bound = 5;
  p.quiver = detail::make_quiver({"1", "2", "3"}, {{"a1", "1", "1"}, {"b1", "1", "2"}, {"b2", "2", "3"}, {"b3", "3", "1"}});
  p.relations = {rel({{1, "b3 b1"}}),         rel({{1, "a1^2 b1"}}), rel({{1, "b1 b2 b3"}, {-1, "a1^2"}}),
                 rel({{1, "b3 a1^2"}}),       rel({{1, "a1^4"}}),    rel({{1, "b2 b3 a1 b1 b2"}})};
  return e;
}

inline Presentation sd3c_quiver_base(const std::string& name, std::uint32_t p, int loewy) {
  Presentation pres;
  pres.name = name;
  pres.characteristic = p;
  pres.loewy_bound = loewy;
  pres.quiver = detail::make_quiver({"0", "1", "2"}, {{"beta", "1", "0"}, {"gamma", "0", "1"}, {"delta", "0", "2"}, {"eta", "2", "0"}, {"rho", "0", "0"}});
  return pres;
}

inline std::vector<ModuleDefinition> sd3c_modules() {
  using detail::generated;
  return {
      generated("rhoL", "right ideal generated by the loop rho", {"0"}, {{"rho"}}),
      detail::kernel("K2", "second syzygy of S0: kernel of (x,y,z) -> rho x + gamma y + delta z", {"0", "1", "2"}, {"rho", "gamma", "delta"}, "0"),
      generated("W", "maximal submodule of K2 with quotient S0", {"0", "1", "2"}, {{"gamma", "0", "0"}, {"delta", "0", "0"}, {"0", "beta", "-eta"}}),
  };
}

/// Semidihedral algebra with three simples, first family; s >= 3.
inline Entry sd3c1(int s = 3) {
  using detail::rel;
  Entry e;
  e.name = s == 3 ? "sd3c1" : "sd3c1_s" + std::to_string(s);
  e.family = Family::SD3C;
  e.s = s;
  e.summary = "semidihedral type 3C, first family, s = " + std::to_string(s);
  e.presentation = sd3c_quiver_base(e.name, 2, s + 1);
  e.presentation.description = e.summary;
  e.presentation.relations = {rel({{1, "beta delta"}}), rel({{1, "beta rho"}}),  rel({{1, "rho gamma"}}), rel({{1, "eta gamma"}}),
                              rel({{1, "eta rho"}}),    rel({{1, "rho delta"}}), rel({{1, detail::power("rho", s)}, {-1, "gamma beta"}}),
                              rel({{1, "gamma beta"}, {-1, "delta eta"}}),       rel({{1, "beta gamma beta"}}),
                              rel({{1, "eta delta eta"}})};
  e.presentation.modules = sd3c_modules();
  return e;
}

/// Semidihedral algebra with three simples, second family, s = k = 2.
/// The zero relation at vertex 1 is (beta gamma)^(k-1) beta delta.
inline Entry sd3c2() {
  using detail::rel;
  Entry e;
  e.name = "sd3c2";
  e.family = Family::SD3C;
  e.s = 2;
  e.summary = "semidihedral type 3C, second family, s = 2, k = 2";
  e.presentation = sd3c_quiver_base(e.name, 2, 5);
  e.presentation.description = e.summary;
  e.presentation.relations = {rel({{1, "beta rho"}}),
                              rel({{1, "rho delta"}}),
                              rel({{1, "eta rho"}}),
                              rel({{1, "rho gamma"}}),
                              rel({{1, "gamma beta"}, {-1, "delta eta"}}),
                              rel({{1, "gamma beta gamma beta"}, {-1, "rho^2"}}),
                              rel({{1, "beta gamma beta delta"}}),
                              rel({{1, "eta delta eta gamma"}})};
  e.presentation.modules = sd3c_modules();
  e.presentation.modules.push_back(detail::generated("U", "(P1 + P2)/(beta,eta), the first syzygy of rhoL", {"1", "2"}, {{"e:1", "0"}, {"0", "e:2"}}, {{"beta", "eta"}}));
  return e;
}

/// Singular disc algebra with two simples and loops alpha, eta.
inline Entry sd2b3(int s, long long c) {
  using detail::power;
  using detail::rel;
  Entry e;
  e.name = "sd2b3_s" + std::to_string(s) + (c == 1 ? "" : "_c" + std::to_string(c));
  e.family = Family::SD2B;
  e.s = s;
  e.summary = "semidihedral type 2B, s = " + std::to_string(s) + ", c = " + std::to_string(c);
  auto& p = e.presentation;
  p.name = e.name;
  p.description = e.summary;
  p.characteristic = 2;
  p.loewy_bound = s + 2;
  p.quiver = detail::make_quiver({"0", "1"}, {{"alpha", "0", "0"}, {"beta", "0", "1"}, {"gamma", "1", "0"}, {"eta", "1", "1"}});
  auto gb = c == 0 ? rel({{1, "gamma beta"}, {-1, "eta^2"}}) : rel({{1, "gamma beta"}, {-1, "eta^2"}, {-c, power("eta", s + 1)}});
  p.relations = {rel({{1, "beta gamma"}, {-1, "alpha^2"}}),
                 rel({{1, "alpha beta"}, {-1, "beta eta"}}),
                 rel({{1, "eta gamma"}, {-1, "gamma alpha"}}),
                 gb,
                 rel({{1, power("alpha", s) + " beta"}}),
                 rel({{1, power("alpha", s + 2)}}),
                 rel({{1, power("eta", s + 2)}}),
                 rel({{1, power("eta", s) + " gamma"}}),
                 rel({{1, "beta " + power("eta", s)}})};
  p.modules = {
      detail::kernel("K2", "second syzygy of S0: kernel of (x,y) -> alpha x + beta y", {"0", "1"}, {"alpha", "beta"}, "0"),
      detail::generated("W", "submodule of K2 generated by (alpha,-gamma) and (beta,-eta)", {"0", "1"}, {{"alpha", "-gamma"}, {"beta", "-eta"}}),
  };
  return e;
}

/// Semidihedral algebra with two simples, k = 2, c = 0.
inline Entry sd2a2() {
  using detail::rel;
  Entry e;
  e.name = "sd2a2";
  e.family = Family::SD2A;
  e.summary = "semidihedral type 2A, k = 2, c = 0";
  auto& p = e.presentation;
  p.name = e.name;
  p.description = e.summary;
  p.characteristic = 2;
  p.loewy_bound = 7;
  p.quiver = detail::make_quiver({"0", "1"}, {{"alpha", "0", "0"}, {"beta", "0", "1"}, {"gamma", "1", "0"}});
  p.relations = {rel({{1, "gamma beta"}}), rel({{1, "alpha^2"}, {-1, "beta gamma alpha beta gamma"}}),
                 rel({{1, "alpha beta gamma alpha beta gamma"}, {-1, "beta gamma alpha beta gamma alpha"}})};
  p.modules = {
      detail::generated("X", "alpha L / (alpha L cap beta L)", {"0"}, {{"alpha"}}, {{"beta"}}),
      detail::top_kernel("W", "kernel of the top map from the fourth syzygy of S0 onto S0", "omega:4:S0", "0"),
  };
  // The arrow after beta in its f-orbit is a virtual loop at 1, realized by (gamma alpha beta)^2.
  e.hybrid_vertex = HybridVertexSpec{"0", "alpha", "beta", "alpha", "alpha beta", "gamma alpha beta gamma alpha beta", 2};
  return e;
}

inline Entry hybrid_entry(std::string summary, hybrid::BiserialQuiverData d, std::uint32_t p = 2) {
  Entry e;
  e.name = d.name;
  e.family = Family::Hybrid;
  e.summary = std::move(summary);
  e.presentation = hybrid::build_hybrid(hybrid::BiserialQuiver::validate(d), p);
  e.presentation.description = e.summary;
  e.biserial = std::move(d);
  return e;
}

inline hybrid::BiserialQuiverData triangle_data(bool all_triangles, int m) {
  hybrid::BiserialQuiverData d;
  d.name = all_triangles ? "triangle" : "triangle_brauer";
  d.vertices = {"0", "1", "2"};
  d.arrows = {{"a0", 0, 1}, {"a1", 1, 2}, {"a2", 2, 0}, {"b0", 0, 2}, {"b1", 1, 0}, {"b2", 2, 1}};
  d.f_cycles = {{"a0", "a1", "a2"}, {"b0", "b2", "b1"}};
  if (all_triangles) d.triangles = {"a0", "a1", "a2", "b0", "b1", "b2"};
  d.default_m = m;
  return d;
}

inline hybrid::BiserialQuiverData loop_data(bool hybrid_vertex) {
  hybrid::BiserialQuiverData d;
  d.name = hybrid_vertex ? "hybrid_loop" : "loop_brauer";
  d.vertices = {"0", "1"};
  d.arrows = {{"alpha", 0, 0}, {"beta", 0, 1}, {"gamma", 1, 0}, {"eps", 1, 1}};
  d.f_cycles = {{"alpha"}, {"beta", "eps", "gamma"}};
  if (hybrid_vertex) d.triangles = {"alpha"};
  d.cycle_parameters = {{"eps", 2, 1}};
  return d;
}

inline Entry local_kupisch(const std::string& name, int order, std::uint32_t p) {
  Entry e;
  e.name = name;
  e.family = Family::LocalGroup;
  e.summary = "group algebra of the cyclic group of order " + std::to_string(order) + " over F_" + std::to_string(p);
  e.kupisch = nakayama::NakayamaAlgebra(nakayama::Shape::Cyclic, {order});
  e.presentation = realize_kupisch(*e.kupisch, p);
  e.presentation.name = name;
  e.presentation.description = e.summary;
  return e;
}

inline Entry klein_four() {
  using detail::rel;
  Entry e;
  e.name = "c2xc2";
  e.family = Family::LocalGroup;
  e.summary = "group algebra of the Klein four group over F_2";
  auto& p = e.presentation;
  p.name = e.name;
  p.description = e.summary;
  p.characteristic = 2;
  p.loewy_bound = 3;
  p.quiver = detail::make_quiver({"0"}, {{"x", "0", "0"}, {"y", "0", "0"}});
  p.relations = {rel({{1, "x^2"}}), rel({{1, "y^2"}}), rel({{1, "x y"}, {1, "y x"}})};
  return e;
}

inline std::vector<Entry> entries() {
  std::vector<Entry> out;
  out.push_back(symmetric_counterexample());
  out.push_back(sd3c1(3));
  out.push_back(sd3c2());
  out.push_back(sd2b3(2, 1));
  out.push_back(sd2b3(2, 0));
  out.push_back(sd2b3(3, 1));
  out.push_back(sd2a2());
  out.push_back(hybrid_entry("weighted surface algebra on a triangle, every vertex quaternion", triangle_data(true, 2)));
  out.push_back(hybrid_entry("Brauer graph algebra on the triangle quiver", triangle_data(false, 1)));
  {
    Entry e = hybrid_entry("hybrid vertex with a loop in T, the other arrow in an f-orbit of length 3", loop_data(true));
    e.hybrid_vertex = HybridVertexSpec{"0", "alpha", "beta", "alpha", "alpha beta", "eps", 3};
    out.push_back(std::move(e));
  }
  out.push_back(hybrid_entry("Brauer graph algebra with a loop at vertex 0", loop_data(false)));
  out.push_back(local_kupisch("c2", 2, 2));
  out.push_back(local_kupisch("c4", 4, 2));
  out.push_back(local_kupisch("c3", 3, 3));
  out.push_back(local_kupisch("c5", 5, 5));
  out.push_back(klein_four());
  return out;
}

inline std::optional<Entry> find(std::string_view name) {
  for (auto& e : entries()) {
    if (e.name == name) return e;
  }
  return std::nullopt;
}

}  // namespace extlab::catalog
