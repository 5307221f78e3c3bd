// Module expressions over a presentation.
//
//   S<v>            simple module at vertex v
//   P<v>            indecomposable projective at v
//   arrow:<a>       arrow module aA
//   elem:<x>        right ideal xA, x an element expression in a single e_v A
//   rad:<expr>      radical
//   soc:<expr>      socle
//   top:<expr>      top
//   omega:<k>:<expr>  k-th syzygy
//   <name>          a module defined in the presentation
#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "module.hpp"

namespace extlab::quiver {

class ModuleExprError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A submodule of an explicit sum of projectives.
struct EmbeddedModule {
  std::shared_ptr<ProjectiveSum> ambient;
  GradedSubspace sub;

  Module module() const { return submodule(ambient->module(), sub); }
};

class ModuleResolver {
 public:
  explicit ModuleResolver(AlgebraPtr alg) : alg_(std::move(alg)) {}

  const AlgebraPtr& algebra() const { return alg_; }

  int vertex(std::string_view name) const {
    auto v = alg_->quiver().find_vertex(name);
    if (!v) throw ModuleExprError("unknown vertex '" + std::string(name) + "'");
    return *v;
  }

  Module resolve(std::string_view expr) const { return resolve(expr, 0); }

  Vector element(std::string_view text) const {
    try {
      return alg_->parse_element(text);
    } catch (const std::exception& e) {
      throw ModuleExprError("bad element '" + std::string(text) + "': " + e.what());
    }
  }

  std::vector<Vector> tuple(const std::vector<std::string>& row) const {
    std::vector<Vector> out;
    for (const auto& s : row) out.push_back(element(s));
    return out;
  }

  std::vector<int> vertices(const std::vector<std::string>& names) const {
    std::vector<int> out;
    for (const auto& n : names) out.push_back(vertex(n));
    return out;
  }

  /// Embedding of a "generated" definition without modulo, or a "kernel" definition.
  EmbeddedModule embed(const ModuleDefinition& d) const {
    auto ambient = std::make_shared<ProjectiveSum>(alg_, vertices(d.summands));
    const Module& amb = ambient->module();
    if (d.kind == "generated") {
      if (!d.modulo.empty()) throw ModuleExprError("module '" + d.name + "' is a quotient and has no embedding");
      std::vector<Element> gens;
      for (const auto& row : d.generators) gens.push_back(ambient->element(tuple(row)));
      return {ambient, generate_submodule(amb, gens)};
    }
    if (d.kind == "kernel") {
      return {ambient, kernel_subspace(amb, multiplication_map(*ambient, vertex(d.vertex), tuple(d.generators.at(0))))};
    }
    throw ModuleExprError("module '" + d.name + "' of kind " + d.kind + " has no embedding");
  }

  /// (x_g) |-> sum_g a_g x_g from the projective sum into P_w.
  Homomorphism multiplication_map(const ProjectiveSum& ambient, int w, const std::vector<Vector>& coeffs) const {
    const auto& alg = *alg_;
    if (coeffs.size() != ambient.tops().size()) throw ModuleExprError("kernel map needs one element per summand");
    for (std::size_t g = 0; g < coeffs.size(); ++g) {
      for (std::size_t b = 0; b < coeffs[g].size(); ++b) {
        if (coeffs[g][b] != 0 && (alg.start_vertex(b) != w || alg.end_vertex(b) != ambient.tops()[g])) {
          throw ModuleExprError("kernel map coefficient " + std::to_string(g) + " is not in e_w A e_v");
        }
      }
    }
    const auto pos = block_positions(alg);
    const Module target = projective_module(alg_, w);
    Homomorphism h;
    for (int u = 0; u < alg.num_vertices(); ++u) h.emplace_back(ambient.module().dim(u), target.dim(u));
    for (std::size_t g = 0; g < coeffs.size(); ++g) {
      for (std::size_t b = 0; b < alg.dimension(); ++b) {
        if (alg.start_vertex(b) != ambient.tops()[g]) continue;
        const int u = alg.end_vertex(b);
        const Vector img = alg.times_path(coeffs[g], alg.basis_path(b));
        auto& mat = h[static_cast<std::size_t>(u)];
        const std::size_t row = ambient.index(g, b);
        for (std::size_t c = 0; c < img.size(); ++c) {
          if (img[c] != 0) mat(row, pos[c]) = img[c];
        }
      }
    }
    return h;
  }

 private:
  Module definition(const ModuleDefinition& d, int depth) const {
    if (d.kind == "top_kernel") {
      const Module base = resolve(d.base, depth + 1);
      return submodule(base, top_kernel_subspace(base, vertex(d.vertex)));
    }
    if (d.kind == "generated" && !d.modulo.empty()) {
      std::vector<std::vector<Vector>> gens, mod;
      for (const auto& row : d.generators) gens.push_back(tuple(row));
      for (const auto& row : d.modulo) mod.push_back(tuple(row));
      return tuple_module(alg_, vertices(d.summands), gens, mod);
    }
    return embed(d).module();
  }

  Module resolve(std::string_view expr, int depth) const {
    if (depth > 32) throw ModuleExprError("module expression nests too deeply");
    std::string e(expr);
    while (!e.empty() && e.front() == ' ') e.erase(e.begin());
    while (!e.empty() && e.back() == ' ') e.pop_back();
    if (e.empty()) throw ModuleExprError("empty module expression");
    const auto& pres = alg_->presentation();
    if (const auto* d = pres.find_module(e)) return definition(*d, depth);
    auto starts = [&](std::string_view p) { return e.rfind(p, 0) == 0; };
    if (starts("omega:")) {
      const auto colon = e.find(':', 6);
      if (colon == std::string::npos) throw ModuleExprError("expected omega:<k>:<module>");
      int k = 0;
      try {
        k = std::stoi(e.substr(6, colon - 6));
      } catch (const std::exception&) {
        throw ModuleExprError("bad syzygy index in '" + e + "'");
      }
      if (k < 0) throw ModuleExprError("syzygy index must be nonnegative");
      return syzygy(resolve(e.substr(colon + 1), depth + 1), k);
    }
    if (starts("rad:")) return radical(resolve(e.substr(4), depth + 1));
    if (starts("soc:")) return socle(resolve(e.substr(4), depth + 1));
    if (starts("top:")) return top(resolve(e.substr(4), depth + 1));
    if (starts("arrow:")) {
      auto a = alg_->quiver().find_arrow(e.substr(6));
      if (!a) throw ModuleExprError("unknown arrow '" + e.substr(6) + "'");
      return arrow_module(alg_, *a);
    }
    if (starts("elem:")) {
      const Vector x = element(e.substr(5));
      int v = 0;
      try {
        v = element_start(*alg_, x);
      } catch (const std::exception& ex) {
        throw ModuleExprError(std::string("elem: ") + ex.what());
      }
      return element_module(alg_, v, x);
    }
    if (e.size() > 1 && (e[0] == 'S' || e[0] == 'P')) {
      const int v = vertex(e.substr(1));
      return e[0] == 'S' ? simple_module(alg_, v) : projective_module(alg_, v);
    }
    throw ModuleExprError("cannot parse module expression '" + e + "'");
  }

  AlgebraPtr alg_;
};

}  // namespace extlab::quiver
