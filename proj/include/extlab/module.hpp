// Right modules over a bound quiver algebra, given as quiver representations.
//
// A module stores a vector space M_v per vertex and, for each arrow a: s -> t,
// a dim(M_s) x dim(M_t) matrix so that m . a = m * A_a. Homogeneous elements
// are (vertex, vector) pairs; general elements are one vector per vertex.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "linalg.hpp"

namespace extlab::quiver {

using Element = std::vector<Vector>;  // one component per vertex

/// A subspace of each M_v; a submodule when closed under the arrow actions.
using GradedSubspace = std::vector<Subspace>;

class Module {
 public:
  Module() = default;

  Module(AlgebraPtr alg, std::vector<std::size_t> dims, std::vector<Matrix> action)
      : alg_(std::move(alg)), dims_(std::move(dims)), action_(std::move(action)) {
    const auto& q = alg_->quiver();
    if (dims_.size() != static_cast<std::size_t>(q.num_vertices()) ||
        action_.size() != static_cast<std::size_t>(q.num_arrows())) {
      throw std::invalid_argument("module shape does not match the quiver");
    }
    for (int a = 0; a < q.num_arrows(); ++a) {
      const auto& arr = q.arrow(a);
      auto& m = action_[static_cast<std::size_t>(a)];
      if (m.rows() == 0 && m.cols() == 0) m = Matrix(dim(arr.source), dim(arr.target));
      if (m.rows() != dim(arr.source) || m.cols() != dim(arr.target)) {
        throw std::invalid_argument("arrow matrix for '" + arr.label + "' has the wrong shape");
      }
    }
    check_relations();
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const PrimeField& field() const { return alg_->field(); }
  int num_vertices() const { return static_cast<int>(dims_.size()); }
  const std::vector<std::size_t>& dims() const { return dims_; }
  std::size_t dim(int v) const { return dims_[static_cast<std::size_t>(v)]; }
  std::size_t total_dim() const {
    std::size_t s = 0;
    for (auto d : dims_) s += d;
    return s;
  }
  bool is_zero() const { return total_dim() == 0; }
  const Matrix& action(int a) const { return action_[static_cast<std::size_t>(a)]; }

  Element zero_element() const {
    Element e;
    for (auto d : dims_) e.emplace_back(d, 0);
    return e;
  }

  /// x . a for a general element.
  Element act(const Element& x, int a) const {
    const auto& arr = alg_->quiver().arrow(a);
    Element out = zero_element();
    out[static_cast<std::size_t>(arr.target)] = apply(field(), x[static_cast<std::size_t>(arr.source)], action(a));
    return out;
  }

  /// m . p for m in M_{p.start}.
  Vector act_path(Vector m, const Path& p) const {
    for (int a : p.arrows) m = apply(field(), m, action(a));
    return m;
  }

  /// Each relation acts as zero.
  void check_relations() const {
    const auto& pres = alg_->presentation();
    const auto& q = alg_->quiver();
    for (const auto& rel : pres.relations) {
      const int s = q.arrow(q.arrow_index(rel.terms.front().path.front())).source;
      const int t = q.arrow(q.arrow_index(rel.terms.front().path.back())).target;
      Matrix sum(dim(s), dim(t));
      for (const auto& term : rel.terms) {
        Matrix prod = Matrix::identity(dim(s));
        for (const auto& l : term.path) prod = multiply(field(), prod, action(q.arrow_index(l)));
        sum = add(field(), sum, scale(field(), field().from_int(term.coefficient), prod));
      }
      if (!sum.is_zero()) throw std::logic_error("module does not satisfy a defining relation");
    }
  }

 private:
  AlgebraPtr alg_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix> action_;
};

/// A homomorphism M -> N: one dim(M_v) x dim(N_v) matrix per vertex.
using Homomorphism = std::vector<Matrix>;

// ---------------------------------------------------------------------------
// Graded subspaces and constructions

inline GradedSubspace zero_subspace(const Module& m) {
  GradedSubspace s;
  for (int v = 0; v < m.num_vertices(); ++v) s.emplace_back(m.field(), m.dim(v), Matrix(0, m.dim(v)));
  return s;
}

inline GradedSubspace whole_subspace(const Module& m) {
  GradedSubspace s;
  for (int v = 0; v < m.num_vertices(); ++v) s.push_back(Subspace::whole(m.dim(v)));
  return s;
}

inline std::vector<std::size_t> subspace_dims(const GradedSubspace& s) {
  std::vector<std::size_t> d;
  for (const auto& x : s) d.push_back(x.dim());
  return d;
}

/// Smallest submodule containing the given elements (each split into its vertex components).
inline GradedSubspace generate_submodule(const Module& m, const std::vector<Element>& gens) {
  const auto& f = m.field();
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix> spans;
  for (int v = 0; v < m.num_vertices(); ++v) spans.emplace_back(0, m.dim(v));
  GradedSubspace cur = zero_subspace(m);
  std::vector<std::pair<int, Vector>> queue;
  for (const auto& g : gens) {
    for (int v = 0; v < m.num_vertices(); ++v) queue.emplace_back(v, g[static_cast<std::size_t>(v)]);
  }
  std::size_t head = 0;
  while (head < queue.size()) {
    auto [v, x] = std::move(queue[head++]);
    auto& space = cur[static_cast<std::size_t>(v)];
    if (x.empty() || space.contains(f, x)) continue;
    spans[static_cast<std::size_t>(v)].append_row(x);
    space = Subspace(f, m.dim(v), spans[static_cast<std::size_t>(v)]);
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrow(a).source != v) continue;
      queue.emplace_back(q.arrow(a).target, apply(f, x, m.action(a)));
    }
  }
  return cur;
}

inline GradedSubspace sum_subspaces(const Module& m, const GradedSubspace& a, const GradedSubspace& b) {
  GradedSubspace s;
  for (int v = 0; v < m.num_vertices(); ++v) s.push_back(a[static_cast<std::size_t>(v)].sum(m.field(), b[static_cast<std::size_t>(v)]));
  return s;
}

inline GradedSubspace intersect_subspaces(const Module& m, const GradedSubspace& a, const GradedSubspace& b) {
  GradedSubspace s;
  for (int v = 0; v < m.num_vertices(); ++v) {
    s.push_back(a[static_cast<std::size_t>(v)].intersect(m.field(), b[static_cast<std::size_t>(v)]));
  }
  return s;
}

inline bool contains(const Module& m, const GradedSubspace& big, const GradedSubspace& small) {
  for (int v = 0; v < m.num_vertices(); ++v) {
    const auto& b = small[static_cast<std::size_t>(v)].basis();
    for (std::size_t r = 0; r < b.rows(); ++r) {
      if (!big[static_cast<std::size_t>(v)].contains(m.field(), b.row(r))) return false;
    }
  }
  return true;
}

/// The submodule as a module in its own right (basis = echelon rows).
inline Module submodule(const Module& m, const GradedSubspace& s) {
  const auto& f = m.field();
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix> act;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& src = s[static_cast<std::size_t>(arr.source)];
    const auto& tgt = s[static_cast<std::size_t>(arr.target)];
    Matrix mat(src.dim(), tgt.dim());
    for (std::size_t r = 0; r < src.dim(); ++r) {
      const Vector img = apply(f, src.basis().row(r), m.action(a));
      const Vector c = tgt.coordinates(f, img);
      for (std::size_t j = 0; j < c.size(); ++j) mat(r, j) = c[j];
    }
    act.push_back(std::move(mat));
  }
  return Module(m.algebra(), subspace_dims(s), std::move(act));
}

/// Coordinates of the class of x in M_v / S_v (basis: free columns of S_v).
/// `small` (a submodule of m inside `big`) in the coordinates of submodule(m, big).
inline GradedSubspace relative_subspace(const Module& m, const GradedSubspace& big, const GradedSubspace& small) {
  const auto& f = m.field();
  GradedSubspace out;
  for (int v = 0; v < m.num_vertices(); ++v) {
    const auto& b = big[static_cast<std::size_t>(v)];
    const auto& s = small[static_cast<std::size_t>(v)];
    Matrix rows(s.dim(), b.dim());
    for (std::size_t r = 0; r < s.dim(); ++r) {
      const Vector c = b.coordinates(f, s.basis().row(r));
      for (std::size_t j = 0; j < c.size(); ++j) rows(r, j) = c[j];
    }
    out.emplace_back(f, b.dim(), std::move(rows));
  }
  return out;
}

inline Vector quotient_coordinates(const PrimeField& f, const Subspace& s, std::span<const Scalar> x) {
  const Vector r = s.reduce(f, x);
  Vector out;
  for (auto j : s.free_columns()) out.push_back(r[j]);
  return out;
}

inline Module quotient(const Module& m, const GradedSubspace& s) {
  const auto& f = m.field();
  const auto& q = m.algebra()->quiver();
  std::vector<std::size_t> dims;
  for (int v = 0; v < m.num_vertices(); ++v) dims.push_back(m.dim(v) - s[static_cast<std::size_t>(v)].dim());
  std::vector<Matrix> act;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& arr = q.arrow(a);
    const auto& src = s[static_cast<std::size_t>(arr.source)];
    const auto& tgt = s[static_cast<std::size_t>(arr.target)];
    const auto free = src.free_columns();
    Matrix mat(free.size(), dims[static_cast<std::size_t>(arr.target)]);
    for (std::size_t r = 0; r < free.size(); ++r) {
      const auto c = quotient_coordinates(f, tgt, m.action(a).row(free[r]));
      for (std::size_t j = 0; j < c.size(); ++j) mat(r, j) = c[j];
    }
    act.push_back(std::move(mat));
  }
  return Module(m.algebra(), std::move(dims), std::move(act));
}

/// rad M: the sum of the images of all arrows.
inline GradedSubspace radical_subspace(const Module& m) {
  const auto& q = m.algebra()->quiver();
  std::vector<Matrix> spans;
  for (int v = 0; v < m.num_vertices(); ++v) spans.emplace_back(0, m.dim(v));
  for (int a = 0; a < q.num_arrows(); ++a) {
    const auto& mat = m.action(a);
    for (std::size_t r = 0; r < mat.rows(); ++r) spans[static_cast<std::size_t>(q.arrow(a).target)].append_row(mat.row(r));
  }
  GradedSubspace s;
  for (int v = 0; v < m.num_vertices(); ++v) s.emplace_back(m.field(), m.dim(v), spans[static_cast<std::size_t>(v)]);
  return s;
}

/// soc M: elements killed by every arrow.
inline GradedSubspace socle_subspace(const Module& m) {
  const auto& q = m.algebra()->quiver();
  GradedSubspace s;
  for (int v = 0; v < m.num_vertices(); ++v) {
    std::size_t width = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrow(a).source == v) width += m.action(a).cols();
    }
    Matrix joint(m.dim(v), width);
    std::size_t off = 0;
    for (int a = 0; a < q.num_arrows(); ++a) {
      if (q.arrow(a).source != v) continue;
      const auto& mat = m.action(a);
      for (std::size_t r = 0; r < mat.rows(); ++r) {
        for (std::size_t c = 0; c < mat.cols(); ++c) joint(r, off + c) = mat(r, c);
      }
      off += mat.cols();
    }
    s.emplace_back(m.field(), m.dim(v), left_kernel(m.field(), joint));
  }
  return s;
}

inline Module radical(const Module& m) { return submodule(m, radical_subspace(m)); }
inline Module socle(const Module& m) { return submodule(m, socle_subspace(m)); }
inline Module top(const Module& m) { return quotient(m, radical_subspace(m)); }

inline std::vector<std::size_t> top_dims(const Module& m) {
  const auto rad = radical_subspace(m);
  std::vector<std::size_t> d;
  for (int v = 0; v < m.num_vertices(); ++v) d.push_back(m.dim(v) - rad[static_cast<std::size_t>(v)].dim());
  return d;
}

inline std::vector<std::size_t> socle_dims(const Module& m) { return subspace_dims(socle_subspace(m)); }

/// Dimension vectors of rad^d M / rad^{d+1} M, top first.
inline std::vector<std::vector<std::size_t>> radical_layers(const Module& m) {
  std::vector<std::vector<std::size_t>> layers;
  Module cur = m;
  while (!cur.is_zero()) {
    layers.push_back(top_dims(cur));
    cur = radical(cur);
  }
  return layers;
}

inline int loewy_length(const Module& m) { return static_cast<int>(radical_layers(m).size()); }

// ---------------------------------------------------------------------------
// Standard modules

/// Position of each algebra basis element inside its (start, end) block.
inline std::vector<std::size_t> block_positions(const AlgebraTable& alg) {
  std::map<std::pair<int, int>, std::size_t> counter;
  std::vector<std::size_t> pos(alg.dimension());
  for (std::size_t b = 0; b < alg.dimension(); ++b) pos[b] = counter[{alg.start_vertex(b), alg.end_vertex(b)}]++;
  return pos;
}

/// The direct sum P_{v_1} + ... + P_{v_r}; at vertex w the basis runs over the
/// summands in order, each contributing e_{v_g} A e_w in algebra-basis order.
class ProjectiveSum {
 public:
  ProjectiveSum(AlgebraPtr alg, std::vector<int> tops) : alg_(std::move(alg)), tops_(std::move(tops)) {
    const auto nv = static_cast<std::size_t>(alg_->num_vertices());
    const auto cartan = alg_->cartan();
    pos_ = block_positions(*alg_);
    offsets_.assign(tops_.size(), std::vector<std::size_t>(nv, 0));
    std::vector<std::size_t> dims(nv, 0);
    for (std::size_t g = 0; g < tops_.size(); ++g) {
      for (std::size_t w = 0; w < nv; ++w) {
        offsets_[g][w] = dims[w];
        dims[w] += static_cast<std::size_t>(cartan[static_cast<std::size_t>(tops_[g])][w]);
      }
    }
    std::vector<Matrix> act;
    const auto& q = alg_->quiver();
    for (int a = 0; a < q.num_arrows(); ++a) {
      const auto& arr = q.arrow(a);
      Matrix mat(dims[static_cast<std::size_t>(arr.source)], dims[static_cast<std::size_t>(arr.target)]);
      for (std::size_t g = 0; g < tops_.size(); ++g) {
        for (std::size_t b = 0; b < alg_->dimension(); ++b) {
          if (alg_->start_vertex(b) != tops_[g] || alg_->end_vertex(b) != arr.source) continue;
          const std::size_t row = index(g, b);
          for (auto [c, s] : alg_->right_arrow(b, a)) mat(row, index(g, c)) = alg_->field().add(mat(row, index(g, c)), s);
        }
      }
      act.push_back(std::move(mat));
    }
    module_ = Module(alg_, std::move(dims), std::move(act));
  }

  const Module& module() const { return module_; }
  const std::vector<int>& tops() const { return tops_; }

  /// Index within M_{end(b)} of basis element b of summand g.
  std::size_t index(std::size_t g, std::size_t b) const {
    return offsets_[g][static_cast<std::size_t>(alg_->end_vertex(b))] + pos_[b];
  }

  /// Embeds a tuple of algebra elements (x_g in e_{v_g} A) as an element.
  Element element(const std::vector<Vector>& tuple) const {
    if (tuple.size() != tops_.size()) throw std::invalid_argument("tuple length does not match the number of summands");
    Element e = module_.zero_element();
    for (std::size_t g = 0; g < tops_.size(); ++g) {
      for (std::size_t b = 0; b < alg_->dimension(); ++b) {
        if (tuple[g][b] == 0) continue;
        if (alg_->start_vertex(b) != tops_[g]) {
          throw std::invalid_argument("tuple entry " + std::to_string(g) + " does not lie in e_v A for its summand");
        }
        e[static_cast<std::size_t>(alg_->end_vertex(b))][index(g, b)] = tuple[g][b];
      }
    }
    return e;
  }

 private:
  AlgebraPtr alg_;
  std::vector<int> tops_;
  std::vector<std::size_t> pos_;
  std::vector<std::vector<std::size_t>> offsets_;
  Module module_;
};

inline Module projective_module(const AlgebraPtr& alg, int v) { return ProjectiveSum(alg, {v}).module(); }

inline Module simple_module(const AlgebraPtr& alg, int v) {
  std::vector<std::size_t> dims(static_cast<std::size_t>(alg->num_vertices()), 0);
  dims[static_cast<std::size_t>(v)] = 1;
  return Module(alg, std::move(dims), std::vector<Matrix>(static_cast<std::size_t>(alg->num_arrows())));
}

inline Module zero_module(const AlgebraPtr& alg) {
  return Module(alg, std::vector<std::size_t>(static_cast<std::size_t>(alg->num_vertices()), 0),
                std::vector<Matrix>(static_cast<std::size_t>(alg->num_arrows())));
}

/// Right ideal xA inside P_v, for x in e_v A.
inline Module element_module(const AlgebraPtr& alg, int v, const Vector& x) {
  ProjectiveSum p(alg, {v});
  return submodule(p.module(), generate_submodule(p.module(), {p.element({x})}));
}

inline Module arrow_module(const AlgebraPtr& alg, int a) {
  const auto& arr = alg->quiver().arrow(a);
  return element_module(alg, arr.source, alg->element(alg->normal_form(Path{arr.source, {a}})));
}

inline int element_start(const AlgebraTable& alg, const Vector& x) {
  int v = -1;
  for (std::size_t b = 0; b < x.size(); ++b) {
    if (x[b] == 0) continue;
    if (v >= 0 && alg.start_vertex(b) != v) throw std::invalid_argument("element is not in a single e_v A");
    v = alg.start_vertex(b);
  }
  if (v < 0) throw std::invalid_argument("zero element has no start vertex");
  return v;
}

/// Submodule of P_{v_1}+...+P_{v_r} generated by tuples; with `modulo`, the
/// image of that submodule in the quotient by the submodule `modulo` generates.
inline Module tuple_module(const AlgebraPtr& alg, const std::vector<int>& tops, const std::vector<std::vector<Vector>>& gens,
                           const std::vector<std::vector<Vector>>& modulo = {}) {
  ProjectiveSum p(alg, tops);
  std::vector<Element> g, m;
  for (const auto& t : gens) g.push_back(p.element(t));
  for (const auto& t : modulo) m.push_back(p.element(t));
  const auto sub = generate_submodule(p.module(), g);
  if (modulo.empty()) return submodule(p.module(), sub);
  const auto mod = generate_submodule(p.module(), m);
  const auto meet = intersect_subspaces(p.module(), sub, mod);
  const Module big = submodule(p.module(), sub);
  // Re-express the intersection inside the submodule's own coordinates.
  GradedSubspace inner;
  for (int v = 0; v < big.num_vertices(); ++v) {
    Matrix rows(0, big.dim(v));
    const auto& b = meet[static_cast<std::size_t>(v)].basis();
    for (std::size_t r = 0; r < b.rows(); ++r) rows.append_row(sub[static_cast<std::size_t>(v)].coordinates(alg->field(), b.row(r)));
    inner.emplace_back(alg->field(), big.dim(v), std::move(rows));
  }
  return quotient(big, inner);
}

inline Module direct_sum(const Module& a, const Module& b) {
  const auto& q = a.algebra()->quiver();
  std::vector<std::size_t> dims;
  for (int v = 0; v < a.num_vertices(); ++v) dims.push_back(a.dim(v) + b.dim(v));
  std::vector<Matrix> act;
  for (int x = 0; x < q.num_arrows(); ++x) {
    const auto& ma = a.action(x);
    const auto& mb = b.action(x);
    Matrix m(ma.rows() + mb.rows(), ma.cols() + mb.cols());
    for (std::size_t r = 0; r < ma.rows(); ++r) {
      for (std::size_t c = 0; c < ma.cols(); ++c) m(r, c) = ma(r, c);
    }
    for (std::size_t r = 0; r < mb.rows(); ++r) {
      for (std::size_t c = 0; c < mb.cols(); ++c) m(ma.rows() + r, ma.cols() + c) = mb(r, c);
    }
    act.push_back(std::move(m));
  }
  return Module(a.algebra(), std::move(dims), std::move(act));
}

// ---------------------------------------------------------------------------
// Projective covers and syzygies

struct ProjectiveCover {
  std::vector<int> tops;
  Module projective;
  Homomorphism map;  // projective -> M
};

inline ProjectiveCover projective_cover(const Module& m) {
  const auto& alg = *m.algebra();
  const auto rad = radical_subspace(m);
  std::vector<int> tops;
  std::vector<Vector> gens;
  for (int v = 0; v < m.num_vertices(); ++v) {
    for (auto j : rad[static_cast<std::size_t>(v)].free_columns()) {
      Vector g(m.dim(v), 0);
      g[j] = 1;
      tops.push_back(v);
      gens.push_back(std::move(g));
    }
  }
  ProjectiveSum p(m.algebra(), tops);
  Homomorphism map;
  for (int w = 0; w < m.num_vertices(); ++w) map.emplace_back(p.module().dim(w), m.dim(w));
  for (std::size_t g = 0; g < tops.size(); ++g) {
    for (std::size_t b = 0; b < alg.dimension(); ++b) {
      if (alg.start_vertex(b) != tops[g]) continue;
      const Vector img = m.act_path(gens[g], alg.basis_path(b));
      auto& mat = map[static_cast<std::size_t>(alg.end_vertex(b))];
      const std::size_t row = p.index(g, b);
      for (std::size_t c = 0; c < img.size(); ++c) mat(row, c) = img[c];
    }
  }
  return {tops, p.module(), std::move(map)};
}

inline GradedSubspace kernel_subspace(const Module& source, const Homomorphism& h) {
  GradedSubspace s;
  for (int v = 0; v < source.num_vertices(); ++v) {
    s.emplace_back(source.field(), source.dim(v), left_kernel(source.field(), h[static_cast<std::size_t>(v)]));
  }
  return s;
}

inline GradedSubspace image_subspace(const Module& target, const Homomorphism& h) {
  GradedSubspace s;
  for (int v = 0; v < target.num_vertices(); ++v) {
    const auto& mat = h[static_cast<std::size_t>(v)];
    s.emplace_back(target.field(), target.dim(v), mat.rows() ? mat : Matrix(0, target.dim(v)));
  }
  return s;
}

inline Module syzygy(const Module& m) {
  const auto cover = projective_cover(m);
  return submodule(cover.projective, kernel_subspace(cover.projective, cover.map));
}

inline Module syzygy(Module m, int times) {
  for (int i = 0; i < times; ++i) m = syzygy(m);
  return m;
}

/// Ω^0 M, Ω^1 M, ..., Ω^depth M.
inline std::vector<Module> syzygy_chain(const Module& m, int depth) {
  std::vector<Module> chain{m};
  for (int i = 0; i < depth; ++i) chain.push_back(syzygy(chain.back()));
  return chain;
}

inline bool is_projective(const Module& m) { return syzygy(m).is_zero(); }

// ---------------------------------------------------------------------------
// Hom spaces

/// Basis of Hom(M, N): solutions of A^M_a F_t = F_s A^N_a for every arrow.
inline std::vector<Homomorphism> hom_basis(const Module& m, const Module& n) {
  const auto& f = m.field();
  const auto& q = m.algebra()->quiver();
  const int nv = m.num_vertices();
  std::vector<std::size_t> off(static_cast<std::size_t>(nv) + 1, 0);
  for (int v = 0; v < nv; ++v) off[static_cast<std::size_t>(v) + 1] = off[static_cast<std::size_t>(v)] + m.dim(v) * n.dim(v);
  const std::size_t unknowns = off.back();
  std::size_t equations = 0;
  for (int a = 0; a < q.num_arrows(); ++a) equations += m.dim(q.arrow(a).source) * n.dim(q.arrow(a).target);
  Matrix sys(equations, unknowns);
  std::size_t row = 0;
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int s = q.arrow(a).source, t = q.arrow(a).target;
    const auto& am = m.action(a);
    const auto& an = n.action(a);
    const std::size_t ns = n.dim(s), nt = n.dim(t);
    for (std::size_t i = 0; i < m.dim(s); ++i) {
      for (std::size_t j = 0; j < nt; ++j, ++row) {
        // (A^M F_t)_{ij} = sum_k A^M_{ik} F_t[k][j]
        for (std::size_t k = 0; k < am.cols(); ++k) {
          if (am(i, k) != 0) {
            auto& e = sys(row, off[static_cast<std::size_t>(t)] + k * nt + j);
            e = f.add(e, am(i, k));
          }
        }
        // - (F_s A^N)_{ij} = - sum_k F_s[i][k] A^N_{kj}
        for (std::size_t k = 0; k < ns; ++k) {
          if (an(k, j) != 0) {
            auto& e = sys(row, off[static_cast<std::size_t>(s)] + i * ns + k);
            e = f.sub(e, an(k, j));
          }
        }
      }
    }
  }
  const Matrix sol = equations ? nullspace(f, sys) : Matrix::identity(unknowns);
  std::vector<Homomorphism> basis;
  for (std::size_t r = 0; r < sol.rows(); ++r) {
    Homomorphism h;
    for (int v = 0; v < nv; ++v) {
      Matrix fv(m.dim(v), n.dim(v));
      for (std::size_t i = 0; i < m.dim(v); ++i) {
        for (std::size_t j = 0; j < n.dim(v); ++j) fv(i, j) = sol(r, off[static_cast<std::size_t>(v)] + i * n.dim(v) + j);
      }
      h.push_back(std::move(fv));
    }
    basis.push_back(std::move(h));
  }
  return basis;
}

inline std::size_t hom_dim(const Module& m, const Module& n) {
  // Maps into a simple factor through the top.
  std::optional<int> simple_vertex;
  if (n.total_dim() == 1) {
    for (int v = 0; v < n.num_vertices(); ++v) {
      if (n.dim(v) == 1) simple_vertex = v;
    }
    return top_dims(m)[static_cast<std::size_t>(*simple_vertex)];
  }
  if (m.is_zero() || n.is_zero()) return 0;
  return hom_basis(m, n).size();
}

inline Homomorphism combine(const PrimeField& f, const std::vector<Homomorphism>& basis, const Vector& coeffs) {
  Homomorphism h = basis.front();
  for (auto& mat : h) mat = Matrix(mat.rows(), mat.cols());
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (coeffs[i] == 0) continue;
    for (std::size_t v = 0; v < h.size(); ++v) h[v] = add(f, h[v], scale(f, coeffs[i], basis[i][v]));
  }
  return h;
}

inline bool is_isomorphism(const PrimeField& f, const Homomorphism& h) {
  for (const auto& mat : h) {
    if (mat.rows() != mat.cols()) return false;
    if (mat.rows() > 0 && !is_invertible(f, mat)) return false;
  }
  return true;
}

inline bool is_injective(const PrimeField& f, const Homomorphism& h) {
  for (const auto& mat : h) {
    if (mat.rows() > 0 && rank(f, mat) != mat.rows()) return false;
  }
  return true;
}

inline bool is_nilpotent_endo(const PrimeField& f, const Homomorphism& h) {
  for (const auto& mat : h) {
    Matrix p = mat;
    for (std::size_t i = 1; i < mat.rows(); i *= 2) p = multiply(f, p, p);
    if (!p.is_zero()) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Searching a Hom space

struct SearchLimits {
  std::uint64_t exhaustive_limit = 1ull << 20;  // q^r at or below this: enumerate everything
  int random_samples = 64;
  std::uint64_t seed = 0x5eed;
};

enum class SearchOutcome { Found, Exhausted, GaveUp };

/// Looks for an element of span(basis) satisfying pred: every basis element
/// first, then seeded random combinations, then full enumeration if small.
template <class Pred>
std::pair<SearchOutcome, std::optional<Homomorphism>> search_span(const PrimeField& f, const std::vector<Homomorphism>& basis,
                                                                  const SearchLimits& limits, Pred pred) {
  if (basis.empty()) return {SearchOutcome::Exhausted, std::nullopt};
  const std::size_t r = basis.size();
  const Scalar q = f.characteristic();
  for (std::size_t i = 0; i < r; ++i) {
    if (pred(basis[i])) return {SearchOutcome::Found, basis[i]};
  }
  std::mt19937_64 rng(limits.seed);
  std::uniform_int_distribution<Scalar> coin(0, q - 1);
  for (int s = 0; s < limits.random_samples; ++s) {
    Vector c(r);
    for (auto& x : c) x = coin(rng);
    auto h = combine(f, basis, c);
    if (pred(h)) return {SearchOutcome::Found, std::move(h)};
  }
  // q^r without overflow
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < r; ++i) {
    if (total > limits.exhaustive_limit / q) return {SearchOutcome::GaveUp, std::nullopt};
    total *= q;
  }
  if (total > limits.exhaustive_limit) return {SearchOutcome::GaveUp, std::nullopt};
  Vector c(r, 0);
  for (std::uint64_t k = 1; k < total; ++k) {
    // increment base-q counter
    for (std::size_t i = 0; i < r; ++i) {
      if (++c[i] < q) break;
      c[i] = 0;
    }
    auto h = combine(f, basis, c);
    if (pred(h)) return {SearchOutcome::Found, std::move(h)};
  }
  return {SearchOutcome::Exhausted, std::nullopt};
}

enum class IsoResult { Isomorphic, NotIsomorphic, Undetermined };

inline std::string to_string(IsoResult r) {
  switch (r) {
    case IsoResult::Isomorphic: return "isomorphic";
    case IsoResult::NotIsomorphic: return "not-isomorphic";
    case IsoResult::Undetermined: return "undetermined";
  }
  return "?";
}

inline IsoResult iso_test(const Module& m, const Module& n, const SearchLimits& limits = {}) {
  if (m.dims() != n.dims()) return IsoResult::NotIsomorphic;
  if (m.is_zero()) return IsoResult::Isomorphic;
  if (radical_layers(m) != radical_layers(n) || socle_dims(m) != socle_dims(n)) return IsoResult::NotIsomorphic;
  const auto mn = hom_basis(m, n);
  if (mn.size() != hom_dim(n, m) || mn.size() != hom_dim(m, m) || mn.size() != hom_dim(n, n)) {
    return IsoResult::NotIsomorphic;
  }
  const auto& f = m.field();
  auto [outcome, h] = search_span(f, mn, limits, [&](const Homomorphism& x) { return is_isomorphism(f, x); });
  if (outcome == SearchOutcome::Found) return IsoResult::Isomorphic;
  if (outcome == SearchOutcome::Exhausted) return IsoResult::NotIsomorphic;
  return IsoResult::Undetermined;
}

/// An injective homomorphism M -> N, if the search finds one.
inline std::optional<Homomorphism> find_injective_hom(const Module& m, const Module& n, const SearchLimits& limits = {}) {
  for (int v = 0; v < m.num_vertices(); ++v) {
    if (m.dim(v) > n.dim(v)) return std::nullopt;
  }
  const auto basis = hom_basis(m, n);
  const auto& f = m.field();
  auto [outcome, h] = search_span(f, basis, limits, [&](const Homomorphism& x) { return is_injective(f, x); });
  return h;
}

enum class Decomposability { Indecomposable, Decomposable, Undetermined };

inline std::string to_string(Decomposability d) {
  switch (d) {
    case Decomposability::Indecomposable: return "indecomposable";
    case Decomposability::Decomposable: return "decomposable";
    case Decomposability::Undetermined: return "undetermined";
  }
  return "?";
}

/// Fitting: M is indecomposable iff every endomorphism is nilpotent or invertible.
inline Decomposability indecomposability(const Module& m, const SearchLimits& limits = {}) {
  if (m.is_zero()) return Decomposability::Decomposable;
  const auto& f = m.field();
  const auto basis = hom_basis(m, m);
  auto [outcome, h] = search_span(f, basis, limits, [&](const Homomorphism& x) {
    return !is_isomorphism(f, x) && !is_nilpotent_endo(f, x);
  });
  if (outcome == SearchOutcome::Found) return Decomposability::Decomposable;
  if (outcome == SearchOutcome::Exhausted) return Decomposability::Indecomposable;
  return Decomposability::Undetermined;
}

// ---------------------------------------------------------------------------
// Ext and periodicity

/// dim Ext^i(M, N) for i >= 1 from the syzygy chain of M.
inline std::size_t ext_dim_from_chain(const std::vector<Module>& chain, const Module& n, int i) {
  if (i < 1) throw std::invalid_argument("Ext degree must be at least 1");
  const Module& prev = chain[static_cast<std::size_t>(i - 1)];
  if (prev.is_zero()) return 0;
  const auto top = top_dims(prev);
  std::size_t hom_p = 0;
  for (int v = 0; v < n.num_vertices(); ++v) hom_p += top[static_cast<std::size_t>(v)] * n.dim(v);
  const std::size_t value = hom_dim(chain[static_cast<std::size_t>(i)], n) + hom_dim(prev, n);
  if (value < hom_p) throw std::logic_error("negative Ext dimension: Hom sequence is not exact");
  return value - hom_p;
}

inline std::size_t ext_dim(const Module& m, const Module& n, int i) {
  return ext_dim_from_chain(syzygy_chain(m, i), n, i);
}

/// dim Ext^n(M, S_v) as the multiplicity of S_v in top(Ω^n M).
inline std::size_t ext_to_simple(const Module& m, int n, int v) {
  if (n < 1) throw std::invalid_argument("Ext degree must be at least 1");
  return top_dims(syzygy(m, n))[static_cast<std::size_t>(v)];
}

struct PeriodResult {
  enum class Kind { Period, NoneFound, Uncertified } kind = Kind::NoneFound;
  int period = 0;
};

inline PeriodResult omega_period(const Module& m, int bound, const SearchLimits& limits = {}) {
  if (is_projective(m)) throw std::domain_error("ProjectiveInput: projective modules have no syzygy period");
  Module cur = m;
  bool uncertain = false;
  for (int k = 1; k <= bound; ++k) {
    cur = syzygy(cur);
    const auto r = iso_test(cur, m, limits);
    if (r == IsoResult::Isomorphic) return {PeriodResult::Kind::Period, k};
    if (r == IsoResult::Undetermined) uncertain = true;
  }
  return {uncertain ? PeriodResult::Kind::Uncertified : PeriodResult::Kind::NoneFound, 0};
}

/// pd M: first t with Ω^t M = 0 gives t - 1; a syzygy isomorphic to an earlier
/// one means infinite. nullopt stands for infinite.
struct ProjDimResult {
  std::optional<int> value;  // nullopt = infinite
  bool certified = true;
};

inline ProjDimResult proj_dim(const Module& m, int max_steps = 200, const SearchLimits& limits = {}) {
  if (m.is_zero()) throw std::invalid_argument("projective dimension of the zero module");
  std::vector<Module> seen{m};
  bool uncertain = false;
  for (int t = 1; t <= max_steps; ++t) {
    Module next = syzygy(seen.back());
    if (next.is_zero()) return {t - 1, true};
    for (const auto& s : seen) {
      const auto r = iso_test(next, s, limits);
      if (r == IsoResult::Isomorphic) return {std::nullopt, !uncertain};
      if (r == IsoResult::Undetermined) uncertain = true;
    }
    seen.push_back(std::move(next));
  }
  return {std::nullopt, false};
}

/// Top of M splits as top(sub) + top(M/sub), vertex by vertex.
inline bool is_top_good(const Module& m, const GradedSubspace& sub) {
  const auto t = top_dims(m);
  const auto a = top_dims(submodule(m, sub));
  const auto b = top_dims(quotient(m, sub));
  for (std::size_t v = 0; v < t.size(); ++v) {
    if (t[v] != a[v] + b[v]) return false;
  }
  return true;
}

/// Kernel of M -> top(M) -> S_v on the copies of S_v in the top; the quotient
/// is (top M)_v.
inline GradedSubspace top_kernel_subspace(const Module& m, int v) {
  auto s = radical_subspace(m);
  for (int w = 0; w < m.num_vertices(); ++w) {
    if (w != v) s[static_cast<std::size_t>(w)] = Subspace::whole(m.dim(w));
  }
  return s;
}

/// Every P_v has a simple socle isomorphic to S_v.
inline bool weakly_symmetric(const AlgebraPtr& alg) {
  for (int v = 0; v < alg->num_vertices(); ++v) {
    const auto soc = socle_dims(projective_module(alg, v));
    for (int w = 0; w < alg->num_vertices(); ++w) {
      if (soc[static_cast<std::size_t>(w)] != (w == v ? 1u : 0u)) return false;
    }
  }
  return true;
}

/// D(M) = Hom_K(M, K) as a right module over the opposite algebra.
inline Module dual_module(const Module& m, const AlgebraPtr& opposite) {
  const auto& q = m.algebra()->quiver();
  const auto& qo = opposite->quiver();
  std::vector<Matrix> act(static_cast<std::size_t>(qo.num_arrows()));
  for (int a = 0; a < q.num_arrows(); ++a) {
    const int b = qo.arrow_index(q.arrow(a).label);
    if (qo.arrow(b).source != q.arrow(a).target || qo.arrow(b).target != q.arrow(a).source) {
      throw std::invalid_argument("algebra is not the transpose of the module's algebra");
    }
    act[static_cast<std::size_t>(b)] = m.action(a).transpose();
  }
  return Module(opposite, m.dims(), std::move(act));
}

}  // namespace extlab::quiver
