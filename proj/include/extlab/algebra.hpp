// Finite-dimensional algebra KQ/I built from a bound quiver presentation.
//
// The ideal is spanned inside the truncated path algebra KQ/KQ_{>=L} by
// closing the relations under left and right multiplication by arrows. Paths
// are ordered degree-lexicographically (length, then arrow labels, then start
// vertex); after full row reduction the largest path of each ideal element is
// its pivot, and the non-pivot paths form the monomial basis of the quotient.
#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "linalg.hpp"
#include "presentation.hpp"

namespace extlab::quiver {

class AlgebraBuildError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A path in the quiver; the trivial path at `start` has no arrows.
struct Path {
  int start = 0;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;
};

using SparseVector = std::vector<std::pair<std::size_t, Scalar>>;

class AlgebraTable {
 public:
  /// Builds the algebra and re-checks the Loewy bound at L+1.
  static std::shared_ptr<const AlgebraTable> build(const Presentation& pres) {
    validate_presentation(pres);
    auto table = std::shared_ptr<AlgebraTable>(new AlgebraTable(pres, pres.loewy_bound));
    AlgebraTable check(pres, pres.loewy_bound + 1);
    if (check.dimension() != table->dimension()) {
      throw AlgebraBuildError("UnstableLoewyBound: dimension " + std::to_string(table->dimension()) + " at L=" +
                              std::to_string(pres.loewy_bound) + " but " + std::to_string(check.dimension()) +
                              " at L+1; J^L is not contained in the ideal");
    }
    return table;
  }

  const Presentation& presentation() const { return pres_; }
  const Quiver& quiver() const { return pres_.quiver; }
  const PrimeField& field() const { return field_; }
  int num_vertices() const { return pres_.quiver.num_vertices(); }
  int num_arrows() const { return pres_.quiver.num_arrows(); }
  int loewy_bound() const { return bound_; }

  std::size_t dimension() const { return basis_.size(); }
  const std::vector<Path>& basis() const { return basis_; }
  const Path& basis_path(std::size_t b) const { return basis_[b]; }
  int start_vertex(std::size_t b) const { return basis_[b].start; }
  int end_vertex(std::size_t b) const { return end_of(basis_[b]); }

  int end_of(const Path& p) const {
    return p.arrows.empty() ? p.start : pres_.quiver.arrow(p.arrows.back()).target;
  }

  /// Cartan matrix: entry (i, j) = dim e_i A e_j.
  std::vector<std::vector<int>> cartan() const {
    std::vector<std::vector<int>> c(static_cast<std::size_t>(num_vertices()),
                                    std::vector<int>(static_cast<std::size_t>(num_vertices()), 0));
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      ++c[static_cast<std::size_t>(start_vertex(b))][static_cast<std::size_t>(end_vertex(b))];
    }
    return c;
  }

  /// Basis indices of e_v A, in basis order.
  std::vector<std::size_t> basis_from(int v) const {
    std::vector<std::size_t> out;
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      if (basis_[b].start == v) out.push_back(b);
    }
    return out;
  }

  /// Normal form of a path as a combination of basis elements.
  SparseVector normal_form(const Path& p) const {
    if (p.length() >= bound_) return {};
    auto it = ambient_index_.find(p);
    if (it == ambient_index_.end()) throw std::logic_error("path outside the truncated path algebra");
    return normal_forms_[it->second];
  }

  /// b . a for a basis element b and an arrow a.
  const SparseVector& right_arrow(std::size_t b, int a) const {
    return arrow_action_[b][static_cast<std::size_t>(a)];
  }

  /// x . a for an algebra element x (dense over the basis).
  Vector times_arrow(const Vector& x, int a) const {
    Vector out(dimension(), 0);
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (x[b] == 0) continue;
      for (auto [c, s] : right_arrow(b, a)) out[c] = field_.add(out[c], field_.mul(x[b], s));
    }
    return out;
  }

  /// x . e_v.
  Vector times_idempotent(const Vector& x, int v) const {
    Vector out(dimension(), 0);
    for (std::size_t b = 0; b < x.size(); ++b) {
      if (end_vertex(b) == v) out[b] = x[b];
    }
    return out;
  }

  Vector times_path(Vector x, const Path& p) const {
    if (p.arrows.empty()) return times_idempotent(x, p.start);
    for (int a : p.arrows) x = times_arrow(x, a);
    return x;
  }

  Vector element(const SparseVector& s) const {
    Vector v(dimension(), 0);
    for (auto [i, c] : s) v[i] = field_.add(v[i], c);
    return v;
  }

  Vector idempotent(int v) const {
    Vector e(dimension(), 0);
    e[basis_index(Path{v, {}})] = 1;
    return e;
  }

  /// Product of algebra elements.
  Vector multiply(const Vector& x, const Vector& y) const {
    Vector out(dimension(), 0);
    for (std::size_t b = 0; b < y.size(); ++b) {
      if (y[b] == 0) continue;
      const Vector xb = times_path(x, basis_[b]);
      for (std::size_t c = 0; c < out.size(); ++c) out[c] = field_.add(out[c], field_.mul(y[b], xb[c]));
    }
    return out;
  }

  std::size_t basis_index(const Path& p) const {
    auto it = ambient_index_.find(p);
    if (it == ambient_index_.end() || ambient_basis_index_[it->second] < 0) {
      throw std::logic_error("path is not a basis element");
    }
    return static_cast<std::size_t>(ambient_basis_index_[it->second]);
  }

  /// Parses an element expression such as "alpha^2 - 2*beta gamma".
  /// Terms are separated by + or -, factors by spaces; a bare integer term is
  /// not allowed, use "e:<vertex>" for the idempotent at a vertex.
  Vector parse_element(std::string_view text) const {
    Vector out(dimension(), 0);
    std::string s(text);
    std::size_t i = 0;
    bool any = false;
    auto skip_ws = [&] {
      while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    };
    skip_ws();
    if (i == s.size() || s.substr(i) == "0") return out;
    while (i < s.size()) {
      long long sign = 1;
      skip_ws();
      if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
        if (s[i] == '-') sign = -1;
        ++i;
        skip_ws();
      } else if (any) {
        throw PresentationError("expected + or - in element '" + s + "'");
      }
      std::size_t j = i;
      while (j < s.size() && s[j] != '+' && s[j] != '-') ++j;
      std::string term = s.substr(i, j - i);
      i = j;
      long long coef = 1;
      if (auto star = term.find('*'); star != std::string::npos) {
        try {
          coef = std::stoll(term.substr(0, star));
        } catch (const std::exception&) {
          throw PresentationError("bad coefficient in element '" + s + "'");
        }
        term = term.substr(star + 1);
      }
      Path p = parse_path(term);
      const Scalar c = field_.from_int(sign * coef);
      for (auto [b, v] : normal_form(p)) out[b] = field_.add(out[b], field_.mul(c, v));
      any = true;
    }
    return out;
  }

  Path parse_path(std::string_view text) const {
    std::string t(text);
    while (!t.empty() && t.back() == ' ') t.pop_back();
    while (!t.empty() && t.front() == ' ') t.erase(t.begin());
    if (t.rfind("e:", 0) == 0) return Path{pres_.quiver.vertex_index(t.substr(2)), {}};
    const auto labels = parse_path_labels(t);
    if (labels.empty()) throw PresentationError("empty path");
    Path p;
    int prev = -1;
    for (const auto& l : labels) {
      const int a = pres_.quiver.arrow_index(l);
      const auto& arrow = pres_.quiver.arrow(a);
      if (prev >= 0 && arrow.source != prev) throw PresentationError("path '" + t + "' is not composable");
      if (p.arrows.empty()) p.start = arrow.source;
      p.arrows.push_back(a);
      prev = arrow.target;
    }
    return p;
  }

  /// Dimension of J^d, the span of all paths of length >= d.
  std::size_t radical_power_dim(int d) const {
    Matrix m(0, dimension());
    for (std::size_t i = 0; i < ambient_.size(); ++i) {
      if (ambient_[i].length() >= d) m.append_row(element(normal_forms_[i]));
    }
    if (m.rows() == 0) return 0;
    return rank(field_, m);
  }

  /// Dimensions of J^d / J^{d+1} for d = 0, 1, ... until zero.
  std::vector<std::size_t> radical_layers() const {
    std::vector<std::size_t> out;
    std::size_t prev = dimension();
    for (int d = 1; prev > 0; ++d) {
      const std::size_t cur = radical_power_dim(d);
      out.push_back(prev - cur);
      prev = cur;
    }
    return out;
  }

  int loewy_length() const { return static_cast<int>(radical_layers().size()); }

  /// Number of arrows v -> w in the Gabriel quiver: dim e_v (J/J^2) e_w.
  std::vector<std::vector<int>> gabriel_quiver() const {
    const auto nv = static_cast<std::size_t>(num_vertices());
    std::vector<std::vector<int>> g(nv, std::vector<int>(nv, 0));
    for (std::size_t v = 0; v < nv; ++v) {
      for (std::size_t w = 0; w < nv; ++w) {
        Matrix j1(0, dimension()), j2(0, dimension());
        for (std::size_t i = 0; i < ambient_.size(); ++i) {
          const auto& p = ambient_[i];
          if (p.start != static_cast<int>(v) || end_of(p) != static_cast<int>(w)) continue;
          if (p.length() >= 1) j1.append_row(element(normal_forms_[i]));
          if (p.length() >= 2) j2.append_row(element(normal_forms_[i]));
        }
        const std::size_t r1 = j1.rows() ? rank(field_, j1) : 0;
        const std::size_t r2 = j2.rows() ? rank(field_, j2) : 0;
        g[v][w] = static_cast<int>(r1 - r2);
      }
    }
    return g;
  }

 private:
  AlgebraTable(const Presentation& pres, int bound)
      : pres_(pres), field_(pres.characteristic), bound_(bound) {
    enumerate_paths();
    close_ideal();
  }

  bool path_less(const Path& a, const Path& b) const {
    if (a.length() != b.length()) return a.length() < b.length();
    for (std::size_t i = 0; i < a.arrows.size(); ++i) {
      const auto& la = pres_.quiver.arrow(a.arrows[i]).label;
      const auto& lb = pres_.quiver.arrow(b.arrows[i]).label;
      if (la != lb) return la < lb;
    }
    return a.start < b.start;
  }

  void enumerate_paths() {
    std::vector<Path> frontier;
    for (int v = 0; v < num_vertices(); ++v) frontier.push_back(Path{v, {}});
    std::vector<Path> all = frontier;
    for (int len = 1; len < bound_; ++len) {
      std::vector<Path> next;
      for (const auto& p : frontier) {
        const int end = end_of(p);
        for (int a = 0; a < num_arrows(); ++a) {
          if (pres_.quiver.arrow(a).source != end) continue;
          Path q = p;
          q.arrows.push_back(a);
          next.push_back(std::move(q));
        }
      }
      all.insert(all.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    // Columns run from the largest path down so the row-reduction pivot is the leading path.
    std::sort(all.begin(), all.end(), [&](const Path& a, const Path& b) { return path_less(b, a); });
    ambient_ = std::move(all);
    for (std::size_t i = 0; i < ambient_.size(); ++i) ambient_index_.emplace(ambient_[i], i);
  }

  std::optional<std::size_t> index_if_short(const Path& p) const {
    if (p.length() >= bound_) return std::nullopt;
    return ambient_index_.at(p);
  }

  Vector relation_vector(const Relation& rel) const {
    Vector v(ambient_.size(), 0);
    for (const auto& t : rel.terms) {
      Path p;
      for (const auto& l : t.path) p.arrows.push_back(pres_.quiver.arrow_index(l));
      p.start = pres_.quiver.arrow(p.arrows.front()).source;
      if (auto i = index_if_short(p)) v[*i] = field_.add(v[*i], field_.from_int(t.coefficient));
    }
    return v;
  }

  Vector multiply_arrow(const Vector& v, int a, bool on_right) const {
    Vector out(ambient_.size(), 0);
    const auto& arrow = pres_.quiver.arrow(a);
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      const Path& p = ambient_[i];
      Path q;
      if (on_right) {
        if (end_of(p) != arrow.source) continue;
        q = p;
        q.arrows.push_back(a);
      } else {
        if (p.start != arrow.target) continue;
        q.start = arrow.source;
        q.arrows.push_back(a);
        q.arrows.insert(q.arrows.end(), p.arrows.begin(), p.arrows.end());
      }
      if (auto j = index_if_short(q)) out[*j] = field_.add(out[*j], v[i]);
    }
    return out;
  }

  void close_ideal() {
    const std::size_t n = ambient_.size();
    const Scalar p = field_.characteristic();
    // Semi-echelon rows: each row is reduced against all earlier pivots.
    std::vector<Vector> rows;
    std::vector<std::size_t> pivots;
    std::vector<Vector> queue;
    for (const auto& rel : pres_.relations) queue.push_back(relation_vector(rel));
    std::size_t head = 0;
    while (head < queue.size()) {
      Vector v = std::move(queue[head++]);
      for (std::size_t r = 0; r < rows.size(); ++r) {
        const Scalar c = v[pivots[r]];
        if (c == 0) continue;
        const Scalar nc = p - c;
        const auto& row = rows[r];
        for (std::size_t j = 0; j < n; ++j) {
          if (row[j] != 0) v[j] = (v[j] + nc * row[j]) % p;
        }
      }
      std::size_t lead = n;
      for (std::size_t j = 0; j < n; ++j) {
        if (v[j] != 0) {
          lead = j;
          break;
        }
      }
      if (lead == n) continue;
      const Scalar iv = field_.inv(v[lead]);
      for (auto& x : v) x = field_.mul(x, iv);
      for (int a = 0; a < num_arrows(); ++a) {
        queue.push_back(multiply_arrow(v, a, true));
        queue.push_back(multiply_arrow(v, a, false));
      }
      rows.push_back(std::move(v));
      pivots.push_back(lead);
    }

    Matrix m(0, n);
    for (const auto& r : rows) m.append_row(r);
    std::vector<std::size_t> rref_pivots;
    if (m.rows() > 0) rref_pivots = rref_in_place(field_, m);

    std::vector<int> pivot_row(n, -1);
    for (std::size_t r = 0; r < rref_pivots.size(); ++r) pivot_row[rref_pivots[r]] = static_cast<int>(r);

    // Basis: non-pivot paths, ordered by start vertex then increasing path order.
    std::vector<std::size_t> non_pivot;
    for (std::size_t j = 0; j < n; ++j) {
      if (pivot_row[j] < 0) non_pivot.push_back(j);
    }
    std::sort(non_pivot.begin(), non_pivot.end(), [&](std::size_t x, std::size_t y) {
      if (ambient_[x].start != ambient_[y].start) return ambient_[x].start < ambient_[y].start;
      return path_less(ambient_[x], ambient_[y]);
    });
    ambient_basis_index_.assign(n, -1);
    for (std::size_t b = 0; b < non_pivot.size(); ++b) {
      ambient_basis_index_[non_pivot[b]] = static_cast<int>(b);
      basis_.push_back(ambient_[non_pivot[b]]);
    }

    normal_forms_.assign(n, {});
    for (std::size_t j = 0; j < n; ++j) {
      if (pivot_row[j] < 0) {
        normal_forms_[j] = {{static_cast<std::size_t>(ambient_basis_index_[j]), 1}};
        continue;
      }
      const auto row = m.row(static_cast<std::size_t>(pivot_row[j]));
      SparseVector nf;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == j || row[k] == 0) continue;
        nf.emplace_back(static_cast<std::size_t>(ambient_basis_index_[k]), field_.neg(row[k]));
      }
      std::sort(nf.begin(), nf.end());
      normal_forms_[j] = std::move(nf);
    }

    arrow_action_.assign(basis_.size(), std::vector<SparseVector>(static_cast<std::size_t>(num_arrows())));
    for (std::size_t b = 0; b < basis_.size(); ++b) {
      for (int a = 0; a < num_arrows(); ++a) {
        if (end_of(basis_[b]) != pres_.quiver.arrow(a).source) continue;
        Path q = basis_[b];
        q.arrows.push_back(a);
        arrow_action_[b][static_cast<std::size_t>(a)] = normal_form(q);
      }
    }
  }

  Presentation pres_;
  PrimeField field_;
  int bound_;
  std::vector<Path> ambient_;
  std::map<Path, std::size_t> ambient_index_;
  std::vector<int> ambient_basis_index_;
  std::vector<SparseVector> normal_forms_;
  std::vector<Path> basis_;
  std::vector<std::vector<SparseVector>> arrow_action_;
};

using AlgebraPtr = std::shared_ptr<const AlgebraTable>;

inline AlgebraPtr build_algebra(const Presentation& pres) { return AlgebraTable::build(pres); }

}  // namespace extlab::quiver
