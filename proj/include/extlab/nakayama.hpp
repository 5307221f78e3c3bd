// Closed-form homological algebra for connected Nakayama algebras.
//
// A Nakayama algebra is described by its Kupisch series c_0..c_{n-1}: c_i is
// the Loewy length of the indecomposable projective e_i A. Arrows go
// i -> i+1, modules are right modules, and every indecomposable is the serial
// module e_i A / e_i J^k, written (i, k): top S_i, socle S_{i+k-1}.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace extlab::nakayama {

enum class Shape { Cyclic, Linear };

inline std::string_view to_string(Shape s) { return s == Shape::Cyclic ? "cyclic" : "linear"; }

inline Shape parse_shape(std::string_view s) {
  if (s == "cyclic") return Shape::Cyclic;
  if (s == "linear") return Shape::Linear;
  throw std::invalid_argument("unknown shape '" + std::string(s) + "' (expected cyclic or linear)");
}

enum class KupischErrorKind {
  EmptySeries,
  MonotonicityViolation,
  DisconnectedQuiver,
  LinearOverflow,
  MissingTerminalSimple,
};

inline std::string_view to_string(KupischErrorKind k) {
  switch (k) {
    case KupischErrorKind::EmptySeries: return "EmptySeries";
    case KupischErrorKind::MonotonicityViolation: return "MonotonicityViolation";
    case KupischErrorKind::DisconnectedQuiver: return "DisconnectedQuiver";
    case KupischErrorKind::LinearOverflow: return "LinearOverflow";
    case KupischErrorKind::MissingTerminalSimple: return "MissingTerminalSimple";
  }
  return "?";
}

class KupischError : public std::invalid_argument {
 public:
  KupischError(KupischErrorKind kind, const std::string& detail)
      : std::invalid_argument(std::string(to_string(kind)) + ": " + detail), kind_(kind) {}
  KupischErrorKind kind() const { return kind_; }

 private:
  KupischErrorKind kind_;
};

/// Thrown by operations whose preconditions fail (bad module, wrong algebra class).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct SerialModule {
  int vertex = 0;
  int length = 1;
  auto operator<=>(const SerialModule&) const = default;
};

inline std::string to_string(const SerialModule& m) {
  return "(" + std::to_string(m.vertex) + "," + std::to_string(m.length) + ")";
}

/// Projective or injective dimension: a finite value or infinity.
struct HomDim {
  std::optional<int> value;  // nullopt = infinite
  bool infinite() const { return !value.has_value(); }
  static HomDim finite(int v) { return {v}; }
  static HomDim infinity() { return {}; }
  bool operator==(const HomDim&) const = default;
};

inline std::string to_string(const HomDim& d) { return d.infinite() ? "infinite" : std::to_string(*d.value); }

class NakayamaAlgebra {
 public:
  NakayamaAlgebra(Shape shape, std::vector<int> kupisch) : shape_(shape), kupisch_(std::move(kupisch)) {
    check_invariants();
  }

  Shape shape() const { return shape_; }
  const std::vector<int>& kupisch() const { return kupisch_; }
  int n() const { return static_cast<int>(kupisch_.size()); }

  int vertex(int i) const {
    const int m = n();
    return ((i % m) + m) % m;
  }

  /// c_i with the periodic extension for cyclic shape; 0 off the end of a line.
  int c(int i) const {
    if (shape_ == Shape::Cyclic) return kupisch_[static_cast<std::size_t>(vertex(i))];
    if (i < 0 || i >= n()) return 0;
    return kupisch_[static_cast<std::size_t>(i)];
  }

  int loewy_length() const { return *std::max_element(kupisch_.begin(), kupisch_.end()); }

  int dimension() const {
    int s = 0;
    for (int x : kupisch_) s += x;
    return s;
  }

  bool is_self_injective() const {
    return shape_ == Shape::Cyclic &&
           std::all_of(kupisch_.begin(), kupisch_.end(), [&](int x) { return x == kupisch_.front(); });
  }

  bool operator==(const NakayamaAlgebra&) const = default;

 private:
  void check_invariants() const {
    if (kupisch_.empty()) throw KupischError(KupischErrorKind::EmptySeries, "Kupisch series is empty");
    const int m = n();
    if (shape_ == Shape::Linear) {
      if (kupisch_.back() != 1) {
        throw KupischError(KupischErrorKind::MissingTerminalSimple,
                           "linear series must end in 1, got " + std::to_string(kupisch_.back()));
      }
      for (int i = 0; i + 1 < m; ++i) {
        const int ci = kupisch_[static_cast<std::size_t>(i)];
        if (ci > m - i) {
          throw KupischError(KupischErrorKind::LinearOverflow,
                             "c_" + std::to_string(i) + " = " + std::to_string(ci) + " exceeds " +
                                 std::to_string(m - i));
        }
        if (ci < 2) {
          throw KupischError(KupischErrorKind::DisconnectedQuiver,
                             "c_" + std::to_string(i) + " = " + std::to_string(ci) + " < 2 on a line");
        }
      }
      for (int i = 0; i + 1 < m; ++i) {
        if (kupisch_[static_cast<std::size_t>(i + 1)] < kupisch_[static_cast<std::size_t>(i)] - 1) {
          throw KupischError(KupischErrorKind::MonotonicityViolation,
                             "c_" + std::to_string(i + 1) + " < c_" + std::to_string(i) + " - 1");
        }
      }
      return;
    }
    for (int i = 0; i < m; ++i) {
      const int ci = kupisch_[static_cast<std::size_t>(i)];
      if (ci < 1 || (m >= 2 && ci < 2)) {
        throw KupischError(KupischErrorKind::DisconnectedQuiver,
                           "c_" + std::to_string(i) + " = " + std::to_string(ci) + " disconnects the cycle");
      }
    }
    for (int i = 0; i < m; ++i) {
      if (c(i + 1) < c(i) - 1) {
        throw KupischError(KupischErrorKind::MonotonicityViolation,
                           "c_" + std::to_string(vertex(i + 1)) + " = " + std::to_string(c(i + 1)) + " < c_" +
                               std::to_string(i) + " - 1 = " + std::to_string(c(i) - 1));
      }
    }
  }

  Shape shape_;
  std::vector<int> kupisch_;
};

inline NakayamaAlgebra validate_kupisch(const std::vector<int>& series, Shape shape) {
  return NakayamaAlgebra(shape, series);
}

inline bool is_valid_module(const NakayamaAlgebra& a, const SerialModule& m) {
  if (m.vertex < 0 || m.vertex >= a.n()) return false;
  if (m.length < 1 || m.length > a.c(m.vertex)) return false;
  if (a.shape() == Shape::Linear && m.vertex + m.length - 1 > a.n() - 1) return false;
  return true;
}

inline void require_module(const NakayamaAlgebra& a, const SerialModule& m) {
  if (!is_valid_module(a, m)) throw DomainError("module " + to_string(m) + " is not valid over this algebra");
}

inline bool is_projective(const NakayamaAlgebra& a, const SerialModule& m) { return m.length == a.c(m.vertex); }

inline SerialModule projective_cover(const NakayamaAlgebra& a, const SerialModule& m) {
  return {m.vertex, a.c(m.vertex)};
}

/// Every indecomposable module, ordered by (vertex, length).
inline std::vector<SerialModule> all_modules(const NakayamaAlgebra& a) {
  std::vector<SerialModule> out;
  for (int i = 0; i < a.n(); ++i) {
    for (int k = 1; k <= a.c(i); ++k) {
      SerialModule m{i, k};
      if (is_valid_module(a, m)) out.push_back(m);
    }
  }
  return out;
}

/// Omega(i, k) = (i + k, c_i - k); nullopt when (i, k) is projective.
inline std::optional<SerialModule> syzygy(const NakayamaAlgebra& a, const SerialModule& m) {
  require_module(a, m);
  if (is_projective(a, m)) return std::nullopt;
  SerialModule out{a.vertex(m.vertex + m.length), a.c(m.vertex) - m.length};
  if (out.length > a.c(m.vertex + m.length)) {
    throw std::logic_error("syzygy length exceeds Kupisch bound at " + to_string(m));
  }
  return out;
}

/// Is there a path of length d from vertex `from` to vertex `to`?
inline bool path_exists(const NakayamaAlgebra& a, int from, int to, int d) {
  if (d < 0) return false;
  if (a.shape() == Shape::Cyclic) return a.vertex(from + d) == a.vertex(to);
  return from + d == to;
}

/// dim Hom((i,k), (j,l)) = number of d in [max(0, l-k), l-1] with a path j -> i of length d.
inline int hom_dim(const NakayamaAlgebra& a, const SerialModule& m, const SerialModule& n) {
  require_module(a, m);
  require_module(a, n);
  int count = 0;
  for (int d = std::max(0, n.length - m.length); d <= n.length - 1; ++d) {
    if (path_exists(a, n.vertex, m.vertex, d)) ++count;
  }
  return count;
}

/// dim Hom(X, N) where X may be the zero module.
inline int hom_dim(const NakayamaAlgebra& a, const std::optional<SerialModule>& m, const SerialModule& n) {
  return m ? hom_dim(a, *m, n) : 0;
}

/// dim Ext^1(M, N) from 0 -> Hom(M,N) -> Hom(P(M),N) -> Hom(Omega M, N) -> Ext^1(M,N) -> 0.
inline int ext1_dim(const NakayamaAlgebra& a, const SerialModule& m, const SerialModule& n) {
  const auto om = syzygy(a, m);
  if (!om) return 0;
  const int value = hom_dim(a, *om, n) - hom_dim(a, projective_cover(a, m), n) + hom_dim(a, m, n);
  if (m.length >= n.length && value != hom_dim(a, *om, n)) {
    throw std::logic_error("Ext^1 shortcut disagrees with the exact-sequence count for " + to_string(m) + ", " +
                           to_string(n));
  }
  return value;
}

inline int ext_dim(const NakayamaAlgebra& a, const SerialModule& m, const SerialModule& n, int i) {
  if (i < 1) throw DomainError("Ext degree must be positive");
  require_module(a, n);
  std::optional<SerialModule> x = m;
  for (int step = 1; step < i && x; ++step) x = syzygy(a, *x);
  if (!x || is_projective(a, *x)) return 0;
  return ext1_dim(a, *x, n);
}

/// Non-rigid exactly when n <= k <= c_i - n; cross-checked against Ext^1(M, M).
inline bool is_rigid(const NakayamaAlgebra& a, const SerialModule& m) {
  require_module(a, m);
  const int n = a.n();
  const bool rigid = !(n <= m.length && m.length <= a.c(m.vertex) - n);
  if (rigid != (ext1_dim(a, m, m) == 0)) {
    throw std::logic_error("rigidity criterion disagrees with Ext^1 at " + to_string(m));
  }
  return rigid;
}

/// The Omega-orbit of a module: the syzygy sequence M, Omega M, ... until it hits
/// zero (terminates) or revisits a module (cycle_start marks the first repeated entry).
struct OmegaOrbit {
  std::vector<SerialModule> modules;
  std::optional<std::size_t> cycle_start;  // nullopt: sequence ends in zero
};

inline OmegaOrbit omega_orbit(const NakayamaAlgebra& a, const SerialModule& m) {
  OmegaOrbit orbit;
  std::map<SerialModule, std::size_t> seen;
  std::optional<SerialModule> x = m;
  while (x) {
    if (auto it = seen.find(*x); it != seen.end()) {
      orbit.cycle_start = it->second;
      return orbit;
    }
    seen.emplace(*x, orbit.modules.size());
    orbit.modules.push_back(*x);
    x = syzygy(a, *x);
  }
  return orbit;
}

inline HomDim proj_dim(const NakayamaAlgebra& a, const SerialModule& m) {
  const auto orbit = omega_orbit(a, m);
  if (orbit.cycle_start) return HomDim::infinity();
  // The last module before zero is projective.
  return HomDim::finite(static_cast<int>(orbit.modules.size()) - 1);
}

inline HomDim global_dimension(const NakayamaAlgebra& a) {
  int best = 0;
  for (const auto& m : all_modules(a)) {
    const auto d = proj_dim(a, m);
    if (d.infinite()) return d;
    best = std::max(best, *d.value);
  }
  return HomDim::finite(best);
}

/// Vertex relabeling identifying the opposite quiver with the standard one.
inline int opposite_vertex(const NakayamaAlgebra& a, int v) {
  if (a.shape() == Shape::Cyclic) return a.vertex(-v);
  return a.n() - 1 - v;
}

/// Kupisch series of A^op: the projective of A^op at j is D of the injective I_j,
/// whose length is the first d with c_{j-d} <= d.
inline NakayamaAlgebra opposite_algebra(const NakayamaAlgebra& a) {
  std::vector<int> series(static_cast<std::size_t>(a.n()), 0);
  for (int j = 0; j < a.n(); ++j) {
    int d = 0;
    while (a.c(j - d) > d) ++d;
    series[static_cast<std::size_t>(opposite_vertex(a, j))] = d;
  }
  return NakayamaAlgebra(a.shape(), std::move(series));
}

/// D(i, k) over A^op: same length, top at the (relabeled) socle vertex of (i, k).
inline SerialModule dual_module(const NakayamaAlgebra& a, const SerialModule& m) {
  require_module(a, m);
  return {opposite_vertex(a, a.vertex(m.vertex + m.length - 1)), m.length};
}

inline HomDim inj_dim(const NakayamaAlgebra& a, const SerialModule& m) {
  return proj_dim(opposite_algebra(a), dual_module(a, m));
}

/// Least m >= 1 with Omega^m M = M over a self-injective Nakayama algebra.
inline int omega_period(const NakayamaAlgebra& a, const SerialModule& m) {
  if (!a.is_self_injective()) throw DomainError("NotSelfInjective: Kupisch series is not constant cyclic");
  require_module(a, m);
  if (is_projective(a, m)) throw DomainError("ProjectiveInput: " + to_string(m) + " is projective");
  SerialModule x = m;
  for (int step = 1;; ++step) {
    x = *syzygy(a, x);
    if (x == m) return step;
  }
}

/// Tate Ext^i(N, N) for any integer i over a self-injective Nakayama algebra.
inline int tate_ext_dim(const NakayamaAlgebra& a, const SerialModule& n, int i) {
  const int period = omega_period(a, n);
  if (i >= 1) return ext_dim(a, n, n, i);
  int l = (i - 1) % period;
  if (l <= 0) l += period;
  SerialModule x = n;
  for (int step = 0; step < l; ++step) x = *syzygy(a, x);
  return ext1_dim(a, x, n);
}

struct HomologicalReport {
  SerialModule module;
  HomDim proj_dim;
  HomDim inj_dim;
  bool rigid = true;
  std::vector<int> ext_dims;  // ext_dims[i-1] = dim Ext^i(M, M)
};

inline HomologicalReport homological_report(const NakayamaAlgebra& a, const SerialModule& m, int depth) {
  HomologicalReport r;
  r.module = m;
  r.proj_dim = proj_dim(a, m);
  r.inj_dim = inj_dim(a, m);
  r.rigid = is_rigid(a, m);
  for (int i = 1; i <= depth; ++i) r.ext_dims.push_back(ext_dim(a, m, m, i));
  return r;
}

/// True when `series` is the lexicographically least of its rotations.
inline bool is_minimal_rotation(const std::vector<int>& series) {
  const std::size_t n = series.size();
  for (std::size_t r = 1; r < n; ++r) {
    std::vector<int> rot(n);
    for (std::size_t i = 0; i < n; ++i) rot[i] = series[(i + r) % n];
    if (rot < series) return false;
  }
  return true;
}

/// The extremal series [n, 2n-1, 2n-2, ..., n+1].
inline std::vector<int> extremal_series(int n) {
  std::vector<int> s{n};
  for (int v = 2 * n - 1; v >= n + 1; --v) s.push_back(v);
  return s;
}

}  // namespace extlab::nakayama
