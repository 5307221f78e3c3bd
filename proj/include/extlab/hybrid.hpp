// Hybrid algebras H_T(Q, f, m, c) from biserial quiver data.
//
// (Q, f) is a 2-regular quiver with a permutation f of the arrows such that
// f(a) starts where a ends. bar(a) is the other arrow with the same source and
// g(a) = bar(f(a)). T is a union of f-orbits of length 1 or 3. Weights m and
// parameters c are constant on g-cycles; n_a is the length of the g-cycle of a.
#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "linalg.hpp"
#include "presentation.hpp"

namespace extlab::hybrid {

using quiver::Arrow;
using quiver::Presentation;
using quiver::Quiver;
using quiver::Relation;
using quiver::Term;

enum class HybridErrorKind {
  Malformed,
  NotTwoRegular,
  FPermutationMismatch,
  TriangleSetNotFInvariant,
  VirtualArrowPresent,
  ZeroParameter,
};

inline std::string to_string(HybridErrorKind k) {
  switch (k) {
    case HybridErrorKind::Malformed: return "Malformed";
    case HybridErrorKind::NotTwoRegular: return "NotTwoRegular";
    case HybridErrorKind::FPermutationMismatch: return "FPermutationMismatch";
    case HybridErrorKind::TriangleSetNotFInvariant: return "TriangleSetNotFInvariant";
    case HybridErrorKind::VirtualArrowPresent: return "VirtualArrowPresent";
    case HybridErrorKind::ZeroParameter: return "ZeroParameter";
  }
  return "?";
}

class HybridError : public std::invalid_argument {
 public:
  HybridError(HybridErrorKind kind, const std::string& msg)
      : std::invalid_argument(to_string(kind) + ": " + msg), kind_(kind) {}
  HybridErrorKind kind() const { return kind_; }

 private:
  HybridErrorKind kind_;
};

/// Weight and parameter for the g-cycle containing `arrow`.
struct CycleParameter {
  std::string arrow;
  int m = 1;
  long long c = 1;
  bool operator==(const CycleParameter&) const = default;
};

struct BiserialQuiverData {
  std::string name;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::string>> f_cycles;  // f in cycle notation (arrow labels)
  std::vector<std::string> triangles;              // arrows in T
  int default_m = 1;
  long long default_c = 1;
  std::vector<CycleParameter> cycle_parameters;
  bool operator==(const BiserialQuiverData&) const = default;
};

enum class VertexClass { Biserial, Quaternion, Hybrid };

inline std::string to_string(VertexClass v) {
  switch (v) {
    case VertexClass::Biserial: return "biserial";
    case VertexClass::Quaternion: return "quaternion";
    case VertexClass::Hybrid: return "hybrid";
  }
  return "?";
}

/// Validated data with the derived permutations; arrows are indices into quiver().
class BiserialQuiver {
 public:
  static BiserialQuiver validate(const BiserialQuiverData& d) {
    BiserialQuiver b;
    b.data_ = d;
    try {
      b.quiver_ = Quiver(d.vertices, d.arrows);
    } catch (const std::invalid_argument& e) {
      throw HybridError(HybridErrorKind::Malformed, e.what());
    }
    const int na = b.quiver_.num_arrows();
    const int nv = b.quiver_.num_vertices();
    auto arrow = [&](const std::string& l) {
      auto i = b.quiver_.find_arrow(l);
      if (!i) throw HybridError(HybridErrorKind::Malformed, "unknown arrow '" + l + "'");
      return *i;
    };

    std::vector<int> out(static_cast<std::size_t>(nv), 0), in(static_cast<std::size_t>(nv), 0);
    for (const auto& a : b.quiver_.arrows()) {
      ++out[static_cast<std::size_t>(a.source)];
      ++in[static_cast<std::size_t>(a.target)];
    }
    for (int v = 0; v < nv; ++v) {
      if (out[static_cast<std::size_t>(v)] != 2 || in[static_cast<std::size_t>(v)] != 2) {
        throw HybridError(HybridErrorKind::NotTwoRegular, "vertex '" + b.quiver_.vertex_name(v) + "' does not have two arrows in and two out");
      }
    }
    if (!connected(b.quiver_)) throw HybridError(HybridErrorKind::NotTwoRegular, "quiver is not connected");

    b.f_.assign(static_cast<std::size_t>(na), -1);
    for (const auto& cyc : d.f_cycles) {
      for (std::size_t i = 0; i < cyc.size(); ++i) {
        const int a = arrow(cyc[i]);
        if (b.f_[static_cast<std::size_t>(a)] >= 0) {
          throw HybridError(HybridErrorKind::FPermutationMismatch, "arrow '" + cyc[i] + "' appears twice in f");
        }
        b.f_[static_cast<std::size_t>(a)] = arrow(cyc[(i + 1) % cyc.size()]);
      }
    }
    for (int a = 0; a < na; ++a) {
      const int fa = b.f_[static_cast<std::size_t>(a)];
      if (fa < 0) throw HybridError(HybridErrorKind::FPermutationMismatch, "f is not defined on '" + b.label(a) + "'");
      if (b.quiver_.arrow(fa).source != b.quiver_.arrow(a).target) {
        throw HybridError(HybridErrorKind::FPermutationMismatch,
                          "f(" + b.label(a) + ") = " + b.label(fa) + " does not start where " + b.label(a) + " ends");
      }
    }

    b.bar_.assign(static_cast<std::size_t>(na), -1);
    for (int a = 0; a < na; ++a) {
      for (int c = 0; c < na; ++c) {
        if (c != a && b.quiver_.arrow(c).source == b.quiver_.arrow(a).source) b.bar_[static_cast<std::size_t>(a)] = c;
      }
    }
    b.g_.resize(static_cast<std::size_t>(na));
    for (int a = 0; a < na; ++a) b.g_[static_cast<std::size_t>(a)] = b.bar(b.f(a));
    std::vector<int> g_inv(static_cast<std::size_t>(na)), f_inv(static_cast<std::size_t>(na));
    for (int a = 0; a < na; ++a) {
      g_inv[static_cast<std::size_t>(b.g(a))] = a;
      f_inv[static_cast<std::size_t>(b.f(a))] = a;
    }
    for (int a = 0; a < na; ++a) {
      if (g_inv[static_cast<std::size_t>(a)] != f_inv[static_cast<std::size_t>(b.bar(a))]) {
        throw std::logic_error("g^-1(a) != f^-1(bar a)");
      }
    }

    b.in_t_.assign(static_cast<std::size_t>(na), false);
    for (const auto& l : d.triangles) b.in_t_[static_cast<std::size_t>(arrow(l))] = true;
    for (int a = 0; a < na; ++a) {
      if (!b.in_t_[static_cast<std::size_t>(a)]) continue;
      const int len = b.f_orbit_length(a);
      if (len != 1 && len != 3) {
        throw HybridError(HybridErrorKind::TriangleSetNotFInvariant,
                          "'" + b.label(a) + "' lies in an f-orbit of length " + std::to_string(len));
      }
      if (!b.in_t_[static_cast<std::size_t>(b.f(a))]) {
        throw HybridError(HybridErrorKind::TriangleSetNotFInvariant, "T is not closed under f at '" + b.label(a) + "'");
      }
    }

    b.cycle_of_.assign(static_cast<std::size_t>(na), -1);
    for (int a = 0; a < na; ++a) {
      if (b.cycle_of_[static_cast<std::size_t>(a)] >= 0) continue;
      std::vector<int> cyc;
      for (int x = a; b.cycle_of_[static_cast<std::size_t>(x)] < 0; x = b.g(x)) {
        b.cycle_of_[static_cast<std::size_t>(x)] = static_cast<int>(b.g_cycles_.size());
        cyc.push_back(x);
      }
      b.g_cycles_.push_back(std::move(cyc));
    }
    b.m_.assign(b.g_cycles_.size(), d.default_m);
    b.c_.assign(b.g_cycles_.size(), d.default_c);
    for (const auto& p : d.cycle_parameters) {
      const int cyc = b.cycle_of_[static_cast<std::size_t>(arrow(p.arrow))];
      b.m_[static_cast<std::size_t>(cyc)] = p.m;
      b.c_[static_cast<std::size_t>(cyc)] = p.c;
    }
    for (std::size_t i = 0; i < b.m_.size(); ++i) {
      if (b.m_[i] < 1) throw HybridError(HybridErrorKind::Malformed, "weights must be positive");
    }
    for (int a = 0; a < na; ++a) {
      const int need = b.in_t(b.bar(a)) ? 3 : 2;
      if (b.mn(a) < need) {
        throw HybridError(HybridErrorKind::VirtualArrowPresent,
                          "arrow '" + b.label(a) + "' has m*n = " + std::to_string(b.mn(a)) + " < " + std::to_string(need));
      }
    }
    return b;
  }

  const BiserialQuiverData& data() const { return data_; }
  const Quiver& quiver() const { return quiver_; }
  int num_arrows() const { return quiver_.num_arrows(); }
  const std::string& label(int a) const { return quiver_.arrow(a).label; }
  int f(int a) const { return f_[static_cast<std::size_t>(a)]; }
  int g(int a) const { return g_[static_cast<std::size_t>(a)]; }
  int bar(int a) const { return bar_[static_cast<std::size_t>(a)]; }
  bool in_t(int a) const { return in_t_[static_cast<std::size_t>(a)]; }
  const std::vector<std::vector<int>>& g_cycles() const { return g_cycles_; }
  int n(int a) const { return static_cast<int>(g_cycles_[static_cast<std::size_t>(cycle_of_[static_cast<std::size_t>(a)])].size()); }
  int m(int a) const { return m_[static_cast<std::size_t>(cycle_of_[static_cast<std::size_t>(a)])]; }
  long long c(int a) const { return c_[static_cast<std::size_t>(cycle_of_[static_cast<std::size_t>(a)])]; }
  int mn(int a) const { return m(a) * n(a); }

  int f_orbit_length(int a) const {
    int len = 1;
    for (int x = f(a); x != a; x = f(x)) ++len;
    return len;
  }

  /// Arrow labels of B_a: the g-cycle walk from a of length m_a n_a.
  std::vector<std::string> b_monomial(int a) const {
    std::vector<std::string> out;
    int x = a;
    for (int i = 0; i < mn(a); ++i, x = g(x)) out.push_back(label(x));
    return out;
  }

  /// A_a: B_a without its last arrow.
  std::vector<std::string> a_monomial(int a) const {
    auto b = b_monomial(a);
    b.pop_back();
    return b;
  }

  /// The two arrows leaving v, in label order.
  std::pair<int, int> arrows_from(int v) const {
    std::vector<int> xs;
    for (int a = 0; a < num_arrows(); ++a) {
      if (quiver_.arrow(a).source == v) xs.push_back(a);
    }
    std::sort(xs.begin(), xs.end(), [&](int x, int y) { return label(x) < label(y); });
    return {xs[0], xs[1]};
  }

  VertexClass vertex_class(int v) const {
    auto [a, b] = arrows_from(v);
    if (in_t(a) && in_t(b)) return VertexClass::Quaternion;
    if (!in_t(a) && !in_t(b)) return VertexClass::Biserial;
    return VertexClass::Hybrid;
  }

 private:
  static bool connected(const Quiver& q) {
    if (q.num_vertices() == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(q.num_vertices()), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      for (const auto& a : q.arrows()) {
        for (auto [x, y] : {std::pair{a.source, a.target}, std::pair{a.target, a.source}}) {
          if (x == v && !seen[static_cast<std::size_t>(y)]) {
            seen[static_cast<std::size_t>(y)] = true;
            stack.push_back(y);
          }
        }
      }
    }
    return std::all_of(seen.begin(), seen.end(), [](bool s) { return s; });
  }

  BiserialQuiverData data_;
  Quiver quiver_;
  std::vector<int> f_, g_, bar_, cycle_of_;
  std::vector<bool> in_t_;
  std::vector<std::vector<int>> g_cycles_;
  std::vector<int> m_;
  std::vector<long long> c_;
};

inline Presentation build_hybrid(const BiserialQuiver& b, std::uint32_t p) {
  const extlab::PrimeField field(p);
  for (const auto& cyc : b.g_cycles()) {
    if (field.from_int(b.c(cyc.front())) == 0) {
      throw HybridError(HybridErrorKind::ZeroParameter, "parameter of the g-cycle through '" + b.label(cyc.front()) + "' vanishes mod " + std::to_string(p));
    }
  }
  Presentation pres;
  pres.name = b.data().name;
  pres.quiver = b.quiver();
  pres.characteristic = p;
  auto path = [&](std::initializer_list<int> as) {
    std::vector<std::string> out;
    for (int a : as) out.push_back(b.label(a));
    return out;
  };
  int max_mn = 0;
  for (int a = 0; a < b.num_arrows(); ++a) {
    max_mn = std::max(max_mn, b.mn(a));
    const int fa = b.f(a);
    Relation r1;
    r1.terms.push_back(Term{1, path({a, fa})});
    if (b.in_t(a)) r1.terms.push_back(Term{-b.c(b.bar(a)), b.a_monomial(b.bar(a))});
    pres.relations.push_back(r1);
  }
  for (int a = 0; a < b.num_arrows(); ++a) {
    pres.relations.push_back(Relation{{Term{1, path({a, b.f(a), b.g(b.f(a))})}}});
  }
  for (int a = 0; a < b.num_arrows(); ++a) {
    pres.relations.push_back(Relation{{Term{1, path({a, b.g(a), b.f(b.g(a))})}}});
  }
  std::set<int> done;
  for (int a = 0; a < b.num_arrows(); ++a) {
    if (done.count(b.bar(a))) continue;
    done.insert(a);
    pres.relations.push_back(Relation{{Term{b.c(a), b.b_monomial(a)}, Term{-b.c(b.bar(a)), b.b_monomial(b.bar(a))}}});
  }
  pres.loewy_bound = max_mn + 2;
  return pres;
}

inline std::string biserial_to_toml(const BiserialQuiverData& d) {
  using quiver::detail::quote;
  using quiver::detail::string_array;
  std::ostringstream out;
  out << "schema_version = " << quiver::kPresentationSchemaVersion << "\n";
  out << "name = " << quote(d.name) << "\n";
  out << "vertices = " << string_array(d.vertices) << "\n";
  out << "arrows = [\n";
  for (const auto& a : d.arrows) {
    out << "  { label = " << quote(a.label) << ", source = " << quote(d.vertices.at(static_cast<std::size_t>(a.source)))
        << ", target = " << quote(d.vertices.at(static_cast<std::size_t>(a.target))) << " },\n";
  }
  out << "]\n";
  out << "f = " << quiver::detail::nested_array(d.f_cycles) << "\n";
  out << "triangles = " << string_array(d.triangles) << "\n";
  out << "m = " << d.default_m << "\n";
  out << "c = " << d.default_c << "\n";
  for (const auto& cp : d.cycle_parameters) {
    out << "\n[[cycle]]\narrow = " << quote(cp.arrow) << "\nm = " << cp.m << "\nc = " << cp.c << "\n";
  }
  return out.str();
}

inline BiserialQuiverData biserial_from_toml(std::string_view text) {
  namespace qd = quiver::detail;
  toml::table doc;
  try {
    doc = toml::parse(text);
  } catch (const toml::parse_error& e) {
    throw HybridError(HybridErrorKind::Malformed, std::string("TOML parse error: ") + std::string(e.description()));
  }
  try {
    if (qd::require<std::int64_t>(doc, "schema_version", "biserial data") != quiver::kPresentationSchemaVersion) {
      throw quiver::PresentationError("unsupported schema_version");
    }
    BiserialQuiverData d;
    d.name = qd::require<std::string>(doc, "name", "biserial data");
    d.vertices = qd::strings(doc.get("vertices"), "vertices");
    std::map<std::string, int> vidx;
    for (std::size_t i = 0; i < d.vertices.size(); ++i) vidx[d.vertices[i]] = static_cast<int>(i);
    if (const auto* arr = doc.get_as<toml::array>("arrows")) {
      for (const auto& el : *arr) {
        const auto* t = el.as_table();
        if (!t) throw quiver::PresentationError("arrows entries must be tables");
        Arrow a;
        a.label = qd::require<std::string>(*t, "label", "arrow");
        const auto s = qd::require<std::string>(*t, "source", "arrow " + a.label);
        const auto e = qd::require<std::string>(*t, "target", "arrow " + a.label);
        if (!vidx.count(s) || !vidx.count(e)) throw quiver::PresentationError("arrow '" + a.label + "' uses an unknown vertex");
        a.source = vidx[s];
        a.target = vidx[e];
        d.arrows.push_back(a);
      }
    }
    d.f_cycles = qd::string_rows(doc.get("f"), "f");
    d.triangles = qd::strings(doc.get("triangles"), "triangles");
    d.default_m = static_cast<int>(doc["m"].value_or(std::int64_t{1}));
    d.default_c = doc["c"].value_or(std::int64_t{1});
    if (const auto* cyc = doc.get_as<toml::array>("cycle")) {
      for (const auto& el : *cyc) {
        const auto* t = el.as_table();
        if (!t) throw quiver::PresentationError("[[cycle]] entries must be tables");
        CycleParameter cp;
        cp.arrow = qd::require<std::string>(*t, "arrow", "cycle");
        cp.m = static_cast<int>((*t)["m"].value_or(std::int64_t{d.default_m}));
        cp.c = (*t)["c"].value_or(std::int64_t{d.default_c});
        d.cycle_parameters.push_back(cp);
      }
    }
    return d;
  } catch (const quiver::PresentationError& e) {
    throw HybridError(HybridErrorKind::Malformed, e.what());
  }
}

}  // namespace extlab::hybrid
