// Bound quiver presentations: a quiver, a prime characteristic, a list of
// relations (linear combinations of parallel paths) and an asserted Loewy
// bound L with J^L contained in the ideal. Paths are written left to right as
// arrow labels, so "a b" means a followed by b.
#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "toml.hpp"

namespace extlab::quiver {

inline constexpr int kPresentationSchemaVersion = 1;

class PresentationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Arrow {
  std::string label;
  int source = 0;
  int target = 0;
  bool operator==(const Arrow&) const = default;
};

class Quiver {
 public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
      : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
    for (std::size_t i = 0; i < vertices_.size(); ++i) {
      if (!vertex_index_.emplace(vertices_[i], static_cast<int>(i)).second) {
        throw PresentationError("duplicate vertex '" + vertices_[i] + "'");
      }
    }
    for (std::size_t i = 0; i < arrows_.size(); ++i) {
      const auto& a = arrows_[i];
      if (a.label.empty() || a.label.find_first_of(" \t+-*^:") != std::string::npos) {
        throw PresentationError("arrow label '" + a.label + "' must be non-empty without spaces or operators");
      }
      if (a.source < 0 || a.target < 0 || a.source >= num_vertices() || a.target >= num_vertices()) {
        throw PresentationError("arrow '" + a.label + "' has an endpoint outside the vertex set");
      }
      if (!arrow_index_.emplace(a.label, static_cast<int>(i)).second) {
        throw PresentationError("duplicate arrow label '" + a.label + "'");
      }
    }
  }

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int i) const { return arrows_.at(static_cast<std::size_t>(i)); }
  const std::string& vertex_name(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }

  std::optional<int> find_vertex(std::string_view name) const {
    auto it = vertex_index_.find(std::string(name));
    if (it == vertex_index_.end()) return std::nullopt;
    return it->second;
  }
  int vertex_index(std::string_view name) const {
    if (auto v = find_vertex(name)) return *v;
    throw PresentationError("unknown vertex '" + std::string(name) + "'");
  }
  std::optional<int> find_arrow(std::string_view label) const {
    auto it = arrow_index_.find(std::string(label));
    if (it == arrow_index_.end()) return std::nullopt;
    return it->second;
  }
  int arrow_index(std::string_view label) const {
    if (auto a = find_arrow(label)) return *a;
    throw PresentationError("unknown arrow '" + std::string(label) + "'");
  }

  bool operator==(const Quiver& o) const { return vertices_ == o.vertices_ && arrows_ == o.arrows_; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_index_;
  std::map<std::string, int> arrow_index_;
};

struct Term {
  long long coefficient = 1;
  std::vector<std::string> path;  // arrow labels, length >= 2 for admissible relations
  bool operator==(const Term&) const = default;
};

struct Relation {
  std::vector<Term> terms;
  bool operator==(const Relation&) const = default;
};

/// A named module attached to a presentation.
///
/// kind "generated": the right submodule of the sum of projectives P_v (v in
/// `summands`) generated by the tuples in `generators`; when `modulo` is
/// nonempty the module is <generators> / (<generators> meet <modulo>).
/// kind "kernel": the kernel of (x_1, ..., x_r) |-> a_1 x_1 + ... + a_r x_r
/// from the sum of the P_v (v in `summands`) to P_vertex, where the single
/// row of `generators` lists the elements a_g.
/// kind "top_kernel": the kernel of the projection of module expression
/// `base` onto the S_vertex part of its top.
struct ModuleDefinition {
  std::string name;
  std::string kind = "generated";
  std::string description;
  std::vector<std::string> summands;
  std::vector<std::vector<std::string>> generators;
  std::vector<std::vector<std::string>> modulo;
  std::string base;
  std::string vertex;
  bool operator==(const ModuleDefinition&) const = default;
};

struct Presentation {
  std::string name;
  std::string description;
  Quiver quiver;
  std::uint32_t characteristic = 2;
  std::vector<Relation> relations;
  int loewy_bound = 1;
  std::vector<ModuleDefinition> modules;

  const ModuleDefinition* find_module(std::string_view n) const {
    for (const auto& m : modules) {
      if (m.name == n) return &m;
    }
    return nullptr;
  }

  bool operator==(const Presentation&) const = default;
};

/// Splits "a b^2 c" into {"a","b","b","c"}.
inline std::vector<std::string> parse_path_labels(std::string_view text) {
  std::vector<std::string> out;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    int power = 1;
    if (auto caret = tok.find('^'); caret != std::string::npos) {
      try {
        power = std::stoi(tok.substr(caret + 1));
      } catch (const std::exception&) {
        throw PresentationError("bad exponent in '" + tok + "'");
      }
      if (power < 1) throw PresentationError("exponent must be positive in '" + tok + "'");
      tok = tok.substr(0, caret);
    }
    for (int i = 0; i < power; ++i) out.push_back(tok);
  }
  return out;
}

inline std::string join_labels(const std::vector<std::string>& path) {
  std::string s;
  for (std::size_t i = 0; i < path.size(); ++i) {
    if (i) s += ' ';
    s += path[i];
  }
  return s;
}

/// Checks admissibility and well-formedness of every relation.
inline void validate_presentation(const Presentation& p) {
  if (!std::all_of(p.name.begin(), p.name.end(), [](char c) { return c != '"' && c != '\\' && c != '\n'; })) {
    throw PresentationError("presentation name contains forbidden characters");
  }
  if (p.loewy_bound < 1) throw PresentationError("loewy_bound must be positive");
  for (std::size_t r = 0; r < p.relations.size(); ++r) {
    const auto& rel = p.relations[r];
    if (rel.terms.empty()) throw PresentationError("relation " + std::to_string(r) + " has no terms");
    std::optional<std::pair<int, int>> ends;
    for (const auto& t : rel.terms) {
      if (t.path.size() < 2) {
        throw PresentationError("NonAdmissibleRelation: relation " + std::to_string(r) + " contains the path '" +
                                join_labels(t.path) + "' of length < 2");
      }
      int prev = -1;
      int start = -1;
      for (const auto& label : t.path) {
        const auto& a = p.quiver.arrow(p.quiver.arrow_index(label));
        if (prev >= 0 && a.source != prev) {
          throw PresentationError("path '" + join_labels(t.path) + "' is not composable");
        }
        if (start < 0) start = a.source;
        prev = a.target;
      }
      const std::pair<int, int> e{start, prev};
      if (ends && *ends != e) {
        throw PresentationError("NonAdmissibleRelation: relation " + std::to_string(r) +
                                " mixes paths with different endpoints");
      }
      ends = e;
    }
  }
}

inline Presentation transpose_presentation(const Presentation& p) {
  Presentation t = p;
  t.name = p.name + "_op";
  std::vector<Arrow> arrows;
  for (const auto& a : p.quiver.arrows()) arrows.push_back({a.label, a.target, a.source});
  t.quiver = Quiver(p.quiver.vertices(), std::move(arrows));
  for (auto& rel : t.relations) {
    for (auto& term : rel.terms) std::reverse(term.path.begin(), term.path.end());
  }
  t.modules.clear();
  return t;
}

// ---------------------------------------------------------------------------
// TOML serialization

namespace detail {

inline std::string quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    if (c == '\n') {
      out += "\\n";
      continue;
    }
    out += c;
  }
  out += '"';
  return out;
}

inline std::string string_array(const std::vector<std::string>& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    if (i) s += ", ";
    s += quote(xs[i]);
  }
  return s + "]";
}

inline std::string nested_array(const std::vector<std::vector<std::string>>& xss) {
  std::string s = "[";
  for (std::size_t i = 0; i < xss.size(); ++i) {
    if (i) s += ", ";
    s += string_array(xss[i]);
  }
  return s + "]";
}

template <typename T>
T require(const toml::table& t, std::string_view key, std::string_view where) {
  auto node = t.get(key);
  if (!node) throw PresentationError("missing key '" + std::string(key) + "' in " + std::string(where));
  auto v = node->value<T>();
  if (!v) throw PresentationError("key '" + std::string(key) + "' in " + std::string(where) + " has the wrong type");
  return *v;
}

inline std::vector<std::string> strings(const toml::node* node, std::string_view where) {
  std::vector<std::string> out;
  if (!node) return out;
  const auto* arr = node->as_array();
  if (!arr) throw PresentationError(std::string(where) + " must be an array of strings");
  for (const auto& el : *arr) {
    auto s = el.value<std::string>();
    if (!s) throw PresentationError(std::string(where) + " must contain only strings");
    out.push_back(*s);
  }
  return out;
}

inline std::vector<std::vector<std::string>> string_rows(const toml::node* node, std::string_view where) {
  std::vector<std::vector<std::string>> out;
  if (!node) return out;
  const auto* arr = node->as_array();
  if (!arr) throw PresentationError(std::string(where) + " must be an array of arrays");
  for (const auto& el : *arr) out.push_back(strings(&el, where));
  return out;
}

}  // namespace detail

inline std::string to_toml(const Presentation& p) {
  using detail::quote;
  std::ostringstream out;
  out << "schema_version = " << kPresentationSchemaVersion << "\n";
  out << "name = " << quote(p.name) << "\n";
  if (!p.description.empty()) out << "description = " << quote(p.description) << "\n";
  out << "char = " << p.characteristic << "\n";
  out << "loewy_bound = " << p.loewy_bound << "\n";
  out << "\n[quiver]\n";
  out << "vertices = " << detail::string_array(p.quiver.vertices()) << "\n";
  out << "arrows = [\n";
  for (const auto& a : p.quiver.arrows()) {
    out << "  { label = " << quote(a.label) << ", source = " << quote(p.quiver.vertex_name(a.source))
        << ", target = " << quote(p.quiver.vertex_name(a.target)) << " },\n";
  }
  out << "]\n";
  for (const auto& rel : p.relations) {
    out << "\n[[relation]]\nterms = [";
    for (std::size_t i = 0; i < rel.terms.size(); ++i) {
      if (i) out << ", ";
      out << "[" << rel.terms[i].coefficient << ", " << quote(join_labels(rel.terms[i].path)) << "]";
    }
    out << "]\n";
  }
  for (const auto& m : p.modules) {
    out << "\n[[module]]\n";
    out << "name = " << quote(m.name) << "\n";
    out << "kind = " << quote(m.kind) << "\n";
    if (!m.description.empty()) out << "description = " << quote(m.description) << "\n";
    if (m.kind == "top_kernel") {
      out << "base = " << quote(m.base) << "\n";
      out << "vertex = " << quote(m.vertex) << "\n";
    } else {
      out << "summands = " << detail::string_array(m.summands) << "\n";
      out << "generators = " << detail::nested_array(m.generators) << "\n";
      if (!m.modulo.empty()) out << "modulo = " << detail::nested_array(m.modulo) << "\n";
      if (m.kind == "kernel") out << "vertex = " << quote(m.vertex) << "\n";
    }
  }
  return out.str();
}

inline Presentation presentation_from_toml(std::string_view text) {
  toml::table doc;
  try {
    doc = toml::parse(text);
  } catch (const toml::parse_error& e) {
    throw PresentationError(std::string("TOML parse error: ") + std::string(e.description()));
  }
  const auto version = detail::require<std::int64_t>(doc, "schema_version", "presentation");
  if (version != kPresentationSchemaVersion) {
    throw PresentationError("unsupported schema_version " + std::to_string(version));
  }
  Presentation p;
  p.name = detail::require<std::string>(doc, "name", "presentation");
  p.description = doc["description"].value_or(std::string{});
  const auto ch = detail::require<std::int64_t>(doc, "char", "presentation");
  if (ch < 2 || ch >= 65536) throw PresentationError("char out of range");
  p.characteristic = static_cast<std::uint32_t>(ch);
  p.loewy_bound = static_cast<int>(detail::require<std::int64_t>(doc, "loewy_bound", "presentation"));

  const auto* q = doc["quiver"].as_table();
  if (!q) throw PresentationError("missing [quiver] table");
  auto vertices = detail::strings(q->get("vertices"), "quiver.vertices");
  std::map<std::string, int> vidx;
  for (std::size_t i = 0; i < vertices.size(); ++i) vidx[vertices[i]] = static_cast<int>(i);
  std::vector<Arrow> arrows;
  if (const auto* arr = q->get_as<toml::array>("arrows")) {
    for (const auto& el : *arr) {
      const auto* t = el.as_table();
      if (!t) throw PresentationError("quiver.arrows entries must be tables");
      Arrow a;
      a.label = detail::require<std::string>(*t, "label", "arrow");
      const auto s = detail::require<std::string>(*t, "source", "arrow " + a.label);
      const auto d = detail::require<std::string>(*t, "target", "arrow " + a.label);
      if (!vidx.count(s) || !vidx.count(d)) throw PresentationError("arrow '" + a.label + "' uses an unknown vertex");
      a.source = vidx[s];
      a.target = vidx[d];
      arrows.push_back(a);
    }
  }
  p.quiver = Quiver(std::move(vertices), std::move(arrows));

  if (const auto* rels = doc["relation"].as_array()) {
    for (const auto& el : *rels) {
      const auto* t = el.as_table();
      if (!t) throw PresentationError("[[relation]] entries must be tables");
      const auto* terms = t->get_as<toml::array>("terms");
      if (!terms) throw PresentationError("relation without terms");
      Relation rel;
      for (const auto& term : *terms) {
        const auto* pair = term.as_array();
        if (!pair || pair->size() != 2) throw PresentationError("relation terms must be [coefficient, path] pairs");
        auto c = (*pair)[0].value<std::int64_t>();
        auto path = (*pair)[1].value<std::string>();
        if (!c || !path) throw PresentationError("relation term must be [integer, string]");
        rel.terms.push_back({*c, parse_path_labels(*path)});
      }
      p.relations.push_back(std::move(rel));
    }
  }

  if (const auto* mods = doc["module"].as_array()) {
    for (const auto& el : *mods) {
      const auto* t = el.as_table();
      if (!t) throw PresentationError("[[module]] entries must be tables");
      ModuleDefinition m;
      m.name = detail::require<std::string>(*t, "name", "module");
      m.kind = (*t)["kind"].value_or(std::string("generated"));
      m.description = (*t)["description"].value_or(std::string{});
      if (m.kind == "top_kernel") {
        m.base = detail::require<std::string>(*t, "base", "module " + m.name);
        m.vertex = detail::require<std::string>(*t, "vertex", "module " + m.name);
      } else if (m.kind == "generated" || m.kind == "kernel") {
        m.summands = detail::strings(t->get("summands"), "module.summands");
        m.generators = detail::string_rows(t->get("generators"), "module.generators");
        m.modulo = detail::string_rows(t->get("modulo"), "module.modulo");
        if (m.kind == "kernel") {
          m.vertex = detail::require<std::string>(*t, "vertex", "module " + m.name);
          if (m.generators.size() != 1 || !m.modulo.empty()) {
            throw PresentationError("kernel module '" + m.name + "' needs exactly one generator row and no modulo");
          }
        }
      } else {
        throw PresentationError("unknown module kind '" + m.kind + "'");
      }
      p.modules.push_back(std::move(m));
    }
  }
  validate_presentation(p);
  return p;
}

}  // namespace extlab::quiver
