// Nakayama algebras as bound quiver algebras.
//
// Vertices 0..n-1, arrows a_i: i -> i+1 (indices mod n for the cyclic shape),
// one monomial relation per vertex: the path of length c_i starting at i.
#pragma once

#include <string>
#include <vector>

#include "module.hpp"
#include "nakayama.hpp"
#include "presentation.hpp"

namespace extlab {

inline std::string series_string(const std::vector<int>& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out + "]";
}

inline std::string instance_key(const nakayama::NakayamaAlgebra& a) {
  return std::string(nakayama::to_string(a.shape())) + series_string(a.kupisch());
}

/// `schema_version = 1`, `shape = "cyclic"`, `kupisch = [4, 4]`.
inline std::string kupisch_to_toml(const nakayama::NakayamaAlgebra& a) {
  std::string out = "schema_version = " + std::to_string(quiver::kPresentationSchemaVersion) + "\n";
  out += "shape = \"" + std::string(nakayama::to_string(a.shape())) + "\"\n";
  out += "kupisch = [";
  for (int i = 0; i < a.n(); ++i) out += (i ? ", " : "") + std::to_string(a.c(i));
  return out + "]\n";
}

/// Throws PresentationError for malformed files and KupischError for invalid series.
inline nakayama::NakayamaAlgebra kupisch_from_toml(std::string_view text) {
  toml::table doc;
  try {
    doc = toml::parse(text);
  } catch (const toml::parse_error& e) {
    throw quiver::PresentationError(std::string("TOML parse error: ") + std::string(e.description()));
  }
  if (auto v = doc["schema_version"].value<std::int64_t>(); v && *v != quiver::kPresentationSchemaVersion) {
    throw quiver::PresentationError("unsupported schema_version " + std::to_string(*v));
  }
  nakayama::Shape shape = nakayama::Shape::Cyclic;
  if (auto s = doc["shape"].value<std::string>()) {
    try {
      shape = nakayama::parse_shape(*s);
    } catch (const std::invalid_argument& e) {
      throw quiver::PresentationError(e.what());
    }
  }
  const auto* arr = doc["kupisch"].as_array();
  if (!arr) throw quiver::PresentationError("missing kupisch array");
  std::vector<int> series;
  for (const auto& x : *arr) {
    auto v = x.value<std::int64_t>();
    if (!v || *v < 0 || *v > 1000000) throw quiver::PresentationError("kupisch entries must be nonnegative integers");
    series.push_back(static_cast<int>(*v));
  }
  return nakayama::NakayamaAlgebra(shape, series);
}

inline std::string arrow_label(int i) { return "a" + std::to_string(i); }

/// Arrow labels of the path of length k from vertex i, or empty if it leaves a linear quiver.
inline std::vector<std::string> kupisch_path(const nakayama::NakayamaAlgebra& a, int i, int k) {
  std::vector<std::string> out;
  for (int s = 0; s < k; ++s) {
    const int v = i + s;
    if (a.shape() == nakayama::Shape::Linear && v >= a.n() - 1) return {};
    out.push_back(arrow_label(a.vertex(v)));
  }
  return out;
}

inline quiver::Presentation realize_kupisch(const nakayama::NakayamaAlgebra& a, std::uint32_t p) {
  quiver::Presentation pres;
  pres.name = instance_key(a);
  pres.characteristic = p;
  std::vector<std::string> vertices;
  for (int i = 0; i < a.n(); ++i) vertices.push_back(std::to_string(i));
  std::vector<quiver::Arrow> arrows;
  const bool semisimple = a.n() == 1 && a.c(0) == 1;
  if (!semisimple) {
    for (int i = 0; i < a.n(); ++i) {
      if (a.shape() == nakayama::Shape::Linear && i == a.n() - 1) break;
      arrows.push_back({arrow_label(i), i, static_cast<int>(a.vertex(i + 1))});
    }
  }
  pres.quiver = quiver::Quiver(std::move(vertices), std::move(arrows));
  if (!semisimple) {
    for (int i = 0; i < a.n(); ++i) {
      auto path = kupisch_path(a, i, a.c(i));
      if (!path.empty()) pres.relations.push_back(quiver::Relation{{quiver::Term{1, std::move(path)}}});
    }
  }
  pres.loewy_bound = a.loewy_length();
  return pres;
}

/// e_i A / e_i J^k built inside the oracle.
inline quiver::Module oracle_serial_module(const quiver::AlgebraPtr& alg, const nakayama::NakayamaAlgebra& a,
                                           const nakayama::SerialModule& m) {
  const auto path = kupisch_path(a, m.vertex, m.length);
  if (m.length == a.c(m.vertex) || path.empty()) return quiver::projective_module(alg, m.vertex);
  quiver::Path p{m.vertex, {}};
  for (const auto& l : path) p.arrows.push_back(alg->quiver().arrow_index(l));
  const Vector e = alg->idempotent(m.vertex);
  const Vector x = alg->element(alg->normal_form(p));
  return quiver::tuple_module(alg, {m.vertex}, {{e}}, {{x}});
}

}  // namespace extlab
