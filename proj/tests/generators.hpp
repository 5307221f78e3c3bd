// Hand-rolled random generators for the property tests. Every test seeds its own engine.
#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "extlab/hybrid.hpp"
#include "extlab/linalg.hpp"
#include "extlab/nakayama.hpp"

namespace gen {

using Rng = std::mt19937_64;

inline int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

inline extlab::Matrix matrix(Rng& rng, const extlab::PrimeField& f, std::size_t rows, std::size_t cols) {
  extlab::Matrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = static_cast<extlab::Scalar>(uniform(rng, 0, static_cast<int>(f.characteristic()) - 1));
  }
  return m;
}

/// Low-rank matrices hit the interesting cases more often than uniform ones.
inline extlab::Matrix low_rank_matrix(Rng& rng, const extlab::PrimeField& f, std::size_t rows, std::size_t cols, std::size_t rank) {
  const auto a = matrix(rng, f, rows, rank);
  const auto b = matrix(rng, f, rank, cols);
  return extlab::multiply(f, a, b);
}

/// Rejection-samples a valid Kupisch series.
inline extlab::nakayama::NakayamaAlgebra kupisch(Rng& rng, int n_max, int c_max, extlab::nakayama::Shape shape) {
  using namespace extlab::nakayama;
  for (;;) {
    const int n = uniform(rng, shape == Shape::Linear ? 2 : 1, n_max);
    std::vector<int> s(static_cast<std::size_t>(n));
    for (auto& c : s) c = uniform(rng, 1, c_max);
    try {
      return NakayamaAlgebra(shape, s);
    } catch (const KupischError&) {
    }
  }
}

inline extlab::nakayama::SerialModule serial_module(Rng& rng, const extlab::nakayama::NakayamaAlgebra& a) {
  const auto all = extlab::nakayama::all_modules(a);
  return all[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(all.size()) - 1))];
}

/// Random biserial quiver data on nv vertices: arrows 2v, 2v+1 start at v, f is a random
/// permutation and each arrow ends where its f-image starts. Returns nullopt when the
/// result is disconnected or fails validation (too small m n).
inline std::optional<extlab::hybrid::BiserialQuiverData> biserial(Rng& rng, int nv) {
  using namespace extlab::hybrid;
  const int na = 2 * nv;
  std::vector<int> f(static_cast<std::size_t>(na));
  std::iota(f.begin(), f.end(), 0);
  std::shuffle(f.begin(), f.end(), rng);
  BiserialQuiverData d;
  d.name = "random";
  for (int v = 0; v < nv; ++v) d.vertices.push_back("v" + std::to_string(v));
  for (int a = 0; a < na; ++a) d.arrows.push_back({"x" + std::to_string(a), a / 2, f[static_cast<std::size_t>(a)] / 2});
  std::vector<bool> seen(static_cast<std::size_t>(na), false);
  for (int a = 0; a < na; ++a) {
    if (seen[static_cast<std::size_t>(a)]) continue;
    std::vector<std::string> cyc;
    for (int x = a; !seen[static_cast<std::size_t>(x)]; x = f[static_cast<std::size_t>(x)]) {
      seen[static_cast<std::size_t>(x)] = true;
      cyc.push_back("x" + std::to_string(x));
    }
    if ((cyc.size() == 1 || cyc.size() == 3) && uniform(rng, 0, 1) == 1) d.triangles.insert(d.triangles.end(), cyc.begin(), cyc.end());
    d.f_cycles.push_back(std::move(cyc));
  }
  d.default_m = uniform(rng, 1, 3);
  try {
    (void)BiserialQuiver::validate(d);
  } catch (const HybridError&) {
    return std::nullopt;
  }
  return d;
}

}  // namespace gen
