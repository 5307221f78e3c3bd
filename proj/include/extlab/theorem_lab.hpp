// Exhaustive checks over small Nakayama algebras, with the bound quiver oracle
// as an independent second opinion.
#pragma once

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "algebra.hpp"
#include "module.hpp"
#include "nakayama.hpp"
#include "presentation.hpp"
#include "realize.hpp"
#include "verdict.hpp"

namespace extlab::lab {

using nakayama::NakayamaAlgebra;
using nakayama::SerialModule;
using nakayama::Shape;

inline const std::vector<std::string>& all_checks() {
  static const std::vector<std::string> names{"min-inequality", "nonvanishing", "loewy-bound", "rigidity", "duality", "oracle",
                                                "extremal-series"};
  return names;
}

struct SweepConfig {
  int n_max = 3;
  int c_max = 9;
  std::set<Shape> shapes{Shape::Cyclic};
  int ext_depth = 20;
  std::vector<std::uint32_t> field_chars{2, 3};
  std::vector<std::string> checks = all_checks();
  unsigned threads = 0;  // 0: hardware concurrency
  std::uint64_t seed = quiver::SearchLimits{}.seed;

  void validate() const {
    if (n_max < 1 || c_max < 1 || ext_depth < 1) throw std::invalid_argument("sweep bounds must be positive");
    for (const auto& c : checks) {
      if (std::find(all_checks().begin(), all_checks().end(), c) == all_checks().end()) {
        throw std::invalid_argument("unknown check '" + c + "'");
      }
    }
    for (auto p : field_chars) (void)PrimeField(p);
  }
};

namespace detail {

inline bool next_tuple(std::vector<int>& xs, int lo, int hi) {
  for (std::size_t i = xs.size(); i-- > 0;) {
    if (xs[i] < hi) {
      ++xs[i];
      std::fill(xs.begin() + static_cast<std::ptrdiff_t>(i) + 1, xs.end(), lo);
      return true;
    }
  }
  return false;
}

}  // namespace detail

/// Cyclic instances first, then linear; within a shape by n, then lexicographically.
/// Cyclic series are kept only in their lexicographically minimal rotation.
/// Linear series start at n = 2 (n = 1 is the field, already the cyclic [1]).
inline std::vector<NakayamaAlgebra> enumerate_kupisch(const SweepConfig& cfg) {
  std::vector<NakayamaAlgebra> out;
  for (Shape shape : {Shape::Cyclic, Shape::Linear}) {
    if (!cfg.shapes.count(shape)) continue;
    for (int n = shape == Shape::Linear ? 2 : 1; n <= cfg.n_max; ++n) {
      const int lo = 1;
      std::vector<int> xs(static_cast<std::size_t>(n), lo);
      do {
        if (shape == Shape::Cyclic && !nakayama::is_minimal_rotation(xs)) continue;
        try {
          out.emplace_back(shape, xs);
        } catch (const nakayama::KupischError&) {
        }
      } while (detail::next_tuple(xs, lo, cfg.c_max));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Checks

/// Ext^i(N,N) = Ext^1(Ω^{i-1}N, N) is nonzero for every i when it is nonzero
/// along the whole Ω-orbit of N (prefix and cycle).
struct NonvanishingCertificate {
  bool certified = false;
  std::size_t prefix = 0;
  std::size_t period = 0;
  std::optional<int> first_zero;  // smallest i with Ext^i(N,N) = 0
};

inline NonvanishingCertificate nonvanishing_certificate(const NakayamaAlgebra& a, const SerialModule& n) {
  const auto orbit = nakayama::omega_orbit(a, n);
  NonvanishingCertificate cert;
  for (std::size_t j = 0; j < orbit.modules.size(); ++j) {
    const auto& m = orbit.modules[j];
    const int v = nakayama::is_projective(a, m) ? 0 : nakayama::ext1_dim(a, m, n);
    if (v == 0) {
      cert.first_zero = static_cast<int>(j) + 1;
      return cert;
    }
  }
  if (!orbit.cycle_start) {
    cert.first_zero = static_cast<int>(orbit.modules.size()) + 1;
    return cert;
  }
  cert.certified = true;
  cert.prefix = *orbit.cycle_start;
  cert.period = orbit.modules.size() - *orbit.cycle_start;
  return cert;
}

inline Verdict check_min_inequality(const NakayamaAlgebra& a) {
  const auto key = instance_key(a);
  const auto mods = nakayama::all_modules(a);
  std::map<SerialModule, std::optional<SerialModule>> omega;
  for (const auto& m : mods) omega[m] = nakayama::syzygy(a, m);
  std::size_t pairs = 0;
  for (const auto& m : mods) {
    for (const auto& n : mods) {
      ++pairs;
      const int emn = nakayama::ext1_dim(a, m, n);
      const int emm = nakayama::ext1_dim(a, m, m);
      const int enn = nakayama::ext1_dim(a, n, n);
      if (emn < std::min(emm, enn)) {
        return fail(key, "min-inequality",
                    "Ext1 M=" + to_string(m) + " N=" + to_string(n) + ": " + std::to_string(emn) + " < min(" + std::to_string(emm) + "," +
                        std::to_string(enn) + ")");
      }
      const int hmn = nakayama::hom_dim(a, omega[m], n);
      const int hmm = nakayama::hom_dim(a, omega[m], m);
      const int hnn = nakayama::hom_dim(a, omega[n], n);
      if (hmn < std::min(hmm, hnn)) {
        return fail(key, "min-inequality",
                    "Hom(Omega M,N) M=" + to_string(m) + " N=" + to_string(n) + ": " + std::to_string(hmn) + " < min(" + std::to_string(hmm) +
                        "," + std::to_string(hnn) + ")");
      }
    }
  }
  return pass(key, "min-inequality", std::to_string(pairs) + " ordered pairs");
}

inline Verdict check_nonvanishing(const NakayamaAlgebra& a, int depth) {
  const auto key = instance_key(a);
  std::size_t nonrigid = 0, max_period = 0;
  for (const auto& m : nakayama::all_modules(a)) {
    if (nakayama::ext1_dim(a, m, m) == 0) continue;
    ++nonrigid;
    for (int i = 1; i <= depth; ++i) {
      if (nakayama::ext_dim(a, m, m, i) == 0) {
        return fail(key, "nonvanishing", "N=" + to_string(m) + " Ext1=" + std::to_string(nakayama::ext1_dim(a, m, m)) + " Ext" + std::to_string(i) + "=0");
      }
    }
    const auto cert = nonvanishing_certificate(a, m);
    if (!cert.certified) {
      return fail(key, "nonvanishing", "N=" + to_string(m) + " Ext" + std::to_string(cert.first_zero.value_or(0)) + "=0 beyond depth");
    }
    max_period = std::max(max_period, cert.period);
  }
  if (nonrigid == 0) return skipped(key, "nonvanishing", "all modules rigid");
  return pass(key, "nonvanishing",
              std::to_string(nonrigid) + " non-rigid modules, nonzero for i<=" + std::to_string(depth) + ", all i certified by orbit cycles (max period " +
                  std::to_string(max_period) + ")");
}

inline Verdict check_loewy_bound(const NakayamaAlgebra& a, int depth) {
  const auto key = instance_key(a);
  const int n = a.n();
  const int L = a.loewy_length();
  std::string note;
  bool applied = false;
  if (L >= 2 * n) {
    applied = true;
    int i = 0;
    while (a.c(i) < 2 * n) ++i;
    const SerialModule m{i, n};
    if (nakayama::is_rigid(a, m)) return fail(key, "loewy-bound", "L=" + std::to_string(L) + " but witness " + to_string(m) + " is rigid");
    for (int d = 1; d <= depth; ++d) {
      if (nakayama::ext_dim(a, m, m, d) == 0) {
        return fail(key, "loewy-bound", "witness " + to_string(m) + " has Ext" + std::to_string(d) + "=0");
      }
    }
    note = "L=" + std::to_string(L) + ">=2n, witness " + to_string(m) + " non-rigid";
  }
  const auto gl = nakayama::global_dimension(a);
  if (!gl.infinite()) {
    applied = true;
    if (L > 2 * n - 1) return fail(key, "loewy-bound", "gldim " + to_string(gl) + " but L=" + std::to_string(L) + " > 2n-1");
    for (const auto& m : nakayama::all_modules(a)) {
      if (!nakayama::is_rigid(a, m)) return fail(key, "loewy-bound", "gldim finite but " + to_string(m) + " is non-rigid");
    }
    note = "gldim " + to_string(gl) + ", L=" + std::to_string(L) + "<=2n-1, all rigid";
  }
  if (!applied) return skipped(key, "loewy-bound", "L=" + std::to_string(L) + "<2n and gldim infinite");
  return pass(key, "loewy-bound", note);
}

inline Verdict check_rigidity(const NakayamaAlgebra& a) {
  const auto key = instance_key(a);
  const int n = a.n();
  const bool finite_gl = !nakayama::global_dimension(a).infinite();
  std::size_t nonrigid = 0;
  for (const auto& m : nakayama::all_modules(a)) {
    const bool rigid = nakayama::is_rigid(a, m);
    const bool ext_zero = nakayama::ext1_dim(a, m, m) == 0;
    const bool criterion = a.shape() == Shape::Linear || !(n <= m.length && m.length <= a.c(m.vertex) - n);
    if (rigid != ext_zero || rigid != criterion) {
      return fail(key, "rigidity", to_string(m) + ": is_rigid=" + std::to_string(rigid) + " Ext1=0:" + std::to_string(ext_zero) +
                                       " criterion=" + std::to_string(criterion));
    }
    if (rigid) continue;
    ++nonrigid;
    if (finite_gl) return fail(key, "rigidity", to_string(m) + " non-rigid over an algebra of finite global dimension");
    if (auto om = nakayama::syzygy(a, m); om && nakayama::is_rigid(a, *om)) {
      return fail(key, "rigidity", to_string(m) + " non-rigid but its syzygy " + to_string(*om) + " is rigid");
    }
    if (!nakayama::proj_dim(a, m).infinite() || !nakayama::inj_dim(a, m).infinite()) {
      return fail(key, "rigidity", to_string(m) + " non-rigid with finite pd or id");
    }
  }
  return pass(key, "rigidity", std::to_string(nonrigid) + " non-rigid modules");
}

/// Combinatorial duality plus the opposite series read off the oracle's transposed algebra over F_2.
inline Verdict check_duality(const NakayamaAlgebra& a) {
  const auto key = instance_key(a);
  const auto op = nakayama::opposite_algebra(a);
  if (op.dimension() != a.dimension()) return fail(key, "duality", "opposite series " + series_string(op.kupisch()) + " changes the dimension");
  if (!(nakayama::opposite_algebra(op) == a)) return fail(key, "duality", "double opposite is " + series_string(nakayama::opposite_algebra(op).kupisch()));
  for (const auto& m : nakayama::all_modules(a)) {
    const auto d = nakayama::dual_module(a, m);
    if (nakayama::ext1_dim(a, m, m) != nakayama::ext1_dim(op, d, d)) {
      return fail(key, "duality", to_string(m) + " Ext1 " + std::to_string(nakayama::ext1_dim(a, m, m)) + " vs dual " + to_string(d) + " " +
                                      std::to_string(nakayama::ext1_dim(op, d, d)));
    }
  }
  const auto alg = quiver::build_algebra(quiver::transpose_presentation(realize_kupisch(a, 2)));
  const auto cartan = alg->cartan();
  for (int v = 0; v < a.n(); ++v) {
    int row = 0;
    for (int x : cartan[static_cast<std::size_t>(v)]) row += x;
    const int expected = op.c(nakayama::opposite_vertex(a, v));
    if (row != expected) {
      return fail(key, "duality", "transposed oracle: dim P_" + std::to_string(v) + " = " + std::to_string(row) + ", opposite series gives " +
                                      std::to_string(expected));
    }
  }
  return pass(key, "duality", "opposite " + series_string(op.kupisch()));
}

/// Oracle data for every serial module: syzygy chain and Hom dimensions into every serial module.
class OracleTables {
 public:
  OracleTables(const NakayamaAlgebra& a, std::uint32_t p, int depth, const quiver::SearchLimits& limits) : a_(a), depth_(depth) {
    alg_ = quiver::build_algebra(realize_kupisch(a, p));
    mods_ = nakayama::all_modules(a);
    for (const auto& m : mods_) modules_.push_back(oracle_serial_module(alg_, a, m));
    const std::size_t k = mods_.size();
    chains_.resize(k);
    hom_.assign(k, std::vector<std::vector<std::size_t>>(static_cast<std::size_t>(depth) + 1, std::vector<std::size_t>(k, 0)));
    for (std::size_t x = 0; x < k; ++x) {
      chains_[x] = quiver::syzygy_chain(modules_[x], depth);
      for (int j = 0; j <= depth; ++j) {
        const auto& c = chains_[x][static_cast<std::size_t>(j)];
        if (c.is_zero()) break;
        for (std::size_t y = 0; y < k; ++y) hom_[x][static_cast<std::size_t>(j)][y] = quiver::hom_dim(c, modules_[y]);
      }
      pd_.push_back(quiver::proj_dim(modules_[x], a.dimension() + 2, limits));
    }
  }

  const quiver::AlgebraPtr& algebra() const { return alg_; }
  const std::vector<SerialModule>& modules() const { return mods_; }
  const quiver::Module& module(std::size_t x) const { return modules_[x]; }

  std::size_t hom(std::size_t x, std::size_t y) const { return hom_[x][0][y]; }

  std::size_t ext(std::size_t x, std::size_t y, int i) const {
    const auto& prev = chains_[x][static_cast<std::size_t>(i - 1)];
    if (prev.is_zero()) return 0;
    const auto top = quiver::top_dims(prev);
    std::size_t hp = 0;
    for (int v = 0; v < a_.n(); ++v) hp += top[static_cast<std::size_t>(v)] * modules_[y].dim(v);
    const std::size_t val = hom_[x][static_cast<std::size_t>(i)][y] + hom_[x][static_cast<std::size_t>(i - 1)][y];
    if (val < hp) throw std::logic_error("negative Ext dimension in oracle tables");
    return val - hp;
  }

  const quiver::ProjDimResult& pd(std::size_t x) const { return pd_[x]; }
  const quiver::Module& syzygy(std::size_t x, int j) const { return chains_[x][static_cast<std::size_t>(j)]; }

 private:
  NakayamaAlgebra a_;
  int depth_;
  quiver::AlgebraPtr alg_;
  std::vector<SerialModule> mods_;
  std::vector<quiver::Module> modules_;
  std::vector<std::vector<quiver::Module>> chains_;
  std::vector<std::vector<std::vector<std::size_t>>> hom_;
  std::vector<quiver::ProjDimResult> pd_;
};

inline std::string oracle_check_name(std::uint32_t p) { return "oracle-p" + std::to_string(p); }

inline Verdict cross_check_oracle(const NakayamaAlgebra& a, std::uint32_t p, int depth, const quiver::SearchLimits& limits = {}) {
  const auto key = instance_key(a);
  const auto name = oracle_check_name(p);
  const OracleTables t(a, p, depth, limits);
  if (t.algebra()->dimension() != static_cast<std::size_t>(a.dimension())) {
    return fail(key, name, "oracle dimension " + std::to_string(t.algebra()->dimension()) + " != sum c_i = " + std::to_string(a.dimension()));
  }
  const auto& mods = t.modules();
  for (std::size_t x = 0; x < mods.size(); ++x) {
    const auto& m = mods[x];
    if (t.module(x).total_dim() != static_cast<std::size_t>(m.length)) {
      return fail(key, name, to_string(m) + " realized with dimension " + std::to_string(t.module(x).total_dim()));
    }
    const bool rigid = nakayama::is_rigid(a, m);
    if (rigid != (t.ext(x, x, 1) == 0)) {
      return fail(key, name, to_string(m) + " is_rigid=" + std::to_string(rigid) + " but oracle Ext1=" + std::to_string(t.ext(x, x, 1)));
    }
    const auto pd = nakayama::proj_dim(a, m);
    const auto& opd = t.pd(x);
    if (!opd.certified) return fail(key, name, to_string(m) + " oracle pd not certified");
    if (pd.value != opd.value) {
      return fail(key, name, to_string(m) + " pd " + to_string(pd) + " vs oracle " + (opd.value ? std::to_string(*opd.value) : "infinite"));
    }
    for (std::size_t y = 0; y < mods.size(); ++y) {
      const auto& n = mods[y];
      const auto h = static_cast<std::size_t>(nakayama::hom_dim(a, m, n));
      if (h != t.hom(x, y)) {
        return fail(key, name, "Hom(" + to_string(m) + "," + to_string(n) + ") " + std::to_string(h) + " vs oracle " + std::to_string(t.hom(x, y)));
      }
      if (static_cast<std::size_t>(nakayama::ext1_dim(a, m, n)) != t.ext(x, y, 1)) {
        return fail(key, name, "Ext1(" + to_string(m) + "," + to_string(n) + ") " + std::to_string(nakayama::ext1_dim(a, m, n)) + " vs oracle " +
                                   std::to_string(t.ext(x, y, 1)));
      }
      for (int i = 2; i <= depth; ++i) {
        const auto e = static_cast<std::size_t>(nakayama::ext_dim(a, m, n, i));
        if (e != t.ext(x, y, i)) {
          return fail(key, name, "Ext" + std::to_string(i) + "(" + to_string(m) + "," + to_string(n) + ") " + std::to_string(e) + " vs oracle " +
                                     std::to_string(t.ext(x, y, i)));
        }
      }
    }
  }
  return pass(key, name, "dim " + std::to_string(a.dimension()) + ", " + std::to_string(mods.size()) + " modules, Ext to depth " + std::to_string(depth));
}

/// The series [n, 2n-1, ..., n+1]: finite global dimension and Loewy length exactly 2n-1.
inline Verdict check_extremal_series(int n) {
  const NakayamaAlgebra a(Shape::Cyclic, nakayama::extremal_series(n));
  const auto key = instance_key(a);
  const auto gl = nakayama::global_dimension(a);
  if (gl.infinite()) return fail(key, "extremal-series", "infinite global dimension");
  if (a.loewy_length() != 2 * n - 1) return fail(key, "extremal-series", "Loewy length " + std::to_string(a.loewy_length()));
  return pass(key, "extremal-series", "gldim " + to_string(gl) + ", L=" + std::to_string(2 * n - 1));
}

inline std::vector<Verdict> check_instance(const NakayamaAlgebra& a, const SweepConfig& cfg) {
  std::vector<Verdict> out;
  auto wanted = [&](const std::string& c) { return std::find(cfg.checks.begin(), cfg.checks.end(), c) != cfg.checks.end(); };
  auto guarded = [&](const std::string& name, auto&& fn) {
    try {
      out.push_back(fn());
    } catch (const std::exception& e) {
      out.push_back(fail(instance_key(a), name, std::string("error: ") + e.what()));
    }
  };
  if (wanted("min-inequality")) guarded("min-inequality", [&] { return check_min_inequality(a); });
  if (wanted("nonvanishing")) guarded("nonvanishing", [&] { return check_nonvanishing(a, cfg.ext_depth); });
  if (wanted("loewy-bound")) guarded("loewy-bound", [&] { return check_loewy_bound(a, cfg.ext_depth); });
  if (wanted("rigidity")) guarded("rigidity", [&] { return check_rigidity(a); });
  if (wanted("duality")) guarded("duality", [&] { return check_duality(a); });
  if (wanted("oracle")) {
    quiver::SearchLimits limits;
    limits.seed = cfg.seed;
    for (auto p : cfg.field_chars) guarded(oracle_check_name(p), [&] { return cross_check_oracle(a, p, cfg.ext_depth, limits); });
  }
  return out;
}

/// Runs every instance on a worker pool; verdicts come back in instance order.
/// "extremal-series" adds one verdict per n = 2..max(4, n_max) after the instances, unless there are none.
inline std::vector<Verdict> sweep(const SweepConfig& cfg) {
  cfg.validate();
  const auto instances = enumerate_kupisch(cfg);
  std::vector<std::vector<Verdict>> results(instances.size());
  unsigned workers = cfg.threads ? cfg.threads : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, static_cast<unsigned>(std::max<std::size_t>(1, instances.size())));
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) results[i] = check_instance(instances[i], cfg);
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  std::vector<Verdict> out;
  for (auto& r : results) out.insert(out.end(), r.begin(), r.end());
  if (!instances.empty() && std::find(cfg.checks.begin(), cfg.checks.end(), "extremal-series") != cfg.checks.end()) {
    for (int n = 2; n <= std::max(4, cfg.n_max); ++n) out.push_back(check_extremal_series(n));
  }
  return out;
}

}  // namespace extlab::lab
