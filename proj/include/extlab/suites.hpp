// Verification suites for catalog entries, run through the bound quiver oracle.
#pragma once

#include <sstream>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "catalog.hpp"
#include "hybrid.hpp"
#include "module.hpp"
#include "module_expr.hpp"
#include "theorem_lab.hpp"
#include "verdict.hpp"

namespace extlab::catalog {

using quiver::AlgebraPtr;
using quiver::IsoResult;
using quiver::Module;

class SuiteError : public std::invalid_argument {
 public:
  SuiteError(std::string kind, const std::string& msg) : std::invalid_argument(kind + ": " + msg), kind_(std::move(kind)) {}
  const std::string& kind() const { return kind_; }

 private:
  std::string kind_;
};

struct SuiteOptions {
  int depth = 12;
  quiver::SearchLimits limits;
};

/// Collects verdicts for one instance; exceptions inside a check become Fail verdicts.
class Report {
 public:
  explicit Report(std::string instance) : instance_(std::move(instance)) {}

  void check(const std::string& name, bool ok, const std::string& detail) {
    verdicts_.push_back(ok ? pass(instance_, name, detail) : fail(instance_, name, detail));
  }
  void skip(const std::string& name, const std::string& reason) { verdicts_.push_back(skipped(instance_, name, reason)); }

  template <class F>
  void guarded(const std::string& name, F&& fn) {
    try {
      fn();
    } catch (const std::exception& e) {
      verdicts_.push_back(fail(instance_, name, std::string("error: ") + e.what()));
    }
  }

  const std::string& instance() const { return instance_; }
  std::vector<Verdict>& verdicts() { return verdicts_; }

 private:
  std::string instance_;
  std::vector<Verdict> verdicts_;
};

inline std::string dims(const Module& m) { return dims_string(m.dims()); }

inline Vector scaled(const PrimeField& f, Vector v, Scalar s) {
  for (auto& x : v) x = f.mul(x, s);
  return v;
}

inline std::vector<std::size_t> unit_vector(int nv, int v) {
  std::vector<std::size_t> e(static_cast<std::size_t>(nv), 0);
  e[static_cast<std::size_t>(v)] = 1;
  return e;
}

inline std::vector<std::size_t> difference(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> d(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] >= b[i] ? a[i] - b[i] : static_cast<std::size_t>(-1);
  return d;
}

inline std::vector<std::size_t> add(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  std::vector<std::size_t> s(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
  return s;
}

inline std::string period_string(const quiver::PeriodResult& r) {
  switch (r.kind) {
    case quiver::PeriodResult::Kind::Period: return std::to_string(r.period);
    case quiver::PeriodResult::Kind::NoneFound: return "none";
    case quiver::PeriodResult::Kind::Uncertified: return "not certified";
  }
  return "?";
}

/// rad(P) / soc(P) for a non-simple indecomposable projective.
inline Module radical_mod_socle(const Module& p) {
  const auto rad = quiver::radical_subspace(p);
  const auto soc = quiver::socle_subspace(p);
  return quiver::quotient(quiver::submodule(p, rad), quiver::relative_subspace(p, rad, soc));
}

/// Element of the algebra given by a path of arrow labels.
inline Vector path_element(const quiver::AlgebraTable& alg, int start, const std::vector<std::string>& labels) {
  quiver::Path p{start, {}};
  for (const auto& l : labels) p.arrows.push_back(alg.quiver().arrow_index(l));
  return alg.element(alg.normal_form(p));
}

// ---------------------------------------------------------------------------
// Loops

enum class LoopPattern { AllNonzero, Except3Mod4, Ext3Vanishes };

inline std::string to_string(LoopPattern p) {
  switch (p) {
    case LoopPattern::AllNonzero: return "nonzero for all n";
    case LoopPattern::Except3Mod4: return "nonzero for n not 3 mod 4";
    case LoopPattern::Ext3Vanishes: return "Ext1 nonzero, Ext3 zero";
  }
  return "?";
}

/// dim Hom(Ω^n S_v, S_v) for n = 1..depth.
inline std::vector<std::size_t> loop_nonvanishing(const AlgebraPtr& alg, int v, int depth) {
  if (alg->gabriel_quiver()[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] == 0) {
    throw SuiteError("NoLoopAtVertex", "vertex " + alg->quiver().vertex_name(v) + " has no loop in the Gabriel quiver");
  }
  const auto chain = quiver::syzygy_chain(quiver::simple_module(alg, v), depth);
  std::vector<std::size_t> out;
  for (int n = 1; n <= depth; ++n) out.push_back(quiver::top_dims(chain[static_cast<std::size_t>(n)])[static_cast<std::size_t>(v)]);
  return out;
}

inline std::string pattern_string(const std::vector<std::size_t>& dims) {
  std::ostringstream os;
  for (std::size_t i = 0; i < dims.size(); ++i) os << (i ? " " : "") << dims[i];
  return os.str();
}

inline bool matches(LoopPattern p, const std::vector<std::size_t>& dims) {
  for (std::size_t i = 0; i < dims.size(); ++i) {
    const std::size_t n = i + 1;
    switch (p) {
      case LoopPattern::AllNonzero:
        if (dims[i] == 0) return false;
        break;
      case LoopPattern::Except3Mod4:
        if (dims[i] == 0 && n % 4 != 3) return false;
        break;
      case LoopPattern::Ext3Vanishes:
        if (n == 1 && dims[i] == 0) return false;
        if (n == 3 && dims[i] != 0) return false;
        break;
    }
  }
  return true;
}

inline void verify_loop_nonvanishing(Report& r, const AlgebraPtr& alg, int v, int depth, LoopPattern expected) {
  const std::string name = "loop-nonvanishing:S" + alg->quiver().vertex_name(v);
  r.guarded(name, [&] {
    const auto d = loop_nonvanishing(alg, v, depth);
    const bool all = std::all_of(d.begin(), d.end(), [](std::size_t x) { return x != 0; });
    std::string detail = "dim Hom(Omega^n S,S), n=1.." + std::to_string(depth) + ": " + pattern_string(d);
    detail += all ? " (all nonzero)" : " (not all n)";
    r.check(name, matches(expected, d), detail + "; expected " + to_string(expected));
  });
}

// ---------------------------------------------------------------------------
// Shared pieces

inline void common_checks(Report& r, const AlgebraPtr& alg) {
  std::ostringstream c;
  const auto cart = alg->cartan();
  c << "(";
  for (std::size_t i = 0; i < cart.size(); ++i) c << (i ? "," : "") << dims_string(cart[i]);
  c << ")";
  r.check("build", true, "dim " + std::to_string(alg->dimension()) + ", Loewy length " + std::to_string(alg->loewy_length()) + ", Cartan " + c.str());
  r.check("weakly-symmetric", quiver::weakly_symmetric(alg), "soc P_v = S_v for every vertex");
}

inline void check_iso(Report& r, const std::string& name, const Module& a, const Module& b, const quiver::SearchLimits& limits) {
  const auto res = quiver::iso_test(a, b, limits);
  r.check(name, res == IsoResult::Isomorphic, to_string(res) + ", dims " + dims(a) + " vs " + dims(b));
}

inline void check_period(Report& r, const std::string& name, const Module& m, int expected, int bound, const quiver::SearchLimits& limits) {
  const auto res = quiver::omega_period(m, bound, limits);
  r.check(name, res.kind == quiver::PeriodResult::Kind::Period && res.period == expected,
          "period " + period_string(res) + " (expected " + std::to_string(expected) + "), dims " + dims(m));
}

/// W -> M -> S with dims and top-goodness, W and M embedded in the same projective sum.
inline void check_top_good_sequence(Report& r, const std::string& name, const quiver::EmbeddedModule& big, const quiver::EmbeddedModule& small, int quotient_vertex) {
  const Module& amb = big.ambient->module();
  if (!quiver::contains(amb, big.sub, small.sub)) {
    r.check(name, false, "submodule is not contained in the middle term");
    return;
  }
  const Module mid = big.module();
  const auto q = difference(mid.dims(), quiver::subspace_dims(small.sub));
  const auto e = unit_vector(mid.num_vertices(), quotient_vertex);
  const bool good = quiver::is_top_good(mid, quiver::relative_subspace(amb, big.sub, small.sub));
  r.check(name, q == e && good,
          "quotient dims " + dims_string(q) + " (simple at " + mid.algebra()->quiver().vertex_name(quotient_vertex) + " expected), top good: " +
              (good ? "yes" : "no"));
}

/// top(Ω^r M) = top(Ω^r W) + top(Ω^r S) for r = 0..depth.
inline void check_syzygy_top_bookkeeping(Report& r, const std::string& name, const Module& mid, const Module& sub, const Module& quot, int depth) {
  const auto cm = quiver::syzygy_chain(mid, depth);
  const auto cs = quiver::syzygy_chain(sub, depth);
  const auto cq = quiver::syzygy_chain(quot, depth);
  for (int k = 0; k <= depth; ++k) {
    const auto t = quiver::top_dims(cm[static_cast<std::size_t>(k)]);
    const auto s = add(quiver::top_dims(cs[static_cast<std::size_t>(k)]), quiver::top_dims(cq[static_cast<std::size_t>(k)]));
    if (t != s) {
      r.check(name, false, "r=" + std::to_string(k) + ": top " + dims_string(t) + " vs " + dims_string(s));
      return;
    }
  }
  r.check(name, true, "tops add up for r=0.." + std::to_string(depth));
}

// ---------------------------------------------------------------------------
// Families

inline void verify_counterexample(Report& r, const Entry& e, const AlgebraPtr& alg, const SuiteOptions& o) {
  const int v = alg->quiver().vertex_index("1");
  const Module s = quiver::simple_module(alg, v);
  r.guarded("ext1-nonzero", [&] {
    const auto x = quiver::ext_dim(s, s, 1);
    r.check("ext1-nonzero", x >= 1, "dim Ext^1(S1,S1) = " + std::to_string(x));
  });
  r.guarded("ext3-zero", [&] {
    const auto x = quiver::ext_dim(s, s, 3);
    r.check("ext3-zero", x == 0, "dim Ext^3(S1,S1) = " + std::to_string(x));
  });
  verify_loop_nonvanishing(r, alg, v, o.depth, LoopPattern::Ext3Vanishes);
  (void)e;
}

inline void verify_sd3c(Report& r, const Entry& e, const AlgebraPtr& alg, const SuiteOptions& o) {
  const quiver::ModuleResolver res(alg);
  const auto& pres = alg->presentation();
  const Module rho = res.resolve("rhoL");
  const Module p1 = quiver::projective_module(alg, res.vertex("1"));
  const Module p2 = quiver::projective_module(alg, res.vertex("2"));
  r.guarded("period:rhoL", [&] { check_period(r, "period:rhoL", rho, 3, 6, o.limits); });
  r.guarded("period:W", [&] { check_period(r, "period:W", res.resolve("W"), 3, 6, o.limits); });
  r.guarded("K2=Omega2(S0)", [&] { check_iso(r, "K2=Omega2(S0)", res.resolve("K2"), quiver::syzygy(quiver::simple_module(alg, 0), 2), o.limits); });
  r.guarded("W-in-Omega2(S0)", [&] {
    const auto k2 = res.embed(*pres.find_module("K2"));
    const auto w = res.embed(*pres.find_module("W"));
    check_top_good_sequence(r, "W-in-Omega2(S0)", k2, w, 0);
  });
  r.guarded("top-good-syzygies", [&] {
    check_syzygy_top_bookkeeping(r, "top-good-syzygies", res.resolve("K2"), res.resolve("W"), quiver::simple_module(alg, 0), 6);
  });
  const Module u = quiver::syzygy(rho);
  if (pres.find_module("U")) {
    r.guarded("U=Omega(rhoL)", [&] { check_iso(r, "U=Omega(rhoL)", res.resolve("U"), u, o.limits); });
    r.guarded("radP1/S1=radP2/S2", [&] { check_iso(r, "radP1/S1=radP2/S2", radical_mod_socle(p1), radical_mod_socle(p2), o.limits); });
    r.guarded("U-structure", [&] {
      const Module ou = quiver::syzygy(u);
      const auto h = radical_mod_socle(p1);
      const bool top_ok = quiver::top_dims(u) == std::vector<std::size_t>{0, 1, 1};
      const bool rad_ok = quiver::iso_test(quiver::radical(u), h, o.limits) == IsoResult::Isomorphic;
      const bool soc_ok = quiver::socle_dims(ou) == std::vector<std::size_t>{0, 1, 1};
      const bool q_ok = quiver::iso_test(quiver::quotient(ou, quiver::socle_subspace(ou)), h, o.limits) == IsoResult::Isomorphic;
      r.check("U-structure", top_ok && rad_ok && soc_ok && q_ok,
              "top U " + dims_string(quiver::top_dims(u)) + ", rad U = radP1/S1: " + (rad_ok ? "yes" : "no") + ", soc Omega(U) " +
                  dims_string(quiver::socle_dims(ou)) + ", Omega(U)/soc = radP1/S1: " + (q_ok ? "yes" : "no"));
    });
  } else {
    r.guarded("U-structure", [&] {
      const Module ou = quiver::syzygy(u);
      const bool ok = quiver::loewy_length(u) == 2 && quiver::top_dims(u) == std::vector<std::size_t>{0, 1, 1} &&
                      quiver::socle_dims(u) == std::vector<std::size_t>{1, 0, 0} && quiver::loewy_length(ou) == 2 &&
                      quiver::top_dims(ou) == std::vector<std::size_t>{1, 0, 0} && quiver::socle_dims(ou) == std::vector<std::size_t>{0, 1, 1};
      r.check("U-structure", ok,
              "U: Loewy length " + std::to_string(quiver::loewy_length(u)) + ", top " + dims_string(quiver::top_dims(u)) + ", socle " +
                  dims_string(quiver::socle_dims(u)) + "; Omega(U): top " + dims_string(quiver::top_dims(ou)) + ", socle " +
                  dims_string(quiver::socle_dims(ou)));
    });
  }
  r.guarded("Omega2(U)=rhoL", [&] { check_iso(r, "Omega2(U)=rhoL", quiver::syzygy(u, 2), rho, o.limits); });
  r.guarded("W-extension", [&] {
    const Module w = res.resolve("W");
    auto h = quiver::find_injective_hom(u, w, o.limits);
    if (!h) {
      r.check("W-extension", false, "no injective map U -> W found");
      return;
    }
    const Module cok = quiver::quotient(w, quiver::image_subspace(w, *h));
    const auto iso = quiver::iso_test(cok, quiver::syzygy(u), o.limits);
    r.check("W-extension", iso == IsoResult::Isomorphic, "W/U vs Omega(U): " + to_string(iso));
  });
  verify_loop_nonvanishing(r, alg, 0, o.depth, LoopPattern::AllNonzero);
  (void)e;
}

inline void verify_sd2b(Report& r, const Entry& e, const AlgebraPtr& alg, const SuiteOptions& o) {
  const quiver::ModuleResolver res(alg);
  const auto& pres = alg->presentation();
  const auto s = static_cast<std::size_t>(e.s);
  const auto cart = alg->cartan();
  r.check("cartan", cart == std::vector<std::vector<int>>{{e.s + 2, e.s}, {e.s, e.s + 2}},
          "(" + dims_string(cart[0]) + "," + dims_string(cart[1]) + ")");
  const Module w = res.resolve("W");
  r.check("dim-W", w.dims() == std::vector<std::size_t>{s + 1, s + 1}, dims(w));
  r.guarded("K2=Omega2(S0)", [&] { check_iso(r, "K2=Omega2(S0)", res.resolve("K2"), quiver::syzygy(quiver::simple_module(alg, 0), 2), o.limits); });
  r.guarded("W-in-Omega2(S0)", [&] {
    check_top_good_sequence(r, "W-in-Omega2(S0)", res.embed(*pres.find_module("K2")), res.embed(*pres.find_module("W")), 1);
  });
  r.guarded("Omega2(W)=W", [&] {
    const auto iso = quiver::iso_test(quiver::syzygy(w, 2), w, o.limits);
    const auto per = quiver::omega_period(w, 4, o.limits);
    r.check("Omega2(W)=W", iso == IsoResult::Isomorphic, to_string(iso) + ", Omega-period " + period_string(per));
  });
  r.guarded("hom-Omega-W", [&] {
    const auto chain = quiver::syzygy_chain(w, 8);
    for (int k = 0; k <= 8; ++k) {
      const auto t = quiver::top_dims(chain[static_cast<std::size_t>(k)]);
      if (t[0] == 0 || t[1] == 0) {
        r.check("hom-Omega-W", false, "top of Omega^" + std::to_string(k) + "(W) = " + dims_string(t));
        return;
      }
    }
    r.check("hom-Omega-W", true, "Hom(Omega^r W, S_i) != 0 for r=0..8, i=0,1");
  });
  r.guarded("phiJ=psiJ", [&] {
    const auto emb = res.embed(*pres.find_module("W"));
    const auto& amb = emb.ambient->module();
    const auto phi = emb.ambient->element(res.tuple({"alpha", "-gamma"}));
    const auto psi = emb.ambient->element(res.tuple({"beta", "-eta"}));
    auto radical_of = [&](const quiver::Element& x) {
      std::vector<quiver::Element> gens;
      for (int a = 0; a < alg->num_arrows(); ++a) gens.push_back(amb.act(x, a));
      return quiver::generate_submodule(amb, gens);
    };
    const auto phiL = quiver::generate_submodule(amb, {phi});
    const auto psiL = quiver::generate_submodule(amb, {psi});
    const auto phiJ = radical_of(phi);
    const auto psiJ = radical_of(psi);
    const auto meet = quiver::intersect_subspaces(amb, phiL, psiL);
    auto same = [&](const quiver::GradedSubspace& a, const quiver::GradedSubspace& b) {
      return quiver::contains(amb, a, b) && quiver::contains(amb, b, a);
    };
    const Module h = quiver::submodule(amb, phiJ);
    const bool h_ok = quiver::iso_test(h, radical_mod_socle(quiver::projective_module(alg, 0)), o.limits) == IsoResult::Isomorphic;
    r.check("phiJ=psiJ", same(phiJ, psiJ) && same(phiJ, meet) && h_ok,
            "dims phiJ " + dims_string(quiver::subspace_dims(phiJ)) + ", psiJ " + dims_string(quiver::subspace_dims(psiJ)) + ", intersection " +
                dims_string(quiver::subspace_dims(meet)) + ", WJ = H: " + (h_ok ? "yes" : "no"));
  });
  r.guarded("H", [&] {
    const Module h0 = radical_mod_socle(quiver::projective_module(alg, 0));
    const Module h1 = radical_mod_socle(quiver::projective_module(alg, 1));
    const auto iso = quiver::iso_test(h0, h1, o.limits);
    r.check("H", iso == IsoResult::Isomorphic && h0.dims() == std::vector<std::size_t>{s, s},
            "radP0/S0 " + dims(h0) + ", radP1/S1 " + dims(h1) + ": " + to_string(iso));
  });
  verify_loop_nonvanishing(r, alg, 0, o.depth, LoopPattern::AllNonzero);
  verify_loop_nonvanishing(r, alg, 1, o.depth, LoopPattern::AllNonzero);
}

/// Syzygies at a hybrid vertex: X = αΛ/(αΛ ∩ βΛ), Ω(X) = α_1Λ, Ω(α_1Λ) = α_2βΛ, and
/// U = Ω(α_2βΛ) an extension of S_{i0} by β_1Λ.
inline void verify_hybrid_vertex_structure(Report& r, const AlgebraPtr& alg, const HybridVertexSpec& hv, const hybrid::BiserialQuiver* bq,
                                       const SuiteOptions& o) {
  const quiver::ModuleResolver res(alg);
  const int i0 = res.vertex(hv.vertex);
  if (bq && bq->vertex_class(i0) != hybrid::VertexClass::Hybrid) {
    throw SuiteError("VertexNotHybrid", "vertex " + hv.vertex + " is " + hybrid::to_string(bq->vertex_class(i0)));
  }
  const std::string tag = "hybrid-vertex:" + hv.vertex;
  const quiver::ProjectiveSum p(alg, {i0});
  const auto& pm = p.module();
  const auto aL = quiver::generate_submodule(pm, {p.element({res.element(hv.alpha)})});
  const auto bL = quiver::generate_submodule(pm, {p.element({res.element(hv.beta)})});
  const auto meet = quiver::intersect_subspaces(pm, aL, bL);
  const Module x = quiver::quotient(quiver::submodule(pm, aL), quiver::relative_subspace(pm, aL, meet));
  std::size_t meet_dim = 0;
  for (auto d : quiver::subspace_dims(meet)) meet_dim += d;
  r.check(tag + ":intersection", meet_dim == 2, "dim(alpha L cap beta L) = " + std::to_string(meet_dim));
  const Module a1 = res.resolve("elem:" + hv.alpha1);
  const Module a2b = res.resolve("elem:" + hv.alpha2_beta);
  const Module b1 = res.resolve("elem:" + hv.beta1);
  r.guarded(tag + ":a", [&] { check_iso(r, tag + ":a", quiver::syzygy(x), a1, o.limits); });
  r.guarded(tag + ":b", [&] { check_iso(r, tag + ":b", quiver::syzygy(a1), a2b, o.limits); });
  r.guarded(tag + ":c", [&] {
    const Module u = quiver::syzygy(a2b);
    const auto h = quiver::find_injective_hom(b1, u, o.limits);
    const auto q = difference(u.dims(), b1.dims());
    r.check(tag + ":c", h && q == unit_vector(u.num_vertices(), i0) && u.total_dim() == hv.expected_dim_u,
            "dim U = " + std::to_string(u.total_dim()) + " (expected " + std::to_string(hv.expected_dim_u) + "), U/beta1 L dims " + dims_string(q) +
                (h ? "" : ", no embedding of beta1 L"));
  });
}

inline void verify_sd2a(Report& r, const Entry& e, const AlgebraPtr& alg, const SuiteOptions& o) {
  const quiver::ModuleResolver res(alg);
  const Module x = res.resolve("X");
  r.guarded("X-uniserial", [&] {
    const auto layers = quiver::radical_layers(x);
    std::vector<int> factors;
    bool uniserial = true;
    for (const auto& l : layers) {
      std::size_t tot = 0;
      for (std::size_t v = 0; v < l.size(); ++v) {
        tot += l[v];
        if (l[v]) factors.push_back(static_cast<int>(v));
      }
      uniserial = uniserial && tot == 1;
    }
    r.check("X-uniserial", uniserial && factors == std::vector<int>{0, 1, 0, 0, 1}, "composition factors top to socle " + dims_string(factors));
  });
  r.guarded("Omega(X)=alphaL", [&] { check_iso(r, "Omega(X)=alphaL", quiver::syzygy(x), res.resolve("elem:alpha"), o.limits); });
  r.guarded("Omega2(X)=alphabetaL", [&] { check_iso(r, "Omega2(X)=alphabetaL", quiver::syzygy(x, 2), res.resolve("elem:alpha beta"), o.limits); });
  r.guarded("Omega3(X)", [&] {
    const Module x3 = quiver::syzygy(x, 3);
    r.check("Omega3(X)", x3.total_dim() == 2 && quiver::top_dims(x3) == std::vector<std::size_t>{1, 0} && quiver::socle_dims(x3) == std::vector<std::size_t>{0, 1},
            "dims " + dims(x3) + ", top " + dims_string(quiver::top_dims(x3)) + ", socle " + dims_string(quiver::socle_dims(x3)));
  });
  r.guarded("Omega3(S0)=rad(alphabetaL)", [&] {
    check_iso(r, "Omega3(S0)=rad(alphabetaL)", quiver::syzygy(quiver::simple_module(alg, 0), 3), res.resolve("rad:elem:alpha beta"), o.limits);
  });
  const Module w = res.resolve("W");
  r.guarded("W-indecomposable", [&] {
    const auto d = quiver::indecomposability(w, o.limits);
    r.check("W-indecomposable", d == quiver::Decomposability::Indecomposable, to_string(d) + ", dims " + dims(w));
  });
  r.guarded("period:W", [&] { check_period(r, "period:W", w, 3, 6, o.limits); });
  r.guarded("W-extension", [&] {
    const Module b = res.resolve("arrow:beta");
    const auto h = quiver::find_injective_hom(b, w, o.limits);
    const auto q = difference(w.dims(), b.dims());
    r.check("W-extension", h && q == unit_vector(2, 1), "W/beta L dims " + dims_string(q) + (h ? "" : ", no embedding of beta L"));
  });
  if (e.hybrid_vertex) verify_hybrid_vertex_structure(r, alg, *e.hybrid_vertex, nullptr, o);
  verify_loop_nonvanishing(r, alg, 0, o.depth, LoopPattern::AllNonzero);
}

/// The three dimension identities for a hybrid algebra, plus weak symmetry.
inline void structural_checks(Report& r, const AlgebraPtr& alg, const hybrid::BiserialQuiver& b) {
  const auto& pres = alg->presentation();
  auto arrow_dim = [&](const std::vector<std::string>& labels, int start) {
    return quiver::element_module(alg, start, path_element(*alg, start, labels)).total_dim();
  };
  std::ostringstream bad;
  for (int v = 0; v < alg->num_vertices(); ++v) {
    const auto [a, abar] = b.arrows_from(v);
    const std::size_t pv = quiver::projective_module(alg, v).total_dim();
    if (pv != static_cast<std::size_t>(b.mn(a) + b.mn(abar))) bad << " dim P" << pres.quiver.vertex_name(v) << "=" << pv << ";";
  }
  r.check("identity:dim-projective", bad.str().empty(), bad.str().empty() ? "dim e_i L = m_a n_a + m_abar n_abar at every vertex" : bad.str());
  bad.str("");
  for (int a = 0; a < b.num_arrows(); ++a) {
    const int s = pres.quiver.arrow(a).source;
    const std::size_t d = arrow_dim({b.label(a)}, s);
    const std::size_t want = static_cast<std::size_t>(b.mn(a) + (b.in_t(a) ? 1 : 0));
    if (d != want) bad << " dim " << b.label(a) << "L=" << d << " want " << want << ";";
  }
  r.check("identity:dim-arrow-module", bad.str().empty(), bad.str().empty() ? "dim aL = m_a n_a (+1 for a in T) for every arrow" : bad.str());
  bad.str("");
  for (int a = 0; a < b.num_arrows(); ++a) {
    const int s = pres.quiver.arrow(a).source;
    const std::size_t d = arrow_dim({b.label(a), b.label(b.g(a))}, s);
    if (d != static_cast<std::size_t>(b.mn(a) - 1)) bad << " dim " << b.label(a) << " " << b.label(b.g(a)) << "L=" << d << ";";
  }
  r.check("identity:dim-a-ga", bad.str().empty(), bad.str().empty() ? "dim a g(a) L = m_a n_a - 1 for every arrow" : bad.str());
  r.check("weakly-symmetric", quiver::weakly_symmetric(alg), "soc P_v = S_v for every vertex");
}

/// S_v has Ω-period 4 with first and second resolution terms P_v^+ and P_v^-.
inline void verify_quaternion_period4(Report& r, const AlgebraPtr& alg, const hybrid::BiserialQuiver& b, int v, const SuiteOptions& o) {
  if (b.vertex_class(v) != hybrid::VertexClass::Quaternion) {
    throw SuiteError("VertexNotQuaternion", "vertex " + alg->quiver().vertex_name(v) + " is " + hybrid::to_string(b.vertex_class(v)));
  }
  const auto& q = alg->quiver();
  const std::string tag = "quaternion:S" + q.vertex_name(v);
  const Module s = quiver::simple_module(alg, v);
  check_period(r, tag + ":period", s, 4, 8, o.limits);
  const auto chain = quiver::syzygy_chain(s, 3);
  std::vector<std::size_t> out(static_cast<std::size_t>(q.num_vertices()), 0), in = out;
  for (const auto& a : q.arrows()) {
    if (a.source == v) ++out[static_cast<std::size_t>(a.target)];
    if (a.target == v) ++in[static_cast<std::size_t>(a.source)];
  }
  const auto t1 = quiver::top_dims(chain[1]);
  const auto t2 = quiver::top_dims(chain[2]);
  const auto t3 = quiver::top_dims(chain[3]);
  r.check(tag + ":resolution", t1 == out && t2 == in && t3 == unit_vector(q.num_vertices(), v),
          "tops of Omega^1..3: " + dims_string(t1) + " " + dims_string(t2) + " " + dims_string(t3) + "; arrows out " + dims_string(out) + ", in " +
              dims_string(in));
}

/// Ext^{1..4}(M,M) for 4-periodic modules over a symmetric algebra: Ext^1 != 0 forces the others.
inline void verify_four_periodic_modules(Report& r, const AlgebraPtr& alg, const SuiteOptions& o) {
  std::vector<std::pair<std::string, Module>> cands;
  const int nv = alg->num_vertices();
  for (int v = 0; v < nv; ++v) {
    cands.emplace_back("S" + alg->quiver().vertex_name(v), quiver::simple_module(alg, v));
    const auto basis = alg->basis_from(v);
    for (std::size_t i = 0; i < basis.size(); ++i) {
      for (std::size_t j = i + 1; j < basis.size(); ++j) {
        if (alg->basis_path(basis[i]).length() == 0 || alg->basis_path(basis[j]).length() == 0) continue;
        Vector x(alg->dimension(), 0);
        x[basis[i]] = 1;
        x[basis[j]] = 1;
        const quiver::ProjectiveSum p(alg, {v});
        const auto sub = quiver::generate_submodule(p.module(), {p.element({x})});
        const std::string nm = "x=b" + std::to_string(basis[i]) + "+b" + std::to_string(basis[j]);
        cands.emplace_back(nm + " xL", quiver::submodule(p.module(), sub));
        cands.emplace_back(nm + " P/xL", quiver::quotient(p.module(), sub));
      }
    }
    for (int w = 0; w < nv; ++w) {
      for (int k = 0; k < 4; ++k) {
        cands.emplace_back("S" + std::to_string(v) + "+Omega^" + std::to_string(k) + "S" + std::to_string(w),
                           quiver::direct_sum(quiver::simple_module(alg, v), quiver::syzygy(quiver::simple_module(alg, w), k)));
      }
    }
  }
  std::size_t periodic = 0, nonrigid = 0;
  for (const auto& [name, m] : cands) {
    if (m.is_zero() || quiver::is_projective(m)) continue;
    const auto chain = quiver::syzygy_chain(m, 4);
    if (quiver::iso_test(chain[4], m, o.limits) != IsoResult::Isomorphic) continue;
    ++periodic;
    const auto e1 = quiver::ext_dim_from_chain(chain, m, 1);
    if (e1 == 0) continue;
    ++nonrigid;
    for (int i = 2; i <= 4; ++i) {
      if (quiver::ext_dim_from_chain(chain, m, i) == 0) {
        r.check("four-periodic-ext", false, name + " dims " + dims(m) + ": Ext^1 = " + std::to_string(e1) + " but Ext^" + std::to_string(i) + " = 0");
        return;
      }
    }
  }
  if (nonrigid == 0) {
    r.skip("four-periodic-ext", std::to_string(periodic) + " four-periodic candidates, none non-rigid");
    return;
  }
  r.check("four-periodic-ext", true,
          std::to_string(nonrigid) + " non-rigid four-periodic modules (of " + std::to_string(periodic) + " periodic candidates) have Ext^1..4 != 0");
}

/// Ω²(S_i) = W + ψΛ with W = α_1Λ ⊕ ᾱ_1Λ, top good, and the tops along the syzygies of the sequence.
inline void verify_biserial_vertex(Report& r, const AlgebraPtr& alg, const hybrid::BiserialQuiver& b, int v, const SuiteOptions& o) {
  const auto& q = alg->quiver();
  const auto& f = alg->field();
  const std::string tag = "biserial:S" + q.vertex_name(v);
  const auto [a, abar] = b.arrows_from(v);
  const int ta = q.arrow(a).target, tb = q.arrow(abar).target;
  auto ambient = std::make_shared<quiver::ProjectiveSum>(alg, std::vector<int>{ta, tb});
  const auto& amb = ambient->module();
  const quiver::ModuleResolver res(alg);
  const auto d1 = res.multiplication_map(*ambient, v, {path_element(*alg, v, {b.label(a)}), path_element(*alg, v, {b.label(abar)})});
  const auto k = quiver::kernel_subspace(amb, d1);
  const Vector zero_a(alg->dimension(), 0);
  const Vector a1 = path_element(*alg, ta, {b.label(b.f(a))});
  const Vector abar1 = path_element(*alg, tb, {b.label(b.f(abar))});
  Vector psi_a = scaled(f, path_element(*alg, ta, b.a_monomial(b.g(a))), f.from_int(b.c(a)));
  Vector psi_b = scaled(f, path_element(*alg, tb, b.a_monomial(b.g(abar))), f.neg(f.from_int(b.c(abar))));
  const auto g1 = ambient->element({a1, zero_a});
  const auto g2 = ambient->element({zero_a, abar1});
  const auto psi = ambient->element({psi_a, psi_b});
  const auto w = quiver::generate_submodule(amb, {g1, g2});
  const auto psiL = quiver::generate_submodule(amb, {psi});
  const auto in_k = [&](const quiver::GradedSubspace& s) { return quiver::contains(amb, k, s); };
  const bool contained = in_k(w) && in_k(psiL);
  const bool psi_outside = !quiver::contains(amb, w, psiL);
  const bool spans = quiver::contains(amb, quiver::sum_subspaces(amb, w, psiL), k);
  const std::size_t wa = quiver::element_module(alg, ta, a1).total_dim() + quiver::element_module(alg, tb, abar1).total_dim();
  std::size_t wdim = 0;
  for (auto d : quiver::subspace_dims(w)) wdim += d;
  const auto kw = difference(quiver::subspace_dims(k), quiver::subspace_dims(w));
  const bool top_good = quiver::is_top_good(quiver::submodule(amb, k), quiver::relative_subspace(amb, k, w));
  r.check(tag + ":sequence", contained && psi_outside && spans && wdim == wa && kw == unit_vector(q.num_vertices(), v) && top_good,
          std::string("W, psi in Omega^2: ") + (contained ? "yes" : "no") + ", psi outside W: " + (psi_outside ? "yes" : "no") + ", W + psi L = Omega^2: " +
              (spans ? "yes" : "no") + ", dim W " + std::to_string(wdim) + " = " + std::to_string(wa) + ", quotient " + dims_string(kw) + ", top good: " +
              (top_good ? "yes" : "no"));
  r.guarded(tag + ":Omega(W)", [&] {
    const Module wm = quiver::submodule(amb, w);
    const Module a2 = quiver::element_module(alg, q.arrow(b.f(a)).target, path_element(*alg, q.arrow(b.f(a)).target, {b.label(b.f(b.f(a)))}));
    const Module abar2 =
        quiver::element_module(alg, q.arrow(b.f(abar)).target, path_element(*alg, q.arrow(b.f(abar)).target, {b.label(b.f(b.f(abar)))}));
    check_iso(r, tag + ":Omega(W)", quiver::syzygy(wm), quiver::direct_sum(a2, abar2), o.limits);
  });
  r.guarded(tag + ":syzygy-tops", [&] {
    check_syzygy_top_bookkeeping(r, tag + ":syzygy-tops", quiver::submodule(amb, k), quiver::submodule(amb, w), quiver::simple_module(alg, v), o.depth);
  });
}

inline LoopPattern expected_loop_pattern(const hybrid::BiserialQuiver& b, int v) {
  if (b.vertex_class(v) != hybrid::VertexClass::Hybrid) return LoopPattern::AllNonzero;
  const auto [x, y] = b.arrows_from(v);
  const int alpha = b.in_t(x) ? x : y;
  const int beta = b.bar(alpha);
  const auto& q = b.quiver();
  if (q.arrow(beta).source == q.arrow(beta).target) return LoopPattern::AllNonzero;
  return b.f_orbit_length(beta) == 3 ? LoopPattern::AllNonzero : LoopPattern::Except3Mod4;
}

inline void verify_hybrid_family(Report& r, const Entry& e, const AlgebraPtr& alg, const SuiteOptions& o) {
  const auto b = hybrid::BiserialQuiver::validate(*e.biserial);
  structural_checks(r, alg, b);
  bool quaternion = false;
  for (int v = 0; v < alg->num_vertices(); ++v) {
    const auto cls = b.vertex_class(v);
    if (cls == hybrid::VertexClass::Quaternion) {
      quaternion = true;
      r.guarded("quaternion:S" + alg->quiver().vertex_name(v), [&] { verify_quaternion_period4(r, alg, b, v, o); });
    } else if (cls == hybrid::VertexClass::Biserial) {
      r.guarded("biserial:S" + alg->quiver().vertex_name(v), [&] { verify_biserial_vertex(r, alg, b, v, o); });
    }
    if (alg->gabriel_quiver()[static_cast<std::size_t>(v)][static_cast<std::size_t>(v)] > 0) {
      verify_loop_nonvanishing(r, alg, v, o.depth, expected_loop_pattern(b, v));
    }
  }
  if (e.hybrid_vertex) r.guarded("hybrid-vertex", [&] { verify_hybrid_vertex_structure(r, alg, *e.hybrid_vertex, &b, o); });
  if (quaternion) r.guarded("four-periodic-ext", [&] { verify_four_periodic_modules(r, alg, o); });
}

inline void verify_local(Report& r, const Entry& e, const AlgebraPtr& alg, const SuiteOptions& o) {
  if (e.kupisch) {
    const auto& a = *e.kupisch;
    const lab::OracleTables t(a, alg->presentation().characteristic, o.depth, o.limits);
    std::size_t checked = 0;
    for (std::size_t x = 0; x < t.modules().size(); ++x) {
      const auto& m = t.modules()[x];
      if (nakayama::is_projective(a, m)) continue;
      ++checked;
      const auto cert = lab::nonvanishing_certificate(a, m);
      bool ok = !nakayama::is_rigid(a, m) && cert.certified;
      for (int i = 1; ok && i <= o.depth; ++i) ok = t.ext(x, x, i) != 0 && t.ext(x, x, i) == static_cast<std::size_t>(nakayama::ext_dim(a, m, m, i));
      if (!ok) {
        r.check("local-nonvanishing", false, to_string(m) + " is rigid or has a vanishing self-extension");
        return;
      }
    }
    r.check("local-nonvanishing", true,
            std::to_string(checked) + " non-projective modules non-rigid; oracle Ext^i != 0 for i<=" + std::to_string(o.depth) + ", all i certified by orbit cycles");
    return;
  }
  const Module s = quiver::simple_module(alg, 0);
  const auto loops = alg->gabriel_quiver()[0][0];
  const auto e1 = quiver::ext_dim(s, s, 1);
  r.check("ext1-loops", static_cast<int>(e1) == loops && e1 == 2, "dim Ext^1(S,S) = " + std::to_string(e1) + ", loops " + std::to_string(loops));
  const int depth = std::max(o.depth, 10);
  const auto chain = quiver::syzygy_chain(s, depth);
  std::vector<std::size_t> d;
  for (int i = 1; i <= depth; ++i) d.push_back(quiver::ext_dim_from_chain(chain, s, i));
  r.check("local-nonvanishing", std::all_of(d.begin(), d.end(), [](std::size_t x) { return x != 0; }),
          "dim Ext^i(S,S), i=1.." + std::to_string(depth) + ": " + pattern_string(d));
}

inline std::vector<Verdict> verify_entry(const Entry& e, const SuiteOptions& o = {}) {
  Report r(e.name);
  AlgebraPtr alg;
  try {
    alg = quiver::build_algebra(e.presentation);
  } catch (const std::exception& ex) {
    r.check("build", false, ex.what());
    return r.verdicts();
  }
  if (e.family == Family::Hybrid) {
    r.check("build", true, "dim " + std::to_string(alg->dimension()) + ", Loewy length " + std::to_string(alg->loewy_length()));
  } else {
    common_checks(r, alg);
  }
  switch (e.family) {
    case Family::SymmetricCounterexample: verify_counterexample(r, e, alg, o); break;
    case Family::SD3C: verify_sd3c(r, e, alg, o); break;
    case Family::SD2B: verify_sd2b(r, e, alg, o); break;
    case Family::SD2A: verify_sd2a(r, e, alg, o); break;
    case Family::Hybrid: verify_hybrid_family(r, e, alg, o); break;
    case Family::LocalGroup: verify_local(r, e, alg, o); break;
  }
  return r.verdicts();
}

}  // namespace extlab::catalog
