// Prints one pass/fail line per acceptance criterion; exits nonzero if any fails.
#include <algorithm>
#include <cstdio>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "extlab/suites.hpp"
#include "extlab/theorem_lab.hpp"

using namespace extlab;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
};

/// Every verdict whose check starts with one of `prefixes` passes (skips allowed when `allow_skip`),
/// and each prefix matches at least once.
Outcome require(const std::vector<Verdict>& vs, const std::vector<std::string>& prefixes, bool allow_skip = false) {
  Outcome out;
  std::size_t passed = 0, skips = 0;
  for (const auto& p : prefixes) {
    std::size_t hits = 0;
    for (const auto& v : vs) {
      if (v.check.rfind(p, 0) != 0) continue;
      ++hits;
      if (v.status == Status::Pass) {
        ++passed;
      } else if (v.status == Status::Skipped && allow_skip) {
        ++skips;
      } else if (out.ok) {
        out.ok = false;
        out.note = v.instance + " " + v.check + " " + to_string(v.status) + ": " + v.witness;
      }
    }
    if (hits == 0 && out.ok) {
      out.ok = false;
      out.note = "no verdicts for " + p;
    }
  }
  if (out.ok) out.note = std::to_string(passed) + " pass" + (skips ? ", " + std::to_string(skips) + " skipped" : "");
  return out;
}

Outcome all_of(std::initializer_list<Outcome> parts) {
  Outcome out;
  std::string notes;
  for (const auto& p : parts) {
    if (!p.ok && out.ok) {
      out.ok = false;
      out.note = p.note;
    }
    notes += (notes.empty() ? "" : "; ") + p.note;
  }
  if (out.ok) out.note = notes;
  return out;
}

std::map<std::string, std::vector<Verdict>> catalog_verdicts() {
  std::map<std::string, std::vector<Verdict>> out;
  for (const auto& e : catalog::entries()) out[e.name] = catalog::verify_entry(e);
  return out;
}

}  // namespace

int main() {
  lab::SweepConfig cfg;  // cyclic, n <= 3, c_i <= 9, F_2 and F_3, Ext to degree 20
  const auto sweep = lab::sweep(cfg);
  auto cat = catalog_verdicts();
  auto of = [&](std::initializer_list<std::string> names) {
    std::vector<Verdict> vs;
    for (const auto& n : names) vs.insert(vs.end(), cat[n].begin(), cat[n].end());
    return vs;
  };

  std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
      {"rigidity criterion matches oracle Ext1 over F_2 and F_3", [&] { return require(sweep, {"rigidity", "oracle-p2", "oracle-p3"}); }},
      {"closed-form Hom, Ext1, Ext^i (i<=20), pd agree with the oracle", [&] { return require(sweep, {"oracle-p2", "oracle-p3"}); }},
      {"non-rigid modules have Ext^i != 0 for all i", [&] { return require(sweep, {"nonvanishing"}, true); }},
      {"min-inequalities hold on every ordered pair", [&] { return require(sweep, {"min-inequality"}); }},
      {"finite gldim forces L <= 2n-1 and rigidity; extremal series attain 2n-1",
       [&] { return all_of({require(sweep, {"loewy-bound"}, true), require(sweep, {"extremal-series"})}); }},
      {"symmetric counterexample: Ext1(S,S) != 0, Ext3(S,S) = 0",
       [&] { return require(of({"example_2_8"}), {"build", "ext1-nonzero", "ext3-zero", "loop-nonvanishing"}); }},
      {"SD(2B)_3: Cartan, dim W, Omega^2 W = W, loop nonvanishing",
       [&] { return require(of({"sd2b3_s2", "sd2b3_s2_c0"}), {"cartan", "dim-W", "Omega2(W)=W", "loop-nonvanishing:S0", "loop-nonvanishing:S1"}); }},
      {"SD(3C): rhoL and W of period 3, Ext^n(S0,S0) != 0",
       [&] { return require(of({"sd3c1", "sd3c2"}), {"period:rhoL", "period:W", "loop-nonvanishing:S0", "top-good-syzygies"}); }},
      {"SD(2A)_2: syzygies of X and S0, W indecomposable of period 3",
       [&] {
         return require(of({"sd2a2"}), {"Omega(X)=alphaL", "Omega2(X)=alphabetaL", "Omega3(S0)=rad(alphabetaL)", "W-indecomposable", "period:W"});
       }},
      {"hybrid dimension identities and weak symmetry",
       [&] { return require(of({"triangle", "triangle_brauer"}), {"identity:dim-projective", "identity:dim-arrow-module", "identity:dim-a-ga", "weakly-symmetric"}); }},
      {"quaternion simples are 4-periodic; Ext^1..4 != 0 on 4-periodic non-rigid modules",
       [&] { return require(of({"triangle"}), {"quaternion:S0:", "quaternion:S1:", "quaternion:S2:", "four-periodic-ext"}); }},
      {"local group algebras: non-projectives non-rigid with all Ext^i != 0",
       [&] { return require(of({"c2", "c4", "c3", "c5", "c2xc2"}), {"local-nonvanishing", "ext1-loops"}); }},
  };

  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("error: ") + e.what()};
    }
    if (!o.ok) ++failed;
    std::printf("[%s] criterion %zu: %s (%s)\n", o.ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), o.note.c_str());
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed ? 1 : 0;
}
