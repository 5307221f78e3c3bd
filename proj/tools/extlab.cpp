// extlab: Nakayama formulas, bound quiver computations, sweeps and catalog checks from the shell.
//
// Exit codes: 0 success / all checks pass, 1 some check failed, 2 bad input.

#include <cstdlib>
#include <filesystem>
#include <map>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "extlab/algebra.hpp"
#include "extlab/catalog.hpp"
#include "extlab/hybrid.hpp"
#include "extlab/module_expr.hpp"
#include "extlab/nakayama.hpp"
#include "extlab/realize.hpp"
#include "extlab/suites.hpp"
#include "extlab/theorem_lab.hpp"
#include "extlab/verdict.hpp"

const std::map<std::string, std::string> kSubcommandHelp = {
    {"kupisch validate", "check the series and print n, dimension and Loewy length"},
    {"kupisch hom", "dim Hom(M, N)"},
    {"kupisch ext", "dim Ext^i(M, N)"},
    {"kupisch rigid", "whether Ext^1(M, M) vanishes"},
    {"kupisch pd", "projective dimension of M"},
    {"kupisch report", "syzygies, dimensions and Ext table for M"},
    {"kupisch tate", "stable Ext^i(M, M) for any integer i (self-injective only)"},
    {"quiver build", "dimension, Loewy length and Cartan matrix"},
    {"quiver ext", "dim Ext^i(M, N)"},
    {"quiver period", "syzygy period of M"},
    {"quiver resolve", "dimension vectors of the minimal projective resolution"},
    {"catalog list", "names and summaries"},
    {"catalog show", "the presentation of one entry as TOML"},
    {"catalog verify", "run the verification suite of one entry or all"},
    {"catalog export", "write every entry to TOML files"},
    {"hybrid validate", "check biserial quiver data and print vertex classes"},
    {"hybrid build", "print the presentation built from biserial quiver data"},
};

#ifndef EXTLAB_DATA_DIR
#define EXTLAB_DATA_DIR "data"
#endif

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;
using namespace extlab;

namespace {

class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Context {
  std::string format = "table";
  std::string out;
  std::uint64_t seed = quiver::SearchLimits{}.seed;
  std::string command;

  quiver::SearchLimits limits() const {
    quiver::SearchLimits l;
    l.seed = seed;
    return l;
  }
};

/// Relative paths land in $EXTLAB_OUT_DIR when it is set.
fs::path output_path(const std::string& p) {
  fs::path path(p);
  if (const char* dir = std::getenv("EXTLAB_OUT_DIR"); dir && *dir && path.is_relative()) path = fs::path(dir) / path;
  return path;
}

class Sink {
 public:
  explicit Sink(const std::string& out) {
    if (out.empty() || out == "-") return;
    const auto path = output_path(out);
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    file_.open(path);
    if (!file_) throw InputError("cannot open output file " + path.string());
    os_ = &file_;
  }
  std::ostream& os() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_ = &std::cout;
};

std::string read_file(const std::string& name) {
  std::vector<fs::path> tries{fs::path(name)};
  if (fs::path(name).is_relative()) {
    if (const char* dir = std::getenv("EXTLAB_DATA_DIR"); dir && *dir) tries.push_back(fs::path(dir) / name);
    tries.push_back(fs::path(EXTLAB_DATA_DIR) / name);
  }
  for (const auto& p : tries) {
    std::ifstream in(p);
    if (in) {
      std::ostringstream ss;
      ss << in.rdbuf();
      return ss.str();
    }
  }
  throw InputError("cannot read file " + name);
}

/// One scalar or structured result.
void emit(const Context& ctx, const std::string& text, const json& value) {
  Sink sink(ctx.out);
  auto& os = sink.os();
  if (ctx.format == "json") {
    json j;
    j["schema_version"] = kReportSchemaVersion;
    j["command"] = ctx.command;
    j["seed"] = ctx.seed;
    j["result"] = value;
    os << j.dump() << '\n';
  } else if (ctx.format == "csv") {
    os << "schema_version,command,result,seed\n";
    os << kReportSchemaVersion << ',' << csv_field(ctx.command) << ',' << csv_field(value.is_string() ? value.get<std::string>() : value.dump()) << ','
       << ctx.seed << '\n';
  } else {
    os << text << '\n';
  }
}

int emit_verdicts(const Context& ctx, const std::vector<Verdict>& vs) {
  Sink sink(ctx.out);
  auto& os = sink.os();
  if (ctx.format == "json") {
    write_json_lines(os, vs, ctx.seed);
  } else if (ctx.format == "csv") {
    write_csv(os, vs, ctx.seed);
  } else {
    write_table(os, vs);
    os << status_counts(vs) << "; seed " << ctx.seed << '\n';
  }
  return any_failed(vs) ? 1 : 0;
}

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v);
    } catch (const std::exception&) {
      throw InputError("bad " + what + " '" + text + "'");
    }
  }
  if (out.empty() && !text.empty()) throw InputError("bad " + what + " '" + text + "'");
  return out;
}

nakayama::SerialModule parse_serial(const std::string& text) {
  const auto v = parse_ints(text, "module");
  if (v.size() != 2) throw InputError("module must be given as i,k (got '" + text + "')");
  return {v[0], v[1]};
}

// ---------------------------------------------------------------------------
// kupisch

struct KupischArgs {
  std::string series;
  std::string shape = "cyclic";
  std::string file;
  std::vector<std::string> modules;
  std::string module;
  std::string target;
  int i = 1;
  int depth = 20;
};

nakayama::NakayamaAlgebra load_kupisch(const KupischArgs& a) {
  if (!a.file.empty()) return kupisch_from_toml(read_file(a.file));
  if (a.series.empty()) throw InputError("give --series or --file");
  nakayama::Shape shape;
  try {
    shape = nakayama::parse_shape(a.shape);
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  return nakayama::validate_kupisch(parse_ints(a.series, "series"), shape);
}

std::vector<nakayama::SerialModule> kupisch_modules(const nakayama::NakayamaAlgebra& alg, const KupischArgs& a, std::size_t want) {
  std::vector<std::string> names;
  if (!a.module.empty()) names.push_back(a.module);
  if (!a.target.empty()) names.push_back(a.target);
  names.insert(names.end(), a.modules.begin(), a.modules.end());
  if (names.size() != want) throw InputError("expected " + std::to_string(want) + " module(s) given as i,k");
  std::vector<nakayama::SerialModule> out;
  for (const auto& n : names) {
    const auto m = parse_serial(n);
    nakayama::require_module(alg, m);
    out.push_back(m);
  }
  return out;
}

json hom_json(const nakayama::HomDim& d) { return d.infinite() ? json("infinite") : json(*d.value); }

int run_kupisch(const Context& ctx, const std::string& sub, const KupischArgs& a) {
  const auto alg = load_kupisch(a);
  if (sub == "validate") {
    const auto gl = nakayama::global_dimension(alg);
    json j{{"instance", instance_key(alg)}, {"dimension", alg.dimension()}, {"loewy_length", alg.loewy_length()}, {"global_dimension", hom_json(gl)},
           {"self_injective", alg.is_self_injective()}};
    emit(ctx,
         "valid " + instance_key(alg) + ": dim " + std::to_string(alg.dimension()) + ", Loewy length " + std::to_string(alg.loewy_length()) +
             ", global dimension " + to_string(gl) + (alg.is_self_injective() ? ", self-injective" : ""),
         j);
    return 0;
  }
  if (sub == "hom") {
    const auto ms = kupisch_modules(alg, a, 2);
    const int d = nakayama::hom_dim(alg, ms[0], ms[1]);
    emit(ctx, std::to_string(d), d);
    return 0;
  }
  if (sub == "ext") {
    const auto ms = kupisch_modules(alg, a, 2);
    if (a.i < 1) throw InputError("--i must be at least 1");
    const int d = nakayama::ext_dim(alg, ms[0], ms[1], a.i);
    emit(ctx, std::to_string(d), d);
    return 0;
  }
  if (sub == "rigid") {
    const auto m = kupisch_modules(alg, a, 1)[0];
    const bool r = nakayama::is_rigid(alg, m);
    emit(ctx, r ? "rigid" : "non-rigid", r ? "rigid" : "non-rigid");
    return 0;
  }
  if (sub == "pd") {
    const auto m = kupisch_modules(alg, a, 1)[0];
    const auto d = nakayama::proj_dim(alg, m);
    emit(ctx, to_string(d), hom_json(d));
    return 0;
  }
  if (sub == "report") {
    const auto m = kupisch_modules(alg, a, 1)[0];
    if (a.depth < 1) throw InputError("--depth must be positive");
    const auto r = nakayama::homological_report(alg, m, a.depth);
    const auto cert = lab::nonvanishing_certificate(alg, m);
    json j{{"instance", instance_key(alg)},   {"module", nakayama::to_string(m)}, {"proj_dim", hom_json(r.proj_dim)}, {"inj_dim", hom_json(r.inj_dim)},
           {"rigid", r.rigid},                {"ext_dims", r.ext_dims},           {"all_i_certified", cert.certified}};
    std::ostringstream t;
    t << "module     " << nakayama::to_string(m) << " over " << instance_key(alg) << "\n";
    t << "pd         " << to_string(r.proj_dim) << "\n";
    t << "id         " << to_string(r.inj_dim) << "\n";
    t << "rigid      " << (r.rigid ? "yes" : "no") << "\n";
    t << "Ext^i(M,M) ";
    for (std::size_t i = 0; i < r.ext_dims.size(); ++i) t << (i ? " " : "") << r.ext_dims[i];
    t << "\nnonzero for all i: " << (cert.certified ? "yes (orbit cycle)" : "no");
    emit(ctx, t.str(), j);
    return 0;
  }
  if (sub == "tate") {
    const auto m = kupisch_modules(alg, a, 1)[0];
    if (!alg.is_self_injective()) throw InputError("tate needs a self-injective algebra (constant cyclic series)");
    const int d = nakayama::tate_ext_dim(alg, m, a.i);
    emit(ctx, std::to_string(d), d);
    return 0;
  }
  throw InputError("unknown kupisch subcommand " + sub);
}

// ---------------------------------------------------------------------------
// sweep

struct SweepArgs {
  int n_max = 3;
  int c_max = 9;
  std::vector<std::string> checks;
  std::vector<int> primes{2, 3};
  int depth = 20;
  std::vector<std::string> shapes{"cyclic"};
  unsigned threads = 0;
  std::string summary;
};

int run_sweep(const Context& ctx, const SweepArgs& a) {
  lab::SweepConfig cfg;
  cfg.n_max = a.n_max;
  cfg.c_max = a.c_max;
  cfg.ext_depth = a.depth;
  cfg.threads = a.threads;
  cfg.seed = ctx.seed;
  if (!a.checks.empty() && !(a.checks.size() == 1 && a.checks[0] == "all")) cfg.checks = a.checks;
  cfg.field_chars.clear();
  for (int p : a.primes) {
    if (p < 2) throw InputError("bad prime " + std::to_string(p));
    cfg.field_chars.push_back(static_cast<std::uint32_t>(p));
  }
  cfg.shapes.clear();
  for (const auto& s : a.shapes) {
    try {
      cfg.shapes.insert(nakayama::parse_shape(s));
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  try {
    cfg.validate();
  } catch (const std::invalid_argument& e) {
    throw InputError(e.what());
  }
  const auto vs = lab::sweep(cfg);
  if (!a.summary.empty()) {
    Sink s(a.summary);
    s.os() << "schema_version,instance,check,status,seed\n";
    for (const auto& v : vs) s.os() << kReportSchemaVersion << ',' << csv_field(v.instance) << ',' << v.check << ',' << to_string(v.status) << ',' << ctx.seed << '\n';
  }
  return emit_verdicts(ctx, vs);
}

// ---------------------------------------------------------------------------
// quiver

struct QuiverArgs {
  std::string file;
  std::string module;
  std::string simple;
  std::string target;
  int i = 1;
  int bound = 12;
  int depth = 6;
};

/// A vertex name means the simple module there; anything else is a module expression.
quiver::Module resolve_module(const quiver::ModuleResolver& r, const std::string& expr) {
  if (r.algebra()->quiver().find_vertex(expr)) return quiver::simple_module(r.algebra(), r.vertex(expr));
  return r.resolve(expr);
}

int run_quiver(const Context& ctx, const std::string& sub, const QuiverArgs& a) {
  if (a.file.empty()) throw InputError("give --file");
  const auto alg = quiver::build_algebra(quiver::presentation_from_toml(read_file(a.file)));
  const quiver::ModuleResolver r(alg);
  auto source = [&] {
    if (!a.simple.empty()) return quiver::simple_module(alg, r.vertex(a.simple));
    if (a.module.empty()) throw InputError("give --module or --simple");
    return resolve_module(r, a.module);
  };
  if (sub == "build") {
    const auto cart = alg->cartan();
    const bool ws = quiver::weakly_symmetric(alg);
    json j{{"name", alg->presentation().name}, {"dimension", alg->dimension()}, {"loewy_length", alg->loewy_length()}, {"cartan", cart}, {"weakly_symmetric", ws}};
    std::ostringstream t;
    t << "algebra           " << alg->presentation().name << " over F_" << alg->field().characteristic() << "\n";
    t << "dimension         " << alg->dimension() << "\n";
    t << "loewy length      " << alg->loewy_length() << "\n";
    t << "weakly symmetric  " << (ws ? "yes" : "no") << "\n";
    t << "cartan (row v = dim e_v A e_w)";
    for (std::size_t v = 0; v < cart.size(); ++v) {
      t << "\n  " << alg->quiver().vertex_name(static_cast<int>(v)) << ":";
      for (int x : cart[v]) t << ' ' << x;
    }
    emit(ctx, t.str(), j);
    return 0;
  }
  if (sub == "ext") {
    if (a.target.empty()) throw InputError("give --target");
    if (a.i < 0) throw InputError("--i must be nonnegative");
    const auto m = source();
    const auto n = resolve_module(r, a.target);
    const auto d = a.i == 0 ? quiver::hom_dim(m, n) : quiver::ext_dim(m, n, a.i);
    emit(ctx, std::to_string(d), d);
    return 0;
  }
  if (sub == "period") {
    if (a.bound < 1) throw InputError("--bound must be positive");
    const auto res = quiver::omega_period(source(), a.bound, ctx.limits());
    const std::string text = catalog::period_string(res);
    emit(ctx, text, res.kind == quiver::PeriodResult::Kind::Period ? json(res.period) : json(text));
    return 0;
  }
  if (sub == "resolve") {
    if (a.depth < 0) throw InputError("--depth must be nonnegative");
    const auto chain = quiver::syzygy_chain(source(), a.depth);
    json steps = json::array();
    std::ostringstream t;
    t << "step  dims  top";
    for (std::size_t k = 0; k < chain.size(); ++k) {
      const auto top = quiver::top_dims(chain[k]);
      steps.push_back(json{{"step", k}, {"dims", chain[k].dims()}, {"top", top}});
      t << "\n" << k << "  " << dims_string(chain[k].dims()) << "  " << dims_string(top);
    }
    emit(ctx, t.str(), steps);
    return 0;
  }
  throw InputError("unknown quiver subcommand " + sub);
}

// ---------------------------------------------------------------------------
// catalog and hybrid

int run_catalog(const Context& ctx, const std::string& sub, const std::string& name, int depth, const std::string& dir) {
  if (sub == "list") {
    json arr = json::array();
    std::ostringstream t;
    for (const auto& e : catalog::entries()) {
      arr.push_back(json{{"name", e.name}, {"family", to_string(e.family)}, {"summary", e.summary}});
      t << e.name << std::string(e.name.size() < 16 ? 16 - e.name.size() : 1, ' ') << to_string(e.family)
        << std::string(to_string(e.family).size() < 16 ? 16 - to_string(e.family).size() : 1, ' ') << e.summary << '\n';
    }
    std::string text = t.str();
    if (!text.empty()) text.pop_back();
    emit(ctx, text, arr);
    return 0;
  }
  if (sub == "show") {
    const auto e = catalog::find(name);
    if (!e) throw InputError("unknown catalog entry '" + name + "'");
    const auto text = quiver::to_toml(e->presentation);
    emit(ctx, text.substr(0, text.size() - 1), text);
    return 0;
  }
  if (sub == "verify") {
    if (depth < 1) throw InputError("--depth must be positive");
    catalog::SuiteOptions o;
    o.depth = depth;
    o.limits = ctx.limits();
    std::vector<Verdict> vs;
    if (name.empty() || name == "all") {
      for (const auto& e : catalog::entries()) {
        auto v = catalog::verify_entry(e, o);
        vs.insert(vs.end(), v.begin(), v.end());
      }
    } else {
      const auto e = catalog::find(name);
      if (!e) throw InputError("unknown catalog entry '" + name + "'");
      vs = catalog::verify_entry(*e, o);
    }
    return emit_verdicts(ctx, vs);
  }
  if (sub == "export") {
    fs::path out = dir.empty() ? fs::path("data") : fs::path(dir);
    if (const char* env = std::getenv("EXTLAB_OUT_DIR"); env && *env && out.is_relative()) out = fs::path(env) / out;
    fs::create_directories(out);
    std::size_t files = 0;
    for (const auto& e : catalog::entries()) {
      std::ofstream(out / (e.name + ".toml")) << quiver::to_toml(e.presentation);
      ++files;
      if (e.biserial) {
        std::ofstream(out / (e.name + ".biserial.toml")) << hybrid::biserial_to_toml(*e.biserial);
        ++files;
      }
      if (e.kupisch) {
        std::ofstream(out / (e.name + ".kupisch.toml")) << kupisch_to_toml(*e.kupisch);
        ++files;
      }
    }
    emit(ctx, "wrote " + std::to_string(files) + " files to " + out.string(), json{{"directory", out.string()}, {"files", files}});
    return 0;
  }
  throw InputError("unknown catalog subcommand " + sub);
}

int run_hybrid(const Context& ctx, const std::string& sub, const std::string& file, int p) {
  if (file.empty()) throw InputError("give --file");
  const auto data = hybrid::biserial_from_toml(read_file(file));
  const auto b = hybrid::BiserialQuiver::validate(data);
  if (sub == "validate") {
    json classes = json::object();
    std::ostringstream t;
    t << "valid biserial quiver " << data.name << "; vertex classes:";
    for (int v = 0; v < b.quiver().num_vertices(); ++v) {
      const auto c = hybrid::to_string(b.vertex_class(v));
      classes[b.quiver().vertex_name(v)] = c;
      t << "\n  " << b.quiver().vertex_name(v) << ": " << c;
    }
    emit(ctx, t.str(), classes);
    return 0;
  }
  if (sub == "build") {
    if (p < 2) throw InputError("bad prime");
    const auto pres = hybrid::build_hybrid(b, static_cast<std::uint32_t>(p));
    const auto alg = quiver::build_algebra(pres);
    const auto text = quiver::to_toml(pres);
    emit(ctx, text.substr(0, text.size() - 1), text);
    (void)alg;
    return 0;
  }
  throw InputError("unknown hybrid subcommand " + sub);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"extlab: Ext computations for Nakayama and bound quiver algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx;
  app.add_option("--format", ctx.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--out", ctx.out, "output file (relative paths go under $EXTLAB_OUT_DIR)");
  app.add_option("--seed", ctx.seed, "seed for randomized isomorphism search");

  std::function<int()> action;

  KupischArgs ka;
  auto* kup = app.add_subcommand("kupisch", "formulas for Nakayama algebras given by a Kupisch series");
  kup->require_subcommand(1);
  for (const std::string sub : {"validate", "hom", "ext", "rigid", "pd", "report", "tate"}) {
    auto* s = kup->add_subcommand(sub, kSubcommandHelp.at("kupisch " + sub));
    s->add_option("--series", ka.series, "Kupisch series, e.g. 4,4");
    s->add_option("--shape", ka.shape, "cyclic or linear");
    s->add_option("--file", ka.file, "TOML file with shape and kupisch");
    if (sub != "validate") {
      s->add_option("--module,-m", ka.module, "serial module i,k");
      s->add_option("modules", ka.modules, "serial modules i,k");
    }
    if (sub == "hom" || sub == "ext") s->add_option("--target,-t", ka.target, "second module i,k");
    if (sub == "ext" || sub == "tate") s->add_option("--i", ka.i, "degree");
    if (sub == "report") s->add_option("--depth", ka.depth, "largest Ext degree");
    s->callback([&, sub] {
      ctx.command = "kupisch " + sub;
      action = [&, sub] { return run_kupisch(ctx, sub, ka); };
    });
  }

  SweepArgs sa;
  auto* sw = app.add_subcommand("sweep", "run the checks over all Kupisch series within bounds");
  sw->add_option("--n-max", sa.n_max, "largest number of vertices");
  sw->add_option("--c-max", sa.c_max, "largest Kupisch entry");
  sw->add_option("--checks", sa.checks, "comma list of checks, or all")->delimiter(',');
  sw->add_option("--p", sa.primes, "primes for the oracle")->delimiter(',');
  sw->add_option("--depth", sa.depth, "Ext depth");
  sw->add_option("--shapes", sa.shapes, "cyclic,linear")->delimiter(',');
  sw->add_option("--threads", sa.threads, "worker threads (0: all cores)");
  sw->add_option("--summary", sa.summary, "also write a CSV summary (instance, check, status)");
  sw->callback([&] {
    ctx.command = "sweep";
    action = [&] { return run_sweep(ctx, sa); };
  });

  QuiverArgs qa;
  auto* qv = app.add_subcommand("quiver", "computations over a bound quiver algebra given in TOML");
  qv->require_subcommand(1);
  for (const std::string sub : {"build", "ext", "period", "resolve"}) {
    auto* s = qv->add_subcommand(sub, kSubcommandHelp.at("quiver " + sub));
    s->add_option("--file", qa.file, "presentation TOML")->required();
    if (sub != "build") {
      s->add_option("--module", qa.module, "module expression (S0, P1, arrow:a, omega:2:S0, W, ...)");
      s->add_option("--simple", qa.simple, "use the simple module at this vertex");
    }
    if (sub == "ext") {
      s->add_option("--target", qa.target, "second argument: vertex name (its simple) or module expression")->required();
      s->add_option("--i", qa.i, "degree (0 gives Hom)");
    }
    if (sub == "period") s->add_option("--bound", qa.bound, "largest period to look for");
    if (sub == "resolve") s->add_option("--depth", qa.depth, "number of syzygies");
    s->callback([&, sub] {
      ctx.command = "quiver " + sub;
      action = [&, sub] { return run_quiver(ctx, sub, qa); };
    });
  }

  std::string cat_name, cat_dir;
  int cat_depth = 12;
  auto* cat = app.add_subcommand("catalog", "named algebras and their verification suites");
  cat->require_subcommand(1);
  for (const std::string sub : {"list", "show", "verify", "export"}) {
    auto* s = cat->add_subcommand(sub, kSubcommandHelp.at("catalog " + sub));
    if (sub == "show") s->add_option("name", cat_name)->required();
    if (sub == "verify") {
      s->add_option("name", cat_name, "entry name, or all");
      s->add_option("--depth", cat_depth, "syzygy depth for nonvanishing checks");
    }
    if (sub == "export") s->add_option("--dir", cat_dir, "target directory (default data)");
    s->callback([&, sub] {
      ctx.command = "catalog " + sub;
      action = [&, sub] { return run_catalog(ctx, sub, cat_name, cat_depth, cat_dir); };
    });
  }

  std::string hy_file;
  int hy_p = 2;
  auto* hy = app.add_subcommand("hybrid", "biserial quiver data and the algebras built from it");
  hy->require_subcommand(1);
  for (const std::string sub : {"validate", "build"}) {
    auto* s = hy->add_subcommand(sub, kSubcommandHelp.at("hybrid " + sub));
    s->add_option("--file", hy_file, "biserial quiver TOML")->required();
    if (sub == "build") s->add_option("--p", hy_p, "field characteristic");
    s->callback([&, sub] {
      ctx.command = "hybrid " + sub;
      action = [&, sub] { return run_hybrid(ctx, sub, hy_file, hy_p); };
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  try {
    return action ? action() : 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
