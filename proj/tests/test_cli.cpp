#include <gtest/gtest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "extlab/verdict.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args, const std::string& env = {}) {
  const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + EXTLAB_CLI + "\" " + args + " 2>&1";
  Run r;
  FILE* p = popen(cmd.c_str(), "r");
  if (!p) return r;
  std::array<char, 4096> buf{};
  while (std::size_t n = fread(buf.data(), 1, buf.size(), p)) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string trim(std::string s) {
  while (!s.empty() && (s.back() == '\n' || s.back() == ' ')) s.pop_back();
  return s;
}

nlohmann::json result(const Run& r) { return nlohmann::json::parse(r.out).at("result"); }

}  // namespace

TEST(Cli, KupischCommands) {
  auto r = run("kupisch rigid --series 4,4 --module 0,2");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trim(r.out), "non-rigid");

  r = run("kupisch pd --series 2,3 --module 0,1 --format json");
  EXPECT_EQ(r.code, 0);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("schema_version"), 1);
  EXPECT_EQ(j.at("command"), "kupisch pd");
  EXPECT_EQ(j.at("seed"), 24301);
  EXPECT_EQ(j.at("result"), 2);

  r = run("kupisch ext --series 4,4 -m 0,2 -t 0,2 --i 7 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(result(r), 1);

  r = run("kupisch validate --series 4,2");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("MonotonicityViolation"), std::string::npos);

  EXPECT_EQ(run("kupisch rigid --series 4,4 --module 0,9").code, 2);
  EXPECT_EQ(run("kupisch tate --series 2,3 --module 0,1 --i 1").code, 2);
  EXPECT_EQ(run("kupisch frobnicate").code, 2);
}

TEST(Cli, QuiverCommands) {
  auto r = run("quiver ext --file example_2_8.toml --simple 1 --target 1 --i 3");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(trim(r.out), "0");

  r = run("quiver period --file sd2b3_s2.toml --module W --bound 8 --format json");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(result(r), 2);

  EXPECT_EQ(run("quiver build --file no_such_file.toml").code, 2);
  EXPECT_EQ(run("quiver ext --file example_2_8.toml --simple 9 --target 1 --i 3").code, 2);
}

TEST(Cli, CatalogVerify) {
  auto r = run("catalog verify example_2_8 --format json");
  EXPECT_EQ(r.code, 0);
  std::istringstream in(r.out);
  std::string line;
  std::size_t n = 0;
  while (std::getline(in, line)) {
    const auto v = extlab::verdict_from_json(nlohmann::json::parse(line));
    EXPECT_EQ(v.status, extlab::Status::Pass) << v.check;
    ++n;
  }
  EXPECT_GT(n, 2u);
  EXPECT_EQ(run("catalog show nope").code, 2);
}

TEST(Cli, Sweep) {
  auto r = run("sweep --n-max 2 --c-max 4 --format csv");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("schema_version,instance,check,status,witness,seed\n", 0), 0u);
  EXPECT_EQ(r.out.find(",fail,"), std::string::npos);

  r = run("sweep --n-max 1 --shapes linear");
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("0 pass, 0 fail, 0 skipped"), std::string::npos);

  r = run("sweep --checks 1.5");
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.out.find("unknown check"), std::string::npos);
}

TEST(Cli, OutputDirectory) {
  const fs::path dir = fs::temp_directory_path() / "extlab_cli_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  const auto r = run("sweep --n-max 1 --c-max 3 --format json --out sweep.jsonl", "EXTLAB_OUT_DIR=" + dir.string());
  EXPECT_EQ(r.code, 0);
  std::ifstream in(dir / "sweep.jsonl");
  ASSERT_TRUE(in.good());
  std::string first;
  std::getline(in, first);
  EXPECT_EQ(nlohmann::json::parse(first).at("instance"), "cyclic[1]");

  const auto e = run("catalog export --dir exported", "EXTLAB_OUT_DIR=" + dir.string());
  EXPECT_EQ(e.code, 0);
  EXPECT_TRUE(fs::exists(dir / "exported" / "triangle.biserial.toml"));
  EXPECT_TRUE(fs::exists(dir / "exported" / "c3.kupisch.toml"));
  fs::remove_all(dir);
}
