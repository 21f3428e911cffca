#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "slc/construct.hpp"
#include "slc/formats.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("slcolour_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  CliRun run(const std::string& args) const {
    const std::string err_file = path("stderr.txt");
    const std::string cmd = std::string(SLC_CLI_PATH) + " " + args + " 2>" + err_file;
    CliRun r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.err = slurp(err_file);
    return r;
  }

  static std::string slurp(const std::string& file) {
    std::ifstream in(file, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
  }

  void write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name)) << text;
  }

  fs::path dir_;
};

TEST_F(Cli, ConstructThenSolveReportsUnsat) {
  ASSERT_EQ(run("construct --case c123 --out " + path("c123.json")).code, 0);
  const auto r = run("solve " + path("c123.json"));
  EXPECT_EQ(r.out, "UNSAT\n");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(run("solve --expect unsat " + path("c123.json")).code, 0);
}

TEST_F(Cli, ConstructIsByteStable) {
  const auto a = run("construct --case c1234");
  const auto b = run("construct --case c1234");
  ASSERT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_FALSE(a.out.empty());
}

TEST_F(Cli, CertifyAndCheck) {
  ASSERT_EQ(run("construct --case c1234 --out " + path("g.json")).code, 0);
  ASSERT_EQ(run("certify " + path("g.json") + " --out " + path("cert.json")).code, 0);
  const auto ok = run("check-cert " + path("cert.json") + " " + path("g.json"));
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "valid\n");

  // Tamper: drop one refutation row.
  auto cert = slc::decode_certificate(slurp(path("cert.json")));
  cert.faces.front().rows.pop_back();
  write("bad.json", slc::encode(cert));
  const auto bad = run("check-cert " + path("bad.json") + " " + path("g.json"));
  EXPECT_EQ(bad.code, 1);
  EXPECT_EQ(bad.out, "invalid\n");
  EXPECT_FALSE(bad.err.empty());
}

TEST_F(Cli, BadWitness) {
  const auto cite = run("bad-witness --perm \"(12)\" --out " + path("w.json"));
  EXPECT_EQ(cite.code, 0);
  EXPECT_NE(cite.out.find("delegated to citation"), std::string::npos);
  EXPECT_FALSE(fs::exists(path("w.json")));

  ASSERT_EQ(run("bad-witness --perm \"(243)\" --out " + path("w.json")).code, 0);
  EXPECT_EQ(run("solve --expect unsat " + path("w.json")).code, 0);

  EXPECT_EQ(run("bad-witness --perm id").code, 1);
  EXPECT_EQ(run("bad-witness --perm \"(125)\"").code, 2);
}

TEST_F(Cli, CountBaseTriangulation) {
  const auto base = slc::SLabeledGraph::all_identity(slc::base_triangulation().to_simple_graph(), 4);
  write("base.json", slc::encode(base));
  const auto c = run("solve --count " + path("base.json"));
  EXPECT_EQ(c.code, 0);
  EXPECT_EQ(c.out, "24\n");

  write("k4.json", R"j({"kind":"slabeled_graph","schema_version":"1","payload":{"k":4,
    "vertices":[0,1,2,3],"arcs":[{"tail":0,"head":1,"label":"id"},{"tail":0,"head":2,"label":"id"},
    {"tail":0,"head":3,"label":"id"},{"tail":1,"head":2,"label":"id"},{"tail":1,"head":3,"label":"id"},
    {"tail":2,"head":3,"label":"id"}]}})j");
  const auto r = run("solve --count " + path("k4.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "24\n");
  const auto e = run("solve --enumerate 3 " + path("k4.json"));
  EXPECT_EQ(e.out, "1 2 3 4\n1 2 4 3\n1 3 2 4\n3 colourings (truncated)\n");
  const auto s = run("solve --stats " + path("k4.json"));
  EXPECT_EQ(s.code, 0);
  EXPECT_NE(s.out.find("\"choice_points\""), std::string::npos);
  EXPECT_EQ(s.out.find("wall_ms"), std::string::npos);
}

TEST_F(Cli, Adapt) {
  write("signed.json", R"j({"vertices":2,"edges":[{"u":0,"v":1,"sign":-1}]})j");
  const auto r = run("adapt --from signed --k 4 " + path("signed.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("\"slabeled_graph\""), std::string::npos);
  write("zk.json", R"j({"vertices":2,"arcs":[{"tail":0,"head":1,"weight":1}]})j");
  EXPECT_EQ(run("adapt --from zk --k 3 " + path("zk.json") + " --out " + path("zk_out.json")).code, 0);
  EXPECT_EQ(run("solve --count " + path("zk_out.json")).out, "6\n");
  write("gain.json",
        R"j({"vertices":2,"group":{"cyclic":2},"arcs":[{"tail":0,"head":1,"gain":1}]})j");
  EXPECT_EQ(run("adapt --from gain --k 1 " + path("gain.json")).code, 0);
}

TEST_F(Cli, ExportDot) {
  ASSERT_EQ(run("construct --case c1234 --out " + path("g.json")).code, 0);
  const auto r = run("export --dot " + path("g.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.rfind("digraph slabeled {", 0), 0u);
}

TEST_F(Cli, Props) {
  for (const char* suite : {"conjugation", "reversal", "monotonicity", "relabel"}) {
    const auto r = run(std::string("props --suite ") + suite + " --trials 30");
    EXPECT_EQ(r.code, 0) << suite;
  }
  EXPECT_EQ(run("props --suite nope").code, 2);
}

TEST_F(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run("").code, 2);
  EXPECT_EQ(run("solve").code, 2);
  EXPECT_EQ(run("solve --frobnicate x").code, 2);
  EXPECT_EQ(run("solve " + path("missing.json")).code, 2);
  write("broken.json", "{\"kind\": ");
  const auto r = run("solve " + path("broken.json"));
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("position"), std::string::npos);
  write("plain.json", R"j({"kind":"slabeled_graph","schema_version":"1","payload":{"k":2,
    "vertices":[0,1],"arcs":[{"tail":0,"head":1,"label":[1,1]}]}})j");
  EXPECT_EQ(run("solve " + path("plain.json")).code, 2);
  EXPECT_EQ(run("construct --case c999").code, 2);
  EXPECT_EQ(run("--help").code, 0);
}

TEST_F(Cli, CertifyWithoutProvenance) {
  write("k2.json", R"j({"kind":"slabeled_graph","schema_version":"1","payload":{"k":1,
    "vertices":[0,1],"arcs":[{"tail":0,"head":1,"label":"id"}]}})j");
  const auto r = run("certify " + path("k2.json"));
  EXPECT_EQ(r.code, 1);
  EXPECT_FALSE(r.err.empty());
}

}  // namespace
