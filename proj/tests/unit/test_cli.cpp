#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "tonelab/coloring.hpp"
#include "tonelab/graph_io.hpp"

using namespace tonelab;
namespace fs = std::filesystem;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "tonelab");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("tonelab_cli_" + std::to_string(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string file(const std::string& name) const { return (path / name).string(); }
};

void write_text(const std::string& path, const std::string& text) { std::ofstream(path) << text; }

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("verify exit codes") {
    TempDir dir;
    write_graph_file(dir.file("s3.g"), build_star(3));
    write_text(dir.file("good.col"), "3 9\n0: 0 1 2\n1: 3 4 5\n2: 3 6 7\n3: 4 6 8\n");
    write_text(dir.file("bad.col"), "3 9\n0: 0 1 2\n1: 3 4 5\n2: 3 4 7\n3: 4 6 8\n");
    write_text(dir.file("broken.col"), "3 9\n0: 0 1\n");
    const auto ok = run({"verify", dir.file("s3.g"), dir.file("good.col")});
    CHECK(ok.code == cli::kOk);
    CHECK(ok.out == "valid t=3 colors_used=9\n");
    const auto bad = run({"verify", dir.file("s3.g"), dir.file("bad.col")});
    CHECK(bad.code == cli::kInvalid);
    CHECK(bad.out == "invalid t=3 colors_used=9\n1 2 2 2\n");
    CHECK(run({"verify", dir.file("s3.g"), dir.file("broken.col")}).code == cli::kUsage);
    CHECK(run({"verify", dir.file("missing.g"), dir.file("good.col")}).code == cli::kUsage);
  }

  TEST_CASE("solve") {
    CHECK(run({"solve", "--family", "star", "3", "--t", "4"}).out.rfind("Exact 13\n", 0) == 0);
    CHECK(run({"solve", "--family", "path", "4", "--t", "4"}).out.rfind("Exact 12\n", 0) == 0);
    const auto slow = run({"solve", "--family", "star", "7", "--t", "3", "--budget-nodes", "1"});
    CHECK(slow.code == cli::kBudget);
    CHECK(slow.out.rfind("Timeout [", 0) == 0);
    CHECK(run({"solve", "--family", "path", "3", "--t", "70"}).code == cli::kBudget);
    CHECK(run({"solve", "--family", "path", "3"}).code == cli::kUsage);
    CHECK(run({"solve", "--family", "nosuch", "3", "--t", "2"}).code == cli::kUsage);
  }

  TEST_CASE("solve writes a witness and a cnf") {
    TempDir dir;
    const auto r = run({"solve", "--family", "star", "3", "--t", "3", "--emit-witness",
                        dir.file("w.col"), "--emit-cnf", dir.file("i.cnf")});
    REQUIRE(r.code == cli::kOk);
    const ToneColoring w = read_coloring_file(dir.file("w.col"));
    CHECK(verify(build_star(3), w).valid);
    CHECK(colors_used(w) == 9);
    std::ifstream cnf(dir.file("i.cnf"));
    std::string line;
    bool header = false;
    while (std::getline(cnf, line)) {
      if (line.rfind("p cnf ", 0) == 0) header = true;
    }
    CHECK(header);
    CHECK(r.out.find("cnf k=8") != std::string::npos);
  }

  TEST_CASE("construct and re-verify") {
    TempDir dir;
    const auto m = run({"construct", "--method", "mols", "--n", "7", "--t", "4", "-o",
                        dir.file("m.col"), "--graph-out", dir.file("m.g")});
    REQUIRE(m.code == cli::kOk);
    CHECK(m.out.find("colors_used 28") != std::string::npos);
    CHECK(run({"verify", dir.file("m.g"), dir.file("m.col")}).code == cli::kOk);
    const auto s = run({"construct", "--method", "scheme", "--scheme", "T7_3tone", "--depth", "2",
                        "-o", dir.file("s.col")});
    CHECK(s.code == cli::kOk);
    CHECK(s.out.find("colors_used 10") != std::string::npos);
    const auto l = run({"construct", "--method", "large-t", "--family", "star", "3", "--t", "5"});
    CHECK(l.code == cli::kOk);
    CHECK(l.out.find("colors_used 17") != std::string::npos);
    const auto h = run({"construct", "--method", "large-t", "--family", "path", "5", "--t", "3"});
    CHECK(h.code == cli::kUsage);
    CHECK(h.err.find("12") != std::string::npos);
  }

  TEST_CASE("bound rows") {
    const auto s = run({"bound", "--family", "star", "5", "--t", "3"});
    CHECK(s.code == cli::kOk);
    CHECK(s.out.find("degree") != std::string::npos);
    const auto j = run({"--json", "bound", "--family", "path", "6", "--t", "4"});
    CHECK(j.code == cli::kOk);
    CHECK(j.out.find("\"path\"") != std::string::npos);
  }

  TEST_CASE("json output is stable") {
    for (const std::vector<std::string>& args :
         {std::vector<std::string>{"--json", "solve", "--family", "star", "4", "--t", "3"},
          std::vector<std::string>{"--json", "experiment", "--gnp", "300", "2", "5", "--t", "2",
                                   "--seeds", "3"},
          std::vector<std::string>{"--json", "reproduce", "--table", "tone4-stars"}}) {
      const auto a = run(args);
      const auto b = run(args);
      CHECK(a.code == cli::kOk);
      CHECK(a.out == b.out);
      CHECK_FALSE(a.out.empty());
    }
  }

  TEST_CASE("reproduce tables pass") {
    for (const char* table : {"tone3-stars", "tone4-stars", "paths", "mols-square"}) {
      CHECK(run({"reproduce", "--table", table}).code == cli::kOk);
    }
    CHECK(run({"reproduce", "--table", "nonsense"}).code == cli::kUsage);
  }

  TEST_CASE("mols and graph commands") {
    TempDir dir;
    CHECK(run({"mols", "--prime", "5", "-o", dir.file("p5.ls")}).code == cli::kOk);
    const auto check = run({"mols", "--check", dir.file("p5.ls")});
    CHECK(check.code == cli::kOk);
    CHECK(check.out.find("verified yes") != std::string::npos);
    CHECK(run({"mols", "--prime", "4"}).code == cli::kUsage);
    const auto g = run({"graph", "--family", "hypercube", "3"});
    CHECK(g.code == cli::kOk);
    CHECK(g.out.rfind("8 12\n", 0) == 0);
  }

  TEST_CASE("usage errors") {
    CHECK(run({}).code == cli::kUsage);
    CHECK(run({"frobnicate"}).code == cli::kUsage);
    CHECK(run({"--help"}).code == cli::kOk);
  }
}
