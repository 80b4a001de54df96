#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "hypercorona/io.hpp"

using namespace hypercorona;
namespace fs = std::filesystem;

namespace {

const fs::path data_dir = HC_DATA_DIR;

struct Run {
  int code = -1;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HC_CLI) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string data(const std::string& name) { return (data_dir / name).string(); }

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("hypercorona_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("spectrum") {
    const Run r = run("spectrum " + data("k33.hg"));
    REQUIRE(r.code == 0);
    const Json j = r.json();
    CHECK(j.at("schema") == 1);
    CHECK(j.at("command") == "spectrum");
    CHECK(j.at("result").at("charPolyText") == "-x^3 + 3x + 2");
    CHECK(j.at("inputs").begin().value().get<std::string>().rfind("sha256:", 0) == 0);
    CHECK(j.find("wallTimeMs") == j.end());
    CHECK(run("spectrum --timing " + data("k33.hg")).json().contains("wallTimeMs"));
    CHECK(run("spectrum --matrix seidel " + data("two_triples.hg")).code == 0);
  }

  TEST_CASE("input errors exit 3") {
    const fs::path dir = scratch("errors");
    std::ofstream(dir / "empty.hg").close();
    std::ofstream(dir / "bad.hg") << "k=3\nn=3\ne 0 1 5\n";
    CHECK(run("spectrum " + (dir / "empty.hg").string()).code == 3);
    CHECK(run("spectrum " + (dir / "bad.hg").string()).code == 3);
    CHECK(run("spectrum " + (dir / "missing.hg").string()).code == 3);
    CHECK(run("spectrum --matrix laplacian " + data("k33.hg")).code == 3);
    CHECK(run("verify --theorem 9.9 --config " + data("k33_corona.json")).code == 3);
  }

  TEST_CASE("corona emits round-trip") {
    const fs::path dir = scratch("corona");
    const Run hg = run("corona --config " + data("two_triples_k33.json") + " --emit hg");
    REQUIRE(hg.code == 0);
    std::ofstream(dir / "two_triples_k33.hg") << hg.out;
    CHECK(parse_hg(hg.out).order() == 16);
    const Json direct = run("corona --config " + data("two_triples_k33.json") + " --model sec3 --emit spectrum").json();
    const Json via = run("spectrum " + (dir / "two_triples_k33.hg").string()).json();
    CHECK(direct.at("result").at("charPoly") == via.at("result").at("charPoly"));

    const Json lit = run("corona --config " + data("two_triples_k33.json") + " --model paper4 --emit matrix").json();
    const Json sec = run("corona --config " + data("two_triples_k33.json") + " --model sec3 --emit matrix").json();
    int diff = 0;
    for (std::size_t i = 0; i < 16; ++i)
      for (std::size_t k = 0; k < 16; ++k) diff += lit.at("result")[i][k] != sec.at("result")[i][k];
    CHECK(diff == 24);
  }

  TEST_CASE("verify exit codes") {
    CHECK(run("verify --theorem 4.1 --config " + data("two_triples_k33.json")).code == 0);
    CHECK(run("verify --theorem coronal --config " + data("two_triples_k33.json")).code == 0);
    CHECK(run("verify --theorem 3.1 --config " + data("k33_corona.json")).code == 0);
    const Run signs = run("verify --theorem 3.2 --config " + data("k33_corona.json"));
    CHECK(signs.code == 0);
    CHECK(signs.json().at("signs").at("plus") == true);
    CHECK(signs.json().at("signs").at("minus") == false);
    CHECK(run("verify --theorem 3.1 --model paper4 --config " + data("k33_corona.json")).code == 1);
    CHECK(run("verify --theorem 4.1 --config " + data("k33_p3.json")).code == 2);
    const Run sw = run("verify --theorem seidel-switching --input " + data("switching_example.hg") + " --plan " +
                       data("switching_plan.json"));
    CHECK(sw.code == 0);
    CHECK(sw.json().at("mate") == true);
  }

  TEST_CASE("batch verify keeps input order") {
    const std::string args = "verify --theorem 3.1 --config " + data("k33_corona.json") + " --config " +
                             data("two_triples_k33.json") + " --config " + data("k33_p3.json");
    const Run one = run(args);
    const Run four = run(args + " --jobs 4");
    CHECK(one.out == four.out);
    CHECK(one.code == four.code);
  }

  TEST_CASE("output is deterministic") {
    for (const std::string& args :
         {"spectrum " + data("two_triples.hg"), "corona --config " + data("two_triples_k33.json") + " --emit spectrum",
          "corona-iter --base " + data("k33.hg") + " --depth 3 --emit spectrum",
          "certify --kind seidel " + data("k33.hg") + " " + data("k33.hg")}) {
      const Run a = run(args), b = run(args);
      CHECK(a.out == b.out);
      CHECK(a.code == b.code);
    }
  }

  TEST_CASE("corona-iter") {
    const Json report = run("corona-iter --base " + data("k33.hg") + " --depth 2").json();
    CHECK(report.at("size").at("combinatorial") == "13");
    CHECK(report.at("size").at("discrepancy") == true);
    const Run hg = run("corona-iter --base " + data("k33.hg") + " --depth 3 --emit hg");
    CHECK(parse_hg(hg.out).order() == 48);
    CHECK(run("corona-iter --base " + data("k33.hg") + " --depth 0").code == 3);
  }

  TEST_CASE("switch and certify") {
    const fs::path dir = scratch("switch");
    REQUIRE(run("switch --input " + data("switching_example.hg") + " --plan " + data("switching_plan.json") +
                " --emit " + dir.string())
                .code == 0);
    const fs::path out = dir / "switching_example_switched.hg";
    REQUIRE(fs::exists(out));
    CHECK(fs::exists(dir / "certificate.json"));
    const Run mate = run("certify --kind seidel " + data("switching_example.hg") + " " + out.string());
    CHECK(mate.code == 0);
    CHECK(mate.json().at("result").at("mate") == true);
    CHECK(run("certify --kind adjacency " + data("k33.hg") + " " + data("k33.hg")).code == 1);
  }
}
