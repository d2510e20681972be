// Runs the built workbench binary; its path and the golden directory come in
// as compile definitions.

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;
using json = nlohmann::json;

namespace {

struct Result {
  int exit = -1;
  std::string out;
  json report() const { return json::parse(out); }
};

Result run(const std::string& args) {
  const std::string cmd = std::string(WORKBENCH_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* p = popen(cmd.c_str(), "r");
  REQUIRE(p != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(p);
  r.exit = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p);
  std::stringstream s;
  s << f.rdbuf();
  return s.str();
}

fs::path scratch(const std::string& name, const std::string& text) {
  const fs::path dir = fs::temp_directory_path() / "ssg_cli_tests";
  fs::create_directories(dir);
  const fs::path p = dir / name;
  std::ofstream(p) << text;
  return p;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("null semigroup is unfaithful with witness (0, a)") {
    const auto r = run("faithful --fixture EX-NULL");
    CHECK(r.exit == 1);
    const auto j = r.report();
    CHECK(j["status"] == "fail");
    CHECK(j["result"]["witness"] == json::array({"0", "a"}));
  }

  TEST_CASE("cyclic group has four cosets and the enumerators agree") {
    const auto r = run("cosets --fixture EX-Z3");
    CHECK(r.exit == 0);
    const auto j = r.report();
    CHECK(j["result"]["count"] == 4);
    CHECK(j["status"] == "pass");
  }

  TEST_CASE("theorems pass on I_2") {
    const auto r = run("theorems --fixture EX-I2");
    CHECK(r.exit == 0);
    const auto j = r.report();
    CHECK(j["status"] == "pass");
    CHECK(j["checks"].size() > 100);
    CHECK_FALSE(j.contains("first_failure"));
  }

  TEST_CASE("every command passes on every fixture") {
    for (const char* cmd : {"validate", "cosets", "groupoid", "bundle", "filters", "theorems"})
      for (const char* fx : {"EX-NULL", "EX-CHAIN3", "EX-PS2", "EX-Z3", "EX-I2", "EX-TRIV", "EX-TWIST"}) {
        CAPTURE(cmd);
        CAPTURE(fx);
        CHECK(run(std::string(cmd) + " --fixture " + fx).exit == 0);
      }
  }

  TEST_CASE("reports are byte-identical across runs") {
    for (const char* args : {"theorems --fixture EX-Z3", "bundle --fixture EX-TRIV", "search --max-order 2"}) {
      CAPTURE(args);
      const auto a = run(args), b = run(args);
      CHECK(a.exit == b.exit);
      CHECK(a.out == b.out);
    }
    CHECK_FALSE(run("cosets --fixture EX-Z3 --timing").report()["timing_ms"].is_null());
    CHECK_FALSE(run("cosets --fixture EX-Z3").report().contains("timing_ms"));
  }

  TEST_CASE("fixture snapshots match the committed goldens") {
    for (const fs::directory_entry& e : fs::directory_iterator(GOLDEN_DIR)) {
      if (e.path().extension() != ".json") continue;
      const std::string name = e.path().stem().string();
      CAPTURE(name);
      const auto r = run("fixture --fixture " + name);
      CHECK(r.exit == 0);
      CHECK(r.out == slurp(e.path()));
    }
    CHECK(fs::exists(fs::path(GOLDEN_DIR) / "EX-NULL.json"));
  }

  TEST_CASE("input files") {
    const auto ok = scratch("null.json", R"({"order":2,"mul":[[0,0],[0,0]],"N":[0,1],"Z":[0,1],"labels":["0","a"]})");
    CHECK(run("validate --in " + ok.string()).exit == 0);
    const auto r = run("faithful --in " + ok.string());
    CHECK(r.exit == 1);
    CHECK(r.report()["result"]["witness"] == json::array({"0", "a"}));

    const auto bad = scratch("bad.json", R"({"order":2,"mul":[[1,0],[1,1]],"N":[0],"Z":[0]})");
    const auto v = run("validate --in " + bad.string());
    CHECK(v.exit == 1);
    CHECK(v.report()["error"] == "NotAssociative");
    CHECK(run("cosets --in " + bad.string()).exit == 2);

    const auto unstructured =
        scratch("unstructured.json", R"({"order":4,"mul":[[0,0,0,0],[0,1,2,3],[2,2,2,2],[2,3,0,1]],"N":[0,1],"Z":[0,1]})");
    CHECK(run("validate --in " + unstructured.string()).exit == 1);

    CHECK(run("validate --in " + scratch("garbage.json", "{not json").string()).exit == 2);
    CHECK(run("validate --in " + scratch("short.json", R"({"order":2})").string()).exit == 2);
    CHECK(run("validate --in /nonexistent/file.json").exit == 2);
  }

  TEST_CASE("exit codes for usage errors and guards") {
    CHECK(run("frobnicate").exit == 2);
    CHECK(run("").exit == 2);
    CHECK(run("cosets --fixture EX-NOPE").exit == 2);
    CHECK(run("cosets --fixture EX-I2 --max-order 5").exit == 3);
    CHECK(run("bundle --fixture EX-TRIV --max-sections 8").exit == 3);
    CHECK(run("search --max-order 6").exit == 3);
    CHECK(run("search --max-order 3 --max-relations 5").exit == 3);
    CHECK(run("search --property nope").exit == 2);
  }

  TEST_CASE("search") {
    const auto r = run("search --max-order 3 --property coset-rep-homomorphism-without-symmetry");
    CHECK(r.exit == 1);
    const auto j = r.report();
    CHECK(j["result"]["enumerated"] == 194);
    CHECK(j["result"]["applicable"] == 32);
    CHECK(j["result"]["holds"] == 0);
    CHECK(run("search --max-order 3").exit == 0);
  }

  TEST_CASE("artifacts") {
    const fs::path dir = fs::temp_directory_path() / "ssg_cli_tests";
    fs::create_directories(dir);
    const auto dot = dir / "z3.dot", out = dir / "z3.json";
    const auto r = run("groupoid --fixture EX-Z3 --dot " + dot.string() + " --json " + out.string());
    CHECK(r.exit == 0);
    CHECK(slurp(dot).find("digraph") != std::string::npos);
    CHECK(slurp(out) == r.out);
    CHECK(r.report()["artifacts"].size() >= 1);
  }
}
