#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "axcat/cli.hpp"
#include "axcat/execution_json.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = axcat::run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string litmus(const char* name) { return std::string(AXCAT_LITMUS_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << text;
  return path.string();
}

}  // namespace

TEST_CASE("check exit codes") {
  auto sc = run({"check", litmus("sb.litmus"), "--axioms", "sc"});
  CHECK(sc.code == axcat::kExitForbidden);
  CHECK(sc.out.find("result: forbidden") != std::string::npos);

  auto scpl = run({"check", litmus("sb.litmus"), "--axioms", "scpl"});
  CHECK(scpl.code == axcat::kExitAllowed);
  CHECK(scpl.out.find("result: allowed") != std::string::npos);

  auto fw = run({"check", litmus("sb.litmus"), "--axioms", "framework", "--arch", "sb"});
  CHECK(fw.code == axcat::kExitAllowed);
}

TEST_CASE("errors exit 2 with a diagnostic") {
  auto arch = run({"check", litmus("sb.litmus"), "--arch", "power"});
  CHECK(arch.code == axcat::kExitError);
  CHECK(arch.err.find("unknown architecture 'power'") != std::string::npos);

  const auto bad = temp_file("axcat_bad.litmus", "test Bad;\nP0: { x <- ; }\n");
  auto parse = run({"check", bad});
  CHECK(parse.code == axcat::kExitError);
  CHECK(parse.err.find(":2:12:") != std::string::npos);

  CHECK(run({"check", litmus("missing.litmus")}).code == axcat::kExitError);
  CHECK(run({"check", litmus("sb.litmus"), "--axioms", "tso"}).code == axcat::kExitError);
  CHECK(run({}).code == axcat::kExitError);
  CHECK(run({"frobnicate"}).code == axcat::kExitError);
  CHECK(run({"explain", litmus("sb.litmus")}).code == axcat::kExitError);
  CHECK(run({"explain", litmus("sb.litmus"), "--outcome", "P7:r0=0"}).code ==
        axcat::kExitError);

  const auto no_exists = temp_file("axcat_noexists.litmus", "test N;\nP0: { x <- 1; }\n");
  CHECK(run({"check", no_exists}).code == axcat::kExitError);
}

TEST_CASE("help exits 0") {
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("check") != std::string::npos);
}

TEST_CASE("event cap from the environment") {
  ::setenv("AXCAT_MAX_EVENTS", "3", 1);
  auto capped = run({"check", litmus("sb.litmus")});
  ::setenv("AXCAT_MAX_EVENTS", "nope", 1);
  auto garbage = run({"check", litmus("sb.litmus")});
  ::unsetenv("AXCAT_MAX_EVENTS");
  CHECK(capped.code == axcat::kExitError);
  CHECK(capped.err.find("cap") != std::string::npos);
  CHECK(garbage.code == axcat::kExitError);
}

TEST_CASE("enumerate json") {
  const auto one = temp_file("axcat_one.litmus", "test One;\nP0: { x <- 1; }\n");
  auto r = run({"enumerate", one, "--json", "--dump-executions"});
  REQUIRE(r.code == 0);
  const auto j = axcat::Json::parse(r.out);
  CHECK(j.begin().key() == "schema");
  CHECK(j["schema"] == 1);
  CHECK(j["candidate_count"] == 1);
  CHECK(j["candidates"][0].contains("execution"));
  CHECK(j["outcomes"][0]["allowed"]["sc"] == true);
}

TEST_CASE("explain names the witness") {
  auto sc = run({"explain", litmus("sb.litmus"), "--outcome", "P0:r0=0 /\\ P1:r1=0"});
  CHECK(sc.code == axcat::kExitForbidden);
  CHECK(sc.out.find("-po->") != std::string::npos);
  CHECK(sc.out.find("-fr->") != std::string::npos);

  auto scpl = run({"explain", litmus("corr_frrf.litmus"), "--outcome", "P0:r0=1, P0:r1=0",
                   "--axioms", "scpl"});
  CHECK(scpl.code == axcat::kExitForbidden);
  CHECK(scpl.out.find("witness pair") != std::string::npos);
  CHECK(scpl.out.find("pattern CoRR-frrf") != std::string::npos);

  auto allowed = run({"explain", litmus("sb.litmus"), "--outcome", "P0:r0=0, P1:r1=1"});
  CHECK(allowed.code == axcat::kExitAllowed);
}

TEST_CASE("json is byte stable") {
  for (const char* f : {"sb.litmus", "coww.litmus", "corr_frrf.litmus"}) {
    const auto a = run({"enumerate", litmus(f), "--json", "--dump-executions"});
    const auto b = run({"enumerate", litmus(f), "--json", "--dump-executions"});
    CHECK(a.out == b.out);
    const auto c = run({"check", litmus(f), "--axioms", "framework", "--json"});
    const auto d = run({"check", litmus(f), "--axioms", "framework", "--json"});
    CHECK(c.out == d.out);
  }
}
