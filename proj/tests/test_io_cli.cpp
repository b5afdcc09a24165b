#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "factperm/fincat.hpp"
#include "factperm/io.hpp"
#include "factperm/suite.hpp"
#include "support/fixtures.hpp"

using namespace factperm;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

std::string fixture_path(const std::string& name) {
  return std::string(FACTPERM_FIXTURE_DIR) + "/" + name;
}

int run_cli(const std::string& args, std::string* out = nullptr) {
  std::string cmd = std::string(FACTPERM_BIN) + " " + args;
  if (out) {
    std::string tmp = std::string("/tmp/factperm_cli_out_") + std::to_string(rand());
    cmd += " > " + tmp + " 2>&1";
    int rc = std::system(cmd.c_str());
    *out = slurp(tmp);
    std::remove(tmp.c_str());
    return WEXITSTATUS(rc);
  }
  cmd += " > /dev/null 2>&1";
  return WEXITSTATUS(std::system(cmd.c_str()));
}

}  // namespace

TEST_CASE("fixture files agree with the in-code builders") {
  auto check_equal = [](const permcat::PermRelCategory& a, const permcat::PermRelCategory& b) {
    CHECK(a.cat().mor_dom == b.cat().mor_dom);
    CHECK(a.cat().mor_cod == b.cat().mor_cod);
    CHECK(a.cat().compose_table == b.cat().compose_table);
    CHECK(a.base->weq == b.base->weq);
    CHECK(a.unit == b.unit);
    CHECK(a.tensor_obj == b.tensor_obj);
    CHECK(a.tensor_mor == b.tensor_mor);
    CHECK(a.braid == b.braid);
  };
  check_equal(*io::permcat_from_json(slurp(fixture_path("z2.json"))), *fixtures::z2());
  check_equal(*io::permcat_from_json(slurp(fixture_path("maxposet.json"))),
              *fixtures::maxposet(false));
  check_equal(*io::permcat_from_json(slurp(fixture_path("maxposet_full.json"))),
              *fixtures::maxposet(true));
  check_equal(*io::permcat_from_json(slurp(fixture_path("indiscrete2.json"))),
              *fixtures::indiscrete2());
  check_equal(*io::permcat_from_json(slurp(fixture_path("bz2_group.json"))), *fixtures::bz2());
}

TEST_CASE("json round trips") {
  auto mp = fixtures::maxposet(true);
  auto back = io::permcat_from_json(io::permcat_to_json(*mp));
  CHECK(back->cat().compose_table == mp->cat().compose_table);
  CHECK(back->tensor_mor == mp->tensor_mor);
  CHECK(back->base->weq == mp->base->weq);

  auto cat = fixtures::arrow();
  auto cback = io::category_from_json(io::category_to_json(*cat));
  CHECK(cback->mor_dom == cat->mor_dom);
  CHECK(cback->compose_table == cat->compose_table);
}

TEST_CASE("malformed input is rejected with a location") {
  CHECK_THROWS_AS(io::category_from_json("{ not json"), ValidationError);
  CHECK_THROWS_AS(io::permcat_from_json("{\"objects\": [\"x\"]}"), ValidationError);
  // unknown morphism reference
  std::string bad = R"({"objects":["x"],"morphisms":[{"id":"id","dom":"x","cod":"x"}],
    "identities":{"x":"nope"},"compose":[]})";
  CHECK_THROWS_AS(io::category_from_json(bad), ValidationError);
}

TEST_CASE("dot export of the twisted arrow category") {
  fincat::TwistedArrowCategory tw = fincat::twisted_arrow(fixtures::arrow());
  std::string dot = io::category_to_dot(*tw.cat);
  // 3 nodes, 2 non-identity edges
  CHECK(std::count(dot.begin(), dot.end(), '[') == 5);
  size_t edges = 0;
  for (size_t at = dot.find("->"); at != std::string::npos; at = dot.find("->", at + 1)) ++edges;
  CHECK(edges == 2);

  auto mp = fixtures::maxposet(true);
  std::string marked = io::category_to_dot(mp->cat(), &mp->base->weq);
  CHECK(marked.find("style=bold") != std::string::npos);
}

TEST_CASE("report emitters are stable") {
  Report a;
  a.check = "demo/one";
  a.bounds = "n<=2";
  Report b;
  b.check = "demo/two";
  b.fail("witness 42");
  std::string text = io::reports_to_text({a, b});
  CHECK(text.find("[PASS] demo/one") != std::string::npos);
  CHECK(text.find("[FAIL] demo/two") != std::string::npos);
  CHECK(text.find("witness 42") != std::string::npos);
  std::string json1 = io::reports_to_json("cfg", {a, b});
  std::string json2 = io::reports_to_json("cfg", {a, b});
  CHECK(json1 == json2);
  CHECK(json1.find("\"pass\": false") != std::string::npos);
}

TEST_CASE("cli: the full suite passes on the corpus") {
  CHECK(run_cli("check " + fixture_path("z2.json")) == 0);
}

TEST_CASE("cli: selected groups and exit codes") {
  CHECK(run_cli("check " + fixture_path("maxposet.json") + " --select probe") == 0);
  CHECK(run_cli("check " + fixture_path("maxposet.json") + " --select permcat,probe") == 0);
  CHECK(run_cli("check " + fixture_path("maxposet.json") + " --select nonsense") == 2);
  CHECK(run_cli("probe-initial " + fixture_path("indiscrete2.json")) == 0);
  CHECK(run_cli("roundtrip " + fixture_path("maxposet.json") + " --n 2") == 0);
}

TEST_CASE("cli: malformed input exits with 2") {
  std::string tmp = "/tmp/factperm_bad_fixture.json";
  std::ofstream(tmp) << "{ not json";
  std::string out;
  CHECK(run_cli("check " + tmp, &out) == 2);
  CHECK(out.find("invalid input") != std::string::npos);
  std::remove(tmp.c_str());
}

TEST_CASE("cli: finstar utilities") {
  std::string out;
  CHECK(run_cli("finstar classify --map \"2 1 : 1 0\"", &out) == 0);
  CHECK(out.find("strongly_inert=1") != std::string::npos);
  CHECK(run_cli("finstar factorize --map \"3 1 : 1 0 1\"", &out) == 0);
  CHECK(out.find("3 2 : 1 0 2") != std::string::npos);
  CHECK(run_cli("finstar enumerate --bound 1", &out) == 0);
  CHECK(out.find("objects 3") != std::string::npos);
}

TEST_CASE("cli: sset homology") {
  std::string out;
  CHECK(run_cli("sset homology " + fixture_path("indiscrete2.json") + " --dim 2", &out) == 0);
  CHECK(out.find("pi0=1 h1_rank=0 torsion=[]") != std::string::npos);
}

TEST_CASE("cli: exports parse back and stay byte-stable") {
  std::string a, b;
  CHECK(run_cli("export " + fixture_path("z2.json") + " --entity perm --format json", &a) == 0);
  CHECK(run_cli("export " + fixture_path("z2.json") + " --entity perm --format json", &b) == 0);
  CHECK(a == b);
  auto parsed = io::permcat_from_json(a);
  CHECK(parsed->cat().objects() > 0);
  CHECK(run_cli("export " + fixture_path("z2.json") + " --entity tw --format dot", &a) == 0);
  CHECK(a.find("digraph") != std::string::npos);
  CHECK(run_cli("export " + fixture_path("z2.json") + " --entity nowhere", &a) == 2);
}

TEST_CASE("cli: algebra dumps and witness files") {
  std::string out;
  CHECK(run_cli("export " + fixture_path("z2.json") + " --entity algebras --n 1", &out) == 0);
  CHECK(out.find("\"struct\"") != std::string::npos);
  CHECK(run_cli("segal " + fixture_path("z2.json") + " --n 1 --format json", &out) == 0);
  CHECK(out.find("\"zz_gf\"") != std::string::npos);
}

TEST_CASE("cli: environment bound override") {
  std::string out;
  std::string cmd = "FACTPERM_MAX_N=2 " + std::string(FACTPERM_BIN) + " fact " +
                    fixture_path("z2.json");
  std::string tmp = "/tmp/factperm_env_out.txt";
  REQUIRE(WEXITSTATUS(std::system((cmd + " > " + tmp + " 2>&1").c_str())) == 0);
  out = slurp(tmp);
  std::remove(tmp.c_str());
  CHECK(out.find("max_n=2") != std::string::npos);
}

TEST_CASE("library-level suite is deterministic") {
  suite::RunConfig cfg;
  cfg.max_n = 2;
  cfg.select = {"permcat", "probe", "fact"};
  auto fx = fixtures::maxposet(false);
  std::string r1 = io::reports_to_json(cfg.note(), suite::run_suite(fx, cfg));
  std::string r2 = io::reports_to_json(cfg.note(), suite::run_suite(fx, cfg));
  CHECK(r1 == r2);
}
