#include <doctest.h>

#include <json.hpp>

#include <set>
#include <sstream>

#include "nilhoro/cli.hpp"

using nlohmann::json;

namespace {

struct RunResult {
  int code = 0;
  std::string out;
  std::string err;
};

RunResult run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "nilhoro");
  std::ostringstream out, err;
  const int code = nilhoro::cli::run(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("dist prints the distance with its branch") {
  const auto r = run_cli({"dist", "--group", "h3", "--element", "0,0,1"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("d") == 4);
  CHECK(doc.at("case") == "I1");
}

TEST_CASE("dist --oracle reports both routes") {
  const auto r = run_cli({"dist", "--group", "h3", "--element", "1,0,4", "--oracle"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("d") == 7);
  CHECK(doc.at("oracle") == 7);
}

TEST_CASE("dist handles values past 64 bits as decimal strings") {
  const auto r =
      run_cli({"dist", "--group", "h3", "--element", "0,0,123456789123456789123456789"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("element").at("z").is_string());
  CHECK(doc.at("d").is_number_integer());
}

TEST_CASE("dist on the class-3 group uses the oracle") {
  const auto r = run_cli({"dist", "--group", "example1", "--element", "0,0,1,0,0",
                          "--radius", "6"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("d") == 4);
  const auto beyond =
      run_cli({"dist", "--group", "example1", "--element", "1,0,0,0,0", "--radius", "4"});
  CHECK(beyond.code == 0);
  const auto doc = json::parse(beyond.out);
  CHECK(doc.at("d").is_null());
  CHECK(doc.at("beyond_radius") == true);
}

TEST_CASE("dist on z^d and custom generating sets") {
  const auto r = run_cli({"dist", "--group", "z2", "--element", "3,4"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out).at("d") == 7);

  const auto hex = run_cli({"polytope", "--group", "z2", "--gens",
                            "1,0;-1,0;0,1;0,-1;1,1;-1,-1"});
  CHECK(hex.code == 0);
  const auto doc = json::parse(hex.out);
  CHECK(doc.at("facets").size() == 6);
  CHECK(doc.at("vertices").size() == 6);

  // the diagonal generator shortens the diagonal walk
  const auto diag = run_cli({"dist", "--group", "z2", "--gens",
                             "1,0;-1,0;0,1;0,-1;1,1;-1,-1", "--element", "3,4"});
  CHECK(json::parse(diag.out).at("d") == 4);

  CHECK(run_cli({"dist", "--group", "z2", "--gens", "1,0;0,1", "--element", "1,1"}).code ==
        2);
}

TEST_CASE("ball output is sorted and deterministic") {
  const auto r1 = run_cli({"ball", "--group", "h3", "--radius", "2"});
  const auto r2 = run_cli({"ball", "--group", "h3", "--radius", "2"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  const auto doc = json::parse(r1.out);
  CHECK(doc.at("size") == 17);
  CHECK(doc.at("elements").size() == 17);

  const auto csv = run_cli({"ball", "--group", "z2", "--radius", "1", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(csv.out == "v0,v1,d\n0,0,0\n-1,0,1\n0,-1,1\n0,1,1\n1,0,1\n");
}

TEST_CASE("geodesic check and enumeration") {
  const auto check = run_cli({"geodesic", "--group", "h3", "--word", "abab", "--check"});
  CHECK(check.code == 0);
  CHECK(json::parse(check.out).at("geodesic") == true);

  const auto bad = run_cli({"geodesic", "--group", "h3", "--word", "aA", "--check"});
  CHECK(json::parse(bad.out).at("geodesic") == false);

  const auto list = run_cli({"geodesic", "--group", "h3", "--to", "0,0,1", "--cap", "10"});
  const auto doc = json::parse(list.out);
  CHECK(doc.at("d") == 4);
  CHECK(doc.at("words") == json::array({"ABab", "BabA", "abAB", "bABa"}));
}

TEST_CASE("horo subcommands") {
  const auto eval = run_cli({"horo", "eval", "--point", "corner:++", "--element", "1,2,7"});
  CHECK(eval.code == 0);
  CHECK(json::parse(eval.out).at("value") == -3);

  const auto act = run_cli({"horo", "act", "--point", "a:+,0,0", "--word", "ab"});
  CHECK(act.code == 0);
  CHECK(json::parse(act.out).at("result") == "a:+,1,1");

  const auto limit = run_cli({"horo", "limit", "--path", "gamma:+,2,-1"});
  CHECK(limit.code == 0);
  CHECK(json::parse(limit.out).at("point") == "a:+,2,-1");

  const auto corner = run_cli({"horo", "limit", "--path", "two:++:abba"});
  CHECK(json::parse(corner.out).at("point") == "corner:++");
}

TEST_CASE("polytope emits functionals as rational pairs") {
  const auto r = run_cli({"polytope", "--group", "h3"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("vertices").size() == 4);
  REQUIRE(doc.at("facets").size() == 4);
  CHECK(doc.at("facets")[0].at("functional")[0].size() == 2);
  std::set<std::string> alphabets;
  for (const auto& f : doc.at("facets")) alphabets.insert(f.at("alphabet"));
  CHECK(alphabets == std::set<std::string>{"ab", "Ab", "AB", "aB"});
}

TEST_CASE("verify: pass gives exit 0 and machine-readable checks") {
  const auto r = run_cli({"verify", "--suite", "example1", "--ex1-radius", "10"});
  CHECK(r.code == 0);
  const auto doc = json::parse(r.out);
  CHECK(doc.at("pass") == true);
  CHECK(doc.at("suite") == "example1");
  for (const auto& c : doc.at("checks")) {
    CHECK(c.contains("id"));
    CHECK(c.at("status") == "pass");
  }
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run_cli({"dist", "--group", "nope", "--element", "1,2,3"}).code == 2);
  CHECK(run_cli({"dist", "--group", "h3", "--element", "1,2"}).code == 2);
  CHECK(run_cli({"dist", "--group", "h3", "--element", "0,0,q"}).code == 2);
  CHECK(run_cli({"horo", "eval", "--point", "corner:xx", "--element", "0,0,0"}).code == 2);
  CHECK(run_cli({"horo", "act", "--point", "a:+,0,0"}).code == 2);
  CHECK(run_cli({"verify", "--suite", "nope"}).code == 2);
  CHECK(run_cli({"geodesic", "--group", "h3"}).code == 2);
  CHECK(run_cli({"ball", "--group", "z2", "--radius", "1", "--format", "xml"}).code == 2);
  CHECK(run_cli({}).code == 2);
  const auto r = run_cli({"dist", "--group", "nope", "--element", "1"});
  CHECK(!r.err.empty());
  CHECK(r.out.empty());
}

TEST_CASE("verify output is byte-identical across runs") {
  const auto r1 = run_cli({"verify", "--suite", "facets"});
  const auto r2 = run_cli({"verify", "--suite", "facets"});
  CHECK(r1.code == 0);
  CHECK(r1.out == r2.out);
  CHECK(json::parse(r1.out).at("pass") == true);
}

TEST_CASE("help exits 0") {
  const auto r = run_cli({"--help"});
  CHECK(r.code == 0);
  CHECK(r.out.find("Subcommands") != std::string::npos);
}

TEST_CASE("every subcommand emits valid JSON when not csv") {
  const std::vector<std::vector<std::string>> cases = {
      {"dist", "--group", "h3", "--element", "3,4,5"},
      {"ball", "--group", "h3", "--radius", "1"},
      {"geodesic", "--group", "h3", "--word", "ab", "--check"},
      {"horo", "eval", "--point", "b:-,1,2", "--element", "0,0,0"},
      {"polytope", "--group", "z2"},
  };
  for (const auto& args : cases) {
    const auto r = run_cli(args);
    CHECK(r.code == 0);
    const auto doc = json::parse(r.out);
    CHECK(doc.is_object());
  }
}
