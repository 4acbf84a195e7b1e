#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "pathforge/cli.hpp"

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = pathforge::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json golden(const std::string& name) {
  std::ifstream in(std::string(PATHFORGE_GOLDEN_DIR) + "/" + name);
  REQUIRE(in.good());
  return json::parse(in);
}

}  // namespace

TEST_CASE("enumerate") {
  const auto count = run({"enumerate", "--kind", "dyck", "--k", "3", "--count-only"});
  CHECK(count.code == 0);
  CHECK(json::parse(count.out)["count"] == 5);
  CHECK_FALSE(json::parse(count.out).contains("paths"));

  const auto listed = run({"enumerate", "--kind", "dyck", "--k", "3"});
  CHECK(json::parse(listed.out) == golden("enumerate_dyck_3.json"));

  const auto csv = run({"enumerate", "--kind", "altmotzkin", "--k", "2", "--format", "csv"});
  CHECK(csv.out == "kind,k,path,R,V,L,r\naltmotzkin,2,LUDL,1;0,4;1;0,1;0,1\naltmotzkin,2,LLLL,0;0,5;0;0,2;0,0\n");
}

TEST_CASE("stats") {
  const auto r = run({"stats", "--path", "UDUDUD"});
  CHECK(r.code == 0);
  CHECK(json::parse(r.out) == golden("stats_UDUDUD.json"));
  const auto lud = json::parse(run({"stats", "--path", "LUDL"}).out);
  CHECK(lud["kind"] == "altmotzkin");
  CHECK(run({"stats", "--path", "LUDL", "--kind", "dyck"}).code == 2);
}

TEST_CASE("map and invert") {
  const auto b = run({"map", "--construction", "B"});
  CHECK(b.code == 0);
  CHECK(json::parse(b.out)["path"] == "UUDDUD");
  CHECK(json::parse(b.out) == golden("map_B_default.json"));

  const auto a = run({"map", "--construction", "A", "--input",
                      R"({"p1":"UDUD","p2":"UUDD","i":0,"mark1":1,"mark2":4})"});
  CHECK(json::parse(a.out)["path"] == "UUUDDUDD");
  CHECK(json::parse(a.out)["middle_altitude"] == 2);

  const auto inv = run({"invert", "--construction", "A", "--path", "UUUDDUDD"});
  CHECK(inv.code == 0);
  CHECK(json::parse(inv.out) == golden("invert_A_UUUDDUDD.json"));

  const auto bad = run({"invert", "--construction", "A", "--path", "UDUD"});
  CHECK(bad.code == 2);
  CHECK(bad.err.find("not in the image") != std::string::npos);
  CHECK(run({"map", "--construction", "A", "--input", "{nope"}).code == 2);
  CHECK(run({"map", "--construction", "A", "--input", R"({"p1":"UD","p2":"UD","i":0,"mark1":2,"mark2":2})"}).code == 2);
}

TEST_CASE("verify") {
  const auto one = run({"verify", "--identity", "1", "--k-max", "3"});
  CHECK(one.code == 0);
  const auto j = json::parse(one.out);
  CHECK(j["reports"].size() == 3);
  CHECK(j["reports"][2]["lhs"] == "107/25");
  CHECK(j["holds"] == true);

  const auto all = run({"verify", "--identity", "1", "--identity", "2", "--identity", "3", "--identity", "4",
                        "--identity", "5", "--k-max", "6"});
  CHECK(all.code == 0);
  CHECK(json::parse(all.out)["holds"] == true);

  const auto forced = run({"verify", "--identity", "4", "--k-max", "3", "--rhs-index", "k"});
  CHECK(forced.code == 1);

  const auto csv = run({"verify", "--identity", "2", "--k-max", "1", "--format", "csv"});
  CHECK(csv.out == "id,k,rhs_index,lhs,rhs,equal,expected\n2,1,,5,5,true,true\n");

  const auto empty = run({"verify", "--identity", "1", "--k-max", "0"});
  CHECK(json::parse(empty.out)["reports"].empty());
}

TEST_CASE("walk") {
  const auto to = json::parse(run({"walk", "--to", "--path", "LUDL"}).out);
  CHECK(to["walk"] == "0,0,1,0,0");
  CHECK(to["loops"] == json::array({2, 0}));
  const auto from = json::parse(run({"walk", "--from", "--walk", "0,1,2,1,0,1,0"}).out);
  CHECK(from["path"] == "UUDDUD");
  CHECK(from["kind"] == "dyck");
  CHECK(run({"walk", "--to", "--from", "--path", "UD"}).code == 2);
  CHECK(run({"walk", "--from", "--walk", "0,2,0"}).code == 2);
}

TEST_CASE("mc") {
  const auto r = run({"mc", "--ensemble", "wigner", "--k", "2", "--n", "20", "--trials", "3", "--seed", "7"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["ensemble"] == "wigner");
  CHECK(j["trials"] == 3);
  CHECK(j["target"] == doctest::Approx(1.0));
  CHECK(run({"mc", "--ensemble", "wigner", "--k", "2", "--n", "20", "--trials", "3", "--seed", "7"}).out == r.out);
  CHECK(run({"mc", "--ensemble", "wishart", "--k", "2", "--n", "20"}).code == 2);  // needs --m
}

TEST_CASE("report") {
  const auto r = run({"report", "--k", "3"});
  CHECK(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["dyck"]["count"] == "5");
  CHECK(j["dyck"]["E_R"] == json::array({"9/5", "1", "1/5"}));
  CHECK(j["walks"]["square_average_time"] == "429/25");
  CHECK(j["identities"].size() == 7);
}

TEST_CASE("usage errors exit with status 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"enumerate", "--kind", "dyck"}).code == 2);
  CHECK(run({"enumerate", "--kind", "bogus", "--k", "3"}).code == 2);
  CHECK(run({"enumerate", "--kind", "dyck", "--k", "3", "--bogus"}).code == 2);
  CHECK(run({"verify", "--identity", "9", "--k-max", "3"}).code == 2);
  CHECK(run({"map", "--construction", "B", "--format", "csv"}).code == 2);
  const auto bad_path = run({"stats", "--path", "UXD"});
  CHECK(bad_path.code == 2);
  CHECK(bad_path.err.find("invalid character") != std::string::npos);
  CHECK(run({"--help"}).code == 0);
}
