#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "modcube/cli.hpp"
#include "modcube/error.hpp"

using namespace modcube;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string line(const std::string& s) { return s.substr(0, s.find('\n')); }

}  // namespace

TEST_CASE("documented examples") {
  const auto d = call({"derive", "--mode", "dcmd", "--arity", "2", "--depth", "2"});
  CHECK(d.code == 0);
  CHECK(d.out.find("box_1 box_0 A -> box_0 box_1 A  [RestrictedPersistency") != std::string::npos);
  const auto t = call({"transpose", "--mode", "sdcmd", "--arity", "3", "s1", "d[2;(1;1)]"});
  CHECK(t.code == 0);
  CHECK(line(t.out) == "d[2;(0;0)]");
  CHECK(line(call({"normalize", "box_{eps;0} A"}).out) == "box_0 A");
}

TEST_CASE("worked compositions") {
  CHECK(line(call({"compose", "--mode", "dcmd", "--arity", "2", "d[1;0]", "d[1;0]", "--dir", "0"})
                 .out) == "d[1;(0;0)]");
  CHECK(line(call({"compose", "--mode", "sdcmd", "--arity", "3", "d[0;1]", "d[0;2]", "--dir", "1"})
                 .out) == "d[0;(2;1)]");
  const auto h = call({"compose", "--mode", "dcmd", "--arity", "3", "d[2;0]", "d[2;1]", "--op", "h",
                       "--json"});
  REQUIRE(h.code == 0);
  const auto j = nlohmann::json::parse(h.out);
  CHECK(j.at("label") == "d[2;(1;0)]");
}

TEST_CASE("SEnt transpositions report kind changes") {
  const auto r = call({"transpose", "--mode", "sent", "--arity", "2", "s1", "d[1;0]"});
  CHECK(r.code == 0);
  CHECK(r.out.find("d[0;1]") == 0);
  CHECK(r.out.find("kind changed: diabox -> boxdia") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(call({"--help"}).code == 0);
  CHECK(call({}).code == 2);
  CHECK(call({"frobnicate"}).code == 2);
  CHECK(call({"derive", "--mode", "nosuch"}).code == 2);
  CHECK(call({"derive", "--depth", "x"}).code == 2);
  const auto bad = call({"compose", "--mode", "dcmd", "d[0;1]", "d[0;1]", "--dir", "0"});
  CHECK(bad.code == 1);
  CHECK(bad.err.find("error (ordering-violation)") == 0);
  const auto syn = call({"normalize", "box_0 B"});
  CHECK(syn.code == 1);
  CHECK(syn.err.find("error (syntax)") == 0);
  CHECK(call({"transpose", "--mode", "dcmd", "s1", "d[1;0]"}).code == 1);
  CHECK(call({"verify", "--mode", "dcmd", "d[1;0]", "--kind", "dia"}).code == 1);
  CHECK(call({"compose", "--mode", "dcmd", "d[1;0]", "d[1;0]"}).code == 2);
  CHECK(call({"kripke", "--axiom", "box_0 A -> A", "--frame", "/nonexistent/frame.json"}).code == 1);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::vector<std::string>> cmds{
      {"derive", "--mode", "sent", "--arity", "3", "--json"},
      {"verify", "--mode", "ent", "--arity", "4", "h(d[3;0],d[3;2])", "--json"},
      {"diff", "--mode", "sdmnd", "--arity", "3"},
      {"kripke", "--axiom", "box_0 A -> box_0 box_0 A", "--sample", "200", "--seed", "5",
       "--max-worlds", "4"}};
  for (const auto& c : cmds) {
    const auto a = call(c), b = call(c);
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("normalize is idempotent") {
  for (const char* s : {"box_{eps;0} A", "(0;(1;eps));2", "dia_(1;1) A -> box_eps A", "eps",
                        "box_{2;eps;1} dia_0 A"}) {
    const auto once = line(call({"normalize", s}).out);
    CHECK(line(call({"normalize", once}).out) == once);
  }
}

TEST_CASE("JSON outputs parse and follow their schemas") {
  const auto d = nlohmann::json::parse(
      call({"derive", "--mode", "ent", "--arity", "2", "--depth", "2", "--json"}).out);
  REQUIRE(d.is_array());
  for (const auto& e : d) {
    CHECK(e.contains("sentence"));
    CHECK((e.at("geach").is_null() || e.at("geach").size() == 4));
    CHECK(e.contains("family"));
    CHECK(e.at("witness").contains("term"));
  }
  const auto v = nlohmann::json::parse(
      call({"verify", "--mode", "dcmd", "--arity", "3", "v(d[1;0],d[2;0])", "--json"}).out);
  CHECK(v.at("proven") == true);
  for (const auto& diag : v.at("diagrams"))
    for (const auto& step : diag.at("path")) CHECK(step.contains("rule"));
  const auto k = nlohmann::json::parse(call({"kripke", "--axiom", "box_0 A -> A", "--json"}).out);
  CHECK(k.at("countermodel").at("frame").at("worlds") == 1);
  const auto none =
      nlohmann::json::parse(call({"kripke", "--axiom", "box_0 A -> box_0 A", "--json"}).out);
  CHECK(none.at("countermodel").is_null());
  const auto df = nlohmann::json::parse(call({"diff", "--mode", "sdcmd", "--arity", "2", "--json"}).out);
  CHECK(df.at("flagged") == 1);
}

TEST_CASE("kripke checks a frame file") {
  const std::string path = "test_cli_frame.json";
  {
    std::ofstream f(path);
    f << R"({"worlds": 2, "relations": {"0": [[0, 1], [1, 1]]}})";
  }
  const auto r = call({"kripke", "--axiom", "box_0 A -> A", "--frame", path});
  CHECK(r.code == 0);
  CHECK(r.out.find("not valid") != std::string::npos);
  CHECK(r.out.find("geach condition: fails") != std::string::npos);
  const auto t = call({"kripke", "--axiom", "box_0 A -> box_0 box_0 A", "--frame", path});
  CHECK(t.out.find(": valid") != std::string::npos);
  std::remove(path.c_str());
}

TEST_CASE("law expressions") {
  const CategoryMode m(ModeKind::DCmd, 4);
  CHECK(render(parse_law_expr("h(h(d[3;0],d[3;1]),d[3;2])", m).label) == "d[3;(2;1;0)]");
  CHECK(render(parse_law_expr("runit[(1;0)]", m).label) == "d[eps;(1;0)]");
  CHECK_THROWS_AS(parse_law_expr("h(d[3;0]", m), ParseError);
  CHECK_THROWS_AS(parse_law_expr("x(d[3;0],d[3;1])", m), ParseError);
}
