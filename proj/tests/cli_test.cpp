#include <doctest.h>

#include <sstream>

#include "pnc/cli.hpp"
#include "pnc/json_io.hpp"

using namespace pnc;

namespace {

struct RunResult {
  int code;
  json out;       // first stdout line parsed as JSON (when any)
  std::string raw;
};

RunResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = run_cli(args, out, err);
  RunResult r{code, json(), out.str()};
  std::string first;
  std::getline(std::istringstream(r.raw), first);
  if (!first.empty() && (first[0] == '{' || first[0] == '[')) r.out = json::parse(first);
  return r;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("validate") {
  RunResult r = run({"validate", "--omega", "[2,3,1]"});
  CHECK(r.code == 0);
  CHECK(r.out["is_key"] == true);
  CHECK(r.out["is_primitive"] == true);
  CHECK(r.out["is_algebraic"] == true);
  CHECK(r.out["is_essential"] == true);
  CHECK(r.out["is_normal_form"] == true);
}

TEST_CASE("classify") {
  RunResult r = run({"classify", "--omega", "[4,6,3,3]"});
  CHECK(r.code == 0);
  CHECK(r.out["p_g"] == 1);
  CHECK(r.out["is_elliptic"] == true);
}

TEST_CASE("keyforms and semidegree") {
  RunResult r = run({"keyforms", "--omega", "[2,3,1]", "--theta", "[1]"});
  CHECK(r.code == 0);
  CHECK(r.out["g"][2] == json::parse("[[1,1,0,2],[-1,1,3,0]]"));
  CHECK(r.out["class"] == "algebraic");

  r = run({"semidegree", "--omega", "[2,3,1]", "--theta", "[1]", "--poly",
           "[[1,1,0,4]]"});
  CHECK(r.code == 0);
  CHECK(r.out["semidegree"] == 12);
}

TEST_CASE("normalize") {
  RunResult r = run({"normalize", "--series",
                     "{\"body\":[[1,1,3,2],[1,1,1,1]],\"r\":[-1,1]}"});
  CHECK(r.code == 0);
  CHECK(r.out["omega"] == json::parse("[2,3,1]"));
}

TEST_CASE("brenton") {
  RunResult r = run({"brenton", "--bound", "6"});
  CHECK(r.code == 0);
  REQUIRE(r.out["families"].size() == 8);
  CHECK(r.out["families"][3]["members"] == json::parse("[[2,3,1]]"));
}

TEST_CASE("enumerate streams and re-validates") {
  RunResult r = run({"enumerate", "--max-entry", "3", "--max-length", "3",
                     "--filter", "normal,primitive"});
  CHECK(r.code == 0);
  std::istringstream lines(r.raw);
  std::string line;
  std::vector<std::vector<long long>> seqs;
  while (std::getline(lines, line)) {
    json j = json::parse(line);
    std::vector<long long> w = j["omega"].get<std::vector<long long>>();
    SequenceClass c = validate(w);
    CHECK(c.is_key);
    CHECK(c.is_primitive);
    CHECK(c.is_normal_form);
    seqs.push_back(w);
  }
  auto has = [&](std::vector<long long> w) {
    return std::find(seqs.begin(), seqs.end(), w) != seqs.end();
  };
  CHECK(has({1, 1}));
  CHECK(has({1, 2}));
  CHECK(has({1, 3}));
  CHECK(has({2, 3, 1}));
  CHECK(has({2, 3, 2}));
  CHECK(has({2, 3, 3}));
  CHECK(std::is_sorted(seqs.begin(), seqs.end()));

  // sharding preserves the order and the multiset
  RunResult sharded = run({"enumerate", "--max-entry", "3", "--max-length", "3",
                           "--filter", "normal,primitive", "--jobs", "3"});
  CHECK(sharded.raw == r.raw);
}

TEST_CASE("enumerate finds the non-algebraic witness") {
  RunResult r = run({"enumerate", "--max-entry", "12", "--max-length", "4",
                     "--filter", "non-algebraic,normal,primitive"});
  CHECK(r.code == 0);
  CHECK(r.raw.find("[9,12,2,1]") != std::string::npos);
}

TEST_CASE("enumerate at entry bound 1") {
  RunResult r = run({"enumerate", "--max-entry", "1", "--max-length", "2"});
  CHECK(r.code == 0);
  std::istringstream lines(r.raw);
  std::string line;
  std::vector<std::string> all;
  while (std::getline(lines, line)) all.push_back(line);
  // omega_0 = 1 with |omega_1| <= 1: three valid sequences, (1,1) among them
  CHECK(std::count(all.begin(), all.end(), "{\"omega\":[1,1]}") == 1);
  CHECK(r.raw.find("[1,-1]") != std::string::npos);
  CHECK(r.raw.find("[1,0]") != std::string::npos);
}

TEST_CASE("curve moduli accepts the one-entry line") {
  RunResult r = run({"moduli", "--omega", "[1]", "--curve"});
  CHECK(r.code == 0);
  CHECK(r.out["m"] == 0);
}

TEST_CASE("normalize rejects swap-needed series with a domain error") {
  RunResult r = run({"normalize", "--series", "{\"body\":[],\"r\":[2,3]}"});
  CHECK(r.code == 1);
  CHECK(r.out["error"]["code"] == "NotNormalizable");
}

TEST_CASE("moduli subcommand modes") {
  RunResult r = run({"moduli", "--omega", "[2,3,1]"});
  CHECK(r.code == 0);
  CHECK(r.out["torus_dim"] == 0);

  r = run({"moduli", "--omega", "[2,3,1]", "--essential"});
  CHECK(r.code == 0);
  CHECK(r.out["m"] == 1);

  r = run({"moduli", "--omega", "[2,3]", "--curve"});
  CHECK(r.code == 0);
  CHECK(r.out["b_slot_action"] == json::parse("[2,0]"));
}

TEST_CASE("exit codes") {
  RunResult r = run({"classify", "--omega", "[1,0]"});
  CHECK(r.code == 1);  // domain error: not primitive
  CHECK(r.out["error"]["code"] == "NonPrimitive");

  r = run({"classify"});
  CHECK(r.code == 2);  // missing required flag

  r = run({"frobnicate"});
  CHECK(r.code == 2);

  r = run({"validate", "--omega", "not-json"});
  CHECK(r.code == 2);

  r = run({"enumerate", "--max-entry", "99999"});
  CHECK(r.code == 1);  // BoundsTooLarge is a domain error
  CHECK(r.out["error"]["code"] == "BoundsTooLarge");
}

TEST_CASE("selftest") {
  RunResult r = run({"selftest"});
  CHECK(r.code == 0);
  CHECK(r.out["selftest"] == "ok");
}

TEST_CASE("json round-trips for polynomials and series") {
  LaurentPoly f = LaurentPoly::monomial(rat(-7, 3), -2, 4) + LaurentPoly::x(5) +
                  LaurentPoly::constant(rat(1, 2));
  CHECK(poly_from_json(to_json(f)) == f);

  GenericSeries s;
  s.body[rat(3, 2)] = rat(1);
  s.body[rat(-22, 9)] = rat(1, 3);
  s.r = rat(-3);
  GenericSeries back = series_from_json(to_json(s));
  CHECK(back.body == s.body);
  CHECK(back.r == s.r);
}

TEST_CASE("help exits cleanly") {
  RunResult r = run({"--help"});
  CHECK(r.code == 0);
}

TEST_CASE("emitted reports re-parse") {
  for (auto args : std::vector<std::vector<std::string>>{
           {"classify", "--omega", "[2,3,1]"},
           {"aut", "--omega", "[9,12,2,1]"},
           {"g2a", "--omega", "[2,3]"},
           {"curve-infinity", "--omega", "[2,3,1]"},
           {"equations", "--omega", "[2,3,5]", "--theta", "[1]"}}) {
    RunResult r = run(args);
    CHECK(r.code == 0);
    CHECK_FALSE(r.out.is_null());
  }
}

}  // TEST_SUITE
