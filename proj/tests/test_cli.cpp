#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sstream>

#include "frob/cli.hpp"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json parsed() const { return json::parse(out); }
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out;
  std::ostringstream err;
  const int code = frob::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fan(const std::string& name) { return std::string(FROB_DATA_DIR) + "/fans/" + name; }

}  // namespace

TEST_CASE("trunc") {
  const auto r = run({"trunc", "--c", "2", "--p", "3", "--l", "4"});
  CHECK(r.code == 0);
  const auto j = r.parsed();
  CHECK(j["dim"] == 1);
  CHECK(j["subcommand"] == "trunc");
  CHECK(j["diagnostics"].empty());
  CHECK(j["params"]["l"] == 4);

  const auto basis = run({"trunc", "--c", "2", "--p", "3", "--l", "3", "--basis"}).parsed();
  CHECK(basis["basis"] == json::parse("[[1,2],[2,1]]"));

  const auto filt = run({"trunc", "--c", "2", "--p", "2", "--filtration", "--n", "3"}).parsed();
  CHECK(filt["filtration"]["graded_ranks"] == json::parse("[2,1]"));
  CHECK(filt["filtration"]["pushforward_rank"] == 6);
}

TEST_CASE("cartier") {
  const auto j = run({"cartier", "--n", "1", "--p", "2"}).parsed();
  CHECK(j["rows"][1]["b"] == 1);
  CHECK(j["frobenius_cokernel_rank"] == 1);
  CHECK(j["consistent"] == true);

  // Ranks beyond int64 are printed as decimal strings.
  const auto big = run({"cartier", "--n", "30", "--p", "7"}).parsed();
  CHECK(big["frobenius_cokernel_rank"] == "22539340290692258087863248");
}

TEST_CASE("toric") {
  const auto dual = run({"toric", "--fan", fan("p2.json"), "--p", "2", "--op", "bx-dual-ample"});
  CHECK(dual.code == 0);
  CHECK(dual.parsed()["verdict"] == "Ample");

  const auto f1 = run({"toric", "--fan", fan("hirzebruch1.json"), "--p", "2", "--op",
                       "bx-dual-ample"})
                      .parsed();
  CHECK(f1["verdict"] == "NotAmple");
  CHECK(f1.contains("witness_summand"));

  const auto push = run({"toric", "--fan", fan("p1.json"), "--p", "2", "--op", "pushforward"})
                        .parsed();
  CHECK(push["pushforward"]["rank"] == 2);
  CHECK(push["pushforward"]["summands"][0]["divisor"] == json::parse("[0,-1]"));

  const auto coker =
      run({"toric", "--fan", fan("p2.json"), "--p", "2", "--op", "cokernel"}).parsed();
  CHECK(coker["cokernel"]["rank"] == 3);

  const auto pos = run({"toric", "--fan", fan("p1xp1.json"), "--divisor", "1,0,0,0", "--op",
                        "positivity"})
                       .parsed();
  CHECK(pos["verdict"] == "NefNotAmple");

  const auto ample = run({"toric", "--fan", fan("p2.json"), "--p", "3", "--op", "bx-ample"});
  CHECK(ample.parsed()["verdict"] == "NotAmple");
}

TEST_CASE("toric validation and invalid fans") {
  const auto ok = run({"toric", "--fan", fan("p3.json"), "--op", "validate"});
  CHECK(ok.code == 0);
  CHECK(ok.parsed()["valid"] == true);

  const auto bad = run({"toric", "--fan", fan("p2_missing_cone.json"), "--op", "validate"});
  CHECK(bad.code == 0);
  const auto j = bad.parsed();
  CHECK(j["valid"] == false);
  CHECK(j["violations"][0]["kind"] == "incomplete-facet");

  const auto rejected =
      run({"toric", "--fan", fan("p2_missing_cone.json"), "--p", "2", "--op", "cokernel"});
  CHECK(rejected.code == 1);
  CHECK_FALSE(rejected.parsed()["diagnostics"].empty());
  CHECK(rejected.parsed()["valid"] == false);

  CHECK(run({"toric", "--fan", fan("p2.json"), "--op", "cokernel"}).code == 1);  // no --p
  CHECK(run({"toric", "--fan", "/nonexistent.json", "--op", "validate"}).code == 1);
  CHECK(run({"toric", "--fan", fan("p2.json"), "--op", "explode"}).code == 1);
  CHECK(run({"toric", "--fan", fan("p2.json"), "--p", "2", "--divisor", "1,x,0", "--op",
             "pushforward"})
            .code == 1);
}

TEST_CASE("pn") {
  const auto j = run({"pn", "--n", "1", "--p", "2", "--d", "1"}).parsed();
  CHECK(j["verdict"] == "NefNotAmple");
  CHECK(j["decomposition"]["summands"] == json::parse(R"([{"multiplicity":2,"twist":0}])"));

  const auto scan = run({"pn", "--n", "2", "--p", "5", "--scan", "-3..20"}).parsed();
  CHECK(scan["min_nef_d"] == 8);
  CHECK(scan["min_ample_d"] == 13);

  const auto small = run({"pn", "--n", "2", "--p", "5", "--scan", "0..5"});
  CHECK(small.code == 1);
  CHECK(run({"pn", "--n", "2", "--p", "5"}).code == 1);
}

TEST_CASE("bott") {
  CHECK(run({"bott", "--n", "2", "--k", "1", "--j", "2", "--i", "0"}).parsed()["dim"] == 3);
  const auto reg = run({"bott", "--regularity", "--n", "5", "--k", "3"}).parsed();
  CHECK(reg["regularity"]["regular"] == true);
  CHECK(reg["regularity"]["checks"].size() == 5);
  const auto hyp =
      run({"bott", "--wedge-range", "hypersurface", "--n", "4", "--d", "2"}).parsed();
  CHECK(hyp["range"]["ample"]["lo"] == 2);
  CHECK(hyp["range"]["ample"]["hi"] == 3);
  const auto idx = run({"bott", "--wedge-range", "index", "--dimx", "2", "--a", "1"}).parsed();
  CHECK(idx["range"]["ample"]["empty"] == true);
  CHECK(run({"bott", "--n", "2", "--k", "5", "--j", "0", "--i", "0"}).code == 1);
  CHECK(run({"bott", "--n", "2", "--k", "1"}).code == 1);
}

TEST_CASE("obstruct") {
  const auto curve = run({"obstruct", "--curve-deg", "1"}).parsed();
  CHECK(curve["verdicts"][0]["verdict"] == "NotAmple");
  CHECK(curve["verdicts"][0]["trace"][0]["rule"] == "curve-obstruction");

  const auto many =
      run({"obstruct", "--subspace", "2,4", "--ci", "4:3:5", "--fano3", "quadric:2"}).parsed();
  REQUIRE(many["verdicts"].size() == 3);
  CHECK(many["verdicts"][0]["verdict"] == "Unknown");
  CHECK(many["verdicts"][1]["verdict"] == "NotAmple");
  CHECK(many["verdicts"][1]["input"]["line_count"]["exists"] == true);
  CHECK(many["verdicts"][2]["verdict"] == "Unknown");

  const auto witnessed = run({"obstruct", "--fano3", "P3:3", "--curve-deg", "2"}).parsed();
  REQUIRE(witnessed["verdicts"].size() == 1);
  CHECK(witnessed["verdicts"][0]["verdict"] == "NotAmple");

  CHECK(run({"obstruct"}).code == 1);
  CHECK(run({"obstruct", "--ci", "4:3"}).code == 1);
  CHECK(run({"obstruct", "--fano3", "cubic:3"}).code == 1);
}

TEST_CASE("exit codes and diagnostics") {
  const auto unknown = run({"frobnicate"});
  CHECK(unknown.code == 2);
  CHECK(unknown.out.empty());
  CHECK(unknown.err.find("usage") != std::string::npos);
  CHECK(run({}).code == 2);

  const auto bad_prime = run({"trunc", "--c", "2", "--p", "4", "--l", "1"});
  CHECK(bad_prime.code == 1);
  const auto j = bad_prime.parsed();
  REQUIRE(j["diagnostics"].size() == 1);
  CHECK(j["diagnostics"][0]["level"] == "error");

  const auto missing = run({"trunc", "--p", "3"});
  CHECK(missing.code == 1);
  CHECK_NOTHROW(missing.parsed());

  CHECK(run({"trunc", "--help"}).code == 0);
}

TEST_CASE("output is byte-stable") {
  const std::vector<std::vector<std::string>> commands = {
      {"toric", "--fan", fan("p1xp1.json"), "--p", "3", "--op", "cokernel"},
      {"cartier", "--n", "4", "--p", "5"},
      {"obstruct", "--ci", "5:2,2:3"},
  };
  for (const auto& cmd : commands) {
    const auto a = run(cmd);
    const auto b = run(cmd);
    CHECK(a.out == b.out);
    CHECK(a.out == a.parsed().dump() + "\n");  // keys already sorted
  }
}

TEST_CASE("human rendering") {
  const auto r = run({"trunc", "--c", "2", "--p", "3", "--l", "4", "--human"});
  CHECK(r.code == 0);
  CHECK(r.out.find("dim") != std::string::npos);
  CHECK(r.out.find('{') == std::string::npos);
}

TEST_CASE("selftest") {
  const auto r = run({"selftest"});
  CHECK(r.code == 0);
  const auto j = r.parsed();
  CHECK(j["passed"] == true);
  CHECK(j["criteria"].size() == 8);
}
