#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli_app.hpp"
#include "lefzeta/lefzeta.hpp"

using namespace lefzeta;
using io::json;

namespace {

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run_cli(std::move(args), out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path dir = fs::temp_directory_path() / "lefzeta-cli-tests";
  fs::create_directories(dir);
  const fs::path path = dir / name;
  std::ofstream file(path);
  file << content;
  return path.string();
}

const char* kTorusAction =
    R"({"dim":2,"maps":[{"degree":0,"matrix":[["1"]]},)"
    R"({"degree":1,"matrix":[["2","1"],["1","1"]]},)"
    R"({"degree":2,"matrix":[["1"]]}]})";

}  // namespace

TEST_CASE("knot alexander prints exact golden bytes", "[cli]") {
  const CliResult r = run({"knot", "alexander", "1 1 1"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "{\"coefficients\":[\"1\",\"-1\",\"1\"],\"b1\":2}\n");
  REQUIRE(r.err.empty());

  const CliResult again = run({"knot", "alexander", "1 1 1"});
  REQUIRE(again.out == r.out);  // byte-identical reruns
}

TEST_CASE("knot verify reports the functional equation", "[cli]") {
  const CliResult r = run({"knot", "verify", "1 -2 1 -2"});
  REQUIRE(r.code == 0);
  const json j = json::parse(r.out);
  REQUIRE(j.at("holds").get<bool>());
  REQUIRE(j.at("lambda").get<std::string>() == "1");
  REQUIRE(j.at("chi").get<int>() == -1);
  REQUIRE(j.at("lhs") == j.at("rhs"));
}

TEST_CASE("knot zeta and lefschetz", "[cli]") {
  const CliResult z = run({"knot", "zeta", "1 1 1"});
  REQUIRE(z.code == 0);
  REQUIRE(z.out == "{\"num\":[\"-1\",\"1\",\"-1\"],\"den\":[\"-1\",\"1\"]}\n");

  const CliResult l = run({"knot", "lefschetz", "1 1 1", "-N", "6"});
  REQUIRE(l.code == 0);
  REQUIRE(l.out == "[\"0\",\"2\",\"3\",\"2\",\"0\",\"-1\"]\n");

  const CliResult dflt = run({"knot", "lefschetz", "1 1 1"});
  REQUIRE(json::parse(dflt.out).size() == 16);  // default N
}

TEST_CASE("zeta compute, series, and lefschetz from a file", "[cli]") {
  const std::string path = write_temp("torus.json", kTorusAction);

  const CliResult r = run({"zeta", "compute", path});
  REQUIRE(r.code == 0);
  REQUIRE(r.out == "{\"num\":[\"1\",\"-3\",\"1\"],\"den\":[\"1\",\"-2\",\"1\"]}\n");

  const CliResult s = run({"zeta", "compute", path, "--series", "6"});
  REQUIRE(s.code == 0);
  const json js = json::parse(s.out);
  REQUIRE(js.at("series") ==
          json::parse(R"(["1","-1","-2","-3","-4","-5"])"));

  const CliResult l = run({"zeta", "lefschetz", path, "-k", "4"});
  REQUIRE(l.code == 0);
  REQUIRE(l.out == "[\"-1\",\"-5\",\"-16\",\"-45\"]\n");
}

TEST_CASE("emitted zeta JSON feeds the verifiers", "[cli]") {
  const std::string action = write_temp("torus2.json", kTorusAction);
  const CliResult computed = run({"zeta", "compute", action});
  const std::string zeta_path = write_temp("torus_zeta.json", computed.out);

  const CliResult closed =
      run({"zeta", "verify-closed", zeta_path, "--lambda", "1", "--chi", "0"});
  REQUIRE(closed.code == 0);
  const json jc = json::parse(closed.out);
  REQUIRE(jc.at("holds").get<bool>());
  REQUIRE(jc.at("sign").get<int>() == 1);

  // The cat-map zeta is palindromic, so the boundary form with a trivial
  // boundary holds as well.
  const std::string one = write_temp("one.json", R"({"num":["1"],"den":["1"]})");
  const CliResult fe = run({"zeta", "verify-fe", zeta_path, "--boundary", one,
                            "--lambda", "1", "--chi", "0"});
  REQUIRE(fe.code == 0);
  REQUIRE(json::parse(fe.out).at("holds").get<bool>());

  // A lopsided zeta fails it, with exit code 1.
  const std::string lopsided =
      write_temp("lopsided.json", R"({"num":["1"],"den":["1","-2"]})");
  const CliResult bad = run({"zeta", "verify-fe", lopsided, "--boundary", one,
                             "--lambda", "1", "--chi", "0"});
  REQUIRE(bad.code == 1);
  REQUIRE_FALSE(json::parse(bad.out).at("holds").get<bool>());
}

TEST_CASE("knot zeta output satisfies the boundary equation via the CLI", "[cli]") {
  const CliResult z = run({"knot", "zeta", "1 -2 1 -2"});
  const std::string zeta_path = write_temp("fig8_zeta.json", z.out);
  const std::string one = write_temp("one2.json", R"({"num":["1"],"den":["1"]})");

  const CliResult fe = run({"zeta", "verify-fe", zeta_path, "--boundary", one,
                            "--lambda", "1", "--chi", "-1"});
  REQUIRE(fe.code == 0);
  REQUIRE(json::parse(fe.out).at("holds").get<bool>());
}

TEST_CASE("duality check and adjoint", "[cli]") {
  const std::string f = write_temp("f.json", R"([["1","0"],["0","2"]])");
  const std::string p = write_temp("p.json", R"([["0","1"],["-1","0"]])");

  const CliResult adj = run({"duality", "adjoint", f, p, "--lambda", "2"});
  REQUIRE(adj.code == 0);
  REQUIRE(adj.out == "[[\"1\",\"0\"],[\"0\",\"2\"]]\n");

  const std::string good = write_temp(
      "triple.json",
      R"({"f":[["1","0"],["0","2"]],"g":[["1","0"],["0","2"]],)"
      R"("P":[["0","1"],["-1","0"]],"lambda":"2"})");
  const CliResult check = run({"duality", "check", good});
  REQUIRE(check.code == 0);
  REQUIRE(check.out ==
          "{\"holds\":true,\"det_product\":true,\"char_identity\":true}\n");

  const std::string bad = write_temp(
      "triple_bad.json",
      R"({"f":[["1","0"],["0","2"]],"g":[["3","0"],["0","2"]],)"
      R"("P":[["0","1"],["-1","0"]],"lambda":"2"})");
  const CliResult fail = run({"duality", "check", bad});
  REQUIRE(fail.code == 1);
  REQUIRE_FALSE(json::parse(fail.out).at("holds").get<bool>());
}

TEST_CASE("bad input exits with code 2", "[cli]") {
  REQUIRE(run({"knot", "alexander", "1 x"}).code == 2);
  REQUIRE(run({"knot", "alexander", "1 1"}).code == 2);  // link
  REQUIRE(run({"zeta", "compute", "/nonexistent/action.json"}).code == 2);
  REQUIRE(run({"zeta", "compute", write_temp("bad.json", "{not json")}).code == 2);
  REQUIRE(run({"frobnicate"}).code == 2);
  REQUIRE(run({"knot"}).code == 2);          // missing subcommand
  REQUIRE(run({"knot", "alexander"}).code == 2);  // missing braid
  REQUIRE(run({"zeta", "verify-closed", write_temp("one3.json",
                                                   R"({"num":["1"],"den":["1"]})"),
               "--lambda", "x", "--chi", "0"})
              .code == 2);
  REQUIRE(run({}).code == 2);

  const CliResult ragged =
      run({"zeta", "compute",
           write_temp("ragged.json",
                      R"({"dim":0,"maps":[{"degree":0,"matrix":[["1","2"],["3"]]}]})")});
  REQUIRE(ragged.code == 2);
  REQUIRE_FALSE(ragged.err.empty());
}

TEST_CASE("help is a success", "[cli]") {
  const CliResult r = run({"--help"});
  REQUIRE(r.code == 0);
  REQUIRE(r.out.find("zeta") != std::string::npos);
  REQUIRE(run({"knot", "--help"}).code == 0);
}

TEST_CASE("JSON round trips preserve every wire type", "[json]") {
  SECTION("rationals") {
    REQUIRE(io::rational_from_json(io::to_json(Rational(-7, 3))) == Rational(-7, 3));
    REQUIRE(io::rational_from_json(json(5)) == Rational(5));
    REQUIRE_THROWS_AS(io::rational_from_json(json(1.5)), std::invalid_argument);
  }
  SECTION("polynomials keep low-to-high coefficient order") {
    const Poly p({Rational(1, 2), Rational(0), Rational(-3)});
    REQUIRE(io::to_json(p).dump() == R"(["1/2","0","-3"])");
    REQUIRE(io::poly_from_json(io::to_json(p)) == p);
    REQUIRE(io::poly_from_json(json::array()) == Poly());
  }
  SECTION("Laurent polynomials") {
    const LaurentPoly l(-2, Poly({Rational(1), Rational(0), Rational(5)}));
    REQUIRE(io::laurent_from_json(io::to_json(l)) == l);
    REQUIRE(io::to_json(l).at("low").get<int>() == -2);
  }
  SECTION("matrices") {
    const RatMatrix m{{Rational(1), Rational(1, 2)}, {Rational(0), Rational(-1)}};
    REQUIRE(io::matrix_from_json(io::to_json(m)) == m);
    REQUIRE(io::matrix_from_json(json::array()).rows() == 0);
    REQUIRE_THROWS_AS(io::matrix_from_json(json::parse(R"([["1"],["2","3"]])")),
                      std::invalid_argument);
  }
  SECTION("graded actions omit empty degrees") {
    std::vector<RatMatrix> maps(3);
    maps[0] = RatMatrix::identity(1);
    maps[2] = RatMatrix::identity(2);
    const GradedAction a(maps);
    const json j = io::to_json(a);
    REQUIRE(j.at("maps").size() == 2);  // degree 1 omitted
    const GradedAction back = io::action_from_json(j);
    REQUIRE(back.dim() == 2);
    REQUIRE(back.betti(1) == 0);
    REQUIRE(back.map(2) == maps[2]);
  }
  SECTION("graded action validation") {
    REQUIRE_THROWS_AS(
        io::action_from_json(json::parse(
            R"({"dim":1,"maps":[{"degree":0,"matrix":[["1"]]},{"degree":0,"matrix":[["2"]]}]})")),
        std::invalid_argument);
    REQUIRE_THROWS_AS(
        io::action_from_json(json::parse(R"({"dim":0,"maps":[{"degree":3,"matrix":[["1"]]}]})")),
        std::invalid_argument);
    REQUIRE_THROWS_AS(
        io::action_from_json(json::parse(R"({"dim":-1,"maps":[]})")),
        std::invalid_argument);
  }
  SECTION("zeta functions and reports") {
    const ZetaFunction z = zeta_from_alexander(
        alexander_from_braid(parse_braid("1 1 1")));
    REQUIRE(io::zeta_from_json(io::to_json(z)).value == z.value);
  }
  SECTION("pairing triples") {
    const json j = json::parse(
        R"({"f":[["1","0"],["0","2"]],"g":[["1","0"],["0","2"]],)"
        R"("P":[["0","1"],["-1","0"]],"lambda":"2"})");
    const PairingTriple t = io::triple_from_json(j);
    REQUIRE(t.is_valid());
    REQUIRE(io::to_json(t) == j);
    REQUIRE_THROWS_AS(
        io::triple_from_json(json::parse(
            R"({"f":[["1"]],"g":[["1","0"],["0","2"]],"P":[["0","1"],["-1","0"]],"lambda":"2"})")),
        std::invalid_argument);
  }
  SECTION("Alexander polynomials validate b1") {
    const AlexanderPoly d = alexander_from_braid(parse_braid("1 -2 1 -2"));
    REQUIRE(io::alexander_from_json(io::to_json(d)).poly() == d.poly());
    json j = io::to_json(d);
    j["b1"] = 7;
    REQUIRE_THROWS_AS(io::alexander_from_json(j), std::invalid_argument);
  }
}
