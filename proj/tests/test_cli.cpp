#include <catch_amalgamated.hpp>

#include <sstream>

#include "uhsl2/cli.hpp"
#include "uhsl2/serialize.hpp"

using namespace uhsl2;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("argument helpers", "[cli]") {
  CHECK(parse_exponents("1,2,3,4") == NormalMonomial{1, 2, 3, 4});
  CHECK(parse_exponents(" 0, 0 ,2,0") == NormalMonomial{0, 0, 2, 0});
  CHECK_THROWS_AS(parse_exponents("1,2,3"), UsageError);
  CHECK_THROWS_AS(parse_exponents("1,2,3,-4"), UsageError);
  CHECK_THROWS_AS(parse_exponents("1,2,,4"), UsageError);

  CHECK(parse_functor("m(2,0,0,0)") == FunctorSpec{functor::DividedPower{{2, 0, 0, 0}}});
  CHECK(parse_functor("y") == FunctorSpec{functor::Singleton{Color::Y}});
  CHECK(parse_functor("exp( z )") == FunctorSpec{functor::Exponential{Color::Z}});
  CHECK_THROWS_AS(parse_functor("exp(w)"), UsageError);
  CHECK_THROWS_AS(parse_functor("m(1)"), UsageError);
  CHECK_THROWS_AS(parse_functor("q"), UsageError);
}

TEST_CASE("star command", "[cli]") {
  const Run json = cli({"star", "--expr", "y * x", "--format", "json"});
  CHECK(json.code == kExitOk);
  CHECK(from_json(json.out).size() == 2);
  CHECK(json.out == cli({"star", "--expr", "y * x", "--format", "json"}).out);

  const Run pretty = cli({"star", "--expr", "z * m(2,0,0,0)"});
  CHECK(pretty.out == "x^2 z / (2!) - x y h - 2 x h^2 / (2!)\n");

  const Run capped = cli({"star", "--expr", "exp(z) * exp(x)", "--cap", "2", "--format", "json"});
  CHECK(capped.code == kExitOk);
  CHECK(from_json(capped.out).cap() == 2u);

  CHECK(cli({"star", "--expr", "exp(x)"}).code == kExitUsage);
  const Run syntax = cli({"star", "--expr", "y x"});
  CHECK(syntax.code == kExitUsage);
  CHECK(syntax.err.find("position 2") != std::string::npos);
  CHECK(cli({"star", "--expr", "x", "--format", "xml"}).code == kExitUsage);
  CHECK(cli({"star"}).code == kExitUsage);
}

TEST_CASE("coeff command", "[cli]") {
  const Run r = cli({"coeff", "--left", "0,0,2,0", "--right", "2,0,0,0", "--out", "0,1,0,3"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "3\n");
  CHECK(cli({"coeff", "--left", "0,0,1,0", "--right", "1,0,0,0", "--out", "0,1,0,1"}).out ==
        "-1\n");
  CHECK(cli({"coeff", "--left", "0,0,1", "--right", "1,0,0,0", "--out", "0,1,0,1"}).code ==
        kExitUsage);
}

TEST_CASE("verification commands", "[cli]") {
  const Run v = cli({"verify", "--max-exp", "1"});
  CHECK(v.code == kExitOk);
  CHECK(v.out.find("checked 256 monomial pairs") != std::string::npos);
  CHECK(v.out.find("mismatches: 0") != std::string::npos);

  CHECK(cli({"species", "--left", "m(0,0,2,0)", "--right", "m(2,0,0,0)", "--max-total", "4"})
            .code == kExitOk);
  CHECK(cli({"species", "--left", "exp(y)", "--right", "x", "--max-total", "3"}).code ==
        kExitOk);
  CHECK(cli({"species", "--left", "bogus", "--right", "x", "--max-total", "3"}).code ==
        kExitUsage);

  const Run ids = cli({"identities"});
  CHECK(ids.code == kExitOk);
  CHECK(ids.out.find("FAIL") == std::string::npos);
  CHECK(ids.out.find("PASS  zx = xz - yh") != std::string::npos);
}

TEST_CASE("usage errors", "[cli]") {
  CHECK(cli({}).code == kExitUsage);
  CHECK(cli({"frobnicate"}).code == kExitUsage);
  CHECK(cli({"verify"}).code == kExitUsage);
  CHECK(cli({"verify", "--max-exp", "two"}).code == kExitUsage);
  const Run help = cli({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("star") != std::string::npos);
}
