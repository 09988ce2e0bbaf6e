#include <doctest.h>

#include <nlohmann/json.hpp>

#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "pdisk/cli.hpp"

using namespace pdisk;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kTwoDisks = R"({"disks": [{"center": [-1, 0], "radius": 1}, {"center": [1, 0], "radius": "1"}]})";

}  // namespace

TEST_CASE("parse_rational") {
  CHECK(parse_rational("3/4") == mpq_class(3, 4));
  CHECK(parse_rational("-3") == -3);
  CHECK(parse_rational("0.125") == mpq_class(1, 8));
  CHECK(parse_rational("-0.05") == mpq_class(-1, 20));
  CHECK(parse_rational("010/08") == mpq_class(5, 4));
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("document parsing") {
  const auto doc = parse_collection_document(
      R"({"disks": [{"center": ["1/2", 0], "radius": 0.25}, {"center": [0, 1], "radius": "1/3"}], "metadata": {"name": "pair"}})");
  CHECK(doc.exact.size() == 2);
  CHECK(doc.exact.centers()[0].re == mpq_class(1, 2));
  CHECK(doc.exact.radii()[1] == mpq_class(1, 3));
  CHECK(doc.floating.radii()[0] == 0.25);
  CHECK(doc.metadata.at("name") == "pair");

  try {
    parse_collection_document(R"({"disks": [{"center": [0, 0], "radius": 1}, {"center": [1], "radius": 1}]})");
    FAIL("expected a schema error");
  } catch (const SchemaError& e) {
    CHECK(std::string(e.what()).find("disks[1]") != std::string::npos);
  }
  CHECK_THROWS_AS(parse_collection_document("not json"), SchemaError);
  CHECK_THROWS_AS(parse_collection_document(R"({"disks": []})"), SchemaError);
}

TEST_CASE("check in text and json") {
  const auto text = run({"check", "-"}, kTwoDisks);
  CHECK(text.code == exit_code::ok);
  CHECK(text.out.find("positive_definite") != std::string::npos);

  const auto js = run({"check", "-", "--format", "json", "--mode", "exact"}, kTwoDisks);
  REQUIRE(js.code == exit_code::ok);
  const auto j = nlohmann::json::parse(js.out);
  CHECK(j["verdict"] == "positive_definite");
  CHECK(j["n"] == 2);
  CHECK(j["admissible"] == true);
}

TEST_CASE("check options") {
  const auto scaled = run({"check", "-", "--scale", "--format", "json"}, kTwoDisks);
  REQUIRE(scaled.code == exit_code::ok);
  CHECK(nlohmann::json::parse(scaled.out)["max_uniform_scale"].get<double>() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-10));

  const std::string overlap = R"({"disks": [{"center": [-1, 0], "radius": 1}, {"center": [1, 0], "radius": 3}]})";
  CHECK(run({"check", "-", "--strict-admissible"}, overlap).code == exit_code::inadmissible);
  CHECK(run({"check", "-"}, overlap).code == exit_code::ok);

  CHECK(run({"check", "-"}, R"({"disks": [{"center": [0, 0]}]})").code == exit_code::usage);
  CHECK(run({"check", "-", "--mode", "sideways"}, kTwoDisks).code == exit_code::usage);
}

TEST_CASE("rho table") {
  const auto r = run({"rho", "--range", "2..4", "--csv"});
  REQUIRE(r.code == exit_code::ok);
  CHECK(r.out.find("n,rho,mu,lower_bound,upper_bound,beta,n_rho") == 0);
  CHECK(r.out.find("4,0.816496580928,-0.333333333333") != std::string::npos);

  const auto lim = run({"rho", "--n", "5", "--csv", "--limits"});
  CHECK(lim.out.find("5,0.707106781187") != std::string::npos);
  CHECK(lim.out.find("limit,,,,,1.21966989127,3.83170597021") != std::string::npos);

  CHECK(run({"rho", "--n", "1"}).code == exit_code::usage);
  CHECK(run({"rho", "--range", "4..2"}).code == exit_code::usage);
  CHECK(run({"rho"}).code == exit_code::usage);
}

TEST_CASE("triangle and tpoly") {
  const auto t = run({"triangle", "0.5", "0.5", "0.5"});
  CHECK(t.code == exit_code::ok);
  CHECK(t.out.find("positive: yes") != std::string::npos);
  CHECK(run({"triangle", "0.5", "5", "0.5"}).code == exit_code::usage);

  const auto p = run({"tpoly", "--n", "4", "--m", "1"});
  CHECK(p.out.find("-16*z^3 - 16*z^2") != std::string::npos);
}

TEST_CASE("verify") {
  const auto v = run({"verify", "--suite", "triangle"});
  CHECK(v.code == exit_code::ok);
  CHECK(v.out.find("PASS triangle/criterion_equivalence") != std::string::npos);
  CHECK(run({"verify", "--suite", "nope"}).code == exit_code::usage);
  CHECK(run({"verify", "--suite", "core", "--nmax", "99"}).code == exit_code::usage);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == exit_code::usage);
  CHECK(run({"frobnicate"}).code == exit_code::usage);
  CHECK(run({"--help"}).code == exit_code::ok);
}
