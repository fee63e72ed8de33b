#include <doctest.h>

#include "ffgeom/errors.hpp"
#include "ffgeom/instance.hpp"
#include "ffgeom/verify.hpp"
#include "helpers.hpp"

using namespace ffgeom;
using nlohmann::json;

namespace {

std::string field_of(const json& j) {
  try {
    instance_from_json(j);
  } catch (const ParseError& e) {
    return e.field();
  }
  return "<none>";
}

json w_json() {
  return json::parse(R"({"q": 2, "d": 2, "basis": [["1","0"],["0","1"]],
                         "alpha": ["x^-1", "x^-2"], "frame": "reduced", "N": 1})");
}

}  // namespace

TEST_CASE("instance files") {
  Instance in = instance_from_json(w_json());
  auto s = in.periodic();
  CHECK(s.kind() == PeriodicLattice::Kind::Alpha);
  CHECK(succ_minima_periodic(s, in.convex_body()).exps == std::vector<int>{-1, -1});

  Instance back = instance_from_json(instance_to_json(in));
  CHECK(back.basis == in.basis);
  CHECK(back.N == 1);
  CHECK(back.frame == Frame::Reduced);
  CHECK((*back.alpha)[1].rational() == (*in.alpha)[1].rational());

  auto f4 = json::parse(R"({"q": 4, "modulus": "t^2+t+1", "d": 2, "basis": [["x","t"],["1","x^-1"]],
                           "body": [["x","0"],["t+1","1"]]})");
  Instance g = instance_from_json(f4);
  CHECK(g.field->q() == 4);
  Instance g2 = instance_from_json(instance_to_json(g));
  CHECK(g2.field == g.field);
  CHECK(*g2.body == *g.body);

  auto trunc = w_json();
  trunc["alpha"][0] = "{floor: -6, top: -1, coeffs: [1,0,0,0,0,0]}";
  trunc["N"] = 0;
  CHECK_FALSE(instance_from_json(trunc).periodic().is_exact());
  auto prec = w_json();
  prec["precision"] = -8;
  CHECK_FALSE(instance_from_json(prec).periodic().is_exact());
}

TEST_CASE("instance errors name the field") {
  auto j = w_json();
  j.erase("q");
  CHECK(field_of(j) == "q");
  j = w_json();
  j["basis"][1][0] = "x^";
  CHECK(field_of(j) == "basis[1][0]");
  j = w_json();
  j["basis"][1] = json::array({"1"});
  CHECK(field_of(j) == "basis[1]");
  j = w_json();
  j["alpha"][1] = 3;
  CHECK(field_of(j) == "alpha[1]");
  j = w_json();
  j.erase("N");
  CHECK(field_of(j) == "N");
  j = w_json();
  j["frame"] = "sideways";
  CHECK(field_of(j) == "frame");
  j = w_json();
  j["q"] = 6;
  CHECK(field_of(j) == "q");
  j = w_json();
  j["basis"] = json::parse(R"([["1","x"],["1","x"]])");
  CHECK_THROWS_AS(instance_from_json(j).lattice(), ParseError);
  j = w_json();
  j["reps"] = json::array();
  CHECK(field_of(j) == "reps");
}

TEST_CASE("grid specs") {
  Grid g = parse_grid("q=2,3;d=2,3;N=0,1,2");
  CHECK(g.q == std::vector<std::uint32_t>{2, 3});
  CHECK(g.d == std::vector<std::size_t>{2, 3});
  CHECK(g.N == std::vector<int>{0, 1, 2});
  CHECK(parse_grid("N=4").q == std::vector<std::uint32_t>{2, 3});
  CHECK_THROWS_AS(parse_grid("q=2;e=3"), ParseError);
  CHECK_THROWS_AS(parse_grid("q=x"), ParseError);
  CHECK_THROWS_AS(parse_grid("d=1"), ParseError);
}

TEST_CASE("verify is deterministic and passes on a small grid") {
  Grid g = parse_grid("q=2;d=2;N=0,1");
  auto a = verify(g, 11, 2), b = verify(g, 11, 2);
  CHECK(a.ok());
  REQUIRE(a.rows.size() == b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    CHECK(a.rows[i].passed == b.rows[i].passed);
    CHECK(a.rows[i].skipped == b.rows[i].skipped);
  }
}

TEST_CASE("membership") {
  auto s = testing::W();
  const Field& F = s.field();
  CHECK(contains(s, testing::kvec(F, {"x^-1 + x", "x^-2"})));
  CHECK(contains(s, testing::kvec(F, {"1", "x^-1"})));
  CHECK_FALSE(contains(s, testing::kvec(F, {"x^-1", "0"})));
}
