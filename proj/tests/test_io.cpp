#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>

#include "ftk/errors.hpp"
#include "ftk/io.hpp"
#include "ftk/parse.hpp"

using namespace ftk;

#ifndef FTK_DATA_DIR
#define FTK_DATA_DIR "data"
#endif

namespace {

json load(const std::string& name) {
  std::ifstream in(std::string(FTK_DATA_DIR) + "/" + name);
  REQUIRE(in);
  return json::parse(in);
}

}  // namespace

TEST_CASE("series round trip") {
  for (const auto& [p, e] : {std::pair<std::uint32_t, std::uint32_t>{5, 1}, {2, 2}}) {
    const auto r = CoeffRing::field(FiniteField::get(p, e));
    const auto s = parse_series(e == 1 ? "t^-3 + 2*t^-1 + 4" : "g*t^-3 + (g+1)*t^-1 + 1", r, 10);
    const auto j = to_json(s);
    CHECK(series_from_json(j) == s);
    CHECK(series_from_json(json::parse(j.dump())) == s);
  }
}

TEST_CASE("canonical form round trip") {
  const auto r = CoeffRing::field(FiniteField::get(2, 2));
  const auto c = as_canonicalize(parse_series("g*t^-5 + t^-2 + g", r));
  CHECK(as_canonical_from_json(to_json(c)) == c);
  CHECK_THROWS_AS(as_canonical_from_json(json::parse(R"({"p":2})")), Error);
}

TEST_CASE("psi and groups") {
  CHECK(parse_psi("[-1]", 3) == FpMatrix(3, 1, {2}));
  CHECK(parse_psi("[[0,1],[1,0]]", 3) == FpMatrix(3, 2, {0, 1, 1, 0}));
  CHECK(parse_psi("[1,-1]", 3) == FpMatrix(3, 2, {1, 0, 0, 2}));
  CHECK_THROWS_AS(parse_psi("[[1,0]]", 3), Error);
  const SemidirectGroup g{5, 1, 4, FpMatrix(5, 1, {2})};
  const auto back = semidirect_group_from_json(to_json(g));
  CHECK(back.p == 5);
  CHECK(back.n == 4);
  CHECK(back.psi == g.psi);
}

TEST_CASE("groupoids from data files") {
  const auto bz3 = groupoid_from_json(load("bg_z3.json"));
  CHECK(bz3.object_count() == 1);
  CHECK(to_string(groupoid_mass(bz3)) == "1/3");
  CHECK(same_invariants(groupoid_from_json(to_json(bz3)), bz3));
  const auto bz4 = groupoid_from_json(load("bg_z4.json"));
  const auto h = subgroup_from_json(bz4, load("z4_sub_z2.json"));
  CHECK(to_string(groupoid_mass(rigidify(bz4, h))) == "1/2");
  CHECK(to_string(groupoid_mass(groupoid_from_json(load("two_components.json")))) == "3/2");
  CHECK(to_string(Rational(4)) == "4");
  // a composition table that is not associative is refused
  auto bad = load("bg_z3.json");
  bad["compose"]["a1|a1"] = "e";
  CHECK_THROWS(groupoid_from_json(bad));
  CHECK_THROWS(subgroup_from_json(bz4, json::parse(R"({"*":["e","a1"]})")));
}
