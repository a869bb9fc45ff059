#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ftk/errors.hpp"
#include "ftk/kummer.hpp"
#include "ftk/oracles.hpp"
#include "ftk/parse.hpp"

using namespace ftk;

namespace {

RingPtr F(std::uint32_t p, std::uint32_t e = 1) { return CoeffRing::field(FiniteField::get(p, e)); }
LaurentSeries S(const char* text, const RingPtr& r, std::int64_t prec = 24) { return parse_series(text, r, prec); }

}  // namespace

TEST_CASE("canonical classes") {
  CHECK(kummer_canonicalize(S("2*t^7", F(5)), 4) == KummerClass{4, 3, 1});
  CHECK(kummer_canonicalize(S("1", F(5)), 4) == KummerClass{4, 0, 0});
  CHECK(kummer_canonicalize(S("t^4", F(5)), 4) == KummerClass{4, 0, 0});
  CHECK(kummer_canonicalize(S("3*t^-1+t+t^5", F(7)), 3).q_exp == 2);
  // 1-units are n-th powers: the tail never matters
  CHECK(kummer_canonicalize(S("2*t^7+t^8+3*t^11", F(5)), 4) == KummerClass{4, 3, 1});
}

TEST_CASE("canonical series realize their class") {
  for (const auto& c : enumerate_kummer_classes(*FiniteField::get(7), 3))
    CHECK(kummer_canonicalize(kummer_series(c, F(7), 16), 3) == c);
}

TEST_CASE("witnesses") {
  const auto w = kummer_iso_witness(S("t^4", F(5)), S("1", F(5)), 4);
  REQUIRE(w.has_value());
  CHECK(congruent(pow(*w, 4) * S("t^4", F(5)), S("1", F(5))));
  CHECK(w->low() == -1);
  CHECK(!kummer_iso_witness(S("2*t^3", F(5)), S("t^3", F(5)), 4).has_value());
  CHECK(!oracle::kummer_witness_exists(FiniteField::get(5), 4, {{3, 2}}, {{3, 1}}, -2, 3));
  CHECK(oracle::kummer_witness_exists(FiniteField::get(5), 4, {{4, 1}}, {{0, 1}}, -2, 3));
  const auto b = S("3+t+t^2", F(7));
  const auto b2 = pow(S("2*t+t^2+5*t^4", F(7)), 3) * b;
  const auto ww = kummer_iso_witness(b, b2, 3);
  REQUIRE(ww.has_value());
  CHECK(congruent(pow(*ww, 3) * b, b2));
  CHECK(!kummer_iso_witness(b, S("t", F(7)) * b2, 3).has_value());
  const auto self = kummer_iso_witness(b, b, 3);
  REQUIRE(self.has_value());
  CHECK(congruent(pow(*self, 3) * b, b));
}

TEST_CASE("automorphisms and counts") {
  CHECK(kummer_automorphisms(*FiniteField::get(5), 4) == std::vector<Elem>{1, 2, 3, 4});
  CHECK(kummer_automorphisms(*FiniteField::get(7), 2) == std::vector<Elem>{1, 6});
  CHECK(kummer_automorphisms(*FiniteField::get(7), 1) == std::vector<Elem>{1});
  // Frozen oracle values: (5,4) -> 16, (7,3) -> 9, (4,3) -> 9.
  CHECK(kummer_class_count(*FiniteField::get(5), 4) == 16);
  CHECK(kummer_class_count(*FiniteField::get(7), 3) == 9);
  CHECK(kummer_class_count(*FiniteField::get(2, 2), 3) == 9);
  CHECK(kummer_class_count(*FiniteField::get(5), 1) == 1);
  CHECK(oracle::kummer_orbits(FiniteField::get(5), 2).orbits == 4);
  CHECK(enumerate_kummer_classes(*FiniteField::get(5), 4).size() == 16);
}

TEST_CASE("wild degrees are refused") {
  CHECK_THROWS_AS(require_tame(*FiniteField::get(5), 5), DomainError);
  CHECK_THROWS_AS(kummer_canonicalize(S("t", F(3)), 6), DomainError);
  CHECK_THROWS_AS(kummer_canonicalize(LaurentSeries::zero(F(5), 4), 2), DomainError);
}
