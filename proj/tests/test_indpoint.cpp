#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ftk/errors.hpp"
#include "ftk/indpoint.hpp"

using namespace ftk;

namespace {

IndPoint P(std::uint32_t p, std::uint32_t e, std::int64_t level, std::vector<Elem> v) {
  return {FiniteField::get(p, e), 1, level, std::move(v)};
}

}  // namespace

TEST_CASE("index sets") {
  CHECK(prime_to_p_upto(2, 3) == std::vector<std::int64_t>{1, 3});
  CHECK(prime_to_p_upto(3, 5) == std::vector<std::int64_t>{1, 2, 4, 5});
  CHECK(prime_to_p_upto(5, 0).empty());
}

TEST_CASE("transitions include then apply Frobenius") {
  const auto a = P(2, 1, 2, {1});
  CHECK(indpoint_transition(a, 2) == a);
  CHECK(indpoint_transition(P(2, 1, 1, {1}), 3).value == std::vector<Elem>{1, 0});
  const auto f4 = FiniteField::get(2, 2);
  // one step squares g
  CHECK(indpoint_transition(P(2, 2, 1, {f4->g()}), 2).value == std::vector<Elem>{f4->frobenius(f4->g())});
  // p = 3: S_2 = {1, 2}, one step cubes g, g^3 = 2g in F_9
  const auto f9 = FiniteField::get(3, 2);
  CHECK(indpoint_transition(P(3, 2, 1, {f9->g()}), 2).value == std::vector<Elem>{f9->mul(2, f9->g()), 0});
  CHECK_THROWS_AS(indpoint_transition(a, 1), DomainError);
}

TEST_CASE("equality in the colimit") {
  const auto a = P(2, 2, 1, {2});
  for (std::int64_t m = 1; m < 8; ++m) CHECK(indpoint_eq(a, indpoint_transition(a, m)));
  CHECK(!indpoint_eq(P(2, 1, 1, {1}), P(2, 1, 1, {0})));
  const auto f4 = FiniteField::get(2, 2);
  CHECK(!indpoint_eq(P(2, 2, 1, {f4->g()}), P(2, 2, 1, {f4->frobenius(f4->g())})));
  CHECK(indpoint_eq(P(2, 2, 1, {1}), P(2, 2, 1, {1})));
}

TEST_CASE("canonical representatives") {
  const auto a = P(2, 1, 3, {0, 1});
  CHECK(indpoint_canonical(a) == a);
  CHECK(indpoint_canonical(P(3, 1, 5, {0, 0, 0, 0})) == P(3, 1, 1, {0}));
  const auto b = indpoint_transition(P(2, 2, 1, {2}), 6);
  CHECK(indpoint_canonical(b) == P(2, 2, 1, {2}));
  CHECK(indpoint_canonical(indpoint_canonical(b)) == indpoint_canonical(b));
}

TEST_CASE("level counts") {
  CHECK(level_count(*FiniteField::get(2), 3, 1) == 4);
  CHECK(level_count(*FiniteField::get(3), 5, 1) == 81);
  CHECK(level_count(*FiniteField::get(3), 5, 0) == 1);
  CHECK_THROWS_AS(level_count(*FiniteField::get(7), 200, 2), ScaleExceeded);
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(validate(P(2, 1, 3, {1})), DomainError);
  CHECK_THROWS_AS(validate(P(2, 1, 0, {})), DomainError);
  CHECK_THROWS_AS(validate(P(2, 1, 1, {2})), DomainError);
}
