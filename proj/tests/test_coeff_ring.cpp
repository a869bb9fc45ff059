#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ftk/coeff_ring.hpp"
#include "ftk/errors.hpp"

using namespace ftk;

TEST_CASE("test ring F_q[x]/(x^m) arithmetic") {
  const auto R = CoeffRing::get(FiniteField::get(2), 2);
  CHECK(R->size() == 4);
  const Elem x = R->x();
  CHECK(R->mul(x, x) == 0);
  CHECK(R->is_nilpotent(x));
  CHECK(R->is_unit(R->add(1, x)));
  CHECK(R->mul(R->add(1, x), R->inv(R->add(1, x))) == 1);
  CHECK_THROWS_AS(R->inv(x), DomainError);
  CHECK(R->format(R->add(1, x)) == "1+x");
}

TEST_CASE("ring axioms exhaustively on F_3[x]/(x^2) and F_2[x]/(x^3)") {
  for (auto [p, m] : {std::pair{3u, 2}, {2u, 3}}) {
    const auto R = CoeffRing::get(FiniteField::get(p), m);
    for (Elem a = 0; a < R->size(); ++a) {
      if (R->is_unit(a)) CHECK(R->mul(a, R->inv(a)) == 1);
      for (Elem b = 0; b < R->size(); ++b) {
        CHECK(R->mul(a, b) == R->mul(b, a));
        for (Elem c = 0; c < R->size(); c += 2)
          CHECK(R->mul(a, R->add(b, c)) == R->add(R->mul(a, b), R->mul(a, c)));
      }
    }
  }
}

TEST_CASE("mixing rings is refused") {
  const TestRingElem a(CoeffRing::get(FiniteField::get(2), 2), 1);
  const TestRingElem b(CoeffRing::get(FiniteField::get(2), 3), 1);
  CHECK_THROWS_AS(a + b, RingMismatch);
  CHECK_THROWS_AS(TestRingElem(CoeffRing::get(FiniteField::get(2), 2), 4), DomainError);
  CHECK_THROWS_AS(CoeffRing::get(FiniteField::get(2), 5), DomainError);
  CHECK_THROWS_AS(CoeffRing::field(FiniteField::get(2))->x(), DomainError);
}
