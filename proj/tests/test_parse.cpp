#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ftk/errors.hpp"
#include "ftk/field.hpp"
#include "ftk/parse.hpp"

using namespace ftk;

namespace {

std::size_t parse_offset(const std::string& text, const RingPtr& ring) {
  try {
    parse_series(text, ring);
  } catch (const ParseError& e) {
    return e.offset();
  }
  FAIL("no parse error for " << text);
  return 0;
}

}  // namespace

TEST_CASE("basic series") {
  const auto f5 = CoeffRing::field(FiniteField::get(5));
  const auto s = parse_series("t^-7 + 3*t^-2 + 1", f5);
  CHECK(s.low() == -7);
  CHECK(s.coeff(-7) == 1);
  CHECK(s.coeff(-2) == 3);
  CHECK(s.coeff(0) == 1);
  CHECK(s.coeff(-1) == 0);
  CHECK(s.prec() == 32);
  CHECK(parse_series("t^40", f5).prec() == 41);
  // integers reduce mod p, juxtaposition multiplies
  CHECK(parse_series("7 t^-1", f5) == parse_series("2*t^-1", f5));
  CHECK(parse_series("-t^-1", f5).coeff(-1) == 4);
  CHECK(parse_series("(t^-1 + 1)^2", f5) == parse_series("t^-2 + 2 t^-1 + 1", f5));
  CHECK(parse_series("0", f5).low() == 32);
}

TEST_CASE("explicit precision drops high terms") {
  const auto f3 = CoeffRing::field(FiniteField::get(3));
  const auto s = parse_series("t^-1 + t^2 + t^5", f3, 3);
  CHECK(s.prec() == 3);
  CHECK(s.coeff(2) == 1);
  CHECK(s.high() == 3);
}

TEST_CASE("generator and nilpotent") {
  const auto f4 = FiniteField::get(2, 2);
  const auto r = CoeffRing::field(f4);
  const auto s = parse_series("g^2*t^-1", r);
  CHECK(s.coeff(-1) == f4->mul(f4->g(), f4->g()));
  CHECK(parse_coefficient("g^3", r) == 1);
  CHECK(parse_coefficient("g + g", r) == 0);
  const auto nil = CoeffRing::get(FiniteField::get(2), 2);
  CHECK(parse_series("x*t^-1", nil).coeff(-1) != 0);
  CHECK(parse_series("x^2", nil).low() == 32);
}

TEST_CASE("errors carry offsets") {
  const auto f5 = CoeffRing::field(FiniteField::get(5));
  CHECK(parse_offset("t^", f5) == 2);
  CHECK(parse_offset("g*t^-1", f5) == 0);
  CHECK(parse_offset("t^-1 + ", f5) == 7);
  CHECK(parse_offset("(t", f5) == 2);
  CHECK(parse_offset("x", f5) == 0);
  CHECK(parse_offset("t^-1 ? 2", f5) == 5);
  CHECK_THROWS_AS(parse_series("g^-1", CoeffRing::field(FiniteField::get(2, 2))), ParseError);
}

TEST_CASE("render round trip") {
  for (const auto& [p, e] : {std::pair<std::uint32_t, std::uint32_t>{5, 1}, {2, 2}, {3, 2}}) {
    const auto r = CoeffRing::field(FiniteField::get(p, e));
    const std::string text = e == 1 ? "t^-5 + 4*t^-3 + 2 + 3*t^4" : "(g+1)*t^-3 + g*t^-1 + 1 + t";
    const auto s = parse_series(text, r);
    CHECK(parse_series(render_series(s), r, s.prec()) == s);
  }
  const auto f2 = CoeffRing::field(FiniteField::get(2));
  CHECK(render_series(parse_series("t^-1 + 1", f2)) == "t^-1+1");
  CHECK(default_precision(5) == 42);
}
