#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "ftk/errors.hpp"
#include "ftk/laurent.hpp"
#include "ftk/parse.hpp"

using namespace ftk;

namespace {

RingPtr F(std::uint32_t p, std::uint32_t e = 1) { return CoeffRing::field(FiniteField::get(p, e)); }
RingPtr T(std::uint32_t p, int m) { return CoeffRing::get(FiniteField::get(p), m); }
LaurentSeries S(const char* text, const RingPtr& r, std::int64_t prec = 16) { return parse_series(text, r, prec); }

}  // namespace

TEST_CASE("arithmetic and precision propagation") {
  CHECK((S("t^-1", F(2)) + S("t^-1", F(2))).is_zero());
  const auto prod = S("1+t", F(3), 5) * S("1-t", F(3), 5);
  CHECK(congruent(prod, S("1+2*t^2", F(3), 5)));
  CHECK(prod.prec() == 5);
  CHECK(congruent(S("t^-2", F(5)) * S("t^3", F(5)), S("t", F(5))));
  // mul: min(low_a + prec_b, low_b + prec_a)
  CHECK((S("t^-3", F(2), 10) * S("1+t", F(2), 4)).prec() == 1);
  CHECK((S("t^2", F(2), 10) + S("1", F(2), 4)).prec() == 4);
  CHECK_THROWS_AS(split_parts(S("t^-3", F(2), 0)), PrecisionExhausted);
  CHECK_THROWS_AS(S("1", F(2), 4).truncated(5), PrecisionExhausted);
  CHECK_THROWS_AS(S("1", F(2), 4).coeff(4), PrecisionExhausted);
}

TEST_CASE("zero series conventions") {
  const auto z = LaurentSeries::zero(F(3), 7);
  CHECK(z.val() == 0);
  CHECK(z.low() == 7);
  CHECK(!naive_ord(z).has_value());
}

TEST_CASE("inversion") {
  CHECK(congruent(invert(S("1+t", F(2), 4)), S("1+t+t^2+t^3", F(2), 4)));
  CHECK(congruent(invert(S("t^2", F(5))), S("t^-2", F(5))));
  const auto R = T(2, 2);
  const auto a = S("x*t^-1+1", R);
  CHECK(congruent(invert(a), a));
  CHECK(congruent(invert(a) * a, LaurentSeries::constant(R, 1, 16)));
  CHECK_THROWS(invert(LaurentSeries::zero(F(2), 4)));
}

TEST_CASE("orders") {
  CHECK(naive_ord(S("t^-3+t", F(2))) == -3);
  CHECK(naive_ord(S("x*t^-1+1", T(2, 2))) == -1);
  CHECK(unit_ord(S("2*t^7+t^9", F(5))) == 7);
  CHECK(unit_ord(S("x*t^-2+t", T(3, 2))) == 1);
  CHECK(unit_ord(S("1", F(2))) == 0);
}

TEST_CASE("split into parts") {
  const auto d = split_parts(S("t^-1+2+t", F(3)));
  CHECK(congruent(d.negative, S("t^-1", F(3))));
  CHECK(d.constant == 2);
  CHECK(congruent(d.positive, S("t", F(3))));
  const auto c = split_parts(S("4", F(5)));
  CHECK(c.negative.is_zero());
  CHECK(c.constant == 4);
  CHECK(split_parts(S("t^-2+t^-1", F(2))).positive.is_zero());
}

TEST_CASE("positive part solver") {
  CHECK(solve_positive(S("t", F(2), 16)) == S("t+t^2+t^4+t^8", F(2), 16));
  CHECK(solve_positive(LaurentSeries::zero(F(3), 10)).is_zero());
  const auto u = solve_positive(S("t^3", F(3), 30));
  CHECK(congruent(u, S("2*t^3+2*t^9+2*t^27", F(3), 30)));
  CHECK(congruent(artin_schreier_op(u), S("t^3", F(3), 30)));
  CHECK_THROWS(solve_positive(S("t^-1", F(2))));
}

TEST_CASE("Frobenius operations and substitution") {
  const auto sq = series_pth_power(S("t^-1", F(2), 8));
  CHECK(congruent(sq, S("t^-2", F(2), 16)));
  CHECK(sq.prec() == 16);
  const auto f4 = F(2, 2);
  CHECK(congruent(coeff_frobenius(S("g*t", f4)), S("g^2*t", f4)));
  const auto f7 = FiniteField::get(7);
  const Elem zeta = f7->primitive_root_of_unity(3);
  CHECK(scale_substitute(S("t", F(7)), zeta).coeff(1) == zeta);
  CHECK(congruent(scale_substitute(S("t^-1", F(3)), 2), S("2*t^-1", F(3))));
}

TEST_CASE("n-th roots of 1-units") {
  const auto r = nth_root_unit(S("1+t", F(3), 3), 2);
  CHECK(r == S("1+2*t+t^2", F(3), 3));
  CHECK(congruent(pow(r, 2), S("1+t", F(3), 3)));
  const auto a = S("1+t", F(5), 20);
  CHECK(congruent(pow(nth_root_unit(a, 4), 4), a));
  const auto b = S("2+x+t+x*t^3", T(3, 2), 12);
  CHECK_THROWS(nth_root_unit(b, 2));  // 2 is not a square mod 3
  const auto c = S("1+x+t+x*t^3", T(3, 2), 12);
  CHECK(congruent(pow(nth_root_unit(c, 2), 2), c));
}

TEST_CASE("torsion units and idempotents are constant") {
  CHECK(torsion_unit_is_constant(S("1", F(2)), 3));
  CHECK(torsion_unit_is_constant(S("4", F(5)), 2));
  CHECK(idempotent_is_constant(LaurentSeries::zero(F(2), 8)));
  CHECK(idempotent_is_constant(S("1", F(2))));
  CHECK_THROWS_AS(torsion_unit_is_constant(S("1+t", F(5)), 2), DomainError);
  CHECK_THROWS_AS(idempotent_is_constant(S("t", F(2))), DomainError);
}
