#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "ftk/errors.hpp"
#include "ftk/io.hpp"
#include "ftk/oracles.hpp"
#include "ftk/parse.hpp"
#include "ftk/semidirect.hpp"

using namespace ftk;

namespace {

RingPtr F(std::uint32_t p, std::uint32_t e = 1) { return CoeffRing::field(FiniteField::get(p, e)); }
LaurentSeries S(const char* text, const RingPtr& r, std::int64_t prec = 24) { return parse_series(text, r, prec); }
SemidirectGroup s3() { return {3, 1, 2, FpMatrix(3, 1, {2})}; }

std::vector<std::uint64_t> sorted_auts(const std::vector<GTorsorClass>& cs) {
  std::vector<std::uint64_t> out;
  for (const auto& c : cs) out.push_back(c.aut_count);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("matrices over F_p") {
  const auto m = FpMatrix::from_rows(3, {{0, -1}, {1, 0}});
  CHECK(m.at(0, 1) == 2);
  CHECK(m.pow(4) == FpMatrix::identity(3, 2));
  CHECK(!(m.pow(2) == FpMatrix::identity(3, 2)));
  CHECK(m.apply(std::vector<std::uint32_t>{1, 0}) == std::vector<std::uint32_t>{0, 1});
  CHECK(parse_psi("[-1]", 3) == FpMatrix(3, 1, {2}));
  CHECK(parse_psi("[1, 2]", 5) == FpMatrix(5, 2, {1, 0, 0, 2}));
}

TEST_CASE("group validation") {
  CHECK_NOTHROW(validate(s3()));
  CHECK_THROWS_AS(validate(SemidirectGroup{3, 1, 3, FpMatrix(3, 1, {1})}), DomainError);  // p | n
  CHECK_THROWS_AS(validate(SemidirectGroup{5, 1, 2, FpMatrix(5, 1, {2})}), DomainError);  // 2^2 != 1
  CHECK_THROWS_AS(make_frame(FiniteField::get(3), 4, 1), DomainError);                    // 4 does not divide 2
  CHECK_THROWS_AS(make_frame(FiniteField::get(5), 4, 2), DomainError);                    // not coprime
}

TEST_CASE("frames and gcd reduction") {
  const auto f = make_frame(FiniteField::get(3), 2, 1);
  CHECK(f.zeta == 2);
  CHECK(f.xi == 2);
  const SemidirectGroup g{5, 1, 4, FpMatrix(5, 1, {2})};
  const auto r = reduce_to_coprime(g, 2);
  CHECK(r.d == 2);
  CHECK(r.n == 2);
  CHECK(r.q_exp == 1);
  CHECK(r.group.psi == FpMatrix(5, 1, {4}));
  const auto r31 = reduce_to_coprime(SemidirectGroup{7, 1, 3, FpMatrix(7, 1, {2})}, 1);
  CHECK((r31.n == 3 && r31.q_exp == 1 && r31.d == 1));
  const auto r0 = reduce_to_coprime(g, 0);
  CHECK((r0.n == 1 && r0.q_exp == 0 && r0.d == 4));
}

TEST_CASE("the twist phi") {
  const auto trivial = make_frame(FiniteField::get(3), 1, 0);
  const SemidirectGroup id{3, 1, 1, FpMatrix::identity(3, 1)};
  const ElemAbCover b = {S("t^-2+t^-1+2", F(3))};
  CHECK(phi_apply(id, trivial, b)[0] == b[0]);
  const auto f = make_frame(FiniteField::get(3), 2, 1);
  const ElemAbCover s = {S("t^-1", F(3))};
  CHECK(congruent(phi_apply(s3(), f, s)[0], s[0]));
}

TEST_CASE("witnesses of phi(b) = b") {
  const auto f = make_frame(FiniteField::get(3), 2, 1);
  const ElemAbCover zero = {LaurentSeries::zero(F(3), 16)};
  const auto w0 = zphi_solve(s3(), f, zero);
  REQUIRE(w0.has_value());
  CHECK(artin_schreier_op((*w0)[0]).is_zero());
  // only odd slots are phi-fixed: psi(xi^-s v) = -(2^-s) v
  const ElemAbCover b = {S("t^-1+2*t^-5", F(3))};
  CHECK(!zphi_solve(s3(), f, {S("t^-1+t^-2", F(3))}).has_value());
  const auto w = zphi_solve(s3(), f, b);
  REQUIRE(w.has_value());
  CHECK(zphi_identity_holds(s3(), f, {b, *w}));
  // psi = 1: phi(s^-1) = 2 s^-1 has a different class
  const SemidirectGroup c2{3, 1, 2, FpMatrix(3, 1, {1})};
  CHECK(!zphi_solve(c2, f, {S("t^-1", F(3))}).has_value());
}

TEST_CASE("v^n composite") {
  const auto f = make_frame(FiniteField::get(3), 2, 1);
  const ElemAbCover zero = {LaurentSeries::zero(F(3), 16)};
  CHECK(vn_check(s3(), f, {zero, {LaurentSeries::zero(F(3), 16)}}) == std::vector<std::uint32_t>{0});
  // Every constant witness c passes: c + psi(sigma(c)) = c - c.
  for (Elem c = 0; c < 3; ++c)
    CHECK(vn_check(s3(), f, {zero, {LaurentSeries::constant(F(3), c, 16)}}) == std::vector<std::uint32_t>{0});
  // With psi = 1 the composite is 2c, zero only for c = 0.
  const SemidirectGroup c2{3, 1, 2, FpMatrix(3, 1, {1})};
  CHECK(vn_check(c2, f, {zero, {LaurentSeries::constant(F(3), 1, 16)}}) == std::vector<std::uint32_t>{2});
  CHECK_THROWS_AS(vn_check(s3(), f, {{S("t^-1", F(3))}, {S("t^-1", F(3))}}), DomainError);
}

TEST_CASE("enumeration, frozen against the brute-force census") {
  const auto k3 = FiniteField::get(3), k5 = FiniteField::get(5);
  const auto f = make_frame(k3, 2, 1);
  const auto s3_classes = enumerate_g_torsors(s3(), f, 4);
  CHECK(s3_classes.size() == 3);
  CHECK(sorted_auts(s3_classes) == std::vector<std::uint64_t>{1, 1, 1});
  for (const auto& c : s3_classes) CHECK(vn_check(s3(), f, c.zphi) == std::vector<std::uint32_t>{0});
  const auto f5 = make_frame(k5, 2, 1);
  const auto a = enumerate_g_torsors({5, 1, 2, FpMatrix(5, 1, {4})}, f5, 2);
  CHECK(a.size() == 5);
  const auto b = enumerate_g_torsors({5, 1, 2, FpMatrix(5, 1, {1})}, f5, 2);
  CHECK(b.size() == 25);
  CHECK(sorted_auts(b) == std::vector<std::uint64_t>(25, 5));
  CHECK(std::is_sorted(b.begin(), b.end(), [](const GTorsorClass& x, const GTorsorClass& y) {
    return x.break_.value_or(-1) < y.break_.value_or(-1);
  }));
}

TEST_CASE("rank two against the census") {
  const auto k3 = FiniteField::get(3);
  const auto f = make_frame(k3, 2, 1);
  for (const auto& psi : {FpMatrix::from_rows(3, {{0, 1}, {1, 0}}), FpMatrix::from_rows(3, {{1, 0}, {0, -1}})}) {
    const SemidirectGroup g{3, 2, 2, psi};
    const auto classes = enumerate_g_torsors(g, f, 1);
    const auto census = oracle::semidirect_census(g, k3, 1, 1);
    CHECK(classes.size() == census.classes);
    CHECK(sorted_auts(classes) == census.aut_orders);
  }
}

TEST_CASE("trivial rank") {
  const SemidirectGroup g{3, 0, 2, FpMatrix::identity(3, 0)};
  const auto classes = enumerate_g_torsors(g, make_frame(FiniteField::get(3), 2, 1), 3);
  CHECK(classes.size() == 1);
  CHECK(classes[0].aut_count == 1);
}

TEST_CASE("vector codes") {
  CHECK(fp_vector_code(3, {1, 2}) == 7);
  CHECK(fp_vector_decode(3, 2, 7) == std::vector<std::uint32_t>{1, 2});
}
