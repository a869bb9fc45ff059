#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ftk/errors.hpp"
#include "ftk/field.hpp"
#include "ftk/oracles.hpp"

using namespace ftk;

// Values below were produced by the oracles and checked by hand against the
// closed forms |F_q / (F^p - F)| * q^#{i <= m : p does not divide i} and
// n * |F_q^* / (F_q^*)^n|.

TEST_CASE("Artin-Schreier orbit counts") {
  struct Case { std::uint32_t p, e; std::int64_t m; std::uint64_t elements, orbits; std::int64_t low; };
  for (const auto& c : {Case{2, 1, 1, 16, 4, -1}, Case{2, 1, 3, 64, 8, -3}, Case{3, 1, 2, 243, 27, -2},
                        Case{2, 2, 1, 256, 8, -1}}) {
    const auto o = oracle::artin_schreier_orbits(FiniteField::get(c.p, c.e), c.m);
    CHECK(o.count.elements == c.elements);
    CHECK(o.count.orbits == c.orbits);
    CHECK(o.low == c.low);
    CHECK(o.top == 3);
    CHECK(o.orbit_of.size() == c.elements);
    CHECK(std::set<std::uint32_t>(o.orbit_of.begin(), o.orbit_of.end()).size() == c.orbits);
  }
}

TEST_CASE("Kummer orbit counts") {
  CHECK(oracle::kummer_orbits(FiniteField::get(5), 4).orbits == 16);
  CHECK(oracle::kummer_orbits(FiniteField::get(5), 4).elements == 800);
  CHECK(oracle::kummer_orbits(FiniteField::get(7), 3).orbits == 9);
  CHECK(oracle::kummer_orbits(FiniteField::get(2, 2), 3).orbits == 9);
  CHECK(oracle::kummer_orbits(FiniteField::get(3), 2).orbits == 4);
}

TEST_CASE("Kummer witnesses") {
  const auto k = FiniteField::get(5);
  // 4 t^-1 = 2^2 * t^-1
  CHECK(oracle::kummer_witness_exists(k, 2, {{-1, 1}}, {{-1, 4}}, -2, 3));
  // 2 is not a square mod 5
  CHECK(!oracle::kummer_witness_exists(k, 2, {{-1, 1}}, {{-1, 2}}, -2, 3));
  // valuations differ by an odd amount
  CHECK(!oracle::kummer_witness_exists(k, 2, {{-1, 1}}, {{0, 1}}, -2, 3));
}

TEST_CASE("semidirect census for S3") {
  const auto c = oracle::semidirect_census(SemidirectGroup{3, 1, 2, FpMatrix(3, 1, {2})}, FiniteField::get(3), 1, 4);
  CHECK(c.objects == 243);
  CHECK(c.classes == 3);
  CHECK(c.aut_orders == std::vector<std::uint64_t>{1, 1, 1});
}

TEST_CASE("constancy scans") {
  const auto f2 = FiniteField::get(2);
  const auto a = oracle::constancy_scan(CoeffRing::get(f2, 2), -2, 2, 1);
  CHECK(a.scanned == 256);
  CHECK(a.solutions == 1);
  CHECK(a.nonconstant == 0);
  const auto b = oracle::constancy_scan(CoeffRing::field(FiniteField::get(3)), -3, 3, 2);
  CHECK(b.scanned == 729);
  CHECK(b.solutions == 2);
  CHECK(b.nonconstant == 0);
  const auto c = oracle::constancy_scan(CoeffRing::get(f2, 2), -2, 2, 0);
  CHECK(c.solutions == 2);
  CHECK(c.nonconstant == 0);
}
