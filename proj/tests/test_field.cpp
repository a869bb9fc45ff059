#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "ftk/errors.hpp"
#include "ftk/field.hpp"

using namespace ftk;

TEST_CASE("defining polynomials are the smallest irreducibles") {
  CHECK(FiniteField::get(2, 2)->modulus() == std::vector<std::uint32_t>{1, 1, 1});  // g^2 + g + 1
  CHECK(FiniteField::get(3, 2)->modulus() == std::vector<std::uint32_t>{1, 0, 1});  // g^2 + 1
  CHECK(FiniteField::get(2, 3)->modulus() == std::vector<std::uint32_t>{1, 1, 0, 1});
  CHECK(FiniteField::get(2, 2).get() == FiniteField::get(2, 2).get());
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (auto [p, e] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {3u, 2u}, {5u, 1u}, {2u, 3u}}) {
    const auto k = FiniteField::get(p, e);
    for (Elem a = 0; a < k->q(); ++a) {
      CHECK(k->add(a, k->neg(a)) == 0);
      if (a != 0) CHECK(k->mul(a, k->inv(a)) == 1);
      CHECK(k->pow(a, k->q()) == a);
      CHECK(k->frobenius(k->pth_root(a)) == a);
      for (Elem b = 0; b < k->q(); ++b) {
        CHECK(k->mul(a, b) == k->mul(b, a));
        CHECK(k->frobenius(k->add(a, b)) == k->add(k->frobenius(a), k->frobenius(b)));
      }
    }
  }
}

TEST_CASE("Frobenius and p-th roots") {
  CHECK(FiniteField::get(2)->frobenius(1) == 1);
  const auto f9 = FiniteField::get(3, 2);
  CHECK(f9->frobenius(f9->g()) == f9->mul(2, f9->g()));  // g^3 = -g
  CHECK(FiniteField::get(3)->frobenius(2) == 2);
  const auto f4 = FiniteField::get(2, 2);
  CHECK(f4->pth_root(f4->mul(f4->g(), f4->g())) == f4->g());
  CHECK(FiniteField::get(5)->pth_root(3) == 3);
}

TEST_CASE("Artin-Schreier residue equations") {
  CHECK(FiniteField::get(2)->as_residue_solve(0) == std::vector<Elem>{0, 1});
  CHECK(FiniteField::get(2)->as_residue_solve(1).empty());
  const auto f4 = FiniteField::get(2, 2);
  CHECK(f4->as_residue_solve(1).size() == 2);
  for (Elem u : f4->as_residue_solve(1)) CHECK(f4->sub(f4->frobenius(u), u) == 1);
  // the transversal has p elements, one per coset
  for (auto [p, e] : {std::pair{2u, 2u}, {3u, 2u}, {5u, 1u}}) {
    const auto k = FiniteField::get(p, e);
    CHECK(k->transversal().size() == p);
    std::set<Elem> reps;
    for (Elem c = 0; c < k->q(); ++c) reps.insert(k->transversal_rep(c));
    CHECK(reps.size() == p);
  }
}

TEST_CASE("n-th power classes") {
  for (auto [p, e] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {2u, 2u}})
    CHECK(FiniteField::get(p, e)->nth_power_class(1, 4 % p == 0 ? 3 : 4) == 0);
  CHECK(FiniteField::get(5)->generator() == 2);
  CHECK(FiniteField::get(5)->nth_power_class(2, 4) == 1);
  CHECK(FiniteField::get(7)->nth_power_class(6, 3) == 0);
  CHECK_THROWS_AS(nth_power_class(FqElem(FiniteField::get(5), 2), 5), DomainError);
  CHECK_THROWS_AS(nth_power_class(FqElem(FiniteField::get(5), 0), 2), DomainError);
}

TEST_CASE("roots of unity") {
  CHECK(FiniteField::get(5)->roots_of_unity(4) == std::vector<Elem>{1, 2, 3, 4});
  CHECK(FiniteField::get(7)->roots_of_unity(2) == std::vector<Elem>{1, 6});
  CHECK(FiniteField::get(7)->roots_of_unity(1) == std::vector<Elem>{1});
  const auto k = FiniteField::get(7);
  const Elem z = k->primitive_root_of_unity(3);
  CHECK(k->pow(z, 3) == 1);
  CHECK(z != 1);
}

TEST_CASE("value wrapper rejects mixed fields") {
  const FqElem a(FiniteField::get(5), 2), b(FiniteField::get(7), 2);
  CHECK_THROWS(a + b);
  CHECK((a * a).code() == 4);
  CHECK(frobenius(a) == a);
}
