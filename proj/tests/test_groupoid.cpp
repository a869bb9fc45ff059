#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "ftk/errors.hpp"
#include "ftk/groupoid.hpp"

using namespace ftk;

TEST_CASE("groups") {
  CHECK(FiniteGroup::dihedral(3).order() == 6);
  CHECK(FiniteGroup::quaternion().center().size() == 2);
  CHECK(FiniteGroup::klein().center().size() == 4);
  CHECK(FiniteGroup::dihedral(4).center().size() == 2);
  const auto z4 = FiniteGroup::cyclic(4);
  CHECK(z4.generated({1}).size() == 4);
  CHECK(z4.is_normal(z4.generated({2})));
  CHECK(!FiniteGroup::dihedral(3).is_normal(FiniteGroup::dihedral(3).generated({3})));
  CHECK(quotient(z4, z4.generated({2})).group.order() == 2);
  CHECK_THROWS(FiniteGroup({"a", "b"}, {{0, 0}, {0, 0}}));
}

TEST_CASE("masses") {
  CHECK(groupoid_mass(classifying_groupoid(FiniteGroup::cyclic(3))) == Rational(1, 3));
  CHECK(groupoid_mass(discrete_groupoid(5)) == Rational(5));
  CHECK(groupoid_mass(point_groupoid()) == Rational(1));
  // H acting on itself by translation: |H| objects, one class, trivial stabilizers
  const auto h = FiniteGroup::klein();
  std::vector<std::vector<int>> translate(4, std::vector<int>(4));
  for (int g = 0; g < 4; ++g)
    for (int x = 0; x < 4; ++x) translate[static_cast<std::size_t>(g)][static_cast<std::size_t>(x)] = h.mul(g, x);
  const auto act = action_groupoid(h, translate);
  CHECK(act.object_count() == 4);
  CHECK(act.iso_classes().size() == 1);
  CHECK(groupoid_mass(act) == Rational(1));
  CHECK(groupoid_mass(product(classifying_groupoid(FiniteGroup::cyclic(2)), discrete_groupoid(3))) == Rational(3, 2));
  CHECK(groupoid_mass(coproduct(point_groupoid(), classifying_groupoid(FiniteGroup::cyclic(4)))) == Rational(5, 4));
}

TEST_CASE("rigidification") {
  const auto bq8 = classifying_groupoid(FiniteGroup::quaternion());
  const auto pt = rigidify(bq8, full_inertia(bq8));
  CHECK(pt.object_count() == 1);
  CHECK(pt.arrow_count() == 1);
  const auto same = rigidify(bq8, trivial_inertia(bq8));
  CHECK(same_invariants(same, bq8));
  CHECK(same.arrow_count() == bq8.arrow_count());
  // B(Z/4) // Z/2 = B(Z/2)
  const auto bz4 = classifying_groupoid(FiniteGroup::cyclic(4));
  CentralAutSubgroup h{{{bz4.identity(0)}}};
  for (int a : bz4.aut(0))
    if (a != bz4.identity(0) && bz4.compose(a, a) == bz4.identity(0)) h.h[0].push_back(a);
  const auto quo = rigidify(bz4, h);
  CHECK(quo.arrow_count() == 2);
  CHECK(same_invariants(quo, classifying_groupoid(FiniteGroup::cyclic(2))));
  CHECK(groupoid_mass(quo) == 2 * groupoid_mass(bz4));
  // a non-normal subgroup is refused
  const auto d3 = FiniteGroup::dihedral(3);
  const auto bd3 = classifying_groupoid(d3);
  CentralAutSubgroup bad{{{}}};
  for (int a : d3.generated({3})) bad.h[0].push_back(a);  // arrows of B G are indexed like G
  CHECK_THROWS_AS(validate(bd3, bad), DomainError);
}

TEST_CASE("random rigidifications scale mass") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 20; ++i) {
    const auto gs = random_groupoid_with_subgroup(rng);
    Rational expected(0);
    for (const auto& cls : gs.groupoid.iso_classes())
      expected += Rational(static_cast<std::int64_t>(gs.subgroup.h[static_cast<std::size_t>(cls[0])].size()),
                           static_cast<std::int64_t>(gs.groupoid.aut(cls[0]).size()));
    CHECK(groupoid_mass(rigidify(gs.groupoid, gs.subgroup)) == expected);
  }
}

TEST_CASE("fiber products") {
  const auto bz3 = classifying_groupoid(FiniteGroup::cyclic(3));
  const auto bz2 = classifying_groupoid(FiniteGroup::cyclic(2));
  const auto pt = point_groupoid();
  const auto fp = groupoid_fiber_product(to_point(bz3, pt), to_point(bz2, pt));
  CHECK(same_invariants(fp, product(bz3, bz2)));
  for (const auto& g : {FiniteGroup::cyclic(4), FiniteGroup::quaternion()}) {
    const auto hsub = g.order() == 4 ? g.generated({2}) : g.center();
    const auto q = quotient(g, hsub);
    const auto bg = classifying_groupoid(g), bq = classifying_groupoid(q.group);
    const auto f = classifying_functor(bg, bq, q.projection);
    const auto lhs = groupoid_fiber_product(f, f);
    const auto rhs = product(bg, classifying_groupoid(FiniteGroup::cyclic(2)));
    CHECK(same_invariants(lhs, rhs));
    CHECK(lhs.iso_classes().size() == rhs.iso_classes().size());
  }
}

TEST_CASE("functors are validated") {
  const auto bz4 = classifying_groupoid(FiniteGroup::cyclic(4));
  const auto bz2 = classifying_groupoid(FiniteGroup::cyclic(2));
  CHECK_NOTHROW(validate(identity_functor(bz4)));
  CHECK_THROWS_AS(classifying_functor(bz4, bz2, {0, 1, 1, 0}), DomainError);  // not a homomorphism
}

TEST_CASE("colimits commute with fiber products") {
  // constant systems
  CospanSystem c{{{2, 2}, {{0, 1}}}, {{1, 1}, {{0}}}, {{3, 3}, {{0, 1, 2}}}, {{0, 0}, {0, 0}}, {{0, 0, 0}, {0, 0, 0}}};
  CHECK(colim_fiber_product_check(c));
  // F_2-vector spaces F_2^1 -> F_2^2 -> F_2^3 under v -> (v, 0)
  auto incl = [](int from) {
    std::vector<int> t(static_cast<std::size_t>(1 << from));
    for (int v = 0; v < (1 << from); ++v) t[static_cast<std::size_t>(v)] = v;
    return t;
  };
  SetSystem x{{2, 4, 8}, {incl(1), incl(2)}};
  SetSystem y{{1, 1, 1}, {{0}, {0}}};
  CospanSystem v{x, y, x, {std::vector<int>(2, 0), std::vector<int>(4, 0), std::vector<int>(8, 0)},
                 {std::vector<int>(2, 0), std::vector<int>(4, 0), std::vector<int>(8, 0)}};
  CHECK(colim_fiber_product_check(v));
  std::mt19937_64 rng(99);
  for (int i = 0; i < 50; ++i) CHECK(colim_fiber_product_check(random_cospan_system(rng, 4, 6)));
  CospanSystem bad = c;
  bad.f.pop_back();
  CHECK_THROWS_AS(colim_fiber_product_check(bad), DomainError);
}

TEST_CASE("size caps") {
  CHECK_THROWS_AS(discrete_groupoid(65), ScaleExceeded);
}
