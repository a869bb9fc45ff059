#pragma once

// Finite groupoids at desk scale: explicit objects, arrows and composition
// table, validated on construction. Used to check mass bookkeeping,
// rigidification by central subgroups and 2-fiber products on small models.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include <boost/rational.hpp>

namespace ftk {

using Rational = boost::rational<std::int64_t>;

/// Finite group given by its multiplication table; element 0 need not be the identity.
class FiniteGroup {
 public:
  FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table);

  static FiniteGroup cyclic(int n);
  static FiniteGroup klein();
  /// Dihedral group of order 2n; dihedral(3) is S_3.
  static FiniteGroup dihedral(int n);
  static FiniteGroup quaternion();
  /// Direct product with componentwise names "a,b".
  static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

  int order() const noexcept { return static_cast<int>(names_.size()); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int identity() const noexcept { return identity_; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::string& name(int a) const { return names_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& names() const noexcept { return names_; }
  const std::vector<std::vector<int>>& table() const noexcept { return table_; }

  bool is_subgroup(const std::vector<int>& h) const;
  bool is_normal(const std::vector<int>& h) const;
  std::vector<int> center() const;
  /// Subgroup generated by the given elements, sorted.
  std::vector<int> generated(const std::vector<int>& gens) const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

struct Quotient {
  FiniteGroup group;
  /// Element of G -> coset index.
  std::vector<int> projection;
};

/// G / N for a normal subgroup N; throws DomainError otherwise.
Quotient quotient(const FiniteGroup& g, const std::vector<int>& normal);

struct Arrow {
  int src;
  int dst;
  std::string label;
};

class FiniteGroupoid {
 public:
  static constexpr std::size_t kMaxObjects = 64;
  static constexpr std::size_t kMaxArrows = 4096;

  /// compose(g, f) is looked up as composition[{g, f}] for dst(f) = src(g);
  /// the callback must be defined on every composable pair.
  template <typename Compose>
  FiniteGroupoid(std::vector<std::string> objects, std::vector<Arrow> arrows, Compose&& compose)
      : objects_(std::move(objects)), arrows_(std::move(arrows)) {
    index_arrows();
    for (std::size_t f = 0; f < arrows_.size(); ++f) {
      const auto& out = out_[static_cast<std::size_t>(arrows_[f].dst)];
      after_[f].resize(out.size());
      for (std::size_t i = 0; i < out.size(); ++i) after_[f][i] = compose(out[i], static_cast<int>(f));
    }
    validate();
  }

  std::size_t object_count() const noexcept { return objects_.size(); }
  std::size_t arrow_count() const noexcept { return arrows_.size(); }
  const std::string& object(int x) const { return objects_[static_cast<std::size_t>(x)]; }
  const std::vector<std::string>& objects() const noexcept { return objects_; }
  const Arrow& arrow(int f) const { return arrows_[static_cast<std::size_t>(f)]; }
  const std::vector<Arrow>& arrows() const noexcept { return arrows_; }

  /// g o f; requires dst(f) = src(g).
  int compose(int g, int f) const;
  int identity(int x) const { return identity_[static_cast<std::size_t>(x)]; }
  int inverse(int f) const { return inverse_[static_cast<std::size_t>(f)]; }
  /// Arrows x -> y in increasing index order.
  std::vector<int> homs(int x, int y) const;
  std::vector<int> aut(int x) const { return homs(x, x); }
  /// Arrows with the given source.
  const std::vector<int>& out(int x) const { return out_[static_cast<std::size_t>(x)]; }

  /// Isomorphism classes as sorted object lists, ordered by least member.
  std::vector<std::vector<int>> iso_classes() const;

 private:
  void index_arrows();
  void validate();

  std::vector<std::string> objects_;
  std::vector<Arrow> arrows_;
  std::vector<std::vector<int>> out_;
  std::vector<int> pos_in_out_;
  std::vector<std::vector<int>> after_;
  std::vector<int> identity_;
  std::vector<int> inverse_;
};

FiniteGroupoid point_groupoid();
/// k objects, identities only.
FiniteGroupoid discrete_groupoid(int k);
FiniteGroupoid classifying_groupoid(const FiniteGroup& g);
/// Objects = set elements, arrows (g, x): x -> action[g][x].
FiniteGroupoid action_groupoid(const FiniteGroup& g, const std::vector<std::vector<int>>& action);
FiniteGroupoid product(const FiniteGroupoid& a, const FiniteGroupoid& b);
/// Disjoint union.
FiniteGroupoid coproduct(const FiniteGroupoid& a, const FiniteGroupoid& b);

Rational groupoid_mass(const FiniteGroupoid& g);

/// Per iso class (ordered as iso_classes()), |Aut| of its members.
std::vector<std::uint64_t> aut_orders(const FiniteGroupoid& g);

/// For each object x a subgroup H_x of Aut(x), as arrow indices.
struct CentralAutSubgroup {
  std::vector<std::vector<int>> h;
};

/// Throws DomainError unless every H_x is a subgroup and f H_x f^-1 = H_y.
void validate(const FiniteGroupoid& g, const CentralAutSubgroup& h);
CentralAutSubgroup full_inertia(const FiniteGroupoid& g);
CentralAutSubgroup trivial_inertia(const FiniteGroupoid& g);

/// Same objects, hom(x, y) replaced by the orbits {h o f : h in H_y}.
FiniteGroupoid rigidify(const FiniteGroupoid& g, const CentralAutSubgroup& h);

struct Functor {
  const FiniteGroupoid* source;
  const FiniteGroupoid* target;
  std::vector<int> on_objects;
  std::vector<int> on_arrows;
};

/// Throws DomainError unless F preserves endpoints, identities and composition.
void validate(const Functor& f);
Functor identity_functor(const FiniteGroupoid& g);
Functor to_point(const FiniteGroupoid& g, const FiniteGroupoid& point);
/// B(pi): B G -> B Q for a group homomorphism given elementwise.
Functor classifying_functor(const FiniteGroupoid& bg, const FiniteGroupoid& bq,
                            const std::vector<int>& hom);

/// Objects (x, y, a: F x -> K y); arrows (u, v) with a' F(u) = K(v) a.
FiniteGroupoid groupoid_fiber_product(const Functor& f, const Functor& k);

/// Are two groupoids indistinguishable by class count, sorted aut orders and mass?
bool same_invariants(const FiniteGroupoid& a, const FiniteGroupoid& b);

// Direct systems of finite sets indexed 0..N.
struct SetSystem {
  std::vector<int> sizes;
  /// transitions[n][x] in [0, sizes[n+1]).
  std::vector<std::vector<int>> transitions;
};

struct CospanSystem {
  SetSystem x, y, z;
  /// f[n]: X_n -> Y_n and g[n]: Z_n -> Y_n, commuting with transitions.
  std::vector<std::vector<int>> f, g;
};

/// Throws DomainError when shapes or commuting squares fail.
void validate(const CospanSystem& s);

/// Computes colim(X_n x_{Y_n} Z_n) and colim X x_{colim Y} colim Z by
/// union-find and checks that the canonical map between them is a bijection.
bool colim_fiber_product_check(const CospanSystem& s);

CospanSystem random_cospan_system(std::mt19937_64& rng, int max_levels = 4, int max_size = 6);

struct GroupoidWithSubgroup {
  FiniteGroupoid groupoid;
  CentralAutSubgroup subgroup;
};

/// Disjoint union of 1..3 components, each k objects with automorphism
/// group Gamma and H_x a normal subgroup of Gamma; arrow order shuffled.
GroupoidWithSubgroup random_groupoid_with_subgroup(std::mt19937_64& rng);

}  // namespace ftk
