#include "ftk/groupoid.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <tuple>

#include "ftk/errors.hpp"

namespace ftk {

namespace {

constexpr int kMaxGroupOrder = 256;
constexpr std::uint64_t kMaxTriples = std::uint64_t{1} << 26;

struct UnionFind {
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  std::size_t find(std::size_t a) {
    while (parent[a] != a) a = parent[a] = parent[parent[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  std::vector<std::size_t> parent;
};

}  // namespace

// ---------------------------------------------------------------- groups

FiniteGroup::FiniteGroup(std::vector<std::string> names, std::vector<std::vector<int>> table)
    : names_(std::move(names)), table_(std::move(table)) {
  const int n = order();
  if (n == 0) throw DomainError("a group needs at least one element");
  if (n > kMaxGroupOrder) throw ScaleExceeded("group order above " + std::to_string(kMaxGroupOrder));
  if (static_cast<int>(table_.size()) != n) throw DomainError("multiplication table has wrong size");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw DomainError("multiplication table is not square");
    for (int v : row)
      if (v < 0 || v >= n) throw DomainError("multiplication table entry out of range");
  }
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw DomainError("multiplication table has no identity");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[static_cast<std::size_t>(a)] = b;
    if (inverse_[static_cast<std::size_t>(a)] < 0) throw DomainError("element " + name(a) + " has no inverse");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) throw DomainError("multiplication is not associative");
}

FiniteGroup FiniteGroup::cyclic(int n) {
  if (n < 1) throw DomainError("cyclic group order must be positive");
  std::vector<std::string> names;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a) {
    names.push_back(std::to_string(a));
    for (int b = 0; b < n; ++b) t[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b) % n;
  }
  return {std::move(names), std::move(t)};
}

FiniteGroup FiniteGroup::klein() { return product(cyclic(2), cyclic(2)); }

FiniteGroup FiniteGroup::dihedral(int n) {
  if (n < 1) throw DomainError("dihedral group needs n >= 1");
  // r^i s^j at index i + n j; s r = r^-1 s.
  std::vector<std::string> names;
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < n; ++i) names.push_back("r" + std::to_string(i) + (j ? "s" : ""));
  const int m = 2 * n;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      const int a = x % n, b = x / n, c = y % n, d = y / n;
      const int i = ((a + (b ? -c : c)) % n + n) % n;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = i + n * ((b + d) % 2);
    }
  return {std::move(names), std::move(t)};
}

FiniteGroup FiniteGroup::quaternion() {
  // index = unit + 4 * sign, units 1, i, j, k.
  static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static const int unit_sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  const char* unit_names[4] = {"1", "i", "j", "k"};
  std::vector<std::string> names;
  for (int s = 0; s < 2; ++s)
    for (int u = 0; u < 4; ++u) names.push_back(std::string(s ? "-" : "") + unit_names[u]);
  std::vector<std::vector<int>> t(8, std::vector<int>(8));
  for (int x = 0; x < 8; ++x)
    for (int y = 0; y < 8; ++y) {
      const int ux = x % 4, uy = y % 4;
      const int sign = (x / 4 + y / 4 + unit_sign[ux][uy]) % 2;
      t[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] = unit_mul[ux][uy] + 4 * sign;
    }
  return {std::move(names), std::move(t)};
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
  const int na = a.order(), nb = b.order();
  std::vector<std::string> names;
  for (int x = 0; x < na; ++x)
    for (int y = 0; y < nb; ++y) names.push_back(a.name(x) + "," + b.name(y));
  std::vector<std::vector<int>> t(static_cast<std::size_t>(na * nb), std::vector<int>(static_cast<std::size_t>(na * nb)));
  for (int u = 0; u < na * nb; ++u)
    for (int v = 0; v < na * nb; ++v)
      t[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] =
          a.mul(u / nb, v / nb) * nb + b.mul(u % nb, v % nb);
  return {std::move(names), std::move(t)};
}

bool FiniteGroup::is_subgroup(const std::vector<int>& h) const {
  const std::set<int> s(h.begin(), h.end());
  if (!s.count(identity_)) return false;
  for (int a : s) {
    if (a < 0 || a >= order()) return false;
    for (int b : s)
      if (!s.count(mul(a, b))) return false;
  }
  return true;
}

bool FiniteGroup::is_normal(const std::vector<int>& h) const {
  if (!is_subgroup(h)) return false;
  const std::set<int> s(h.begin(), h.end());
  for (int g = 0; g < order(); ++g)
    for (int a : s)
      if (!s.count(mul(mul(g, a), inverse(g)))) return false;
  return true;
}

std::vector<int> FiniteGroup::center() const {
  std::vector<int> z;
  for (int a = 0; a < order(); ++a) {
    bool central = true;
    for (int b = 0; b < order() && central; ++b) central = mul(a, b) == mul(b, a);
    if (central) z.push_back(a);
  }
  return z;
}

std::vector<int> FiniteGroup::generated(const std::vector<int>& gens) const {
  std::set<int> s{identity_};
  std::vector<int> frontier{identity_};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int g : gens) {
        const int b = mul(a, g);
        if (s.insert(b).second) next.push_back(b);
      }
    frontier = std::move(next);
  }
  return {s.begin(), s.end()};
}

Quotient quotient(const FiniteGroup& g, const std::vector<int>& normal) {
  if (!g.is_normal(normal)) throw DomainError("quotient needs a normal subgroup");
  std::vector<int> coset(static_cast<std::size_t>(g.order()), -1);
  std::vector<int> reps;
  for (int a = 0; a < g.order(); ++a) {
    if (coset[static_cast<std::size_t>(a)] >= 0) continue;
    const int idx = static_cast<int>(reps.size());
    reps.push_back(a);
    for (int h : normal) coset[static_cast<std::size_t>(g.mul(a, h))] = idx;
  }
  const int m = static_cast<int>(reps.size());
  std::vector<std::string> names;
  std::vector<std::vector<int>> t(static_cast<std::size_t>(m), std::vector<int>(static_cast<std::size_t>(m)));
  for (int i = 0; i < m; ++i) {
    names.push_back(g.name(reps[static_cast<std::size_t>(i)]) + "N");
    for (int j = 0; j < m; ++j)
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          coset[static_cast<std::size_t>(g.mul(reps[static_cast<std::size_t>(i)], reps[static_cast<std::size_t>(j)]))];
  }
  return {FiniteGroup(std::move(names), std::move(t)), std::move(coset)};
}

// ---------------------------------------------------------------- groupoids

void FiniteGroupoid::index_arrows() {
  if (objects_.size() > kMaxObjects) {
    throw ScaleExceeded(std::to_string(objects_.size()) + " objects exceed the groupoid cap of 64");
  }
  if (arrows_.size() > kMaxArrows) {
    throw ScaleExceeded(std::to_string(arrows_.size()) + " arrows exceed the groupoid cap of 4096");
  }
  out_.assign(objects_.size(), {});
  pos_in_out_.assign(arrows_.size(), 0);
  after_.assign(arrows_.size(), {});
  const int nobj = static_cast<int>(objects_.size());
  for (std::size_t f = 0; f < arrows_.size(); ++f) {
    const Arrow& a = arrows_[f];
    if (a.src < 0 || a.src >= nobj || a.dst < 0 || a.dst >= nobj) {
      throw DomainError("arrow " + a.label + " has an endpoint outside the object list");
    }
    auto& out = out_[static_cast<std::size_t>(a.src)];
    pos_in_out_[f] = static_cast<int>(out.size());
    out.push_back(static_cast<int>(f));
  }
}

int FiniteGroupoid::compose(int g, int f) const {
  if (arrows_[static_cast<std::size_t>(g)].src != arrows_[static_cast<std::size_t>(f)].dst) {
    throw DomainError("arrows " + arrow(g).label + " and " + arrow(f).label + " are not composable");
  }
  return after_[static_cast<std::size_t>(f)][static_cast<std::size_t>(pos_in_out_[static_cast<std::size_t>(g)])];
}

std::vector<int> FiniteGroupoid::homs(int x, int y) const {
  std::vector<int> h;
  for (int f : out(x))
    if (arrow(f).dst == y) h.push_back(f);
  return h;
}

void FiniteGroupoid::validate() {
  const int na = static_cast<int>(arrows_.size());
  std::uint64_t triples = 0;
  for (int f = 0; f < na; ++f) {
    for (std::size_t i = 0; i < after_[static_cast<std::size_t>(f)].size(); ++i) {
      const int h = after_[static_cast<std::size_t>(f)][i];
      const int g = out_[static_cast<std::size_t>(arrow(f).dst)][i];
      if (h < 0 || h >= na || arrow(h).src != arrow(f).src || arrow(h).dst != arrow(g).dst) {
        throw DomainError("composite of " + arrow(g).label + " and " + arrow(f).label + " has wrong endpoints");
      }
      triples += out_[static_cast<std::size_t>(arrow(g).dst)].size();
    }
  }
  if (triples > kMaxTriples) throw ScaleExceeded("too many composable triples to validate");

  identity_.assign(objects_.size(), -1);
  for (int x = 0; x < static_cast<int>(objects_.size()); ++x) {
    for (int e : aut(x)) {
      if (compose(e, e) != e) continue;
      identity_[static_cast<std::size_t>(x)] = e;
      break;
    }
    if (identity_[static_cast<std::size_t>(x)] < 0) throw DomainError("object " + object(x) + " has no identity");
  }
  for (int f = 0; f < na; ++f) {
    const Arrow& a = arrow(f);
    if (compose(identity(a.dst), f) != f || compose(f, identity(a.src)) != f) {
      throw DomainError("identity is not neutral on arrow " + a.label);
    }
  }
  inverse_.assign(arrows_.size(), -1);
  for (int f = 0; f < na; ++f) {
    const Arrow& a = arrow(f);
    for (int g : homs(a.dst, a.src)) {
      if (compose(g, f) == identity(a.src) && compose(f, g) == identity(a.dst)) {
        inverse_[static_cast<std::size_t>(f)] = g;
        break;
      }
    }
    if (inverse_[static_cast<std::size_t>(f)] < 0) throw DomainError("arrow " + a.label + " is not invertible");
  }
  for (int f = 0; f < na; ++f)
    for (int g : out(arrow(f).dst))
      for (int h : out(arrow(g).dst))
        if (compose(h, compose(g, f)) != compose(compose(h, g), f)) {
          throw DomainError("composition is not associative at " + arrow(h).label + ", " +
                            arrow(g).label + ", " + arrow(f).label);
        }
}

std::vector<std::vector<int>> FiniteGroupoid::iso_classes() const {
  UnionFind uf(objects_.size());
  for (const Arrow& a : arrows_) uf.unite(static_cast<std::size_t>(a.src), static_cast<std::size_t>(a.dst));
  std::map<std::size_t, std::vector<int>> classes;
  for (std::size_t x = 0; x < objects_.size(); ++x) classes[uf.find(x)].push_back(static_cast<int>(x));
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : classes) out.push_back(std::move(members));
  return out;
}

FiniteGroupoid point_groupoid() { return discrete_groupoid(1); }

FiniteGroupoid discrete_groupoid(int k) {
  std::vector<std::string> objs;
  std::vector<Arrow> arrows;
  for (int x = 0; x < k; ++x) {
    objs.push_back(std::to_string(x));
    arrows.push_back({x, x, "id" + std::to_string(x)});
  }
  return {std::move(objs), std::move(arrows), [](int g, int) { return g; }};
}

FiniteGroupoid classifying_groupoid(const FiniteGroup& g) {
  std::vector<Arrow> arrows;
  for (int a = 0; a < g.order(); ++a) arrows.push_back({0, 0, g.name(a)});
  return {{"*"}, std::move(arrows), [&](int x, int y) { return g.mul(x, y); }};
}

FiniteGroupoid action_groupoid(const FiniteGroup& g, const std::vector<std::vector<int>>& action) {
  if (static_cast<int>(action.size()) != g.order()) throw DomainError("action table needs one row per element");
  const int n = action.empty() ? 0 : static_cast<int>(action[0].size());
  std::vector<std::string> objs;
  for (int x = 0; x < n; ++x) objs.push_back(std::to_string(x));
  std::vector<Arrow> arrows;
  for (int a = 0; a < g.order(); ++a) {
    if (static_cast<int>(action[static_cast<std::size_t>(a)].size()) != n) throw DomainError("ragged action table");
    for (int x = 0; x < n; ++x) {
      const int y = action[static_cast<std::size_t>(a)][static_cast<std::size_t>(x)];
      if (y < 0 || y >= n) throw DomainError("action moves a point outside the set");
      arrows.push_back({x, y, g.name(a) + "@" + std::to_string(x)});
    }
  }
  return {std::move(objs), std::move(arrows), [&](int h, int f) {
            // (b, y) o (a, x) = (ba, x)
            return g.mul(h / n, f / n) * n + f % n;
          }};
}

FiniteGroupoid product(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const int nb = static_cast<int>(b.object_count());
  const int mb = static_cast<int>(b.arrow_count());
  std::vector<std::string> objs;
  for (const auto& x : a.objects())
    for (const auto& y : b.objects()) objs.push_back("(" + x + "," + y + ")");
  std::vector<Arrow> arrows;
  for (const Arrow& f : a.arrows())
    for (const Arrow& g : b.arrows())
      arrows.push_back({f.src * nb + g.src, f.dst * nb + g.dst, "(" + f.label + "," + g.label + ")"});
  return {std::move(objs), std::move(arrows), [&](int h, int f) {
            return a.compose(h / mb, f / mb) * mb + b.compose(h % mb, f % mb);
          }};
}

FiniteGroupoid coproduct(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  const int na = static_cast<int>(a.object_count());
  const int ma = static_cast<int>(a.arrow_count());
  std::vector<std::string> objs = a.objects();
  for (const auto& y : b.objects()) objs.push_back(y);
  std::vector<Arrow> arrows = a.arrows();
  for (const Arrow& g : b.arrows()) arrows.push_back({g.src + na, g.dst + na, g.label});
  return {std::move(objs), std::move(arrows), [&](int h, int f) {
            return f < ma ? a.compose(h, f) : b.compose(h - ma, f - ma) + ma;
          }};
}

Rational groupoid_mass(const FiniteGroupoid& g) {
  Rational m(0);
  for (const auto& cls : g.iso_classes()) m += Rational(1, static_cast<std::int64_t>(g.aut(cls[0]).size()));
  return m;
}

std::vector<std::uint64_t> aut_orders(const FiniteGroupoid& g) {
  std::vector<std::uint64_t> out;
  for (const auto& cls : g.iso_classes()) out.push_back(g.aut(cls[0]).size());
  return out;
}

// ---------------------------------------------------------------- rigidification

void validate(const FiniteGroupoid& g, const CentralAutSubgroup& h) {
  if (h.h.size() != g.object_count()) throw DomainError("subgroup data needs one entry per object");
  for (int x = 0; x < static_cast<int>(g.object_count()); ++x) {
    const auto& hx = h.h[static_cast<std::size_t>(x)];
    const std::set<int> s(hx.begin(), hx.end());
    if (s.size() != hx.size()) throw DomainError("repeated arrow in H_" + g.object(x));
    if (!s.count(g.identity(x))) throw DomainError("H_" + g.object(x) + " lacks the identity");
    for (int a : s) {
      if (a < 0 || a >= static_cast<int>(g.arrow_count()) || g.arrow(a).src != x || g.arrow(a).dst != x) {
        throw DomainError("H_" + g.object(x) + " contains a non-automorphism");
      }
    }
    for (int a : s)
      for (int b : s)
        if (!s.count(g.compose(a, b))) throw DomainError("H_" + g.object(x) + " is not closed");
  }
  for (int f = 0; f < static_cast<int>(g.arrow_count()); ++f) {
    const Arrow& a = g.arrow(f);
    const auto& hx = h.h[static_cast<std::size_t>(a.src)];
    const auto& hy = h.h[static_cast<std::size_t>(a.dst)];
    const std::set<int> sy(hy.begin(), hy.end());
    if (hx.size() != hy.size()) throw DomainError("conjugation along " + a.label + " changes |H|");
    for (int e : hx)
      if (!sy.count(g.compose(g.compose(f, e), g.inverse(f)))) {
        throw DomainError("conjugation along " + a.label + " does not preserve H");
      }
  }
}

CentralAutSubgroup full_inertia(const FiniteGroupoid& g) {
  CentralAutSubgroup h;
  for (int x = 0; x < static_cast<int>(g.object_count()); ++x) h.h.push_back(g.aut(x));
  return h;
}

CentralAutSubgroup trivial_inertia(const FiniteGroupoid& g) {
  CentralAutSubgroup h;
  for (int x = 0; x < static_cast<int>(g.object_count()); ++x) h.h.push_back({g.identity(x)});
  return h;
}

FiniteGroupoid rigidify(const FiniteGroupoid& g, const CentralAutSubgroup& h) {
  validate(g, h);
  std::vector<int> orbit_of(g.arrow_count(), -1);
  std::vector<int> rep;
  std::vector<Arrow> arrows;
  for (int f = 0; f < static_cast<int>(g.arrow_count()); ++f) {
    if (orbit_of[static_cast<std::size_t>(f)] >= 0) continue;
    const int idx = static_cast<int>(rep.size());
    rep.push_back(f);
    const Arrow& a = g.arrow(f);
    arrows.push_back({a.src, a.dst, "[" + a.label + "]"});
    for (int e : h.h[static_cast<std::size_t>(a.dst)]) orbit_of[static_cast<std::size_t>(g.compose(e, f))] = idx;
  }
  return {g.objects(), std::move(arrows), [&](int b, int a) {
            return orbit_of[static_cast<std::size_t>(g.compose(rep[static_cast<std::size_t>(b)], rep[static_cast<std::size_t>(a)]))];
          }};
}

// ---------------------------------------------------------------- functors

void validate(const Functor& f) {
  const FiniteGroupoid& s = *f.source;
  const FiniteGroupoid& t = *f.target;
  if (f.on_objects.size() != s.object_count() || f.on_arrows.size() != s.arrow_count()) {
    throw DomainError("functor tables do not match the source groupoid");
  }
  for (int x : f.on_objects)
    if (x < 0 || x >= static_cast<int>(t.object_count())) throw DomainError("functor sends an object outside the target");
  for (int a = 0; a < static_cast<int>(s.arrow_count()); ++a) {
    const int b = f.on_arrows[static_cast<std::size_t>(a)];
    if (b < 0 || b >= static_cast<int>(t.arrow_count())) throw DomainError("functor sends an arrow outside the target");
    if (t.arrow(b).src != f.on_objects[static_cast<std::size_t>(s.arrow(a).src)] ||
        t.arrow(b).dst != f.on_objects[static_cast<std::size_t>(s.arrow(a).dst)]) {
      throw DomainError("functor does not preserve the endpoints of " + s.arrow(a).label);
    }
  }
  for (int x = 0; x < static_cast<int>(s.object_count()); ++x)
    if (f.on_arrows[static_cast<std::size_t>(s.identity(x))] != t.identity(f.on_objects[static_cast<std::size_t>(x)])) {
      throw DomainError("functor does not preserve identities");
    }
  for (int a = 0; a < static_cast<int>(s.arrow_count()); ++a)
    for (int b : s.out(s.arrow(a).dst))
      if (f.on_arrows[static_cast<std::size_t>(s.compose(b, a))] !=
          t.compose(f.on_arrows[static_cast<std::size_t>(b)], f.on_arrows[static_cast<std::size_t>(a)])) {
        throw DomainError("functor does not preserve composition");
      }
}

Functor identity_functor(const FiniteGroupoid& g) {
  Functor f{&g, &g, {}, {}};
  f.on_objects.resize(g.object_count());
  std::iota(f.on_objects.begin(), f.on_objects.end(), 0);
  f.on_arrows.resize(g.arrow_count());
  std::iota(f.on_arrows.begin(), f.on_arrows.end(), 0);
  return f;
}

Functor to_point(const FiniteGroupoid& g, const FiniteGroupoid& point) {
  if (point.object_count() != 1 || point.arrow_count() != 1) throw DomainError("target is not the point");
  return {&g, &point, std::vector<int>(g.object_count(), 0), std::vector<int>(g.arrow_count(), 0)};
}

Functor classifying_functor(const FiniteGroupoid& bg, const FiniteGroupoid& bq, const std::vector<int>& hom) {
  Functor f{&bg, &bq, {0}, hom};
  validate(f);
  return f;
}

FiniteGroupoid groupoid_fiber_product(const Functor& f, const Functor& k) {
  validate(f);
  validate(k);
  if (f.target != k.target) throw DomainError("fiber product needs functors into the same groupoid");
  const FiniteGroupoid& g1 = *f.source;
  const FiniteGroupoid& g2 = *k.source;
  const FiniteGroupoid& g3 = *f.target;

  struct Obj {
    int x, y, alpha;
  };
  std::vector<Obj> objs;
  std::vector<std::string> names;
  for (int x = 0; x < static_cast<int>(g1.object_count()); ++x)
    for (int y = 0; y < static_cast<int>(g2.object_count()); ++y)
      for (int a : g3.homs(f.on_objects[static_cast<std::size_t>(x)], k.on_objects[static_cast<std::size_t>(y)])) {
        objs.push_back({x, y, a});
        names.push_back("(" + g1.object(x) + "," + g2.object(y) + "," + g3.arrow(a).label + ")");
        if (objs.size() > FiniteGroupoid::kMaxObjects) throw ScaleExceeded("fiber product exceeds the object cap");
      }

  std::vector<Arrow> arrows;
  std::vector<std::pair<int, int>> parts;
  std::map<std::tuple<int, int, int>, int> index;  // (source object, u, v) -> arrow
  for (int o = 0; o < static_cast<int>(objs.size()); ++o)
    for (int o2 = 0; o2 < static_cast<int>(objs.size()); ++o2) {
      const Obj& s = objs[static_cast<std::size_t>(o)];
      const Obj& t = objs[static_cast<std::size_t>(o2)];
      for (int u : g1.homs(s.x, t.x))
        for (int v : g2.homs(s.y, t.y)) {
          if (g3.compose(t.alpha, f.on_arrows[static_cast<std::size_t>(u)]) !=
              g3.compose(k.on_arrows[static_cast<std::size_t>(v)], s.alpha)) {
            continue;
          }
          index[{o, u, v}] = static_cast<int>(arrows.size());
          arrows.push_back({o, o2, "(" + g1.arrow(u).label + "," + g2.arrow(v).label + ")"});
          parts.emplace_back(u, v);
          if (arrows.size() > FiniteGroupoid::kMaxArrows) throw ScaleExceeded("fiber product exceeds the arrow cap");
        }
    }
  return {std::move(names), arrows, [&](int b, int a) {
            const auto [u, v] = parts[static_cast<std::size_t>(a)];
            const auto [u2, v2] = parts[static_cast<std::size_t>(b)];
            return index.at({arrows[static_cast<std::size_t>(a)].src, g1.compose(u2, u), g2.compose(v2, v)});
          }};
}

bool same_invariants(const FiniteGroupoid& a, const FiniteGroupoid& b) {
  auto oa = aut_orders(a), ob = aut_orders(b);
  std::sort(oa.begin(), oa.end());
  std::sort(ob.begin(), ob.end());
  return oa == ob && groupoid_mass(a) == groupoid_mass(b);
}

// ---------------------------------------------------------------- colimits

namespace {

void validate_system(const SetSystem& s, const char* name) {
  if (s.sizes.empty()) throw DomainError(std::string(name) + " system has no levels");
  if (s.transitions.size() + 1 != s.sizes.size()) throw DomainError(std::string(name) + " system has wrong transition count");
  for (std::size_t n = 0; n + 1 < s.sizes.size(); ++n) {
    if (static_cast<int>(s.transitions[n].size()) != s.sizes[n]) throw DomainError(std::string(name) + " transition has wrong length");
    for (int v : s.transitions[n])
      if (v < 0 || v >= s.sizes[n + 1]) throw DomainError(std::string(name) + " transition leaves the next level");
  }
}

// Flattened colimit: class id of (n, i), and the number of classes.
struct Colimit {
  std::vector<std::size_t> offset;
  std::vector<int> cls;
  int count = 0;
  int of(std::size_t n, int i) const { return cls[offset[n] + static_cast<std::size_t>(i)]; }
};

Colimit colimit(const SetSystem& s) {
  Colimit c;
  std::size_t total = 0;
  for (int sz : s.sizes) {
    c.offset.push_back(total);
    total += static_cast<std::size_t>(sz);
  }
  UnionFind uf(total);
  for (std::size_t n = 0; n + 1 < s.sizes.size(); ++n)
    for (int i = 0; i < s.sizes[n]; ++i)
      uf.unite(c.offset[n] + static_cast<std::size_t>(i), c.offset[n + 1] + static_cast<std::size_t>(s.transitions[n][static_cast<std::size_t>(i)]));
  std::map<std::size_t, int> ids;
  c.cls.resize(total);
  for (std::size_t e = 0; e < total; ++e) {
    const auto [it, fresh] = ids.emplace(uf.find(e), static_cast<int>(ids.size()));
    c.cls[e] = it->second;
  }
  c.count = static_cast<int>(ids.size());
  return c;
}

}  // namespace

void validate(const CospanSystem& s) {
  validate_system(s.x, "X");
  validate_system(s.y, "Y");
  validate_system(s.z, "Z");
  const std::size_t levels = s.x.sizes.size();
  if (s.y.sizes.size() != levels || s.z.sizes.size() != levels || s.f.size() != levels || s.g.size() != levels) {
    throw DomainError("systems have different numbers of levels");
  }
  for (std::size_t n = 0; n < levels; ++n) {
    if (static_cast<int>(s.f[n].size()) != s.x.sizes[n] || static_cast<int>(s.g[n].size()) != s.z.sizes[n]) {
      throw DomainError("cospan map has wrong length");
    }
    for (int v : s.f[n])
      if (v < 0 || v >= s.y.sizes[n]) throw DomainError("f leaves Y");
    for (int v : s.g[n])
      if (v < 0 || v >= s.y.sizes[n]) throw DomainError("g leaves Y");
    if (n + 1 == levels) continue;
    for (int i = 0; i < s.x.sizes[n]; ++i)
      if (s.f[n + 1][static_cast<std::size_t>(s.x.transitions[n][static_cast<std::size_t>(i)])] !=
          s.y.transitions[n][static_cast<std::size_t>(s.f[n][static_cast<std::size_t>(i)])]) {
        throw DomainError("f does not commute with transitions");
      }
    for (int i = 0; i < s.z.sizes[n]; ++i)
      if (s.g[n + 1][static_cast<std::size_t>(s.z.transitions[n][static_cast<std::size_t>(i)])] !=
          s.y.transitions[n][static_cast<std::size_t>(s.g[n][static_cast<std::size_t>(i)])]) {
        throw DomainError("g does not commute with transitions");
      }
  }
}

bool colim_fiber_product_check(const CospanSystem& s) {
  validate(s);
  const std::size_t levels = s.x.sizes.size();

  // Levelwise fiber products P_n with induced transitions.
  SetSystem p;
  std::vector<std::vector<std::pair<int, int>>> pairs(levels);
  std::vector<std::map<std::pair<int, int>, int>> lookup(levels);
  for (std::size_t n = 0; n < levels; ++n) {
    for (int i = 0; i < s.x.sizes[n]; ++i)
      for (int j = 0; j < s.z.sizes[n]; ++j)
        if (s.f[n][static_cast<std::size_t>(i)] == s.g[n][static_cast<std::size_t>(j)]) {
          lookup[n][{i, j}] = static_cast<int>(pairs[n].size());
          pairs[n].emplace_back(i, j);
        }
    p.sizes.push_back(static_cast<int>(pairs[n].size()));
  }
  for (std::size_t n = 0; n + 1 < levels; ++n) {
    std::vector<int> t;
    for (const auto& [i, j] : pairs[n]) {
      t.push_back(lookup[n + 1].at({s.x.transitions[n][static_cast<std::size_t>(i)],
                                    s.z.transitions[n][static_cast<std::size_t>(j)]}));
    }
    p.transitions.push_back(std::move(t));
  }

  const Colimit cp = colimit(p), cx = colimit(s.x), cy = colimit(s.y), cz = colimit(s.z);

  // Induced maps on colimits must be well defined.
  std::vector<int> fx(static_cast<std::size_t>(cx.count), -1), gz(static_cast<std::size_t>(cz.count), -1);
  for (std::size_t n = 0; n < levels; ++n) {
    for (int i = 0; i < s.x.sizes[n]; ++i) {
      int& slot = fx[static_cast<std::size_t>(cx.of(n, i))];
      const int target = cy.of(n, s.f[n][static_cast<std::size_t>(i)]);
      if (slot >= 0 && slot != target) return false;
      slot = target;
    }
    for (int j = 0; j < s.z.sizes[n]; ++j) {
      int& slot = gz[static_cast<std::size_t>(cz.of(n, j))];
      const int target = cy.of(n, s.g[n][static_cast<std::size_t>(j)]);
      if (slot >= 0 && slot != target) return false;
      slot = target;
    }
  }
  std::set<std::pair<int, int>> rhs;
  for (int a = 0; a < cx.count; ++a)
    for (int b = 0; b < cz.count; ++b)
      if (fx[static_cast<std::size_t>(a)] == gz[static_cast<std::size_t>(b)]) rhs.emplace(a, b);

  // Canonical map colim P -> colim X x_{colim Y} colim Z.
  std::vector<std::pair<int, int>> image(static_cast<std::size_t>(cp.count), {-1, -1});
  for (std::size_t n = 0; n < levels; ++n)
    for (int e = 0; e < p.sizes[n]; ++e) {
      const auto [i, j] = pairs[n][static_cast<std::size_t>(e)];
      const std::pair<int, int> img{cx.of(n, i), cz.of(n, j)};
      auto& slot = image[static_cast<std::size_t>(cp.of(n, e))];
      if (slot.first >= 0 && slot != img) return false;
      slot = img;
    }
  const std::set<std::pair<int, int>> hit(image.begin(), image.end());
  return hit.size() == image.size() && hit == rhs;
}

namespace {

// Next level of a system mapping to Y: transitions from the current level
// may only merge elements with the same image in Y_{n+1}.
void grow(std::mt19937_64& rng, int max_size, const std::vector<int>& cur_map,
          const std::vector<int>& y_transition, int next_y_size, SetSystem& sys,
          std::vector<std::vector<int>>& maps) {
  std::uniform_int_distribution<int> coin(0, 1);
  std::vector<int> targets;  // Y_{n+1} image of each new element
  std::vector<int> trans(cur_map.size());
  std::map<int, std::vector<int>> by_target;
  for (std::size_t i = 0; i < cur_map.size(); ++i) {
    const int t = y_transition[static_cast<std::size_t>(cur_map[i])];
    auto& existing = by_target[t];
    const bool merge = !existing.empty() &&
                       (static_cast<int>(targets.size()) >= max_size || coin(rng) == 0);
    if (merge) {
      trans[i] = existing[std::uniform_int_distribution<std::size_t>(0, existing.size() - 1)(rng)];
    } else {
      trans[i] = static_cast<int>(targets.size());
      existing.push_back(trans[i]);
      targets.push_back(t);
    }
  }
  const int extra = std::uniform_int_distribution<int>(0, std::max(0, max_size - static_cast<int>(targets.size())))(rng);
  for (int e = 0; e < extra; ++e) targets.push_back(std::uniform_int_distribution<int>(0, next_y_size - 1)(rng));
  sys.transitions.push_back(std::move(trans));
  sys.sizes.push_back(static_cast<int>(targets.size()));
  maps.push_back(std::move(targets));
}

}  // namespace

CospanSystem random_cospan_system(std::mt19937_64& rng, int max_levels, int max_size) {
  CospanSystem s;
  const int levels = std::uniform_int_distribution<int>(1, max_levels + 1)(rng);
  auto size = [&] { return std::uniform_int_distribution<int>(1, max_size)(rng); };
  s.y.sizes.push_back(size());
  s.x.sizes.push_back(size());
  s.z.sizes.push_back(size());
  auto random_map = [&](int n, int range) {
    std::vector<int> m(static_cast<std::size_t>(n));
    for (auto& v : m) v = std::uniform_int_distribution<int>(0, range - 1)(rng);
    return m;
  };
  s.f.push_back(random_map(s.x.sizes[0], s.y.sizes[0]));
  s.g.push_back(random_map(s.z.sizes[0], s.y.sizes[0]));
  for (int n = 0; n + 1 < levels; ++n) {
    const int ny = size();
    s.y.transitions.push_back(random_map(s.y.sizes.back(), ny));
    s.y.sizes.push_back(ny);
    const std::vector<int> fcur = s.f.back(), gcur = s.g.back();
    grow(rng, max_size, fcur, s.y.transitions.back(), ny, s.x, s.f);
    grow(rng, max_size, gcur, s.y.transitions.back(), ny, s.z, s.g);
  }
  validate(s);
  return s;
}

GroupoidWithSubgroup random_groupoid_with_subgroup(std::mt19937_64& rng) {
  const std::vector<FiniteGroup> library = {
      FiniteGroup::cyclic(1), FiniteGroup::cyclic(2),   FiniteGroup::cyclic(3),   FiniteGroup::cyclic(4),
      FiniteGroup::cyclic(6), FiniteGroup::klein(),     FiniteGroup::dihedral(3), FiniteGroup::dihedral(4),
      FiniteGroup::quaternion()};
  struct Component {
    int k;
    const FiniteGroup* gamma;
    std::vector<int> normal;
  };
  std::vector<Component> comps;
  const int ncomp = std::uniform_int_distribution<int>(1, 3)(rng);
  for (int c = 0; c < ncomp; ++c) {
    const FiniteGroup& gamma = library[std::uniform_int_distribution<std::size_t>(0, library.size() - 1)(rng)];
    std::vector<std::vector<int>> candidates = {{gamma.identity()}, gamma.generated({}), gamma.center()};
    std::vector<int> all(static_cast<std::size_t>(gamma.order()));
    std::iota(all.begin(), all.end(), 0);
    candidates.push_back(all);
    for (int a = 0; a < gamma.order(); ++a) {
      auto h = gamma.generated({a});
      if (gamma.is_normal(h)) candidates.push_back(std::move(h));
    }
    comps.push_back({std::uniform_int_distribution<int>(1, 3)(rng), &gamma,
                     candidates[std::uniform_int_distribution<std::size_t>(0, candidates.size() - 1)(rng)]});
  }

  // Arrow (x, y, gamma) inside a component; natural order, then shuffled.
  struct Natural {
    int comp, x, y, elem;
  };
  std::vector<std::string> objects;
  std::vector<int> obj_base;
  std::vector<Natural> natural;
  for (int c = 0; c < ncomp; ++c) {
    obj_base.push_back(static_cast<int>(objects.size()));
    const Component& cp = comps[static_cast<std::size_t>(c)];
    for (int x = 0; x < cp.k; ++x) objects.push_back("c" + std::to_string(c) + "o" + std::to_string(x));
    for (int x = 0; x < cp.k; ++x)
      for (int y = 0; y < cp.k; ++y)
        for (int e = 0; e < cp.gamma->order(); ++e) natural.push_back({c, x, y, e});
  }
  std::vector<int> perm(natural.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);  // arrow i is natural[perm[i]]
  std::map<std::tuple<int, int, int, int>, int> where;
  std::vector<Arrow> arrows;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    const Natural& a = natural[static_cast<std::size_t>(perm[i])];
    where[{a.comp, a.x, a.y, a.elem}] = static_cast<int>(i);
    const int base = obj_base[static_cast<std::size_t>(a.comp)];
    arrows.push_back({base + a.x, base + a.y,
                      objects[static_cast<std::size_t>(base + a.x)] + ">" + objects[static_cast<std::size_t>(base + a.y)] +
                          ":" + comps[static_cast<std::size_t>(a.comp)].gamma->name(a.elem)});
  }
  FiniteGroupoid g(objects, arrows, [&](int b, int a) {
    const Natural& na = natural[static_cast<std::size_t>(perm[static_cast<std::size_t>(a)])];
    const Natural& nb = natural[static_cast<std::size_t>(perm[static_cast<std::size_t>(b)])];
    return where.at({na.comp, na.x, nb.y, comps[static_cast<std::size_t>(na.comp)].gamma->mul(nb.elem, na.elem)});
  });
  CentralAutSubgroup h;
  for (int c = 0; c < ncomp; ++c) {
    const Component& cp = comps[static_cast<std::size_t>(c)];
    for (int x = 0; x < cp.k; ++x) {
      std::vector<int> hx;
      for (int e : cp.normal) hx.push_back(where.at({c, x, x, e}));
      h.h.push_back(std::move(hx));
    }
  }
  validate(g, h);
  return {std::move(g), std::move(h)};
}

}  // namespace ftk
