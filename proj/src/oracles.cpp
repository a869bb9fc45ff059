#include "ftk/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <set>
#include <tuple>
#include <unordered_map>

#include "ftk/errors.hpp"

namespace ftk::oracle {

namespace {

constexpr std::uint64_t kMaxWindow = std::uint64_t{1} << 22;
constexpr std::uint64_t kMaxPairs = 6'000'000;
constexpr std::int64_t kMaxSlots = 12;

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
  std::size_t roots() {
    std::size_t r = 0;
    for (std::size_t i = 0; i < parent.size(); ++i) r += find(i) == i;
    return r;
  }
  std::vector<std::size_t> parent;
};

std::uint64_t ipow(std::uint64_t b, std::int64_t e, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::int64_t i = 0; i < e; ++i) {
    if (r > cap / b) throw ScaleExceeded("oracle window too large");
    r *= b;
  }
  return r;
}

std::vector<Elem> decode(std::uint64_t code, std::uint32_t base, std::size_t len) {
  std::vector<Elem> v(len);
  for (auto& x : v) {
    x = static_cast<Elem>(code % base);
    code /= base;
  }
  return v;
}

std::uint64_t encode(const std::vector<Elem>& v, std::uint32_t base) {
  std::uint64_t c = 0;
  for (std::size_t i = v.size(); i-- > 0;) c = c * base + v[i];
  return c;
}

// A coefficient window: c[i] is the coefficient of t^(lo + i).
struct Window {
  std::int64_t lo;
  std::vector<Elem> c;
};

// Schoolbook product, keeping exponents below top.
Window mul_trunc(const FiniteField& k, const Window& a, const Window& b, std::int64_t top) {
  Window out{a.lo + b.lo, {}};
  const std::int64_t len = std::max<std::int64_t>(0, top - out.lo);
  out.c.assign(static_cast<std::size_t>(len), 0);
  for (std::size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; j < b.c.size(); ++j) {
      const std::size_t e = i + j;
      if (static_cast<std::int64_t>(e) >= len) break;
      out.c[e] = k.add(out.c[e], k.mul(a.c[i], b.c[j]));
    }
  }
  return out;
}

Window mul_exact(const FiniteField& k, const Window& a, const Window& b) {
  if (a.c.empty() || b.c.empty()) return {a.lo + b.lo, {}};
  return mul_trunc(k, a, b, a.lo + b.lo + static_cast<std::int64_t>(a.c.size() + b.c.size()) - 1);
}

// u^p - u by repeated exact multiplication, re-read on the window [lo, top).
// Truncating the partial products would drop terms that the negative part
// of u pulls back below top.
std::vector<Elem> wp_naive(const FiniteField& k, const Window& u, std::int64_t lo, std::int64_t top) {
  Window pw = u;
  for (std::uint32_t i = 1; i < k.p(); ++i) pw = mul_exact(k, pw, u);
  std::vector<Elem> out(static_cast<std::size_t>(top - lo), 0);
  for (std::size_t i = 0; i < pw.c.size(); ++i) {
    const std::int64_t e = pw.lo + static_cast<std::int64_t>(i);
    if (pw.c[i] == 0 || e >= top) continue;
    if (e < lo) throw Error("oracle: u^p leaves the window");
    out[static_cast<std::size_t>(e - lo)] = k.add(out[static_cast<std::size_t>(e - lo)], pw.c[i]);
  }
  for (std::size_t i = 0; i < u.c.size(); ++i) {
    const std::int64_t e = u.lo + static_cast<std::int64_t>(i);
    out[static_cast<std::size_t>(e - lo)] = k.sub(out[static_cast<std::size_t>(e - lo)], u.c[i]);
  }
  return out;
}

}  // namespace

ASOrbits artin_schreier_orbits(const FieldPtr& kp, std::int64_t m, std::int64_t top) {
  const FiniteField& k = *kp;
  if (m < 0 || top < 1) throw DomainError("oracle needs m >= 0 and top >= 1");
  ASOrbits out;
  out.low = -m;
  out.top = top;
  const auto len = static_cast<std::size_t>(m + top);
  const std::uint64_t nv = ipow(k.q(), m + top, kMaxWindow);
  const std::int64_t ulo = -(m / static_cast<std::int64_t>(k.p()));
  const std::uint64_t nu = ipow(k.q(), top - ulo, kMaxWindow);
  if (nv * nu > 64 * kMaxPairs) throw ScaleExceeded("Artin-Schreier oracle too large");

  std::set<std::uint64_t> cob;
  for (std::uint64_t code = 0; code < nu; ++code) {
    const Window u{ulo, decode(code, k.q(), static_cast<std::size_t>(top - ulo))};
    cob.insert(encode(wp_naive(k, u, -m, top), k.q()));
  }
  std::vector<std::vector<Elem>> cob_vecs;
  for (auto c : cob) cob_vecs.push_back(decode(c, k.q(), len));

  UnionFind uf(nv);
  std::vector<Elem> sum(len);
  for (std::uint64_t v = 0; v < nv; ++v) {
    const auto vv = decode(v, k.q(), len);
    for (const auto& w : cob_vecs) {
      for (std::size_t i = 0; i < len; ++i) sum[i] = k.add(vv[i], w[i]);
      uf.unite(v, encode(sum, k.q()));
    }
  }
  out.orbit_of.resize(nv);
  std::unordered_map<std::size_t, std::uint32_t> ids;
  for (std::uint64_t v = 0; v < nv; ++v) {
    const auto [it, fresh] = ids.emplace(uf.find(v), static_cast<std::uint32_t>(ids.size()));
    out.orbit_of[v] = it->second;
  }
  out.count = {nv, ids.size()};
  return out;
}

namespace {

// Truncated 1-unit 1 + a_1 t + ... + a_{R-1} t^{R-1}, stored as a_1..a_{R-1}.
std::vector<Elem> one_unit_mul(const FiniteField& k, const std::vector<Elem>& a, const std::vector<Elem>& b) {
  const std::size_t r = a.size() + 1;
  std::vector<Elem> full_a(r, 0), full_b(r, 0), out(r, 0);
  full_a[0] = full_b[0] = 1;
  std::copy(a.begin(), a.end(), full_a.begin() + 1);
  std::copy(b.begin(), b.end(), full_b.begin() + 1);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; i + j < r; ++j) out[i + j] = k.add(out[i + j], k.mul(full_a[i], full_b[j]));
  return {out.begin() + 1, out.end()};
}

}  // namespace

OrbitCount kummer_orbits(const FieldPtr& kp, std::uint64_t n, int rel_prec) {
  const FiniteField& k = *kp;
  if (n == 0 || n % k.p() == 0) throw DomainError("oracle needs n prime to p");
  if (rel_prec < 1) throw DomainError("relative precision must be positive");
  const auto tail = static_cast<std::size_t>(rel_prec - 1);
  const std::uint64_t ntail = ipow(k.q(), static_cast<std::int64_t>(tail), kMaxWindow);
  const std::uint64_t span = 2 * n;
  const std::uint64_t units = span * (k.q() - 1) * ntail;
  if (units > kMaxWindow) throw ScaleExceeded("Kummer oracle window too large");

  auto index = [&](std::uint64_t i, Elem c, const std::vector<Elem>& a) {
    return (i * (k.q() - 1) + (c - 1)) * ntail + encode(a, k.q());
  };

  // n-th powers of units d t^j (1 + ...), j in {-1, 0, 1}.
  struct Power {
    std::int64_t shift;
    Elem lead;
    std::vector<Elem> tail;
  };
  std::vector<Power> powers;
  std::set<std::tuple<std::int64_t, Elem, std::uint64_t>> seen;
  for (std::int64_t j = -1; j <= 1; ++j)
    for (Elem d = 1; d < k.q(); ++d)
      for (std::uint64_t a = 0; a < ntail; ++a) {
        const auto base = decode(a, k.q(), tail);
        std::vector<Elem> acc(tail, 0);
        Elem lead = 1;
        for (std::uint64_t e = 0; e < n; ++e) {
          acc = one_unit_mul(k, acc, base);
          lead = k.mul(lead, d);
        }
        const std::int64_t shift = j * static_cast<std::int64_t>(n);
        if (seen.emplace(shift, lead, encode(acc, k.q())).second) powers.push_back({shift, lead, acc});
      }

  UnionFind uf(units);
  for (std::uint64_t i = 0; i < span; ++i)
    for (Elem c = 1; c < k.q(); ++c)
      for (std::uint64_t a = 0; a < ntail; ++a) {
        const auto av = decode(a, k.q(), tail);
        const std::uint64_t self = index(i, c, av);
        for (const Power& pw : powers) {
          const std::int64_t ni = static_cast<std::int64_t>(i) + pw.shift;
          if (ni < 0 || ni >= static_cast<std::int64_t>(span)) continue;
          uf.unite(self, index(static_cast<std::uint64_t>(ni), k.mul(c, pw.lead), one_unit_mul(k, av, pw.tail)));
        }
      }
  return {units, uf.roots()};
}

bool kummer_witness_exists(const FieldPtr& kp, std::uint64_t n, const std::map<std::int64_t, Elem>& b,
                           const std::map<std::int64_t, Elem>& b2, std::int64_t lo, std::int64_t hi,
                           int rel_prec) {
  const FiniteField& k = *kp;
  if (b.empty() || b2.empty()) throw DomainError("oracle needs nonzero series");
  const std::int64_t v2 = b2.begin()->first;
  const std::int64_t top = v2 + rel_prec;
  auto window_of = [&](const std::map<std::int64_t, Elem>& m) {
    Window w{m.begin()->first, {}};
    for (const auto& [e, c] : m) {
      w.c.resize(static_cast<std::size_t>(e - w.lo), 0);
      w.c.push_back(c);
    }
    return w;
  };
  const Window wb = window_of(b);
  const auto len = static_cast<std::size_t>(hi - lo);
  const std::uint64_t total = ipow(k.q(), hi - lo, kMaxWindow);
  for (std::uint64_t code = 1; code < total; ++code) {
    Window u{lo, decode(code, k.q(), len)};
    Window acc = wb;
    for (std::uint64_t e = 0; e < n; ++e) acc = mul_exact(k, acc, u);
    bool equal = true;
    for (std::int64_t e = std::min(acc.lo, v2); e < top && equal; ++e) {
      const Elem lhs = (e >= acc.lo && e - acc.lo < static_cast<std::int64_t>(acc.c.size()))
                           ? acc.c[static_cast<std::size_t>(e - acc.lo)]
                           : 0;
      const auto it = b2.find(e);
      equal = lhs == (it == b2.end() ? 0 : it->second);
    }
    if (equal) return true;
  }
  return false;
}

namespace {

// Vectors of r series on a common window, flattened component-major.
struct SeriesVec {
  std::int64_t lo;
  std::int64_t top;
  int r;
  std::vector<Elem> c;  // c[j * len + i] = component j at t^(lo + i)
  std::size_t len() const { return static_cast<std::size_t>(top - lo); }
  Elem& at(int j, std::int64_t e) { return c[static_cast<std::size_t>(j) * len() + static_cast<std::size_t>(e - lo)]; }
  Elem at(int j, std::int64_t e) const {
    return c[static_cast<std::size_t>(j) * len() + static_cast<std::size_t>(e - lo)];
  }
};

SeriesVec zero_vec(std::int64_t lo, std::int64_t top, int r) {
  return {lo, top, r, std::vector<Elem>(static_cast<std::size_t>(r) * static_cast<std::size_t>(top - lo), 0)};
}

SeriesVec add(const FiniteField& k, const SeriesVec& a, const SeriesVec& b, bool negate_b = false) {
  SeriesVec out = a;
  for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] = negate_b ? k.sub(a.c[i], b.c[i]) : k.add(a.c[i], b.c[i]);
  return out;
}

SeriesVec matrix_apply(const FiniteField& k, const FpMatrix& m, const SeriesVec& v) {
  SeriesVec out = zero_vec(v.lo, v.top, v.r);
  for (int i = 0; i < v.r; ++i)
    for (int j = 0; j < v.r; ++j) {
      if (m.at(i, j) == 0) continue;
      for (std::int64_t e = v.lo; e < v.top; ++e)
        out.at(i, e) = k.add(out.at(i, e), k.scale(v.at(j, e), m.at(i, j)));
    }
  return out;
}

// s -> x s.
SeriesVec substitute(const FiniteField& k, const SeriesVec& v, Elem x) {
  SeriesVec out = v;
  for (int j = 0; j < v.r; ++j)
    for (std::int64_t e = v.lo; e < v.top; ++e) out.at(j, e) = k.mul(v.at(j, e), k.pow(x, e));
  return out;
}

SeriesVec wp_vec(const FiniteField& k, const SeriesVec& u, std::int64_t lo) {
  SeriesVec out = zero_vec(lo, u.top, u.r);
  for (int j = 0; j < u.r; ++j) {
    Window w{u.lo, {u.c.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(j) * u.len()),
                    u.c.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(j + 1) * u.len())}};
    const auto val = wp_naive(k, w, lo, u.top);
    std::copy(val.begin(), val.end(), out.c.begin() + static_cast<std::ptrdiff_t>(static_cast<std::size_t>(j) * out.len()));
  }
  return out;
}

std::uint64_t gcd_u(std::uint64_t a, std::uint64_t b) { return std::gcd(a, b); }

}  // namespace

SemidirectCensus semidirect_census(const SemidirectGroup& g, const FieldPtr& kp, std::uint64_t q_exp,
                                   std::int64_t break_bound) {
  validate(g);
  const FiniteField& k = *kp;
  if (k.p() != g.p) throw DomainError("group and field have different characteristic");
  const std::int64_t B = break_bound;
  if (B < 0) throw DomainError("break bound must be >= 0");
  const int r = g.r;
  q_exp %= g.n;
  const std::uint64_t d = gcd_u(g.n, q_exp);
  const std::uint64_t n1 = g.n / d, q1 = q_exp / d;
  if ((k.q() - 1) % n1 != 0) throw DomainError("oracle needs n/d | q - 1");
  const Elem zeta = k.primitive_root_of_unity(n1);
  std::uint64_t beta = 0;
  for (std::uint64_t b = 0; b < n1; ++b)
    if ((q1 * b) % n1 == 1 % n1) {
      beta = b;
      break;
    }
  const Elem xi = k.pow(zeta, static_cast<std::int64_t>(beta));
  const FpMatrix psi_inv = g.psi.pow(g.n - 1);
  const auto D = static_cast<int>(d);

  const std::int64_t ulo = -(B / static_cast<std::int64_t>(k.p()));
  std::int64_t top = 0;
  std::uint64_t nb = 0, nu = 0;
  for (std::int64_t P = 3; P >= 1; --P) {
    if (static_cast<std::int64_t>(r) * D * (B + P) > kMaxSlots) continue;
    const std::uint64_t cb = ipow(k.q(), r * (B + P), kMaxWindow);
    const std::uint64_t cu = ipow(k.q(), r * D * (P - ulo), kMaxWindow);
    if (cb * cu > kMaxPairs) continue;
    top = P;
    nb = cb;
    nu = cu;
    break;
  }
  if (top == 0) throw ScaleExceeded("semidirect oracle exceeds 12 coefficient slots");

  const std::size_t ulen = static_cast<std::size_t>(r) * static_cast<std::size_t>(top - ulo);
  auto decode_vec = [&](std::uint64_t code, std::int64_t lo) {
    SeriesVec v = zero_vec(lo, top, r);
    v.c = decode(code, k.q(), v.c.size());
    return v;
  };
  auto decode_tuple = [&](std::uint64_t code) {
    std::vector<SeriesVec> us;
    for (int i = 0; i < D; ++i) {
      us.push_back(decode_vec(code % ipow(k.q(), static_cast<std::int64_t>(ulen), ~0ull), ulo));
      code /= ipow(k.q(), static_cast<std::int64_t>(ulen), ~0ull);
    }
    return us;
  };
  // tau_i: identity except the wrap-around component, which carries sigma'.
  auto tau = [&](int i, const SeriesVec& v) { return i == D - 1 ? substitute(k, v, xi) : v; };

  // Given b_0 and all u_i, derive b_{d-1}, ..., b_1 from
  // psi^-1 (b_i + P(u_i)) = tau_i(b_{i+1}) and test the relation at i = 0.
  auto chain = [&](const SeriesVec& b0, const std::vector<SeriesVec>& us) -> std::optional<std::vector<SeriesVec>> {
    std::vector<SeriesVec> b(static_cast<std::size_t>(D), b0);
    SeriesVec next = b0;
    for (int i = D - 1; i >= 0; --i) {
      const SeriesVec pu = wp_vec(k, us[static_cast<std::size_t>(i)], -B);
      const SeriesVec rhs = tau(i, next);
      if (i == 0) {
        // literal check of psi^-1 (b_0 + P(u_0)) = tau_0(b_1)
        if (matrix_apply(k, psi_inv, add(k, b0, pu)).c != rhs.c) return std::nullopt;
        break;
      }
      b[static_cast<std::size_t>(i)] = add(k, matrix_apply(k, g.psi, rhs), pu, true);
      next = b[static_cast<std::size_t>(i)];
    }
    return b;
  };

  // V^n composed as affine maps: V^k(Y^(i+k)) = psi^-k Y^(i) + c_k^(i).
  auto vn_identity = [&](const std::vector<SeriesVec>& us) {
    for (int i = 0; i < D; ++i) {
      FpMatrix m = FpMatrix::identity(g.p, r);
      SeriesVec c = zero_vec(ulo, top, r);
      for (std::uint64_t step = 0; step < g.n; ++step) {
        const int src = static_cast<int>((static_cast<std::uint64_t>(i) + step) % d);
        std::uint64_t wraps = 0;
        for (std::uint64_t j = static_cast<std::uint64_t>(i); j < static_cast<std::uint64_t>(i) + step; ++j)
          wraps += (j % d == d - 1);
        const SeriesVec moved = substitute(k, us[static_cast<std::size_t>(src)], k.pow(xi, static_cast<std::int64_t>(wraps)));
        c = matrix_apply(k, psi_inv, add(k, c, moved));
        m = psi_inv * m;
      }
      if (!(m == FpMatrix::identity(g.p, r))) return false;
      if (std::any_of(c.c.begin(), c.c.end(), [](Elem x) { return x != 0; })) return false;
    }
    return true;
  };

  struct Obj {
    std::uint64_t b0;
    std::uint64_t u;
  };
  std::vector<Obj> objs;
  std::unordered_map<std::uint64_t, std::size_t> where;  // b0 * nu + u
  for (std::uint64_t b0 = 0; b0 < nb; ++b0) {
    const SeriesVec bv = decode_vec(b0, -B);
    for (std::uint64_t u = 0; u < nu; ++u) {
      const auto us = decode_tuple(u);
      if (!chain(bv, us)) continue;
      if (!vn_identity(us)) continue;
      where[b0 * nu + u] = objs.size();
      objs.push_back({b0, u});
    }
  }

  // Translation by z = (z_i): b'_i = b_i + P(z_i) and V' = Theta^-1 V Theta,
  // V'(Y'^(i+1)) = psi^-1 (Y'^(i) - z_i + u_i) + tau_i(z_{i+1}).
  UnionFind uf(objs.size());
  std::vector<std::uint64_t> stab(objs.size(), 0);
  const std::uint64_t nz = nu;
  for (std::size_t o = 0; o < objs.size(); ++o) {
    const SeriesVec bv = decode_vec(objs[o].b0, -B);
    const auto us = decode_tuple(objs[o].u);
    for (std::uint64_t z = 0; z < nz; ++z) {
      const auto zs = decode_tuple(z);
      const SeriesVec b0_new = add(k, bv, wp_vec(k, zs[0], -B));
      std::vector<Elem> ucode;
      for (int i = 0; i < D; ++i) {
        const SeriesVec shifted = add(k, us[static_cast<std::size_t>(i)], zs[static_cast<std::size_t>(i)], true);
        const SeriesVec image = add(k, matrix_apply(k, psi_inv, shifted),
                                    tau(i, zs[static_cast<std::size_t>((i + 1) % D)]));
        // read off u'_i from the affine map psi^-1 (Y' + u'_i)
        const SeriesVec ui = matrix_apply(k, g.psi, image);
        ucode.insert(ucode.end(), ui.c.begin(), ui.c.end());
      }
      const std::uint64_t key = encode(b0_new.c, k.q()) * nu + encode(ucode, k.q());
      const auto it = where.find(key);
      if (it == where.end()) throw Error("oracle: conjugate object missing from the census");
      if (it->second == o) ++stab[o];
      uf.unite(o, it->second);
    }
  }

  SemidirectCensus out;
  out.objects = objs.size();
  out.top = top;
  for (std::size_t o = 0; o < objs.size(); ++o)
    if (uf.find(o) == o) out.aut_orders.push_back(stab[o]);
  out.classes = out.aut_orders.size();
  std::sort(out.aut_orders.begin(), out.aut_orders.end());
  return out;
}

ConstancyScan constancy_scan(const RingPtr& ring, std::int64_t lo, std::int64_t hi, std::uint64_t n) {
  const CoeffRing& R = *ring;
  if (hi <= lo) throw DomainError("empty scan window");
  if (n > 0 && n % R.p() == 0) throw DomainError("torsion scan needs n prime to p");
  const auto len = static_cast<std::size_t>(hi - lo);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < len; ++i) {
    if (total > kMaxWindow / R.size()) throw ScaleExceeded("constancy scan window too large");
    total *= R.size();
  }
  // Exact products of Laurent polynomials over R.
  auto mul = [&](const Window& a, const Window& b) {
    Window out{a.lo + b.lo, std::vector<Elem>(a.c.size() + b.c.size() - 1, 0)};
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) out.c[i + j] = R.add(out.c[i + j], R.mul(a.c[i], b.c[j]));
    }
    return out;
  };
  auto equals = [&](const Window& a, const Window& b) {
    const std::int64_t from = std::min(a.lo, b.lo);
    const std::int64_t to = std::max(a.lo + static_cast<std::int64_t>(a.c.size()), b.lo + static_cast<std::int64_t>(b.c.size()));
    auto get = [](const Window& w, std::int64_t e) -> Elem {
      const std::int64_t i = e - w.lo;
      return (i >= 0 && i < static_cast<std::int64_t>(w.c.size())) ? w.c[static_cast<std::size_t>(i)] : 0;
    };
    for (std::int64_t e = from; e < to; ++e)
      if (get(a, e) != get(b, e)) return false;
    return true;
  };
  const Window one{0, {1}};

  ConstancyScan out;
  out.scanned = total;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::vector<Elem> c(len);
    std::uint64_t rest = code;
    for (auto& x : c) {
      x = static_cast<Elem>(rest % R.size());
      rest /= R.size();
    }
    const Window f{lo, c};
    bool hit = false;
    if (n == 0) {
      hit = equals(mul(f, f), f);
    } else {
      Window acc = f;
      for (std::uint64_t e = 1; e < n; ++e) acc = mul(acc, f);
      hit = equals(acc, one);
    }
    if (!hit) continue;
    ++out.solutions;
    for (std::size_t i = 0; i < len; ++i)
      if (lo + static_cast<std::int64_t>(i) != 0 && c[i] != 0) {
        ++out.nonconstant;
        break;
      }
  }
  return out;
}

}  // namespace ftk::oracle
