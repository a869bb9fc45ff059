#include "ftk/artin_schreier.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "ftk/errors.hpp"
#include "ftk/parallel.hpp"

namespace ftk {

namespace {

constexpr std::uint64_t kMaxEnumeration = std::uint64_t{1} << 22;

std::pair<std::int64_t, int> split_p_power(std::int64_t j, std::uint32_t p) {
  int a = 0;
  while (j % p == 0) {
    j /= p;
    ++a;
  }
  return {j, a};
}

Elem pth_root_iter(const FiniteField& k, Elem c, int times) {
  for (int i = 0; i < times % static_cast<int>(k.e()); ++i) c = k.pth_root(c);
  return c;
}

}  // namespace

bool operator==(const ASCanonical& a, const ASCanonical& b) {
  return *a.field == *b.field && a.support == b.support && a.constant_class == b.constant_class;
}

bool operator<(const ASCanonical& a, const ASCanonical& b) {
  if (a.support != b.support) {
    return std::lexicographical_compare(a.support.begin(), a.support.end(), b.support.begin(),
                                        b.support.end());
  }
  return a.constant_class < b.constant_class;
}

void validate(const ASCanonical& c) {
  if (!c.field) throw DomainError("canonical form without a field");
  const FiniteField& k = *c.field;
  for (const auto& [s, v] : c.support) {
    if (s < 1 || s % k.p() == 0) throw DomainError("support key " + std::to_string(s) + " is not in S");
    if (v == 0 || v >= k.q()) throw DomainError("support value must be a nonzero field element");
  }
  if (c.constant_class >= k.q() || k.transversal_rep(c.constant_class) != c.constant_class) {
    throw DomainError("constant class is not a transversal representative");
  }
}

ASReduction as_reduce(const LaurentSeries& b) {
  if (!b.r().is_field()) throw DomainError("canonical forms are defined over fields only");
  if (b.prec() < 1) throw PrecisionExhausted("the constant term of b is not known");
  const FiniteField& k = b.r().k();
  const std::uint32_t p = k.p();
  const std::int64_t prec = b.prec();
  const PartsDecomposition parts = split_parts(b);

  LaurentSeries u = solve_positive(-parts.positive);
  std::map<std::int64_t, Elem> slots;
  parts.negative.for_each_term([&](std::int64_t i, Elem c) {
    const auto [s, a] = split_p_power(-i, p);
    slots[s] = k.add(slots[s], pth_root_iter(k, c, a));
    // c t^(-p^a s) ~ pth_root(c) t^(-p^(a-1) s) ~ ... one coboundary per step.
    std::int64_t exponent = -i;
    for (int step = 1; step <= a; ++step) {
      exponent /= p;
      u = u - LaurentSeries::monomial(b.ring(), pth_root_iter(k, c, step), -exponent, prec);
    }
  });

  const Elem c0 = parts.constant;
  const Elem rep = k.transversal_rep(c0);
  const Elem u0 = k.as_residue_solve(k.sub(rep, c0)).front();
  u = u + LaurentSeries::constant(b.ring(), u0, prec);

  ASCanonical canon{b.r().base(), {}, rep};
  for (const auto& [s, v] : slots)
    if (v != 0) canon.support.emplace(s, v);
  return {std::move(canon), std::move(u)};
}

ASCanonical as_canonicalize(const LaurentSeries& b) { return as_reduce(b).canon; }

LaurentSeries as_series(const ASCanonical& c, std::int64_t prec) {
  validate(c);
  const RingPtr ring = CoeffRing::field(c.field);
  LaurentSeries out = LaurentSeries::constant(ring, c.constant_class, prec);
  for (const auto& [s, v] : c.support) out = out + LaurentSeries::monomial(ring, v, -s, prec);
  return out;
}

std::optional<LaurentSeries> as_iso_witness(const LaurentSeries& c, const LaurentSeries& d) {
  if (!(c.r() == d.r())) throw RingMismatch("covers live over different coefficient rings");
  const std::int64_t prec = std::min(c.prec(), d.prec());
  const ASReduction rc = as_reduce(c.truncated(prec));
  const ASReduction rd = as_reduce(d.truncated(prec));
  if (!(rc.canon == rd.canon)) return std::nullopt;
  // c + P(u_c) = K = d + P(u_d), so c + P(u_c - u_d) = d.
  return rc.u - rd.u;
}

std::optional<std::int64_t> as_break(const ASCanonical& c) {
  if (c.support.empty()) return std::nullopt;
  return c.support.rbegin()->first;
}

IndPoint as_moduli_point(const ASCanonical& c) {
  validate(c);
  IndPoint pt{c.field, 1, as_break(c).value_or(1), {}};
  for (std::int64_t s : prime_to_p_upto(c.field->p(), pt.level)) {
    const auto it = c.support.find(s);
    pt.value.push_back(it == c.support.end() ? 0 : it->second);
  }
  return pt;
}

std::uint64_t as_class_count(const FiniteField& k, std::int64_t m) {
  return level_count(k, m, 1) * k.p();
}

std::vector<ASCanonical> enumerate_as_classes(const FieldPtr& k, std::int64_t m) {
  if (m < 0) throw DomainError("break bound must be >= 0");
  const std::uint64_t total = as_class_count(*k, m);
  if (total > kMaxEnumeration) {
    throw ScaleExceeded(std::to_string(total) + " classes exceed the enumeration cap");
  }
  const auto slots = prime_to_p_upto(k->p(), m);
  const auto& reps = k->transversal();
  std::vector<ASCanonical> out(total);
  parallel_for(total, [&](std::size_t idx) {
    ASCanonical c{k, {}, reps[idx % k->p()]};
    std::uint64_t rest = idx / k->p();
    for (std::int64_t s : slots) {
      const auto v = static_cast<Elem>(rest % k->q());
      rest /= k->q();
      if (v != 0) c.support.emplace(s, v);
    }
    out[idx] = std::move(c);
  });
  std::sort(out.begin(), out.end());
  return out;
}

ElemAbCanonical elemab_canonicalize(const ElemAbCover& b) {
  ElemAbCanonical out;
  out.reserve(b.size());
  for (const auto& c : b) out.push_back(as_canonicalize(c));
  return out;
}

std::optional<std::vector<LaurentSeries>> elemab_iso_witness(const ElemAbCover& c,
                                                             const ElemAbCover& d) {
  if (c.size() != d.size()) throw DomainError("rank mismatch between covers");
  std::vector<LaurentSeries> u;
  u.reserve(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    auto w = as_iso_witness(c[i], d[i]);
    if (!w) return std::nullopt;
    u.push_back(std::move(*w));
  }
  return u;
}

std::vector<ElemAbCanonical> elemab_enumerate(const FieldPtr& k, int r, std::int64_t m) {
  if (r < 0) throw DomainError("negative rank");
  const auto base = enumerate_as_classes(k, m);
  std::uint64_t total = 1;
  for (int i = 0; i < r; ++i) {
    if (total > kMaxEnumeration / base.size()) throw ScaleExceeded("elementary abelian enumeration cap");
    total *= base.size();
  }
  std::vector<ElemAbCanonical> out(total);
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    ElemAbCanonical v(static_cast<std::size_t>(r));
    for (int j = r; j-- > 0;) {
      v[static_cast<std::size_t>(j)] = base[rest % base.size()];
      rest /= base.size();
    }
    out[idx] = std::move(v);
  }
  return out;
}

std::optional<std::int64_t> elemab_break(const ElemAbCanonical& c) {
  std::optional<std::int64_t> best;
  for (const auto& x : c)
    if (auto b = as_break(x); b && (!best || *b > *best)) best = b;
  return best;
}

IndPoint elemab_moduli_point(const FieldPtr& k, const ElemAbCanonical& c) {
  const int r = static_cast<int>(c.size());
  IndPoint pt{k, r, elemab_break(c).value_or(1), {}};
  for (std::int64_t s : prime_to_p_upto(k->p(), pt.level)) {
    for (const auto& x : c) {
      const auto it = x.support.find(s);
      pt.value.push_back(it == x.support.end() ? 0 : it->second);
    }
  }
  return pt;
}

std::string to_string(const ASCanonical& c) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [s, v] : c.support) {
    os << (first ? "" : ", ") << s << ": " << c.field->format(v);
    first = false;
  }
  os << "} + " << c.field->format(c.constant_class);
  return os.str();
}

}  // namespace ftk
