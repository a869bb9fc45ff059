#include "ftk/laurent.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>
#include <utility>

#include "ftk/errors.hpp"

namespace ftk {

namespace {

void require_same_ring(const LaurentSeries& a, const LaurentSeries& b) {
  if (!(a.r() == b.r())) throw RingMismatch("series live over different coefficient rings");
}

}  // namespace

LaurentSeries::LaurentSeries(RingPtr ring, std::int64_t start, std::vector<Elem> coeffs,
                             std::int64_t prec)
    : ring_(std::move(ring)), start_(start), prec_(prec), coeffs_(std::move(coeffs)) {
  for (Elem c : coeffs_)
    if (c >= ring_->size()) throw DomainError("coefficient code out of range");
  normalize();
  if (!coeffs_.empty() && high() > prec_) {
    throw DomainError("term t^" + std::to_string(high() - 1) + " lies beyond precision t^" +
                      std::to_string(prec_));
  }
}

void LaurentSeries::normalize() {
  std::size_t lead = 0;
  while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
  if (lead == coeffs_.size()) {
    coeffs_.clear();
    start_ = 0;
    return;
  }
  std::size_t end = coeffs_.size();
  while (coeffs_[end - 1] == 0) --end;
  coeffs_.erase(coeffs_.begin() + static_cast<std::ptrdiff_t>(end), coeffs_.end());
  coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
  start_ += static_cast<std::int64_t>(lead);
}

LaurentSeries LaurentSeries::zero(RingPtr ring, std::int64_t prec) {
  return LaurentSeries(std::move(ring), 0, {}, prec);
}

LaurentSeries LaurentSeries::constant(RingPtr ring, Elem c, std::int64_t prec) {
  return monomial(std::move(ring), c, 0, prec);
}

LaurentSeries LaurentSeries::monomial(RingPtr ring, Elem c, std::int64_t exponent,
                                      std::int64_t prec) {
  return LaurentSeries(std::move(ring), exponent, {c}, prec);
}

Elem LaurentSeries::coeff(std::int64_t i) const {
  if (i >= prec_) {
    throw PrecisionExhausted("coefficient of t^" + std::to_string(i) + " is unknown mod t^" +
                             std::to_string(prec_));
  }
  if (coeffs_.empty() || i < start_ || i >= high()) return 0;
  return coeffs_[static_cast<std::size_t>(i - start_)];
}

LaurentSeries LaurentSeries::truncated(std::int64_t new_prec) const {
  if (new_prec > prec_) throw PrecisionExhausted("cannot raise the precision of a series");
  LaurentSeries out = slice(low(), new_prec);
  out.prec_ = new_prec;
  return out;
}

LaurentSeries LaurentSeries::shifted(std::int64_t k) const {
  LaurentSeries out = *this;
  if (!out.coeffs_.empty()) out.start_ += k;
  out.prec_ += k;
  return out;
}

LaurentSeries LaurentSeries::slice(std::int64_t lo, std::int64_t hi) const {
  std::vector<Elem> c;
  const std::int64_t from = std::max(lo, low());
  const std::int64_t to = std::min(hi, high());
  for (std::int64_t i = from; i < to; ++i) c.push_back(coeffs_[static_cast<std::size_t>(i - start_)]);
  return LaurentSeries(ring_, from, std::move(c), prec_);
}

bool operator==(const LaurentSeries& a, const LaurentSeries& b) {
  return a.r() == b.r() && a.prec_ == b.prec_ && a.start_ == b.start_ && a.coeffs_ == b.coeffs_;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_ring(a, b);
  const std::int64_t prec = std::min(a.prec(), b.prec());
  if (a.is_zero() && b.is_zero()) return LaurentSeries::zero(a.ring(), prec);
  const std::int64_t lo = std::min(a.low(), b.low());
  const std::int64_t hi = std::min(prec, std::max(a.high(), b.high()));
  if (hi <= lo) return LaurentSeries::zero(a.ring(), prec);
  std::vector<Elem> c(static_cast<std::size_t>(hi - lo), 0);
  const CoeffRing& R = a.r();
  a.for_each_term([&](std::int64_t i, Elem v) {
    if (i < hi) c[static_cast<std::size_t>(i - lo)] = v;
  });
  b.for_each_term([&](std::int64_t i, Elem v) {
    if (i < hi) c[static_cast<std::size_t>(i - lo)] = R.add(c[static_cast<std::size_t>(i - lo)], v);
  });
  return LaurentSeries(a.ring(), lo, std::move(c), prec);
}

LaurentSeries operator-(const LaurentSeries& a) {
  std::vector<Elem> c = a.stored();
  for (auto& v : c) v = a.r().neg(v);
  return LaurentSeries(a.ring(), a.val(), std::move(c), a.prec());
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries scale(const LaurentSeries& a, Elem c) {
  std::vector<Elem> out = a.stored();
  for (auto& v : out) v = a.r().mul(v, c);
  return LaurentSeries(a.ring(), a.val(), std::move(out), a.prec());
}

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_ring(a, b);
  const std::int64_t prec = std::min(a.low() + b.prec(), b.low() + a.prec());
  if (a.is_zero() || b.is_zero()) return LaurentSeries::zero(a.ring(), prec);
  const std::int64_t lo = a.low() + b.low();
  if (prec <= lo) {
    throw PrecisionExhausted("product has no known coefficient (window [" + std::to_string(lo) +
                             ", " + std::to_string(prec) + "))");
  }
  const std::int64_t hi = std::min(prec, a.high() + b.high() - 1);
  std::vector<Elem> c(static_cast<std::size_t>(hi - lo), 0);
  const CoeffRing& R = a.r();
  const auto& ca = a.stored();
  const auto& cb = b.stored();
  for (std::size_t i = 0; i < ca.size(); ++i) {
    if (ca[i] == 0) continue;
    for (std::size_t j = 0; j < cb.size(); ++j) {
      const auto k = static_cast<std::int64_t>(i + j);
      if (lo + k >= hi) break;
      if (cb[j] == 0) continue;
      c[static_cast<std::size_t>(k)] = R.add(c[static_cast<std::size_t>(k)], R.mul(ca[i], cb[j]));
    }
  }
  return LaurentSeries(a.ring(), lo, std::move(c), prec);
}

LaurentSeries pow(const LaurentSeries& a, std::uint64_t k) {
  if (k == 0) {
    const std::int64_t rel = a.is_zero() ? 1 : std::max<std::int64_t>(a.prec() - a.low(), 1);
    return LaurentSeries::constant(a.ring(), 1, rel);
  }
  LaurentSeries base = a;
  std::optional<LaurentSeries> acc;
  while (k) {
    if (k & 1) acc = acc ? *acc * base : base;
    k >>= 1;
    if (k) base = base * base;
  }
  return *acc;
}

bool congruent(const LaurentSeries& a, const LaurentSeries& b) {
  require_same_ring(a, b);
  const std::int64_t prec = std::min(a.prec(), b.prec());
  const std::int64_t lo = std::min(a.low(), b.low());
  for (std::int64_t i = lo; i < prec; ++i)
    if (a.coeff(i) != b.coeff(i)) return false;
  return true;
}

namespace {

// Inverse of a series whose lowest stored coefficient is a unit.
LaurentSeries invert_unit_leading(const LaurentSeries& a) {
  const CoeffRing& R = a.r();
  const std::int64_t v = a.low();
  const std::int64_t rel = a.prec() - v;
  if (rel <= 0) throw PrecisionExhausted("no coefficient of the inverse is known");
  const Elem c0_inv = R.inv(a.coeff(v));
  std::vector<Elem> b(static_cast<std::size_t>(rel), 0);
  const auto& ca = a.stored();
  b[0] = c0_inv;
  for (std::int64_t k = 1; k < rel; ++k) {
    Elem s = 0;
    const std::int64_t jmax = std::min<std::int64_t>(k, static_cast<std::int64_t>(ca.size()) - 1);
    for (std::int64_t j = 1; j <= jmax; ++j) {
      s = R.add(s, R.mul(ca[static_cast<std::size_t>(j)], b[static_cast<std::size_t>(k - j)]));
    }
    b[static_cast<std::size_t>(k)] = R.neg(R.mul(c0_inv, s));
  }
  return LaurentSeries(a.ring(), -v, std::move(b), a.prec() - 2 * v);
}

}  // namespace

LaurentSeries invert(const LaurentSeries& a) {
  const std::int64_t i = unit_ord(a);
  const LaurentSeries tail = a.slice(a.low(), i);  // nilpotent part b_-
  const LaurentSeries rest = a.slice(i, a.prec());
  const LaurentSeries w = invert_unit_leading(rest);
  if (tail.is_zero()) return w;
  // a = rest (1 + N) with N = tail * w nilpotent; N^m = 0 bounds the correction.
  const LaurentSeries n = tail * w;
  LaurentSeries term = LaurentSeries::constant(a.ring(), 1, w.prec());
  LaurentSeries sum = term;
  for (int k = 1; k < a.r().m(); ++k) {
    term = -(term * n);
    sum = sum + term;
  }
  return w * sum;
}

std::optional<std::int64_t> naive_ord(const LaurentSeries& a) {
  if (a.is_zero()) return std::nullopt;
  return a.low();
}

std::int64_t unit_ord(const LaurentSeries& a) {
  const CoeffRing& R = a.r();
  std::optional<std::int64_t> found;
  a.for_each_term([&](std::int64_t i, Elem v) {
    if (!found && R.is_unit(v)) found = i;
  });
  if (!found) throw DomainError("series is not invertible to the known precision");
  return *found;
}

PartsDecomposition split_parts(const LaurentSeries& a) {
  if (a.prec() < 1) throw PrecisionExhausted("constant term unknown below t^1");
  return {a.slice(a.low(), 0), a.coeff(0), a.slice(1, a.prec())};
}

LaurentSeries solve_positive(const LaurentSeries& b) {
  if (!b.is_zero() && b.low() < 1) {
    throw DomainError("positive-part solver needs support in exponents >= 1");
  }
  const CoeffRing& R = b.r();
  const std::int64_t prec = b.prec();
  if (prec <= 1) return LaurentSeries::zero(b.ring(), prec);
  const std::int64_t p = R.p();
  // w_s = b_s + frob(w_{s/p}) accumulates sum_n b_{s/p^n}^{p^n}; u_s = -w_s.
  std::vector<Elem> w(static_cast<std::size_t>(prec), 0);
  for (std::int64_t s = 1; s < prec; ++s) {
    Elem acc = b.coeff(s);
    if (s % p == 0) acc = R.add(acc, R.frobenius(w[static_cast<std::size_t>(s / p)]));
    w[static_cast<std::size_t>(s)] = acc;
  }
  for (auto& v : w) v = R.neg(v);
  return LaurentSeries(b.ring(), 0, std::move(w), prec);
}

LaurentSeries artin_schreier_op(const LaurentSeries& u) { return series_pth_power(u) - u; }

LaurentSeries coeff_frobenius(const LaurentSeries& a) {
  std::vector<Elem> c = a.stored();
  for (auto& v : c) v = a.r().frobenius(v);
  return LaurentSeries(a.ring(), a.val(), std::move(c), a.prec());
}

LaurentSeries series_pth_power(const LaurentSeries& a) {
  const std::int64_t p = a.r().p();
  if (a.is_zero()) return LaurentSeries::zero(a.ring(), a.prec() * p);
  const auto& c = a.stored();
  std::vector<Elem> out((c.size() - 1) * static_cast<std::size_t>(p) + 1, 0);
  for (std::size_t k = 0; k < c.size(); ++k) out[k * static_cast<std::size_t>(p)] = a.r().frobenius(c[k]);
  return LaurentSeries(a.ring(), a.low() * p, std::move(out), a.prec() * p);
}

LaurentSeries scale_substitute(const LaurentSeries& a, Elem xi) {
  if (xi == 0) throw DomainError("substitution t -> xi t needs xi != 0");
  const FiniteField& k = a.r().k();
  std::vector<Elem> c = a.stored();
  for (std::size_t j = 0; j < c.size(); ++j) {
    c[j] = a.r().scale(c[j], k.pow(xi, a.low() + static_cast<std::int64_t>(j)));
  }
  return LaurentSeries(a.ring(), a.val(), std::move(c), a.prec());
}

LaurentSeries nth_root_unit(const LaurentSeries& a, std::uint64_t n) {
  const CoeffRing& R = a.r();
  const FiniteField& k = R.k();
  if (n == 0 || n % R.p() == 0) throw DomainError("n-th roots need n prime to p");
  if (unit_ord(a) != 0) throw DomainError("n-th root needs a series of unit order 0");
  const Elem lead = R.residue(a.coeff(0));
  if (k.nth_power_class(lead, n) != 0) {
    throw DomainError("leading coefficient " + k.format(lead) + " is not an n-th power");
  }
  const Elem root0 = *k.nth_root(lead, n);
  const Elem n_inv = k.inv(k.from_int(static_cast<std::int64_t>(n % R.p())));

  LaurentSeries g = LaurentSeries::constant(a.ring(), R.from_field(root0), a.prec());
  // Newton: g <- g - (g^n - a) / (n g^(n-1)). The error ideal is topologically
  // nilpotent, so the loop terminates once g^n agrees with a to precision.
  const int max_steps = 8 + 2 * R.m() + static_cast<int>(std::bit_width(static_cast<std::uint64_t>(
                                            std::max<std::int64_t>(a.prec(), 1))));
  for (int step = 0; step < max_steps; ++step) {
    const LaurentSeries h = pow(g, n - 1);
    const LaurentSeries gn = h * g;
    if (congruent(gn, a)) return g.truncated(std::min(g.prec(), gn.prec()));
    g = g - scale((gn - a) * invert(h), n_inv);
    if (g.prec() <= 0) throw PrecisionExhausted("n-th root lost all precision");
  }
  throw PrecisionExhausted("Newton iteration for the n-th root did not converge");
}

bool torsion_unit_is_constant(const LaurentSeries& a, std::uint64_t n) {
  const LaurentSeries an = pow(a, n);
  if (!congruent(an, LaurentSeries::constant(a.ring(), 1, an.prec()))) {
    throw DomainError("input is not an n-th root of unity to precision");
  }
  bool constant = true;
  a.for_each_term([&](std::int64_t i, Elem) {
    if (i != 0) constant = false;
  });
  return constant;
}

bool idempotent_is_constant(const LaurentSeries& a) {
  if (!congruent(a * a, a)) throw DomainError("input is not idempotent to precision");
  bool constant = true;
  a.for_each_term([&](std::int64_t i, Elem) {
    if (i != 0) constant = false;
  });
  return constant;
}

}  // namespace ftk
