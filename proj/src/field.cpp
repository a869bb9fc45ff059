#include "ftk/field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <utility>

#include "ftk/errors.hpp"

namespace ftk {

namespace {

using Poly = std::vector<std::uint32_t>;  // constant term first

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// Remainder of a modulo a monic polynomial m over F_p.
Poly poly_mod(Poly a, const Poly& m, std::uint32_t p) {
  trim(a);
  const std::size_t dm = m.size() - 1;
  while (a.size() > dm) {
    const std::uint32_t lead = a.back();
    const std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - (lead * m[i]) % p) % p;
    }
    trim(a);
  }
  return a;
}

Poly poly_from_code(std::uint64_t code, std::uint32_t p, std::size_t len) {
  Poly d(len, 0);
  for (std::size_t i = 0; i < len; ++i) {
    d[i] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return d;
}

bool is_irreducible(const Poly& f, std::uint32_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; d <= deg / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      Poly g = poly_from_code(c, p, d);
      g.push_back(1);
      if (poly_mod(f, g, p).empty()) return false;
    }
  }
  return true;
}

Poly smallest_irreducible(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    Poly f = poly_from_code(c, p, e);
    f.push_back(1);
    if (e == 1 || (f[0] != 0 && is_irreducible(f, p))) return f;
  }
  throw DomainError("no irreducible polynomial found");  // unreachable for prime p
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

FieldPtr FiniteField::get(std::uint32_t p, std::uint32_t e) {
  static std::mutex mu;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, FieldPtr> cache;
  std::lock_guard lock(mu);
  auto it = cache.find({p, e});
  if (it != cache.end()) return it->second;
  auto f = std::make_shared<const FiniteField>(p, e);
  cache.emplace(std::make_pair(p, e), f);
  return f;
}

FiniteField::FiniteField(std::uint32_t p, std::uint32_t e) : p_(p), e_(e) {
  if (!is_prime(p)) throw DomainError("characteristic " + std::to_string(p) + " is not prime");
  if (e < 1) throw DomainError("extension degree must be at least 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > kMaxOrder) throw ScaleExceeded("field order exceeds " + std::to_string(kMaxOrder));
  }
  q_ = static_cast<std::uint32_t>(q);
  modulus_ = smallest_irreducible(p, e);

  // Generator: smallest element of order q - 1, found before tables exist.
  const auto factors = prime_factors(q_ - 1);
  auto slow_pow = [this](Elem a, std::uint64_t k) {
    Elem r = 1;
    while (k) {
      if (k & 1) r = slow_mul(r, a);
      a = slow_mul(a, a);
      k >>= 1;
    }
    return r;
  };
  for (Elem c = 1; c < q_; ++c) {
    bool primitive = true;
    for (auto l : factors) {
      if (slow_pow(c, (q_ - 1) / l) == 1) {
        primitive = false;
        break;
      }
    }
    if (primitive) {
      generator_ = c;
      break;
    }
  }

  exp_.resize(q_ - 1);
  log_.assign(q_, 0);
  Elem x = 1;
  for (std::uint32_t k = 0; k + 1 < q_; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = slow_mul(x, generator_);
  }

  // Transversal of F_q / image of u -> u^p - u: scan codes upward so each
  // coset is first reached at its smallest member.
  std::vector<bool> in_image(q_, false);
  for (Elem u = 0; u < q_; ++u) in_image[sub(pow(u, p_), u)] = true;
  std::vector<Elem> image;
  for (Elem c = 0; c < q_; ++c)
    if (in_image[c]) image.push_back(c);
  constexpr Elem kUnset = ~Elem{0};
  transversal_.assign(q_, kUnset);
  for (Elem c = 0; c < q_; ++c) {
    if (transversal_[c] != kUnset) continue;
    transversal_reps_.push_back(c);
    for (Elem w : image) transversal_[add(c, w)] = c;
  }
}

Elem FiniteField::slow_mul(Elem a, Elem b) const {
  const Poly da = digits(a), db = digits(b);
  Poly prod(2 * e_, 0);
  for (std::uint32_t i = 0; i < e_; ++i)
    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  Poly r = poly_mod(prod, modulus_, p_);
  r.resize(e_, 0);
  return from_digits(r);
}

Elem FiniteField::g() const {
  if (e_ < 2) throw DomainError("prime field has no generator symbol g");
  return p_;
}

Elem FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::vector<std::uint32_t> FiniteField::digits(Elem a) const { return poly_from_code(a, p_, e_); }

Elem FiniteField::from_digits(const std::vector<std::uint32_t>& d) const {
  Elem code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p_ + (d[i] % p_);
  return code;
}

Elem FiniteField::add(Elem a, Elem b) const {
  if (e_ == 1) return (a + b) % p_;
  if (p_ == 2) return a ^ b;
  Elem r = 0, place = 1;
  while (a || b) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

Elem FiniteField::neg(Elem a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  if (p_ == 2) return a;
  Elem r = 0, place = 1;
  while (a) {
    r += ((p_ - a % p_) % p_) * place;
    a /= p_;
    place *= p_;
  }
  return r;
}

Elem FiniteField::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Elem FiniteField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  std::uint32_t k = log_[a] + log_[b];
  if (k >= q_ - 1) k -= q_ - 1;
  return exp_[k];
}

Elem FiniteField::inv(Elem a) const {
  if (a == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
  const std::uint32_t la = log_[a];
  return exp_[la == 0 ? 0 : (q_ - 1) - la];
}

Elem FiniteField::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw DomainError("negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t order = q_ - 1;
  std::int64_t r = (static_cast<std::int64_t>(log_[a]) * (k % order)) % order;
  if (r < 0) r += order;
  return exp_[static_cast<std::size_t>(r)];
}

Elem FiniteField::pth_root(Elem a) const {
  std::uint64_t k = 1;
  for (std::uint32_t i = 1; i < e_; ++i) k *= p_;
  return pow(a, static_cast<std::int64_t>(k));
}

std::uint32_t FiniteField::log(Elem a) const {
  if (a == 0) throw DomainError("logarithm of zero");
  return log_[a];
}

Elem FiniteField::exp(std::uint64_t k) const { return exp_[k % (q_ - 1)]; }

std::vector<Elem> FiniteField::as_residue_solve(Elem c) const {
  std::vector<Elem> out;
  for (Elem u = 0; u < q_; ++u)
    if (sub(pow(u, p_), u) == c) out.push_back(u);
  return out;
}

std::uint32_t FiniteField::nth_power_class(Elem c, std::uint64_t n) const {
  if (c == 0) throw DomainError("power class of zero");
  if (n == 0 || n % p_ == 0) throw DomainError("n must be positive and prime to p");
  const auto d = std::gcd<std::uint64_t, std::uint64_t>(n, q_ - 1);
  return static_cast<std::uint32_t>(log_[c] % d);
}

std::optional<Elem> FiniteField::nth_root(Elem c, std::uint64_t n) const {
  if (c == 0) return Elem{0};
  for (Elem b = 1; b < q_; ++b)
    if (pow(b, static_cast<std::int64_t>(n)) == c) return b;
  return std::nullopt;
}

std::vector<Elem> FiniteField::roots_of_unity(std::uint64_t n) const {
  std::vector<Elem> out;
  for (Elem b = 1; b < q_; ++b)
    if (pow(b, static_cast<std::int64_t>(n % (q_ - 1))) == 1) out.push_back(b);
  return out;
}

Elem FiniteField::primitive_root_of_unity(std::uint64_t n) const {
  if (n == 0 || (q_ - 1) % n != 0) {
    throw DomainError("F_" + std::to_string(q_) + " has no primitive " + std::to_string(n) +
                      "-th root of unity");
  }
  return exp_[(q_ - 1) / n % (q_ - 1)];
}

std::string FiniteField::format(Elem a) const {
  if (e_ == 1) return std::to_string(a);
  const auto d = digits(a);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = d.size(); i-- > 0;) {
    if (d[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    if (i == 0) {
      os << d[i];
      continue;
    }
    if (d[i] != 1) os << d[i] << '*';
    os << 'g';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

FqElem::FqElem(FieldPtr field, Elem code) : field_(std::move(field)), code_(code) {
  if (code_ >= field_->q()) throw DomainError("element code out of range");
}

FqElem FqElem::from_int(FieldPtr field, std::int64_t v) {
  const Elem c = field->from_int(v);
  return FqElem(std::move(field), c);
}

namespace {
void check_same(const FqElem& a, const FqElem& b) {
  if (!(*a.field() == *b.field())) throw RingMismatch("operands live in different fields");
}
}  // namespace

FqElem operator+(const FqElem& a, const FqElem& b) {
  check_same(a, b);
  return FqElem(a.field_, a.field_->add(a.code_, b.code_));
}
FqElem operator-(const FqElem& a, const FqElem& b) {
  check_same(a, b);
  return FqElem(a.field_, a.field_->sub(a.code_, b.code_));
}
FqElem operator*(const FqElem& a, const FqElem& b) {
  check_same(a, b);
  return FqElem(a.field_, a.field_->mul(a.code_, b.code_));
}
FqElem operator/(const FqElem& a, const FqElem& b) {
  check_same(a, b);
  return FqElem(a.field_, a.field_->div(a.code_, b.code_));
}
FqElem FqElem::operator-() const { return FqElem(field_, field_->neg(code_)); }
FqElem FqElem::pow(std::int64_t k) const { return FqElem(field_, field_->pow(code_, k)); }

FqElem frobenius(const FqElem& a) { return FqElem(a.field(), a.field()->frobenius(a.code())); }
FqElem pth_root(const FqElem& a) { return FqElem(a.field(), a.field()->pth_root(a.code())); }

std::vector<FqElem> as_residue_solve(const FqElem& c) {
  std::vector<FqElem> out;
  for (Elem u : c.field()->as_residue_solve(c.code())) out.emplace_back(c.field(), u);
  return out;
}

std::uint32_t nth_power_class(const FqElem& c, std::uint64_t n) {
  return c.field()->nth_power_class(c.code(), n);
}

}  // namespace ftk
