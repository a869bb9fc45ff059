#include "ftk/coeff_ring.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <tuple>
#include <utility>

#include "ftk/errors.hpp"

namespace ftk {

RingPtr CoeffRing::get(FieldPtr f, int m) {
  static std::mutex mu;
  static std::map<std::tuple<std::uint32_t, std::uint32_t, int>, RingPtr> cache;
  std::lock_guard lock(mu);
  const auto key = std::make_tuple(f->p(), f->e(), m);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto r = std::make_shared<const CoeffRing>(std::move(f), m);
  cache.emplace(key, r);
  return r;
}

CoeffRing::CoeffRing(FieldPtr f, int m) : base_(std::move(f)), m_(m) {
  if (m < 1 || m > kMaxNilpotency) throw DomainError("test ring nilpotency order must be in 1..4");
  size_ = 1;
  for (int i = 0; i < m; ++i) size_ *= base_->q();
  if (size_ > (std::uint64_t{1} << 31)) throw ScaleExceeded("test ring too large");
}

Elem CoeffRing::x() const {
  if (m_ < 2) throw DomainError("the field has no nilpotent generator x");
  return base_->q();
}

CoeffRing::Coords CoeffRing::split(Elem a) const {
  Coords c{};
  const Elem q = base_->q();
  for (int i = 0; i < m_; ++i) {
    c[i] = a % q;
    a /= q;
  }
  return c;
}

Elem CoeffRing::join(const Coords& c) const {
  Elem a = 0;
  const Elem q = base_->q();
  for (int i = m_; i-- > 0;) a = a * q + c[i];
  return a;
}

Elem CoeffRing::coeff(Elem a, int i) const { return split(a)[static_cast<std::size_t>(i)]; }

Elem CoeffRing::add(Elem a, Elem b) const {
  if (m_ == 1) return base_->add(a, b);
  const auto ca = split(a), cb = split(b);
  Coords r{};
  for (int i = 0; i < m_; ++i) r[i] = base_->add(ca[i], cb[i]);
  return join(r);
}

Elem CoeffRing::neg(Elem a) const {
  if (m_ == 1) return base_->neg(a);
  auto c = split(a);
  for (int i = 0; i < m_; ++i) c[i] = base_->neg(c[i]);
  return join(c);
}

Elem CoeffRing::mul(Elem a, Elem b) const {
  if (m_ == 1) return base_->mul(a, b);
  const auto ca = split(a), cb = split(b);
  Coords r{};
  for (int i = 0; i < m_; ++i)
    for (int j = 0; i + j < m_; ++j) r[i + j] = base_->add(r[i + j], base_->mul(ca[i], cb[j]));
  return join(r);
}

Elem CoeffRing::pow(Elem a, std::uint64_t k) const {
  Elem r = 1;
  while (k) {
    if (k & 1) r = mul(r, a);
    a = mul(a, a);
    k >>= 1;
  }
  return r;
}

Elem CoeffRing::inv(Elem a) const {
  if (!is_unit(a)) throw DomainError("inverse of a non-unit ring element");
  if (m_ == 1) return base_->inv(a);
  // a = a0 (1 + n) with n nilpotent: a^-1 = a0^-1 * sum_{k<m} (-n)^k.
  const Elem a0_inv = base_->inv(residue(a));
  const Elem minus_n = neg(sub(scale(a, a0_inv), 1));
  Elem term = 1, sum = 0;
  for (int k = 0; k < m_; ++k) {
    sum = add(sum, term);
    term = mul(term, minus_n);
  }
  return scale(sum, a0_inv);
}

Elem CoeffRing::frobenius(Elem a) const {
  if (m_ == 1) return base_->frobenius(a);
  return pow(a, base_->p());
}

Elem CoeffRing::scale(Elem a, Elem c) const {
  if (m_ == 1) return base_->mul(a, c);
  auto ca = split(a);
  for (int i = 0; i < m_; ++i) ca[i] = base_->mul(ca[i], c);
  return join(ca);
}

std::string CoeffRing::format(Elem a) const {
  if (m_ == 1) return base_->format(a);
  const auto c = split(a);
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < m_; ++i) {
    if (c[i] == 0) continue;
    if (!first) os << '+';
    first = false;
    const std::string s = base_->format(c[i]);
    const bool compound = s.find('+') != std::string::npos || s.find('*') != std::string::npos;
    if (i == 0) {
      os << (compound ? "(" + s + ")" : s);
      continue;
    }
    if (c[i] != 1) os << (compound ? "(" + s + ")" : s) << '*';
    os << 'x';
    if (i > 1) os << '^' << i;
  }
  if (first) os << '0';
  return os.str();
}

TestRingElem::TestRingElem(RingPtr ring, Elem code) : ring_(std::move(ring)), code_(code) {
  if (code_ >= ring_->size()) throw DomainError("ring element code out of range");
}

TestRingElem operator+(const TestRingElem& a, const TestRingElem& b) {
  if (!(*a.ring_ == *b.ring_)) throw RingMismatch("operands live in different rings");
  return {a.ring_, a.ring_->add(a.code_, b.code_)};
}

TestRingElem operator*(const TestRingElem& a, const TestRingElem& b) {
  if (!(*a.ring_ == *b.ring_)) throw RingMismatch("operands live in different rings");
  return {a.ring_, a.ring_->mul(a.code_, b.code_)};
}

}  // namespace ftk
