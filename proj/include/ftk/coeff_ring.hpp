#pragma once

// Coefficient rings for series: the field F_q itself (m = 1) or the local
// test ring F_q[x]/(x^m), 2 <= m <= 4. Ring elements are encoded as
// sum a_i q^i over the coefficients a_0 + a_1 x + ... + a_{m-1} x^{m-1}.

#include <array>
#include <cstdint>
#include <memory>
#include <string>

#include "ftk/field.hpp"

namespace ftk {

class CoeffRing;
using RingPtr = std::shared_ptr<const CoeffRing>;

class CoeffRing {
 public:
  static constexpr int kMaxNilpotency = 4;

  static RingPtr field(FieldPtr f) { return get(std::move(f), 1); }
  static RingPtr get(FieldPtr f, int m);

  const FieldPtr& base() const noexcept { return base_; }
  const FiniteField& k() const noexcept { return *base_; }
  int m() const noexcept { return m_; }
  bool is_field() const noexcept { return m_ == 1; }
  std::uint32_t p() const noexcept { return base_->p(); }
  std::uint64_t size() const noexcept { return size_; }

  Elem from_field(Elem a) const noexcept { return a; }
  Elem from_int(std::int64_t v) const { return base_->from_int(v); }
  /// The nilpotent generator x (requires m >= 2).
  Elem x() const;
  /// a_0, the image in the residue field.
  Elem residue(Elem a) const noexcept { return m_ == 1 ? a : a % base_->q(); }
  Elem coeff(Elem a, int i) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  Elem pow(Elem a, std::uint64_t k) const;
  bool is_unit(Elem a) const noexcept { return residue(a) != 0; }
  bool is_nilpotent(Elem a) const noexcept { return residue(a) == 0; }
  /// Throws DomainError on non-units.
  Elem inv(Elem a) const;
  Elem frobenius(Elem a) const;
  /// Multiplies by a field scalar.
  Elem scale(Elem a, Elem c) const;

  std::string format(Elem a) const;

  bool operator==(const CoeffRing& o) const noexcept { return *base_ == *o.base_ && m_ == o.m_; }

  CoeffRing(FieldPtr f, int m);

 private:
  using Coords = std::array<Elem, kMaxNilpotency>;
  Coords split(Elem a) const;
  Elem join(const Coords& c) const;

  FieldPtr base_;
  int m_;
  std::uint64_t size_;
};

/// Element of a test ring F_q[x]/(x^m), paired with its ring.
class TestRingElem {
 public:
  TestRingElem(RingPtr ring, Elem code);

  const RingPtr& ring() const noexcept { return ring_; }
  Elem code() const noexcept { return code_; }
  bool is_unit() const noexcept { return ring_->is_unit(code_); }
  bool is_nilpotent() const noexcept { return ring_->is_nilpotent(code_); }

  friend TestRingElem operator+(const TestRingElem& a, const TestRingElem& b);
  friend TestRingElem operator*(const TestRingElem& a, const TestRingElem& b);
  TestRingElem inverse() const { return {ring_, ring_->inv(code_)}; }

  friend bool operator==(const TestRingElem& a, const TestRingElem& b) {
    return *a.ring_ == *b.ring_ && a.code_ == b.code_;
  }

 private:
  RingPtr ring_;
  Elem code_;
};

}  // namespace ftk
