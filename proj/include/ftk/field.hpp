#pragma once

/**
 * @file field.hpp
 * @brief Exact arithmetic in the finite field F_q, q = p^e.
 *
 * Elements are encoded as integers in [0, q): the code of
 * c_0 + c_1 g + ... + c_{e-1} g^{e-1} is sum c_i p^i, where g is the class of
 * the variable modulo the field's defining polynomial. The defining
 * polynomial is the smallest monic irreducible of degree e in the same
 * encoding, so every run builds the same field. "Smallest element" anywhere
 * in the library means smallest code.
 *
 * Fields are interned: FiniteField::get(p, e) always returns the same
 * instance, and all lookup tables are built once at construction.
 */

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace ftk {

using Elem = std::uint32_t;

class FiniteField;
using FieldPtr = std::shared_ptr<const FiniteField>;

class FiniteField {
 public:
  /// Largest supported field size (multiplication runs through log tables).
  static constexpr std::uint32_t kMaxOrder = 1u << 16;

  static FieldPtr get(std::uint32_t p, std::uint32_t e = 1);

  std::uint32_t p() const noexcept { return p_; }
  std::uint32_t e() const noexcept { return e_; }
  std::uint32_t q() const noexcept { return q_; }
  /// Coefficients of the defining polynomial, constant term first, leading 1 last.
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

  Elem zero() const noexcept { return 0; }
  Elem one() const noexcept { return 1; }
  /// The class of the polynomial variable (equals p when e > 1).
  Elem g() const;

  Elem from_int(std::int64_t v) const;
  std::vector<std::uint32_t> digits(Elem a) const;
  Elem from_digits(const std::vector<std::uint32_t>& d) const;

  Elem add(Elem a, Elem b) const;
  Elem sub(Elem a, Elem b) const;
  Elem neg(Elem a) const;
  Elem mul(Elem a, Elem b) const;
  /// Throws DomainError on zero.
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  Elem pow(Elem a, std::int64_t k) const;
  Elem scale(Elem a, std::int64_t k) const { return mul(a, from_int(k)); }

  Elem frobenius(Elem a) const { return pow(a, p_); }
  /// Unique b with b^p = a; F_q is perfect.
  Elem pth_root(Elem a) const;

  Elem generator() const noexcept { return generator_; }
  /// Discrete logarithm to the fixed generator; a must be nonzero.
  std::uint32_t log(Elem a) const;
  Elem exp(std::uint64_t k) const;

  /// All u in F_q with u^p - u = c, in increasing code order (0 or p entries).
  std::vector<Elem> as_residue_solve(Elem c) const;
  /// Smallest element of the coset c + {u^p - u : u in F_q}.
  Elem transversal_rep(Elem c) const { return transversal_[c]; }
  /// The p coset representatives of F_q / {u^p - u}, increasing.
  const std::vector<Elem>& transversal() const noexcept { return transversal_reps_; }

  /// Class of c in F_q^* / (F_q^*)^n, as log(c) mod gcd(n, q-1).
  std::uint32_t nth_power_class(Elem c, std::uint64_t n) const;
  /// Smallest b with b^n = c, if one exists.
  std::optional<Elem> nth_root(Elem c, std::uint64_t n) const;
  /// All xi in F_q with xi^n = 1, increasing.
  std::vector<Elem> roots_of_unity(std::uint64_t n) const;
  /// The fixed primitive n-th root of unity generator^((q-1)/n); requires n | q-1.
  Elem primitive_root_of_unity(std::uint64_t n) const;

  std::string format(Elem a) const;

  bool operator==(const FiniteField& o) const noexcept { return p_ == o.p_ && e_ == o.e_; }

  FiniteField(std::uint32_t p, std::uint32_t e);

 private:
  Elem slow_mul(Elem a, Elem b) const;

  std::uint32_t p_;
  std::uint32_t e_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  Elem generator_ = 0;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> transversal_;
  std::vector<Elem> transversal_reps_;
};

bool is_prime(std::uint64_t n);

/// Value wrapper pairing a code with its field.
class FqElem {
 public:
  FqElem(FieldPtr field, Elem code);
  static FqElem from_int(FieldPtr field, std::int64_t v);

  const FieldPtr& field() const noexcept { return field_; }
  Elem code() const noexcept { return code_; }
  bool is_zero() const noexcept { return code_ == 0; }

  friend FqElem operator+(const FqElem& a, const FqElem& b);
  friend FqElem operator-(const FqElem& a, const FqElem& b);
  friend FqElem operator*(const FqElem& a, const FqElem& b);
  friend FqElem operator/(const FqElem& a, const FqElem& b);
  FqElem operator-() const;
  FqElem pow(std::int64_t k) const;

  friend bool operator==(const FqElem& a, const FqElem& b) {
    return *a.field_ == *b.field_ && a.code_ == b.code_;
  }

  std::string to_string() const { return field_->format(code_); }

 private:
  FieldPtr field_;
  Elem code_;
};

FqElem frobenius(const FqElem& a);
FqElem pth_root(const FqElem& a);
std::vector<FqElem> as_residue_solve(const FqElem& c);
/// Throws DomainError when c = 0 or p | n.
std::uint32_t nth_power_class(const FqElem& c, std::uint64_t n);

}  // namespace ftk
