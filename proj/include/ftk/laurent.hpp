#pragma once

/**
 * @file laurent.hpp
 * @brief Truncated Laurent series over F_q or a test ring F_q[x]/(x^m).
 *
 * A series is known modulo t^prec. Coefficients are stored densely between
 * the lowest and highest nonzero exponent; everything between the highest
 * stored exponent and prec is a known zero. Every operation derives the
 * precision of its result from the precisions of its inputs:
 *
 *   add/sub:  min(prec_a, prec_b)
 *   mul:      min(low_a + prec_b, low_b + prec_a)
 *
 * where low is the lowest nonzero exponent (prec itself for a zero series).
 * An operation that would know none of its output coefficients throws
 * PrecisionExhausted.
 */

#include <cstdint>
#include <optional>
#include <vector>

#include "ftk/coeff_ring.hpp"

namespace ftk {

class LaurentSeries {
 public:
  /// coeffs[k] is the coefficient of t^(start + k); all exponents must be < prec.
  LaurentSeries(RingPtr ring, std::int64_t start, std::vector<Elem> coeffs, std::int64_t prec);

  static LaurentSeries zero(RingPtr ring, std::int64_t prec);
  static LaurentSeries constant(RingPtr ring, Elem c, std::int64_t prec);
  static LaurentSeries monomial(RingPtr ring, Elem c, std::int64_t exponent, std::int64_t prec);

  const RingPtr& ring() const noexcept { return ring_; }
  const CoeffRing& r() const noexcept { return *ring_; }
  std::int64_t prec() const noexcept { return prec_; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Lowest stored exponent; the canonical zero reports 0.
  std::int64_t val() const noexcept { return coeffs_.empty() ? 0 : start_; }
  /// Lowest nonzero exponent, or prec for a zero series.
  std::int64_t low() const noexcept { return coeffs_.empty() ? prec_ : start_; }
  /// One past the highest nonzero exponent (low() for zero).
  std::int64_t high() const noexcept { return low() + static_cast<std::int64_t>(coeffs_.size()); }
  /// Coefficient of t^i; throws PrecisionExhausted for i >= prec.
  Elem coeff(std::int64_t i) const;
  const std::vector<Elem>& stored() const noexcept { return coeffs_; }

  LaurentSeries truncated(std::int64_t new_prec) const;
  /// Multiplication by t^k.
  LaurentSeries shifted(std::int64_t k) const;
  /// Keeps only the terms with lo <= exponent < hi, same precision.
  LaurentSeries slice(std::int64_t lo, std::int64_t hi) const;

  template <typename Fn>
  void for_each_term(Fn&& fn) const {
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
      if (coeffs_[k] != 0) fn(start_ + static_cast<std::int64_t>(k), coeffs_[k]);
  }

  /// Structural equality: same ring, precision and coefficients.
  friend bool operator==(const LaurentSeries& a, const LaurentSeries& b);

 private:
  void normalize();

  RingPtr ring_;
  std::int64_t start_;
  std::int64_t prec_;
  std::vector<Elem> coeffs_;
};

struct PartsDecomposition {
  LaurentSeries negative;
  Elem constant;
  LaurentSeries positive;
};

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a);
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries scale(const LaurentSeries& a, Elem c);
LaurentSeries pow(const LaurentSeries& a, std::uint64_t k);

/// Equality of the coefficients both operands know, i.e. below min(prec).
bool congruent(const LaurentSeries& a, const LaurentSeries& b);

LaurentSeries invert(const LaurentSeries& a);
std::optional<std::int64_t> naive_ord(const LaurentSeries& a);
/// Exponent of the lowest unit coefficient; every lower coefficient is nilpotent.
std::int64_t unit_ord(const LaurentSeries& a);
PartsDecomposition split_parts(const LaurentSeries& a);

/// The unique u in t B[[t]] with u^p - u = b (mod t^prec).
LaurentSeries solve_positive(const LaurentSeries& b);
/// u^p - u.
LaurentSeries artin_schreier_op(const LaurentSeries& u);

LaurentSeries coeff_frobenius(const LaurentSeries& a);
LaurentSeries series_pth_power(const LaurentSeries& a);
/// a(xi t) for a nonzero field element xi.
LaurentSeries scale_substitute(const LaurentSeries& a, Elem xi);

/// Hensel/Newton n-th root of a series with unit_ord 0 whose constant
/// coefficient is an n-th power mod the maximal ideal; the constant term of
/// the root lifts the smallest residue root.
LaurentSeries nth_root_unit(const LaurentSeries& a, std::uint64_t n);

bool torsion_unit_is_constant(const LaurentSeries& a, std::uint64_t n);
bool idempotent_is_constant(const LaurentSeries& a);

}  // namespace ftk
