#pragma once

// Points of the Frobenius-twisted direct system X_1 -> X_2 -> ... where
// X_m = A^(S_m) (x) F_p^r. The transition X_m -> X_{m+1} includes the S_m
// coordinates into S_{m+1} and then applies Frobenius to every coordinate.
//
// value is laid out slot-major: value[i * r + j] is component j of the
// coordinate at the i-th element of S_m (in increasing order).

#include <cstdint>
#include <vector>

#include "ftk/field.hpp"

namespace ftk {

/// S_m = {1 <= s <= m : p does not divide s}, increasing.
std::vector<std::int64_t> prime_to_p_upto(std::uint32_t p, std::int64_t m);

struct IndPoint {
  FieldPtr field;
  int r = 1;
  std::int64_t level = 1;
  std::vector<Elem> value;

  /// Coordinate j at slot s (0 when s is not in S_level).
  Elem at(std::int64_t s, int j = 0) const;
};

/// Checks the shape invariant |value| = |S_level| * r; throws DomainError.
void validate(const IndPoint& a);

IndPoint indpoint_transition(const IndPoint& a, std::int64_t target_level);
bool indpoint_eq(const IndPoint& a, const IndPoint& b);
/// Least-level representative; the zero point is (1, 0).
IndPoint indpoint_canonical(const IndPoint& a);

/// q^(|S_m| r); throws ScaleExceeded past 2^63.
std::uint64_t level_count(const FiniteField& k, std::int64_t m, int r);

bool operator==(const IndPoint& a, const IndPoint& b);

}  // namespace ftk
