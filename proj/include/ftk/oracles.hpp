#pragma once

// Exhaustive desk-scale oracles. They share only field and ring element
// arithmetic with the library: series are plain coefficient windows,
// multiplied by schoolbook convolution, and classes are found by brute
// orbit enumeration with union-find.

#include <cstdint>
#include <map>
#include <vector>

#include "ftk/coeff_ring.hpp"
#include "ftk/semidirect.hpp"

namespace ftk::oracle {

struct OrbitCount {
  std::uint64_t elements = 0;
  std::uint64_t orbits = 0;
};

/// Series b = sum_{-m <= i < P} b_i t^i over F_q modulo P(u) = u^p - u for u
/// in the window [-floor(m/p), P), everything mod t^P. Returns the orbit of
/// every window element as well (indexed by the base-q code of the
/// coefficient vector, lowest exponent first).
struct ASOrbits {
  OrbitCount count;
  std::int64_t low = 0;
  std::int64_t top = 0;
  std::vector<std::uint32_t> orbit_of;
};
ASOrbits artin_schreier_orbits(const FieldPtr& k, std::int64_t m, std::int64_t top = 3);

/// Units c t^i (1 + a_1 t + ... + a_{R-1} t^{R-1}), 0 <= i < 2n, modulo
/// multiplication by n-th powers of units, relative precision R.
OrbitCount kummer_orbits(const FieldPtr& k, std::uint64_t n, int rel_prec = 3);

/// Exhaustive search for u in the window [lo, hi) (relative precision R
/// after the leading term) with u^n b = b'. Both b and b' are given as
/// exact Laurent polynomials exponent -> coefficient.
bool kummer_witness_exists(const FieldPtr& k, std::uint64_t n, const std::map<std::int64_t, Elem>& b,
                           const std::map<std::int64_t, Elem>& b2, std::int64_t lo, std::int64_t hi,
                           int rel_prec = 3);

struct SemidirectCensus {
  std::uint64_t objects = 0;
  std::uint64_t classes = 0;
  /// Sorted automorphism orders, one per class.
  std::vector<std::uint64_t> aut_orders;
  std::int64_t top = 0;
};

/// G-torsors with tame part Y^n = t^q_exp and H-part break <= B, modelled as
/// d = gcd(n, q_exp) components, each a (Z/p)^r-torsor over F_q((s)), glued
/// by affine maps Y -> psi^-1 (Y + u). Classes are orbits of translation
/// conjugation; automorphisms are stabilizers. Throws ScaleExceeded when the
/// series window would exceed 12 coefficient slots.
SemidirectCensus semidirect_census(const SemidirectGroup& g, const FieldPtr& k, std::uint64_t q_exp,
                                   std::int64_t break_bound);

struct ConstancyScan {
  std::uint64_t scanned = 0;
  std::uint64_t solutions = 0;
  std::uint64_t nonconstant = 0;
};

/// All Laurent polynomials over ring with support in [lo, hi): counts f with
/// f^n = 1 (n > 0) or f^2 = f (n = 0), exactly, and how many are not constant.
ConstancyScan constancy_scan(const RingPtr& ring, std::int64_t lo, std::int64_t hi, std::uint64_t n);

}  // namespace ftk::oracle
