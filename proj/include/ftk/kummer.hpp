#pragma once

// Tame cyclic covers Y^n = b of Spec F_q((t)), p not dividing n.
//
// The class of b is (unit_ord(b) mod n, class of its leading unit
// coefficient in F_q^* / (F_q^*)^n). The remaining 1-unit factor is always
// an n-th power, which canonicalization certifies by extracting its root.

#include <cstdint>
#include <optional>
#include <vector>

#include "ftk/laurent.hpp"

namespace ftk {

struct KummerClass {
  std::uint64_t n = 1;
  std::uint64_t q_exp = 0;
  std::uint32_t unit_class = 0;

  friend bool operator==(const KummerClass&, const KummerClass&) = default;
  friend auto operator<=>(const KummerClass&, const KummerClass&) = default;
};

/// Throws DomainError if n = 0 or p | n.
void require_tame(const FiniteField& k, std::uint64_t n);

KummerClass kummer_canonicalize(const LaurentSeries& b, std::uint64_t n);
/// generator^unit_class * t^q_exp.
LaurentSeries kummer_series(const KummerClass& c, const RingPtr& ring, std::int64_t prec);

/// Some u with u^n * b = b', or nothing when the classes differ.
std::optional<LaurentSeries> kummer_iso_witness(const LaurentSeries& b, const LaurentSeries& b2,
                                                std::uint64_t n);

/// mu_n(F_q), increasing; these are the automorphisms of every mu_n-cover.
std::vector<Elem> kummer_automorphisms(const FiniteField& k, std::uint64_t n);

std::uint64_t kummer_class_count(const FiniteField& k, std::uint64_t n);
std::vector<KummerClass> enumerate_kummer_classes(const FiniteField& k, std::uint64_t n);

}  // namespace ftk
