#pragma once

// Z/p and (Z/p)^r covers of Spec F_q((t)), written X^p - X = b.
//
// Canonical form of b: sum over s in S of v_s t^-s plus a constant from the
// fixed transversal of F_q / {u^p - u}. Two covers are isomorphic iff their
// canonical forms agree, and canonicalization returns the coboundary that
// moves b onto its canonical form.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ftk/indpoint.hpp"
#include "ftk/laurent.hpp"

namespace ftk {

struct ASCanonical {
  FieldPtr field;
  /// s -> v_s, keys in S, values nonzero.
  std::map<std::int64_t, Elem> support;
  Elem constant_class = 0;

  friend bool operator==(const ASCanonical& a, const ASCanonical& b);
  /// Lexicographic on (support pairs, constant_class).
  friend bool operator<(const ASCanonical& a, const ASCanonical& b);
};

/// canon together with u such that b + u^p - u equals as_series(canon).
struct ASReduction {
  ASCanonical canon;
  LaurentSeries u;
};

ASReduction as_reduce(const LaurentSeries& b);
ASCanonical as_canonicalize(const LaurentSeries& b);
/// The canonical series sum v_s t^-s + constant_class, known mod t^prec.
LaurentSeries as_series(const ASCanonical& c, std::int64_t prec);
/// Checks the ASCanonical invariants; throws DomainError.
void validate(const ASCanonical& c);

/// Some u with u^p - u + c = d, or nothing when the covers are not isomorphic.
/// Every other solution differs from u by a constant in F_p.
std::optional<LaurentSeries> as_iso_witness(const LaurentSeries& c, const LaurentSeries& d);

std::optional<std::int64_t> as_break(const ASCanonical& c);
IndPoint as_moduli_point(const ASCanonical& c);

/// p * q^|S_m| classes, sorted.
std::vector<ASCanonical> enumerate_as_classes(const FieldPtr& k, std::int64_t m);
std::uint64_t as_class_count(const FiniteField& k, std::int64_t m);

// Elementary abelian (Z/p)^r: componentwise.
using ElemAbCover = std::vector<LaurentSeries>;
using ElemAbCanonical = std::vector<ASCanonical>;

ElemAbCanonical elemab_canonicalize(const ElemAbCover& b);
std::optional<std::vector<LaurentSeries>> elemab_iso_witness(const ElemAbCover& c,
                                                             const ElemAbCover& d);
std::vector<ElemAbCanonical> elemab_enumerate(const FieldPtr& k, int r, std::int64_t m);
std::optional<std::int64_t> elemab_break(const ElemAbCanonical& c);
IndPoint elemab_moduli_point(const FieldPtr& k, const ElemAbCanonical& c);

std::string to_string(const ASCanonical& c);

}  // namespace ftk
