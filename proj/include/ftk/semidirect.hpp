#pragma once

// Torsors under G = H x| C_n with H = (Z/p)^r over the tame frame
// F_q((s)), s^n = t (up to the frame's twist).
//
// Conventions. sigma is the substitution f(s) -> f(xi s). The generator of
// C_n acts on H by the matrix psi. A Z_phi object is a pair (b, u) of
// r-vectors of series with
//
//     u^p - u = psi * sigma(b) - b        (componentwise, psi mixing components)
//
// and it comes from a G-torsor iff sum_{j<n} psi^j sigma^j(u) = 0. That sum
// is always a constant vector in F_p^r, computed by vn_check. An
// isomorphism (b, u) -> (b', u') is z with b' = b + P(z) and
// u' = u + psi sigma(z) - z, so the automorphisms of (b, u) are the
// psi-fixed vectors of F_p^r.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ftk/artin_schreier.hpp"

namespace ftk {

/// r x r matrix over F_p, row-major, entries in [0, p).
class FpMatrix {
 public:
  FpMatrix() = default;
  FpMatrix(std::uint32_t p, int r, std::vector<std::uint32_t> entries);
  static FpMatrix identity(std::uint32_t p, int r);
  /// Reduces arbitrary integers (negative allowed) mod p.
  static FpMatrix from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows);

  std::uint32_t p() const noexcept { return p_; }
  int r() const noexcept { return r_; }
  std::uint32_t at(int i, int j) const { return a_[static_cast<std::size_t>(i * r_ + j)]; }
  const std::vector<std::uint32_t>& entries() const noexcept { return a_; }

  FpMatrix operator*(const FpMatrix& o) const;
  FpMatrix operator+(const FpMatrix& o) const;
  FpMatrix operator-(const FpMatrix& o) const;
  FpMatrix pow(std::uint64_t k) const;
  /// Applies to a vector of F_p coordinates.
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;
  /// Applies to a vector of F_q elements (F_p-linear combination).
  std::vector<Elem> apply(const FiniteField& k, const std::vector<Elem>& v) const;
  std::vector<LaurentSeries> apply(const std::vector<LaurentSeries>& v) const;

  friend bool operator==(const FpMatrix&, const FpMatrix&) = default;

 private:
  std::uint32_t p_ = 2;
  int r_ = 0;
  std::vector<std::uint32_t> a_;
};

std::string to_string(const FpMatrix& m);

struct SemidirectGroup {
  std::uint32_t p = 2;
  int r = 0;
  std::uint64_t n = 1;
  FpMatrix psi;
};

/// Checks p prime, p not dividing n, psi of size r with psi^n = I.
void validate(const SemidirectGroup& g);

struct TameFrame {
  FieldPtr field;
  std::uint64_t n = 1;
  std::uint64_t q_exp = 0;
  Elem zeta = 1;
  std::uint64_t beta = 0;
  Elem xi = 1;
};

/// Requires gcd(q_exp, n) = 1 and n | q - 1.
TameFrame make_frame(const FieldPtr& k, std::uint64_t n, std::uint64_t q_exp);

struct CoprimeReduction {
  std::uint64_t d;
  std::uint64_t n;
  std::uint64_t q_exp;
  SemidirectGroup group;
};

/// d = gcd(n, q_exp) (so d = n when q_exp = 0); the subgroup H x| C_{n/d}
/// is generated by the d-th power of the C_n generator, acting by psi^d.
CoprimeReduction reduce_to_coprime(const SemidirectGroup& g, std::uint64_t q_exp);

ElemAbCover sigma_apply(const TameFrame& f, const ElemAbCover& b, std::uint64_t times = 1);
ElemAbCover phi_apply(const SemidirectGroup& g, const TameFrame& f, const ElemAbCover& b);

struct ZPhiObject {
  ElemAbCover b;
  std::vector<LaurentSeries> u;
};

bool zphi_identity_holds(const SemidirectGroup& g, const TameFrame& f, const ZPhiObject& obj);

/// One witness u with P(u) = phi(b) - b, or nothing when the elementary
/// abelian classes of b and phi(b) differ. All witnesses are u + F_p^r.
std::optional<std::vector<LaurentSeries>> zphi_solve(const SemidirectGroup& g, const TameFrame& f,
                                                     const ElemAbCover& b);

/// The constant vector sum_{j<n} psi^j sigma^j(u) in F_p^r. Throws
/// DomainError if obj violates the witness identity or the sum is not
/// constant.
std::vector<std::uint32_t> vn_check(const SemidirectGroup& g, const TameFrame& f,
                                    const ZPhiObject& obj);

struct GTorsorClass {
  TameFrame frame;
  ElemAbCanonical canon;
  ZPhiObject zphi;
  /// The F_p^r shift applied to the base witness, as sum h_j p^j.
  std::uint64_t shift_code = 0;
  std::optional<std::int64_t> break_;
  std::uint64_t aut_count = 1;
};

/// Classes of Z_phi objects with v^n = id and break <= break_bound in the
/// frame variable, sorted by (break, canonical form, shift). prec <= 0 picks
/// 2 * break_bound + 32. Throws ScaleExceeded past max_classes.
std::vector<GTorsorClass> enumerate_g_torsors(const SemidirectGroup& g, const TameFrame& f,
                                              std::int64_t break_bound, std::int64_t prec = 0,
                                              std::uint64_t max_classes = 1u << 16);

/// Encodes a vector in F_p^r as sum v_j p^j, and back.
std::uint64_t fp_vector_code(std::uint32_t p, const std::vector<std::uint32_t>& v);
std::vector<std::uint32_t> fp_vector_decode(std::uint32_t p, int r, std::uint64_t code);

}  // namespace ftk
