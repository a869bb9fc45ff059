#include "ftk/kummer.hpp"

#include <numeric>
#include <string>

#include "ftk/errors.hpp"

namespace ftk {

void require_tame(const FiniteField& k, std::uint64_t n) {
  if (n == 0) throw DomainError("n must be positive");
  if (n % k.p() == 0) {
    throw DomainError("n = " + std::to_string(n) + " is divisible by p = " + std::to_string(k.p()));
  }
}

KummerClass kummer_canonicalize(const LaurentSeries& b, std::uint64_t n) {
  const CoeffRing& R = b.r();
  const FiniteField& k = R.k();
  require_tame(k, n);
  const std::int64_t i = unit_ord(b);
  const Elem lead = R.residue(b.coeff(i));
  const auto sn = static_cast<std::int64_t>(n);
  KummerClass out{n, static_cast<std::uint64_t>(((i % sn) + sn) % sn), k.nth_power_class(lead, n)};
  // The 1-unit t^-i b / lead must have an n-th root; nth_root_unit verifies it.
  const LaurentSeries one_unit = scale(b.shifted(-i), R.from_field(k.inv(lead)));
  if (one_unit.prec() > 0) nth_root_unit(one_unit, n);
  return out;
}

LaurentSeries kummer_series(const KummerClass& c, const RingPtr& ring, std::int64_t prec) {
  const FiniteField& k = ring->k();
  if (c.unit_class >= std::gcd<std::uint64_t>(c.n, k.q() - 1) || c.q_exp >= c.n) {
    throw DomainError("Kummer class out of range");
  }
  return LaurentSeries::monomial(ring, ring->from_field(k.exp(c.unit_class)),
                                 static_cast<std::int64_t>(c.q_exp), prec);
}

std::optional<LaurentSeries> kummer_iso_witness(const LaurentSeries& b, const LaurentSeries& b2,
                                                std::uint64_t n) {
  if (!(b.r() == b2.r())) throw RingMismatch("covers live over different coefficient rings");
  const CoeffRing& R = b.r();
  const FiniteField& k = R.k();
  require_tame(k, n);
  const auto sn = static_cast<std::int64_t>(n);
  const std::int64_t diff = unit_ord(b2) - unit_ord(b);
  if (diff % sn != 0) return std::nullopt;

  const LaurentSeries rho = b2 * invert(b);
  const std::int64_t kk = unit_ord(rho);
  if (kk % sn != 0) return std::nullopt;
  const LaurentSeries unit = rho.shifted(-kk);
  if (k.nth_power_class(R.residue(unit.coeff(0)), n) != 0) return std::nullopt;
  const LaurentSeries u = nth_root_unit(unit, n).shifted(kk / sn);
  if (!congruent(pow(u, n) * b, b2)) {
    throw PrecisionExhausted("Kummer witness does not verify at the available precision");
  }
  return u;
}

std::vector<Elem> kummer_automorphisms(const FiniteField& k, std::uint64_t n) {
  require_tame(k, n);
  return k.roots_of_unity(n);
}

std::uint64_t kummer_class_count(const FiniteField& k, std::uint64_t n) {
  require_tame(k, n);
  return n * std::gcd<std::uint64_t>(n, k.q() - 1);
}

std::vector<KummerClass> enumerate_kummer_classes(const FiniteField& k, std::uint64_t n) {
  require_tame(k, n);
  if (n > (std::uint64_t{1} << 16)) throw ScaleExceeded("n too large to enumerate");
  const auto g = static_cast<std::uint32_t>(std::gcd<std::uint64_t>(n, k.q() - 1));
  std::vector<KummerClass> out;
  out.reserve(n * g);
  for (std::uint64_t e = 0; e < n; ++e)
    for (std::uint32_t c = 0; c < g; ++c) out.push_back({n, e, c});
  return out;
}

}  // namespace ftk
