#include "ftk/indpoint.hpp"

#include <algorithm>
#include <string>

#include "ftk/errors.hpp"

namespace ftk {

std::vector<std::int64_t> prime_to_p_upto(std::uint32_t p, std::int64_t m) {
  std::vector<std::int64_t> s;
  for (std::int64_t i = 1; i <= m; ++i)
    if (i % p != 0) s.push_back(i);
  return s;
}

Elem IndPoint::at(std::int64_t s, int j) const {
  if (s < 1 || s > level || s % field->p() == 0) return 0;
  // index of s in S_level = s - floor(s / p) - 1
  const std::int64_t idx = s - s / field->p() - 1;
  return value[static_cast<std::size_t>(idx * r + j)];
}

void validate(const IndPoint& a) {
  if (!a.field) throw DomainError("ind-point without a field");
  if (a.level < 1) throw DomainError("ind-point levels start at 1");
  if (a.r < 0) throw DomainError("negative rank");
  const auto slots = prime_to_p_upto(a.field->p(), a.level).size();
  if (a.value.size() != slots * static_cast<std::size_t>(a.r)) {
    throw DomainError("ind-point value has " + std::to_string(a.value.size()) +
                      " coordinates, level needs " + std::to_string(slots * a.r));
  }
  for (Elem v : a.value)
    if (v >= a.field->q()) throw DomainError("ind-point coordinate out of range");
}

IndPoint indpoint_transition(const IndPoint& a, std::int64_t target_level) {
  validate(a);
  if (target_level < a.level) throw DomainError("transition target below the point's level");
  const FiniteField& k = *a.field;
  const auto slots = prime_to_p_upto(k.p(), target_level);
  const std::int64_t steps = target_level - a.level;
  IndPoint out{a.field, a.r, target_level, {}};
  out.value.reserve(slots.size() * static_cast<std::size_t>(a.r));
  for (std::int64_t s : slots) {
    for (int j = 0; j < a.r; ++j) {
      Elem v = a.at(s, j);
      // Frobenius has order e on F_q.
      for (std::int64_t i = 0; i < steps % k.e(); ++i) v = k.frobenius(v);
      out.value.push_back(v);
    }
  }
  return out;
}

bool indpoint_eq(const IndPoint& a, const IndPoint& b) {
  if (!(*a.field == *b.field) || a.r != b.r) return false;
  const std::int64_t top = std::max(a.level, b.level);
  return indpoint_transition(a, top).value == indpoint_transition(b, top).value;
}

IndPoint indpoint_canonical(const IndPoint& a) {
  validate(a);
  const FiniteField& k = *a.field;
  IndPoint cur = a;
  for (;;) {
    if (cur.level <= 1) break;
    const std::int64_t m = cur.level;
    bool top_free = (m % k.p() == 0);
    if (!top_free) {
      top_free = true;
      for (int j = 0; j < cur.r; ++j)
        if (cur.at(m, j) != 0) top_free = false;
    }
    if (!top_free) break;
    IndPoint prev{cur.field, cur.r, m - 1, {}};
    for (std::int64_t s : prime_to_p_upto(k.p(), m - 1))
      for (int j = 0; j < cur.r; ++j) prev.value.push_back(k.pth_root(cur.at(s, j)));
    cur = std::move(prev);
  }
  return cur;
}

std::uint64_t level_count(const FiniteField& k, std::int64_t m, int r) {
  if (r < 0) throw DomainError("negative rank");
  const auto exponent = prime_to_p_upto(k.p(), m).size() * static_cast<std::size_t>(r);
  std::uint64_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (out > (std::uint64_t{1} << 63) / k.q()) throw ScaleExceeded("level count overflows 64 bits");
    out *= k.q();
  }
  return out;
}

bool operator==(const IndPoint& a, const IndPoint& b) {
  return *a.field == *b.field && a.r == b.r && a.level == b.level && a.value == b.value;
}

}  // namespace ftk
