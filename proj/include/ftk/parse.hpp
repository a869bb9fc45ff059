#pragma once

// Series expressions over F_q or F_q[x]/(x^m):
//
//   expr    := ['+'|'-'] term (('+'|'-') term)*
//   term    := power ('*'? power)*
//   power   := primary ['^' exponent]
//   primary := integer | 't' | 'g' | 'x' | '(' expr ')'
//
// Integers are read mod p, g is the field generator (e >= 2), x the
// nilpotent of a test ring (m >= 2). Exponents are integers; a negative
// exponent is only accepted directly on t. Errors carry character offsets.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "ftk/laurent.hpp"

namespace ftk {

/// Parses text as a Laurent polynomial known mod t^prec. Without prec the
/// precision is default_prec, raised to one past the highest exponent.
/// With an explicit prec, terms at or above it are dropped.
LaurentSeries parse_series(std::string_view text, const RingPtr& ring,
                           std::optional<std::int64_t> prec = std::nullopt,
                           std::int64_t default_prec = 32);

/// A coefficient expression without t.
Elem parse_coefficient(std::string_view text, const RingPtr& ring);

/// Inverse of parse_series for the stored terms, e.g. "(g+1)*t^-1+2".
std::string render_series(const LaurentSeries& s);

/// The default CLI precision 2 * break_bound + 32.
inline std::int64_t default_precision(std::int64_t break_bound) { return 2 * break_bound + 32; }

}  // namespace ftk
