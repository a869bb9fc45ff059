#include "ftk/parse.hpp"

#include <cctype>
#include <map>
#include <sstream>

#include "ftk/errors.hpp"

namespace ftk {

namespace {

constexpr std::int64_t kMaxExponent = 1'000'000;

// Exact Laurent polynomial: exponent -> nonzero ring element.
using Poly = std::map<std::int64_t, Elem>;

class Parser {
 public:
  Parser(std::string_view text, const CoeffRing& ring) : s_(text), R_(ring) {}

  Poly parse_all() {
    Poly p = expr();
    skip_ws();
    if (pos_ < s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_ws();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Poly add(Poly a, const Poly& b, bool negate) const {
    for (const auto& [e, c] : b) {
      const Elem v = R_.add(a[e], negate ? R_.neg(c) : c);
      if (v == 0) {
        a.erase(e);
      } else {
        a[e] = v;
      }
    }
    return a;
  }

  Poly mul(const Poly& a, const Poly& b) const {
    Poly out;
    for (const auto& [e1, c1] : a)
      for (const auto& [e2, c2] : b) {
        const std::int64_t e = e1 + e2;
        if (e > kMaxExponent || e < -kMaxExponent) fail("exponent out of range");
        const Elem v = R_.add(out[e], R_.mul(c1, c2));
        if (v == 0) {
          out.erase(e);
        } else {
          out[e] = v;
        }
      }
    return out;
  }

  Poly constant(Elem c) const {
    Poly p;
    if (c != 0) p[0] = c;
    return p;
  }

  Poly expr() {
    skip_ws();
    bool negate = false;
    if (peek('+') || peek('-')) {
      negate = s_[pos_] == '-';
      ++pos_;
    }
    Poly acc = add({}, term(), negate);
    while (peek('+') || peek('-')) {
      negate = s_[pos_] == '-';
      ++pos_;
      acc = add(std::move(acc), term(), negate);
    }
    return acc;
  }

  bool starts_primary() {
    skip_ws();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == 't' || c == 'g' || c == 'x' || c == '(';
  }

  Poly term() {
    Poly acc = power();
    for (;;) {
      if (peek('*')) {
        ++pos_;
        acc = mul(acc, power());
      } else if (starts_primary()) {
        acc = mul(acc, power());
      } else {
        return acc;
      }
    }
  }

  std::int64_t exponent() {
    skip_ws();
    bool neg = false;
    if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
      neg = s_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
    std::int64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + (s_[pos_++] - '0');
      if (v > kMaxExponent) fail("exponent out of range");
    }
    return neg ? -v : v;
  }

  Poly power() {
    skip_ws();
    const std::size_t start = pos_;
    const bool is_t = pos_ < s_.size() && s_[pos_] == 't';
    Poly base = primary();
    if (!peek('^')) return base;
    ++pos_;
    const std::size_t exp_at = pos_;
    const std::int64_t k = exponent();
    if (is_t) {
      Poly p;
      p[k] = 1;
      return p;
    }
    if (k < 0) {
      pos_ = exp_at;
      skip_ws();
      fail("negative exponent is only allowed on t (base starts at offset " + std::to_string(start) + ")");
    }
    Poly acc = constant(1);
    for (std::int64_t i = 0; i < k; ++i) {
      acc = mul(acc, base);
      if (acc.empty()) break;
    }
    return acc;
  }

  Poly primary() {
    skip_ws();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::int64_t v = 0;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        v = (v * 10 + (s_[pos_++] - '0')) % R_.p();
      }
      return constant(R_.from_int(v));
    }
    if (c == 't') {
      ++pos_;
      Poly p;
      p[1] = 1;
      return p;
    }
    if (c == 'g') {
      if (R_.k().e() < 2) fail("'g' needs an extension field (e >= 2)");
      ++pos_;
      return constant(R_.from_field(R_.k().g()));
    }
    if (c == 'x') {
      if (R_.m() < 2) fail("'x' needs a test ring (m >= 2)");
      ++pos_;
      return constant(R_.x());
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return inner;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view s_;
  const CoeffRing& R_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentSeries parse_series(std::string_view text, const RingPtr& ring, std::optional<std::int64_t> prec,
                           std::int64_t default_prec) {
  const Poly poly = Parser(text, *ring).parse_all();
  std::int64_t p = default_prec;
  if (prec) {
    p = *prec;
  } else if (!poly.empty()) {
    p = std::max(p, poly.rbegin()->first + 1);
  }
  LaurentSeries out = LaurentSeries::zero(ring, p);
  if (poly.empty()) return out;
  const std::int64_t lo = poly.begin()->first;
  if (lo >= p) return out;
  std::vector<Elem> coeffs;
  for (const auto& [e, c] : poly) {
    if (e >= p) break;
    coeffs.resize(static_cast<std::size_t>(e - lo), 0);
    coeffs.push_back(c);
  }
  return LaurentSeries(ring, lo, std::move(coeffs), p);
}

Elem parse_coefficient(std::string_view text, const RingPtr& ring) {
  const Poly poly = Parser(text, *ring).parse_all();
  if (poly.empty()) return 0;
  if (poly.size() != 1 || poly.begin()->first != 0) throw ParseError("expected a coefficient without t", 0);
  return poly.begin()->second;
}

std::string render_series(const LaurentSeries& s) {
  if (s.is_zero()) return "0";
  const CoeffRing& R = s.r();
  std::ostringstream os;
  bool first = true;
  s.for_each_term([&](std::int64_t e, Elem c) {
    if (!first) os << '+';
    first = false;
    std::string coeff = R.format(c);
    const bool compound = coeff.find_first_of("+*^") != std::string::npos;
    if (e == 0) {
      os << coeff;
      return;
    }
    if (c != 1) os << (compound ? "(" + coeff + ")" : coeff) << '*';
    os << 't';
    if (e != 1) os << '^' << e;
  });
  return os.str();
}

}  // namespace ftk
