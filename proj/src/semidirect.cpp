#include "ftk/semidirect.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <utility>

#include "ftk/errors.hpp"
#include "ftk/parallel.hpp"

namespace ftk {

namespace {

constexpr std::uint64_t kMaxVectorScan = std::uint64_t{1} << 20;

std::uint64_t checked_power(std::uint64_t base, int exp, const char* what) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) {
    if (out > kMaxVectorScan / base) throw ScaleExceeded(std::string(what) + " too large to scan");
    out *= base;
  }
  return out;
}

std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  if (n == 1) return 0;
  for (std::uint64_t b = 1; b < n; ++b)
    if ((a % n) * b % n == 1) return b;
  throw DomainError("q_exp is not invertible mod n");
}

std::vector<Elem> decode_fq_vector(const FiniteField& k, int r, std::uint64_t code) {
  std::vector<Elem> v(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    v[static_cast<std::size_t>(j)] = static_cast<Elem>(code % k.q());
    code /= k.q();
  }
  return v;
}

}  // namespace

FpMatrix::FpMatrix(std::uint32_t p, int r, std::vector<std::uint32_t> entries)
    : p_(p), r_(r), a_(std::move(entries)) {
  if (r < 0 || a_.size() != static_cast<std::size_t>(r) * static_cast<std::size_t>(r)) {
    throw DomainError("matrix entry count does not match its size");
  }
  for (auto x : a_)
    if (x >= p) throw DomainError("matrix entry out of range mod p");
}

FpMatrix FpMatrix::identity(std::uint32_t p, int r) {
  std::vector<std::uint32_t> a(static_cast<std::size_t>(r * r), 0);
  for (int i = 0; i < r; ++i) a[static_cast<std::size_t>(i * r + i)] = 1;
  return {p, r, std::move(a)};
}

FpMatrix FpMatrix::from_rows(std::uint32_t p, const std::vector<std::vector<std::int64_t>>& rows) {
  const int r = static_cast<int>(rows.size());
  std::vector<std::uint32_t> a;
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != r) throw DomainError("matrix must be square");
    for (auto x : row) a.push_back(static_cast<std::uint32_t>(((x % p) + p) % p));
  }
  return {p, r, std::move(a)};
}

FpMatrix FpMatrix::operator*(const FpMatrix& o) const {
  if (p_ != o.p_ || r_ != o.r_) throw DomainError("matrix shape mismatch");
  std::vector<std::uint32_t> c(a_.size(), 0);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j) {
      std::uint64_t s = 0;
      for (int k = 0; k < r_; ++k) s += std::uint64_t{at(i, k)} * o.at(k, j);
      c[static_cast<std::size_t>(i * r_ + j)] = static_cast<std::uint32_t>(s % p_);
    }
  return {p_, r_, std::move(c)};
}

FpMatrix FpMatrix::operator+(const FpMatrix& o) const {
  if (p_ != o.p_ || r_ != o.r_) throw DomainError("matrix shape mismatch");
  std::vector<std::uint32_t> c(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) c[i] = (a_[i] + o.a_[i]) % p_;
  return {p_, r_, std::move(c)};
}

FpMatrix FpMatrix::operator-(const FpMatrix& o) const {
  if (p_ != o.p_ || r_ != o.r_) throw DomainError("matrix shape mismatch");
  std::vector<std::uint32_t> c(a_.size());
  for (std::size_t i = 0; i < a_.size(); ++i) c[i] = (a_[i] + p_ - o.a_[i]) % p_;
  return {p_, r_, std::move(c)};
}

FpMatrix FpMatrix::pow(std::uint64_t k) const {
  FpMatrix out = identity(p_, r_), base = *this;
  while (k) {
    if (k & 1) out = out * base;
    base = base * base;
    k >>= 1;
  }
  return out;
}

std::vector<std::uint32_t> FpMatrix::apply(const std::vector<std::uint32_t>& v) const {
  if (static_cast<int>(v.size()) != r_) throw DomainError("vector length does not match matrix");
  std::vector<std::uint32_t> out(v.size(), 0);
  for (int i = 0; i < r_; ++i) {
    std::uint64_t s = 0;
    for (int j = 0; j < r_; ++j) s += std::uint64_t{at(i, j)} * v[static_cast<std::size_t>(j)];
    out[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(s % p_);
  }
  return out;
}

std::vector<Elem> FpMatrix::apply(const FiniteField& k, const std::vector<Elem>& v) const {
  if (static_cast<int>(v.size()) != r_) throw DomainError("vector length does not match matrix");
  std::vector<Elem> out(v.size(), 0);
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < r_; ++j)
      out[static_cast<std::size_t>(i)] =
          k.add(out[static_cast<std::size_t>(i)], k.scale(v[static_cast<std::size_t>(j)], at(i, j)));
  return out;
}

std::vector<LaurentSeries> FpMatrix::apply(const std::vector<LaurentSeries>& v) const {
  if (static_cast<int>(v.size()) != r_) throw DomainError("vector length does not match matrix");
  std::vector<LaurentSeries> out;
  out.reserve(v.size());
  for (int i = 0; i < r_; ++i) {
    const auto& ring = v[0].ring();
    std::int64_t prec = v[0].prec();
    for (const auto& x : v) prec = std::min(prec, x.prec());
    LaurentSeries acc = LaurentSeries::zero(ring, prec);
    for (int j = 0; j < r_; ++j) {
      if (at(i, j) == 0) continue;
      acc = acc + scale(v[static_cast<std::size_t>(j)], ring->from_int(at(i, j)));
    }
    out.push_back(std::move(acc));
  }
  return out;
}

std::string to_string(const FpMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < m.r(); ++i) {
    os << (i ? "," : "") << '[';
    for (int j = 0; j < m.r(); ++j) os << (j ? "," : "") << m.at(i, j);
    os << ']';
  }
  os << ']';
  return os.str();
}

void validate(const SemidirectGroup& g) {
  if (!is_prime(g.p)) throw DomainError("p must be prime");
  if (g.n == 0 || g.n % g.p == 0) throw DomainError("n must be positive and prime to p");
  if (g.r < 0) throw DomainError("negative rank");
  if (g.psi.r() != g.r || g.psi.p() != g.p) throw DomainError("psi must be an r x r matrix over F_p");
  if (!(g.psi.pow(g.n) == FpMatrix::identity(g.p, g.r))) throw DomainError("psi^n is not the identity");
}

TameFrame make_frame(const FieldPtr& k, std::uint64_t n, std::uint64_t q_exp) {
  if (n == 0) throw DomainError("n must be positive");
  q_exp %= n;
  if (std::gcd(q_exp, n) != 1) throw DomainError("frame needs gcd(q_exp, n) = 1; reduce first");
  if ((k->q() - 1) % n != 0) throw DomainError("the frame needs n | q - 1");
  TameFrame f{k, n, q_exp, k->primitive_root_of_unity(n), inverse_mod(q_exp, n), 1};
  f.xi = k->pow(f.zeta, static_cast<std::int64_t>(f.beta));
  return f;
}

CoprimeReduction reduce_to_coprime(const SemidirectGroup& g, std::uint64_t q_exp) {
  validate(g);
  q_exp %= g.n;
  const std::uint64_t d = std::gcd(g.n, q_exp);
  return {d, g.n / d, q_exp / d, SemidirectGroup{g.p, g.r, g.n / d, g.psi.pow(d)}};
}

ElemAbCover sigma_apply(const TameFrame& f, const ElemAbCover& b, std::uint64_t times) {
  const Elem x = f.field->pow(f.xi, static_cast<std::int64_t>(times % f.n));
  ElemAbCover out;
  out.reserve(b.size());
  for (const auto& c : b) out.push_back(scale_substitute(c, x));
  return out;
}

ElemAbCover phi_apply(const SemidirectGroup& g, const TameFrame& f, const ElemAbCover& b) {
  if (static_cast<int>(b.size()) != g.r) throw DomainError("cover rank does not match the group");
  if (b.empty()) return {};
  return g.psi.apply(sigma_apply(f, b));
}

bool zphi_identity_holds(const SemidirectGroup& g, const TameFrame& f, const ZPhiObject& obj) {
  if (obj.u.size() != obj.b.size()) return false;
  const ElemAbCover target = phi_apply(g, f, obj.b);
  for (std::size_t i = 0; i < obj.u.size(); ++i)
    if (!congruent(artin_schreier_op(obj.u[i]), target[i] - obj.b[i])) return false;
  return true;
}

std::optional<std::vector<LaurentSeries>> zphi_solve(const SemidirectGroup& g, const TameFrame& f,
                                                     const ElemAbCover& b) {
  return elemab_iso_witness(b, phi_apply(g, f, b));
}

std::vector<std::uint32_t> vn_check(const SemidirectGroup& g, const TameFrame& f,
                                    const ZPhiObject& obj) {
  if (!zphi_identity_holds(g, f, obj)) throw DomainError("object violates the witness identity");
  std::vector<std::uint32_t> out(static_cast<std::size_t>(g.r), 0);
  if (g.r == 0) return out;
  std::vector<LaurentSeries> acc;
  for (std::uint64_t j = 0; j < g.n; ++j) {
    const auto term = g.psi.pow(j).apply(sigma_apply(f, obj.u, j));
    if (acc.empty()) {
      acc = term;
    } else {
      for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = acc[i] + term[i];
    }
  }
  for (std::size_t i = 0; i < acc.size(); ++i) {
    bool constant = true;
    acc[i].for_each_term([&](std::int64_t e, Elem) {
      if (e != 0) constant = false;
    });
    const Elem c = acc[i].prec() > 0 ? acc[i].coeff(0) : 0;
    if (!constant || c >= g.p) throw DomainError("v^n composite is not a constant in F_p");
    out[i] = c;
  }
  return out;
}

std::uint64_t fp_vector_code(std::uint32_t p, const std::vector<std::uint32_t>& v) {
  std::uint64_t code = 0;
  for (std::size_t j = v.size(); j-- > 0;) code = code * p + v[j];
  return code;
}

std::vector<std::uint32_t> fp_vector_decode(std::uint32_t p, int r, std::uint64_t code) {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(r));
  for (int j = 0; j < r; ++j) {
    v[static_cast<std::size_t>(j)] = static_cast<std::uint32_t>(code % p);
    code /= p;
  }
  return v;
}

std::vector<GTorsorClass> enumerate_g_torsors(const SemidirectGroup& g, const TameFrame& f,
                                              std::int64_t break_bound, std::int64_t prec,
                                              std::uint64_t max_classes) {
  validate(g);
  const FieldPtr& kp = f.field;
  const FiniteField& k = *kp;
  if (k.p() != g.p) throw DomainError("group and frame live in different characteristics");
  if (f.n != g.n) throw DomainError("frame and group disagree on n");
  if (std::gcd(f.q_exp, f.n) != 1) throw DomainError("enumeration needs gcd(q_exp, n) = 1");
  if (break_bound < 0) throw DomainError("break bound must be >= 0");
  if (prec <= 0) prec = 2 * break_bound + 32;
  const int r = g.r;
  const RingPtr ring = CoeffRing::field(kp);

  // Slot s of a phi-fixed canonical form carries v in F_q^r with psi(xi^-s v) = v.
  const auto slots = prime_to_p_upto(k.p(), break_bound);
  const std::uint64_t fq_vectors = checked_power(k.q(), r, "F_q^r");
  std::vector<std::vector<std::vector<Elem>>> fixed(slots.size());
  for (std::size_t i = 0; i < slots.size(); ++i) {
    const Elem twist = k.inv(k.pow(f.xi, slots[i]));
    for (std::uint64_t code = 0; code < fq_vectors; ++code) {
      auto v = decode_fq_vector(k, r, code);
      std::vector<Elem> tw(v.size());
      for (std::size_t j = 0; j < v.size(); ++j) tw[j] = k.mul(twist, v[j]);
      if (g.psi.apply(k, tw) == v) fixed[i].push_back(std::move(v));
    }
  }
  // Constant slot: transversal vectors c with psi c - c in P(F_q)^r.
  std::vector<std::vector<Elem>> constants;
  const std::uint64_t const_vectors = checked_power(k.p(), r, "transversal^r");
  for (std::uint64_t code = 0; code < const_vectors; ++code) {
    std::vector<Elem> c(static_cast<std::size_t>(r));
    std::uint64_t rest = code;
    for (int j = 0; j < r; ++j) {
      c[static_cast<std::size_t>(j)] = k.transversal()[rest % k.p()];
      rest /= k.p();
    }
    const auto pc = g.psi.apply(k, c);
    bool ok = true;
    for (int j = 0; j < r; ++j)
      if (k.transversal_rep(pc[static_cast<std::size_t>(j)]) != c[static_cast<std::size_t>(j)]) ok = false;
    if (ok) constants.push_back(std::move(c));
  }

  std::uint64_t candidates = constants.size();
  for (const auto& fs : fixed) {
    if (fs.size() != 0 && candidates > max_classes / fs.size()) {
      throw ScaleExceeded("more than " + std::to_string(max_classes) + " phi-fixed covers");
    }
    candidates *= fs.size();
  }

  // Linear data on F_p^r shared by every candidate.
  const std::uint64_t fp_vectors = checked_power(k.p(), r, "F_p^r");
  FpMatrix norm = FpMatrix::identity(g.p, r);
  for (std::uint64_t j = 1; j < g.n; ++j) norm = norm + g.psi.pow(j);
  const FpMatrix shift = g.psi - FpMatrix::identity(g.p, r);
  std::set<std::uint64_t> image;
  std::uint64_t kernel = 0;
  for (std::uint64_t code = 0; code < fp_vectors; ++code) {
    const auto w = shift.apply(fp_vector_decode(g.p, r, code));
    image.insert(fp_vector_code(g.p, w));
    if (std::all_of(w.begin(), w.end(), [](auto x) { return x == 0; })) ++kernel;
  }

  std::vector<std::vector<GTorsorClass>> per(candidates);
  parallel_for(candidates, [&](std::size_t idx) {
    std::uint64_t rest = idx;
    const auto& cvec = constants[rest % constants.size()];
    rest /= constants.size();
    ElemAbCanonical canon(static_cast<std::size_t>(r));
    for (int j = 0; j < r; ++j) canon[static_cast<std::size_t>(j)] = {kp, {}, cvec[static_cast<std::size_t>(j)]};
    for (std::size_t i = 0; i < slots.size(); ++i) {
      const auto& v = fixed[i][rest % fixed[i].size()];
      rest /= fixed[i].size();
      for (int j = 0; j < r; ++j)
        if (v[static_cast<std::size_t>(j)] != 0) canon[static_cast<std::size_t>(j)].support.emplace(slots[i], v[static_cast<std::size_t>(j)]);
    }
    ElemAbCover b;
    for (const auto& c : canon) b.push_back(as_series(c, prec));
    const ElemAbCover image_b = phi_apply(g, f, b);
    if (!(elemab_canonicalize(image_b) == canon)) {
      throw Error("slot-fixed candidate " + std::to_string(idx) + " is not phi-fixed");
    }
    auto u0 = elemab_iso_witness(b, image_b);
    if (!u0) throw Error("no Z_phi witness for a phi-fixed cover");
    const auto v0 = vn_check(g, f, {b, *u0});

    std::set<std::uint64_t> reps;
    for (std::uint64_t code = 0; code < fp_vectors; ++code) {
      const auto h = fp_vector_decode(g.p, r, code);
      const auto nh = norm.apply(h);
      bool solves = true;
      for (int j = 0; j < r; ++j)
        if ((nh[static_cast<std::size_t>(j)] + v0[static_cast<std::size_t>(j)]) % g.p != 0) solves = false;
      if (!solves) continue;
      std::uint64_t best = code;
      for (std::uint64_t im : image) {
        auto w = fp_vector_decode(g.p, r, im);
        for (int j = 0; j < r; ++j) w[static_cast<std::size_t>(j)] = (w[static_cast<std::size_t>(j)] + h[static_cast<std::size_t>(j)]) % g.p;
        best = std::min(best, fp_vector_code(g.p, w));
      }
      reps.insert(best);
    }
    for (std::uint64_t code : reps) {
      const auto h = fp_vector_decode(g.p, r, code);
      std::vector<LaurentSeries> u = *u0;
      for (int j = 0; j < r; ++j)
        u[static_cast<std::size_t>(j)] = u[static_cast<std::size_t>(j)] +
            LaurentSeries::constant(ring, h[static_cast<std::size_t>(j)], u[static_cast<std::size_t>(j)].prec());
      GTorsorClass cls{f, canon, {b, std::move(u)}, code, elemab_break(canon), kernel};
      per[idx].push_back(std::move(cls));
    }
  });

  std::vector<GTorsorClass> out;
  for (auto& v : per)
    for (auto& c : v) {
      if (out.size() >= max_classes) throw ScaleExceeded("too many torsor classes");
      out.push_back(std::move(c));
    }
  std::sort(out.begin(), out.end(), [](const GTorsorClass& a, const GTorsorClass& b) {
    return std::tie(a.break_, a.canon, a.shift_code) < std::tie(b.break_, b.canon, b.shift_code);
  });
  return out;
}

}  // namespace ftk
