#include "hycart/field.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <random>
#include <sstream>

namespace hycart {
namespace {

// F_p scalar helpers, p <= 13 so everything fits comfortably in uint32.

inline std::uint32_t addm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t mulm(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return (a * b) % p;
}
std::uint32_t invm(std::uint32_t a, std::uint32_t p) {
  for (std::uint32_t x = 1; x < p; ++x)
    if (mulm(a, x, p) == 1) return x;
  raise(errc::internal_check, "no inverse mod p");
}

bool is_prime_small(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, coefficients degree-ascending.  Only used for
// modulus discovery; everything element-level runs on the packed kernels.

using FpPoly = std::vector<std::uint8_t>;

void fp_trim(FpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
int fp_deg(const FpPoly& f) { return static_cast<int>(f.size()) - 1; }

FpPoly fp_mul(const FpPoly& a, const FpPoly& b, std::uint32_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = static_cast<std::uint8_t>(addm(r[i + j], mulm(a[i], b[j], p), p));
  }
  fp_trim(r);
  return r;
}

// Remainder modulo f; f need not be monic.
FpPoly fp_mod(FpPoly a, const FpPoly& f, std::uint32_t p) {
  fp_trim(a);
  const int df = fp_deg(f);
  const std::uint32_t linv = invm(f.back(), p);
  while (fp_deg(a) >= df) {
    const int k = fp_deg(a) - df;
    const std::uint32_t c = mulm(a.back(), linv, p);
    for (int j = 0; j <= df; ++j) {
      std::uint32_t t = mulm(c, f[j], p);
      a[k + j] = static_cast<std::uint8_t>(addm(a[k + j], t ? p - t : 0, p));
    }
    fp_trim(a);
  }
  return a;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint32_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    FpPoly r = fp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

FpPoly fp_powmod(FpPoly base, std::uint64_t e, const FpPoly& f, std::uint32_t p) {
  FpPoly r{1};
  base = fp_mod(std::move(base), f, p);
  while (e) {
    if (e & 1) r = fp_mod(fp_mul(r, base, p), f, p);
    base = fp_mod(fp_mul(base, base, p), f, p);
    e >>= 1;
  }
  return r;
}

// Rabin's test: f of degree m over F_p is irreducible iff x^(p^m) = x mod f
// and gcd(x^(p^(m/l)) - x, f) = 1 for every prime l dividing m.
bool fp_irreducible(const FpPoly& f, std::uint32_t p) {
  const int m = fp_deg(f);
  if (m <= 0) return false;
  if (m == 1) return true;
  std::vector<FpPoly> frob(m + 1); // frob[i] = x^(p^i) mod f
  frob[0] = fp_mod(FpPoly{0, 1}, f, p);
  for (int i = 1; i <= m; ++i)
    frob[i] = fp_powmod(frob[i - 1], p, f, p);
  FpPoly xmod = frob[0];
  if (frob[m] != xmod) return false;
  for (int l = 2; l <= m; ++l) {
    if (m % l != 0 || !is_prime_small(l)) continue;
    FpPoly d = frob[m / l];
    if (d.size() < 2) d.resize(2, 0);
    d[1] = static_cast<std::uint8_t>((d[1] + p - 1) % p); // d -= x
    fp_trim(d);
    FpPoly g = fp_gcd(f, d, p);
    if (fp_deg(g) != 0) return false;
  }
  return true;
}

std::uint64_t checked_pow(std::uint64_t b, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (r > UINT64_MAX / b) return 0;
    r *= b;
  }
  return r;
}

// Little-endian multiword unsigned integer, only what exponentiation needs.
struct BigU {
  std::vector<std::uint64_t> w;

  static BigU pow_small(std::uint64_t b, int e) {
    BigU r;
    r.w = {1};
    for (int i = 0; i < e; ++i) r.mul_small(b);
    return r;
  }
  void mul_small(std::uint64_t c) {
    unsigned __int128 carry = 0;
    for (auto& x : w) {
      unsigned __int128 t = static_cast<unsigned __int128>(x) * c + carry;
      x = static_cast<std::uint64_t>(t);
      carry = t >> 64;
    }
    if (carry) w.push_back(static_cast<std::uint64_t>(carry));
  }
  void sub1() {
    for (auto& x : w) {
      if (x--) break;
    }
    while (!w.empty() && w.back() == 0) w.pop_back();
  }
  void shr1() {
    std::uint64_t carry = 0;
    for (std::size_t i = w.size(); i-- > 0;) {
      std::uint64_t nc = w[i] & 1;
      w[i] = (w[i] >> 1) | (carry << 63);
      carry = nc;
    }
    while (!w.empty() && w.back() == 0) w.pop_back();
  }
  int bits() const {
    if (w.empty()) return 0;
    int b = 64 * static_cast<int>(w.size() - 1);
    std::uint64_t top = w.back();
    while (top) {
      ++b;
      top >>= 1;
    }
    return b;
  }
  bool bit(int i) const {
    std::size_t k = static_cast<std::size_t>(i) / 64;
    if (k >= w.size()) return false;
    return (w[k] >> (i % 64)) & 1;
  }
};

} // namespace

const char* errc_name(errc c) {
  switch (c) {
    case errc::invalid_input: return "invalid_input";
    case errc::bad_characteristic: return "bad_characteristic";
    case errc::not_smooth: return "not_smooth";
    case errc::precision_exhausted: return "precision_exhausted";
    case errc::window_not_stabilized: return "window_not_stabilized";
    case errc::fixed_space_not_saturated: return "fixed_space_not_saturated";
    case errc::gauge_missing: return "gauge_missing";
    case errc::gauge_unsolvable: return "gauge_unsolvable";
    case errc::gluing_violated: return "gluing_violated";
    case errc::class_not_fixed: return "class_not_fixed";
    case errc::no_fixed_class: return "no_fixed_class";
    case errc::internal_check: return "internal_check";
  }
  return "unknown";
}

FieldContext::FieldContext(int p, int m) : p_(p), m_(m) {
  // Deterministic modulus: scan coefficient words in increasing order and
  // take the first irreducible candidate.
  const std::uint32_t up = static_cast<std::uint32_t>(p);
  for (std::uint64_t k = 0;; ++k) {
    FpPoly f(static_cast<std::size_t>(m) + 1, 0);
    std::uint64_t t = k;
    for (int i = 0; i < m; ++i) {
      f[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(t % up);
      t /= up;
    }
    if (t != 0) raise(errc::internal_check, "modulus search exhausted");
    f[static_cast<std::size_t>(m)] = 1;
    if (fp_irreducible(f, up)) {
      mod_ = std::move(f);
      break;
    }
  }
  order_ = checked_pow(up, m);
  for (int v = 0; v < 256; ++v)
    red_[static_cast<std::size_t>(v)] =
        static_cast<std::uint8_t>(static_cast<std::uint32_t>(v) % up);
  multab_.fill(0);
  for (std::uint32_t a = 0; a < up; ++a)
    for (std::uint32_t b = 0; b < up; ++b)
      multab_[16 * a + b] = static_cast<std::uint8_t>(mulm(a, b, up));
}

const FieldContext& FieldContext::get(int p, int m) {
  check(p % 2 == 1 && is_prime_small(p) && p <= 13, errc::bad_characteristic,
        "p must be an odd prime <= 13, got " + std::to_string(p));
  check(m >= 1 && m <= 64, errc::invalid_input,
        "extension degree m must be in [1, 64], got " + std::to_string(m));
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::unique_ptr<FieldContext>> table;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(p, m);
  auto it = table.find(key);
  if (it == table.end())
    it = table.emplace(key, std::unique_ptr<FieldContext>(new FieldContext(p, m))).first;
  return *it->second;
}

// ---- packed kernels --------------------------------------------------------

void FieldContext::el_zero(std::uint8_t* a) const {
  std::fill(a, a + m_, std::uint8_t{0});
}
bool FieldContext::el_is_zero(const std::uint8_t* a) const {
  for (int i = 0; i < m_; ++i)
    if (a[i]) return false;
  return true;
}
void FieldContext::el_add(std::uint8_t* acc, const std::uint8_t* a) const {
  const std::uint32_t p = static_cast<std::uint32_t>(p_);
  for (int i = 0; i < m_; ++i)
    acc[i] = static_cast<std::uint8_t>(addm(acc[i], a[i], p));
}
void FieldContext::el_sub(std::uint8_t* acc, const std::uint8_t* a) const {
  const std::uint32_t p = static_cast<std::uint32_t>(p_);
  for (int i = 0; i < m_; ++i)
    acc[i] = static_cast<std::uint8_t>(addm(acc[i], a[i] ? p - a[i] : 0, p));
}
void FieldContext::el_neg(std::uint8_t* a) const {
  const std::uint32_t p = static_cast<std::uint32_t>(p_);
  for (int i = 0; i < m_; ++i)
    a[i] = static_cast<std::uint8_t>(a[i] ? p - a[i] : 0);
}

void FieldContext::el_mul(std::uint8_t* out, const std::uint8_t* a,
                          const std::uint8_t* b) const {
  const std::uint32_t p = static_cast<std::uint32_t>(p_);
  if (m_ == 1) {
    out[0] = static_cast<std::uint8_t>(mulm(a[0], b[0], p));
    return;
  }
  std::uint32_t buf[127] = {0};
  for (int i = 0; i < m_; ++i) {
    if (!a[i]) continue;
    for (int j = 0; j < m_; ++j) buf[i + j] += static_cast<std::uint32_t>(a[i]) * b[j];
  }
  // reduce by the monic modulus, top down
  for (int i = 2 * m_ - 2; i >= m_; --i) {
    std::uint32_t c = buf[i] % p;
    if (!c) continue;
    const std::uint32_t cc = p - c; // add cc*mod == subtract c*mod (mod p)
    for (int j = 0; j < m_; ++j) buf[i - m_ + j] += cc * mod_[static_cast<std::size_t>(j)];
  }
  for (int i = 0; i < m_; ++i) out[i] = static_cast<std::uint8_t>(buf[i] % p);
}

void FieldContext::el_addmul(std::uint8_t* acc, const std::uint8_t* a,
                             const std::uint8_t* b) const {
  std::uint8_t tmp[64];
  el_mul(tmp, a, b);
  el_add(acc, tmp);
}
void FieldContext::el_submul(std::uint8_t* acc, const std::uint8_t* a,
                             const std::uint8_t* b) const {
  std::uint8_t tmp[64];
  el_mul(tmp, a, b);
  el_sub(acc, tmp);
}

void FieldContext::el_inv(std::uint8_t* out, const std::uint8_t* a) const {
  const std::uint32_t p = static_cast<std::uint32_t>(p_);
  check(!el_is_zero(a), errc::invalid_input, "inverse of zero field element");
  if (m_ == 1) {
    out[0] = static_cast<std::uint8_t>(invm(a[0], p));
    return;
  }
  // extended Euclid over F_p[z] against the modulus
  FpPoly r0(mod_.begin(), mod_.end());
  FpPoly r1(a, a + m_);
  fp_trim(r1);
  FpPoly s0{}, s1{1}; // s tracks the coefficient of `a`
  while (fp_deg(r1) > 0) {
    // divide r0 by r1
    const std::uint32_t linv = invm(r1.back(), p);
    FpPoly q(static_cast<std::size_t>(fp_deg(r0) - fp_deg(r1)) + 1, 0);
    FpPoly rem = r0;
    while (fp_deg(rem) >= fp_deg(r1)) {
      int k = fp_deg(rem) - fp_deg(r1);
      std::uint32_t c = mulm(rem.back(), linv, p);
      q[static_cast<std::size_t>(k)] =
          static_cast<std::uint8_t>(addm(q[static_cast<std::size_t>(k)], c, p));
      for (int j = 0; j <= fp_deg(r1); ++j) {
        std::uint32_t t = mulm(c, r1[static_cast<std::size_t>(j)], p);
        rem[static_cast<std::size_t>(k + j)] = static_cast<std::uint8_t>(
            addm(rem[static_cast<std::size_t>(k + j)], t ? p - t : 0, p));
      }
      fp_trim(rem);
    }
    fp_trim(q);
    // (r0, r1) <- (r1, rem); (s0, s1) <- (s1, s0 - q*s1)
    FpPoly qs = fp_mul(q, s1, p);
    FpPoly s2 = s0;
    if (s2.size() < qs.size()) s2.resize(qs.size(), 0);
    for (std::size_t i = 0; i < qs.size(); ++i)
      s2[i] = static_cast<std::uint8_t>(addm(s2[i], qs[i] ? p - qs[i] : 0, p));
    fp_trim(s2);
    r0 = std::move(r1);
    r1 = std::move(rem);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  check(fp_deg(r1) == 0, errc::internal_check, "modulus not coprime to element");
  const std::uint32_t scale = invm(r1[0], p);
  std::fill(out, out + m_, std::uint8_t{0});
  for (std::size_t i = 0; i < s1.size(); ++i)
    out[i] = static_cast<std::uint8_t>(mulm(s1[i], scale, p));
}

// ---- FieldContext element factories ----------------------------------------

FieldElement FieldContext::zero() const {
  return FieldElement(*this, std::vector<std::uint8_t>(esize(), 0));
}
FieldElement FieldContext::one() const { return from_int(1); }

FieldElement FieldContext::from_int(long long v) const {
  long long r = v % p_;
  if (r < 0) r += p_;
  std::vector<std::uint8_t> c(esize(), 0);
  c[0] = static_cast<std::uint8_t>(r);
  return FieldElement(*this, std::move(c));
}

FieldElement FieldContext::from_coeffs(const std::vector<int>& cs) const {
  check(cs.size() <= esize(), errc::invalid_input,
        "coefficient vector longer than extension degree");
  std::vector<std::uint8_t> c(esize(), 0);
  for (std::size_t i = 0; i < cs.size(); ++i) {
    int r = cs[i] % p_;
    if (r < 0) r += p_;
    c[i] = static_cast<std::uint8_t>(r);
  }
  return FieldElement(*this, std::move(c));
}

FieldElement FieldContext::element_from_index(std::uint64_t idx) const {
  check(order_ != 0 && idx < order_, errc::invalid_input,
        "element index out of range");
  std::vector<std::uint8_t> c(esize(), 0);
  for (int i = 0; i < m_; ++i) {
    c[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(idx % static_cast<std::uint64_t>(p_));
    idx /= static_cast<std::uint64_t>(p_);
  }
  return FieldElement(*this, std::move(c));
}

std::uint64_t FieldContext::index_of(const FieldElement& a) const {
  check(order_ != 0, errc::invalid_input, "field too large to index");
  std::uint64_t idx = 0;
  const auto& c = a.coeffs();
  for (int i = m_; i-- > 0;)
    idx = idx * static_cast<std::uint64_t>(p_) + c[static_cast<std::size_t>(i)];
  return idx;
}

// ---- FieldElement ----------------------------------------------------------

const FieldContext& FieldElement::ctx() const {
  check(ctx_ != nullptr, errc::internal_check, "use of default FieldElement");
  return *ctx_;
}

bool FieldElement::is_zero() const { return ctx().el_is_zero(c_.data()); }
bool FieldElement::is_one() const {
  if (c_[0] != 1) return false;
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i]) return false;
  return true;
}

namespace {
inline void same_ctx(const FieldElement& a, const FieldElement& b) {
  check(&a.ctx() == &b.ctx(), errc::invalid_input,
        "field elements from different contexts");
}
} // namespace

FieldElement FieldElement::operator+(const FieldElement& o) const {
  FieldElement r = *this;
  r += o;
  return r;
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
  FieldElement r = *this;
  r -= o;
  return r;
}
FieldElement FieldElement::operator-() const {
  FieldElement r = *this;
  r.ctx().el_neg(r.c_.data());
  return r;
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
  same_ctx(*this, o);
  FieldElement r = ctx().zero();
  ctx().el_mul(r.c_.data(), c_.data(), o.c_.data());
  return r;
}
FieldElement& FieldElement::operator+=(const FieldElement& o) {
  same_ctx(*this, o);
  ctx().el_add(c_.data(), o.c_.data());
  return *this;
}
FieldElement& FieldElement::operator-=(const FieldElement& o) {
  same_ctx(*this, o);
  ctx().el_sub(c_.data(), o.c_.data());
  return *this;
}
FieldElement& FieldElement::operator*=(const FieldElement& o) {
  *this = *this * o;
  return *this;
}
bool FieldElement::operator==(const FieldElement& o) const {
  same_ctx(*this, o);
  return c_ == o.c_;
}

FieldElement FieldElement::inv() const {
  FieldElement r = ctx().zero();
  ctx().el_inv(r.c_.data(), c_.data());
  return r;
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  FieldElement base = *this;
  FieldElement r = ctx().one();
  while (e) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

FieldElement FieldElement::frobenius(long long e) const {
  const int m = ctx().m();
  long long r = ((e % m) + m) % m;
  FieldElement a = *this;
  for (long long i = 0; i < r; ++i)
    a = a.pow(static_cast<std::uint64_t>(ctx().p()));
  return a;
}

std::string FieldElement::str() const {
  const int m = ctx().m();
  if (m == 1) return std::to_string(static_cast<int>(c_[0]));
  std::ostringstream os;
  bool first = true;
  for (int i = m; i-- > 0;) {
    if (!c_[static_cast<std::size_t>(i)]) continue;
    if (!first) os << "+";
    first = false;
    const int v = c_[static_cast<std::size_t>(i)];
    if (i == 0 || v != 1) os << v;
    if (i >= 1) {
      os << "t";
      if (i > 1) os << "^" << i;
    }
  }
  if (first) os << "0";
  return os.str();
}

// ---- dense polynomials over a field ----------------------------------------

namespace densepoly {

Poly normalize(Poly f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}
int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

Poly add(const Poly& a, const Poly& b) {
  Poly r = a.size() >= b.size() ? a : b;
  const Poly& s = a.size() >= b.size() ? b : a;
  for (std::size_t i = 0; i < s.size(); ++i) r[i] += s[i];
  return normalize(std::move(r));
}
Poly sub(const Poly& a, const Poly& b) {
  Poly r = a;
  if (r.size() < b.size()) {
    check(!b.empty(), errc::internal_check, "sub on empty");
    r.resize(b.size(), b[0].ctx().zero());
  }
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return normalize(std::move(r));
}
Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, a[0].ctx().zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return normalize(std::move(r));
}
Poly scale(const Poly& a, const FieldElement& c) {
  Poly r = a;
  for (auto& x : r) x *= c;
  return normalize(std::move(r));
}

Poly mod(const Poly& a0, const Poly& b0) {
  Poly b = normalize(b0);
  check(!b.empty(), errc::invalid_input, "polynomial division by zero");
  Poly a = normalize(a0);
  const FieldElement linv = b.back().inv();
  while (degree(a) >= degree(b)) {
    const int k = degree(a) - degree(b);
    const FieldElement c = a.back() * linv;
    for (int j = 0; j <= degree(b); ++j)
      a[static_cast<std::size_t>(k + j)] -= c * b[static_cast<std::size_t>(j)];
    a = normalize(std::move(a));
  }
  return a;
}

Poly gcd_monic(Poly a, Poly b) {
  a = normalize(std::move(a));
  b = normalize(std::move(b));
  while (!b.empty()) {
    Poly r = mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) a = scale(a, a.back().inv());
  return a;
}

FieldElement eval(const Poly& f, const FieldElement& x) {
  FieldElement r = x.ctx().zero();
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

Poly derivative(const Poly& f) {
  if (f.size() <= 1) return {};
  Poly r(f.size() - 1, f[0].ctx().zero());
  for (std::size_t i = 1; i < f.size(); ++i)
    r[i - 1] = f[i] * f[i].ctx().from_int(static_cast<long long>(i));
  return normalize(std::move(r));
}

} // namespace densepoly

// ---- embeddings ------------------------------------------------------------

namespace {

densepoly::Poly lift_fp_poly(const FpPoly& f, const FieldContext& big) {
  densepoly::Poly r;
  r.reserve(f.size());
  for (auto c : f) r.push_back(big.from_int(c));
  return r;
}

densepoly::Poly powmod_big(densepoly::Poly base, const BigU& e,
                           const densepoly::Poly& f) {
  using namespace densepoly;
  check(!f.empty(), errc::internal_check, "powmod modulus zero");
  Poly r{f[0].ctx().one()};
  base = mod(base, f);
  for (int i = e.bits(); i-- > 0;) {
    r = mod(mul(r, r), f);
    if (e.bit(i)) r = mod(mul(r, base), f);
  }
  return r;
}

// Canonical root of the degree-m subfield modulus inside `big`.  Small
// fields are scanned in index order; larger ones use an equal degree split
// driven by a fixed-seed generator, which makes the result reproducible.
FieldElement find_subfield_root(const FpPoly& small_mod, const FieldContext& big) {
  using namespace densepoly;
  const Poly f0 = lift_fp_poly(small_mod, big);
  if (big.order_u64() != 0 && big.order_u64() <= (1u << 20)) {
    for (std::uint64_t i = 0; i < big.order_u64(); ++i) {
      FieldElement x = big.element_from_index(i);
      if (eval(f0, x).is_zero()) return x;
    }
    raise(errc::internal_check, "subfield modulus has no root");
  }
  BigU e = BigU::pow_small(static_cast<std::uint64_t>(big.p()), big.m());
  e.sub1();
  e.shr1(); // (q - 1) / 2
  std::mt19937_64 rng(0x48594341u);
  Poly f = scale(f0, f0.back().inv());
  int guard = 0;
  while (degree(f) > 1) {
    check(++guard < 512, errc::internal_check, "equal degree split stalled");
    Poly r(static_cast<std::size_t>(degree(f)), big.zero());
    for (auto& c : r) {
      std::vector<int> digits(static_cast<std::size_t>(big.m()));
      for (auto& d : digits) d = static_cast<int>(rng() % static_cast<std::uint64_t>(big.p()));
      c = big.from_coeffs(digits);
    }
    r = normalize(std::move(r));
    if (r.empty()) continue;
    Poly h = powmod_big(r, e, f);
    if (h.empty())
      h = Poly{-big.one()};
    else
      h[0] -= big.one();
    Poly g = gcd_monic(h, f);
    if (degree(g) > 0 && degree(g) < degree(f)) {
      // keep the smaller factor; recompute it as f/g when g is the big half
      if (2 * degree(g) <= degree(f)) {
        f = g;
      } else {
        // divide f by g exactly
        Poly q;
        Poly rem = f;
        const FieldElement linv = g.back().inv();
        q.assign(static_cast<std::size_t>(degree(f) - degree(g)) + 1, big.zero());
        while (degree(rem) >= degree(g)) {
          int k = degree(rem) - degree(g);
          FieldElement c = rem.back() * linv;
          q[static_cast<std::size_t>(k)] += c;
          for (int j = 0; j <= degree(g); ++j)
            rem[static_cast<std::size_t>(k + j)] -= c * g[static_cast<std::size_t>(j)];
          rem = normalize(std::move(rem));
        }
        check(rem.empty(), errc::internal_check, "inexact factor division");
        f = normalize(std::move(q));
        f = scale(f, f.back().inv());
      }
    }
  }
  check(degree(f) == 1, errc::internal_check, "equal degree split failed");
  FieldElement root = -(f[0] * f[1].inv());
  check(eval(f0, root).is_zero(), errc::internal_check, "root certificate failed");
  return root;
}

} // namespace

FieldElement FieldContext::embed(const FieldElement& a) const {
  const FieldContext& small = a.ctx();
  if (&small == this) return a;
  check(small.p() == p_, errc::invalid_input, "embedding across characteristics");
  check(m_ % small.m() == 0, errc::invalid_input,
        "no embedding: source degree does not divide target degree");
  if (small.m() == 1) {
    std::vector<std::uint8_t> c(esize(), 0);
    c[0] = a.coeffs()[0];
    return FieldElement(*this, std::move(c));
  }
  static std::mutex mu;
  static std::map<std::tuple<int, int, int>, FieldElement> roots;
  FieldElement rho;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_tuple(p_, small.m(), m_);
    auto it = roots.find(key);
    if (it == roots.end())
      it = roots.emplace(key, find_subfield_root(small.modulus(), *this)).first;
    rho = it->second;
  }
  FieldElement r = zero();
  const auto& c = a.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) r = r * rho + from_int(c[i]);
  return r;
}

} // namespace hycart
