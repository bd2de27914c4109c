#ifndef HYCART_FIELD_HPP
#define HYCART_FIELD_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "hycart/error.hpp"

namespace hycart {

class FieldElement;

/// Exact arithmetic context for F_{p^m}, p an odd prime <= 13.
///
/// Elements are coefficient vectors over F_p relative to a fixed monic
/// irreducible modulus of degree m.  The modulus is pinned deterministically:
/// among all monic irreducible polynomials z^m + c_{m-1} z^{m-1} + ... + c_0
/// over F_p it is the one whose coefficient word c_0 + c_1 p + ... is
/// smallest.  Every context for the same (p, m) is therefore identical, and
/// serialized data is portable between runs.
///
/// Contexts are interned: get() returns a reference that stays valid for the
/// lifetime of the process, so plain pointers to contexts are safe to keep.
class FieldContext {
public:
  /// Interned context lookup; computes the modulus on first use.
  /// Raises bad_characteristic unless p is an odd prime <= 13, and
  /// invalid_input unless 1 <= m <= 64.
  static const FieldContext& get(int p, int m);

  int p() const { return p_; }
  int m() const { return m_; }
  /// Monic modulus, degree-ascending coefficients, length m + 1.
  const std::vector<std::uint8_t>& modulus() const { return mod_; }

  /// p^m if it fits in a uint64, otherwise 0.
  std::uint64_t order_u64() const { return order_; }

  FieldElement zero() const;
  FieldElement one() const;
  FieldElement from_int(long long v) const;
  FieldElement from_coeffs(const std::vector<int>& c) const;
  /// Inverse of index_of: digits of idx in base p become the coefficients.
  FieldElement element_from_index(std::uint64_t idx) const;
  std::uint64_t index_of(const FieldElement& a) const;

  /// Embeds a (from a context with the same p and m | this->m) into this
  /// field, via the canonical root of the small modulus.  Deterministic for
  /// a fixed build: the root is located by exhaustive scan for small fields
  /// and by a fixed-seed equal degree split otherwise.
  FieldElement embed(const FieldElement& a) const;

  // Allocation-free kernels on packed coefficient storage (m bytes per
  // element).  These back the dense linear algebra layer; FieldElement
  // arithmetic is built on them too.  Output spans must not alias inputs
  // for el_mul.
  std::size_t esize() const { return static_cast<std::size_t>(m_); }
  void el_zero(std::uint8_t* a) const;
  bool el_is_zero(const std::uint8_t* a) const;
  void el_add(std::uint8_t* acc, const std::uint8_t* a) const;
  void el_sub(std::uint8_t* acc, const std::uint8_t* a) const;
  void el_neg(std::uint8_t* a) const;
  void el_mul(std::uint8_t* out, const std::uint8_t* a,
              const std::uint8_t* b) const;
  /// acc += a * b
  void el_addmul(std::uint8_t* acc, const std::uint8_t* a,
                 const std::uint8_t* b) const;
  /// acc -= a * b
  void el_submul(std::uint8_t* acc, const std::uint8_t* a,
                 const std::uint8_t* b) const;
  void el_inv(std::uint8_t* out, const std::uint8_t* a) const;

  // Lookup tables backing the m = 1 fast path of the linear algebra layer:
  // red256()[v] = v mod p for v < 256, multab()[16*a + b] = a*b mod p.
  const std::uint8_t* red256() const { return red_.data(); }
  const std::uint8_t* multab() const { return multab_.data(); }

private:
  FieldContext(int p, int m);
  FieldContext(const FieldContext&) = delete;

  int p_;
  int m_;
  std::vector<std::uint8_t> mod_;
  std::uint64_t order_; // p^m or 0 on overflow
  std::array<std::uint8_t, 256> red_;
  std::array<std::uint8_t, 256> multab_;

  friend class FieldElement;
};

/// Value-semantic element of an interned FieldContext.
class FieldElement {
public:
  FieldElement() : ctx_(nullptr) {}
  FieldElement(const FieldContext& ctx, std::vector<std::uint8_t> c)
      : ctx_(&ctx), c_(std::move(c)) {}

  const FieldContext& ctx() const;
  bool valid() const { return ctx_ != nullptr; }
  const std::vector<std::uint8_t>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_one() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement& operator+=(const FieldElement& o);
  FieldElement& operator-=(const FieldElement& o);
  FieldElement& operator*=(const FieldElement& o);
  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  FieldElement inv() const;
  /// a^e for a plain machine-word exponent (used with small e only).
  FieldElement pow(std::uint64_t e) const;
  /// a^(p^e); e may be negative, Frobenius has order m.
  FieldElement frobenius(long long e) const;
  FieldElement pth_power() const { return frobenius(1); }
  /// Unique p-th root (Frobenius is bijective).
  FieldElement pth_root() const { return frobenius(-1); }

  /// "2" for constants, "t^2+2t+1" style otherwise.
  std::string str() const;

private:
  const FieldContext* ctx_;
  std::vector<std::uint8_t> c_;
};

namespace densepoly {

/// Dense monic-friendly polynomial helpers over one FieldContext.
/// Coefficients degree-ascending; normalized form has no trailing zeros.
using Poly = std::vector<FieldElement>;

Poly normalize(Poly f);
int degree(const Poly& f); // -1 for zero
Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const FieldElement& c);
/// Remainder of a by monic-normalized b (b != 0).
Poly mod(const Poly& a, const Poly& b);
Poly gcd_monic(Poly a, Poly b);
FieldElement eval(const Poly& f, const FieldElement& x);
Poly derivative(const Poly& f);

} // namespace densepoly

} // namespace hycart

#endif
