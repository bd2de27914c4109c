#ifndef HYCART_SERIES_HPP
#define HYCART_SERIES_HPP

#include "hycart/laurent.hpp"

namespace hycart {

/// Truncated Laurent series: sum_{k = val}^{trunc - 1} c_k t^k + O(t^trunc).
/// Precision (trunc) propagates pessimistically through arithmetic, and
/// asking for a coefficient at or beyond the truncation point raises
/// precision_exhausted rather than silently returning garbage.
class Series {
public:
  Series(const FieldContext& ctx, int val, std::vector<FieldElement> coeffs,
         int trunc);
  /// Exactly zero as far as anyone can see (trunc at a large sentinel).
  static Series exact_zero(const FieldContext& ctx);
  static Series zero_to(const FieldContext& ctx, int trunc);
  static Series monomial(const FieldContext& ctx, int exp,
                         const FieldElement& c, int trunc);

  const FieldContext& ctx() const { return *ctx_; }
  int trunc() const { return trunc_; }
  /// Exponent of the first nonzero known coefficient; nullopt when the
  /// series is zero to its precision.
  std::optional<int> valuation() const;

  /// Coefficient of t^k; requires k < trunc().
  FieldElement coeff(int k) const;

  Series operator+(const Series& o) const;
  Series operator-(const Series& o) const;
  Series operator-() const;
  Series operator*(const Series& o) const;
  Series scaled(const FieldElement& c) const;
  Series shifted(int k) const;
  Series inverse() const;
  Series derivative() const;
  Series pow_int(unsigned n) const;

private:
  const FieldContext* ctx_;
  int val_;   // exponent of coeffs_[0]
  int trunc_; // coefficients known strictly below this exponent
  std::vector<FieldElement> coeffs_;
};

/// L(X) where X is a series and Xinv = 1/X handles negative exponents.
Series eval_laurent(const LaurentPoly& L, const Series& X, const Series& Xinv);

} // namespace hycart

#endif
