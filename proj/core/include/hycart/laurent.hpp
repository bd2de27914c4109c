#ifndef HYCART_LAURENT_HPP
#define HYCART_LAURENT_HPP

#include <map>
#include <optional>
#include <string>

#include "hycart/field.hpp"

namespace hycart {

/// Sparse Laurent polynomial sum c_j x^j, j in Z, over one FieldContext.
/// Invariant: the term map stores no zero coefficients, so equality is
/// structural and printing is canonical (exponents ascending).
class LaurentPoly {
public:
  explicit LaurentPoly(const FieldContext& ctx) : ctx_(&ctx) {}

  static LaurentPoly monomial(const FieldContext& ctx, int exp,
                              const FieldElement& c);
  /// a_lo x^lo + a_{lo+1} x^{lo+1} + ...
  static LaurentPoly from_coeffs(const FieldContext& ctx, int lo,
                                 const std::vector<FieldElement>& cs);

  const FieldContext& ctx() const { return *ctx_; }
  const std::map<int, FieldElement>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  std::size_t term_count() const { return c_.size(); }

  /// Coefficient of x^e (zero element if absent).
  FieldElement coeff(int e) const;
  void set_coeff(int e, const FieldElement& v);
  void add_term(int e, const FieldElement& v);

  std::optional<int> min_exp() const;
  std::optional<int> max_exp() const;
  /// max(|e|) over the support; 0 for the zero polynomial.
  int max_abs_exp() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  LaurentPoly scaled(const FieldElement& c) const;
  /// Multiplication by x^k.
  LaurentPoly shifted(int k) const;
  /// x -> x^-1 composed with multiplication by x^k: c_j x^j -> c_j x^(k-j).
  LaurentPoly reversed(int k) const;
  LaurentPoly pow(unsigned n) const;

  /// Coefficientwise Frobenius a -> a^(p^e); exponents unchanged.
  LaurentPoly frobenius_coeffs(long long e) const;
  /// The p-th power as a function of x: coefficients^p, exponents * p.
  LaurentPoly power_p() const;

  bool supported_ge(int lo) const; // every exponent >= lo
  bool supported_le(int hi) const; // every exponent <= hi
  LaurentPoly part_ge(int lo) const;
  LaurentPoly part_le(int hi) const;
  LaurentPoly part_in(int lo, int hi) const;

  LaurentPoly derivative() const;

  /// Dense coefficients [x^0 .. x^deg]; requires support >= 0.
  densepoly::Poly to_dense() const;

  std::string str() const;

private:
  const FieldContext* ctx_;
  std::map<int, FieldElement> c_;
};

} // namespace hycart

#endif
