#pragma once

#include <memory>
#include <utility>
#include <vector>

#include "hycart/field.hpp"
#include "hycart/laurent.hpp"

namespace hycart {

// Hyperelliptic model  y^2 = f(x) = a_1 x + ... + a_{2g+1} x^{2g+1}  over
// F_{p^m}, p odd, with a_1 != 0, a_{2g+1} != 0 and f squarefree.  The curve
// is covered by the affine chart U0 (coordinates x, y) and the chart U1 at
// infinity with v = 1/x, w = y/x^{g+1}, where w^2 = fr(v) and fr is the
// coefficient-reversed polynomial.  The distinguished points are
// O = (0, 0) and the single point at infinity.
class Curve {
 public:
  // coeffs lists a_1 .. a_{2g+1}.
  static Curve make(const FieldContext& ctx, int genus,
                    std::vector<FieldElement> coeffs);

  const FieldContext& ctx() const { return *d_->ctx; }
  int genus() const { return d_->g; }
  int degree() const { return 2 * d_->g + 1; }
  const FieldElement& a(int i) const;
  const std::vector<FieldElement>& coeffs() const { return d_->a; }
  const LaurentPoly& f() const { return d_->f; }
  // f^((p-1)/2); multiplying by it takes B y to the y-part of (B y)^p.
  const LaurentPoly& f_half() const { return d_->f_half; }

  // The curve w^2 = fr(v) seen from the chart at infinity:
  // fr_i = a_{2g+2-i}.
  Curve reversed() const;

  bool compatible(const Curve& o) const;

 private:
  struct Data {
    const FieldContext* ctx;
    int g;
    std::vector<FieldElement> a; // index i holds a_i, index 0 unused
    LaurentPoly f;
    LaurentPoly f_half;
    Data(const FieldContext& c, LaurentPoly fl, LaurentPoly fh)
        : ctx(&c), g(0), f(std::move(fl)), f_half(std::move(fh)) {}
  };
  std::shared_ptr<const Data> d_;
  explicit Curve(std::shared_ptr<const Data> d) : d_(std::move(d)) {}
};

// A function A(x) + B(x) y on the curve, with A, B Laurent polynomials in x.
// Reduction uses y^2 = f(x).
struct ChartFunction {
  Curve curve;
  LaurentPoly A;
  LaurentPoly B;

  ChartFunction(const Curve& c, LaurentPoly a, LaurentPoly b);
  static ChartFunction zero(const Curve& c);
  static ChartFunction one(const Curve& c);
  static ChartFunction x_power(const Curve& c, int e);   // x^e
  static ChartFunction y_x_power(const Curve& c, int e); // y x^e

  bool is_zero() const { return A.is_zero() && B.is_zero(); }
  bool operator==(const ChartFunction& o) const;
  bool operator!=(const ChartFunction& o) const { return !(*this == o); }

  ChartFunction operator+(const ChartFunction& o) const;
  ChartFunction operator-(const ChartFunction& o) const;
  ChartFunction operator-() const;
  ChartFunction operator*(const ChartFunction& o) const;
  ChartFunction scaled(const FieldElement& c) const;
  ChartFunction times_laurent(const LaurentPoly& u) const;
  ChartFunction times_y() const;
  // p-th power: A^(p) + B^(p) f^((p-1)/2) y with exponents multiplied by p.
  ChartFunction power_p() const;

  bool regular_on_u0() const;
  bool regular_on_u1() const;
  // Exponent bounds for membership in O(U1) after the substitution
  // x = 1/v, y = w v^{-(g+1)}: supp(A) <= maxA and supp(B) <= maxB.
  bool u1_bounded(int maxA, int maxB) const;
  // c * omega0 with omega0 = dx/y is regular on U1 iff supp(A) <= g-1
  // and supp(B) <= -2 (omega0 = -v^{g-1} dv/w on that chart).
  bool differential_regular_on_u1() const;

  std::string str() const;
};

// Exponent bounds (maxA, maxB) describing U1-regularity of functions,
// respectively of c |-> c * omega0 as a differential.
std::pair<int, int> u1_function_bounds(int genus);
std::pair<int, int> u1_differential_bounds(int genus);

// Local data of the differential c * omega0 at O = (0, 0), computed from
// the expansion in the uniformizer t = y.  Poles of c must lie over
// x in {0, infinity}.
FieldElement residue_at_origin(const ChartFunction& c);
int order_at_origin(const ChartFunction& c);

// Same data at the point at infinity, via the reversed curve.
FieldElement residue_at_infinity(const ChartFunction& c);
int order_at_infinity(const ChartFunction& c);

} // namespace hycart
