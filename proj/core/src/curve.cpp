#include "hycart/curve.hpp"

#include <algorithm>

#include "hycart/error.hpp"
#include "hycart/series.hpp"

namespace hycart {

Curve Curve::make(const FieldContext& ctx, int genus,
                  std::vector<FieldElement> coeffs) {
  check(ctx.p() != 2, errc::bad_characteristic,
        "hyperelliptic model requires odd characteristic");
  check(genus == 1 || genus == 2, errc::invalid_input, "genus must be 1 or 2");
  const int n = 2 * genus + 1;
  check(static_cast<int>(coeffs.size()) == n, errc::invalid_input,
        "expected coefficients a_1 .. a_{2g+1}");
  for (const auto& cf : coeffs)
    check(&cf.ctx() == &ctx, errc::invalid_input,
          "coefficient from a different field");
  check(!coeffs.front().is_zero(), errc::not_smooth,
        "a_1 = 0: the model is singular at the origin");
  check(!coeffs.back().is_zero(), errc::not_smooth,
        "a_{2g+1} = 0: the degree must be exactly 2g+1");

  LaurentPoly f(ctx);
  for (int i = 1; i <= n; ++i) f.set_coeff(i, coeffs[static_cast<size_t>(i - 1)]);
  densepoly::Poly fd = f.to_dense();
  densepoly::Poly gd = densepoly::gcd_monic(fd, densepoly::derivative(fd));
  check(densepoly::degree(gd) == 0, errc::not_smooth, "f has a repeated root");

  LaurentPoly fh = f.pow(static_cast<unsigned>((ctx.p() - 1) / 2));
  auto data = std::make_shared<Data>(ctx, std::move(f), std::move(fh));
  data->g = genus;
  data->a.assign(1, ctx.zero());
  for (auto& cf : coeffs) data->a.push_back(std::move(cf));
  return Curve(std::shared_ptr<const Data>(std::move(data)));
}

const FieldElement& Curve::a(int i) const {
  check(i >= 1 && i <= degree(), errc::internal_check,
        "curve coefficient index out of range");
  return d_->a[static_cast<size_t>(i)];
}

Curve Curve::reversed() const {
  const int n = degree();
  std::vector<FieldElement> r;
  r.reserve(static_cast<size_t>(n));
  for (int i = 1; i <= n; ++i) r.push_back(a(n + 1 - i));
  return make(ctx(), genus(), std::move(r));
}

bool Curve::compatible(const Curve& o) const {
  if (d_ == o.d_) return true;
  return d_->ctx == o.d_->ctx && d_->g == o.d_->g && d_->a == o.d_->a;
}

ChartFunction::ChartFunction(const Curve& c, LaurentPoly a, LaurentPoly b)
    : curve(c), A(std::move(a)), B(std::move(b)) {
  check(&A.ctx() == &c.ctx() && &B.ctx() == &c.ctx(), errc::internal_check,
        "chart function parts from a different field");
}

ChartFunction ChartFunction::zero(const Curve& c) {
  return ChartFunction(c, LaurentPoly(c.ctx()), LaurentPoly(c.ctx()));
}
ChartFunction ChartFunction::one(const Curve& c) {
  return ChartFunction(c, LaurentPoly::monomial(c.ctx(), 0, c.ctx().one()),
                       LaurentPoly(c.ctx()));
}
ChartFunction ChartFunction::x_power(const Curve& c, int e) {
  return ChartFunction(c, LaurentPoly::monomial(c.ctx(), e, c.ctx().one()),
                       LaurentPoly(c.ctx()));
}
ChartFunction ChartFunction::y_x_power(const Curve& c, int e) {
  return ChartFunction(c, LaurentPoly(c.ctx()),
                       LaurentPoly::monomial(c.ctx(), e, c.ctx().one()));
}

bool ChartFunction::operator==(const ChartFunction& o) const {
  return curve.compatible(o.curve) && A == o.A && B == o.B;
}

ChartFunction ChartFunction::operator+(const ChartFunction& o) const {
  check(curve.compatible(o.curve), errc::internal_check,
        "chart functions on different curves");
  return ChartFunction(curve, A + o.A, B + o.B);
}
ChartFunction ChartFunction::operator-(const ChartFunction& o) const {
  return *this + (-o);
}
ChartFunction ChartFunction::operator-() const {
  return ChartFunction(curve, -A, -B);
}

ChartFunction ChartFunction::operator*(const ChartFunction& o) const {
  check(curve.compatible(o.curve), errc::internal_check,
        "chart functions on different curves");
  return ChartFunction(curve, A * o.A + B * o.B * curve.f(),
                       A * o.B + B * o.A);
}

ChartFunction ChartFunction::scaled(const FieldElement& c) const {
  return ChartFunction(curve, A.scaled(c), B.scaled(c));
}
ChartFunction ChartFunction::times_laurent(const LaurentPoly& u) const {
  return ChartFunction(curve, A * u, B * u);
}
ChartFunction ChartFunction::times_y() const {
  return ChartFunction(curve, B * curve.f(), A);
}

ChartFunction ChartFunction::power_p() const {
  return ChartFunction(curve, A.power_p(), B.power_p() * curve.f_half());
}

bool ChartFunction::regular_on_u0() const {
  return A.supported_ge(0) && B.supported_ge(0);
}
bool ChartFunction::u1_bounded(int maxA, int maxB) const {
  return A.supported_le(maxA) && B.supported_le(maxB);
}
bool ChartFunction::regular_on_u1() const {
  auto [ma, mb] = u1_function_bounds(curve.genus());
  return u1_bounded(ma, mb);
}
bool ChartFunction::differential_regular_on_u1() const {
  auto [ma, mb] = u1_differential_bounds(curve.genus());
  return u1_bounded(ma, mb);
}

std::string ChartFunction::str() const {
  if (is_zero()) return "0";
  std::string s;
  if (!A.is_zero()) s = A.str();
  if (!B.is_zero()) {
    if (!s.empty()) s += " + ";
    s += "(" + B.str() + ") y";
  }
  return s;
}

std::pair<int, int> u1_function_bounds(int genus) {
  return {0, -(genus + 1)};
}
std::pair<int, int> u1_differential_bounds(int genus) {
  return {genus - 1, -2};
}

namespace {

Series eval_nonneg(const LaurentPoly& L, const Series& X) {
  check(L.supported_ge(0), errc::internal_check,
        "eval_nonneg on a Laurent polynomial with poles");
  return eval_laurent(L, X, X);
}

// Expansion of c * omega0 = u(t) dt at O in the uniformizer t = y, where
// x = X(t) solves t^2 = f(X) with X = t^2 / a_1 + O(t^4).
Series origin_expansion(const ChartFunction& c, int prec) {
  const Curve& C = c.curve;
  const FieldContext& F = C.ctx();
  const Series t2 = Series::monomial(F, 2, F.one(), prec + 2);
  Series X = Series::monomial(F, 2, C.a(1).inv(), prec);
  const LaurentPoly fprime = C.f().derivative();
  for (int reached = 4; reached < prec; reached *= 2)
    X = X - (eval_nonneg(C.f(), X) - t2) * eval_nonneg(fprime, X).inverse();
  check(!(eval_nonneg(C.f(), X) - t2).valuation().has_value(),
        errc::internal_check, "local parameter solve did not converge");

  const bool needs_inverse =
      c.A.min_exp().value_or(0) < 0 || c.B.min_exp().value_or(0) < 0;
  const Series Xinv = needs_inverse ? X.inverse() : X;
  const Series Xp = X.derivative();
  const Series tinv = Series::monomial(F, -1, F.one(), 1 << 28);
  return (eval_laurent(c.A, X, Xinv) * tinv + eval_laurent(c.B, X, Xinv)) * Xp;
}

int expansion_budget(const ChartFunction& c) {
  const int mA = std::min(c.A.min_exp().value_or(0), 0);
  const int mB = std::min(c.B.min_exp().value_or(0), 0);
  const int pole = std::max(0, std::max(-2 * mA, -(2 * mB + 1)));
  return 4 * pole + 10;
}

template <class Fn>
auto with_precision_retry(int base, Fn&& fn) {
  int prec = base;
  for (int attempt = 0;; ++attempt) {
    try {
      return fn(prec);
    } catch (const error& e) {
      if (e.code() != errc::precision_exhausted || attempt >= 3) throw;
      prec *= 2;
    }
  }
}

ChartFunction at_infinity_chart(const ChartFunction& c) {
  const int g = c.curve.genus();
  return ChartFunction(c.curve.reversed(), -c.A.reversed(g - 1),
                       -c.B.reversed(-2));
}

} // namespace

FieldElement residue_at_origin(const ChartFunction& c) {
  return with_precision_retry(expansion_budget(c), [&](int prec) {
    return origin_expansion(c, prec).coeff(-1);
  });
}

int order_at_origin(const ChartFunction& c) {
  check(!c.is_zero(), errc::invalid_input,
        "the zero differential has no order");
  return with_precision_retry(expansion_budget(c), [&](int prec) {
    const auto v = origin_expansion(c, prec).valuation();
    check(v.has_value(), errc::precision_exhausted,
          "expansion is zero to working precision");
    return *v;
  });
}

FieldElement residue_at_infinity(const ChartFunction& c) {
  return residue_at_origin(at_infinity_chart(c));
}

int order_at_infinity(const ChartFunction& c) {
  return order_at_origin(at_infinity_chart(c));
}

} // namespace hycart
