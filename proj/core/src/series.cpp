#include "hycart/series.hpp"

#include <algorithm>

namespace hycart {

namespace {
constexpr int kInf = 1 << 28; // precision sentinel for exact data
inline int clamp_inf(long long v) {
  return static_cast<int>(std::min<long long>(v, kInf));
}
} // namespace

// Representation: coefficients are stored from val_ for coeffs_.size()
// positions; anything past the stored block but below trunc_ is a known
// zero.  trunc_ == kInf marks exact data (e.g. a polynomial).

Series::Series(const FieldContext& ctx, int val,
               std::vector<FieldElement> coeffs, int trunc)
    : ctx_(&ctx), val_(val), trunc_(trunc), coeffs_(std::move(coeffs)) {
  check(val_ + static_cast<int>(coeffs_.size()) <= trunc_,
        errc::internal_check, "series stores coefficients past truncation");
}

Series Series::exact_zero(const FieldContext& ctx) {
  return Series(ctx, kInf, {}, kInf);
}
Series Series::zero_to(const FieldContext& ctx, int trunc) {
  return Series(ctx, trunc, {}, trunc);
}
Series Series::monomial(const FieldContext& ctx, int exp, const FieldElement& c,
                        int trunc) {
  if (exp >= trunc) return zero_to(ctx, trunc);
  return Series(ctx, exp, {c}, trunc);
}

std::optional<int> Series::valuation() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (!coeffs_[i].is_zero()) return val_ + static_cast<int>(i);
  return std::nullopt;
}

FieldElement Series::coeff(int k) const {
  check(k < trunc_, errc::precision_exhausted,
        "series coefficient beyond truncation");
  if (k < val_ || k >= val_ + static_cast<int>(coeffs_.size()))
    return ctx_->zero();
  return coeffs_[static_cast<std::size_t>(k - val_)];
}

Series Series::operator+(const Series& o) const {
  const int t = std::min(trunc_, o.trunc_);
  const int hi1 = val_ + static_cast<int>(coeffs_.size());
  const int hi2 = o.val_ + static_cast<int>(o.coeffs_.size());
  const int v = std::min(std::min(val_, o.val_), t);
  const int hi = std::min(std::max(hi1, hi2), t);
  if (hi <= v) return zero_to(*ctx_, t);
  std::vector<FieldElement> cs(static_cast<std::size_t>(hi - v), ctx_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const int e = val_ + static_cast<int>(i);
    if (e >= v && e < hi) cs[static_cast<std::size_t>(e - v)] += coeffs_[i];
  }
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) {
    const int e = o.val_ + static_cast<int>(i);
    if (e >= v && e < hi) cs[static_cast<std::size_t>(e - v)] += o.coeffs_[i];
  }
  return Series(*ctx_, v, std::move(cs), t);
}

Series Series::operator-() const {
  Series r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}
Series Series::operator-(const Series& o) const { return *this + (-o); }

Series Series::operator*(const Series& o) const {
  const int v1 = valuation().value_or(trunc_);
  const int v2 = o.valuation().value_or(o.trunc_);
  const int t = clamp_inf(std::min(static_cast<long long>(trunc_) + v2,
                                   static_cast<long long>(o.trunc_) + v1));
  if (coeffs_.empty() || o.coeffs_.empty()) return zero_to(*ctx_, t);
  const int v = std::min(clamp_inf(static_cast<long long>(val_) + o.val_), t);
  const int hi = std::min(
      clamp_inf(static_cast<long long>(val_) + static_cast<int>(coeffs_.size()) +
                o.val_ + static_cast<int>(o.coeffs_.size()) - 1),
      t);
  if (hi <= v) return zero_to(*ctx_, t);
  std::vector<FieldElement> cs(static_cast<std::size_t>(hi - v), ctx_->zero());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    const int e1 = val_ + static_cast<int>(i);
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) {
      const int e = e1 + o.val_ + static_cast<int>(j);
      if (e < v || e >= hi) continue;
      cs[static_cast<std::size_t>(e - v)] += coeffs_[i] * o.coeffs_[j];
    }
  }
  return Series(*ctx_, v, std::move(cs), t);
}

Series Series::scaled(const FieldElement& c) const {
  Series r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

Series Series::shifted(int k) const {
  Series r = *this;
  if (r.val_ < kInf) r.val_ += k;
  if (r.trunc_ < kInf) r.trunc_ += k;
  return r;
}

Series Series::inverse() const {
  check(trunc_ < kInf, errc::invalid_input,
        "series inverse requires finite precision");
  const auto v = valuation();
  check(v.has_value(), errc::precision_exhausted,
        "inverse of a series that is zero to its precision");
  const int s = *v;
  const std::size_t L = static_cast<std::size_t>(trunc_ - s);
  const FieldElement lead = coeff(s);
  const FieldElement linv = lead.inv();
  std::vector<FieldElement> u(L, ctx_->zero());
  for (std::size_t k = 0; k < L; ++k)
    u[k] = coeff(s + static_cast<int>(k)) * linv;
  std::vector<FieldElement> w(L, ctx_->zero());
  w[0] = ctx_->one();
  for (std::size_t k = 1; k < L; ++k) {
    FieldElement acc = ctx_->zero();
    for (std::size_t j = 1; j <= k; ++j) acc += u[j] * w[k - j];
    w[k] = -acc;
  }
  for (auto& x : w) x *= linv;
  return Series(*ctx_, -s, std::move(w), -s + static_cast<int>(L));
}

Series Series::derivative() const {
  Series r = *this;
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i)
    r.coeffs_[i] *= ctx_->from_int(r.val_ + static_cast<int>(i));
  if (r.val_ < kInf) r.val_ -= 1;
  if (r.trunc_ < kInf) r.trunc_ -= 1;
  return r;
}

Series Series::pow_int(unsigned n) const {
  Series r = monomial(*ctx_, 0, ctx_->one(), kInf);
  Series base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

Series eval_laurent(const LaurentPoly& L, const Series& X, const Series& Xinv) {
  const FieldContext& ctx = L.ctx();
  Series acc = Series::exact_zero(ctx);
  {
    Series pw = Series::monomial(ctx, 0, ctx.one(), kInf);
    int cur = 0;
    for (const auto& [e, c] : L.terms()) {
      if (e < 0) continue;
      while (cur < e) {
        pw = pw * X;
        ++cur;
      }
      acc = acc + pw.scaled(c);
    }
  }
  {
    Series pw = Series::monomial(ctx, 0, ctx.one(), kInf);
    int cur = 0;
    const auto& ts = L.terms();
    for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
      if (it->first >= 0) continue;
      while (cur > it->first) {
        pw = pw * Xinv;
        --cur;
      }
      acc = acc + pw.scaled(it->second);
    }
  }
  return acc;
}

} // namespace hycart
