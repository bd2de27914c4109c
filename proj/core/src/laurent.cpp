#include "hycart/laurent.hpp"

#include <sstream>

namespace hycart {

LaurentPoly LaurentPoly::monomial(const FieldContext& ctx, int exp,
                                  const FieldElement& c) {
  LaurentPoly r(ctx);
  if (!c.is_zero()) r.c_.emplace(exp, c);
  return r;
}

LaurentPoly LaurentPoly::from_coeffs(const FieldContext& ctx, int lo,
                                     const std::vector<FieldElement>& cs) {
  LaurentPoly r(ctx);
  for (std::size_t i = 0; i < cs.size(); ++i)
    if (!cs[i].is_zero()) r.c_.emplace(lo + static_cast<int>(i), cs[i]);
  return r;
}

FieldElement LaurentPoly::coeff(int e) const {
  auto it = c_.find(e);
  return it == c_.end() ? ctx_->zero() : it->second;
}

void LaurentPoly::set_coeff(int e, const FieldElement& v) {
  if (v.is_zero())
    c_.erase(e);
  else
    c_[e] = v;
}

void LaurentPoly::add_term(int e, const FieldElement& v) {
  if (v.is_zero()) return;
  auto it = c_.find(e);
  if (it == c_.end()) {
    c_.emplace(e, v);
    return;
  }
  it->second += v;
  if (it->second.is_zero()) c_.erase(it);
}

std::optional<int> LaurentPoly::min_exp() const {
  if (c_.empty()) return std::nullopt;
  return c_.begin()->first;
}
std::optional<int> LaurentPoly::max_exp() const {
  if (c_.empty()) return std::nullopt;
  return c_.rbegin()->first;
}
int LaurentPoly::max_abs_exp() const {
  if (c_.empty()) return 0;
  int lo = c_.begin()->first, hi = c_.rbegin()->first;
  return std::max(std::abs(lo), std::abs(hi));
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r += o;
  return r;
}
LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  r -= o;
  return r;
}
LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, v] : r.c_) v = -v;
  return r;
}
LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) add_term(e, v);
  return *this;
}
LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, v] : o.c_) add_term(e, -v);
  return *this;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  LaurentPoly r(*ctx_);
  for (const auto& [e1, v1] : c_)
    for (const auto& [e2, v2] : o.c_) r.add_term(e1 + e2, v1 * v2);
  return r;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const { return c_ == o.c_; }

LaurentPoly LaurentPoly::scaled(const FieldElement& c) const {
  LaurentPoly r(*ctx_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : c_) r.c_.emplace(e, v * c);
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r(*ctx_);
  for (const auto& [e, v] : c_) r.c_.emplace(e + k, v);
  return r;
}

LaurentPoly LaurentPoly::reversed(int k) const {
  LaurentPoly r(*ctx_);
  for (const auto& [e, v] : c_) r.c_.emplace(k - e, v);
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly r = monomial(*ctx_, 0, ctx_->one());
  LaurentPoly base = *this;
  while (n) {
    if (n & 1) r = r * base;
    base = base * base;
    n >>= 1;
  }
  return r;
}

LaurentPoly LaurentPoly::frobenius_coeffs(long long e) const {
  LaurentPoly r(*ctx_);
  for (const auto& [ex, v] : c_) r.c_.emplace(ex, v.frobenius(e));
  return r;
}

LaurentPoly LaurentPoly::power_p() const {
  LaurentPoly r(*ctx_);
  const int p = ctx_->p();
  for (const auto& [e, v] : c_) r.c_.emplace(e * p, v.pth_power());
  return r;
}

bool LaurentPoly::supported_ge(int lo) const {
  return c_.empty() || c_.begin()->first >= lo;
}
bool LaurentPoly::supported_le(int hi) const {
  return c_.empty() || c_.rbegin()->first <= hi;
}

LaurentPoly LaurentPoly::part_ge(int lo) const {
  LaurentPoly r(*ctx_);
  for (auto it = c_.lower_bound(lo); it != c_.end(); ++it)
    r.c_.emplace(it->first, it->second);
  return r;
}
LaurentPoly LaurentPoly::part_le(int hi) const {
  LaurentPoly r(*ctx_);
  for (auto it = c_.begin(); it != c_.end() && it->first <= hi; ++it)
    r.c_.emplace(it->first, it->second);
  return r;
}
LaurentPoly LaurentPoly::part_in(int lo, int hi) const {
  LaurentPoly r(*ctx_);
  for (auto it = c_.lower_bound(lo); it != c_.end() && it->first <= hi; ++it)
    r.c_.emplace(it->first, it->second);
  return r;
}

LaurentPoly LaurentPoly::derivative() const {
  LaurentPoly r(*ctx_);
  for (const auto& [e, v] : c_)
    r.add_term(e - 1, v * ctx_->from_int(e));
  return r;
}

densepoly::Poly LaurentPoly::to_dense() const {
  check(supported_ge(0), errc::invalid_input,
        "to_dense needs nonnegative support");
  if (c_.empty()) return {};
  densepoly::Poly r(static_cast<std::size_t>(c_.rbegin()->first) + 1,
                    ctx_->zero());
  for (const auto& [e, v] : c_) r[static_cast<std::size_t>(e)] = v;
  return r;
}

std::string LaurentPoly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, v] : c_) {
    if (!first) os << "+";
    first = false;
    std::string cs = v.str();
    const bool needs_parens = cs.find('+') != std::string::npos;
    if (e == 0) {
      os << (needs_parens ? "(" + cs + ")" : cs);
      continue;
    }
    if (!v.is_one()) os << (needs_parens ? "(" + cs + ")" : cs) << "*";
    os << "x";
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

} // namespace hycart
