#include "hycart/linalg.hpp"

#include <cstring>

namespace hycart {

Vec zero_vec(const FieldContext& ctx, std::size_t n) {
  return Vec(n, ctx.zero());
}
bool is_zero_vec(const Vec& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}
Vec frobenius_vec(const Vec& v, long long e) {
  Vec r = v;
  for (auto& x : r) x = x.frobenius(e);
  return r;
}

Mat::Mat(const FieldContext& ctx, std::size_t r, std::size_t c)
    : ctx_(&ctx), r_(r), c_(c), d_(r * c * ctx.esize(), 0) {}

const FieldContext& Mat::ctx() const {
  check(ctx_ != nullptr, errc::internal_check, "use of default Mat");
  return *ctx_;
}

Mat Mat::identity(const FieldContext& ctx, std::size_t n) {
  Mat m(ctx, n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ctx.one());
  return m;
}

Mat Mat::from_columns(const FieldContext& ctx, std::size_t r,
                      const std::vector<Vec>& cols) {
  Mat m(ctx, r, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    check(cols[j].size() == r, errc::invalid_input, "ragged column list");
    for (std::size_t i = 0; i < r; ++i) m.set(i, j, cols[j][i]);
  }
  return m;
}

std::uint8_t* Mat::entry(std::size_t i, std::size_t j) {
  return d_.data() + (i * c_ + j) * ctx_->esize();
}
const std::uint8_t* Mat::entry(std::size_t i, std::size_t j) const {
  return d_.data() + (i * c_ + j) * ctx_->esize();
}

FieldElement Mat::at(std::size_t i, std::size_t j) const {
  const std::size_t es = ctx_->esize();
  return FieldElement(*ctx_,
                      std::vector<std::uint8_t>(entry(i, j), entry(i, j) + es));
}
void Mat::set(std::size_t i, std::size_t j, const FieldElement& v) {
  check(&v.ctx() == ctx_, errc::invalid_input, "context mismatch in Mat::set");
  std::memcpy(entry(i, j), v.coeffs().data(), ctx_->esize());
}

Mat Mat::operator*(const Mat& o) const {
  check(c_ == o.r_ && ctx_ == o.ctx_, errc::invalid_input, "Mat mul shape");
  Mat r(*ctx_, r_, o.c_);
  const std::size_t es = ctx_->esize();
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t k = 0; k < c_; ++k) {
      const std::uint8_t* aik = entry(i, k);
      if (ctx_->el_is_zero(aik)) continue;
      const std::uint8_t* brow = o.entry(k, 0);
      std::uint8_t* rrow = r.entry(i, 0);
      for (std::size_t j = 0; j < o.c_; ++j)
        ctx_->el_addmul(rrow + j * es, aik, brow + j * es);
    }
  return r;
}

Mat Mat::operator+(const Mat& o) const {
  check(r_ == o.r_ && c_ == o.c_ && ctx_ == o.ctx_, errc::invalid_input,
        "Mat add shape");
  Mat r = *this;
  const std::size_t n = r_ * c_;
  const std::size_t es = ctx_->esize();
  for (std::size_t i = 0; i < n; ++i)
    ctx_->el_add(r.d_.data() + i * es, o.d_.data() + i * es);
  return r;
}

Mat Mat::operator-(const Mat& o) const {
  check(r_ == o.r_ && c_ == o.c_ && ctx_ == o.ctx_, errc::invalid_input,
        "Mat sub shape");
  Mat r = *this;
  const std::size_t n = r_ * c_;
  const std::size_t es = ctx_->esize();
  for (std::size_t i = 0; i < n; ++i)
    ctx_->el_sub(r.d_.data() + i * es, o.d_.data() + i * es);
  return r;
}

bool Mat::operator==(const Mat& o) const {
  return r_ == o.r_ && c_ == o.c_ && ctx_ == o.ctx_ && d_ == o.d_;
}

Vec Mat::mul_vec(const Vec& v) const {
  check(v.size() == c_, errc::invalid_input, "Mat mul_vec shape");
  Vec r = zero_vec(*ctx_, r_);
  for (std::size_t i = 0; i < r_; ++i) {
    FieldElement acc = ctx_->zero();
    for (std::size_t j = 0; j < c_; ++j) acc += at(i, j) * v[j];
    r[i] = acc;
  }
  return r;
}

Mat Mat::transpose() const {
  Mat r(*ctx_, c_, r_);
  const std::size_t es = ctx_->esize();
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j)
      std::memcpy(r.entry(j, i), entry(i, j), es);
  return r;
}

Mat Mat::frobenius_entrywise(long long e) const {
  Mat r = *this;
  for (std::size_t i = 0; i < r_; ++i)
    for (std::size_t j = 0; j < c_; ++j) r.set(i, j, at(i, j).frobenius(e));
  return r;
}

bool Mat::is_zero() const {
  for (auto b : d_)
    if (b) return false;
  return true;
}

Vec Mat::column(std::size_t j) const {
  Vec r = zero_vec(*ctx_, r_);
  for (std::size_t i = 0; i < r_; ++i) r[i] = at(i, j);
  return r;
}
Vec Mat::row_vec(std::size_t i) const {
  Vec r = zero_vec(*ctx_, c_);
  for (std::size_t j = 0; j < c_; ++j) r[j] = at(i, j);
  return r;
}

void Mat::swap_rows(std::size_t i, std::size_t j) {
  if (i == j) return;
  const std::size_t w = c_ * ctx_->esize();
  std::uint8_t* a = d_.data() + i * w;
  std::uint8_t* b = d_.data() + j * w;
  for (std::size_t k = 0; k < w; ++k) std::swap(a[k], b[k]);
}

void Mat::scale_row(std::size_t i, const FieldElement& c) {
  const std::size_t es = ctx_->esize();
  std::uint8_t* row = entry(i, 0);
  if (ctx_->m() == 1) {
    const std::uint8_t* mt = ctx_->multab() + 16 * c.coeffs()[0];
    for (std::size_t j = 0; j < c_; ++j) row[j] = mt[row[j]];
    return;
  }
  std::uint8_t tmp[64];
  for (std::size_t j = 0; j < c_; ++j) {
    ctx_->el_mul(tmp, row + j * es, c.coeffs().data());
    std::memcpy(row + j * es, tmp, es);
  }
}

void Mat::submul_row(std::size_t dst, std::size_t src, const FieldElement& c) {
  if (c.is_zero()) return;
  const std::size_t es = ctx_->esize();
  std::uint8_t* d = entry(dst, 0);
  const std::uint8_t* s = entry(src, 0);
  if (ctx_->m() == 1) {
    // d -= c*s, via d += (p-c)*s
    const std::uint8_t nc =
        static_cast<std::uint8_t>(ctx_->p() - c.coeffs()[0]);
    const std::uint8_t* mt = ctx_->multab() + 16 * nc;
    const std::uint8_t* red = ctx_->red256();
    for (std::size_t j = 0; j < c_; ++j)
      d[j] = red[static_cast<std::size_t>(d[j]) + mt[s[j]]];
    return;
  }
  for (std::size_t j = 0; j < c_; ++j)
    ctx_->el_submul(d + j * es, c.coeffs().data(), s + j * es);
}

RrefResult rref(Mat a, bool track_transform) {
  const FieldContext& ctx = a.ctx();
  const std::size_t r = a.rows(), c = a.cols();
  Mat w = a;
  if (track_transform) {
    w = Mat(ctx, r, c + r);
    const std::size_t es = ctx.esize();
    for (std::size_t i = 0; i < r; ++i) {
      std::memcpy(w.entry(i, 0), a.entry(i, 0), c * es);
      w.set(i, c + i, ctx.one());
    }
  }
  RrefResult out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < c && lead < r; ++col) {
    std::size_t piv = lead;
    while (piv < r && w.at(piv, col).is_zero()) ++piv;
    if (piv == r) continue;
    w.swap_rows(lead, piv);
    FieldElement pv = w.at(lead, col);
    if (!pv.is_one()) w.scale_row(lead, pv.inv());
    for (std::size_t i = 0; i < r; ++i) {
      if (i == lead) continue;
      FieldElement f = w.at(i, col);
      if (!f.is_zero()) w.submul_row(i, lead, f);
    }
    out.pivot_cols.push_back(static_cast<int>(col));
    ++lead;
  }
  out.rank = static_cast<int>(out.pivot_cols.size());
  if (track_transform) {
    out.R = Mat(ctx, r, c);
    out.T = Mat(ctx, r, r);
    const std::size_t es = ctx.esize();
    for (std::size_t i = 0; i < r; ++i) {
      std::memcpy(out.R.entry(i, 0), w.entry(i, 0), c * es);
      std::memcpy(out.T.entry(i, 0), w.entry(i, c), r * es);
    }
    out.tracked = true;
  } else {
    out.R = std::move(w);
  }
  return out;
}

Vec RrefResult::reduce(const Vec& v) const {
  check(v.size() == R.cols(), errc::invalid_input, "reduce length mismatch");
  Vec r = v;
  for (int i = 0; i < rank; ++i) {
    const std::size_t pc = static_cast<std::size_t>(pivot_cols[static_cast<std::size_t>(i)]);
    const FieldElement c = r[pc];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < r.size(); ++j)
      r[j] -= c * R.at(static_cast<std::size_t>(i), j);
  }
  return r;
}

std::optional<Vec> RrefResult::combination(const Vec& v) const {
  check(tracked, errc::internal_check, "combination needs tracked transform");
  Vec r = v;
  Vec lam = zero_vec(R.ctx(), T.cols());
  for (int i = 0; i < rank; ++i) {
    const std::size_t pc = static_cast<std::size_t>(pivot_cols[static_cast<std::size_t>(i)]);
    const FieldElement c = r[pc];
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < r.size(); ++j)
      r[j] -= c * R.at(static_cast<std::size_t>(i), j);
    for (std::size_t j = 0; j < lam.size(); ++j)
      lam[j] += c * T.at(static_cast<std::size_t>(i), j);
  }
  if (!is_zero_vec(r)) return std::nullopt;
  return lam;
}

int rank_of(const Mat& a) { return rref(a).rank; }

std::optional<Vec> solve(const Mat& a, const Vec& b) {
  const FieldContext& ctx = a.ctx();
  check(b.size() == a.rows(), errc::invalid_input, "solve shape");
  Mat w(ctx, a.rows(), a.cols() + 1);
  const std::size_t es = ctx.esize();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::memcpy(w.entry(i, 0), a.entry(i, 0), a.cols() * es);
    w.set(i, a.cols(), b[i]);
  }
  // eliminate, pivots restricted to the coefficient block
  std::size_t lead = 0;
  std::vector<int> pivots;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t piv = lead;
    while (piv < a.rows() && w.at(piv, col).is_zero()) ++piv;
    if (piv == a.rows()) continue;
    w.swap_rows(lead, piv);
    FieldElement pv = w.at(lead, col);
    if (!pv.is_one()) w.scale_row(lead, pv.inv());
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == lead) continue;
      FieldElement f = w.at(i, col);
      if (!f.is_zero()) w.submul_row(i, lead, f);
    }
    pivots.push_back(static_cast<int>(col));
    ++lead;
  }
  for (std::size_t i = lead; i < a.rows(); ++i)
    if (!w.at(i, a.cols()).is_zero()) return std::nullopt;
  Vec x = zero_vec(ctx, a.cols());
  for (std::size_t i = 0; i < pivots.size(); ++i)
    x[static_cast<std::size_t>(pivots[i])] = w.at(i, a.cols());
  return x;
}

std::vector<Vec> kernel_basis(const Mat& a) {
  RrefResult rr = rref(a);
  const FieldContext& ctx = a.ctx();
  std::vector<bool> is_pivot(a.cols(), false);
  for (int pc : rr.pivot_cols) is_pivot[static_cast<std::size_t>(pc)] = true;
  std::vector<Vec> basis;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    if (is_pivot[j]) continue;
    Vec v = zero_vec(ctx, a.cols());
    v[j] = ctx.one();
    for (int i = 0; i < rr.rank; ++i)
      v[static_cast<std::size_t>(rr.pivot_cols[static_cast<std::size_t>(i)])] =
          -rr.R.at(static_cast<std::size_t>(i), j);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Mat> inverse(const Mat& a) {
  check(a.rows() == a.cols(), errc::invalid_input, "inverse of non-square");
  RrefResult rr = rref(a, true);
  if (rr.rank != static_cast<int>(a.rows())) return std::nullopt;
  return rr.T;
}

} // namespace hycart
