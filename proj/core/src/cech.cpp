#include "hycart/cech.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "hycart/error.hpp"

namespace hycart {

// ---------------------------------------------------------------------------
// trivial-bundle H^1
// ---------------------------------------------------------------------------

Vec h1_trivial_coords(const ChartFunction& c) {
  const int g = c.curve.genus();
  Vec out;
  out.reserve(static_cast<std::size_t>(g));
  for (int e = -g; e <= -1; ++e) out.push_back(c.B.coeff(e));
  return out;
}

ChartFunction h1_trivial_rep(const Curve& C, const Vec& beta) {
  const int g = C.genus();
  check(static_cast<int>(beta.size()) == g, errc::invalid_input,
        "class coordinate count must equal the genus");
  LaurentPoly B(C.ctx());
  for (int i = 0; i < g; ++i) B.add_term(-g + i, beta[static_cast<size_t>(i)]);
  return ChartFunction(C, LaurentPoly(C.ctx()), B);
}

bool is_coboundary_trivial(const ChartFunction& c) {
  return is_zero_vec(h1_trivial_coords(c));
}

std::pair<ChartFunction, ChartFunction> coboundary_split_trivial(
    const ChartFunction& c) {
  check(is_coboundary_trivial(c), errc::invalid_input,
        "cocycle class does not vanish");
  const Curve& C = c.curve;
  const int g = C.genus();
  ChartFunction h0(C, c.A.part_ge(0), c.B.part_ge(0));
  ChartFunction h1(C, c.A.part_le(-1), c.B.part_le(-(g + 1)));
  check(h0.regular_on_u0() && h1.regular_on_u1() && h0 + h1 == c,
        errc::internal_check, "coboundary split certificate failed");
  return {h0, h1};
}

Mat frobenius_on_h1_trivial(const Curve& C) {
  const int g = C.genus();
  std::vector<Vec> cols;
  for (int e = -g; e <= -1; ++e)
    cols.push_back(h1_trivial_coords(ChartFunction::y_x_power(C, e).power_p()));
  return Mat::from_columns(C.ctx(), static_cast<std::size_t>(g), cols);
}

// ---------------------------------------------------------------------------
// OverlapMat
// ---------------------------------------------------------------------------

OverlapMat::OverlapMat(const Curve& C, std::size_t n)
    : e_(n * n, ChartFunction::zero(C)), n_(n) {
  check(n >= 1, errc::invalid_input, "matrix size must be positive");
}

const Curve& OverlapMat::curve() const {
  check(n_ != 0, errc::internal_check, "empty overlap matrix");
  return e_.front().curve;
}

OverlapMat OverlapMat::identity(const Curve& C, std::size_t n) {
  OverlapMat m(C, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i, ChartFunction::one(C));
  return m;
}

OverlapMat OverlapMat::scalar(const Curve& C, std::size_t n,
                              const LaurentPoly& u) {
  OverlapMat m(C, n);
  for (std::size_t i = 0; i < n; ++i)
    m.set(i, i, ChartFunction(C, u, LaurentPoly(C.ctx())));
  return m;
}

const ChartFunction& OverlapMat::at(std::size_t i, std::size_t j) const {
  check(i < n_ && j < n_, errc::internal_check, "overlap matrix index");
  return e_[i * n_ + j];
}

void OverlapMat::set(std::size_t i, std::size_t j, ChartFunction v) {
  check(i < n_ && j < n_, errc::internal_check, "overlap matrix index");
  check(v.curve.compatible(curve()), errc::internal_check,
        "overlap matrix entry on a different curve");
  e_[i * n_ + j] = std::move(v);
}

void OverlapMat::set(std::size_t i, std::size_t j, LaurentPoly xpart) {
  const Curve& C = curve();
  set(i, j, ChartFunction(C, std::move(xpart), LaurentPoly(C.ctx())));
}

OverlapMat OverlapMat::operator*(const OverlapMat& o) const {
  check(n_ == o.n_ && curve().compatible(o.curve()), errc::internal_check,
        "overlap matrix product shape");
  OverlapMat r(curve(), n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t k = 0; k < n_; ++k) {
      const ChartFunction& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        const ChartFunction& b = o.at(k, j);
        if (b.is_zero()) continue;
        r.e_[i * n_ + j] = r.e_[i * n_ + j] + a * b;
      }
    }
  return r;
}

bool OverlapMat::operator==(const OverlapMat& o) const {
  if (n_ != o.n_) return false;
  for (std::size_t i = 0; i < e_.size(); ++i)
    if (e_[i] != o.e_[i]) return false;
  return true;
}

bool OverlapMat::is_identity() const {
  if (n_ == 0) return false;
  return *this == identity(curve(), n_);
}

OverlapMat OverlapMat::transpose() const {
  OverlapMat r(curve(), n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) r.set(j, i, at(i, j));
  return r;
}

OverlapMat OverlapMat::scaled(const LaurentPoly& u) const {
  OverlapMat r(curve(), n_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].times_laurent(u);
  return r;
}

OverlapMat OverlapMat::power_p() const {
  OverlapMat r(curve(), n_);
  for (std::size_t i = 0; i < e_.size(); ++i) r.e_[i] = e_[i].power_p();
  return r;
}

OverlapMat OverlapMat::power_p_iter(int k) const {
  check(k >= 0, errc::internal_check, "negative Frobenius pullback count");
  OverlapMat r = *this;
  for (int i = 0; i < k; ++i) r = r.power_p();
  return r;
}

OverlapMat OverlapMat::frobenius_coeffs(long long e) const {
  OverlapMat r(curve(), n_);
  for (std::size_t i = 0; i < e_.size(); ++i)
    r.e_[i] = ChartFunction(e_[i].curve, e_[i].A.frobenius_coeffs(e),
                            e_[i].B.frobenius_coeffs(e));
  return r;
}

int OverlapMat::max_abs_exp() const {
  int m = 0;
  for (const auto& c : e_)
    m = std::max({m, c.A.max_abs_exp(), c.B.max_abs_exp()});
  return m;
}

namespace {

ChartFunction det_rec(const OverlapMat& M, unsigned mask,
                      std::map<unsigned, ChartFunction>& memo) {
  const Curve& C = M.curve();
  if (mask == 0) return ChartFunction::one(C);
  auto it = memo.find(mask);
  if (it != memo.end()) return it->second;
  const std::size_t n = M.size();
  const std::size_t r = n - static_cast<std::size_t>(std::popcount(mask));
  ChartFunction acc = ChartFunction::zero(C);
  int pos = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (!(mask & (1u << c))) continue;
    const ChartFunction& entry = M.at(r, c);
    if (!entry.is_zero()) {
      ChartFunction term = entry * det_rec(M, mask & ~(1u << c), memo);
      acc = (pos & 1) ? acc - term : acc + term;
    }
    ++pos;
  }
  memo.emplace(mask, acc);
  return acc;
}

} // namespace

ChartFunction OverlapMat::det() const {
  check(n_ >= 1 && n_ <= 12, errc::invalid_input,
        "determinant supported for sizes 1..12");
  std::map<unsigned, ChartFunction> memo;
  return det_rec(*this, (1u << n_) - 1u, memo);
}

std::pair<FieldElement, int> OverlapMat::det_unit() const {
  ChartFunction d = det();
  check(d.B.is_zero() && d.A.term_count() == 1, errc::invalid_input,
        "transition determinant is not a unit on the overlap");
  const auto& [k, c] = *d.A.terms().begin();
  return {c, k};
}

OverlapMat OverlapMat::inverse() const {
  const Curve& C = curve();
  const auto [c, k] = det_unit();
  const LaurentPoly unit_inv =
      LaurentPoly::monomial(C.ctx(), -k, c.inv());
  OverlapMat inv(C, n_);
  if (n_ == 1) {
    inv.set(0, 0, ChartFunction(C, unit_inv, LaurentPoly(C.ctx())));
  } else {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        OverlapMat minor(C, n_ - 1);
        for (std::size_t r = 0, rr = 0; r < n_; ++r) {
          if (r == i) continue;
          for (std::size_t s = 0, ss = 0; s < n_; ++s) {
            if (s == j) continue;
            minor.set(rr, ss, at(r, s));
            ++ss;
          }
          ++rr;
        }
        ChartFunction m = minor.det();
        if (((i + j) & 1) != 0) m = -m;
        inv.set(j, i, m.times_laurent(unit_inv));
      }
  }
  check((*this * inv).is_identity(), errc::internal_check,
        "overlap matrix inverse certificate failed");
  return inv;
}

std::string OverlapMat::str() const {
  std::string s = "[";
  for (std::size_t i = 0; i < n_; ++i) {
    if (i) s += "; ";
    for (std::size_t j = 0; j < n_; ++j) {
      if (j) s += ", ";
      s += at(i, j).str();
    }
  }
  s += "]";
  return s;
}

// ---------------------------------------------------------------------------
// Bundle and section helpers
// ---------------------------------------------------------------------------

Bundle Bundle::make(const Curve& C, const OverlapMat& A) {
  check(A.valid(), errc::invalid_input, "transition matrix must be nonempty");
  check(A.curve().compatible(C), errc::invalid_input,
        "transition matrix on a different curve");
  OverlapMat Ainv = A.inverse();
  auto [c, k] = A.det_unit();
  return Bundle{C, A, std::move(Ainv), std::move(c), k};
}

Bundle Bundle::trivial(const Curve& C, std::size_t n) {
  return make(C, OverlapMat::identity(C, n));
}

Bundle Bundle::line(const Curve& C, const LaurentPoly& u) {
  return make(C, OverlapMat::scalar(C, 1, u));
}

Bundle Bundle::dual() const {
  return make(curve, Ainv.transpose());
}

Section section_zero(const Bundle& E) {
  return Section(E.rank(), ChartFunction::zero(E.curve));
}

Section apply_mat(const OverlapMat& M, const Section& s) {
  check(M.size() == s.size(), errc::internal_check,
        "matrix/section size mismatch");
  const Curve& C = M.curve();
  Section r;
  r.reserve(s.size());
  for (std::size_t i = 0; i < M.size(); ++i) {
    ChartFunction acc = ChartFunction::zero(C);
    for (std::size_t j = 0; j < M.size(); ++j) {
      const ChartFunction& m = M.at(i, j);
      if (!m.is_zero() && !s[j].is_zero()) acc = acc + m * s[j];
    }
    r.push_back(std::move(acc));
  }
  return r;
}

Section add(const Section& a, const Section& b) {
  check(a.size() == b.size(), errc::internal_check, "section size mismatch");
  Section r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] + b[i]);
  return r;
}

Section sub(const Section& a, const Section& b) {
  check(a.size() == b.size(), errc::internal_check, "section size mismatch");
  Section r;
  r.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r.push_back(a[i] - b[i]);
  return r;
}

Section scaled(const Section& a, const FieldElement& c) {
  Section r;
  r.reserve(a.size());
  for (const auto& s : a) r.push_back(s.scaled(c));
  return r;
}

Section power_p(const Section& a) {
  Section r;
  r.reserve(a.size());
  for (const auto& s : a) r.push_back(s.power_p());
  return r;
}

bool is_zero(const Section& a) {
  for (const auto& s : a)
    if (!s.is_zero()) return false;
  return true;
}

bool equal(const Section& a, const Section& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

int max_abs_exp(const Section& a) {
  int m = 0;
  for (const auto& s : a)
    m = std::max({m, s.A.max_abs_exp(), s.B.max_abs_exp()});
  return m;
}

std::pair<int, int> twist_bounds(const Curve& C, Twist t) {
  return t == Twist::functions ? u1_function_bounds(C.genus())
                               : u1_differential_bounds(C.genus());
}

// ---------------------------------------------------------------------------
// SectionSpace
// ---------------------------------------------------------------------------

SectionSpace::SectionSpace(Bundle E, Twist t, int D)
    : E_(std::move(E)), twist_(t), D_(D) {}

Vec SectionSpace::flatten(const Section& s) const {
  const FieldContext& F = E_.curve.ctx();
  const std::size_t n = E_.rank();
  check(s.size() == n, errc::internal_check, "section size mismatch");
  Vec w = zero_vec(F, 2 * n * static_cast<std::size_t>(D_ + 1));
  const std::size_t yoff = n * static_cast<std::size_t>(D_ + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [e, c] : s[i].A.terms()) {
      check(e >= 0 && e <= D_, errc::invalid_input,
            "section outside the solver window");
      w[static_cast<std::size_t>(e) * n + i] = c;
    }
    for (const auto& [e, c] : s[i].B.terms()) {
      check(e >= 0 && e <= D_, errc::invalid_input,
            "section outside the solver window");
      w[yoff + static_cast<std::size_t>(e) * n + i] = c;
    }
  }
  return w;
}

Vec SectionSpace::coords(const Section& s) const {
  Vec w = flatten(s);
  auto lam = basis_rref_.combination(w);
  check(lam.has_value(), errc::internal_check,
        "section does not lie in the computed space");
  return *lam;
}

Section SectionSpace::from_coords(const Vec& c) const {
  check(c.size() == basis_.size(), errc::invalid_input,
        "coordinate count mismatch");
  Section r = section_zero(E_);
  for (std::size_t t = 0; t < basis_.size(); ++t)
    if (!c[t].is_zero()) r = add(r, scaled(basis_[t], c[t]));
  return r;
}

bool SectionSpace::contains(const Section& s) const {
  if (s.size() != E_.rank()) return false;
  for (const auto& f : s)
    if (!f.regular_on_u0()) return false;
  const auto [maxA, maxB] = twist_bounds(E_.curve, twist_);
  Section u = apply_mat(E_.Ainv, s);
  for (const auto& f : u)
    if (!f.u1_bounded(maxA, maxB)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// H1Space
// ---------------------------------------------------------------------------

H1Space::H1Space(Bundle E, Twist t, int D)
    : E_(std::move(E)), twist_(t), D_(D) {}

int H1Space::col_of(int comp, int exp, bool ypart) const {
  const int n = static_cast<int>(E_.rank());
  const int base = (exp + D_) * n + comp;
  return ypart ? n * D_ + base : base;
}

Vec H1Space::flatten(const Section& z) const {
  const FieldContext& F = E_.curve.ctx();
  const std::size_t n = E_.rank();
  check(z.size() == n, errc::internal_check, "cochain size mismatch");
  Vec w = zero_vec(F, 2 * n * static_cast<std::size_t>(D_));
  for (std::size_t i = 0; i < n; ++i)
    for (const bool ypart : {false, true}) {
      const LaurentPoly& part = ypart ? z[i].B : z[i].A;
      for (const auto& [e, c] : part.terms()) {
        if (e >= 0) continue; // absorbed by the U0 side
        check(e >= -D_, errc::invalid_input,
              "cochain pole exceeds the solver window");
        w[static_cast<std::size_t>(col_of(static_cast<int>(i), e, ypart))] = c;
      }
    }
  return w;
}

Vec H1Space::coords(const Section& z) const {
  Vec r = rr_.reduce(flatten(z));
  Vec out;
  out.reserve(static_cast<std::size_t>(dim_));
  for (int q : free_cols_) out.push_back(r[static_cast<std::size_t>(q)]);
  return out;
}

Section H1Space::from_coords(const Vec& c) const {
  check(c.size() == basis_.size(), errc::invalid_input,
        "coordinate count mismatch");
  Section r = section_zero(E_);
  for (std::size_t t = 0; t < basis_.size(); ++t)
    if (!c[t].is_zero()) r = add(r, scaled(basis_[t], c[t]));
  return r;
}

bool H1Space::is_coboundary(const Section& z) const {
  return is_zero_vec(coords(z));
}

Section H1Space::section_of_gens(const Vec& lambda) const {
  Section u1 = section_zero(E_);
  for (std::size_t t = 0; t < lambda.size(); ++t) {
    const FieldElement& v = lambda[t];
    if (v.is_zero()) continue;
    const auto i = static_cast<std::size_t>(gen_comp_[t]);
    const int e = -gen_shift_[t];
    if (gen_y_[t])
      u1[i].B.add_term(e, v);
    else
      u1[i].A.add_term(e, v);
  }
  return u1;
}

H1Space::Witness H1Space::witness(const Section& z) const {
  const Curve& C = E_.curve;
  Vec w = flatten(z);
  auto lam = rr_.combination(w);
  check(lam.has_value(), errc::invalid_input, "cochain is not a coboundary");
  Section u1 = section_of_gens(*lam);
  Section h0 = sub(z, apply_mat(E_.A, u1));
  const auto [maxA, maxB] = twist_bounds(C, twist_);
  for (std::size_t i = 0; i < E_.rank(); ++i) {
    check(h0[i].regular_on_u0(), errc::internal_check,
          "coboundary witness: U0 part not regular");
    check(u1[i].u1_bounded(maxA, maxB), errc::internal_check,
          "coboundary witness: U1 part out of bounds");
  }
  return Witness{std::move(h0), std::move(u1)};
}

std::optional<Section> H1Space::representative_vanishing_on(
    const Section& z, const std::vector<std::size_t>& comps) const {
  const Curve& C = E_.curve;
  const FieldContext& F = C.ctx();
  const std::size_t n = E_.rank();
  const std::size_t gens = gen_comp_.size();
  std::vector<int> cols;
  for (std::size_t i : comps) {
    check(i < n, errc::internal_check, "component index out of range");
    for (const bool ypart : {false, true})
      for (int e = -D_; e <= -1; ++e)
        cols.push_back(col_of(static_cast<int>(i), e, ypart));
  }
  Vec w = flatten(z);
  Mat a(F, cols.size(), gens);
  Vec b = zero_vec(F, cols.size());
  for (std::size_t r = 0; r < cols.size(); ++r)
    b[r] = w[static_cast<std::size_t>(cols[r])];
  for (std::size_t t = 0; t < gens; ++t) {
    // regenerate the projected generator column restricted to `cols`
    const auto i = static_cast<std::size_t>(gen_comp_[t]);
    const int j = gen_shift_[t];
    for (std::size_t k = 0; k < n; ++k) {
      ChartFunction prod = gen_y_[t] ? E_.A.at(k, i).times_y() : E_.A.at(k, i);
      for (const bool ypart : {false, true}) {
        const LaurentPoly& part = ypart ? prod.B : prod.A;
        for (const auto& [a0, c] : part.terms()) {
          const int e = a0 - j;
          if (e < -D_ || e > -1) continue;
          const int q = col_of(static_cast<int>(k), e, ypart);
          for (std::size_t r = 0; r < cols.size(); ++r)
            if (cols[r] == q) a.set(r, t, a.at(r, t) + c);
        }
      }
    }
  }
  auto lam = solve(a, b);
  if (!lam.has_value()) return std::nullopt;
  Section z1 = sub(z, apply_mat(E_.A, section_of_gens(*lam)));
  Section out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    out.push_back(ChartFunction(C, z1[i].A.part_le(-1), z1[i].B.part_le(-1)));
  for (std::size_t i : comps)
    check(out[i].is_zero(), errc::internal_check,
          "vanishing-representative solve left a nonzero component");
  check(coords(out) == coords(z), errc::internal_check,
        "vanishing representative changed the class");
  return out;
}

// ---------------------------------------------------------------------------
// solver
// ---------------------------------------------------------------------------

namespace {

void add_to(Mat& m, std::size_t r, std::size_t c, const FieldElement& v) {
  m.set(r, c, m.at(r, c) + v);
}

int chart_min_exp(const ChartFunction& c, int dflt) {
  int m = dflt;
  bool any = false;
  if (auto e = c.A.min_exp()) {
    m = *e;
    any = true;
  }
  if (auto e = c.B.min_exp()) m = any ? std::min(m, *e) : *e;
  return (c.is_zero()) ? dflt : m;
}

} // namespace

class CechSolver {
public:
  static SectionSpace build_h0(const Bundle& E, Twist t, int D) {
    const Curve& C = E.curve;
    const FieldContext& F = C.ctx();
    const std::size_t n = E.rank();
    const auto [maxA, maxB] = twist_bounds(C, t);
    // Constraint data per entry of Ainv = alpha + beta y:
    //   (Ainv h)_k x-part: alpha P + (beta f) Q; y-part: beta P + alpha Q.
    int sprA = 0, sprB = 0;
    std::vector<LaurentPoly> betaf;
    betaf.reserve(n * n);
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        const ChartFunction& entry = E.Ainv.at(k, i);
        betaf.push_back(entry.B * C.f());
        sprA = std::max({sprA, entry.A.max_exp().value_or(0),
                         betaf.back().max_exp().value_or(0)});
        sprB = std::max({sprB, entry.A.max_exp().value_or(0),
                         entry.B.max_exp().value_or(0)});
      }
    const int hiA = std::max(D + sprA, maxA);
    const int hiB = std::max(D + sprB, maxB);
    const std::size_t rowsA = n * static_cast<std::size_t>(hiA - maxA);
    const std::size_t cols = 2 * n * static_cast<std::size_t>(D + 1);
    const std::size_t yoff = n * static_cast<std::size_t>(D + 1);
    Mat M(F, rowsA + n * static_cast<std::size_t>(hiB - maxB), cols);
    auto fill = [&](std::size_t k, const LaurentPoly& terms, bool yrow,
                    std::size_t coloff) {
      for (const auto& [a, c] : terms.terms())
        for (int d = 0; d <= D; ++d) {
          const int e = a + d;
          const std::size_t col = coloff + static_cast<std::size_t>(d) * n;
          if (!yrow && e > maxA && e <= hiA)
            add_to(M, k * static_cast<std::size_t>(hiA - maxA) +
                          static_cast<std::size_t>(e - maxA - 1),
                   col, c);
          if (yrow && e > maxB && e <= hiB)
            add_to(M, rowsA + k * static_cast<std::size_t>(hiB - maxB) +
                          static_cast<std::size_t>(e - maxB - 1),
                   col, c);
        }
    };
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t i = 0; i < n; ++i) {
        const ChartFunction& entry = E.Ainv.at(k, i);
        fill(k, entry.A, false, i);           // alpha P -> x rows
        fill(k, betaf[k * n + i], false, yoff + i); // beta f Q -> x rows
        fill(k, entry.B, true, i);            // beta P -> y rows
        fill(k, entry.A, true, yoff + i);     // alpha Q -> y rows
      }
    SectionSpace S(E, t, D);
    std::vector<Vec> ker = kernel_basis(M);
    Mat rows(F, ker.size(), cols);
    for (std::size_t r = 0; r < ker.size(); ++r) {
      Section s = section_zero(E);
      for (std::size_t q = 0; q < cols; ++q) {
        if (ker[r][q].is_zero()) continue;
        rows.set(r, q, ker[r][q]);
        const bool ypart = q >= yoff;
        const std::size_t qq = ypart ? q - yoff : q;
        const int e = static_cast<int>(qq / n);
        const std::size_t i = qq % n;
        if (ypart)
          s[i].B.add_term(e, ker[r][q]);
        else
          s[i].A.add_term(e, ker[r][q]);
      }
      check(S.contains(s), errc::internal_check,
            "solved section fails its own membership certificate");
      S.basis_.push_back(std::move(s));
    }
    S.basis_rref_ = rref(std::move(rows), true);
    return S;
  }

  static H1Space build_h1(const Bundle& E, Twist t, int D) {
    const Curve& C = E.curve;
    const FieldContext& F = C.ctx();
    const std::size_t n = E.rank();
    const auto [maxA, maxB] = twist_bounds(C, t);
    H1Space S(E, t, D);
    const std::size_t cols = 2 * n * static_cast<std::size_t>(D);
    std::vector<Vec> rows;
    for (std::size_t i = 0; i < n; ++i)
      for (const bool geny : {false, true}) {
        const int jmin = geny ? -maxB : -maxA;
        int floor = 0;
        bool any = false;
        std::vector<ChartFunction> base;
        base.reserve(n);
        for (std::size_t k = 0; k < n; ++k) {
          ChartFunction prod =
              geny ? E.A.at(k, i).times_y() : E.A.at(k, i);
          if (!prod.is_zero()) {
            const int m = chart_min_exp(prod, 0);
            floor = any ? std::min(floor, m) : m;
            any = true;
          }
          base.push_back(std::move(prod));
        }
        check(any, errc::internal_check, "transition matrix has a zero column");
        for (int j = jmin; j <= D + floor; ++j) {
          Vec row = zero_vec(F, cols);
          bool nonzero = false;
          for (std::size_t k = 0; k < n; ++k)
            for (const bool ypart : {false, true}) {
              const LaurentPoly& part = ypart ? base[k].B : base[k].A;
              for (const auto& [a, c] : part.terms()) {
                const int e = a - j;
                if (e < -D || e > -1) continue;
                const auto q = static_cast<std::size_t>(
                    S.col_of(static_cast<int>(k), e, ypart));
                row[q] = row[q] + c;
                nonzero = true;
              }
            }
          if (!nonzero) continue;
          rows.push_back(std::move(row));
          S.gen_comp_.push_back(static_cast<int>(i));
          S.gen_shift_.push_back(j);
          S.gen_y_.push_back(geny);
        }
      }
    Mat G(F, rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r)
      for (std::size_t q = 0; q < cols; ++q)
        if (!rows[r][q].is_zero()) G.set(r, q, rows[r][q]);
    S.rr_ = rref(std::move(G), true);
    std::vector<bool> pivot(cols, false);
    for (int pc : S.rr_.pivot_cols) pivot[static_cast<std::size_t>(pc)] = true;
    for (std::size_t q = 0; q < cols; ++q)
      if (!pivot[q]) S.free_cols_.push_back(static_cast<int>(q));
    S.dim_ = static_cast<int>(S.free_cols_.size());
    const std::size_t nD = n * static_cast<std::size_t>(D);
    for (int qi : S.free_cols_) {
      const auto q = static_cast<std::size_t>(qi);
      const bool ypart = q >= nD;
      const std::size_t qq = ypart ? q - nD : q;
      const std::size_t i = qq % n;
      const int e = static_cast<int>(qq / n) - D;
      Section b = section_zero(E);
      if (ypart)
        b[i].B.add_term(e, F.one());
      else
        b[i].A.add_term(e, F.one());
      S.basis_.push_back(std::move(b));
    }
    return S;
  }

  static Cohomology solve(const Bundle& E, Twist t, int min_window) {
    const Curve& C = E.curve;
    const int g = C.genus();
    const int n = static_cast<int>(E.rank());
    const int step = g + 1;
    const int spread = std::max(E.A.max_abs_exp(), E.Ainv.max_abs_exp()) +
                       C.degree();
    int D = std::max({min_window, spread + 2 * step, 2 * g + 2});
    const int deg =
        E.degree() + (t == Twist::differentials ? n * (2 * g - 2) : 0);
    const int euler = deg + n * (1 - g);
    for (int attempt = 0; attempt < 8; ++attempt) {
      std::vector<SectionSpace> h0s;
      std::vector<H1Space> h1s;
      bool stable = true;
      for (int s = 0; s < 3; ++s) {
        h0s.push_back(build_h0(E, t, D + s * step));
        h1s.push_back(build_h1(E, t, D + s * step));
        if (s > 0 && (h0s.back().dim() != h0s[0].dim() ||
                      h1s.back().dim() != h1s[0].dim())) {
          stable = false;
          break;
        }
      }
      if (stable && h0s[0].dim() - h1s[0].dim() == euler)
        return Cohomology{std::move(h0s[2]), std::move(h1s[2])};
      D += step;
    }
    raise(errc::window_not_stabilized, "cohomology window did not stabilise");
  }
};

Cohomology cohomology(const Bundle& E, Twist t, int min_window) {
  return CechSolver::solve(E, t, min_window);
}

SectionSpace sections(const Bundle& E, Twist t, int min_window) {
  return std::move(CechSolver::solve(E, t, min_window).h0);
}

H1Space h1_space(const Bundle& E, Twist t, int min_window) {
  return std::move(CechSolver::solve(E, t, min_window).h1);
}

} // namespace hycart
