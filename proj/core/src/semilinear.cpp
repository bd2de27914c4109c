#include "hycart/semilinear.hpp"

#include <algorithm>

#include "hycart/error.hpp"

namespace hycart {

SemilinearOp SemilinearOp::make(Mat M, long long twist) {
  check(M.valid() && M.rows() == M.cols(), errc::invalid_input,
        "semilinear operator needs a square matrix");
  check(twist == 1 || twist == -1, errc::invalid_input,
        "twist must be +1 or -1");
  return SemilinearOp{std::move(M), twist};
}

Vec SemilinearOp::apply(const Vec& v) const {
  return M.mul_vec(frobenius_vec(v, twist));
}

Mat SemilinearOp::iterate_matrix(int k) const {
  check(k >= 0, errc::invalid_input, "negative iterate");
  Mat R = Mat::identity(M.ctx(), M.rows());
  for (int i = 0; i < k; ++i) R = R * M.frobenius_entrywise(twist * i);
  return R;
}

Fitting fitting_decomposition(const SemilinearOp& op) {
  const FieldContext& F = op.M.ctx();
  const auto n = op.dim();
  Fitting fit;
  Mat Mn = op.iterate_matrix(static_cast<int>(n));
  RrefResult rr = rref(Mn);
  fit.ss_rank = rr.rank;
  for (int pc : rr.pivot_cols)
    fit.ss_basis.push_back(Mn.column(static_cast<std::size_t>(pc)));
  for (Vec& v : kernel_basis(Mn))
    fit.nil_basis.push_back(
        frobenius_vec(v, -static_cast<long long>(n) * op.twist));
  {
    std::vector<Vec> cols = fit.ss_basis;
    cols.insert(cols.end(), fit.nil_basis.begin(), fit.nil_basis.end());
    check(cols.size() == n &&
              rank_of(Mat::from_columns(F, n, cols)) == static_cast<int>(n),
          errc::internal_check,
          "stable/nilpotent parts are not complementary");
  }
  std::vector<Vec> w = fit.nil_basis;
  int k = 0;
  auto all_zero = [&] {
    return std::all_of(w.begin(), w.end(),
                       [](const Vec& v) { return is_zero_vec(v); });
  };
  while (!all_zero()) {
    for (Vec& v : w) v = op.apply(v);
    ++k;
    check(k <= static_cast<int>(n), errc::internal_check,
          "nilpotent part not killed by the dimension-th iterate");
  }
  fit.nil_index = k;
  return fit;
}

bool is_nilpotent(const SemilinearOp& op) {
  return op.iterate_matrix(static_cast<int>(op.dim())).is_zero();
}

int nilpotency_index(const SemilinearOp& op) {
  check(is_nilpotent(op), errc::invalid_input,
        "operator is not nilpotent");
  const int n = static_cast<int>(op.dim());
  for (int k = 0; k <= n; ++k)
    if (op.iterate_matrix(k).is_zero()) return k;
  raise(errc::internal_check, "nilpotency index not found");
}

SemilinearOp restrict_to(const SemilinearOp& op,
                         const std::vector<Vec>& basis) {
  const FieldContext& F = op.M.ctx();
  Mat B = Mat::from_columns(F, op.dim(), basis);
  Mat R(F, basis.size(), basis.size());
  for (std::size_t j = 0; j < basis.size(); ++j) {
    auto lam = solve(B, op.apply(basis[j]));
    check(lam.has_value(), errc::internal_check,
          "subspace is not invariant under the operator");
    for (std::size_t i = 0; i < basis.size(); ++i) R.set(i, j, (*lam)[i]);
  }
  return SemilinearOp{std::move(R), op.twist};
}

Vec normalize_leading(const Vec& v) {
  for (const FieldElement& c : v)
    if (!c.is_zero()) {
      Vec r;
      r.reserve(v.size());
      const FieldElement s = c.inv();
      for (const FieldElement& x : v) r.push_back(x * s);
      return r;
    }
  return v;
}

FixedSpace fixed_space(const SemilinearOp& op, int max_steps) {
  check(op.twist == 1, errc::invalid_input, "fixed vectors require twist +1");
  const FieldContext& base = op.M.ctx();
  const int p = base.p();
  const int m = base.m();
  const auto n = op.dim();
  const int target = fitting_decomposition(op).ss_rank;
  const FieldContext& Fp = FieldContext::get(p, 1);
  FixedSpace best;
  best.ext = &base;
  best.ext_steps = 1;
  for (int j = 1; j <= max_steps; ++j) {
    const int d = m * j;
    if (d > 64) break;
    const FieldContext& K = FieldContext::get(p, d);
    Mat MK(K, n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) MK.set(r, c, K.embed(op.M.at(r, c)));
    const std::size_t N = n * static_cast<std::size_t>(d);
    Mat L(Fp, N, N);
    for (std::size_t i = 0; i < n; ++i)
      for (int k = 0; k < d; ++k) {
        std::vector<int> cs(static_cast<std::size_t>(d), 0);
        cs[static_cast<std::size_t>(k)] = 1;
        const FieldElement zkp = K.from_coeffs(cs).pth_power();
        for (std::size_t c2 = 0; c2 < n; ++c2) {
          const FieldElement w = MK.at(c2, i) * zkp;
          const auto& wc = w.coeffs();
          for (int t = 0; t < d; ++t)
            if (wc[static_cast<std::size_t>(t)])
              L.set(c2 * static_cast<std::size_t>(d) +
                        static_cast<std::size_t>(t),
                    i * static_cast<std::size_t>(d) +
                        static_cast<std::size_t>(k),
                    Fp.from_int(wc[static_cast<std::size_t>(t)]));
        }
      }
    std::vector<Vec> ker = kernel_basis(L - Mat::identity(Fp, N));
    check(static_cast<int>(ker.size()) <= target, errc::internal_check,
          "fixed space exceeds the stable rank");
    if (j == 1 || static_cast<int>(ker.size()) > best.fp_dim()) {
      best.ext = &K;
      best.ext_steps = j;
      best.basis.clear();
      for (const Vec& v : ker) {
        Vec vv;
        vv.reserve(n);
        for (std::size_t i = 0; i < n; ++i) {
          std::vector<int> cs(static_cast<std::size_t>(d), 0);
          for (int t = 0; t < d; ++t)
            cs[static_cast<std::size_t>(t)] = static_cast<int>(
                v[i * static_cast<std::size_t>(d) +
                  static_cast<std::size_t>(t)]
                    .coeffs()
                    .front());
          vv.push_back(K.from_coeffs(cs));
        }
        Vec img = MK.mul_vec(frobenius_vec(vv, 1));
        check(img == vv, errc::internal_check,
              "reconstructed fixed vector is not fixed");
        best.basis.push_back(std::move(vv));
      }
    }
    if (best.fp_dim() == target) {
      best.saturated = true;
      return best;
    }
  }
  best.saturated = best.fp_dim() == target;
  return best;
}

std::uint64_t count_fixed(const FixedSpace& fs) {
  check(fs.ext != nullptr, errc::invalid_input, "empty fixed space");
  const auto p = static_cast<std::uint64_t>(fs.ext->p());
  std::uint64_t r = 1;
  for (int i = 0; i < fs.fp_dim(); ++i) {
    check(r <= (std::uint64_t{1} << 62) / p, errc::invalid_input,
          "fixed-point count exceeds the supported range");
    r *= p;
  }
  return r;
}

} // namespace hycart
