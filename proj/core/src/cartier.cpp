#include "hycart/cartier.hpp"

#include <algorithm>

#include "hycart/error.hpp"

namespace hycart {

LaurentPoly cartier_monomial_part(const LaurentPoly& a) {
  const FieldContext& F = a.ctx();
  const int p = F.p();
  LaurentPoly out(F);
  for (const auto& [e, c] : a.terms()) {
    if (((e % p) + p) % p != p - 1) continue;
    out.add_term((e - (p - 1)) / p, c.pth_root());
  }
  return out;
}

ChartFunction cartier_chart(const ChartFunction& c) {
  const Curve& C = c.curve;
  return ChartFunction(C, cartier_monomial_part(c.A * C.f_half()),
                       cartier_monomial_part(c.B));
}

Mat hasse_witt_matrix(const Curve& C) {
  const int g = C.genus();
  std::vector<Vec> cols;
  for (int j = 0; j < g; ++j) {
    ChartFunction w = cartier_chart(ChartFunction::x_power(C, j));
    check(w.B.is_zero() && w.A.supported_ge(0) && w.A.supported_le(g - 1),
          errc::internal_check,
          "Cartier image of a regular differential must be regular");
    Vec col;
    for (int i = 0; i < g; ++i) col.push_back(w.A.coeff(i));
    cols.push_back(std::move(col));
  }
  return Mat::from_columns(C.ctx(), static_cast<std::size_t>(g), cols);
}

SemilinearOp hasse_witt_op(const Curve& C) {
  return SemilinearOp::make(hasse_witt_matrix(C), -1);
}

int p_rank(const Curve& C) {
  return fitting_decomposition(hasse_witt_op(C)).ss_rank;
}

FieldElement serre_pairing(const Section& c, const Section& mu) {
  check(c.size() == mu.size() && !c.empty(), errc::invalid_input,
        "pairing needs sections of equal positive rank");
  FieldElement acc = c.front().curve.ctx().zero();
  for (std::size_t i = 0; i < c.size(); ++i) {
    ChartFunction prod = c[i] * mu[i];
    if (!prod.is_zero()) acc += residue_at_origin(prod);
  }
  return acc;
}

FieldElement serre_pairing_trivial(const ChartFunction& c,
                                   const ChartFunction& mu) {
  return serre_pairing(Section{c}, Section{mu});
}

Mat serre_pairing_matrix(const Curve& C) {
  const int g = C.genus();
  Mat M(C.ctx(), static_cast<std::size_t>(g), static_cast<std::size_t>(g));
  for (int i = 0; i < g; ++i)
    for (int j = 0; j < g; ++j)
      M.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j),
            serre_pairing_trivial(ChartFunction::y_x_power(C, -g + i),
                                  ChartFunction::x_power(C, j)));
  return M;
}

Gauge make_gauge(const Bundle& E, OverlapMat g0, OverlapMat g1) {
  const Curve& C = E.curve;
  check(g0.valid() && g1.valid() && g0.size() == E.rank() &&
            g1.size() == E.rank(),
        errc::invalid_input, "gauge size mismatch");
  check(g0.curve().compatible(C) && g1.curve().compatible(C),
        errc::invalid_input, "gauge on a different curve");
  const auto [maxA, maxB] = u1_function_bounds(C.genus());
  for (std::size_t i = 0; i < E.rank(); ++i)
    for (std::size_t j = 0; j < E.rank(); ++j) {
      check(g0.at(i, j).regular_on_u0(), errc::invalid_input,
            "g0 entries must be regular on U0");
      check(g1.at(i, j).u1_bounded(maxA, maxB), errc::invalid_input,
            "g1 entries must be regular on U1");
    }
  check(g0 * E.A.power_p() == E.A * g1, errc::invalid_input,
        "gauge does not intertwine the transition matrices");
  OverlapMat g0inv = g0.inverse();
  OverlapMat g1inv = g1.inverse();
  return Gauge{std::move(g0), std::move(g1), std::move(g0inv),
               std::move(g1inv)};
}

FrobeniusBundle FrobeniusBundle::dual() const {
  Bundle ED = E.dual();
  return FrobeniusBundle{
      ED, make_gauge(ED, tau.g0inv.transpose(), tau.g1inv.transpose())};
}

FrobeniusBundle trivial_frobenius_bundle(const Curve& C) {
  Bundle E = Bundle::trivial(C, 1);
  Gauge g = make_gauge(E, OverlapMat::identity(C, 1),
                       OverlapMat::identity(C, 1));
  return FrobeniusBundle{std::move(E), std::move(g)};
}

namespace {

Section cartier_chart_each(const Section& s) {
  Section r;
  r.reserve(s.size());
  for (const auto& c : s) r.push_back(cartier_chart(c));
  return r;
}

} // namespace

Section cartier_image(const FrobeniusBundle& FB, const Section& h) {
  Section d0 = cartier_chart_each(apply_mat(FB.tau.g0inv, h));
  Section d1 =
      cartier_chart_each(apply_mat(FB.tau.g1inv, apply_mat(FB.E.Ainv, h)));
  check(equal(d0, apply_mat(FB.E.A, d1)), errc::gluing_violated,
        "Cartier images do not glue across the charts");
  return d0;
}

H0Operator cartier_on_h0_differentials(const FrobeniusBundle& FB) {
  SectionSpace S = sections(FB.E, Twist::differentials);
  std::vector<Vec> cols;
  for (const Section& h : S.basis()) cols.push_back(S.coords(cartier_image(FB, h)));
  Mat M = Mat::from_columns(FB.E.curve.ctx(),
                            static_cast<std::size_t>(S.dim()), cols);
  return H0Operator{std::move(S), SemilinearOp::make(std::move(M), -1)};
}

H0Operator frobenius_on_h0(const FrobeniusBundle& FB) {
  const Curve& C = FB.E.curve;
  const int p = C.ctx().p();
  int min_window = 0;
  for (int attempt = 0;; ++attempt) {
    SectionSpace S = sections(FB.E, Twist::functions, min_window);
    try {
      std::vector<Vec> cols;
      for (const Section& h : S.basis())
        cols.push_back(S.coords(apply_mat(FB.tau.g0, power_p(h))));
      Mat M = Mat::from_columns(C.ctx(), static_cast<std::size_t>(S.dim()),
                                cols);
      return H0Operator{std::move(S), SemilinearOp::make(std::move(M), 1)};
    } catch (const error& e) {
      if (e.code() != errc::invalid_input || attempt >= 3) throw;
      min_window = std::max(2 * min_window,
                            p * S.window() + FB.tau.g0.max_abs_exp() +
                                2 * C.genus() + 2);
    }
  }
}

H1Operator frobenius_on_h1(const FrobeniusBundle& FB) {
  const Curve& C = FB.E.curve;
  const int p = C.ctx().p();
  int min_window = 0;
  for (int attempt = 0;; ++attempt) {
    H1Space S = h1_space(FB.E, Twist::functions, min_window);
    try {
      std::vector<Vec> cols;
      for (const Section& b : S.basis())
        cols.push_back(S.coords(apply_mat(FB.tau.g0, power_p(b))));
      Mat M = Mat::from_columns(C.ctx(), static_cast<std::size_t>(S.dim()),
                                cols);
      return H1Operator{std::move(S), SemilinearOp::make(std::move(M), 1)};
    } catch (const error& e) {
      if (e.code() != errc::invalid_input || attempt >= 3) throw;
      min_window = std::max(2 * min_window,
                            p * S.window() + FB.tau.g0.max_abs_exp() +
                                2 * C.genus() + 2);
    }
  }
}

NilpotencyReport cartier_nilpotency(const FrobeniusBundle& FB) {
  H0Operator co = cartier_on_h0_differentials(FB);
  Fitting fit = fitting_decomposition(co.op);
  NilpotencyReport r;
  r.ss_rank = fit.ss_rank;
  r.dim = co.space.dim();
  r.nilpotent = fit.ss_rank == 0;
  r.order = r.nilpotent ? fit.nil_index : 0;
  return r;
}

std::optional<int> chain_nilpotency(const Bundle& E, int max_depth) {
  check(max_depth >= 1, errc::invalid_input, "depth must be positive");
  const Curve& C = E.curve;
  const FieldContext& F = C.ctx();
  std::vector<Bundle> pulls;
  pulls.push_back(E);
  for (int i = 1; i <= max_depth; ++i) {
    OverlapMat Ai = E.A.power_p_iter(i);
    check(Ai.max_abs_exp() <= 2000, errc::invalid_input,
          "depth too large for the gauge-free recompute");
    pulls.push_back(Bundle::make(C, Ai));
  }
  std::vector<SectionSpace> sp;
  sp.reserve(pulls.size());
  for (const Bundle& b : pulls) sp.push_back(sections(b, Twist::differentials));
  auto step_matrix = [&](int i) {
    std::vector<Vec> cols;
    for (const Section& h : sp[static_cast<std::size_t>(i)].basis()) {
      Section d0 = cartier_chart_each(h);
      Section d1 = cartier_chart_each(
          apply_mat(pulls[static_cast<std::size_t>(i)].Ainv, h));
      check(equal(d0, apply_mat(pulls[static_cast<std::size_t>(i - 1)].A, d1)),
            errc::gluing_violated,
            "Cartier images do not glue across the charts");
      cols.push_back(sp[static_cast<std::size_t>(i - 1)].coords(d0));
    }
    return Mat::from_columns(
        F, static_cast<std::size_t>(sp[static_cast<std::size_t>(i - 1)].dim()),
        cols);
  };
  Mat N = step_matrix(1);
  if (N.is_zero()) return 1;
  for (int k = 2; k <= max_depth; ++k) {
    N = N * step_matrix(k).frobenius_entrywise(-(k - 1));
    if (N.is_zero()) return k;
  }
  return std::nullopt;
}

} // namespace hycart
