#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hycart/curve.hpp"
#include "hycart/linalg.hpp"

namespace hycart {

// ---------------------------------------------------------------------------
// H^1 of the structure sheaf, computed on the two-chart cover {U0, U1}.
//
// A cocycle is a function c on the overlap.  Its class is determined by the
// y-part coefficients of x^{-g} .. x^{-1}; everything else splits into a
// U0-regular and a U1-regular piece.  Class coordinates are listed with
// exponents ascending, so index 0 is the coefficient of y x^{-g}.
// ---------------------------------------------------------------------------

Vec h1_trivial_coords(const ChartFunction& c);
ChartFunction h1_trivial_rep(const Curve& C, const Vec& beta);
bool is_coboundary_trivial(const ChartFunction& c);
// c = first + second with first regular on U0 and second regular on U1.
// Requires the class of c to vanish.
std::pair<ChartFunction, ChartFunction> coboundary_split_trivial(
    const ChartFunction& c);
// Matrix M of the p-th power map on classes: [c] -> [c^p] has coordinates
// M . (beta^(p)).  (Semilinear, Frobenius twist on the argument.)
Mat frobenius_on_h1_trivial(const Curve& C);

// ---------------------------------------------------------------------------
// Square matrices of functions on the overlap U0 cap U1: transition
// matrices of bundles on the two-chart cover and the gauges acting on
// them.  Entries may involve y.
// ---------------------------------------------------------------------------

class OverlapMat {
public:
  OverlapMat() : n_(0) {}
  OverlapMat(const Curve& C, std::size_t n);
  static OverlapMat identity(const Curve& C, std::size_t n);
  static OverlapMat scalar(const Curve& C, std::size_t n,
                           const LaurentPoly& u);

  bool valid() const { return n_ != 0; }
  const Curve& curve() const;
  std::size_t size() const { return n_; }

  const ChartFunction& at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, ChartFunction v);
  void set(std::size_t i, std::size_t j, LaurentPoly xpart);

  OverlapMat operator*(const OverlapMat& o) const;
  bool operator==(const OverlapMat& o) const;
  bool operator!=(const OverlapMat& o) const { return !(*this == o); }
  bool is_identity() const;

  OverlapMat transpose() const;
  OverlapMat scaled(const LaurentPoly& u) const; // entrywise * u
  // Entrywise p-th power as functions on the curve.
  OverlapMat power_p() const;
  OverlapMat power_p_iter(int k) const;
  // Entrywise coefficient Frobenius a -> a^(p^e); exponents unchanged.
  OverlapMat frobenius_coeffs(long long e) const;

  int max_abs_exp() const;
  ChartFunction det() const;
  // Requires det = c x^k (the only units on the overlap); raises
  // invalid_input otherwise.
  OverlapMat inverse() const;
  // (c, k) with det = c x^k.
  std::pair<FieldElement, int> det_unit() const;

  std::string str() const;

private:
  std::vector<ChartFunction> e_; // row major, n_ * n_ entries
  std::size_t n_;
};

// A rank-n bundle presented by its transition matrix on the overlap:
// a frame over U0 equals A times a frame over U1.
struct Bundle {
  Curve curve;
  OverlapMat A;
  OverlapMat Ainv;
  FieldElement det_coeff;
  int det_exp = 0;

  static Bundle make(const Curve& C, const OverlapMat& A);
  static Bundle trivial(const Curve& C, std::size_t n = 1);
  static Bundle line(const Curve& C, const LaurentPoly& u); // rank 1
  std::size_t rank() const { return A.size(); }
  int degree() const { return 2 * det_exp; }
  Bundle dual() const;
};

// A tuple of chart functions: the components of a section (or cochain) of
// a rank-n bundle written in the U0 frame.  For differential data the
// components are coefficients with respect to omega0 = dx/y.
using Section = std::vector<ChartFunction>;

Section section_zero(const Bundle& E);
Section apply_mat(const OverlapMat& M, const Section& s);
Section add(const Section& a, const Section& b);
Section sub(const Section& a, const Section& b);
Section scaled(const Section& a, const FieldElement& c);
Section power_p(const Section& a);
bool is_zero(const Section& a);
bool equal(const Section& a, const Section& b);
int max_abs_exp(const Section& a);

// Which sheaf the solver works with.  `functions` means E itself;
// `differentials` means Omega^1 tensor E, components written as
// multiples of omega0.
enum class Twist { functions, differentials };
// (maxA, maxB): a component A + B y is regular over U1 for the given
// twist iff supp(A) <= maxA and supp(B) <= maxB after applying Ainv.
std::pair<int, int> twist_bounds(const Curve& C, Twist t);

// ---------------------------------------------------------------------------
// Global sections via a bounded-exponent solve.  Basis vectors are
// canonical kernel vectors of the U1-constraint matrix; `coords` expresses
// an arbitrary section in that basis.
// ---------------------------------------------------------------------------

class SectionSpace {
public:
  const Bundle& bundle() const { return E_; }
  Twist twist() const { return twist_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  int window() const { return D_; }
  const std::vector<Section>& basis() const { return basis_; }
  Vec coords(const Section& s) const;
  Section from_coords(const Vec& c) const;
  // Certificate: s is regular over U0 and, after Ainv, within the twist
  // bounds over U1.
  bool contains(const Section& s) const;

private:
  friend class CechSolver;
  SectionSpace(Bundle E, Twist t, int D);
  Vec flatten(const Section& s) const;

  Bundle E_;
  Twist twist_;
  int D_;
  std::vector<Section> basis_;
  RrefResult basis_rref_; // rows = flattened basis vectors
};

// ---------------------------------------------------------------------------
// H^1 via the overlap cochains.  Only the pole part of a cochain matters
// modulo U0-regular vectors, so the solver works with the coefficients at
// exponents [-D, -1] per component and part.  The image of the U1 side is
// spanned by A . m e_i over the U1-regular monomials m; generators whose
// support leaves the window are postponed to a larger window, and the
// window is grown until the dimensions stabilise and the degree check
// h0 - h1 = deg + n (1 - g) holds.
//
// Basis classes are single monomials x^e e_i or y x^e e_i at the free
// positions of the generator elimination; coordinates list the x-part
// classes first, exponents ascending, then the y-part classes.
// ---------------------------------------------------------------------------

class H1Space {
public:
  const Bundle& bundle() const { return E_; }
  Twist twist() const { return twist_; }
  int dim() const { return dim_; }
  int window() const { return D_; }
  const std::vector<Section>& basis() const { return basis_; }
  Vec coords(const Section& z) const;
  Section from_coords(const Vec& c) const;
  bool is_coboundary(const Section& z) const;

  struct Witness {
    Section h0; // regular on U0
    Section u1; // U1 frame, within the twist bounds
  };
  // z = h0 + A . u1; requires the class of z to vanish.
  Witness witness(const Section& z) const;

  // Reduce z modulo coboundaries so that the listed components vanish;
  // nullopt when no representative of the class does.
  std::optional<Section> representative_vanishing_on(
      const Section& z, const std::vector<std::size_t>& comps) const;

private:
  friend class CechSolver;
  H1Space(Bundle E, Twist t, int D);

  Vec flatten(const Section& z) const;
  int col_of(int comp, int exp, bool ypart) const;
  Section section_of_gens(const Vec& lambda) const;

  Bundle E_;
  Twist twist_;
  int D_;
  int dim_ = 0;
  RrefResult rr_;              // rows = projected U1-side generators
  std::vector<int> gen_comp_;  // component of each generator
  std::vector<int> gen_shift_; // x^{-j} shift of each generator
  std::vector<bool> gen_y_;    // generator monomial carries y
  std::vector<int> free_cols_; // non-pivot positions
  std::vector<Section> basis_;
};

struct Cohomology {
  SectionSpace h0;
  H1Space h1;
};

// Solve both spaces at a common stabilised window.  min_window forces a
// larger window (useful when classes with deep poles will be reduced
// against the result).  Raises window_not_stabilized if the dimensions
// keep moving past the enlargement cap.
Cohomology cohomology(const Bundle& E, Twist t, int min_window = 0);
SectionSpace sections(const Bundle& E, Twist t, int min_window = 0);
H1Space h1_space(const Bundle& E, Twist t, int min_window = 0);

} // namespace hycart
