#pragma once

#include <optional>

#include "hycart/cech.hpp"
#include "hycart/semilinear.hpp"

namespace hycart {

// Part-wise Cartier rule: keeps exponents congruent to p-1 mod p and
// maps c x^{p j + p - 1} to c^{1/p} x^j.
LaurentPoly cartier_monomial_part(const LaurentPoly& a);
// Image of the differential (A + B y) omega0 under the Cartier map,
// again written as a multiple of omega0: the x-part goes through
// A f^((p-1)/2), the y-part through B directly.
ChartFunction cartier_chart(const ChartFunction& c);

// Matrix of the Cartier map on omega0, x omega0, ..., x^{g-1} omega0:
// the image of sum_j c_j x^j omega0 has coordinates M . c^(1/p)
// (twist -1).
Mat hasse_witt_matrix(const Curve& C);
SemilinearOp hasse_witt_op(const Curve& C);
int p_rank(const Curve& C);

// Pairing of an overlap cochain against a differential section:
// the sum over components of res_O(c_i mu_i omega0).  It only depends
// on the H^1 class of c and is adjoint to the p-th power map.
FieldElement serre_pairing(const Section& c, const Section& mu);
FieldElement serre_pairing_trivial(const ChartFunction& c,
                                   const ChartFunction& mu);
// Rows: the trivial H^1 basis classes y x^{-g} .. y x^{-1}; columns:
// omega0 .. x^{g-1} omega0.
Mat serre_pairing_matrix(const Curve& C);

// An isomorphism from the Frobenius pullback of E to E, given by chart
// matrices (g0, g1) with g0 A^(p) = A g1; g0 acts on U0 frames and has
// U0-regular entries, g1 acts on U1 frames.
struct Gauge {
  OverlapMat g0, g1;
  OverlapMat g0inv, g1inv;
};
Gauge make_gauge(const Bundle& E, OverlapMat g0, OverlapMat g1);

struct FrobeniusBundle {
  Bundle E;
  Gauge tau;
  FrobeniusBundle dual() const;
};
// The structure sheaf with the identity gauge.
FrobeniusBundle trivial_frobenius_bundle(const Curve& C);

struct H0Operator {
  SectionSpace space;
  SemilinearOp op;
};
struct H1Operator {
  H1Space space;
  SemilinearOp op;
};

// The Cartier map transported through the gauge, acting on sections of
// Omega tensor E (twist -1).  Every image is computed on both charts and
// certified to glue across them (gluing_violated otherwise) and to land
// in the section space again.
H0Operator cartier_on_h0_differentials(const FrobeniusBundle& FB);
// The single-section image of the map above, with its certificates.
Section cartier_image(const FrobeniusBundle& FB, const Section& h);
// h -> g0 h^(p) on H0(E); twist +1.
H0Operator frobenius_on_h0(const FrobeniusBundle& FB);
// [z] -> [g0 z^(p)] on H1(E); twist +1.
H1Operator frobenius_on_h1(const FrobeniusBundle& FB);

struct NilpotencyReport {
  bool nilpotent = false;
  int order = 0;   // least k with the k-th iterate zero, when nilpotent
  int ss_rank = 0; // stable rank of the operator
  int dim = 0;     // dimension of the section space acted on
};
NilpotencyReport cartier_nilpotency(const FrobeniusBundle& FB);

// Gauge-free recompute: the composite of the plain Cartier maps between
// the section spaces of Omega tensor the iterated Frobenius pullbacks
// of E.  Returns the least depth at which the composite vanishes, or
// nullopt if it stays nonzero through max_depth.
std::optional<int> chain_nilpotency(const Bundle& E, int max_depth);

} // namespace hycart
