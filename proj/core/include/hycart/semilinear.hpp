#pragma once

#include <cstdint>
#include <vector>

#include "hycart/linalg.hpp"

namespace hycart {

// The additive map v -> M . v^(p^e) on F_{p^m}^n, with e = +1 (Frobenius
// twist) or e = -1 (inverse twist, as for Cartier-type maps).
struct SemilinearOp {
  Mat M;
  long long twist = 1;

  static SemilinearOp make(Mat M, long long twist);
  std::size_t dim() const { return M.rows(); }
  Vec apply(const Vec& v) const;
  // Matrix of the k-th iterate: M . M^(sigma^e) . ... . M^(sigma^((k-1)e)).
  Mat iterate_matrix(int k) const;
};

// Image/kernel decomposition of the n-th iterate: the operator is
// bijective on the span of ss_basis and nilpotent on the span of
// nil_basis, and the two parts are complementary.
struct Fitting {
  int ss_rank = 0;
  std::vector<Vec> ss_basis;
  std::vector<Vec> nil_basis;
  int nil_index = 0; // least k killing every nil basis vector
};
Fitting fitting_decomposition(const SemilinearOp& op);

bool is_nilpotent(const SemilinearOp& op);
// Least k with the k-th iterate zero; requires a nilpotent operator.
int nilpotency_index(const SemilinearOp& op);

// Matrix of op on an invariant subspace, written in the given basis.
SemilinearOp restrict_to(const SemilinearOp& op, const std::vector<Vec>& basis);

// Scale v so that its first nonzero coordinate is 1.
Vec normalize_leading(const Vec& v);

struct FixedSpace {
  const FieldContext* ext = nullptr; // field the basis lives in
  int ext_steps = 1;                 // degree of ext over the base field
  std::vector<Vec> basis;            // F_p-independent fixed vectors
  bool saturated = false;            // F_p-dimension reached the stable rank
  int fp_dim() const { return static_cast<int>(basis.size()); }
};

// Solutions of v = M v^(p) over the base field and its extensions,
// enlarging the field until the F_p-dimension of the solution space
// reaches the stable rank of the operator.  When the cap is reached
// first, the best field found is returned with saturated = false.
// Requires twist +1.
FixedSpace fixed_space(const SemilinearOp& op, int max_steps = 8);

// Number of fixed vectors, p^(F_p-dimension).
std::uint64_t count_fixed(const FixedSpace& fs);

} // namespace hycart
