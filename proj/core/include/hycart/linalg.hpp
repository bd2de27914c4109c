#ifndef HYCART_LINALG_HPP
#define HYCART_LINALG_HPP

#include <optional>
#include <vector>

#include "hycart/field.hpp"

namespace hycart {

using Vec = std::vector<FieldElement>;

Vec zero_vec(const FieldContext& ctx, std::size_t n);
bool is_zero_vec(const Vec& v);
Vec frobenius_vec(const Vec& v, long long e);

/// Dense matrix over one FieldContext, packed coefficient storage
/// (ctx.esize() bytes per entry, row major).  Exact elimination over
/// F_{p^m} is deterministic: first nonzero pivot in column order.
class Mat {
public:
  Mat() : ctx_(nullptr), r_(0), c_(0) {}
  Mat(const FieldContext& ctx, std::size_t r, std::size_t c);
  static Mat identity(const FieldContext& ctx, std::size_t n);
  static Mat from_columns(const FieldContext& ctx, std::size_t r,
                          const std::vector<Vec>& cols);

  bool valid() const { return ctx_ != nullptr; }
  const FieldContext& ctx() const;
  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }

  FieldElement at(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, const FieldElement& v);
  std::uint8_t* entry(std::size_t i, std::size_t j);
  const std::uint8_t* entry(std::size_t i, std::size_t j) const;

  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  bool operator==(const Mat& o) const;
  bool operator!=(const Mat& o) const { return !(*this == o); }
  Vec mul_vec(const Vec& v) const;
  Mat transpose() const;
  Mat frobenius_entrywise(long long e) const;
  bool is_zero() const;
  Vec column(std::size_t j) const;
  Vec row_vec(std::size_t i) const;

  // row helpers used by the elimination routines
  void swap_rows(std::size_t i, std::size_t j);
  void scale_row(std::size_t i, const FieldElement& c);
  /// row_dst -= c * row_src
  void submul_row(std::size_t dst, std::size_t src, const FieldElement& c);

private:
  const FieldContext* ctx_;
  std::size_t r_, c_;
  std::vector<std::uint8_t> d_;
};

struct RrefResult {
  Mat R;                       ///< reduced row echelon form of the input
  Mat T;                       ///< if tracked: T * input == R
  bool tracked = false;
  std::vector<int> pivot_cols; ///< pivot column per leading row
  int rank = 0;

  /// Residual of v after elimination against the rref rows (v as a row
  /// vector); zero iff v lies in the row space.
  Vec reduce(const Vec& v) const;
  /// Combination lambda with lambda * input == v, via the tracked
  /// transform; nullopt when v is outside the row space.
  std::optional<Vec> combination(const Vec& v) const;
};

RrefResult rref(Mat a, bool track_transform = false);
int rank_of(const Mat& a);
/// Solve a * x = b.
std::optional<Vec> solve(const Mat& a, const Vec& b);
/// Canonical kernel basis (one vector per free column of the rref).
std::vector<Vec> kernel_basis(const Mat& a);
std::optional<Mat> inverse(const Mat& a);

} // namespace hycart

#endif
