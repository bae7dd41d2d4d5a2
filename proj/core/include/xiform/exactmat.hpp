#pragma once

#include <cstddef>
#include <vector>

#include "xiform/matrix.hpp"
#include "xiform/poly.hpp"

namespace xiform {

/// Reduced row echelon form together with the invertible transform that produced it.
struct RowReduction {
  Matrix echelon;    ///< transform * input, in reduced row echelon form
  Matrix transform;  ///< invertible, rows x rows
  std::vector<std::size_t> pivot_columns;

  [[nodiscard]] std::size_t rank() const noexcept { return pivot_columns.size(); }
};

/// Gauss-Jordan elimination; the pivot in each column is the first nonzero
/// entry at or below the current row.
[[nodiscard]] RowReduction row_reduce(const Matrix& a);

[[nodiscard]] std::size_t rank(const Matrix& a);

/// Throws DimensionMismatch for non-square input and SingularMatrix when rank < rows.
[[nodiscard]] Matrix inverse(const Matrix& a);

/// Columns form a basis of {v : a v = 0}, one column per free variable of the echelon form.
[[nodiscard]] Matrix null_space(const Matrix& a);

/// Exact determinant by fraction-free elimination. det of the 0x0 matrix is 1.
[[nodiscard]] Scalar det(const Matrix& a);

/// det(a + t*b) as a polynomial in t, by Bareiss elimination over F[t].
/// The zero polynomial means the pencil is singular.
[[nodiscard]] Poly det_poly(const Matrix& a, const Matrix& b);

/// [r_0, ..., r_kmax] with r_k = rank((a - mu*I)^k). Once two consecutive
/// ranks agree the remainder is padded with that value.
[[nodiscard]] std::vector<std::size_t> power_rank_sequence(const Matrix& a, const Scalar& mu, std::size_t kmax);

/// a^{-T} a. Throws SingularMatrix if a is singular.
[[nodiscard]] Matrix cosquare(const Matrix& a);

}  // namespace xiform
