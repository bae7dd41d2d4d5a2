#pragma once

#include <cstddef>
#include <vector>

#include "xiform/matrix.hpp"

namespace xiform {

/// An explicit congruence S^T M S = B (+) J_{n_1}(0) (+) ... (+) J_{n_p}(0) with B
/// nonsingular (possibly 0x0) and 1 <= n_1 <= ... <= n_p.
struct RegularizationResult {
  Matrix transform;      ///< S, nonsingular n x n
  Matrix regular_part;   ///< B
  std::vector<std::size_t> singular_sizes;

  /// B (+) J_{n_1}(0) (+) ... ; equals transform^T M transform.
  [[nodiscard]] Matrix reduced_form() const;
};

/// Splits off every singular Jordan summand of the bilinear form M by an exact
/// congruence. Deterministic for a fixed input; the result is checked before
/// it is returned (InternalError on failure).
///
/// Each level works with the right kernel R of the current form f. Vectors of R
/// that are also in the left kernel become J_1(0) summands. The remaining kernel
/// vectors z pair, through f(z, .), with a dual family y. The form induced on
/// {v : f(R, v) = 0} / R is reduced recursively; each of its singular chains
/// e_1..e_m is then extended by (y, z) into a chain of length m + 2, and
/// unmatched (y, z) pairs become J_2(0) summands.
[[nodiscard]] RegularizationResult regularize(const Matrix& m);

/// True iff s is nonsingular and s^T m s = n exactly.
[[nodiscard]] bool verify_congruence(const Matrix& s, const Matrix& m, const Matrix& n);

}  // namespace xiform
