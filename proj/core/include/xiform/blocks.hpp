#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "xiform/matrix.hpp"
#include "xiform/poly.hpp"

namespace xiform {

/// A power p(x)^l of a monic polynomial p of degree s >= 1, with l >= 1.
class PolySpec {
 public:
  /// Throws std::invalid_argument unless poly is monic of degree >= 1 and power >= 1.
  PolySpec(Poly poly, unsigned power);

  [[nodiscard]] const Poly& poly() const noexcept { return poly_; }
  [[nodiscard]] unsigned power() const noexcept { return power_; }
  /// m = deg(p) * l, the size of the Frobenius block.
  [[nodiscard]] std::size_t size() const noexcept { return static_cast<std::size_t>(poly_.degree()) * power_; }
  [[nodiscard]] Poly expanded() const { return poly_.pow(power_); }

 private:
  Poly poly_;
  unsigned power_;
};

/// J_r(lambda): lambda on the diagonal, ones on the first subdiagonal.
[[nodiscard]] Matrix jordan(std::size_t r, const Scalar& lambda);

/// Gamma_r: entry (i,j) (1-based) is (-1)^{i+1} when i+j is r+1 or r+2, else 0.
/// Verifies on construction that the cosquare is a single Jordan block at
/// eigenvalue (-1)^{r+1}; throws InternalError otherwise.
[[nodiscard]] Matrix gamma(std::size_t r, Field f = Field::rationals());

/// Companion matrix of p^l: ones on the subdiagonal, last column (-c_m, ..., -c_1)
/// where p^l = x^m + c_1 x^{m-1} + ... + c_m.
[[nodiscard]] Matrix frobenius(const PolySpec& spec);

/// p^v(x) = p(0)^{-1} x^s p(1/x). Throws ZeroConstantTerm if p(0) = 0.
[[nodiscard]] Poly reciprocal(const Poly& p);

/// Whether Phi_{p^l} is a cosquare: p != x, p != x + (-1)^{m+1}, and p is self-reciprocal.
[[nodiscard]] bool is_cosquare_block(const PolySpec& spec);

/// [[0, b], [a, 0]]: b in the upper-right, a in the lower-left.
[[nodiscard]] Matrix skew_sum(const Matrix& a, const Matrix& b);

/// Block-diagonal assembly of square parts. An empty list gives the 0x0 matrix over `f`.
[[nodiscard]] Matrix direct_sum(const std::vector<Matrix>& parts, Field f = Field::rationals());

/// Z_{2m} = [[0, I_m], [-I_m, 0]].
[[nodiscard]] Matrix symplectic_unit(std::size_t m, Field f = Field::rationals());

/// (F_t, G_t), both (t-1) x t: F_t has ones at (i,i), G_t at (i,i+1).
[[nodiscard]] std::pair<Matrix, Matrix> kronecker_pair_blocks(std::size_t t, Field f = Field::rationals());

/// All monic irreducible polynomials of the given degree over a prime field, in
/// lexicographic order of the tail coefficients. Brute force; intended for small p and degree.
[[nodiscard]] std::vector<Poly> monic_irreducibles(Field f, unsigned degree);

}  // namespace xiform
