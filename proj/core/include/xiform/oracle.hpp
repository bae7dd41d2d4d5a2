#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "xiform/decide.hpp"
#include "xiform/matrix.hpp"

namespace xiform {

/// Tally of the isometry group {S nonsingular : S^T M S = M} of a form over F_p.
struct IsometrySummary {
  std::uint64_t group_order = 0;
  /// Multiset of determinants: residue -> multiplicity.
  std::map<std::uint32_t, std::uint64_t> det_values;
  bool all_det_one = true;

  /// Associative, commutative combination of two partial scans.
  IsometrySummary& merge(const IsometrySummary& other);
};

/// Largest p^{n^2} the oracle will scan: 3^16, enough for M_4(F_3) and M_3(F_5).
inline constexpr std::uint64_t default_enumeration_limit = 43'046'721;

/// Number of candidate matrices p^{n^2}, saturating at UINT64_MAX.
[[nodiscard]] std::uint64_t matrix_space_size(std::uint32_t p, std::size_t n);

/// |GL_n(F_p)| = prod_{i<n} (p^n - p^i).
[[nodiscard]] std::uint64_t general_linear_order(std::size_t n, std::uint32_t p);

/// The index-th matrix of M_n(F_p) in base-p order, row-major, first entry most significant.
[[nodiscard]] Matrix matrix_from_index(Field f, std::size_t n, std::uint64_t index);

/// Enumerates the isometry group of m over F_p. Candidates S are built column by
/// column; a partial S is abandoned as soon as a new column is linearly dependent
/// on the earlier ones or breaks one of the entries of S^T M S = M it determines.
/// This visits every element of M_n(F_p) that could still be an isometry.
/// Throws UnsupportedField over Q and BudgetExceeded when p^{n^2} > limit.
/// `threads` = 0 picks the hardware concurrency.
[[nodiscard]] IsometrySummary enumerate_isometries(const Matrix& m, std::uint64_t limit = default_enumeration_limit,
                                                   unsigned threads = 0);

/// Every isometry of m, in enumeration order.
[[nodiscard]] std::vector<Matrix> list_isometries(const Matrix& m, std::uint64_t limit = default_enumeration_limit);

/// Membership by definition: IN_XI iff every isometry has determinant 1.
[[nodiscard]] Verdict oracle_verdict(const Matrix& m, std::uint64_t limit = default_enumeration_limit,
                                     unsigned threads = 0);

/// Uniform entries over F_p, or integers in [-bound, bound] over Q.
[[nodiscard]] Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng,
                                   long long bound = 3);
/// Rejection-samples random_matrix until it is nonsingular.
[[nodiscard]] Matrix random_nonsingular(Field f, std::size_t n, std::mt19937_64& rng, long long bound = 3);

struct Congruence {
  Matrix transform;  ///< T
  Matrix image;      ///< T^T M T
};

/// T^T M T for a nonsingular T drawn deterministically from `seed`.
[[nodiscard]] Congruence random_congruence(const Matrix& m, std::uint64_t seed, long long bound = 3);

}  // namespace xiform
