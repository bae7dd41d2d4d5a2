#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "xiform/matrix.hpp"
#include "xiform/regularize.hpp"

namespace xiform {

/// IN_XI: every isometry of the form has determinant 1.
enum class Verdict { in_xi, not_in_xi };

enum class Method { skew_fast_path, regularize, gamma_shift };

[[nodiscard]] std::string_view to_string(Verdict v) noexcept;
[[nodiscard]] std::string_view to_string(Method m) noexcept;

struct XiReport {
  Verdict verdict = Verdict::in_xi;
  Method method = Method::regularize;
  std::vector<std::size_t> singular_sizes;
  /// r_k = rank((C - mu I)^k) of the cosquare-like operator; empty when not computed.
  std::vector<std::size_t> rank_sequence;
  /// c_k = r_{2k} - 2 r_{2k+1} + r_{2k+2}: number of Jordan blocks of size 2k+1 at mu.
  std::vector<std::size_t> odd_block_counts;
  std::optional<Scalar> gamma_used;
  /// An isometry with determinant -1, when one was constructed.
  std::optional<Matrix> certificate;
  std::optional<RegularizationResult> regularization;
};

struct DecideOptions {
  /// Stop early with IN_XI when M - M^T is nonsingular.
  bool use_fast_path = true;
};

/// Membership test:
///  1. M - M^T nonsingular: IN_XI.
///  2. Regularize; any odd singular block: NOT_IN_XI, with a certificate.
///  3. Otherwise IN_XI iff the cosquare of the regular part has no Jordan block
///     J_{2k+1}(1), read off the rank sequence.
[[nodiscard]] XiReport decide(const Matrix& m, const DecideOptions& options = {});

/// IN_XI when rank(M - M^T) = n, otherwise no decision.
[[nodiscard]] std::optional<Verdict> skew_fast_path(const Matrix& m);

struct UnipotentCounts {
  std::vector<std::size_t> ranks;       ///< r_0 .. r_{2K+2}
  std::vector<std::size_t> odd_blocks;  ///< c_0 .. c_K
};

/// Rank sequence of B^{-T}B - I and the number of Jordan blocks J_{2k+1}(1) of
/// the cosquare for k = 0..max_k. Throws SingularMatrix for singular B.
[[nodiscard]] UnipotentCounts odd_unipotent_counts(const Matrix& b, std::size_t max_k);
/// Same with max_k = floor((size(B) - 1) / 2), or 0 for the empty matrix.
[[nodiscard]] UnipotentCounts odd_unipotent_counts(const Matrix& b);

/// c_k = r_{2k} - 2 r_{2k+1} + r_{2k+2} for k = 0..max_k. The sequence must have
/// at least 2*max_k + 3 entries.
[[nodiscard]] std::vector<std::size_t> odd_counts_from_ranks(const std::vector<std::size_t>& ranks, std::size_t max_k);

/// Independent route through the pencil (M^T, M): a singular pencil means an odd
/// singular summand; otherwise pick gamma != -1 with M^T + gamma M nonsingular and
/// count odd Jordan blocks of (M^T + gamma M)^{-1} M at (1 + gamma)^{-1}.
/// Throws GammaExhausted over a finite field with no admissible gamma.
[[nodiscard]] XiReport decide_gamma_shift(const Matrix& m);

/// S D S^{-1}, where S = reg.transform and D negates the coordinates of the first
/// odd singular block. Throws NoOddBlock if every singular block is even.
[[nodiscard]] Matrix certificate_singular(const Matrix& m, const RegularizationResult& reg);

/// True iff s^T m s = m, s is nonsingular, and det(s) = -1.
[[nodiscard]] bool verify_certificate(const Matrix& m, const Matrix& s);

}  // namespace xiform
