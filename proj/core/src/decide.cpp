#include "xiform/decide.hpp"

#include <algorithm>

#include "xiform/errors.hpp"
#include "xiform/exactmat.hpp"

namespace xiform {

namespace {

std::size_t max_k_for(std::size_t n) { return n == 0 ? 0 : (n - 1) / 2; }

bool has_odd(const std::vector<std::size_t>& sizes) {
  return std::any_of(sizes.begin(), sizes.end(), [](std::size_t s) { return s % 2 == 1; });
}

bool any_positive(const std::vector<std::size_t>& counts) {
  return std::any_of(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; });
}

}  // namespace

std::string_view to_string(Verdict v) noexcept { return v == Verdict::in_xi ? "IN_XI" : "NOT_IN_XI"; }

std::string_view to_string(Method m) noexcept {
  switch (m) {
    case Method::skew_fast_path:
      return "SKEW_FAST_PATH";
    case Method::regularize:
      return "REGULARIZE";
    case Method::gamma_shift:
      return "GAMMA_SHIFT";
  }
  return "UNKNOWN";
}

std::optional<Verdict> skew_fast_path(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("skew_fast_path: matrix is not square");
  if (rank(m - m.transpose()) == m.rows()) return Verdict::in_xi;
  return std::nullopt;
}

std::vector<std::size_t> odd_counts_from_ranks(const std::vector<std::size_t>& ranks, std::size_t max_k) {
  if (ranks.size() < 2 * max_k + 3) throw std::invalid_argument("odd_counts_from_ranks: rank sequence too short");
  std::vector<std::size_t> counts;
  counts.reserve(max_k + 1);
  for (std::size_t k = 0; k <= max_k; ++k) {
    // Weyr monotonicity makes this nonnegative.
    const std::size_t plus = ranks[2 * k] + ranks[2 * k + 2];
    const std::size_t minus = 2 * ranks[2 * k + 1];
    if (plus < minus) throw_internal("rank sequence violates Weyr monotonicity");
    counts.push_back(plus - minus);
  }
  return counts;
}

UnipotentCounts odd_unipotent_counts(const Matrix& b, std::size_t max_k) {
  if (!b.is_square()) throw DimensionMismatch("odd_unipotent_counts: matrix is not square");
  UnipotentCounts out;
  const Matrix c = b.rows() == 0 ? b : cosquare(b);
  out.ranks = power_rank_sequence(c, Scalar::one(b.field()), 2 * max_k + 2);
  out.odd_blocks = odd_counts_from_ranks(out.ranks, max_k);
  return out;
}

UnipotentCounts odd_unipotent_counts(const Matrix& b) { return odd_unipotent_counts(b, max_k_for(b.rows())); }

XiReport decide(const Matrix& m, const DecideOptions& options) {
  if (!m.is_square()) throw DimensionMismatch("decide: matrix is not square");
  if (m.field().characteristic() == 2) throw UnsupportedField("decide: characteristic 2");
  XiReport report;
  if (options.use_fast_path && skew_fast_path(m)) {
    report.verdict = Verdict::in_xi;
    report.method = Method::skew_fast_path;
    return report;
  }
  report.method = Method::regularize;
  RegularizationResult reg = regularize(m);
  report.singular_sizes = reg.singular_sizes;
  if (has_odd(reg.singular_sizes)) {
    report.verdict = Verdict::not_in_xi;
    report.certificate = certificate_singular(m, reg);
  } else {
    UnipotentCounts counts = odd_unipotent_counts(reg.regular_part, max_k_for(m.rows()));
    report.rank_sequence = std::move(counts.ranks);
    report.odd_block_counts = std::move(counts.odd_blocks);
    report.verdict = any_positive(report.odd_block_counts) ? Verdict::not_in_xi : Verdict::in_xi;
  }
  report.regularization = std::move(reg);
  return report;
}

XiReport decide_gamma_shift(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("decide_gamma_shift: matrix is not square");
  const Field f = m.field();
  const std::size_t n = m.rows();
  XiReport report;
  report.method = Method::gamma_shift;
  if (n == 0) return report;

  const Matrix mt = m.transpose();
  const Poly pencil = det_poly(mt, m);
  if (pencil.is_zero()) {
    report.verdict = Verdict::not_in_xi;
    return report;
  }

  const Scalar minus_one = -Scalar::one(f);
  std::optional<Scalar> gamma;
  for (long long g = 0;; ++g) {
    if (f.is_finite() && g >= static_cast<long long>(f.characteristic())) break;
    Scalar candidate = Scalar::from_int(f, g);
    if (candidate == minus_one) continue;
    if (!pencil.evaluate(candidate).is_zero()) {
      gamma = std::move(candidate);
      break;
    }
  }
  if (!gamma) throw GammaExhausted("decide_gamma_shift: every gamma in " + f.name() + " makes M^T + gamma M singular");

  const Matrix shifted = inverse(mt + m * *gamma) * m;
  const Scalar mu = (Scalar::one(f) + *gamma).inverse();
  const std::size_t max_k = max_k_for(n);
  report.rank_sequence = power_rank_sequence(shifted, mu, 2 * max_k + 2);
  report.odd_block_counts = odd_counts_from_ranks(report.rank_sequence, max_k);
  report.verdict = any_positive(report.odd_block_counts) ? Verdict::not_in_xi : Verdict::in_xi;
  report.gamma_used = std::move(gamma);
  return report;
}

Matrix certificate_singular(const Matrix& m, const RegularizationResult& reg) {
  const Field f = m.field();
  std::size_t offset = reg.regular_part.rows();
  std::optional<std::size_t> block_start, block_size;
  for (auto s : reg.singular_sizes) {
    if (s % 2 == 1) {
      block_start = offset;
      block_size = s;
      break;
    }
    offset += s;
  }
  if (!block_start) throw NoOddBlock("certificate_singular: no odd singular block");
  Matrix d = Matrix::identity(m.rows(), f);
  for (std::size_t i = 0; i < *block_size; ++i) d.set(*block_start + i, *block_start + i, -Scalar::one(f));
  Matrix cert = reg.transform * d * inverse(reg.transform);
  if (!verify_certificate(m, cert)) throw_internal("certificate_singular: certificate failed verification");
  return cert;
}

bool verify_certificate(const Matrix& m, const Matrix& s) {
  if (!m.is_square() || !s.is_square() || m.rows() != s.rows() || m.field() != s.field()) return false;
  if (rank(s) != s.rows()) return false;
  if (congruent_image(s, m) != m) return false;
  return det(s) == -Scalar::one(m.field());
}

}  // namespace xiform
