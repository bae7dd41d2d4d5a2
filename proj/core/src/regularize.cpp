#include "xiform/regularize.hpp"

#include <algorithm>
#include <numeric>

#include "xiform/blocks.hpp"
#include "xiform/errors.hpp"
#include "xiform/exactmat.hpp"

namespace xiform {

namespace {

// basis^T * form * basis = regular block (+) J_{chains[0]}(0) (+) J_{chains[1]}(0) ...
// with the regular block first and the chains contiguous, in listed order.
struct Decomposition {
  Matrix basis;
  std::size_t regular_size = 0;
  std::vector<std::size_t> chains;
};

Matrix layout_form(const Matrix& regular, const std::vector<std::size_t>& chains, Field f) {
  std::vector<Matrix> parts;
  parts.reserve(chains.size() + 1);
  if (regular.rows() != 0) parts.push_back(regular);
  for (auto c : chains) parts.push_back(jordan(c, Scalar::zero(f)));
  return direct_sum(parts, f);
}

Matrix rows_of(const Matrix& a, std::size_t first, std::size_t count) { return a.block(first, 0, count, a.cols()); }

Decomposition decompose(const Matrix& a) {
  const Field f = a.field();
  const std::size_t d = a.rows();
  const Matrix kernel = null_space(a);
  const std::size_t r = kernel.cols();
  if (r == 0) return {Matrix::identity(d, f), d, {}};

  // Functionals f(k, .) for the kernel basis; echelon rows split them into a
  // paired part (z) and a part vanishing on everything (w, both kernels).
  const Matrix functionals = kernel.transpose() * a;
  const RowReduction split = row_reduce(functionals);
  const std::size_t paired = split.rank();
  const Matrix transform_t = split.transform.transpose();
  Matrix z = kernel * transform_t.block(0, 0, r, paired);
  const Matrix w = kernel * transform_t.block(0, paired, r, r - paired);
  const Matrix paired_functionals = rows_of(split.echelon, 0, paired);

  // y dual to z: f(z_i, y_j) = delta_ij, from the pivot columns of the echelon form.
  Matrix y(d, paired, f);
  for (std::size_t j = 0; j < paired; ++j) y.set(split.pivot_columns[j], j, Scalar::one(f));

  // Complement of the kernel inside {v : f(R, v) = 0}.
  const Matrix annihilated = null_space(paired_functionals);
  const RowReduction pick = row_reduce(kernel.hconcat(annihilated));
  std::vector<std::size_t> chosen;
  for (auto c : pick.pivot_columns)
    if (c >= r) chosen.push_back(c - r);
  const Matrix x0 = annihilated.select_columns(chosen);
  if (x0.cols() + r + paired != d) throw_internal("regularize: dimension count failed");

  const Decomposition inner = decompose(congruent_image(x0, a));
  Matrix x = x0 * inner.basis;
  const std::size_t dx = x.cols();
  const Matrix g = congruent_image(x, a);

  // Make f(y, .) vanish on every vector of x except the last vector of each chain.
  const Matrix q = y.transpose() * a * x;
  Matrix c(paired, dx, f);
  const std::size_t rs = inner.regular_size;
  if (rs != 0) c.set_block(0, 0, q.block(0, 0, paired, rs) * inverse(g.block(0, 0, rs, rs)));
  std::vector<std::size_t> chain_last;
  std::size_t at = rs;
  for (auto len : inner.chains) {
    for (std::size_t i = 1; i < len; ++i)
      for (std::size_t row = 0; row < paired; ++row) c.set(row, at + i, q(row, at + i - 1));
    at += len;
    chain_last.push_back(at - 1);
  }
  y -= x * c.transpose();

  // Every inner chain extends: f(y, last vectors) has full column rank.
  const Matrix last_pairing = (y.transpose() * a * x).select_columns(chain_last);
  const RowReduction match = row_reduce(last_pairing);
  if (match.rank() != chain_last.size()) throw_internal("regularize: inner chain without a dual partner");
  y = y * match.transform.transpose();
  z = z * inverse(match.transform);

  // Clear f(x, y) and f(y, y) with the z vectors; f(., z) = 0 keeps the rest intact.
  x -= z * (x.transpose() * a * y).transpose();
  y -= z * (y.transpose() * a * y).transpose();

  Decomposition out{Matrix(d, d, f), rs, {}};
  std::size_t col = 0;
  auto append = [&](const Matrix& src, std::size_t j) { out.basis.set_block(0, col++, src.column_at(j)); };
  for (std::size_t j = 0; j < rs; ++j) append(x, j);
  at = rs;
  for (std::size_t k = 0; k < inner.chains.size(); ++k) {
    const std::size_t len = inner.chains[k];
    for (std::size_t i = 0; i < len; ++i) append(x, at + i);
    append(y, k);
    append(z, k);
    out.chains.push_back(len + 2);
    at += len;
  }
  for (std::size_t k = inner.chains.size(); k < paired; ++k) {
    append(y, k);
    append(z, k);
    out.chains.push_back(2);
  }
  for (std::size_t k = 0; k < w.cols(); ++k) {
    append(w, k);
    out.chains.push_back(1);
  }

  const Matrix reduced = congruent_image(out.basis, a);
  if (reduced != layout_form(reduced.block(0, 0, rs, rs), out.chains, f))
    throw_internal("regularize: level reduction does not have the expected block form");
  return out;
}

}  // namespace

Matrix RegularizationResult::reduced_form() const {
  return layout_form(regular_part, singular_sizes, transform.field());
}

RegularizationResult regularize(const Matrix& m) {
  if (!m.is_square()) throw DimensionMismatch("regularize: matrix is not square");
  const Decomposition dec = decompose(m);

  // Stable sort of the chains by length; the regular block stays in front.
  std::vector<std::size_t> order(dec.chains.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return dec.chains[i] < dec.chains[j]; });
  std::vector<std::size_t> start(dec.chains.size());
  std::size_t at = dec.regular_size;
  for (std::size_t k = 0; k < dec.chains.size(); ++k) {
    start[k] = at;
    at += dec.chains[k];
  }
  std::vector<std::size_t> columns(dec.regular_size);
  std::iota(columns.begin(), columns.end(), std::size_t{0});
  RegularizationResult result;
  for (auto k : order) {
    for (std::size_t i = 0; i < dec.chains[k]; ++i) columns.push_back(start[k] + i);
    result.singular_sizes.push_back(dec.chains[k]);
  }
  result.transform = dec.basis.select_columns(columns);
  const Matrix reduced = congruent_image(result.transform, m);
  result.regular_part = reduced.block(0, 0, dec.regular_size, dec.regular_size);

  if (!verify_congruence(result.transform, m, result.reduced_form()))
    throw_internal("regularize: S^T M S differs from the reduced form");
  if (rank(result.regular_part) != dec.regular_size) throw_internal("regularize: regular part is singular");
  return result;
}

bool verify_congruence(const Matrix& s, const Matrix& m, const Matrix& n) {
  if (!s.is_square() || !m.is_square() || !n.is_square()) return false;
  if (s.rows() != m.rows() || m.rows() != n.rows()) return false;
  if (s.field() != m.field() || m.field() != n.field()) return false;
  if (rank(s) != s.rows()) return false;
  return congruent_image(s, m) == n;
}

}  // namespace xiform
