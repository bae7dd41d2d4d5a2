#include "xiform/exactmat.hpp"

#include <utility>

#include "xiform/errors.hpp"

namespace xiform {

namespace {

void require_square(const Matrix& a, const char* op) {
  if (!a.is_square()) throw DimensionMismatch(std::string(op) + ": matrix is not square");
}

// Dense row-major scratch buffer used by the elimination kernels.
template <typename T>
struct Grid {
  std::size_t n = 0;
  std::vector<T> cells;
  T& at(std::size_t i, std::size_t j) { return cells[i * n + j]; }
  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < n; ++j) std::swap(cells[a * n + j], cells[b * n + j]);
  }
};

// Bareiss elimination over an integral domain; `divexact(x, d)` returns x/d for
// exact quotients. Destroys g.
template <typename T, typename IsZero, typename DivExact>
T bareiss(Grid<T>& g, T one, T zero, IsZero is_zero, DivExact divexact) {
  const std::size_t n = g.n;
  if (n == 0) return one;
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && is_zero(g.at(pivot, k))) ++pivot;
    if (pivot == n) return zero;
    if (pivot != k) {
      g.swap_rows(pivot, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = g.at(k, k) * g.at(i, j) - g.at(i, k) * g.at(k, j);
        g.at(i, j) = divexact(num, prev);
      }
      g.at(i, k) = zero;
    }
    prev = g.at(k, k);
  }
  T result = g.at(n - 1, n - 1);
  if (negate) result = zero - result;
  return result;
}

Scalar det_rational(const Matrix& a) {
  const std::size_t n = a.rows();
  Grid<mpz_class> g{n, std::vector<mpz_class>(n * n)};
  mpz_class scale = 1;
  for (std::size_t i = 0; i < n; ++i) {
    mpz_class row_lcm = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(row_lcm.get_mpz_t(), row_lcm.get_mpz_t(), a(i, j).rational().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const mpq_class& q = a(i, j).rational();
      g.at(i, j) = q.get_num() * (row_lcm / q.get_den());
    }
    scale *= row_lcm;
  }
  mpz_class d = bareiss<mpz_class>(
      g, mpz_class(1), mpz_class(0), [](const mpz_class& x) { return sgn(x) == 0; },
      [](const mpz_class& x, const mpz_class& y) {
        mpz_class q;
        mpz_divexact(q.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
        return q;
      });
  return Scalar::from_rational(Field::rationals(), mpq_class(d, scale));
}

Scalar det_modular(const Matrix& a) {
  const std::size_t n = a.rows();
  const Field f = a.field();
  Grid<Scalar> g{n, {a.entries().begin(), a.entries().end()}};
  Scalar d = Scalar::one(f);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && g.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n) return Scalar::zero(f);
    if (pivot != k) {
      g.swap_rows(pivot, k);
      d = -d;
    }
    const Scalar inv = g.at(k, k).inverse();
    d *= g.at(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (g.at(i, k).is_zero()) continue;
      const Scalar factor = g.at(i, k) * inv;
      for (std::size_t j = k; j < n; ++j) g.at(i, j) -= factor * g.at(k, j);
    }
  }
  return d;
}

}  // namespace

RowReduction row_reduce(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  const Field f = a.field();
  // Work on rows directly; the transform accumulates the same row operations.
  std::vector<std::vector<Scalar>> r(m), t(m);
  for (std::size_t i = 0; i < m; ++i) {
    r[i].assign(a.entries().begin() + static_cast<std::ptrdiff_t>(i * n),
                a.entries().begin() + static_cast<std::ptrdiff_t>((i + 1) * n));
    t[i].assign(m, Scalar::zero(f));
    t[i][i] = Scalar::one(f);
  }
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && r[p][col].is_zero()) ++p;
    if (p == m) continue;
    std::swap(r[p], r[row]);
    std::swap(t[p], t[row]);
    const Scalar inv = r[row][col].inverse();
    if (!inv.is_one()) {
      for (auto& e : r[row]) e *= inv;
      for (auto& e : t[row]) e *= inv;
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || r[i][col].is_zero()) continue;
      const Scalar factor = r[i][col];
      for (std::size_t j = col; j < n; ++j)
        if (!r[row][j].is_zero()) r[i][j] -= factor * r[row][j];
      for (std::size_t j = 0; j < m; ++j)
        if (!t[row][j].is_zero()) t[i][j] -= factor * t[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  Matrix echelon(m, n, f), transform(m, m, f);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) echelon.set(i, j, std::move(r[i][j]));
    for (std::size_t j = 0; j < m; ++j) transform.set(i, j, std::move(t[i][j]));
  }
  return {std::move(echelon), std::move(transform), std::move(pivots)};
}

std::size_t rank(const Matrix& a) {
  const std::size_t m = a.rows();
  const std::size_t n = a.cols();
  std::vector<Scalar> g(a.entries().begin(), a.entries().end());
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t p = row;
    while (p < m && g[p * n + col].is_zero()) ++p;
    if (p == m) continue;
    if (p != row)
      for (std::size_t j = 0; j < n; ++j) std::swap(g[p * n + j], g[row * n + j]);
    const Scalar inv = g[row * n + col].inverse();
    for (std::size_t i = row + 1; i < m; ++i) {
      if (g[i * n + col].is_zero()) continue;
      const Scalar factor = g[i * n + col] * inv;
      for (std::size_t j = col; j < n; ++j) g[i * n + j] -= factor * g[row * n + j];
    }
    ++row;
  }
  return row;
}

Matrix inverse(const Matrix& a) {
  require_square(a, "inverse");
  RowReduction rr = row_reduce(a);
  if (rr.rank() < a.rows()) throw SingularMatrix("inverse: matrix is singular");
  return std::move(rr.transform);
}

Matrix null_space(const Matrix& a) {
  const RowReduction rr = row_reduce(a);
  const std::size_t n = a.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto c : rr.pivot_columns) is_pivot[c] = true;
  Matrix basis(n, n - rr.rank(), a.field());
  std::size_t k = 0;
  for (std::size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    basis.set(free, k, Scalar::one(a.field()));
    for (std::size_t i = 0; i < rr.rank(); ++i) basis.set(rr.pivot_columns[i], k, -rr.echelon(i, free));
    ++k;
  }
  return basis;
}

Scalar det(const Matrix& a) {
  require_square(a, "det");
  return a.field().is_rational() ? det_rational(a) : det_modular(a);
}

Poly det_poly(const Matrix& a, const Matrix& b) {
  require_square(a, "det_poly");
  if (a.field() != b.field()) throw FieldMismatch("det_poly: matrices over different fields");
  if (a.rows() != b.rows() || b.cols() != a.cols()) throw DimensionMismatch("det_poly: shape mismatch");
  const Field f = a.field();
  const std::size_t n = a.rows();
  Grid<Poly> g{n, std::vector<Poly>(n * n, Poly(f))};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.at(i, j) = Poly(f, {a(i, j), b(i, j)});
  return bareiss<Poly>(
      g, Poly::constant(Scalar::one(f)), Poly(f), [](const Poly& p) { return p.is_zero(); },
      [](const Poly& x, const Poly& d) {
        auto [q, r] = x.divmod(d);
        if (!r.is_zero()) throw_internal("det_poly: inexact Bareiss division");
        return q;
      });
}

std::vector<std::size_t> power_rank_sequence(const Matrix& a, const Scalar& mu, std::size_t kmax) {
  require_square(a, "power_rank_sequence");
  const std::size_t m = a.rows();
  std::vector<std::size_t> seq{m};
  seq.reserve(kmax + 1);
  const Matrix shifted = a - Matrix::identity(m, a.field()) * mu;
  Matrix power = Matrix::identity(m, a.field());
  for (std::size_t k = 1; k <= kmax; ++k) {
    if (seq.back() == 0 || (k >= 2 && seq[k - 1] == seq[k - 2])) {
      seq.push_back(seq.back());
      continue;
    }
    power = power * shifted;
    seq.push_back(rank(power));
  }
  return seq;
}

Matrix cosquare(const Matrix& a) {
  require_square(a, "cosquare");
  return inverse(a.transpose()) * a;
}

}  // namespace xiform
