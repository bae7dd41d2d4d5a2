#include "xiform/oracle.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <limits>
#include <thread>

#include "xiform/errors.hpp"
#include "xiform/exactmat.hpp"

namespace xiform {

namespace {

constexpr std::size_t kMaxDim = 8;

using Vec = std::array<std::uint32_t, kMaxDim>;

// The form and all p^n candidate columns, with M v and v^T M precomputed.
struct SearchSpace {
  std::size_t n = 0;
  std::uint32_t p = 0;
  std::vector<std::uint32_t> form;  // row-major n x n
  std::vector<Vec> vectors;
  std::vector<Vec> form_times;  // M v
  std::vector<Vec> times_form;  // v^T M

  std::uint32_t pair(const Vec& u, const Vec& mv) const {
    std::uint64_t s = 0;
    for (std::size_t i = 0; i < n; ++i) s += std::uint64_t{u[i]} * mv[i];
    return static_cast<std::uint32_t>(s % p);
  }
};

SearchSpace make_space(const Matrix& m) {
  SearchSpace sp;
  sp.n = m.rows();
  sp.p = m.field().characteristic();
  sp.form.resize(sp.n * sp.n);
  for (std::size_t i = 0; i < sp.n; ++i)
    for (std::size_t j = 0; j < sp.n; ++j) sp.form[i * sp.n + j] = m(i, j).residue();
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < sp.n; ++i) count *= sp.p;
  sp.vectors.resize(count);
  sp.form_times.resize(count);
  sp.times_form.resize(count);
  for (std::uint64_t idx = 0; idx < count; ++idx) {
    Vec v{};
    std::uint64_t rest = idx;
    for (std::size_t i = sp.n; i-- > 0;) {
      v[i] = static_cast<std::uint32_t>(rest % sp.p);
      rest /= sp.p;
    }
    Vec mv{}, vm{};
    for (std::size_t i = 0; i < sp.n; ++i) {
      std::uint64_t a = 0, b = 0;
      for (std::size_t j = 0; j < sp.n; ++j) {
        a += std::uint64_t{sp.form[i * sp.n + j]} * v[j];
        b += std::uint64_t{v[j]} * sp.form[j * sp.n + i];
      }
      mv[i] = static_cast<std::uint32_t>(a % sp.p);
      vm[i] = static_cast<std::uint32_t>(b % sp.p);
    }
    sp.vectors[idx] = v;
    sp.form_times[idx] = mv;
    sp.times_form[idx] = vm;
  }
  return sp;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

// Incremental echelon basis used to reject dependent columns.
struct Echelon {
  std::array<Vec, kMaxDim> rows{};
  std::array<std::size_t, kMaxDim> pivot{};
  std::size_t size = 0;

  // Reduces v against the basis; returns true and appends if independent.
  bool try_add(Vec v, std::size_t n, std::uint32_t p) {
    for (std::size_t r = 0; r < size; ++r) {
      const std::uint32_t c = v[pivot[r]];
      if (c == 0) continue;
      for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>((v[i] + std::uint64_t{p - c} * rows[r][i]) % p);
    }
    std::size_t lead = 0;
    while (lead < n && v[lead] == 0) ++lead;
    if (lead == n) return false;
    const std::uint32_t inv = inv_mod(v[lead], p);
    for (std::size_t i = 0; i < n; ++i) v[i] = static_cast<std::uint32_t>(std::uint64_t{v[i]} * inv % p);
    rows[size] = v;
    pivot[size] = lead;
    ++size;
    return true;
  }
};

std::uint32_t det_mod(const std::array<std::uint32_t, kMaxDim * kMaxDim>& cols, std::size_t n, std::uint32_t p) {
  // cols holds S column-major; det(S) = det(S^T).
  std::array<std::uint64_t, kMaxDim * kMaxDim> a{};
  for (std::size_t i = 0; i < n * n; ++i) a[i] = cols[i];
  std::uint64_t d = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[k * n + j]);
      d = (p - d) % p;
    }
    d = d * a[k * n + k] % p;
    const std::uint64_t inv = inv_mod(static_cast<std::uint32_t>(a[k * n + k]), p);
    for (std::size_t i = k + 1; i < n; ++i) {
      const std::uint64_t factor = a[i * n + k] * inv % p;
      if (factor == 0) continue;
      for (std::size_t j = k; j < n; ++j) a[i * n + j] = (a[i * n + j] + (p - factor) * a[k * n + j]) % p;
    }
  }
  return static_cast<std::uint32_t>(d);
}

// Depth-first search over columns. `visit(column indices, det)` is called for
// every isometry found under the given first column.
template <typename Visit>
void search_from(const SearchSpace& sp, std::uint64_t first, Visit&& visit) {
  const std::size_t n = sp.n;
  std::array<std::uint64_t, kMaxDim> chosen{};
  std::array<Echelon, kMaxDim + 1> echelons{};

  auto fits = [&](std::size_t j, std::uint64_t cand) {
    const Vec& v = sp.vectors[cand];
    if (sp.pair(v, sp.form_times[cand]) != sp.form[j * n + j]) return false;
    for (std::size_t i = 0; i < j; ++i) {
      // f(s_i, s_j) = M_ij and f(s_j, s_i) = M_ji.
      if (sp.pair(sp.vectors[chosen[i]], sp.form_times[cand]) != sp.form[i * n + j]) return false;
      if (sp.pair(v, sp.form_times[chosen[i]]) != sp.form[j * n + i]) return false;
    }
    return true;
  };

  auto recurse = [&](auto&& self, std::size_t j) -> void {
    if (j == n) {
      std::array<std::uint32_t, kMaxDim * kMaxDim> cols{};
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i) cols[c * n + i] = sp.vectors[chosen[c]][i];
      visit(chosen, det_mod(cols, n, sp.p));
      return;
    }
    for (std::uint64_t cand = 0; cand < sp.vectors.size(); ++cand) {
      echelons[j + 1] = echelons[j];
      if (!echelons[j + 1].try_add(sp.vectors[cand], n, sp.p)) continue;
      if (!fits(j, cand)) continue;
      chosen[j] = cand;
      self(self, j + 1);
    }
  };

  echelons[1] = echelons[0];
  if (!echelons[1].try_add(sp.vectors[first], n, sp.p) || !fits(0, first)) return;
  chosen[0] = first;
  recurse(recurse, 1);
}

void check_budget(const Matrix& m, std::uint64_t limit) {
  if (!m.is_square()) throw DimensionMismatch("oracle: matrix is not square");
  if (!m.field().is_finite()) throw UnsupportedField("oracle: enumeration needs a finite field");
  if (m.rows() > kMaxDim) throw BudgetExceeded("oracle: dimension too large");
  const std::uint64_t space = matrix_space_size(m.field().characteristic(), m.rows());
  if (space > limit)
    throw BudgetExceeded("oracle: " + m.field().name() + " with n = " + std::to_string(m.rows()) + " needs " +
                         (space == std::numeric_limits<std::uint64_t>::max() ? std::string("too many")
                                                                             : std::to_string(space)) +
                         " candidates, limit is " + std::to_string(limit));
}

void tally(IsometrySummary& s, std::uint32_t det) {
  ++s.group_order;
  ++s.det_values[det];
  if (det != 1) s.all_det_one = false;
}

}  // namespace

IsometrySummary& IsometrySummary::merge(const IsometrySummary& other) {
  group_order += other.group_order;
  for (const auto& [d, c] : other.det_values) det_values[d] += c;
  all_det_one = all_det_one && other.all_det_one;
  return *this;
}

std::uint64_t matrix_space_size(std::uint32_t p, std::size_t n) {
  std::uint64_t size = 1;
  for (std::size_t k = 0; k < n * n; ++k) {
    if (size > std::numeric_limits<std::uint64_t>::max() / p) return std::numeric_limits<std::uint64_t>::max();
    size *= p;
  }
  return size;
}

std::uint64_t general_linear_order(std::size_t n, std::uint32_t p) {
  std::uint64_t pn = 1;
  for (std::size_t i = 0; i < n; ++i) pn *= p;
  std::uint64_t order = 1, pi = 1;
  for (std::size_t i = 0; i < n; ++i) {
    order *= pn - pi;
    pi *= p;
  }
  return order;
}

Matrix matrix_from_index(Field f, std::size_t n, std::uint64_t index) {
  if (!f.is_finite()) throw UnsupportedField("matrix_from_index: needs a finite field");
  const std::uint32_t p = f.characteristic();
  Matrix m(n, n, f);
  for (std::size_t k = n * n; k-- > 0;) {
    m.set(k / n, k % n, Scalar::from_int(f, static_cast<long long>(index % p)));
    index /= p;
  }
  return m;
}

IsometrySummary enumerate_isometries(const Matrix& m, std::uint64_t limit, unsigned threads) {
  check_budget(m, limit);
  IsometrySummary total;
  if (m.rows() == 0) {
    tally(total, 1);
    return total;
  }
  const SearchSpace sp = make_space(m);
  const std::uint64_t firsts = sp.vectors.size();
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, firsts));
  // Small searches are not worth the thread start-up.
  if (sp.vectors.size() <= 27) threads = 1;

  std::vector<IsometrySummary> partial(threads);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&](unsigned id) {
    for (std::uint64_t first = next++; first < firsts; first = next++)
      search_from(sp, first, [&](const auto&, std::uint32_t det) { tally(partial[id], det); });
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
    for (auto& th : pool) th.join();
  }
  for (const auto& part : partial) total.merge(part);
  return total;
}

std::vector<Matrix> list_isometries(const Matrix& m, std::uint64_t limit) {
  check_budget(m, limit);
  const Field f = m.field();
  std::vector<Matrix> out;
  if (m.rows() == 0) {
    out.emplace_back(0, 0, f);
    return out;
  }
  const SearchSpace sp = make_space(m);
  const std::size_t n = sp.n;
  for (std::uint64_t first = 0; first < sp.vectors.size(); ++first) {
    search_from(sp, first, [&](const auto& chosen, std::uint32_t) {
      Matrix s(n, n, f);
      for (std::size_t c = 0; c < n; ++c)
        for (std::size_t i = 0; i < n; ++i) s.set(i, c, Scalar::from_int(f, sp.vectors[chosen[c]][i]));
      out.push_back(std::move(s));
    });
  }
  return out;
}

Verdict oracle_verdict(const Matrix& m, std::uint64_t limit, unsigned threads) {
  return enumerate_isometries(m, limit, threads).all_det_one ? Verdict::in_xi : Verdict::not_in_xi;
}

Matrix random_matrix(Field f, std::size_t rows, std::size_t cols, std::mt19937_64& rng, long long bound) {
  Matrix out(rows, cols, f);
  if (f.is_finite()) {
    std::uniform_int_distribution<long long> dist(0, static_cast<long long>(f.characteristic()) - 1);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out.set(i, j, Scalar::from_int(f, dist(rng)));
  } else {
    std::uniform_int_distribution<long long> dist(-bound, bound);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) out.set(i, j, Scalar::from_int(f, dist(rng)));
  }
  return out;
}

Matrix random_nonsingular(Field f, std::size_t n, std::mt19937_64& rng, long long bound) {
  while (true) {
    Matrix t = random_matrix(f, n, n, rng, bound);
    if (rank(t) == n) return t;
  }
}

Congruence random_congruence(const Matrix& m, std::uint64_t seed, long long bound) {
  if (!m.is_square()) throw DimensionMismatch("random_congruence: matrix is not square");
  std::mt19937_64 rng(seed);
  Matrix t = random_nonsingular(m.field(), m.rows(), rng, bound);
  Matrix image = congruent_image(t, m);
  return {std::move(t), std::move(image)};
}

}  // namespace xiform
