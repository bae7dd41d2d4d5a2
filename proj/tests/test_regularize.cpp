#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "xiform/blocks.hpp"
#include "xiform/decide.hpp"
#include "xiform/exactmat.hpp"
#include "xiform/oracle.hpp"
#include "xiform/regularize.hpp"

using namespace xiform;

namespace {
const Field Q = Field::rationals();
const Field F3 = Field::prime(3);

using Sizes = std::vector<std::size_t>;

// Every structural promise of a regularization result, checked from scratch.
void check_sound(const Matrix& m, const RegularizationResult& r) {
  const Matrix& b = r.regular_part;
  CHECK(b.rows() == b.cols());
  CHECK(rank(b) == b.rows());
  CHECK(std::is_sorted(r.singular_sizes.begin(), r.singular_sizes.end()));
  CHECK(std::find(r.singular_sizes.begin(), r.singular_sizes.end(), 0) == r.singular_sizes.end());
  CHECK(b.rows() + std::accumulate(r.singular_sizes.begin(), r.singular_sizes.end(), std::size_t{0}) == m.rows());
  std::vector<Matrix> parts{b};
  for (std::size_t s : r.singular_sizes) parts.push_back(jordan(s, Scalar::zero(m.field())));
  const Matrix target = direct_sum(parts, m.field());
  CHECK(r.reduced_form() == target);
  CHECK(verify_congruence(r.transform, m, target));
}

Matrix hidden(const std::vector<Matrix>& parts, Field f, std::uint64_t seed) {
  return random_congruence(direct_sum(parts, f), seed).image;
}
}  // namespace

TEST_CASE("regularize examples") {
  const Matrix z2 = symplectic_unit(1);
  const RegularizationResult a = regularize(z2);
  check_sound(z2, a);
  CHECK(a.singular_sizes.empty());
  CHECK(a.regular_part.rows() == 2);

  const Matrix m = direct_sum({jordan(1, Scalar::zero(Q)), z2});
  const RegularizationResult b = regularize(m);
  check_sound(m, b);
  CHECK(b.singular_sizes == Sizes{1});
  CHECK(b.regular_part.rows() == 2);

  const Matrix j2 = jordan(2, Scalar::zero(Q));
  const RegularizationResult c = regularize(j2);
  check_sound(j2, c);
  CHECK(c.singular_sizes == Sizes{2});
  CHECK(c.regular_part.rows() == 0);

  const RegularizationResult e = regularize(Matrix(0, 0, Q));
  CHECK(e.regular_part.rows() == 0);
  CHECK(e.singular_sizes.empty());

  const RegularizationResult zero = regularize(Matrix(3, 3, F3));
  check_sound(Matrix(3, 3, F3), zero);
  CHECK(zero.singular_sizes == Sizes{1, 1, 1});
}

TEST_CASE("verify_congruence") {
  const Matrix m = Matrix::from_ints(Q, {{1, 2}, {0, 3}});
  CHECK(verify_congruence(Matrix::identity(2, Q), m, m));
  CHECK(verify_congruence(Matrix::from_ints(Q, {{2, 0}, {0, 1}}), Matrix::identity(2, Q),
                          Matrix::from_ints(Q, {{4, 0}, {0, 1}})));
  CHECK_FALSE(verify_congruence(Matrix(2, 2, Q), Matrix(2, 2, Q), Matrix(2, 2, Q)));
  CHECK_FALSE(verify_congruence(Matrix::identity(2, Q), m, m.transpose()));
}

TEST_CASE("hidden singular blocks are recovered") {
  for (const Field f : {Q, F3}) {
    const Scalar zero = Scalar::zero(f);
    const std::vector<std::pair<std::vector<Matrix>, Sizes>> cases = {
        {{jordan(3, zero)}, {3}},
        {{jordan(4, zero), xiform::gamma(2, f)}, {4}},
        {{jordan(1, zero), jordan(2, zero), jordan(3, zero)}, {1, 2, 3}},
        {{jordan(5, zero), symplectic_unit(1, f)}, {5}},
        {{jordan(2, zero), jordan(2, zero), Matrix::identity(1, f)}, {2, 2}},
        {{xiform::gamma(3, f), jordan(1, zero), jordan(6, zero)}, {1, 6}},
    };
    for (std::size_t i = 0; i < cases.size(); ++i) {
      for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const Matrix m = hidden(cases[i].first, f, 97 * i + seed);
        const RegularizationResult r = regularize(m);
        check_sound(m, r);
        CHECK(r.singular_sizes == cases[i].second);
      }
    }
  }
}

TEST_CASE("congruence invariance over Q") {
  std::mt19937_64 rng(2024);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + t % 4;
    Matrix m = random_matrix(Q, n, n, rng, 2);
    if (t % 3 == 0) m = direct_sum({m, jordan(1 + t % 3, Scalar::zero(Q))});
    if (t % 4 == 1) {  // rank-deficient, sometimes symmetric-ish
      const Matrix k = random_matrix(Q, m.rows(), 1, rng, 2);
      m = k * k.transpose();
    }
    const RegularizationResult a = regularize(m);
    check_sound(m, a);
    const Congruence c = random_congruence(m, 500 + t);
    const RegularizationResult b = regularize(c.image);
    check_sound(c.image, b);
    CHECK(a.singular_sizes == b.singular_sizes);
    REQUIRE(a.regular_part.rows() == b.regular_part.rows());
    const std::size_t s = a.regular_part.rows();
    CHECK(odd_unipotent_counts(a.regular_part, s + 1).ranks == odd_unipotent_counts(b.regular_part, s + 1).ranks);
  }
}

TEST_CASE("singular sizes are invariant under every congruence over F3") {
  std::mt19937_64 rng(77);
  const auto gl2 = list_isometries(Matrix(2, 2, F3));  // all of GL_2(F3)
  REQUIRE(gl2.size() == 48);
  for (std::uint64_t idx = 0; idx < 81; ++idx) {
    const Matrix m = matrix_from_index(F3, 2, idx);
    const Sizes base = regularize(m).singular_sizes;
    for (const Matrix& s : gl2) {
      const Matrix image = congruent_image(s, m);
      const RegularizationResult r = regularize(image);
      CHECK(r.singular_sizes == base);
    }
  }
  // n = 3: a sample of matrices against all of GL_3(F3).
  const auto gl3 = list_isometries(Matrix(3, 3, F3));
  REQUIRE(gl3.size() == 11232);
  for (int t = 0; t < 12; ++t) {
    const Matrix m = random_matrix(F3, 3, 3, rng);
    const Sizes base = regularize(m).singular_sizes;
    for (std::size_t i = t; i < gl3.size(); i += 37) CHECK(regularize(congruent_image(gl3[i], m)).singular_sizes == base);
  }
}

TEST_CASE("nonsingular skew part forces even singular blocks and a nonsingular skew part of B") {
  std::mt19937_64 rng(31);
  std::size_t fired = 0;
  for (int t = 0; t < 400 && fired < 60; ++t) {
    const Field f = t % 2 ? F3 : Q;
    const std::size_t n = 2 + 2 * (t % 2);
    Matrix m = random_matrix(f, n, n, rng, 2);
    if (t % 5 == 0) m = hidden({jordan(2, Scalar::zero(f)), random_matrix(f, n - 2, n - 2, rng, 2)}, f, t);
    if (rank(m - m.transpose()) != n) continue;
    ++fired;
    const RegularizationResult r = regularize(m);
    check_sound(m, r);
    for (std::size_t s : r.singular_sizes) CHECK(s % 2 == 0);
    const Matrix& b = r.regular_part;
    CHECK(rank(b - b.transpose()) == b.rows());
  }
  CHECK(fired >= 20);
}
