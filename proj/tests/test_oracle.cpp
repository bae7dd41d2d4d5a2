#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "xiform/blocks.hpp"
#include "xiform/errors.hpp"
#include "xiform/exactmat.hpp"
#include "xiform/oracle.hpp"

using namespace xiform;

namespace {
const Field Q = Field::rationals();
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);
}  // namespace

TEST_CASE("enumerate_isometries examples") {
  const IsometrySummary z2 = enumerate_isometries(symplectic_unit(1, F3));
  CHECK(z2.group_order == 24);
  CHECK(z2.all_det_one);
  CHECK(z2.det_values == std::map<std::uint32_t, std::uint64_t>{{1, 24}});

  const IsometrySummary i2 = enumerate_isometries(Matrix::identity(2, F3));
  CHECK_FALSE(i2.all_det_one);
  CHECK(i2.det_values.at(2) > 0);

  const IsometrySummary zero = enumerate_isometries(Matrix(1, 1, F3));
  CHECK(zero.group_order == 2);
  CHECK_FALSE(zero.all_det_one);

  CHECK(oracle_verdict(jordan(2, Scalar::zero(F3))) == Verdict::in_xi);
  CHECK(oracle_verdict(Matrix(1, 1, F3)) == Verdict::not_in_xi);
  CHECK(oracle_verdict(jordan(3, Scalar::zero(F3))) == Verdict::not_in_xi);

  // The identity matrix of size 0 has exactly one isometry.
  CHECK(enumerate_isometries(Matrix(0, 0, F3)).group_order == 1);
}

TEST_CASE("errors") {
  CHECK_THROWS_AS((void)enumerate_isometries(Matrix::identity(2, Q)), UnsupportedField);
  CHECK_THROWS_AS((void)enumerate_isometries(Matrix::identity(5, F3)), BudgetExceeded);
  CHECK_THROWS_AS((void)enumerate_isometries(Matrix::identity(2, F3), 80), BudgetExceeded);
  CHECK_NOTHROW((void)enumerate_isometries(Matrix::identity(2, F3), 81));
}

TEST_CASE("counting helpers") {
  CHECK(matrix_space_size(3, 2) == 81);
  CHECK(matrix_space_size(5, 3) == 1953125);
  CHECK(matrix_space_size(3, 16) == UINT64_MAX);
  CHECK(general_linear_order(2, 3) == 48);
  CHECK(general_linear_order(3, 3) == 11232);
  CHECK(general_linear_order(2, 5) == 480);
  CHECK(matrix_from_index(F3, 2, 0) == Matrix(2, 2, F3));
  CHECK(matrix_from_index(F3, 2, 1) == Matrix::from_ints(F3, {{0, 0}, {0, 1}}));
  CHECK(matrix_from_index(F3, 2, 27) == Matrix::from_ints(F3, {{1, 0}, {0, 0}}));
  CHECK(matrix_from_index(F3, 2, 80) == Matrix::from_ints(F3, {{2, 2}, {2, 2}}));
}

TEST_CASE("backtracking agrees with a full scan") {
  for (std::uint64_t idx = 0; idx < 81; ++idx) {
    const Matrix m = matrix_from_index(F3, 2, idx);
    const testing::NaiveIsometryCount naive = testing::naive_isometries(m);
    const IsometrySummary s = enumerate_isometries(m, default_enumeration_limit, 1);
    CHECK(s.group_order == naive.order);
    const auto minus = s.det_values.find(2);
    CHECK((minus == s.det_values.end() ? 0 : minus->second) == naive.det_minus_one);
    CHECK(naive.det_other == 0);
  }
  std::mt19937_64 rng(4);
  for (int t = 0; t < 6; ++t) {
    const Matrix m = random_matrix(F5, 2, 2, rng);
    CHECK(enumerate_isometries(m).group_order == testing::naive_isometries(m).order);
    const Matrix m3 = random_matrix(F3, 3, 3, rng);
    const testing::NaiveIsometryCount naive = testing::naive_isometries(m3);
    const IsometrySummary s = enumerate_isometries(m3, default_enumeration_limit, 3);
    CHECK(s.group_order == naive.order);
    CHECK(s.all_det_one == (naive.det_minus_one == 0));
  }
}

TEST_CASE("isometries form a group") {
  std::mt19937_64 rng(17);
  for (const Matrix& m : {Matrix::identity(2, F3), Matrix::from_ints(F3, {{1, 1}, {0, 1}}), jordan(3, Scalar::zero(F3)),
                          Matrix::identity(2, F5)}) {
    const std::vector<Matrix> group = list_isometries(m);
    REQUIRE(!group.empty());
    CHECK(group.size() == enumerate_isometries(m).group_order);
    const std::uint32_t p = m.field().characteristic();
    CHECK(general_linear_order(m.rows(), p) % group.size() == 0);
    std::uniform_int_distribution<std::size_t> pick(0, group.size() - 1);
    for (int k = 0; k < 100; ++k) {
      const Matrix prod = group[pick(rng)] * group[pick(rng)];
      CHECK(prod.transpose() * m * prod == m);
      CHECK_FALSE(det(prod).is_zero());
    }
  }
}

TEST_CASE("summaries merge and threads agree") {
  const Matrix m = Matrix::from_ints(F3, {{1, 0, 0}, {0, 1, 0}, {0, 0, 0}});
  const IsometrySummary one = enumerate_isometries(m, default_enumeration_limit, 1);
  for (unsigned th : {2u, 3u, 8u}) {
    const IsometrySummary many = enumerate_isometries(m, default_enumeration_limit, th);
    CHECK(many.group_order == one.group_order);
    CHECK(many.det_values == one.det_values);
  }
  IsometrySummary a;
  a.group_order = 2;
  a.det_values = {{1, 2}};
  IsometrySummary b;
  b.group_order = 1;
  b.det_values = {{2, 1}};
  b.all_det_one = false;
  a.merge(b);
  CHECK(a.group_order == 3);
  CHECK_FALSE(a.all_det_one);
  CHECK(a.det_values.at(2) == 1);
}

TEST_CASE("random_congruence") {
  const Matrix m = Matrix::from_ints(Q, {{1, 2}, {3, 4}});
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const Congruence c = random_congruence(m, seed);
    CHECK(rank(c.transform) == 2);
    CHECK(c.image == c.transform.transpose() * m * c.transform);
    CHECK(random_congruence(m, seed).image == c.image);
  }
  const Matrix t = Matrix::from_ints(Q, {{1, 1}, {0, 1}});
  CHECK(congruent_image(t, Matrix::identity(2, Q)) == Matrix::from_ints(Q, {{1, 1}, {1, 2}}));
}
