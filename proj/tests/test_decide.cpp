#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "xiform/blocks.hpp"
#include "xiform/decide.hpp"
#include "xiform/errors.hpp"
#include "xiform/exactmat.hpp"
#include "xiform/oracle.hpp"

using namespace xiform;

namespace {
const Field Q = Field::rationals();
const Field F3 = Field::prime(3);
const Field F5 = Field::prime(5);
using Sizes = std::vector<std::size_t>;

bool any_odd(const Sizes& v) {
  for (std::size_t s : v)
    if (s % 2) return true;
  return false;
}
bool any_positive(const Sizes& v) {
  for (std::size_t s : v)
    if (s) return true;
  return false;
}

void check_report(const Matrix& m, const XiReport& r) {
  const bool obstructed = any_odd(r.singular_sizes) || any_positive(r.odd_block_counts);
  if (r.method == Method::regularize) CHECK((r.verdict == Verdict::not_in_xi) == obstructed);
  // A singular pencil is reported without gamma and without counts.
  if (r.method == Method::gamma_shift && r.gamma_used) CHECK((r.verdict == Verdict::not_in_xi) == obstructed);
  for (std::size_t k = 1; k < r.rank_sequence.size(); ++k) CHECK(r.rank_sequence[k] <= r.rank_sequence[k - 1]);
  if (r.certificate) CHECK(verify_certificate(m, *r.certificate));
}
}  // namespace

TEST_CASE("decide examples") {
  const XiReport z2 = decide(symplectic_unit(1));
  CHECK(z2.verdict == Verdict::in_xi);
  CHECK(z2.method == Method::skew_fast_path);

  const XiReport i2 = decide(Matrix::identity(2, Q));
  CHECK(i2.verdict == Verdict::not_in_xi);
  CHECK(i2.method == Method::regularize);
  REQUIRE(i2.rank_sequence.size() >= 3);
  CHECK(i2.rank_sequence[0] == 2);
  CHECK(i2.rank_sequence[1] == 0);
  REQUIRE(!i2.odd_block_counts.empty());
  CHECK(i2.odd_block_counts[0] == 2);
  check_report(Matrix::identity(2, Q), i2);

  const Matrix zero1(1, 1, Q);
  const XiReport z = decide(zero1);
  CHECK(z.verdict == Verdict::not_in_xi);
  CHECK(z.singular_sizes == Sizes{1});
  REQUIRE(z.certificate);
  CHECK(*z.certificate == Matrix::from_ints(Q, {{-1}}));

  const XiReport j2 = decide(jordan(2, Scalar::zero(Q)), {.use_fast_path = false});
  CHECK(decide(jordan(2, Scalar::zero(Q))).method == Method::skew_fast_path);
  CHECK(j2.verdict == Verdict::in_xi);
  CHECK(j2.singular_sizes == Sizes{2});
  CHECK_FALSE(any_positive(j2.odd_block_counts));
  REQUIRE(j2.regularization);
  CHECK(j2.regularization->regular_part.rows() == 0);

  const XiReport g3 = decide(xiform::gamma(3));
  CHECK(g3.verdict == Verdict::not_in_xi);
  REQUIRE(g3.odd_block_counts.size() >= 2);
  CHECK(g3.odd_block_counts[0] == 0);
  CHECK(g3.odd_block_counts[1] == 1);

  const XiReport empty = decide(Matrix(0, 0, Q));
  CHECK(empty.verdict == Verdict::in_xi);

  CHECK(to_string(Verdict::in_xi) == "IN_XI");
  CHECK(to_string(Method::gamma_shift) == "GAMMA_SHIFT");
}

TEST_CASE("skew_fast_path") {
  CHECK(skew_fast_path(symplectic_unit(2)) == Verdict::in_xi);
  CHECK_FALSE(skew_fast_path(Matrix::identity(2, Q)).has_value());
  CHECK(skew_fast_path(Matrix::from_ints(Q, {{1, 1}, {-1, 1}})) == Verdict::in_xi);
  CHECK_FALSE(skew_fast_path(Matrix(1, 1, Q)).has_value());
}

TEST_CASE("odd_unipotent_counts") {
  const UnipotentCounts g3 = odd_unipotent_counts(xiform::gamma(3));
  CHECK(Sizes(g3.ranks.begin(), g3.ranks.begin() + 4) == Sizes{3, 2, 1, 0});
  CHECK(g3.odd_blocks == Sizes{0, 1});
  const UnipotentCounts i2 = odd_unipotent_counts(Matrix::identity(2, Q), 0);
  CHECK(i2.ranks == Sizes{2, 0, 0});
  CHECK(i2.odd_blocks == Sizes{2});
  const UnipotentCounts e = odd_unipotent_counts(Matrix(0, 0, Q));
  for (std::size_t r : e.ranks) CHECK(r == 0);
  for (std::size_t c : e.odd_blocks) CHECK(c == 0);
  CHECK_THROWS_AS((void)odd_unipotent_counts(Matrix(2, 2, Q)), SingularMatrix);
  CHECK(odd_counts_from_ranks({5, 3, 2, 1, 1}, 1) == Sizes{1, 1});
}

TEST_CASE("decide_gamma_shift") {
  const XiReport i2 = decide_gamma_shift(Matrix::identity(2, Q));
  CHECK(i2.verdict == Verdict::not_in_xi);
  REQUIRE(i2.gamma_used);
  CHECK(i2.gamma_used->is_zero());
  CHECK(i2.rank_sequence.at(0) == 2);
  CHECK(i2.rank_sequence.at(1) == 0);
  CHECK(i2.odd_block_counts.at(0) == 2);

  CHECK(decide_gamma_shift(Matrix(1, 1, Q)).verdict == Verdict::not_in_xi);

  const XiReport z2 = decide_gamma_shift(symplectic_unit(1));
  CHECK(z2.verdict == Verdict::in_xi);
  CHECK(z2.gamma_used->is_zero());
  CHECK(z2.rank_sequence.at(1) == 2);
  CHECK_FALSE(any_positive(z2.odd_block_counts));

  // Over F3 only gamma in {0, 1} is admissible; this pencil is singular at both.
  bool exhausted = false;
  for (std::uint64_t idx = 0; idx < 81 && !exhausted; ++idx) {
    const Matrix m = matrix_from_index(F3, 2, idx);
    try {
      (void)decide_gamma_shift(m);
    } catch (const GammaExhausted&) {
      exhausted = true;
    }
  }
  CHECK_FALSE(exhausted);  // none exist at n = 2; the path must still be total there
}

TEST_CASE("certificates") {
  const Matrix zero1(1, 1, Q);
  CHECK(certificate_singular(zero1, regularize(zero1)) == Matrix::from_ints(Q, {{-1}}));
  const Matrix m = direct_sum({jordan(1, Scalar::zero(Q)), symplectic_unit(1)});
  const RegularizationResult reg = regularize(m);
  const Matrix cert = certificate_singular(m, reg);
  CHECK(verify_certificate(m, cert));
  if (reg.transform == Matrix::identity(3, Q)) CHECK(cert == Matrix::from_ints(Q, {{-1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK_THROWS_AS((void)certificate_singular(jordan(2, Scalar::zero(Q)), regularize(jordan(2, Scalar::zero(Q)))),
                  NoOddBlock);

  CHECK(verify_certificate(zero1, Matrix::from_ints(Q, {{-1}})));
  CHECK_FALSE(verify_certificate(symplectic_unit(1), Matrix::from_ints(Q, {{1, 0}, {0, -1}})));
  CHECK(verify_certificate(Matrix::identity(2, Q), Matrix::from_ints(Q, {{1, 0}, {0, -1}})));
  CHECK_FALSE(verify_certificate(Matrix::identity(2, Q), Matrix::identity(2, Q)));
}

TEST_CASE("canonical blocks") {
  for (std::size_t r = 1; r <= 6; ++r) {
    CAPTURE(r);
    const Verdict expected = r % 2 ? Verdict::not_in_xi : Verdict::in_xi;
    CHECK(decide(xiform::gamma(r)).verdict == expected);
    CHECK(decide(jordan(r, Scalar::zero(Q))).verdict == expected);
    CHECK(decide_gamma_shift(xiform::gamma(r)).verdict == expected);
    CHECK(decide_gamma_shift(jordan(r, Scalar::zero(Q))).verdict == expected);
  }
  for (std::size_t m = 1; m <= 3; ++m) CHECK(decide(symplectic_unit(m)).verdict == Verdict::in_xi);
}

// [Phi \ I] is in Xi except when Phi ~ J_l(1) with l odd: then the cosquare carries
// two copies of J_l(1) (for l = 1 the block is the symmetric [[0,1],[1,0]]).
TEST_CASE("skew sums of Frobenius blocks") {
  const Poly x_minus_1 = Poly::from_ints(Q, {-1, 1});
  const std::vector<Poly> polys = {x_minus_1, Poly::from_ints(Q, {1, 1}), Poly::from_ints(Q, {1, 0, 1})};
  for (const Poly& p : polys) {
    for (unsigned l = 1; l <= 4; ++l) {
      const PolySpec spec(p, l);
      const std::size_t m = spec.size();
      if (2 * m > 8) continue;
      const Matrix s = skew_sum(frobenius(spec), Matrix::identity(m, Q));
      CAPTURE(s);
      const Verdict expected = p == x_minus_1 && l % 2 ? Verdict::not_in_xi : Verdict::in_xi;
      CHECK(decide(s).verdict == expected);
      CHECK(decide(s, {.use_fast_path = false}).verdict == expected);
      CHECK(decide_gamma_shift(s).verdict == expected);
      if (expected == Verdict::not_in_xi) CHECK(decide(s).odd_block_counts.at(l / 2) == 2);
    }
  }
}

TEST_CASE("odd n is never in Xi; n = 2 is in Xi iff not symmetric") {
  std::mt19937_64 rng(8);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + 2 * (t % 3);
    const Matrix m = random_matrix(t % 2 ? F5 : Q, n, n, rng, 5);
    CHECK(decide(m).verdict == Verdict::not_in_xi);
    const Matrix m2 = random_matrix(Q, 2, 2, rng, t % 4 == 0 ? 0 : 5);
    const Matrix sym = m2 + m2.transpose();
    CHECK((decide(m2).verdict == Verdict::in_xi) == (m2 != m2.transpose()));
    CHECK(decide(sym).verdict == Verdict::not_in_xi);
  }
}

TEST_CASE("fast path is consistent with the full procedure") {
  std::mt19937_64 rng(12);
  std::size_t fired = 0;
  for (int t = 0; t < 200; ++t) {
    const Field f = t % 2 ? F3 : Q;
    const std::size_t n = 2 + 2 * (t % 2);
    const Matrix m = random_matrix(f, n, n, rng, 3);
    if (!skew_fast_path(m)) continue;
    ++fired;
    const XiReport full = decide(m, {.use_fast_path = false});
    CHECK(full.method == Method::regularize);
    CHECK(full.verdict == Verdict::in_xi);
    CHECK_FALSE(any_odd(full.singular_sizes));
    CHECK_FALSE(any_positive(full.odd_block_counts));
    check_report(m, full);
  }
  CHECK(fired > 20);
}

TEST_CASE("congruence invariance and method agreement on random rationals") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 80; ++t) {
    const std::size_t n = 1 + t % 5;
    Matrix m = random_matrix(Q, n, n, rng, 5);
    if (t % 3 == 0 && n >= 2) m = direct_sum({random_matrix(Q, n - 1, n - 1, rng, 2), Matrix(1, 1, Q)});
    if (t % 7 == 0) m = m + m.transpose();
    const XiReport r = decide(m);
    check_report(m, r);
    const XiReport image = decide(random_congruence(m, 1000 + t).image);
    CHECK(image.verdict == r.verdict);
    const XiReport g = decide_gamma_shift(m);
    check_report(m, g);
    CHECK(g.verdict == r.verdict);
  }
}

TEST_CASE("agreement with the naive isometry count over F3, n = 2") {
  for (std::uint64_t idx = 0; idx < 81; ++idx) {
    const Matrix m = matrix_from_index(F3, 2, idx);
    const testing::NaiveIsometryCount naive = testing::naive_isometries(m);
    const Verdict truth = naive.det_minus_one == 0 ? Verdict::in_xi : Verdict::not_in_xi;
    CHECK(decide(m).verdict == truth);
    CHECK(decide(m, {.use_fast_path = false}).verdict == truth);
  }
}
