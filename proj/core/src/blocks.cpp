#include "xiform/blocks.hpp"

#include <stdexcept>

#include "xiform/errors.hpp"
#include "xiform/exactmat.hpp"

namespace xiform {

PolySpec::PolySpec(Poly poly, unsigned power) : poly_(std::move(poly)), power_(power) {
  if (!poly_.is_monic() || poly_.degree() < 1) throw std::invalid_argument("PolySpec: polynomial must be monic of degree >= 1");
  if (power_ < 1) throw std::invalid_argument("PolySpec: power must be >= 1");
}

Matrix jordan(std::size_t r, const Scalar& lambda) {
  if (r < 1) throw std::invalid_argument("jordan: size must be >= 1");
  const Field f = lambda.field();
  Matrix m(r, r, f);
  for (std::size_t i = 0; i < r; ++i) {
    m.set(i, i, lambda);
    if (i + 1 < r) m.set(i + 1, i, Scalar::one(f));
  }
  return m;
}

Matrix gamma(std::size_t r, Field f) {
  if (r < 1) throw std::invalid_argument("gamma: size must be >= 1");
  Matrix g(r, r, f);
  for (std::size_t i = 1; i <= r; ++i) {
    const Scalar sign = Scalar::from_int(f, i % 2 == 1 ? 1 : -1);
    for (std::size_t j = 1; j <= r; ++j)
      if (i + j == r + 1 || i + j == r + 2) g.set(i - 1, j - 1, sign);
  }
  const Scalar eigenvalue = Scalar::from_int(f, r % 2 == 1 ? 1 : -1);
  std::vector<std::size_t> expected(r + 1);
  for (std::size_t k = 0; k <= r; ++k) expected[k] = r - k;
  if (power_rank_sequence(cosquare(g), eigenvalue, r) != expected)
    throw_internal("gamma: cosquare is not a single Jordan block at (-1)^(r+1)");
  return g;
}

Matrix frobenius(const PolySpec& spec) {
  const Poly full = spec.expanded();
  const Field f = full.field();
  const std::size_t m = spec.size();
  Matrix phi(m, m, f);
  for (std::size_t i = 0; i + 1 < m; ++i) phi.set(i + 1, i, Scalar::one(f));
  // p^l = x^m + c_1 x^{m-1} + ... + c_m, so c_{m-i} is the coefficient of x^i.
  for (std::size_t i = 0; i < m; ++i) phi.set(i, m - 1, -full.coefficient(i));
  return phi;
}

Poly reciprocal(const Poly& p) {
  if (p.is_zero() || p.coefficient(0).is_zero()) throw ZeroConstantTerm("reciprocal: p(0) = 0");
  std::vector<Scalar> reversed(p.coefficients().rbegin(), p.coefficients().rend());
  return Poly(p.field(), std::move(reversed)) * p.coefficient(0).inverse();
}

bool is_cosquare_block(const PolySpec& spec) {
  const Poly& p = spec.poly();
  const Field f = p.field();
  const Poly x = Poly::x(f);
  if (p == x) return false;
  const Poly forbidden = x + Poly::constant(Scalar::from_int(f, spec.size() % 2 == 1 ? 1 : -1));
  if (p == forbidden) return false;
  if (p.coefficient(0).is_zero()) return false;
  return p == reciprocal(p);
}

Matrix skew_sum(const Matrix& a, const Matrix& b) {
  if (a.field() != b.field()) throw FieldMismatch("skew_sum: matrices over different fields");
  Matrix out(b.rows() + a.rows(), a.cols() + b.cols(), a.field());
  out.set_block(0, a.cols(), b);
  out.set_block(b.rows(), 0, a);
  return out;
}

Matrix direct_sum(const std::vector<Matrix>& parts, Field f) {
  std::size_t n = 0;
  if (!parts.empty()) f = parts.front().field();
  for (const auto& p : parts) {
    if (!p.is_square()) throw DimensionMismatch("direct_sum: parts must be square");
    if (p.field() != f) throw FieldMismatch("direct_sum: parts over different fields");
    n += p.rows();
  }
  Matrix out(n, n, f);
  std::size_t at = 0;
  for (const auto& p : parts) {
    out.set_block(at, at, p);
    at += p.rows();
  }
  return out;
}

Matrix symplectic_unit(std::size_t m, Field f) {
  if (m < 1) throw std::invalid_argument("symplectic_unit: m must be >= 1");
  Matrix z(2 * m, 2 * m, f);
  for (std::size_t i = 0; i < m; ++i) {
    z.set(i, m + i, Scalar::one(f));
    z.set(m + i, i, -Scalar::one(f));
  }
  return z;
}

std::pair<Matrix, Matrix> kronecker_pair_blocks(std::size_t t, Field f) {
  if (t < 1) throw std::invalid_argument("kronecker_pair_blocks: t must be >= 1");
  Matrix fm(t - 1, t, f), gm(t - 1, t, f);
  for (std::size_t i = 0; i + 1 < t; ++i) {
    fm.set(i, i, Scalar::one(f));
    gm.set(i, i + 1, Scalar::one(f));
  }
  return {std::move(fm), std::move(gm)};
}

namespace {

std::vector<Poly> all_monic(Field f, unsigned degree) {
  const std::uint64_t p = f.characteristic();
  std::uint64_t count = 1;
  for (unsigned k = 0; k < degree; ++k) count *= p;
  std::vector<Poly> out;
  out.reserve(count);
  for (std::uint64_t index = 0; index < count; ++index) {
    // Base-p digits of index, most significant first, are a_1 .. a_s.
    std::vector<Scalar> tail(degree, Scalar::zero(f));
    std::uint64_t rest = index;
    for (unsigned k = degree; k-- > 0;) {
      tail[k] = Scalar::from_int(f, static_cast<long long>(rest % p));
      rest /= p;
    }
    out.push_back(Poly::monic_from_tail(f, tail));
  }
  return out;
}

}  // namespace

std::vector<Poly> monic_irreducibles(Field f, unsigned degree) {
  if (!f.is_finite()) throw UnsupportedField("monic_irreducibles: needs a finite field");
  if (degree == 0) return {};
  std::vector<Poly> divisors;
  for (unsigned d = 1; 2 * d <= degree; ++d) {
    auto level = all_monic(f, d);
    divisors.insert(divisors.end(), level.begin(), level.end());
  }
  std::vector<Poly> out;
  for (auto& candidate : all_monic(f, degree)) {
    bool reducible = false;
    for (const auto& d : divisors) {
      if (candidate.divmod(d).second.is_zero()) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(std::move(candidate));
  }
  return out;
}

}  // namespace xiform
