#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "xiform/scalar.hpp"

namespace xiform {

/// Univariate polynomial over a field, constant term first. The trailing
/// coefficient is nonzero unless the polynomial is zero (empty coefficient list).
class Poly {
 public:
  explicit Poly(Field f = Field::rationals()) : field_(f) {}
  Poly(Field f, std::vector<Scalar> coefficients);

  static Poly constant(const Scalar& c);
  /// The monomial x.
  static Poly x(Field f);
  static Poly from_ints(Field f, std::vector<long long> coefficients);
  /// Monic polynomial from the tail coefficients a_1..a_s of x^s + a_1 x^{s-1} + ... + a_s.
  static Poly monic_from_tail(Field f, const std::vector<Scalar>& tail);

  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  [[nodiscard]] int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  [[nodiscard]] const std::vector<Scalar>& coefficients() const noexcept { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  [[nodiscard]] Scalar coefficient(std::size_t k) const;
  [[nodiscard]] const Scalar& leading() const;
  [[nodiscard]] bool is_monic() const;

  [[nodiscard]] Scalar evaluate(const Scalar& at) const;
  [[nodiscard]] Poly pow(unsigned e) const;
  [[nodiscard]] Poly monic() const;
  /// Quotient and remainder; throws DivisionByZero for a zero divisor.
  [[nodiscard]] std::pair<Poly, Poly> divmod(const Poly& divisor) const;

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Scalar& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, const Scalar& s) { return a *= s; }

  friend bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

  /// Human-readable, highest degree first, e.g. "x^2 + 3/2*x + 1/2".
  [[nodiscard]] std::string to_string() const;

 private:
  void trim();
  void require_same_field(const Poly& o) const;

  Field field_;
  std::vector<Scalar> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

}  // namespace xiform
