#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <variant>

namespace xiform {

/// The field a scalar lives in: the rationals or a prime field F_p, p odd.
class Field {
 public:
  static constexpr Field rationals() noexcept { return Field(0); }
  /// Throws UnsupportedField for p = 2 and for non-primes.
  static Field prime(std::uint32_t p);
  /// Accepts "Q" and "F<p>" (e.g. "F3", "F5").
  static Field parse(std::string_view name);

  [[nodiscard]] constexpr bool is_rational() const noexcept { return p_ == 0; }
  [[nodiscard]] constexpr bool is_finite() const noexcept { return p_ != 0; }
  /// 0 for Q.
  [[nodiscard]] constexpr std::uint32_t characteristic() const noexcept { return p_; }
  [[nodiscard]] std::string name() const;

  friend constexpr bool operator==(Field, Field) noexcept = default;

 private:
  explicit constexpr Field(std::uint32_t p) noexcept : p_(p) {}
  std::uint32_t p_;
};

std::ostream& operator<<(std::ostream& os, Field f);

/// An exact field element. Rationals are kept in lowest terms with positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  /// Rational zero.
  Scalar() : field_(Field::rationals()), value_(mpq_class(0)) {}

  static Scalar zero(Field f);
  static Scalar one(Field f);
  static Scalar from_int(Field f, long long v);
  static Scalar from_rational(Field f, const mpq_class& q);
  /// Parses "-3", "2/7" (any field, denominators must be invertible) or a residue "4".
  static Scalar parse(Field f, std::string_view text);

  [[nodiscard]] Field field() const noexcept { return field_; }
  [[nodiscard]] bool is_zero() const noexcept;
  [[nodiscard]] bool is_one() const noexcept;

  /// Precondition: field().is_rational().
  [[nodiscard]] const mpq_class& rational() const;
  /// Precondition: field().is_finite().
  [[nodiscard]] std::uint32_t residue() const;

  [[nodiscard]] Scalar inverse() const;
  [[nodiscard]] Scalar pow(unsigned e) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "-3", "2/7", or the canonical residue.
  [[nodiscard]] std::string to_string() const;

 private:
  Scalar(Field f, std::uint32_t r) : field_(f), value_(r) {}
  Scalar(Field f, mpq_class q) : field_(f), value_(std::move(q)) {}
  void require_same_field(const Scalar& o) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace xiform
