#include "xiform/scalar.hpp"

#include <ostream>
#include <tuple>
#include <utility>

#include "xiform/errors.hpp"

namespace xiform {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t reduce(const mpz_class& v, std::uint32_t p) {
  mpz_class r = v % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    std::int64_t q = r / new_r;
    std::tie(t, new_t) = std::make_pair(new_t, t - q * new_t);
    std::tie(r, new_r) = std::make_pair(new_r, r - q * new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

mpz_class parse_integer(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty numeral");
  std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (start == s.size()) throw ParseError("malformed numeral '" + s + "'");
  for (std::size_t i = start; i < s.size(); ++i)
    if (s[i] < '0' || s[i] > '9') throw ParseError("malformed numeral '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  return mpz_class(s, 10);
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Field Field::prime(std::uint32_t p) {
  if (p == 2) throw UnsupportedField("characteristic 2 is not supported");
  if (!is_prime(p) || p > (1u << 31)) throw UnsupportedField("F" + std::to_string(p) + " is not a supported prime field");
  return Field(p);
}

Field Field::parse(std::string_view name) {
  name = trim(name);
  if (name == "Q" || name == "QQ") return rationals();
  if (name.size() >= 2 && (name[0] == 'F' || name[0] == 'f')) {
    std::uint64_t p = 0;
    for (char c : name.substr(1)) {
      if (c < '0' || c > '9') throw ParseError("unknown field '" + std::string(name) + "'");
      p = p * 10 + static_cast<std::uint64_t>(c - '0');
      if (p > (1ull << 32)) throw UnsupportedField("modulus too large");
    }
    return prime(static_cast<std::uint32_t>(p));
  }
  throw ParseError("unknown field '" + std::string(name) + "'");
}

std::string Field::name() const { return is_rational() ? "Q" : "F" + std::to_string(p_); }

std::ostream& operator<<(std::ostream& os, Field f) { return os << f.name(); }

Scalar Scalar::zero(Field f) { return f.is_rational() ? Scalar(f, mpq_class(0)) : Scalar(f, 0u); }

Scalar Scalar::one(Field f) { return f.is_rational() ? Scalar(f, mpq_class(1)) : Scalar(f, 1u); }

Scalar Scalar::from_int(Field f, long long v) {
  if (f.is_rational()) return Scalar(f, mpq_class(static_cast<long>(v)));
  const auto p = static_cast<long long>(f.characteristic());
  long long r = v % p;
  if (r < 0) r += p;
  return Scalar(f, static_cast<std::uint32_t>(r));
}

Scalar Scalar::from_rational(Field f, const mpq_class& q) {
  if (f.is_rational()) {
    mpq_class c(q);
    c.canonicalize();
    return Scalar(f, std::move(c));
  }
  const auto p = f.characteristic();
  const std::uint32_t den = reduce(q.get_den(), p);
  if (den == 0) throw DivisionByZero("denominator vanishes in " + f.name());
  const std::uint64_t num = reduce(q.get_num(), p);
  return Scalar(f, static_cast<std::uint32_t>(num * inverse_mod(den, p) % p));
}

Scalar Scalar::parse(Field f, std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  mpq_class q;
  if (slash == std::string_view::npos) {
    q = mpq_class(parse_integer(text));
  } else {
    mpz_class num = parse_integer(trim(text.substr(0, slash)));
    mpz_class den = parse_integer(trim(text.substr(slash + 1)));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    if (f.is_finite() && reduce(den, f.characteristic()) == 0)
      throw ParseError("denominator of '" + std::string(text) + "' vanishes in " + f.name());
    q = mpq_class(num, den);
    q.canonicalize();
  }
  return from_rational(f, q);
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw FieldMismatch("scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
  if (!field_.is_finite()) throw FieldMismatch("scalar is not a residue");
  return std::get<std::uint32_t>(value_);
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw FieldMismatch("mixed fields: " + field_.name() + " and " + o.field_.name());
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero");
  if (field_.is_rational()) {
    mpq_class q = 1 / std::get<mpq_class>(value_);
    return Scalar(field_, std::move(q));
  }
  return Scalar(field_, inverse_mod(std::get<std::uint32_t>(value_), field_.characteristic()));
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = one(field_);
  Scalar base = *this;
  while (e != 0) {
    if (e & 1u) result *= base;
    base *= base;
    e >>= 1u;
  }
  return result;
}

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-std::get<mpq_class>(value_)));
  const auto r = std::get<std::uint32_t>(value_);
  return Scalar(field_, r == 0 ? 0u : field_.characteristic() - r);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::uint32_t>(value_);
    const std::uint64_t s = std::uint64_t{r} + std::get<std::uint32_t>(o.value_);
    r = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>((std::uint64_t{r} + p - std::get<std::uint32_t>(o.value_)) % p);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  require_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<std::uint32_t>(value_);
    r = static_cast<std::uint32_t>(std::uint64_t{r} * std::get<std::uint32_t>(o.value_) % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  require_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace xiform
