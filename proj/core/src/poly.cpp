#include "xiform/poly.hpp"

#include <ostream>
#include <sstream>

#include "xiform/errors.hpp"

namespace xiform {

Poly::Poly(Field f, std::vector<Scalar> coefficients) : field_(f), coeffs_(std::move(coefficients)) {
  for (const auto& c : coeffs_)
    if (c.field() != f) throw FieldMismatch("polynomial coefficient over another field");
  trim();
}

Poly Poly::constant(const Scalar& c) { return Poly(c.field(), {c}); }

Poly Poly::x(Field f) { return Poly(f, {Scalar::zero(f), Scalar::one(f)}); }

Poly Poly::from_ints(Field f, std::vector<long long> coefficients) {
  std::vector<Scalar> cs;
  cs.reserve(coefficients.size());
  for (auto c : coefficients) cs.push_back(Scalar::from_int(f, c));
  return Poly(f, std::move(cs));
}

Poly Poly::monic_from_tail(Field f, const std::vector<Scalar>& tail) {
  std::vector<Scalar> cs(tail.rbegin(), tail.rend());
  cs.push_back(Scalar::one(f));
  return Poly(f, std::move(cs));
}

void Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& o) const {
  if (field_ != o.field_) throw FieldMismatch("polynomials over different fields");
}

Scalar Poly::coefficient(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Scalar::zero(field_); }

const Scalar& Poly::leading() const {
  if (coeffs_.empty()) throw DivisionByZero("zero polynomial has no leading coefficient");
  return coeffs_.back();
}

bool Poly::is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }

Scalar Poly::evaluate(const Scalar& at) const {
  if (at.field() != field_) throw FieldMismatch("evaluation point over another field");
  Scalar acc = Scalar::zero(field_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

Poly Poly::pow(unsigned e) const {
  Poly result = constant(Scalar::one(field_));
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

Poly Poly::monic() const { return *this * leading().inverse(); }

std::pair<Poly, Poly> Poly::divmod(const Poly& divisor) const {
  require_same_field(divisor);
  if (divisor.is_zero()) throw DivisionByZero("polynomial division by zero");
  Poly rem = *this;
  const int dd = divisor.degree();
  if (rem.degree() < dd) return {Poly(field_), rem};
  const Scalar lead_inv = divisor.leading().inverse();
  std::vector<Scalar> quot(static_cast<std::size_t>(rem.degree() - dd + 1), Scalar::zero(field_));
  while (!rem.is_zero() && rem.degree() >= dd) {
    const auto shift = static_cast<std::size_t>(rem.degree() - dd);
    const Scalar c = rem.leading() * lead_inv;
    quot[shift] = c;
    for (std::size_t k = 0; k < divisor.coeffs_.size(); ++k) rem.coeffs_[shift + k] -= c * divisor.coeffs_[k];
    rem.trim();
  }
  return {Poly(field_, std::move(quot)), rem};
}

Poly Poly::operator-() const {
  Poly out(*this);
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Poly& Poly::operator+=(const Poly& o) {
  require_same_field(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  require_same_field(o);
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Scalar::zero(field_));
  for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Scalar& s) {
  if (s.field() != field_) throw FieldMismatch("scalar over another field");
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.require_same_field(b);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  std::vector<Scalar> out(a.coeffs_.size() + b.coeffs_.size() - 1, Scalar::zero(a.field_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Poly(a.field_, std::move(out));
}

std::string Poly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = coeffs_.size(); k-- > 0;) {
    const Scalar& c = coeffs_[k];
    if (c.is_zero()) continue;
    std::string cs = c.to_string();
    bool negative = field_.is_rational() && !cs.empty() && cs[0] == '-';
    if (negative) cs.erase(0, 1);
    if (first) {
      if (negative) os << '-';
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const bool unit = cs == "1";
    if (k == 0) {
      os << cs;
    } else {
      if (!unit) os << cs << '*';
      os << 'x';
      if (k > 1) os << '^' << k;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

}  // namespace xiform
