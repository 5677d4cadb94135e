#include "ybx/scalar.hpp"

#include <cstdlib>

namespace ybx {

namespace {

bool is_prime_u32(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

std::uint64_t mod_pos(long long n, std::uint64_t p) {
  long long r = n % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return static_cast<std::uint64_t>(r);
}

// Extended Euclid; requires gcd(a, p) = 1.
std::uint64_t mod_inverse(std::uint64_t a, std::uint64_t p) {
  long long t = 0, nt = 1;
  long long r = static_cast<long long>(p), nr = static_cast<long long>(a);
  while (nr != 0) {
    long long q = r / nr;
    t -= q * nt;
    std::swap(t, nt);
    r -= q * nr;
    std::swap(r, nr);
  }
  if (t < 0) t += static_cast<long long>(p);
  return static_cast<std::uint64_t>(t);
}

}  // namespace

Field Field::mod(std::uint32_t p) {
  if (!is_prime_u32(p))
    throw NonPrimeModulus("modulus " + std::to_string(p) + " is not prime");
  return Field(p);
}

std::string Field::str() const {
  return is_rational() ? "Q" : "F" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) { return of_int(f, 0); }
Scalar Scalar::one(const Field& f) { return of_int(f, 1); }

Scalar Scalar::of_int(const Field& f, long n) {
  if (f.is_rational()) return Scalar(f, mpq_class(n));
  return Scalar(f, mod_pos(n, f.prime()));
}

Scalar Scalar::rational(long num, long den) {
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  mpq_class q(num, den);
  q.canonicalize();
  return Scalar(Field::rationals(), std::move(q));
}

Scalar Scalar::rational(const mpq_class& q) {
  mpq_class c = q;
  c.canonicalize();
  return Scalar(Field::rationals(), std::move(c));
}

Scalar Scalar::residue(const Field& f, long long n) {
  if (!f.is_modp()) throw FieldMismatch("residue() needs a prime field");
  return Scalar(f, mod_pos(n, f.prime()));
}

void Scalar::require_same_field(const Scalar& o) const {
  if (field_ != o.field_)
    throw FieldMismatch("cannot combine " + field_.str() + " with " + o.field_.str());
}

bool Scalar::is_zero() const {
  return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
  return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rational()) return Scalar(field_, mpq_class(rat_ + o.rat_));
  return Scalar(field_, (res_ + o.res_) % field_.prime());
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rational()) return Scalar(field_, mpq_class(rat_ - o.rat_));
  return Scalar(field_, (res_ + field_.prime() - o.res_) % field_.prime());
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same_field(o);
  if (field_.is_rational()) return Scalar(field_, mpq_class(rat_ * o.rat_));
  return Scalar(field_, (res_ * o.res_) % field_.prime());
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inverse(); }

Scalar Scalar::operator-() const {
  if (field_.is_rational()) return Scalar(field_, mpq_class(-rat_));
  return Scalar(field_, res_ == 0 ? 0 : field_.prime() - res_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in " + field_.str());
  if (field_.is_rational()) return Scalar(field_, mpq_class(1 / rat_));
  return Scalar(field_, mod_inverse(res_, field_.prime()));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.field_ != b.field_) return false;
  return a.field_.is_rational() ? a.rat_ == b.rat_ : a.res_ == b.res_;
}

const mpq_class& Scalar::rational_value() const {
  if (!field_.is_rational()) throw FieldMismatch("not a rational scalar");
  return rat_;
}

std::uint64_t Scalar::residue_value() const {
  if (!field_.is_modp()) throw FieldMismatch("not a prime-field scalar");
  return res_;
}

std::string Scalar::str() const {
  if (field_.is_rational()) return rat_.get_str();
  return std::to_string(res_);
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
  if (text.empty()) throw Error("empty scalar literal");
  auto slash = text.find('/');
  if (f.is_rational()) {
    mpq_class q;
    if (q.set_str(text, 10) != 0)
      throw Error("invalid rational literal '" + text + "'");
    if (q.get_den() == 0) throw DivisionByZero("zero denominator in '" + text + "'");
    q.canonicalize();
    return Scalar(f, std::move(q));
  }
  if (slash != std::string::npos) {
    Scalar num = parse(f, text.substr(0, slash));
    Scalar den = parse(f, text.substr(slash + 1));
    return num / den;
  }
  errno = 0;
  char* end = nullptr;
  long long n = std::strtoll(text.c_str(), &end, 10);
  if (errno != 0 || end == text.c_str() || *end != '\0')
    throw Error("invalid residue literal '" + text + "'");
  return residue(f, n);
}

}  // namespace ybx
