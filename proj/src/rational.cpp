#include "sl2cong/rational.hpp"

#include <utility>

namespace sl2cong {

Rational::Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) {
  if (den_.is_zero()) throw std::domain_error("Rational: zero denominator");
  if (num_.is_zero()) {
    den_ = 1;
    return;
  }
  if (den_.is_neg()) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = BigInt::gcd(num_, den_);
  if (!g.is_one()) {
    num_ /= g;
    den_ /= g;
  }
}

Rational Rational::parse(std::string_view s) {
  size_t slash = s.find('/');
  if (slash == std::string_view::npos) return Rational(BigInt(s));
  return Rational(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

Rational Rational::operator-() const {
  Rational out = *this;
  out.num_ = -out.num_;
  return out;
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw std::domain_error("Rational: division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  return (a.num_ * b.den_) <=> (b.num_ * a.den_);
}

Rational Rational::pow(const Rational& x, const BigInt& e) {
  if (e.is_zero()) return Rational(1);
  if (e.is_neg()) return pow(x.inverse(), -e);
  if (!e.fits_int64())
    throw std::overflow_error("Rational::pow: exponent too large");
  unsigned long long k = static_cast<unsigned long long>(e.to_int64());
  return Rational(BigInt::pow(x.num_, k), BigInt::pow(x.den_, k));
}

std::string Rational::str() const {
  if (den_.is_one()) return num_.str();
  return num_.str() + "/" + den_.str();
}

PValuation p_valuation(const Rational& x, long long p) {
  if (x.is_zero()) throw std::domain_error("p_valuation: undefined at zero");
  if (p < 2) throw std::domain_error("p_valuation: p must be prime");
  const BigInt P(p);
  long long v = 0;
  BigInt n = x.num(), q, r;
  while (true) {
    BigInt::divmod(n, P, q, r);
    if (!r.is_zero()) break;
    n = q;
    ++v;
  }
  BigInt d = x.den();
  while (true) {
    BigInt::divmod(d, P, q, r);
    if (!r.is_zero()) break;
    d = q;
    --v;
  }
  return PValuation{v, Rational(std::move(n), std::move(d))};
}

bool in_z_inv_p(const Rational& x, long long p) {
  BigInt d = x.den(), q, r;
  const BigInt P(p);
  while (!d.is_one()) {
    BigInt::divmod(d, P, q, r);
    if (!r.is_zero()) return false;
    d = q;
  }
  return true;
}

BigInt reduce_mod(const Rational& x, const BigInt& r) {
  if (r.signum() <= 0) throw std::domain_error("reduce_mod: modulus must be positive");
  if (r.is_one()) return 0;
  BigInt dinv;
  if (!BigInt::modinv(x.den(), r, dinv))
    throw NotReducible("reduce_mod: denominator " + x.den().str() +
                       " not invertible mod " + r.str());
  return BigInt::mod_floor(x.num() * dinv, r);
}

}  // namespace sl2cong
