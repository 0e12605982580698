#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "sl2cong/bigint.hpp"

namespace sl2cong {

// Exact fraction. Invariants: gcd(num, den) == 1, den >= 1, zero is 0/1.
class Rational {
 public:
  Rational() : num_(0), den_(1) {}
  Rational(long long n) : num_(n), den_(1) {}
  Rational(int n) : num_(n), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}
  Rational(BigInt n, BigInt d);  // normalizes; throws on d == 0

  // "num/den" or "num"; optional leading sign; no whitespace.
  static Rational parse(std::string_view s);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_integer() const { return den_.is_one(); }
  int signum() const { return num_.signum(); }

  Rational operator-() const;
  Rational inverse() const;  // throws on zero

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);  // throws on b == 0
  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

  // x^e; negative e inverts (throws on zero base).
  static Rational pow(const Rational& x, const BigInt& e);

  std::string str() const;  // "num/den", den omitted when 1

 private:
  BigInt num_, den_;
};

// value = unit * p^v exactly, with p dividing neither part of unit.
struct PValuation {
  long long v;
  Rational unit;
};

// x != 0, p prime. Zero has no valuation: throws std::domain_error.
PValuation p_valuation(const Rational& x, long long p);

// true iff den(x) is a power of p (p^0 = 1 included).
bool in_z_inv_p(const Rational& x, long long p);

// num * den^{-1} mod r, canonical in [0, r). Throws NotReducible when
// gcd(den, r) != 1.
struct NotReducible : std::domain_error {
  explicit NotReducible(const std::string& what) : std::domain_error(what) {}
};
BigInt reduce_mod(const Rational& x, const BigInt& r);

}  // namespace sl2cong
