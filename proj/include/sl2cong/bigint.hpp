#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace sl2cong {

// Arbitrary-precision signed integer: sign + magnitude over 32-bit limbs
// (little-endian, no trailing zero limbs). Division truncates toward zero,
// matching built-in integer semantics; use mod_floor for a canonical
// nonnegative residue.
class BigInt {
 public:
  BigInt() = default;
  template <std::integral T>
  BigInt(T v) {
    if constexpr (std::is_signed_v<T>)
      init_signed(static_cast<long long>(v));
    else
      init_unsigned(static_cast<unsigned long long>(v));
  }
  explicit BigInt(std::string_view decimal);

  bool is_zero() const { return d_.empty(); }
  bool is_neg() const { return neg_; }
  bool is_one() const { return !neg_ && d_.size() == 1 && d_[0] == 1; }
  bool is_even() const { return d_.empty() || (d_[0] & 1u) == 0; }
  int signum() const { return d_.empty() ? 0 : (neg_ ? -1 : 1); }

  BigInt abs() const;
  BigInt operator-() const;

  BigInt& operator+=(const BigInt& o);
  BigInt& operator-=(const BigInt& o);
  BigInt& operator*=(const BigInt& o);
  BigInt& operator/=(const BigInt& o);
  BigInt& operator%=(const BigInt& o);

  friend BigInt operator+(BigInt a, const BigInt& b) { return a += b; }
  friend BigInt operator-(BigInt a, const BigInt& b) { return a -= b; }
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  friend BigInt operator/(BigInt a, const BigInt& b) { return a /= b; }
  friend BigInt operator%(BigInt a, const BigInt& b) { return a %= b; }

  // q = trunc(a/b), r = a - q*b (same sign as a). b == 0 throws.
  static void divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r);

  // a mod m in [0, m); m must be positive.
  static BigInt mod_floor(const BigInt& a, const BigInt& m);

  static BigInt gcd(BigInt a, BigInt b);
  // g = ax + by, g >= 0.
  static BigInt egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);
  static BigInt pow(const BigInt& base, unsigned long long e);
  // (base^e) mod m, m > 0, e >= 0.
  static BigInt modpow(const BigInt& base, const BigInt& e, const BigInt& m);
  // Inverse of a mod m if gcd(a, m) == 1, else nullopt-like: returns false.
  static bool modinv(const BigInt& a, const BigInt& m, BigInt& out);

  static BigInt isqrt(const BigInt& n);  // floor square root, n >= 0

  bool fits_int64() const;
  long long to_int64() const;  // throws if it does not fit

  std::string str() const;

  friend bool operator==(const BigInt& a, const BigInt& b) {
    return a.neg_ == b.neg_ && a.d_ == b.d_;
  }
  friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b);

  size_t limb_count() const { return d_.size(); }

 private:
  std::vector<uint32_t> d_;
  bool neg_ = false;

  void init_signed(long long v);
  void init_unsigned(unsigned long long v);
  void trim();
  static int cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b);
  static std::vector<uint32_t> add_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  // requires |a| >= |b|
  static std::vector<uint32_t> sub_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_mag(const std::vector<uint32_t>& a,
                                       const std::vector<uint32_t>& b);
  static std::vector<uint32_t> mul_school(const std::vector<uint32_t>& a,
                                          const std::vector<uint32_t>& b);
  static void divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                         std::vector<uint32_t>& q, std::vector<uint32_t>& r);
};

inline BigInt abs(const BigInt& a) { return a.abs(); }

}  // namespace sl2cong
