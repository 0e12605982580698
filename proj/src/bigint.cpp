#include "sl2cong/bigint.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cmath>

namespace sl2cong {

namespace {
constexpr uint64_t kBase = 1ull << 32;
constexpr size_t kKaratsubaCutoff = 32;

std::vector<uint32_t> slice(const std::vector<uint32_t>& v, size_t from, size_t len) {
  std::vector<uint32_t> out;
  if (from >= v.size()) return out;
  len = std::min(len, v.size() - from);
  out.assign(v.begin() + from, v.begin() + from + len);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// out += in << (32*shift), growing out as needed
void add_shifted(std::vector<uint32_t>& out, const std::vector<uint32_t>& in, size_t shift) {
  if (in.empty()) return;
  if (out.size() < in.size() + shift) out.resize(in.size() + shift, 0);
  uint64_t carry = 0;
  size_t i = 0;
  for (; i < in.size(); ++i) {
    uint64_t s = uint64_t(out[i + shift]) + in[i] + carry;
    out[i + shift] = uint32_t(s);
    carry = s >> 32;
  }
  for (; carry && i + shift < out.size(); ++i) {
    uint64_t s = uint64_t(out[i + shift]) + carry;
    out[i + shift] = uint32_t(s);
    carry = s >> 32;
  }
  if (carry) out.push_back(uint32_t(carry));
}

// out -= in (requires out >= in), both little-endian magnitudes
void sub_inplace(std::vector<uint32_t>& out, const std::vector<uint32_t>& in) {
  int64_t borrow = 0;
  for (size_t i = 0; i < in.size() || borrow; ++i) {
    int64_t cur = int64_t(out[i]) - borrow - (i < in.size() ? int64_t(in[i]) : 0);
    if (cur < 0) {
      cur += int64_t(kBase);
      borrow = 1;
    } else {
      borrow = 0;
    }
    out[i] = uint32_t(cur);
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
}
}  // namespace

void BigInt::init_signed(long long v) {
  if (v < 0) {
    neg_ = true;
    // careful with LLONG_MIN
    init_unsigned(~static_cast<unsigned long long>(v) + 1ull);
    neg_ = !d_.empty();
  } else {
    init_unsigned(static_cast<unsigned long long>(v));
  }
}

void BigInt::init_unsigned(unsigned long long v) {
  while (v) {
    d_.push_back(uint32_t(v));
    v >>= 32;
  }
}

BigInt::BigInt(std::string_view s) {
  bool neg = false;
  size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) {
    neg = s[i] == '-';
    ++i;
  }
  if (i == s.size()) throw std::invalid_argument("BigInt: empty numeral");
  for (; i < s.size();) {
    // consume up to 9 digits, then d = d*10^k + chunk
    uint32_t chunk = 0, scale = 1;
    int k = 0;
    while (i < s.size() && k < 9) {
      char c = s[i];
      if (c < '0' || c > '9') throw std::invalid_argument("BigInt: bad digit");
      chunk = chunk * 10 + uint32_t(c - '0');
      scale *= 10;
      ++i;
      ++k;
    }
    uint64_t carry = chunk;
    for (size_t j = 0; j < d_.size(); ++j) {
      uint64_t cur = uint64_t(d_[j]) * scale + carry;
      d_[j] = uint32_t(cur);
      carry = cur >> 32;
    }
    while (carry) {
      d_.push_back(uint32_t(carry));
      carry >>= 32;
    }
  }
  trim();
  neg_ = neg && !d_.empty();
}

void BigInt::trim() {
  while (!d_.empty() && d_.back() == 0) d_.pop_back();
  if (d_.empty()) neg_ = false;
}

int BigInt::cmp_mag(const std::vector<uint32_t>& a, const std::vector<uint32_t>& b) {
  if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

std::vector<uint32_t> BigInt::add_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  const auto &big = a.size() >= b.size() ? a : b, &small = a.size() >= b.size() ? b : a;
  std::vector<uint32_t> out(big.size());
  uint64_t carry = 0;
  for (size_t i = 0; i < big.size(); ++i) {
    uint64_t s = uint64_t(big[i]) + (i < small.size() ? small[i] : 0) + carry;
    out[i] = uint32_t(s);
    carry = s >> 32;
  }
  if (carry) out.push_back(uint32_t(carry));
  return out;
}

std::vector<uint32_t> BigInt::sub_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  std::vector<uint32_t> out = a;
  sub_inplace(out, b);
  return out;
}

std::vector<uint32_t> BigInt::mul_school(const std::vector<uint32_t>& a,
                                         const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  std::vector<uint32_t> out(a.size() + b.size(), 0);
  for (size_t i = 0; i < a.size(); ++i) {
    uint64_t carry = 0;
    uint64_t ai = a[i];
    for (size_t j = 0; j < b.size(); ++j) {
      uint64_t cur = uint64_t(out[i + j]) + ai * b[j] + carry;
      out[i + j] = uint32_t(cur);
      carry = cur >> 32;
    }
    size_t k = i + b.size();
    while (carry) {
      uint64_t cur = uint64_t(out[k]) + carry;
      out[k] = uint32_t(cur);
      carry = cur >> 32;
      ++k;
    }
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

std::vector<uint32_t> BigInt::mul_mag(const std::vector<uint32_t>& a,
                                      const std::vector<uint32_t>& b) {
  if (a.empty() || b.empty()) return {};
  if (std::min(a.size(), b.size()) <= kKaratsubaCutoff) return mul_school(a, b);
  const size_t h = (std::max(a.size(), b.size()) + 1) / 2;
  auto a0 = slice(a, 0, h), a1 = slice(a, h, SIZE_MAX);
  auto b0 = slice(b, 0, h), b1 = slice(b, h, SIZE_MAX);
  auto z0 = mul_mag(a0, b0);
  auto z2 = mul_mag(a1, b1);
  auto z1 = mul_mag(add_mag(a0, a1), add_mag(b0, b1));
  sub_inplace(z1, z0);
  sub_inplace(z1, z2);
  std::vector<uint32_t> out = z0;
  add_shifted(out, z1, h);
  add_shifted(out, z2, 2 * h);
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Knuth Algorithm D in base 2^32. Requires |u| >= |v|, v.size() >= 2.
void BigInt::divmod_mag(const std::vector<uint32_t>& u, const std::vector<uint32_t>& v,
                        std::vector<uint32_t>& q, std::vector<uint32_t>& r) {
  const size_t m = u.size(), n = v.size();
  if (n == 1) {
    const uint64_t d = v[0];
    q.assign(m, 0);
    uint64_t rem = 0;
    for (size_t i = m; i-- > 0;) {
      uint64_t cur = (rem << 32) | u[i];
      q[i] = uint32_t(cur / d);
      rem = cur % d;
    }
    while (!q.empty() && q.back() == 0) q.pop_back();
    r.clear();
    if (rem) r.push_back(uint32_t(rem));
    return;
  }
  const int s = std::countl_zero(v[n - 1]);
  std::vector<uint32_t> vn(n), un(m + 1);
  for (size_t i = n - 1; i > 0; --i)
    vn[i] = (v[i] << s) | (s ? uint32_t(uint64_t(v[i - 1]) >> (32 - s)) : 0);
  vn[0] = v[0] << s;
  un[m] = s ? uint32_t(uint64_t(u[m - 1]) >> (32 - s)) : 0;
  for (size_t i = m - 1; i > 0; --i)
    un[i] = (u[i] << s) | (s ? uint32_t(uint64_t(u[i - 1]) >> (32 - s)) : 0);
  un[0] = u[0] << s;

  q.assign(m - n + 1, 0);
  for (size_t j = m - n + 1; j-- > 0;) {
    uint64_t num = (uint64_t(un[j + n]) << 32) | un[j + n - 1];
    uint64_t qhat = num / vn[n - 1];
    uint64_t rhat = num % vn[n - 1];
    while (qhat >= kBase || qhat * vn[n - 2] > ((rhat << 32) | un[j + n - 2])) {
      --qhat;
      rhat += vn[n - 1];
      if (rhat >= kBase) break;
    }
    int64_t borrow = 0;
    int64_t t = 0;
    for (size_t i = 0; i < n; ++i) {
      uint64_t prod = qhat * vn[i];
      t = int64_t(un[i + j]) - borrow - int64_t(prod & 0xffffffffu);
      un[i + j] = uint32_t(t);
      borrow = int64_t(prod >> 32) - (t >> 32);
    }
    t = int64_t(un[j + n]) - borrow;
    un[j + n] = uint32_t(t);
    q[j] = uint32_t(qhat);
    if (t < 0) {
      --q[j];
      uint64_t carry = 0;
      for (size_t i = 0; i < n; ++i) {
        uint64_t sum = uint64_t(un[i + j]) + vn[i] + carry;
        un[i + j] = uint32_t(sum);
        carry = sum >> 32;
      }
      un[j + n] = uint32_t(uint64_t(un[j + n]) + carry);
    }
  }
  while (!q.empty() && q.back() == 0) q.pop_back();
  r.assign(n, 0);
  for (size_t i = 0; i < n - 1; ++i)
    r[i] = s ? ((un[i] >> s) | uint32_t(uint64_t(un[i + 1]) << (32 - s))) : un[i];
  r[n - 1] = un[n - 1] >> s;
  while (!r.empty() && r.back() == 0) r.pop_back();
}

BigInt BigInt::abs() const {
  BigInt out = *this;
  out.neg_ = false;
  return out;
}

BigInt BigInt::operator-() const {
  BigInt out = *this;
  if (!out.d_.empty()) out.neg_ = !out.neg_;
  return out;
}

BigInt& BigInt::operator+=(const BigInt& o) {
  if (neg_ == o.neg_) {
    d_ = add_mag(d_, o.d_);
  } else {
    int c = cmp_mag(d_, o.d_);
    if (c == 0) {
      d_.clear();
      neg_ = false;
    } else if (c > 0) {
      d_ = sub_mag(d_, o.d_);
    } else {
      d_ = sub_mag(o.d_, d_);
      neg_ = o.neg_;
    }
  }
  trim();
  return *this;
}

BigInt& BigInt::operator-=(const BigInt& o) { return *this += -o; }

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt out;
  out.d_ = BigInt::mul_mag(a.d_, b.d_);
  out.neg_ = !out.d_.empty() && (a.neg_ != b.neg_);
  return out;
}

BigInt& BigInt::operator*=(const BigInt& o) {
  *this = *this * o;
  return *this;
}

void BigInt::divmod(const BigInt& a, const BigInt& b, BigInt& q, BigInt& r) {
  if (b.is_zero()) throw std::domain_error("BigInt: division by zero");
  if (cmp_mag(a.d_, b.d_) < 0) {
    q = BigInt();
    r = a;
    return;
  }
  BigInt qq, rr;
  divmod_mag(a.d_, b.d_, qq.d_, rr.d_);
  qq.neg_ = !qq.d_.empty() && (a.neg_ != b.neg_);
  rr.neg_ = !rr.d_.empty() && a.neg_;
  q = std::move(qq);
  r = std::move(rr);
}

BigInt& BigInt::operator/=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  return *this = std::move(q);
}

BigInt& BigInt::operator%=(const BigInt& o) {
  BigInt q, r;
  divmod(*this, o, q, r);
  return *this = std::move(r);
}

BigInt BigInt::mod_floor(const BigInt& a, const BigInt& m) {
  if (m.signum() <= 0) throw std::domain_error("mod_floor: modulus must be positive");
  BigInt r = a % m;
  if (r.is_neg()) r += m;
  return r;
}

BigInt BigInt::gcd(BigInt a, BigInt b) {
  a.neg_ = false;
  b.neg_ = false;
  while (!b.is_zero()) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

BigInt BigInt::egcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y) {
  BigInt old_r = a, r = b;
  BigInt old_s = 1, s = 0;
  BigInt old_t = 0, t = 1;
  while (!r.is_zero()) {
    BigInt q, rem;
    divmod(old_r, r, q, rem);
    old_r = std::move(r);
    r = std::move(rem);
    BigInt ns = old_s - q * s;
    old_s = std::move(s);
    s = std::move(ns);
    BigInt nt = old_t - q * t;
    old_t = std::move(t);
    t = std::move(nt);
  }
  if (old_r.is_neg()) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = std::move(old_s);
  y = std::move(old_t);
  return old_r;
}

BigInt BigInt::pow(const BigInt& base, unsigned long long e) {
  BigInt acc = 1, b = base;
  while (e) {
    if (e & 1) acc *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return acc;
}

BigInt BigInt::modpow(const BigInt& base, const BigInt& e, const BigInt& m) {
  if (m.signum() <= 0) throw std::domain_error("modpow: modulus must be positive");
  if (e.is_neg()) throw std::domain_error("modpow: negative exponent");
  BigInt acc = mod_floor(1, m);  // 0 when m = 1
  BigInt b = mod_floor(base, m);
  // iterate bits of e from least significant limb upward
  for (size_t li = 0; li < e.d_.size(); ++li) {
    uint32_t limb = e.d_[li];
    int bits = (li + 1 == e.d_.size()) ? (32 - std::countl_zero(limb)) : 32;
    for (int i = 0; i < bits; ++i) {
      if (limb & (1u << i)) acc = mod_floor(acc * b, m);
      b = mod_floor(b * b, m);
    }
  }
  return acc;
}

bool BigInt::modinv(const BigInt& a, const BigInt& m, BigInt& out) {
  BigInt x, y;
  BigInt g = egcd(a, m, x, y);
  if (!g.is_one()) return false;
  out = mod_floor(x, m);
  return true;
}

BigInt BigInt::isqrt(const BigInt& n) {
  if (n.is_neg()) throw std::domain_error("isqrt: negative");
  if (n.is_zero()) return 0;
  if (n.fits_int64()) {
    long long v = n.to_int64();
    long long r = static_cast<long long>(std::sqrt(static_cast<double>(v)));
    while (r > 0 && r * r > v) --r;
    while ((r + 1) * (r + 1) <= v) ++r;
    return r;
  }
  // Newton iteration; initial guess from limb count
  BigInt x = BigInt::pow(2, 16 * n.d_.size() + 1);
  while (true) {
    BigInt y = (x + n / x);
    // y /= 2
    uint32_t carry = 0;
    for (size_t i = y.d_.size(); i-- > 0;) {
      uint32_t cur = y.d_[i];
      y.d_[i] = (cur >> 1) | (carry << 31);
      carry = cur & 1;
    }
    y.trim();
    if (y >= x) break;
    x = std::move(y);
  }
  return x;
}

bool BigInt::fits_int64() const {
  if (d_.size() < 2) return true;
  if (d_.size() > 2) return false;
  uint64_t mag = (uint64_t(d_[1]) << 32) | d_[0];
  return neg_ ? mag <= (1ull << 63) : mag < (1ull << 63);
}

long long BigInt::to_int64() const {
  if (!fits_int64()) throw std::overflow_error("BigInt: does not fit in int64");
  uint64_t mag = 0;
  if (d_.size() >= 1) mag = d_[0];
  if (d_.size() == 2) mag |= uint64_t(d_[1]) << 32;
  return neg_ ? -static_cast<long long>(mag) : static_cast<long long>(mag);
}

std::string BigInt::str() const {
  if (d_.empty()) return "0";
  std::vector<uint32_t> chunks;  // base 10^9, little-endian
  std::vector<uint32_t> cur = d_;
  while (!cur.empty()) {
    uint64_t rem = 0;
    for (size_t i = cur.size(); i-- > 0;) {
      uint64_t v = (rem << 32) | cur[i];
      cur[i] = uint32_t(v / 1000000000ull);
      rem = v % 1000000000ull;
    }
    while (!cur.empty() && cur.back() == 0) cur.pop_back();
    chunks.push_back(uint32_t(rem));
  }
  std::string out;
  if (neg_) out.push_back('-');
  out += std::to_string(chunks.back());
  for (size_t i = chunks.size() - 1; i-- > 0;) {
    std::string part = std::to_string(chunks[i]);
    out.append(9 - part.size(), '0');
    out += part;
  }
  return out;
}

std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
  if (a.neg_ != b.neg_) return a.neg_ ? std::strong_ordering::less : std::strong_ordering::greater;
  int c = BigInt::cmp_mag(a.d_, b.d_);
  if (a.neg_) c = -c;
  return c < 0   ? std::strong_ordering::less
         : c > 0 ? std::strong_ordering::greater
                 : std::strong_ordering::equal;
}

}  // namespace sl2cong
