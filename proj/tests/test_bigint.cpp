#include <doctest.h>

#include "helpers.hpp"
#include "sl2cong/bigint.hpp"

using namespace sl2cong;
using testutil::random_bigint;
using testutil::rng;

TEST_CASE("small-value round trips against built-in arithmetic") {
  auto g = rng(0xb16b00b5);
  std::uniform_int_distribution<long long> d(-1'000'000'000LL, 1'000'000'000LL);
  for (int i = 0; i < 2000; ++i) {
    long long a = d(g), b = d(g);
    CHECK((BigInt(a) + BigInt(b)).to_int64() == a + b);
    CHECK((BigInt(a) - BigInt(b)).to_int64() == a - b);
    CHECK((BigInt(a) * BigInt(b)).to_int64() == (long long)((__int128)a * b));
    if (b != 0) {
      CHECK((BigInt(a) / BigInt(b)).to_int64() == a / b);
      CHECK((BigInt(a) % BigInt(b)).to_int64() == a % b);
    }
    CHECK((BigInt(a) <=> BigInt(b)) == (a <=> b));
  }
}

TEST_CASE("divmod identity on random large operands") {
  auto g = rng(0xdeadbeef);
  for (int i = 0; i < 500; ++i) {
    BigInt a = random_bigint(g, 12);
    BigInt b = random_bigint(g, 6);
    if (b.is_zero()) continue;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    // truncation: remainder carries the dividend's sign
    if (!r.is_zero()) CHECK(r.is_neg() == a.is_neg());
  }
}

TEST_CASE("multiplication is commutative, associative, distributive") {
  auto g = rng(0xca11ab1e);
  for (int i = 0; i < 200; ++i) {
    BigInt a = random_bigint(g, 9), b = random_bigint(g, 9), c = random_bigint(g, 9);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
  }
}

TEST_CASE("decimal round trip") {
  auto g = rng(0x5caff01d);
  for (int i = 0; i < 300; ++i) {
    BigInt a = random_bigint(g, 10);
    CHECK(BigInt(a.str()) == a);
  }
  CHECK(BigInt("0").str() == "0");
  CHECK(BigInt("-0").str() == "0");
  CHECK(BigInt("00012").str() == "12");
  CHECK(BigInt("+42").str() == "42");
  CHECK_THROWS(BigInt(""));
  CHECK_THROWS(BigInt("12x"));
}

TEST_CASE("known big values") {
  CHECK(BigInt::pow(BigInt(2), 128).str() == "340282366920938463463374607431768211456");
  BigInt f(1);
  for (int i = 2; i <= 50; ++i) f *= BigInt(i);
  CHECK(f.str() == "30414093201713378043612608166064768844377641568960512000000000000");
  CHECK(BigInt(INT64_MIN).str() == "-9223372036854775808");
  CHECK(BigInt(INT64_MIN).to_int64() == INT64_MIN);
  CHECK(!(BigInt(INT64_MAX) + BigInt(1)).fits_int64());
}

TEST_CASE("karatsuba agrees with schoolbook via algebraic identity") {
  // operands big enough to take the recursive path
  auto g = rng(0x4a5a);
  for (int i = 0; i < 20; ++i) {
    BigInt a = random_bigint(g, 200);
    BigInt b = random_bigint(g, 150);
    CHECK((a + BigInt(1)) * (b + BigInt(1)) == a * b + a + b + BigInt(1));
  }
}

TEST_CASE("gcd, egcd, modpow, modinv") {
  auto g = rng(0x6cd);
  for (int i = 0; i < 200; ++i) {
    BigInt a = random_bigint(g, 5), b = random_bigint(g, 5);
    BigInt d = BigInt::gcd(a, b);
    if (d.is_zero()) continue;
    if (!a.is_zero()) CHECK((a % d).is_zero());
    if (!b.is_zero()) CHECK((b % d).is_zero());
    BigInt x, y;
    BigInt g2 = BigInt::egcd(a, b, x, y);
    CHECK(g2 == d);
    CHECK(a * x + b * y == d);
  }
  BigInt p("1000000007");
  CHECK(BigInt::modpow(BigInt(2), p - BigInt(1), p).is_one());
  BigInt inv;
  REQUIRE(BigInt::modinv(BigInt(12345), p, inv));
  CHECK(BigInt::mod_floor(inv * BigInt(12345), p).is_one());
  CHECK(!BigInt::modinv(BigInt(6), BigInt(9), inv));
}

TEST_CASE("isqrt") {
  auto g = rng(0x15c);
  for (int i = 0; i < 100; ++i) {
    BigInt a = random_bigint(g, 8).abs();
    BigInt s = BigInt::isqrt(a);
    CHECK(s * s <= a);
    CHECK((s + BigInt(1)) * (s + BigInt(1)) > a);
  }
}

TEST_CASE("division correction paths: boundary-dense operands") {
  // random limbs almost never exercise the quotient-correction branches of
  // the long division; limbs drawn from the extremes do. The oracle inverts
  // the division through multiplication and comparison only.
  auto g = rng(0xd1f5eed);
  const uint32_t pool[] = {0u,          1u,          2u,          0x7FFFFFFFu,
                           0x80000000u, 0x80000001u, 0xFFFFFFFEu, 0xFFFFFFFFu};
  std::uniform_int_distribution<size_t> pick(0, std::size(pool) - 1);
  std::uniform_int_distribution<int> alen(1, 7), blen(1, 4);
  auto make = [&](int n) {
    BigInt v = 0;
    for (int i = 0; i < n; ++i) v = v * BigInt(0x100000000ull) + BigInt(pool[pick(g)]);
    return v;
  };
  int exercised = 0;
  for (int i = 0; i < 4000; ++i) {
    BigInt a = make(alen(g)), b = make(blen(g));
    if (b.is_zero()) continue;
    ++exercised;
    BigInt q, r;
    BigInt::divmod(a, b, q, r);
    CHECK(q * b + r == a);
    CHECK(r.abs() < b.abs());
    CHECK(!r.is_neg());  // operands here are nonnegative
    // oracle: q is the unique nonnegative integer with q*b <= a < (q+1)*b
    CHECK(q * b <= a);
    CHECK((q + BigInt(1)) * b > a);
  }
  CHECK(exercised > 3000);
}

TEST_CASE("modular power at the trivial modulus") {
  CHECK(BigInt::modpow(BigInt(5), BigInt(3), BigInt(1)).is_zero());
  CHECK(BigInt::modpow(BigInt(5), BigInt(0), BigInt(1)).is_zero());
  CHECK(BigInt::modpow(BigInt(5), BigInt(0), BigInt(7)).is_one());
}

TEST_CASE("mod_floor is canonical") {
  CHECK(BigInt::mod_floor(BigInt(-7), BigInt(5)) == BigInt(3));
  CHECK(BigInt::mod_floor(BigInt(7), BigInt(5)) == BigInt(2));
  CHECK(BigInt::mod_floor(BigInt(-10), BigInt(5)).is_zero());
}
