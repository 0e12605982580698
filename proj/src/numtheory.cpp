#include "sl2cong/numtheory.hpp"

#include <stdexcept>

namespace sl2cong::nt {

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return static_cast<uint64_t>((static_cast<__uint128_t>(a) * b) % m);
}

uint64_t powmod_u64(uint64_t b, uint64_t e, uint64_t m) {
  uint64_t acc = 1 % m;
  b %= m;
  while (e) {
    if (e & 1) acc = mulmod_u64(acc, b, m);
    b = mulmod_u64(b, b, m);
    e >>= 1;
  }
  return acc;
}

bool miller_rabin_u64(uint64_t n, const uint64_t* bases, int nbases) {
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (int i = 0; i < nbases; ++i) {
    uint64_t a = bases[i] % n;
    if (a == 0) continue;
    uint64_t x = powmod_u64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

constexpr uint64_t kSpspLimit = 330'000'000'000'000ull;  // 3.3e14

bool trial_division_prime(const BigInt& n) {
  // wheel over 2, 3, 5
  static constexpr int kInc[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  for (long long q : {2, 3, 5}) {
    BigInt Q(q);
    if (n == Q) return true;
    if ((n % Q).is_zero()) return false;
  }
  BigInt root = BigInt::isqrt(n);
  BigInt d(7);
  int idx = 0;
  while (d <= root) {
    if ((n % d).is_zero()) return false;
    d += kInc[idx];
    idx = (idx + 1) & 7;
  }
  return true;
}

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < BigInt(2)) return false;
  if (n.fits_int64() && static_cast<uint64_t>(n.to_int64()) < kSpspLimit) {
    uint64_t v = static_cast<uint64_t>(n.to_int64());
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull}) {
      if (v == q) return true;
      if (v % q == 0) return false;
    }
    static constexpr uint64_t kBases[7] = {2, 3, 5, 7, 11, 13, 17};
    return miller_rabin_u64(v, kBases, 7);
  }
  return trial_division_prime(n);
}

std::vector<std::pair<BigInt, int>> factorize(BigInt n) {
  if (n.signum() <= 0) throw std::domain_error("factorize: input must be positive");
  std::vector<std::pair<BigInt, int>> out;
  auto strip = [&](const BigInt& q) {
    int e = 0;
    BigInt quo, rem;
    while (true) {
      BigInt::divmod(n, q, quo, rem);
      if (!rem.is_zero()) break;
      n = quo;
      ++e;
    }
    if (e) out.emplace_back(q, e);
  };
  strip(2);
  strip(3);
  strip(5);
  static constexpr int kInc[8] = {4, 2, 4, 2, 4, 6, 2, 6};
  BigInt d(7);
  int idx = 0;
  while (d * d <= n) {
    strip(d);
    d += kInc[idx];
    idx = (idx + 1) & 7;
  }
  if (!n.is_one()) out.emplace_back(n, 1);
  return out;
}

BigInt jordan2(uint64_t r) {
  if (r == 0) throw std::domain_error("jordan2: r must be >= 1");
  BigInt out(1);
  for (const auto& [q, e] : factorize(BigInt(r))) {
    // q^(2e) - q^(2e-2)
    BigInt q2 = q * q;
    BigInt term = BigInt::pow(q2, static_cast<unsigned long long>(e - 1));
    out *= term * (q2 - BigInt(1));
  }
  return out;
}

BigInt sl2_order(uint64_t r) { return BigInt(static_cast<long long>(r)) * jordan2(r); }

uint64_t mult_order(const BigInt& p, uint64_t r) {
  if (r == 0) throw std::domain_error("mult_order: r must be >= 1");
  const BigInt R(static_cast<long long>(r));
  if (!BigInt::gcd(p, R).is_one())
    throw std::domain_error("mult_order: gcd(p, r) != 1");
  if (r == 1) return 1;
  BigInt x = BigInt::mod_floor(p, R);
  BigInt acc = x;
  uint64_t s = 1;
  while (!acc.is_one()) {
    acc = BigInt::mod_floor(acc * x, R);
    ++s;
    if (s > r) throw std::logic_error("mult_order: no order found (non-unit?)");
  }
  return s;
}

int jacobi(BigInt a, BigInt n) {
  if (n.is_neg() || n.is_even())
    throw std::domain_error("jacobi: n must be odd and positive");
  a = BigInt::mod_floor(a, n);
  int t = 1;
  while (!a.is_zero()) {
    while (a.is_even()) {
      a /= 2;
      BigInt m = n % 8;
      long long m8 = m.to_int64();
      if (m8 == 3 || m8 == 5) t = -t;
    }
    std::swap(a, n);
    if ((a % 4) == BigInt(3) && (n % 4) == BigInt(3)) t = -t;
    a = BigInt::mod_floor(a, n);
  }
  return n.is_one() ? t : 0;
}

bool is_primitive_root(const BigInt& m, const BigInt& q) {
  if (!BigInt::gcd(m, q).is_one()) return false;
  if (q == BigInt(2)) return BigInt::mod_floor(m, q).is_one();
  BigInt phi = q - BigInt(1);
  for (const auto& [ell, e] : factorize(phi)) {
    (void)e;
    if (BigInt::modpow(m, phi / ell, q).is_one()) return false;
  }
  return true;
}

BigInt free_rank_gamma1z(uint64_t r) {
  if (r < 4) throw std::domain_error("free_rank_gamma1z: defined for r >= 4");
  BigInt j = jordan2(r);
  BigInt q, rem;
  BigInt::divmod(j, BigInt(12), q, rem);
  if (!rem.is_zero())
    throw std::domain_error("free_rank_gamma1z: J_2(r) not divisible by 12");
  return BigInt(1) + q;
}

APSearchSpec::APSearchSpec(BigInt a, BigInt b) : modulus(std::move(a)), offset(std::move(b)) {
  if (modulus.signum() <= 0) throw std::domain_error("APSearchSpec: modulus must be positive");
  if (!BigInt::gcd(modulus, offset).is_one())
    throw std::domain_error("APSearchSpec: gcd(modulus, offset) != 1");
}

std::optional<APHit> find_prime_in_ap(const APSearchSpec& spec) {
  BigInt v = spec.offset;
  for (uint64_t n = 0; n <= spec.bound; ++n, v += spec.modulus) {
    if (v < BigInt(2)) continue;
    bool ok = true;
    for (const auto& c : spec.congruences) {
      if (!(BigInt::mod_floor(v, c.mod) == BigInt::mod_floor(c.residue, c.mod))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    if (!is_prime(v)) continue;
    for (const auto& m : spec.primitive_bases) {
      if (!is_primitive_root(m, v)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    return APHit{n, v};
  }
  return std::nullopt;
}

}  // namespace sl2cong::nt
