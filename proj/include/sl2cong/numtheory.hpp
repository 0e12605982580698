#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sl2cong/bigint.hpp"

namespace sl2cong::nt {

// Trial-division factorization (wheel over 2,3,5). Exact for any input, meant
// for the small numbers this project quantifies over.
std::vector<std::pair<BigInt, int>> factorize(BigInt n);

// Deterministic: strong-pseudoprime bases {2,3,5,7,11,13,17} below 3.3e14,
// plain trial division above.
bool is_prime(const BigInt& n);

// Jordan totient J_2(r) = r^2 * prod_{q | r} (1 - q^-2).
BigInt jordan2(uint64_t r);

// |SL_2(Z/rZ)| = r * J_2(r).
BigInt sl2_order(uint64_t r);

// Least s >= 1 with p^s = 1 mod r; requires gcd(p, r) = 1 (throws otherwise).
uint64_t mult_order(const BigInt& p, uint64_t r);

// Jacobi symbol (a/n) for odd n >= 1.
int jacobi(BigInt a, BigInt n);

// q prime. False when gcd(m, q) != 1.
bool is_primitive_root(const BigInt& m, const BigInt& q);

// Free rank of the level-r congruence subgroup of SL2(Z) with unit diagonal
// mod r and upper-right 0 mod r: 1 + J_2(r)/12. Defined for r >= 4; throws
// when J_2(r) is not divisible by 12.
BigInt free_rank_gamma1z(uint64_t r);

// Bounded prime search in the arithmetic progression b + n*a, n = 0..bound.
struct APSearchSpec {
  BigInt modulus;  // a
  BigInt offset;   // b
  struct Congruence {
    BigInt mod;
    BigInt residue;
  };
  std::vector<Congruence> congruences;      // extra conditions prime % mod == residue
  std::vector<BigInt> primitive_bases;      // each must be a primitive root mod the prime
  uint64_t bound = 1'000'000;

  APSearchSpec(BigInt a, BigInt b);  // throws unless gcd(a, b) == 1
};

struct APHit {
  uint64_t n;
  BigInt prime;
};

// Least qualifying n <= bound, or nullopt (never loops unboundedly).
std::optional<APHit> find_prime_in_ap(const APSearchSpec& spec);

}  // namespace sl2cong::nt
