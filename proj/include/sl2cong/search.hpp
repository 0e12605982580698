#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sl2cong/word.hpp"

namespace sl2cong::search {

struct SearchBounds {
  int max_syllables = 7;
  long long max_abs_exponent = 12;
  bool strong = false;  // keep only witnesses whose diagonal is not +-1
};

struct Witness {
  GenWord word;
  TriangularClass cls;
};

// All alternating words in A and Q (both occurring, exponents nonzero with
// |e| <= max_abs_exponent, at most max_syllables syllables) whose evaluation
// at Q = Q_{r/p} is triangular. Deterministic order: by syllable count, then
// first symbol A before Q, then exponent tuples ascending (-E..-1, 1..E).
// The parallel version fans out over the first syllable and merges in that
// canonical order, so its output is identical to the serial reference.
std::vector<Witness> search_witness(long long p, long long r, const SearchBounds& b);
std::vector<Witness> search_witness_serial(long long p, long long r,
                                           const SearchBounds& b);

// Principal convergents toward 2 + sqrt(2): q_1 = 3/1, then 2 + X/Y along
// (X, Y) -> (3X + 4Y, 2X + 3Y) from (3, 2). X^2 - 2Y^2 = 1 for n >= 2.
Rational pell_q(int n);

// a(1) = 0, a(2) = 2, a(n) = 34 a(n-1) - a(n-2) - 8.
BigInt a_seq(int n);

// The word Q^a(n) (A^-1 Q)^3 A^-1 Q^a(n) evaluated at Q = Q_{q_n} must be
// triangular; its shape is reported (the denominators of q_n are composite,
// so no p-decomposition is attempted).
struct PellCheck {
  int n;
  Rational q;
  BigInt a;
  GenWord word;
  Shape shape = Shape::not_triangular;
  bool triangular = false;
};
PellCheck pell_witness_check(int n);

// Exact checks around the two-unipotent group at entry 3/2: the displayed
// word equals diag(-8, -1/8); that matrix lies in the principal congruence
// subgroup at (p, r) = (2, 3) while diag(8, 1/8) does not.
struct DiamondCheck {
  std::string name;
  bool ok = false;
  std::string detail;
};
std::vector<DiamondCheck> diamond_checks();

}  // namespace sl2cong::search
