#pragma once

#include <random>
#include <vector>

#include "sl2cong/mat2.hpp"
#include "sl2cong/word.hpp"

namespace testutil {

using namespace sl2cong;

// fixed-seed generators so every run sees the same cases
inline std::mt19937_64 rng(uint64_t seed) { return std::mt19937_64(seed); }

inline BigInt random_bigint(std::mt19937_64& g, int max_limbs) {
  std::uniform_int_distribution<int> limbs(0, max_limbs);
  std::uniform_int_distribution<uint32_t> limb;
  int n = limbs(g);
  BigInt out = 0;
  for (int i = 0; i < n; ++i) out = out * BigInt(0x100000000ull) + BigInt(limb(g));
  if (n && (g() & 1)) out = -out;
  return out;
}

inline Rational random_rational(std::mt19937_64& g, long long span = 1000) {
  std::uniform_int_distribution<long long> num(-span, span);
  std::uniform_int_distribution<long long> den(1, span);
  return Rational(BigInt(num(g)), BigInt(den(g)));
}

// random word over the given symbols with alternating-ish syllables
inline GenWord random_word(std::mt19937_64& g, const std::vector<std::string>& symbols,
                           int max_syllables, long long max_exp) {
  std::uniform_int_distribution<int> len(1, max_syllables);
  std::uniform_int_distribution<size_t> sym(0, symbols.size() - 1);
  std::uniform_int_distribution<long long> expd(1, max_exp);
  GenWord w;
  int n = len(g);
  for (int i = 0; i < n; ++i) {
    long long e = expd(g);
    if (g() & 1) e = -e;
    w.append(symbols[sym(g)], e);
  }
  return w;
}

// element of the level-r congruence subgroup as a random word over
// {A, Q_r = Q^p, U_p^sigma}
inline Mat2 random_gamma1bar(std::mt19937_64& g, long long p, long long r,
                             long long sigma, int max_syllables, long long max_exp,
                             GenWord* word_out = nullptr) {
  SymbolTable t{{"A", atom_A()},
                {"Qr", atom_Q(Rational(BigInt(r), BigInt(p))).pow(BigInt(p))},
                {"Us", atom_U(p).pow(BigInt(sigma))}};
  GenWord w = random_word(g, {"A", "Qr", "Us"}, max_syllables, max_exp);
  if (word_out) *word_out = w;
  return eval_word(w, t);
}

}  // namespace testutil
