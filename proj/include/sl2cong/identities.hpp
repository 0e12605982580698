#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "sl2cong/word.hpp"

namespace sl2cong::ids {

enum class Verdict { exact, matches_inverse, matches_negation, matches_negated_inverse, fail };
std::string verdict_name(Verdict v);

enum class Kind {
  exact_target,           // eval(word) compared against the expected matrix
  triangular_completion,  // eval must be triangular; completed to a diagonal
                          // power of U_p before comparison
};

// A parametrized word identity: for every applicable prime p (and small
// parameter k where used) the word over the bound symbols must evaluate to
// the expected matrix, up to the four-way sign/orientation verdict.
struct IdentityTemplate {
  std::string name;
  std::string claim;  // what the identity asserts, in words
  Kind kind = Kind::exact_target;
  std::function<bool(long long p)> applies;       // beyond primality
  std::function<long long(long long p)> r_for;    // level as a function of p
  int k_min = 0, k_max = 0;                       // inclusive; 0..0 = unparametrized
  std::function<GenWord(long long p, long long r, long long k)> word;
  std::function<Mat2(long long p, long long r, long long k)> expected;
  // |m| when the target is +-U_p^m: enables the consequence check that the
  // squared (or inverted) evaluation equals U_p^(2m) exactly
  long long u_target = 0;
};

struct VerificationReport {
  std::string name;
  long long p = 0, r = 0, k = 0;
  Verdict verdict = Verdict::fail;
  Mat2 actual;
  bool consequence_checked = false;
  bool consequence_ok = false;
  std::string detail;
};

const std::vector<IdentityTemplate>& catalog();

// Symbols bound for a given (p, r): A, B, U = U_p, Q = Q_{r/p}, X = X_{r/p},
// Y = Y_{r/p}.
SymbolTable symbols_for(long long p, long long r);

bool applicable(const IdentityTemplate& t, long long p);

struct Instantiation {
  GenWord word;
  SymbolTable symbols;
  Mat2 expected;
  long long r;
};
// Throws std::domain_error naming the violated condition when (p, k) is
// outside the template's applicability.
Instantiation instantiate(const IdentityTemplate& t, long long p, long long k = 0);

VerificationReport verify(const IdentityTemplate& t, long long p, long long k = 0);

// Every applicable (template, p, k) instance for primes p < p_limit and
// k = k_min..min(k_max, k_limit). only_name filters by template name.
std::vector<VerificationReport> verify_all(long long p_limit, long long k_limit,
                                           std::optional<long long> only_p = {},
                                           std::optional<std::string> only_name = {});
std::vector<VerificationReport> verify_all_serial(long long p_limit, long long k_limit,
                                                  std::optional<long long> only_p = {},
                                                  std::optional<std::string> only_name = {});

std::vector<long long> primes_below(long long limit);

}  // namespace sl2cong::ids
