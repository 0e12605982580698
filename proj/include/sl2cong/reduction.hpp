#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sl2cong/numtheory.hpp"
#include "sl2cong/word.hpp"

namespace sl2cong::red {

// One applied rewriting rule, for the audit trail.
struct ReductionStep {
  std::string rule;
  std::string detail;
};

// A word over {A, Q, U} (U bound to U_p^k) evaluating exactly to the target;
// re-verified on construction.
struct Certificate {
  Mat2 target;
  GenWord word;
  std::vector<ReductionStep> steps;
};

struct ReduceOptions {
  uint64_t search_bound = 100000;   // two-sided steps in the prime search
  // candidates above this are skipped rather than primality-tested, keeping
  // the search responsive; skipped candidates count against the bound
  BigInt candidate_cap = BigInt("1000000000000");
};

struct ReduceOutcome {
  enum class Status { ok, bound_exceeded, not_in_group } status;
  std::optional<Certificate> certificate;      // set when ok
  std::vector<ReductionStep> partial;          // audit trail on failure
  std::string message;
  bool ok() const { return status == Status::ok; }
};

// Reduces a member of the level-r congruence subgroup of SL2(Z[1/p]) to a
// word over {A, Q_{r/p}, U_p^k}: clears denominators with U-moves, shrinks
// the top row by a restricted Euclidean cascade, moves the upper-left entry
// to a prime q = 3 mod 4 with p primitive mod q, walks the upper-right
// entry to +-r by U-conjugation (a discrete log among the quadratic residues
// mod q), finishes with the Euclidean endgame and a final conjugation.
// gcd(r, p) = 1, k != 0.
ReduceOutcome reduce_to_word(const Mat2& m, long long p, long long r, long long k,
                             const ReduceOptions& opt = {});

// Single pipeline stages, exposed for testing. Each returns the transformed
// matrix together with the left/right word factors applied, satisfying
// m_out = eval(left) * m_in * eval(right).
struct StageOutcome {
  Mat2 m;
  GenWord left, right;
  std::vector<ReductionStep> steps;
};
StageOutcome clear_denominators(const Mat2& m, long long p, long long r, long long k);
StageOutcome normalize_b(const Mat2& m, long long p, long long r, long long k);
StageOutcome pre_shrink(const Mat2& m, long long p, long long r, long long k);
StageOutcome find_good_a(const Mat2& m, long long p, long long r, long long k,
                         const ReduceOptions& opt = {});
StageOutcome conjugate_to_pm_r(const Mat2& m, long long p, long long r, long long k);
StageOutcome euclid_reduce(const Mat2& m, long long p, long long r, long long k);

struct BoundExceeded : std::runtime_error {
  explicit BoundExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Turns a strong witness (word over {A, Q} whose evaluation is triangular
// with diagonal +-p^k, k != 0) into a word evaluating to that diagonal:
// the off-diagonal entry is cancelled by one conjugate w^m Q^c w^-m (or the
// A-version for lower-triangular input), with m chosen minimal. Squaring the
// output gives U_p^(2k) exactly. Throws std::domain_error when the input is
// not strong.
GenWord strong_witness_to_diagonal(const GenWord& w, long long p, long long r);

}  // namespace sl2cong::red
