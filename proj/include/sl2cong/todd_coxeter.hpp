#pragma once

#include <cstdint>
#include <vector>

#include "sl2cong/numtheory.hpp"
#include "sl2cong/presentation.hpp"

namespace sl2cong::fp {

struct TCOptions {
  uint64_t max_cosets = 100000;  // live cosets; dead rows are recycled
};

struct TCResult {
  enum class Status { complete, overflow };
  Status status = Status::overflow;
  uint64_t index = 0;          // live cosets on completion
  uint64_t total_defined = 1;  // cosets ever defined, including later-merged ones
  bool complete() const { return status == Status::complete; }
};

// HLT coset enumeration with coincidence processing. Deterministic: cosets
// are numbered in definition order, scanned in numeric order, relators in
// presentation order, generator columns in alphabet order; coincidences keep
// the smaller number. Coset 1 is the subgroup.
class CosetEnumerator {
 public:
  CosetEnumerator(const Presentation& pres, const SubgroupSpec& sub, TCOptions opt = {});

  TCResult run();

  // Introspection (valid after a complete run).
  uint64_t live_count() const { return live_; }
  uint64_t peak_live() const { return peak_live_; }
  std::vector<uint32_t> live_cosets() const;
  // Action of column (generator index g, inverse flag) on a live coset.
  uint32_t act(uint32_t coset, int gen, bool inv_gen = false) const;
  // Coset reached by tracing w from start; 0 if any step is undefined.
  uint32_t trace(uint32_t start, const GenWord& w) const;
  int ngens() const { return ngens_; }

 private:
  int ngens_, ncols_;
  std::vector<std::vector<int>> relators_;  // column sequences
  std::vector<std::vector<int>> subgens_;
  TCOptions opt_;

  std::vector<uint32_t> tab_;  // (last_+1) rows of ncols_ entries, 0 = undefined
  std::vector<uint32_t> p_;    // union-find, p_[k] <= k
  std::vector<uint32_t> queue_;
  size_t qhead_ = 0;
  uint32_t last_ = 0;
  uint64_t live_ = 0, defined_ = 0, peak_live_ = 0;
  bool overflow_ = false;
  bool lookahead_armed_ = true;

  uint32_t& at(uint32_t coset, int col) { return tab_[size_t(coset) * ncols_ + col]; }
  uint32_t at(uint32_t coset, int col) const { return tab_[size_t(coset) * ncols_ + col]; }
  static int inv(int col) { return col ^ 1; }
  bool alive(uint32_t k) const { return p_[k] == k; }

  bool compact_requested_ = false;

  uint32_t rep(uint32_t k);
  void merge(uint32_t k, uint32_t l);
  void coincidence(uint32_t a, uint32_t b);
  bool define(uint32_t a, int col);  // false on overflow or pending compaction
  void scan_and_fill(uint32_t a, const std::vector<int>& w);
  void scan_only(uint32_t a, const std::vector<int>& w);  // no definitions
  bool lookahead();  // full scan-only pass; true if cosets died
  uint32_t compact(uint32_t follow);  // renumber live cosets; returns new index

  std::vector<int> flatten(const GenWord& w) const;
};

TCResult todd_coxeter(const Presentation& pres, const SubgroupSpec& sub, TCOptions opt = {});

struct ConjectureReport {
  long long p = 0, r = 0;
  TCResult tc;
  BigInt jordan;
  bool equal_gamma1bar = false;  // meaningful only when tc.complete()
};

// Runs the enumeration for the two-parabolic subgroup at (p, r) and compares
// the index against J_2(r); equality certifies that the subgroup is the full
// level-r congruence group, since the generators already lie in it.
// A presentation other than the built-in ones may be supplied.
ConjectureReport verify_conjecture(long long p, long long r, uint64_t max_cosets,
                                   const Presentation* pres = nullptr);

}  // namespace sl2cong::fp
