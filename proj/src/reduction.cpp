#include "sl2cong/reduction.hpp"

#include <cassert>
#include <cmath>
#include <cstdlib>

namespace sl2cong::red {

namespace {

long long floor_div_ll(long long a, long long b) {
  long long q = a / b, r = a % b;
  return (r != 0 && ((r < 0) != (b < 0))) ? q - 1 : q;
}

// m with e + coef*m in [0, |coef|)
long long solve_window(long long e, long long coef) {
  long long mag = coef < 0 ? -coef : coef;
  long long f = floor_div_ll(e, mag);
  return coef < 0 ? f : -f;
}

BigInt round_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  BigInt twice = r + r;
  if (twice.is_neg()) twice = -twice;
  if (twice > b.abs()) q += BigInt((r.is_neg() == b.is_neg()) ? 1 : -1);
  return q;
}

BigInt exact_div(const BigInt& a, const BigInt& b) {
  BigInt q, r;
  BigInt::divmod(a, b, q, r);
  if (!r.is_zero()) throw std::logic_error("exact_div: not divisible");
  return q;
}

struct Pipeline {
  long long p, r, k;
  ReduceOptions opt;
  Mat2 M0, cur;
  GenWord left, right;
  std::vector<ReductionStep> steps;
  SymbolTable syms;
  long long a_shift = 0;  // net p-exponent applied to the upper-left entry

  Pipeline(const Mat2& m, long long p_, long long r_, long long k_, ReduceOptions opt_)
      : p(p_), r(r_), k(k_), opt(opt_), M0(m), cur(m) {
    if (k == 0) throw std::domain_error("reduce: k must be nonzero");
    if (r <= 0) throw std::domain_error("reduce: r must be positive");
    syms = {{"A", atom_A()},
            {"Q", atom_Q(Rational(BigInt(r), BigInt(p)))},
            {"U", atom_U(p).pow(BigInt(k))}};
    std::vector<std::string> alpha{"A", "Q", "U"};
    left = GenWord(alpha);
    right = GenWord(alpha);
  }

  void note(std::string rule, std::string detail) {
    steps.push_back(ReductionStep{std::move(rule), std::move(detail)});
  }

  long long va() const { return p_valuation(cur.a, p).v; }
  long long vb() const { return p_valuation(cur.b, p).v; }

  // cur *= A^n
  void right_A(const BigInt& n) {
    if (n.is_zero()) return;
    cur = cur * syms.at("A").pow(n);
    right.append("A", n);
  }
  // cur *= Q^n  (Q = upper unipotent with entry r/p)
  void right_Q(const BigInt& n) {
    if (n.is_zero()) return;
    cur = cur * syms.at("Q").pow(n);
    right.append("Q", n);
  }
  // cur *= Q_r^n = Q^(p n)
  void right_Qr(const BigInt& n) { right_Q(n * BigInt(p)); }
  // cur = U^s * cur
  void left_U(long long s) {
    if (s == 0) return;
    cur = syms.at("U").pow(BigInt(s)) * cur;
    left.prepend("U", BigInt(s));
    a_shift += k * s;  // conjugations leave the diagonal scale alone
  }
  // cur = U^t * cur * U^-t
  void conj_U(long long t) {
    if (t == 0) return;
    Mat2 u = syms.at("U").pow(BigInt(t));
    cur = u * cur * u.inverse();
    left.prepend("U", BigInt(t));
    right.append("U", BigInt(-t));
  }

  BigInt beta() const { return exact_div(cur.b.num(), BigInt(r)); }

  void degenerate_fix() {
    if (cur.a.is_zero()) {
      right_A(1);
      note("degenerate-fix", "upper-left was 0, applied A");
    }
    if (cur.b.is_zero()) {
      right_Qr(1);
      note("degenerate-fix", "upper-right was 0, applied Q^p");
    }
  }

  void stage_clear_denominators() {
    long long kk = std::llabs(k);
    long long da = -kk * floor_div_ll(va(), kk);  // valuation shift wanted for a
    long long s = da / k;
    if (s != 0) left_U(s);
    long long v2 = vb();
    long long db = -2 * kk * floor_div_ll(v2, 2 * kk);
    long long t = db / (2 * k);
    if (t != 0) conj_U(t);
    if (s || t)
      note("clear-denominators",
           "left U^" + std::to_string(s) + ", conjugate U^" + std::to_string(t));
    if (!cur.a.is_integer() || !cur.b.is_integer())
      throw std::logic_error("clear_denominators: top row not integral");
  }

  // Fractional Q and unit A steps until the top row has a p-unit entry, so
  // that the Euclidean stage and the prime search see gcd(a, b) = 1.
  void stage_valuation_fix() {
    int guard = 0;
    while (true) {
      long long a_val = va(), b_val = vb();
      if (a_val == 0 || b_val == 0) break;
      if (a_val <= b_val)
        right_Q(1);  // lowers v(b) to v(a) - 1
      else
        right_A(1);  // lowers v(a) to v(b)
      if (++guard > 4096) throw std::logic_error("valuation_fix: no progress");
    }
    if (guard) note("valuation-fix", std::to_string(guard) + " unit steps");
  }

  // One centered-Euclid round on the top row (a, beta*r). Steps on a are
  // multiples of beta*r (A-moves), steps on beta are multiples of a
  // (Q_r-moves). allow_finish permits beta to reach 0 when a = 1.
  bool shrink_round(bool allow_finish) {
    bool progress = false;
    {
      BigInt a = cur.a.num(), be = beta();
      if (!a.is_zero() && !be.is_zero()) {
        BigInt n = round_div(be, a);
        if (!n.is_zero()) {
          BigInt be2 = be - n * a;
          if (be2.is_zero() && !(allow_finish && a.is_one())) {
            n -= BigInt(n.signum());
            be2 = be - n * a;
          }
          if (!n.is_zero() && be2.abs() < be.abs()) {
            right_Qr(-n);
            progress = true;
          }
        }
      }
    }
    {
      BigInt a = cur.a.num(), br = cur.b.num();
      if (!br.is_zero()) {
        BigInt n = round_div(a, br);
        if (!n.is_zero()) {
          BigInt a2 = a - n * br;
          if (a2.is_zero()) {  // only possible when r = 1
            n -= BigInt(n.signum());
            a2 = a - n * br;
          }
          if (!n.is_zero() && a2.abs() < a.abs()) {
            right_A(-n);
            progress = true;
          }
        }
      }
    }
    return progress;
  }

  // Unit step making the named entry a p-unit again; magnitudes move by at
  // most a few multiples of the other entry.
  void fix_unit_a() {
    if (va() == 0) return;
    for (long long j = 1;; ++j) {
      for (long long sgn : {1LL, -1LL}) {
        BigInt n(sgn * j);
        Rational cand = cur.a + cur.b * Rational(n);
        if (!cand.is_zero() && p_valuation(cand, p).v == 0) {
          right_A(n);
          return;
        }
      }
      if (j > 2 * p + 2) throw std::logic_error("fix_unit_a: no unit step");
    }
  }
  void fix_unit_b() {
    if (vb() == 0) return;
    const BigInt R(r);
    for (long long j = 1;; ++j) {
      for (long long sgn : {1LL, -1LL}) {
        BigInt n(sgn * j);
        BigInt cand = beta() + n * cur.a.num();
        if (!cand.is_zero() && !BigInt::mod_floor(cand, BigInt(p)).is_zero()) {
          right_Qr(n);
          return;
        }
      }
      if (j > 2 * p + 2) throw std::logic_error("fix_unit_b: no unit step");
    }
  }

  // Adjust n within its residue class mod P2k so that x + n y is divisible
  // by P2k but not by p * P2k; the divided-out entry is then a p-unit and no
  // extra valuation repair is needed on the next escape. Keeps |x + n y|
  // nearly minimal.
  BigInt pick_exact_valuation(const BigInt& x, const BigInt& y, BigInt n,
                              const BigInt& P2k) const {
    const BigInt Pnext = P2k * BigInt(p);
    BigInt best = n;
    for (long long j = 0; j <= 2 * p + 2; ++j) {
      for (long long sgn : {1LL, -1LL}) {
        if (j == 0 && sgn < 0) continue;
        BigInt cand = n + BigInt(sgn * j) * P2k;
        BigInt v = x + cand * y;
        if (!v.is_zero() && !BigInt::mod_floor(v, Pnext).is_zero()) return cand;
      }
    }
    return best;  // unreachable for prime p (one class in p is bad)
  }

  // Full-strength Euclid steps through a p-adic detour: land the entry on a
  // multiple of p^(2|k|) and divide the power out with U-moves. The twisted
  // residue class breaks the stall windows of the restricted cascade.
  // beta -> (beta + n a) / p^(2|k|), reaching |beta'| <= |a| / 2.
  void escape_b() {
    fix_unit_a();
    const BigInt P2k = BigInt::pow(BigInt(p), uint64_t(2 * std::llabs(k)));
    BigInt a = cur.a.num(), be = beta();
    BigInt ainv;
    if (!BigInt::modinv(BigInt::mod_floor(a, P2k), P2k, ainv))
      throw std::logic_error("escape_b: upper-left not a unit mod p");
    BigInt n0 = BigInt::mod_floor(-be * ainv, P2k);
    BigInt step = a * P2k;
    BigInt t = round_div(be + n0 * a, step);
    BigInt n = pick_exact_valuation(be, a, n0 - t * P2k, P2k);
    right_Qr(n);
    long long su = k > 0 ? 1 : -1;
    conj_U(-su);  // divides the upper-right entry by p^(2|k|)
  }
  // a -> (a + n beta r) / p^(2|k|), reaching |a'| <= |beta r| / 2.
  void escape_a() {
    fix_unit_b();
    const BigInt P2k = BigInt::pow(BigInt(p), uint64_t(2 * std::llabs(k)));
    BigInt a = cur.a.num(), br = cur.b.num();
    BigInt brinv;
    if (!BigInt::modinv(BigInt::mod_floor(br, P2k), P2k, brinv))
      throw std::logic_error("escape_a: upper-right not a unit mod p");
    BigInt n0 = BigInt::mod_floor(-a * brinv, P2k);
    BigInt step = br * P2k;
    BigInt t = round_div(a + n0 * br, step);
    BigInt n = pick_exact_valuation(a, br, n0 - t * P2k, P2k);
    right_A(n);
    long long su = k > 0 ? 1 : -1;
    left_U(-2 * su);  // with the conjugation: divides only the upper-left
    conj_U(su);
  }

  void stage_pre_shrink() {
    // prime-search candidates are spaced beta*r apart and centered near 0, so
    // the quantity to drive down is |beta|: small beta means small candidate
    // primes, short discrete logs and small certificates
    const BigInt beta_floor(64);
    const BigInt a_floor(4096);
    int escapes = 0, since_best = 0;
    size_t rounds = 0;
    BigInt best;
    bool have_best = false;
    while (true) {
      while (shrink_round(false)) {
        if (++rounds > 200000) throw std::logic_error("pre_shrink: runaway");
      }
      BigInt a = cur.a.num();
      BigInt be = beta();
      if (be.abs() <= beta_floor && a.abs() <= a_floor) break;
      if (!have_best || be.abs() < best) {
        best = be.abs();
        have_best = true;
        since_best = 0;
      } else if (++since_best > 512) {
        break;  // settled; the prime search takes it from here
      }
      if (escapes >= 40000) throw std::logic_error("pre_shrink: escape cap reached");
      // shrinking beta needs |a| below 2|beta|; otherwise shrink a first
      if (a.abs() < be.abs() + be.abs())
        escape_b();
      else
        escape_a();
      ++escapes;
    }
    note("pre-shrink",
         "top row (" + cur.a.num().str() + ", " + cur.b.num().str() + "), " +
             std::to_string(escapes) + " escapes");
  }

  void stage_normalize_b() {
    BigInt a = cur.a.num();
    BigInt be = beta();
    const BigInt P(p), two(2);
    auto good = [&](const BigInt& x) {
      return !x.is_even() && !BigInt::mod_floor(x, P).is_zero();
    };
    if (good(be)) {
      note("normalize-b", "already odd and coprime to p");
      return;
    }
    for (long long j = 1; j <= 4 * p + 4; ++j) {
      for (long long sgn : {1LL, -1LL}) {
        BigInt n(sgn * j);
        if (good(be + n * a)) {
          right_Qr(n);
          note("normalize-b", "Q_r step n = " + n.str());
          return;
        }
      }
    }
    throw std::logic_error("normalize_b: no qualifying step (is gcd(a,b) = 1?)");
  }

  // Largest acceptable discrete log: the conjugation materializes entries of
  // 2|k| * ell * log2(p) bits, so the cap scales inversely with |k| log p,
  // keeping certificate entries at a few hundred KB regardless of parameters.
  static uint64_t dlog_cap(long long p, long long k) {
    double bits_per_step = 2.0 * double(std::llabs(k)) * std::log2(double(p));
    double cap = 1.5e6 / bits_per_step;
    return cap < 64 ? 64 : uint64_t(cap);
  }

  // Discrete log of eps * beta^-1 in <p^(2|k|)> mod q; returns step count.
  // With p primitive mod q the walk group has order m / gcd(m, |k|) for
  // m = (q-1)/2; a single power test decides membership before walking, so
  // candidates whose subgroup misses the target are skipped cheaply. The
  // budget bounds the materialized entry sizes.
  static std::optional<uint64_t> dlog(const BigInt& beta_in, int eps, long long p,
                                      long long k, const BigInt& q,
                                      uint64_t budget) {
    BigInt u = BigInt::modpow(BigInt(p), BigInt(2 * std::llabs(k)), q);
    BigInt x = BigInt::mod_floor(beta_in, q);
    BigInt target = eps == 1 ? BigInt(1) : q - BigInt(1);
    BigInt m = (q - BigInt(1)) / BigInt(2);
    BigInt ord_u = m / BigInt::gcd(m, BigInt(std::llabs(k)));
    if (!(BigInt::modpow(x, ord_u, q) == BigInt::modpow(target, ord_u, q)))
      return std::nullopt;  // target not in the walk subgroup
    uint64_t limit = ord_u.fits_int64() ? uint64_t(ord_u.to_int64()) : budget;
    if (limit > budget) limit = budget;
    if (q.fits_int64()) {
      uint64_t qu = uint64_t(q.to_int64());
      uint64_t uu = uint64_t(u.to_int64()), xu = uint64_t(x.to_int64());
      uint64_t tu = uint64_t(target.to_int64());
      for (uint64_t l = 0; l <= limit; ++l) {
        if (xu == tu) return l;
        xu = uint64_t((static_cast<__uint128_t>(xu) * uu) % qu);
      }
      return std::nullopt;
    }
    for (uint64_t l = 0; l <= limit; ++l) {
      if (x == target) return l;
      x = BigInt::mod_floor(x * u, q);
    }
    return std::nullopt;
  }

  struct Candidate {
    BigInt n;
    BigInt q;
    int eps;
    uint64_t ell;
  };

  // Scan a + n*(beta r) outward for a prime q = 3 mod 4 (negated when 4 | r)
  // with p primitive mod q and gcd(|k|, (q-1)/2) = 1; among the first few
  // qualifying candidates keep the one whose discrete log is shortest, which
  // keeps the final certificate's U-exponents small.
  void stage_find_good_a() {
    const BigInt br = cur.b.num();
    const BigInt a = cur.a.num();
    const BigInt be = beta();
    // when 4 | r every candidate keeps the residue of a mod 4, so the branch
    // (search for the prime itself or for its negation) follows that residue;
    // otherwise the candidates sweep both odd classes and the positive branch
    // finds primes of either residue
    const bool neg_branch =
        (r % 4 == 0) && BigInt::mod_floor(a, BigInt(4)).is_one();
    BigInt n0 = -round_div(a, br);
    std::vector<Candidate> hits;
    uint64_t tested = 0;
    const uint64_t cap = dlog_cap(p, k);
    const uint64_t small_dlog = std::min<uint64_t>(600, cap / 4 + 1);
    auto good_enough = [&] {
      if (hits.empty()) return false;
      if (hits.size() >= 8) return true;
      if (tested >= 4000) return true;  // take the best found so far
      for (const auto& h : hits)
        if (h.ell <= small_dlog) return true;
      return false;
    };
    for (uint64_t j = 0; j <= opt.search_bound && !good_enough(); ++j) {
      for (int sgn : {1, -1}) {
        if (j == 0 && sgn < 0) continue;
        BigInt n = n0 + BigInt(sgn < 0 ? -(long long)j : (long long)j);
        BigInt c = a + n * br;
        BigInt q = neg_branch ? -c : c;
        ++tested;
        if (q.signum() <= 0 || q > opt.candidate_cap) continue;
        if (!(BigInt::mod_floor(q, 4) == BigInt(3))) continue;
        if (!nt::is_prime(q)) continue;
        if (!nt::is_primitive_root(BigInt(p), q)) continue;
        int eps = nt::jacobi(be, q);
        if (eps == 0) continue;  // cannot happen: gcd(a + n*br, beta) = 1
        auto ell = dlog(be, eps, p, k, q, cap);
        if (!ell) continue;
        hits.push_back(Candidate{n, q, eps, *ell});
      }
    }
    if (hits.empty())
      throw BoundExceeded("find_good_a: no qualifying prime within " +
                          std::to_string(opt.search_bound) + " steps (tested " +
                          std::to_string(tested) + " candidates)");
    const Candidate* best = &hits[0];
    for (const auto& h : hits)
      if (h.ell < best->ell) best = &h;
    right_A(best->n);
    note("find-good-a", "upper-left now " + cur.a.num().str() + " (prime " +
                            best->q.str() + ", dlog " + std::to_string(best->ell) + ")");
  }

  void stage_conj_pm_r() {
    BigInt a = cur.a.num();
    BigInt q = a.abs();
    BigInt be = beta();
    int eps = nt::jacobi(be, q);
    auto ell = dlog(be, eps, p, k, q, dlog_cap(p, k));
    if (!ell)
      throw std::logic_error("conjugate_to_pm_r: discrete log not found "
                             "(primitivity should have ensured it)");
    long long t = (k > 0 ? 1 : -1) * static_cast<long long>(*ell);
    conj_U(t);
    // trim the upper-right to exactly eps * r with a Q_r step
    BigInt benow = beta();
    BigInt m = exact_div(benow - BigInt(eps), a);
    right_Qr(-m);
    note("conjugate-to-pm-r",
         "conjugated by U^" + std::to_string(t) + ", trimmed to " +
             (eps == 1 ? "+r" : "-r"));
    if (!(beta() == BigInt(eps))) throw std::logic_error("conj_pm_r: trim failed");
  }

  // Endgame from a top row (a, +-r). Left multiplications during the run
  // scaled the upper-left entry by a net power of p, so in general
  // a = p^j mod r for some j rather than 1; land the entry exactly on the
  // smallest such power of p that the U generator can peel (k | j), clear
  // the upper-right through a conjugated unipotent step, and strip the
  // diagonal with one left U-power.
  void stage_euclid() {
    BigInt a = cur.a.num();
    BigInt be = beta();
    if (!(be.abs().is_one()))
      throw std::domain_error("euclid_reduce: upper-right entry is not +-r");
    int eps = be.signum();
    const BigInt R(r), P(p);
    const BigInt a_mod = BigInt::mod_floor(a, R);
    long long jpow = -1;
    BigInt target(1);
    for (long long m = 0; m <= 4 * std::llabs(k) * r + 4; ++m) {
      long long cand = m * std::llabs(k);
      BigInt pw = BigInt::pow(P, uint64_t(cand));
      if (BigInt::mod_floor(pw, R) == a_mod) {
        jpow = cand;
        target = pw;
        break;
      }
    }
    if (jpow < 0)
      throw std::logic_error("euclid_reduce: no reachable diagonal residue");
    right_A(exact_div((target - a) * BigInt(eps), R));
    if (jpow == 0) {
      right_Qr(BigInt(-eps));
    } else {
      long long kk2 = 2 * std::llabs(k);
      long long t = (k > 0 ? 1 : -1) * ((jpow + kk2 - 1) / kk2);
      conj_U(t);  // upper-right becomes eps * r * p^(2kt)
      right_Qr(BigInt(-eps) * BigInt::pow(P, uint64_t(2 * k * t - jpow)));
      left_U(-jpow / k);
    }
    note("euclid-reduce", "top row reduced to (1, 0) through p^" +
                              std::to_string(jpow));
    if (!cur.a.num().is_one() || !cur.b.is_zero())
      throw std::logic_error("euclid_reduce: endgame failed");
  }

  void stage_final_conj() {
    if (!cur.c.is_zero()) {
      long long v = p_valuation(cur.c, p).v;
      if (v < 0) {
        // c scales by p^(-2k t) under conjugation; raise its valuation to >= 0
        long long t = solve_window(v, -2 * k);
        conj_U(t);
        note("final-conjugate", "conjugated by U^" + std::to_string(t));
      }
    }
    if (!(cur.a == Rational(1)) || !cur.b.is_zero() || !(cur.d == Rational(1)) ||
        !cur.c.is_integer())
      throw std::logic_error("final_conj: not a lower unipotent integer matrix");
  }

  Certificate finish() {
    GenWord w = left.inverse();
    if (!cur.c.is_zero()) w.append("A", cur.c.num());
    w.append(right.inverse());
    Mat2 check = eval_word(w, syms);
    if (!(check == M0))
      throw std::logic_error("certificate verification failed: word evaluates to " +
                             check.str());
    return Certificate{M0, std::move(w), std::move(steps)};
  }

  StageOutcome outcome() const { return StageOutcome{cur, left, right, steps}; }
};

}  // namespace

ReduceOutcome reduce_to_word(const Mat2& m, long long p, long long r, long long k,
                             const ReduceOptions& opt) {
  ReduceOutcome out;
  std::string why;
  if (!is_member(m, p, BigInt(r), Subgroup::gamma1bar, &why)) {
    out.status = ReduceOutcome::Status::not_in_group;
    out.message = "matrix is not in the level-" + std::to_string(r) +
                  " congruence subgroup: " + why;
    return out;
  }
  Pipeline pl(m, p, r, k, opt);
  try {
    pl.degenerate_fix();
    pl.stage_clear_denominators();
    pl.stage_valuation_fix();
    pl.stage_pre_shrink();
    pl.stage_normalize_b();
    pl.stage_find_good_a();
    pl.stage_conj_pm_r();
    pl.stage_euclid();
    pl.stage_final_conj();
    out.certificate = pl.finish();
    out.status = ReduceOutcome::Status::ok;
  } catch (const BoundExceeded& e) {
    out.status = ReduceOutcome::Status::bound_exceeded;
    out.message = e.what();
    out.partial = pl.steps;
  }
  return out;
}

namespace {
Pipeline make_pipeline(const Mat2& m, long long p, long long r, long long k,
                       const ReduceOptions& opt = {}) {
  return Pipeline(m, p, r, k, opt);
}
}  // namespace

StageOutcome clear_denominators(const Mat2& m, long long p, long long r, long long k) {
  Pipeline pl = make_pipeline(m, p, r, k);
  pl.degenerate_fix();
  pl.stage_clear_denominators();
  return pl.outcome();
}

StageOutcome normalize_b(const Mat2& m, long long p, long long r, long long k) {
  Pipeline pl = make_pipeline(m, p, r, k);
  pl.stage_valuation_fix();
  pl.stage_normalize_b();
  return pl.outcome();
}

StageOutcome pre_shrink(const Mat2& m, long long p, long long r, long long k) {
  Pipeline pl = make_pipeline(m, p, r, k);
  pl.degenerate_fix();
  pl.stage_clear_denominators();
  pl.stage_valuation_fix();
  pl.stage_pre_shrink();
  return pl.outcome();
}

StageOutcome find_good_a(const Mat2& m, long long p, long long r, long long k,
                         const ReduceOptions& opt) {
  Pipeline pl = make_pipeline(m, p, r, k, opt);
  if (!m.a.is_integer() || !m.b.is_integer())
    throw std::domain_error("find_good_a: top row must be integral");
  pl.stage_find_good_a();
  return pl.outcome();
}

StageOutcome conjugate_to_pm_r(const Mat2& m, long long p, long long r, long long k) {
  Pipeline pl = make_pipeline(m, p, r, k);
  pl.stage_conj_pm_r();
  return pl.outcome();
}

StageOutcome euclid_reduce(const Mat2& m, long long p, long long r, long long k) {
  Pipeline pl = make_pipeline(m, p, r, k);
  pl.stage_euclid();
  return pl.outcome();
}

GenWord strong_witness_to_diagonal(const GenWord& w, long long p, long long r) {
  SymbolTable syms{{"A", atom_A()}, {"Q", atom_Q(Rational(BigInt(r), BigInt(p)))}};
  Mat2 M = eval_word(w, syms);
  TriangularClass tc = triangular_class(M, p);
  if (tc.shape == Shape::not_triangular)
    throw std::domain_error("strong_witness_to_diagonal: evaluation is not triangular");
  if (tc.k == 0)
    throw std::domain_error(
        "strong_witness_to_diagonal: diagonal is +-1, witness is not strong");
  if (tc.shape == Shape::diagonal) return w;

  const long long kk = tc.k;
  const Mat2 expected(M.a, 0, 0, M.d);

  GenWord out = w;
  if (tc.shape == Shape::upper) {
    // kill b with one conjugate w^m Q^c w^-m = [[1, c*(r/p)*p^(2 kk m)],[0,1]]
    Rational base = -(M.b / M.a) * Rational(BigInt(p), BigInt(r));
    PValuation pv = p_valuation(base, p);
    if (!pv.unit.is_integer())
      throw std::logic_error("strong witness: upper-right not divisible by r");
    long long m = solve_window(pv.v, -2 * kk);
    long long fexp = pv.v + (-2 * kk) * m;
    BigInt c = pv.unit.num() * BigInt::pow(BigInt(p), uint64_t(fexp));
    out.append(w.pow(m));
    out.append("Q", c);
    out.append(w.pow(-m));
  } else {
    // kill c with one conjugate w^m A^c w^-m = [[1, 0],[c*p^(-2 kk m), 1]]
    Rational base = -(M.c / M.d);
    PValuation pv = p_valuation(base, p);
    if (!pv.unit.is_integer())
      throw std::logic_error("strong witness: lower-left has unexpected denominator");
    long long m = solve_window(pv.v, 2 * kk);
    long long fexp = pv.v + 2 * kk * m;
    BigInt c = pv.unit.num() * BigInt::pow(BigInt(p), uint64_t(fexp));
    out.append(w.pow(m));
    out.append("A", c);
    out.append(w.pow(-m));
  }
  Mat2 got = eval_word(out, syms);
  if (!(got == expected))
    throw std::logic_error("strong_witness_to_diagonal: completion check failed, got " +
                           got.str());
  return out;
}

}  // namespace sl2cong::red
