#include "sl2cong/identities.hpp"

#include <stdexcept>

#include "sl2cong/numtheory.hpp"
#include "sl2cong/reduction.hpp"

namespace sl2cong::ids {

namespace {

BigInt xdiv(const BigInt& a, const BigInt& b) {
  BigInt q, rem;
  BigInt::divmod(a, b, q, rem);
  if (!rem.is_zero())
    throw std::domain_error("identity exponent " + a.str() + "/" + b.str() +
                            " is not an integer");
  return q;
}

Mat2 upow(long long p, long long e) { return atom_U(p).pow(BigInt(e)); }

const std::function<bool(long long)> kAnyPrime = [](long long) { return true; };

GenWord over_aq(std::initializer_list<std::pair<const char*, BigInt>> syls) {
  GenWord w;
  for (const auto& [s, e] : syls) w.append(s, e);
  return w;
}

}  // namespace

std::string verdict_name(Verdict v) {
  switch (v) {
    case Verdict::exact: return "exact";
    case Verdict::matches_inverse: return "matches-inverse";
    case Verdict::matches_negation: return "matches-negation";
    case Verdict::matches_negated_inverse: return "matches-negated-inverse";
    case Verdict::fail: return "fail";
  }
  return "?";
}

SymbolTable symbols_for(long long p, long long r) {
  Rational q{BigInt(r), BigInt(p)};
  return SymbolTable{{"A", atom_A()}, {"B", atom_B()}, {"U", atom_U(p)},
                     {"Q", atom_Q(q)}, {"X", atom_X(q)}, {"Y", atom_Y(q)}};
}

std::vector<long long> primes_below(long long limit) {
  std::vector<long long> out;
  for (long long n = 2; n < limit; ++n)
    if (nt::is_prime(BigInt(n))) out.push_back(n);
  return out;
}

const std::vector<IdentityTemplate>& catalog() {
  static const std::vector<IdentityTemplate> kCatalog = [] {
    std::vector<IdentityTemplate> c;
    auto fixed_r = [](long long r) {
      return [r](long long) { return r; };
    };

    // --- the two identities generating everything at r = 1 ---
    c.push_back(IdentityTemplate{
        "b-from-unipotents",
        "B is a 3-syllable word in A and the unipotent with entry 1/p",
        Kind::exact_target, kAnyPrime, fixed_r(1), 0, 0,
        [](long long p, long long, long long) {
          return over_aq({{"A", -1}, {"Q", p}, {"A", -1}});
        },
        [](long long, long long, long long) { return atom_B(); }, 0});
    c.push_back(IdentityTemplate{
        "u-from-unipotents",
        "U_p is a word in B, A and the unipotent with entry 1/p",
        Kind::exact_target, kAnyPrime, fixed_r(1), 0, 0,
        [](long long p, long long, long long) {
          return over_aq({{"B", -1}, {"Q", 1}, {"A", -p}, {"Q", 1}});
        },
        [](long long p, long long, long long) { return atom_U(p); }, 1});

    // --- any nontrivial power of U_p regenerates U_p alongside A and B ---
    c.push_back(IdentityTemplate{
        "u-power-regenerates",
        "U_p as a word in A, B and U_p^k, for any nonzero k",
        Kind::exact_target, kAnyPrime, fixed_r(1), 1, 3,
        [](long long p, long long, long long k) {
          BigInt P(p);
          GenWord w;
          w.append("U", k);
          w.append("A", BigInt::pow(P, uint64_t(k - 1)));
          w.append("U", -k);
          w.append("B", 1);
          w.append("A", BigInt::pow(P, uint64_t(k + 1)));
          w.append("U", -k);
          w.append("B", 1);
          w.append("A", BigInt::pow(P, uint64_t(k - 1)));
          w.append("B", -1);
          return w;
        },
        [](long long p, long long, long long) { return atom_U(p); }, 1});

    // --- push relations ---
    c.push_back(IdentityTemplate{
        "push-u-past-b-odd", "B U_p B^-1 = U_p^-1", Kind::exact_target, kAnyPrime,
        fixed_r(1), 0, 0,
        [](long long, long long, long long) {
          return over_aq({{"B", 1}, {"U", 1}, {"B", -1}});
        },
        [](long long p, long long, long long) { return upow(p, -1); }, -1});
    c.push_back(IdentityTemplate{
        "push-u-past-b-even", "B^2 U_p B^-2 = U_p", Kind::exact_target, kAnyPrime,
        fixed_r(1), 0, 0,
        [](long long, long long, long long) {
          return over_aq({{"B", 2}, {"U", 1}, {"B", -2}});
        },
        [](long long p, long long, long long) { return atom_U(p); }, 1});
    c.push_back(IdentityTemplate{
        "push-u-past-a", "U_p^-1 A U_p = A^(p^2)", Kind::exact_target, kAnyPrime,
        fixed_r(1), 0, 0,
        [](long long, long long, long long) {
          return over_aq({{"U", -1}, {"A", 1}, {"U", 1}});
        },
        [](long long p, long long, long long) {
          return atom_A().pow(BigInt(p * p));
        },
        0});

    // --- defining relators, as matrix identities valid for every prime ---
    c.push_back(IdentityTemplate{
        "rel-ab-cubed", "(AB)^3 = -1 = B^2", Kind::exact_target, kAnyPrime, fixed_r(1),
        0, 0,
        [](long long, long long, long long) {
          return over_aq({{"A", 1}, {"B", 1}, {"A", 1}, {"B", 1}, {"A", 1}, {"B", 1}});
        },
        [](long long, long long, long long) { return -Mat2::identity(); }, 0});
    c.push_back(IdentityTemplate{
        "rel-ub-squared", "(U_p B)^2 = -1 = B^2", Kind::exact_target, kAnyPrime,
        fixed_r(1), 0, 0,
        [](long long, long long, long long) {
          return over_aq({{"U", 1}, {"B", 1}, {"U", 1}, {"B", 1}});
        },
        [](long long, long long, long long) { return -Mat2::identity(); }, 0});
    c.push_back(IdentityTemplate{
        "rel-buap-cubed", "(B U_p A^p)^3 = -1 = B^2", Kind::exact_target, kAnyPrime,
        fixed_r(1), 0, 0,
        [](long long p, long long, long long) {
          GenWord w;
          for (int i = 0; i < 3; ++i) {
            w.append("B", 1);
            w.append("U", 1);
            w.append("A", p);
          }
          return w;
        },
        [](long long, long long, long long) { return -Mat2::identity(); }, 0});
    c.push_back(IdentityTemplate{
        "rel-b-fourth", "B^4 = 1", Kind::exact_target, kAnyPrime, fixed_r(1), 0, 0,
        [](long long, long long, long long) { return over_aq({{"B", 4}}); },
        [](long long, long long, long long) { return Mat2::identity(); }, 0});
    c.push_back(IdentityTemplate{
        "rel-u-conj-a", "U_p^-1 A U_p A^(-p^2) = 1", Kind::exact_target, kAnyPrime,
        fixed_r(1), 0, 0,
        [](long long p, long long, long long) {
          return over_aq({{"U", -1}, {"A", 1}, {"U", 1}, {"A", -p * p}});
        },
        [](long long, long long, long long) { return Mat2::identity(); }, 0});

    // --- numerator 2: U_p in the group for every odd p ---
    c.push_back(IdentityTemplate{
        "r2-u", "U_p = Q^p A^((p-1)/2) Q^-1 A^(-p(p-1)/2) at r = 2",
        Kind::exact_target, [](long long p) { return p % 2 == 1; }, fixed_r(2), 0, 0,
        [](long long p, long long, long long) {
          BigInt P(p);
          return over_aq({{"Q", P},
                          {"A", xdiv(P - 1, 2)},
                          {"Q", -1},
                          {"A", -xdiv(P * (P - 1), 2)}});
        },
        [](long long p, long long, long long) { return atom_U(p); }, 1});

    // --- numerator 3, split by p mod 3 ---
    c.push_back(IdentityTemplate{
        "r3-u-1mod3", "U_p at r = 3 when p = 1 mod 3", Kind::exact_target,
        [](long long p) { return p % 3 == 1; }, fixed_r(3), 0, 0,
        [](long long p, long long, long long) {
          BigInt P(p);
          return over_aq({{"Q", xdiv(P * (P - 1), 3)},
                          {"A", 1},
                          {"Q", -xdiv(P - 1, 3)},
                          {"A", -P}});
        },
        [](long long p, long long, long long) { return atom_U(p); }, 1});
    c.push_back(IdentityTemplate{
        "r3-u-2mod3", "-U_p at r = 3 when p = 2 mod 3", Kind::exact_target,
        [](long long p) { return p % 3 == 2; }, fixed_r(3), 0, 0,
        [](long long p, long long, long long) {
          BigInt P(p);
          return over_aq({{"Q", xdiv(P * (P + 1), 3)},
                          {"A", -1},
                          {"Q", xdiv(P + 1, 3)},
                          {"A", -P}});
        },
        [](long long p, long long, long long) { return -atom_U(p); }, 1});

    // --- numerator 4, split by p mod 4 ---
    c.push_back(IdentityTemplate{
        "r4-u-1mod4", "U_p at r = 4 when p = 1 mod 4", Kind::exact_target,
        [](long long p) { return p % 4 == 1; }, fixed_r(4), 0, 0,
        [](long long p, long long, long long) {
          BigInt P(p);
          return over_aq({{"Q", P},
                          {"A", xdiv(P - 1, 4)},
                          {"Q", -1},
                          {"A", -xdiv(P * (P - 1), 4)}});
        },
        [](long long p, long long, long long) { return atom_U(p); }, 1});
    c.push_back(IdentityTemplate{
        "r4-u-3mod4", "-U_p at r = 4 when p = 3 mod 4", Kind::exact_target,
        [](long long p) { return p % 4 == 3; }, fixed_r(4), 0, 0,
        [](long long p, long long, long long) {
          BigInt P(p);
          return over_aq({{"Q", -P},
                          {"A", xdiv(P + 1, 4)},
                          {"Q", -1},
                          {"A", xdiv(P * (P + 1), 4)}});
        },
        [](long long p, long long, long long) { return -atom_U(p); }, 1});

    // --- numerator 5 ---
    c.push_back(IdentityTemplate{
        "r5-p2", "-U_2^2 as a 6-syllable word at r = 5, p = 2", Kind::exact_target,
        [](long long p) { return p == 2; }, fixed_r(5), 0, 0,
        [](long long, long long, long long) {
          return over_aq(
              {{"A", 2}, {"Q", 1}, {"A", -1}, {"Q", 1}, {"A", -1}, {"Q", -2}});
        },
        [](long long p, long long, long long) { return -upow(p, 2); }, 2});
    c.push_back(IdentityTemplate{
        "r5-1mod10", "U_p^2 at r = 5 when p = 1 mod 10", Kind::exact_target,
        [](long long p) { return p % 10 == 1; }, fixed_r(5), 0, 0,
        [](long long p, long long, long long) {
          BigInt P(p);
          return over_aq({{"A", P},
                          {"Q", xdiv(P - 1, 5)},
                          {"A", -P - 1},
                          {"Q", -xdiv(P - 1, 5)},
                          {"A", 1},
                          {"Q", -xdiv((P + 1) * P * (P - 1) * (P - 1), 5)}});
        },
        [](long long p, long long, long long) { return upow(p, 2); }, 2});
    c.push_back(IdentityTemplate{
        "r5-3mod10",
        "triangular with diagonal (-p^2, -p^-2) at r = 5 when p = 3 mod 10; "
        "completes to -U_p^2",
        Kind::triangular_completion, [](long long p) { return p % 10 == 3; },
        fixed_r(5), 0, 0,
        [](long long p, long long, long long) {
          BigInt P(p);
          return over_aq({{"A", P},
                          {"Q", xdiv(2 * (P - 3), 5) + 1},
                          {"A", xdiv(P - 3, 2) + 1},
                          {"Q", -xdiv(P - 3, 5) - 1},
                          {"A", 1}});
        },
        [](long long p, long long, long long) { return -upow(p, 2); }, 2});
    c.push_back(IdentityTemplate{
        "r5-7mod10",
        "triangular with diagonal (-p^2, -p^-2) at r = 5 when p = 7 mod 10; "
        "completes to -U_p^2",
        Kind::triangular_completion, [](long long p) { return p % 10 == 7; },
        fixed_r(5), 0, 0,
        [](long long p, long long, long long) {
          BigInt P(p);
          return over_aq({{"A", P},
                          {"Q", -xdiv(2 * (P - 7), 5) - 3},
                          {"A", -xdiv(P - 7, 2) - 3},
                          {"Q", -xdiv(P - 7, 5) - 1},
                          {"A", 1}});
        },
        [](long long p, long long, long long) { return -upow(p, 2); }, 2});
    c.push_back(IdentityTemplate{
        "r5-9mod10",
        "triangular with diagonal (-p^2, -p^-2) at r = 5 when p = 9 mod 10; "
        "completes to -U_p^2",
        Kind::triangular_completion, [](long long p) { return p % 10 == 9; },
        fixed_r(5), 0, 0,
        [](long long p, long long, long long) {
          BigInt P(p);
          return over_aq({{"A", P},
                          {"Q", -xdiv(P - 9, 5) - 2},
                          {"A", P + 1},
                          {"Q", -xdiv(P - 9, 5) - 2},
                          {"A", 1}});
        },
        [](long long p, long long, long long) { return -upow(p, 2); }, 2});

    // --- the infinite families r = p-1, p+1, (p+1)/2 ---
    c.push_back(IdentityTemplate{
        "r-pminus1", "U_p = Q^p A Q^-1 A^-p at r = p - 1", Kind::exact_target,
        kAnyPrime, [](long long p) { return p - 1; }, 0, 0,
        [](long long p, long long, long long) {
          return over_aq({{"Q", p}, {"A", 1}, {"Q", -1}, {"A", -p}});
        },
        [](long long p, long long, long long) { return atom_U(p); }, 1});
    c.push_back(IdentityTemplate{
        "r-pplus1", "U_p^2 as a fixed-syllable word at r = p + 1", Kind::exact_target,
        kAnyPrime, [](long long p) { return p + 1; }, 0, 0,
        [](long long p, long long, long long) {
          BigInt P(p);
          return over_aq({{"Q", P * P * P - P * P - P},
                          {"A", 1},
                          {"Q", -1},
                          {"A", P},
                          {"Q", 1},
                          {"A", -1},
                          {"Q", 1},
                          {"A", -P}});
        },
        [](long long p, long long, long long) { return upow(p, 2); }, 2});
    c.push_back(IdentityTemplate{
        "r-half-pplus1-base", "U_3 = Q^-3 A^-1 Q A^3 at r = 2", Kind::exact_target,
        [](long long p) { return p == 3; }, fixed_r(2), 0, 0,
        [](long long, long long, long long) {
          return over_aq({{"Q", -3}, {"A", -1}, {"Q", 1}, {"A", 3}});
        },
        [](long long p, long long, long long) { return atom_U(p); }, 1});
    c.push_back(IdentityTemplate{
        "r-half-pplus1", "-U_p = Q^-2p A Q^-2 A^p at r = (p+1)/2 for odd p > 3",
        Kind::exact_target, [](long long p) { return p > 3 && p % 2 == 1; },
        [](long long p) { return (p + 1) / 2; }, 0, 0,
        [](long long p, long long, long long) {
          return over_aq({{"Q", -2 * p}, {"A", 1}, {"Q", -2}, {"A", p}});
        },
        [](long long p, long long, long long) { return -atom_U(p); }, 1});

    // --- explicit strong witnesses ---
    c.push_back(IdentityTemplate{
        "witness-3-2", "A^2 Q^-1 A is upper triangular with diagonal (-1/2, -2)",
        Kind::exact_target, [](long long p) { return p == 2; }, fixed_r(3), 0, 0,
        [](long long, long long, long long) {
          return over_aq({{"A", 2}, {"Q", -1}, {"A", 1}});
        },
        [](long long, long long, long long) {
          return Mat2(Rational(-1, 2), Rational(-3, 2), 0, -2);
        },
        0});
    c.push_back(IdentityTemplate{
        "witness-8-3", "A^6 Q^-1 A Q^-1 A is upper triangular with diagonal (1/9, 9)",
        Kind::exact_target, [](long long p) { return p == 3; }, fixed_r(8), 0, 0,
        [](long long, long long, long long) {
          return over_aq({{"A", 6}, {"Q", -1}, {"A", 1}, {"Q", -1}, {"A", 1}});
        },
        [](long long, long long, long long) {
          return Mat2(Rational(1, 9), Rational(16, 9), 0, 9);
        },
        0});

    // --- the 7/3^k family: recursively, each unipotent with entry 7/3^k is a
    // word in A and the previous one ---
    c.push_back(IdentityTemplate{
        "q-over-p-power-family",
        "the unipotent with entry 7/3^k lies in the group generated by A and "
        "the unipotent with entry 7/3",
        Kind::exact_target, [](long long p) { return p == 3; }, fixed_r(7), 1, 6,
        [](long long, long long, long long k) {
          GenWord v = over_aq({{"Q", 1}});
          BigInt pw(1);  // 3^(j-1) at level j
          for (long long j = 1; j < k; ++j) {
            GenWord vinv = v.inverse();
            GenWord next;
            next.append("A", pw * 3);
            next.append(vinv);
            next.append("A", pw);
            next.append(vinv);
            next.append("A", pw * 3);
            v = std::move(next);
            pw *= 3;
          }
          return v;
        },
        [](long long, long long, long long k) {
          return atom_Q(Rational(BigInt(7), BigInt::pow(BigInt(3), uint64_t(k))));
        },
        0});

    // --- the two-unipotent mirror group: diag(-8, -1/8) is a word in X, Y ---
    c.push_back(IdentityTemplate{
        "xy-diagonal", "X^12 (Y X^-1)^2 X^-1 Y^-2 = diag(-8, -1/8) at entry 3/2",
        Kind::exact_target, [](long long p) { return p == 2; }, fixed_r(3), 0, 0,
        [](long long, long long, long long) {
          return over_aq(
              {{"X", 12}, {"Y", 1}, {"X", -1}, {"Y", 1}, {"X", -2}, {"Y", -2}});
        },
        [](long long, long long, long long) {
          return Mat2(-8, 0, 0, Rational(-1, 8));
        },
        3});
    return c;
  }();
  return kCatalog;
}

bool applicable(const IdentityTemplate& t, long long p) {
  return nt::is_prime(BigInt(p)) && t.applies(p);
}

Instantiation instantiate(const IdentityTemplate& t, long long p, long long k) {
  if (!nt::is_prime(BigInt(p)))
    throw std::domain_error(t.name + ": p = " + std::to_string(p) + " is not prime");
  if (!t.applies(p))
    throw std::domain_error(t.name + ": p = " + std::to_string(p) +
                            " fails the applicability condition");
  bool parametrized = t.k_min != 0 || t.k_max != 0;
  if (parametrized && (k < t.k_min || k > t.k_max))
    throw std::domain_error(t.name + ": k = " + std::to_string(k) + " outside [" +
                            std::to_string(t.k_min) + ", " + std::to_string(t.k_max) +
                            "]");
  if (!parametrized) k = 0;
  long long r = t.r_for(p);
  return Instantiation{t.word(p, r, k), symbols_for(p, r), t.expected(p, r, k), r};
}

VerificationReport verify(const IdentityTemplate& t, long long p, long long k) {
  VerificationReport rep;
  rep.name = t.name;
  rep.p = p;
  rep.k = k;
  Instantiation inst = instantiate(t, p, k);
  rep.r = inst.r;
  Mat2 evaluated = eval_word(inst.word, inst.symbols);
  Mat2 cmp = evaluated;
  if (t.kind == Kind::triangular_completion) {
    if (!evaluated.upper_triangular()) {
      rep.verdict = Verdict::fail;
      rep.actual = evaluated;
      rep.detail = "expected an upper triangular evaluation";
      return rep;
    }
    GenWord completed = red::strong_witness_to_diagonal(inst.word, p, inst.r);
    cmp = eval_word(completed, inst.symbols);
    rep.detail = "completed by a conjugated Q-power";
  }
  rep.actual = cmp;
  const Mat2& target = inst.expected;
  if (cmp == target)
    rep.verdict = Verdict::exact;
  else if (cmp == target.inverse())
    rep.verdict = Verdict::matches_inverse;
  else if (cmp == -target)
    rep.verdict = Verdict::matches_negation;
  else if (cmp == -(target.inverse()))
    rep.verdict = Verdict::matches_negated_inverse;
  else
    rep.verdict = Verdict::fail;

  if (t.u_target != 0 && rep.verdict != Verdict::fail) {
    Mat2 u2m = atom_U(p).pow(BigInt(2 * t.u_target));
    Mat2 sq = cmp * cmp;
    rep.consequence_checked = true;
    rep.consequence_ok = (sq == u2m) || (sq.inverse() == u2m);
  }
  return rep;
}

namespace {

struct Instance {
  size_t t_index;
  long long p, k;
};

std::vector<Instance> instance_list(long long p_limit, long long k_limit,
                                    std::optional<long long> only_p,
                                    std::optional<std::string> only_name) {
  const auto& cat = catalog();
  std::vector<Instance> out;
  for (long long p : primes_below(p_limit)) {
    if (only_p && p != *only_p) continue;
    for (size_t i = 0; i < cat.size(); ++i) {
      const auto& t = cat[i];
      if (only_name && t.name != *only_name) continue;
      if (!t.applies(p)) continue;
      if (t.k_min == 0 && t.k_max == 0) {
        out.push_back(Instance{i, p, 0});
      } else {
        long long hi = std::min<long long>(t.k_max, k_limit);
        for (long long k = t.k_min; k <= hi; ++k) out.push_back(Instance{i, p, k});
      }
    }
  }
  return out;
}

VerificationReport run_instance(const Instance& in) {
  const auto& t = catalog()[in.t_index];
  try {
    return verify(t, in.p, in.k);
  } catch (const std::exception& e) {
    VerificationReport rep;
    rep.name = t.name;
    rep.p = in.p;
    rep.k = in.k;
    rep.verdict = Verdict::fail;
    rep.detail = std::string("exception: ") + e.what();
    return rep;
  }
}

}  // namespace

std::vector<VerificationReport> verify_all_serial(long long p_limit, long long k_limit,
                                                  std::optional<long long> only_p,
                                                  std::optional<std::string> only_name) {
  auto todo = instance_list(p_limit, k_limit, only_p, only_name);
  std::vector<VerificationReport> out(todo.size());
  for (size_t i = 0; i < todo.size(); ++i) out[i] = run_instance(todo[i]);
  return out;
}

std::vector<VerificationReport> verify_all(long long p_limit, long long k_limit,
                                           std::optional<long long> only_p,
                                           std::optional<std::string> only_name) {
  auto todo = instance_list(p_limit, k_limit, only_p, only_name);
  std::vector<VerificationReport> out(todo.size());
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < todo.size(); ++i) out[i] = run_instance(todo[i]);
  return out;
}

}  // namespace sl2cong::ids
