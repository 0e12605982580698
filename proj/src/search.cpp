#include "sl2cong/search.hpp"

#include <algorithm>

namespace sl2cong::search {

namespace {

// exponents in canonical order: -E, ..., -1, 1, ..., E
std::vector<long long> exponent_range(long long emax) {
  std::vector<long long> out;
  out.reserve(size_t(2 * emax));
  for (long long e = -emax; e <= emax; ++e)
    if (e != 0) out.push_back(e);
  return out;
}

struct Enumerator {
  long long p;
  bool strong;
  const std::vector<long long>& exps;
  const Mat2* gen;  // [0] = A, [1] = Q
  std::vector<Witness>* out;
  std::vector<Mat2> powers[2];  // generator powers, indexed like exps

  void build_power_tables() {
    for (int s = 0; s < 2; ++s) {
      powers[s].reserve(exps.size());
      for (long long e : exps) powers[s].push_back(gen[s].pow(BigInt(e)));
    }
  }

  // place exactly `remaining` more syllables, alternating symbols
  void extend(const Mat2& m, std::vector<std::pair<int, long long>>& syls, int sym,
              int remaining) {
    if (remaining == 0) {
      consider(m, syls);
      return;
    }
    for (size_t i = 0; i < exps.size(); ++i) {
      syls.emplace_back(sym, exps[i]);
      extend(m * powers[sym][i], syls, 1 - sym, remaining - 1);
      syls.pop_back();
    }
  }

  void consider(const Mat2& m, const std::vector<std::pair<int, long long>>& syls) {
    if (!m.upper_triangular() && !m.lower_triangular()) return;
    TriangularClass cls = triangular_class(m, p);
    if (strong && cls.k == 0) return;
    GenWord w;
    w.symbol_index("A");
    w.symbol_index("Q");
    for (const auto& [s, e] : syls) w.append_syllable(s, BigInt(e));
    out->push_back(Witness{std::move(w), cls});
  }
};

void check_bounds(const SearchBounds& b) {
  if (b.max_syllables < 1 || b.max_abs_exponent < 1)
    throw std::domain_error("search bounds must be >= 1");
}

}  // namespace

std::vector<Witness> search_witness_serial(long long p, long long r,
                                           const SearchBounds& b) {
  check_bounds(b);
  const auto exps = exponent_range(b.max_abs_exponent);
  const Mat2 gen[2] = {atom_A(), atom_Q(Rational(BigInt(r), BigInt(p)))};
  std::vector<Witness> found;
  Enumerator en{p, b.strong, exps, gen, &found, {}};
  en.build_power_tables();
  for (int len = 2; len <= b.max_syllables; ++len) {
    for (int first = 0; first < 2; ++first) {
      for (size_t i = 0; i < exps.size(); ++i) {
        std::vector<std::pair<int, long long>> syls{{first, exps[i]}};
        en.extend(en.powers[first][i], syls, 1 - first, len - 1);
      }
    }
  }
  return found;
}

std::vector<Witness> search_witness(long long p, long long r, const SearchBounds& b) {
  check_bounds(b);
  const auto exps = exponent_range(b.max_abs_exponent);
  const Mat2 gen[2] = {atom_A(), atom_Q(Rational(BigInt(r), BigInt(p)))};
  std::vector<Witness> found;
  for (int len = 2; len <= b.max_syllables; ++len) {
    // fan out over the first syllable; buckets are merged in canonical order,
    // so the result does not depend on the thread count
    const size_t tasks = 2 * exps.size();
    std::vector<std::vector<Witness>> buckets(tasks);
#pragma omp parallel for schedule(dynamic)
    for (size_t ti = 0; ti < tasks; ++ti) {
      int first = int(ti / exps.size());
      size_t ei = ti % exps.size();
      Enumerator en{p, b.strong, exps, gen, &buckets[ti], {}};
      en.build_power_tables();
      std::vector<std::pair<int, long long>> syls{{first, exps[ei]}};
      en.extend(en.powers[first][ei], syls, 1 - first, len - 1);
    }
    for (auto& bkt : buckets)
      for (auto& w : bkt) found.push_back(std::move(w));
  }
  return found;
}

Rational pell_q(int n) {
  if (n < 1) throw std::domain_error("pell_q: n >= 1");
  if (n == 1) return Rational(3);  // from the norm -1 state (1, 1)
  BigInt x(3), y(2);
  for (int i = 2; i < n; ++i) {
    BigInt nx = 3 * x + 4 * y;
    BigInt ny = 2 * x + 3 * y;
    x = std::move(nx);
    y = std::move(ny);
  }
  return Rational(2) + Rational(x, y);
}

BigInt a_seq(int n) {
  if (n < 1) throw std::domain_error("a_seq: n >= 1");
  if (n == 1) return 0;
  if (n == 2) return 2;
  BigInt prev(0), cur(2);
  for (int i = 3; i <= n; ++i) {
    BigInt next = 34 * cur - prev - 8;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

PellCheck pell_witness_check(int n) {
  PellCheck out;
  out.n = n;
  out.q = pell_q(n);
  out.a = a_seq(n);
  GenWord w;
  w.symbol_index("A");
  w.symbol_index("Q");
  w.append("Q", out.a);
  for (int i = 0; i < 3; ++i) {
    w.append("A", -1);
    w.append("Q", 1);
  }
  w.append("A", -1);
  w.append("Q", out.a);
  out.word = w;
  SymbolTable t{{"A", atom_A()}, {"Q", atom_Q(out.q)}};
  Mat2 m = eval_word(w, t);
  TriangularClass cls = triangular_class(m);
  out.shape = cls.shape;
  out.triangular = cls.shape != Shape::not_triangular;
  return out;
}

std::vector<DiamondCheck> diamond_checks() {
  std::vector<DiamondCheck> out;
  const Rational mu(BigInt(3), BigInt(2));
  SymbolTable t{{"X", atom_X(mu)}, {"Y", atom_Y(mu)}};
  GenWord w = GenWord::parse("X^12 Y X^-1 Y X^-2 Y^-2");
  Mat2 got = eval_word(w, t);
  Mat2 want(-8, 0, 0, Rational(-1, 8));
  out.push_back(
      DiamondCheck{"xy-word-is-neg-diag", got == want, "evaluates to " + got.str()});
  std::string why;
  bool inprin = is_member(want, 2, BigInt(3), Subgroup::principal, &why);
  out.push_back(
      DiamondCheck{"neg-diag-in-principal-2-3", inprin, inprin ? "-8 = 1 mod 3" : why});
  Mat2 pos(8, 0, 0, Rational(1, 8));
  bool posin = is_member(pos, 2, BigInt(3), Subgroup::principal, &why);
  out.push_back(DiamondCheck{"pos-diag-not-in-principal-2-3", !posin,
                             posin ? "unexpectedly a member" : ("excluded: " + why)});
  return out;
}

}  // namespace sl2cong::search
