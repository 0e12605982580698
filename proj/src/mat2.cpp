#include "sl2cong/mat2.hpp"

namespace sl2cong {

Mat2::Mat2(Rational a_, Rational b_, Rational c_, Rational d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  if (!(a * d - b * c == Rational(1)))
    throw std::invalid_argument("Mat2: determinant is not 1: " + str());
}

Mat2 Mat2::operator*(const Mat2& o) const {
  return Mat2(a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d);
}

Mat2 Mat2::inverse() const { return Mat2(d, -b, -c, a); }

Mat2 Mat2::operator-() const { return Mat2(-a, -b, -c, -d); }

namespace {
// (-1)^e for a BigInt exponent
int sign_pow(int s, const BigInt& e) { return (s == 1 || e.is_even()) ? 1 : -1; }
}  // namespace

Mat2 Mat2::pow(const BigInt& e) const {
  if (e.is_zero()) return Mat2();
  if (e.is_neg()) return inverse().pow(-e);

  const Rational one(1), negone(-1);
  // +-unipotent triangular: linear closed form, any exponent size
  if ((a == one && d == one) || (a == negone && d == negone)) {
    if (c.is_zero() || b.is_zero()) {
      int s = a == one ? 1 : -1;
      Rational se(sign_pow(s, e));
      Rational sprev(sign_pow(s, e - 1));  // s^(e-1)
      return Mat2(se, Rational(e) * b * sprev, Rational(e) * c * sprev, se);
    }
  }
  if (diagonal()) {
    return Mat2(Rational::pow(a, e), 0, 0, Rational::pow(d, e));
  }
  // triangular with distinct diagonal: geometric-sum closed form
  if (c.is_zero() || b.is_zero()) {
    const Rational& x = a;
    if (!(x == d)) {  // det 1 forces d = 1/x
      Rational xe = Rational::pow(x, e);
      Rational xeinv = xe.inverse();
      Rational ratio = (xe - xeinv) / (x - x.inverse());
      return Mat2(xe, b * ratio, c * ratio, xeinv);
    }
  }
  if (!e.fits_int64())
    throw std::overflow_error("Mat2::pow: exponent too large for a non-triangular base");
  long long k = e.to_int64();
  Mat2 acc, base = *this;
  while (k) {
    if (k & 1) acc = acc * base;
    k >>= 1;
    if (k) base = base * base;
  }
  return acc;
}

std::string Mat2::str() const {
  return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
}

Mat2 atom_A() { return Mat2(1, 0, 1, 1); }
Mat2 atom_B() { return Mat2(0, 1, -1, 0); }

Mat2 atom_U(long long p) {
  Rational pr{BigInt(p)};
  return Mat2(pr, 0, 0, pr.inverse());
}

Mat2 atom_Q(const Rational& q) { return Mat2(1, q, 0, 1); }
Mat2 atom_M5() { return Mat2(11, 20, -5, -9); }
Mat2 atom_X(const Rational& mu) { return Mat2(1, mu, 0, 1); }
Mat2 atom_Y(const Rational& mu) { return Mat2(1, 0, mu, 1); }

std::string shape_name(Shape s) {
  switch (s) {
    case Shape::upper: return "upper";
    case Shape::lower: return "lower";
    case Shape::diagonal: return "diagonal";
    case Shape::not_triangular: return "not-triangular";
  }
  return "?";
}

TriangularClass triangular_class(const Mat2& m, std::optional<long long> p) {
  TriangularClass out;
  bool up = m.upper_triangular(), lo = m.lower_triangular();
  if (up && lo)
    out.shape = Shape::diagonal;
  else if (up)
    out.shape = Shape::upper;
  else if (lo)
    out.shape = Shape::lower;
  else {
    out.shape = Shape::not_triangular;
    return out;
  }
  if (p) {
    PValuation pv = p_valuation(m.a, *p);
    if (!(pv.unit == Rational(1) || pv.unit == Rational(-1)))
      throw std::domain_error("triangular_class: upper-left entry " + m.a.str() +
                              " is not +-" + std::to_string(*p) + "^k");
    out.has_p = true;
    out.k = pv.v;
    out.sign = pv.unit.signum();
  }
  return out;
}

namespace {
bool fail(std::string* why, const std::string& msg) {
  if (why) *why = msg;
  return false;
}
}  // namespace

bool is_member(const Mat2& m, long long p, const BigInt& r, Subgroup which,
               std::string* why) {
  const Rational* entries[4] = {&m.a, &m.b, &m.c, &m.d};
  const char* names[4] = {"a", "b", "c", "d"};
  if (which == Subgroup::sl2z || which == Subgroup::gamma0Z) {
    for (int i = 0; i < 4; ++i)
      if (!entries[i]->is_integer())
        return fail(why, std::string("entry ") + names[i] + " is not an integer");
    if (which == Subgroup::gamma0Z && !BigInt::mod_floor(m.c.num(), BigInt(p)).is_zero())
      return fail(why, "lower-left entry not divisible by p");
    return true;
  }
  for (int i = 0; i < 4; ++i)
    if (!in_z_inv_p(*entries[i], p))
      return fail(why, std::string("entry ") + names[i] + " = " + entries[i]->str() +
                           " lies outside Z[1/p]");
  try {
    BigInt ra = reduce_mod(m.a, r), rb = reduce_mod(m.b, r), rd = reduce_mod(m.d, r);
    if (!ra.is_one() && !(ra.is_zero() && r.is_one()))
      return fail(why, "a != 1 mod r (got " + ra.str() + ")");
    if (!rb.is_zero()) return fail(why, "b != 0 mod r (got " + rb.str() + ")");
    if (!rd.is_one() && !(rd.is_zero() && r.is_one()))
      return fail(why, "d != 1 mod r (got " + rd.str() + ")");
    if (which == Subgroup::principal) {
      BigInt rc = reduce_mod(m.c, r);
      if (!rc.is_zero()) return fail(why, "c != 0 mod r (got " + rc.str() + ")");
    }
    return true;
  } catch (const NotReducible& e) {
    return fail(why, e.what());
  }
}

}  // namespace sl2cong
