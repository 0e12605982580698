#pragma once

#include <optional>
#include <string>

#include "sl2cong/rational.hpp"

namespace sl2cong {

// 2x2 matrix over Rational with determinant 1, checked at construction.
// Row-major: a = upper-left, b = upper-right, c = lower-left, d = lower-right.
struct Mat2 {
  Rational a, b, c, d;

  Mat2() : a(1), b(0), c(0), d(1) {}
  Mat2(Rational a_, Rational b_, Rational c_, Rational d_);

  static Mat2 identity() { return Mat2(); }

  Mat2 operator*(const Mat2& o) const;
  Mat2 inverse() const;
  Mat2 operator-() const;
  // m^e, exact; unipotent and diagonal powers in closed form so the exponent
  // may be arbitrarily large; general powers require e to fit in int64.
  Mat2 pow(const BigInt& e) const;

  bool operator==(const Mat2& o) const = default;

  bool is_identity() const { return *this == Mat2(); }
  bool upper_triangular() const { return c.is_zero(); }
  bool lower_triangular() const { return b.is_zero(); }
  bool diagonal() const { return b.is_zero() && c.is_zero(); }

  std::string str() const;  // [[a,b],[c,d]]
};

// Named generator matrices.
Mat2 atom_A();                    // lower unipotent, entry 1
Mat2 atom_B();                    // [[0,1],[-1,0]]
Mat2 atom_U(long long p);         // diag(p, 1/p)
Mat2 atom_Q(const Rational& q);   // upper unipotent, entry q
Mat2 atom_M5();                   // [[11,20],[-5,-9]]
Mat2 atom_X(const Rational& mu);  // upper unipotent, entry mu
Mat2 atom_Y(const Rational& mu);  // lower unipotent, entry mu

enum class Shape { upper, lower, diagonal, not_triangular };
std::string shape_name(Shape s);

// With a p-context the upper-left entry of a triangular matrix must be
// +-p^k exactly (throws std::domain_error otherwise); strong means k != 0.
struct TriangularClass {
  Shape shape = Shape::not_triangular;
  bool has_p = false;
  long long k = 0;
  int sign = 1;
  bool strong() const { return shape != Shape::not_triangular && has_p && k != 0; }
};

TriangularClass triangular_class(const Mat2& m, std::optional<long long> p = std::nullopt);

enum class Subgroup { gamma1bar, principal, gamma0Z, sl2z };

// Membership in the named subgroup of SL2(Z[1/p]) at level r. A denominator
// that is not invertible mod r yields false (with the reason in *why), never
// an exception.
bool is_member(const Mat2& m, long long p, const BigInt& r, Subgroup which,
               std::string* why = nullptr);

}  // namespace sl2cong
