#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "septet/rational.hpp"

namespace septet {

enum class Sign : int { Negative = -1, Zero = 0, Positive = 1 };

inline Sign sign_of(const Integer& value) {
  int s = sgn(value);
  return s < 0 ? Sign::Negative : (s > 0 ? Sign::Positive : Sign::Zero);
}
inline Sign operator-(Sign s) { return static_cast<Sign>(-static_cast<int>(s)); }
inline Sign operator*(Sign a, Sign b) { return static_cast<Sign>(static_cast<int>(a) * static_cast<int>(b)); }

using Vec3 = std::array<Integer, 3>;
using Matrix3 = std::array<Vec3, 3>;

Vec3 cross(const Vec3& a, const Vec3& b);
Integer dot(const Vec3& a, const Vec3& b);
Integer det3(const Vec3& a, const Vec3& b, const Vec3& c);
Integer det3(const Matrix3& m);
Vec3 apply(const Matrix3& m, const Vec3& v);

/// Homogeneous triple over the integers in canonical form: coordinate gcd 1
/// and last nonzero coordinate positive. Two triples represent the same
/// projective element iff their canonical forms are equal.
template <class Tag>
class Homogeneous {
 public:
  Homogeneous(const Rational& x, const Rational& y, const Rational& z);
  explicit Homogeneous(Vec3 coords);

  static Homogeneous affine(const Rational& x, const Rational& y) { return Homogeneous(x, y, Rational(1)); }

  const Integer& operator[](std::size_t i) const { return coords_[i]; }
  const Vec3& coords() const { return coords_; }

  bool is_affine() const { return coords_[2] != 0; }

  friend bool operator==(const Homogeneous& a, const Homogeneous& b) { return a.coords_ == b.coords_; }
  friend std::strong_ordering operator<=>(const Homogeneous& a, const Homogeneous& b) {
    for (std::size_t i = 0; i < 3; ++i) {
      int c = cmp(a.coords_[i], b.coords_[i]);
      if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
  }

 private:
  Vec3 coords_;
};

struct PointTag {};
struct LineTag {};

/// A point of the real projective plane.
using HomPoint = Homogeneous<PointTag>;
/// The line a*x + b*y + c*z = 0.
using ProjLine = Homogeneous<LineTag>;

extern template class Homogeneous<PointTag>;
extern template class Homogeneous<LineTag>;

std::string to_string(const HomPoint& p);

/// Nondegenerate conic q(v) = v^T M v with integer symmetric M, content 1 and
/// det(M) < 0, so that the disc component of its complement is {q < 0}.
class Conic {
 public:
  // Throws Error{DegenerateInput} if det(m) == 0 or m is not symmetric.
  explicit Conic(Matrix3 m);

  const Integer& at(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const Matrix3& matrix() const { return m_; }
  Integer evaluate(const Vec3& v) const;
  Integer evaluate(const HomPoint& p) const { return evaluate(p.coords()); }
  Integer determinant() const { return det3(m_); }

  friend bool operator==(const Conic&, const Conic&) = default;

 private:
  Matrix3 m_;
};

enum class ConicSide { Inside, On, Outside };

std::string_view to_string(ConicSide side);

/// Sign of det[p; q; r]; Zero iff collinear.
Sign orient3(const HomPoint& p, const HomPoint& q, const HomPoint& r);

/// Sign of the 6x6 determinant of rows (x^2, xy, y^2, xz, yz, z^2), taken in
/// the given order; Zero iff the six points lie on one (possibly degenerate) conic.
Sign coconic6(std::span<const HomPoint, 6> ps);

/// The conic through five points, no three collinear.
/// Throws Error{DegenerateInput} otherwise.
Conic conic_through5(std::span<const HomPoint, 5> ps);

ConicSide side_of_conic(const Conic& c, const HomPoint& p);

/// Throws Error{IdenticalArguments} when p == q.
ProjLine join(const HomPoint& p, const HomPoint& q);
/// Throws Error{IdenticalArguments} when l == m.
HomPoint meet(const ProjLine& l, const ProjLine& m);

bool incident(const ProjLine& l, const HomPoint& p);

/// Cyclic order of pairwise distinct points on l, as indices into ps. The
/// result starts at index 0 and runs in the direction whose second element
/// is smaller than its last, so it is canonical up to rotation and reflection.
/// Throws Error{PointNotOnLine} or Error{IdenticalArguments}.
std::vector<std::size_t> cyclic_order_on_line(const ProjLine& l, std::span<const HomPoint> ps);

/// Monomial row (x^2, xy, y^2, xz, yz, z^2) of a point.
std::array<Integer, 6> veronese(const Vec3& v);

}  // namespace septet
