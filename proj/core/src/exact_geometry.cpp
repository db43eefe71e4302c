#include "septet/exact_geometry.hpp"

#include <algorithm>
#include <numeric>

#include "septet/detail/determinant.hpp"
#include "septet/error.hpp"

namespace septet {

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {Integer(a[1] * b[2] - a[2] * b[1]), Integer(a[2] * b[0] - a[0] * b[2]),
          Integer(a[0] * b[1] - a[1] * b[0])};
}

Integer dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Integer det3(const Vec3& a, const Vec3& b, const Vec3& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

Integer det3(const Matrix3& m) { return det3(m[0], m[1], m[2]); }

Vec3 apply(const Matrix3& m, const Vec3& v) { return {dot(m[0], v), dot(m[1], v), dot(m[2], v)}; }

namespace {

Vec3 normalize(Vec3 v) {
  Integer g = 0;
  for (const auto& c : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw Error(ErrorKind::DegenerateInput, "homogeneous triple (0:0:0)");
  int last = v[2] != 0 ? 2 : (v[1] != 0 ? 1 : 0);
  if (sgn(v[last]) < 0) g = -g;
  if (g != 1)
    for (auto& c : v) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return v;
}

Vec3 clear_denominators(const Rational& x, const Rational& y, const Rational& z) {
  Integer l = 1;
  for (const Rational* r : {&x, &y, &z}) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), r->get_den_mpz_t());
  Vec3 out;
  const Rational* in[3] = {&x, &y, &z};
  for (std::size_t i = 0; i < 3; ++i) {
    Rational scaled = *in[i] * l;
    out[i] = scaled.get_num();
  }
  return out;
}

}  // namespace

template <class Tag>
Homogeneous<Tag>::Homogeneous(const Rational& x, const Rational& y, const Rational& z)
    : coords_(normalize(clear_denominators(x, y, z))) {}

template <class Tag>
Homogeneous<Tag>::Homogeneous(Vec3 coords) : coords_(normalize(std::move(coords))) {}

template class Homogeneous<PointTag>;
template class Homogeneous<LineTag>;

std::string to_string(const HomPoint& p) {
  return "(" + p[0].get_str() + ":" + p[1].get_str() + ":" + p[2].get_str() + ")";
}

std::array<Integer, 6> veronese(const Vec3& v) {
  return {Integer(v[0] * v[0]), Integer(v[0] * v[1]), Integer(v[1] * v[1]),
          Integer(v[0] * v[2]), Integer(v[1] * v[2]), Integer(v[2] * v[2])};
}

Conic::Conic(Matrix3 m) : m_(std::move(m)) {
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j)
      if (m_[i][j] != m_[j][i]) throw Error(ErrorKind::DegenerateInput, "conic matrix is not symmetric");
  Integer g = 0;
  for (const auto& row : m_)
    for (const auto& c : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) throw Error(ErrorKind::DegenerateInput, "zero conic");
  Integer d = det3(m_);
  if (d == 0) throw Error(ErrorKind::DegenerateInput, "degenerate conic (det = 0)");
  if (sgn(d) > 0) g = -g;
  for (auto& row : m_)
    for (auto& c : row) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

Integer Conic::evaluate(const Vec3& v) const {
  return m_[0][0] * v[0] * v[0] + m_[1][1] * v[1] * v[1] + m_[2][2] * v[2] * v[2] +
         2 * (m_[0][1] * v[0] * v[1] + m_[0][2] * v[0] * v[2] + m_[1][2] * v[1] * v[2]);
}

std::string_view to_string(ConicSide side) {
  switch (side) {
    case ConicSide::Inside: return "Inside";
    case ConicSide::On: return "On";
    case ConicSide::Outside: return "Outside";
  }
  return "?";
}

Sign orient3(const HomPoint& p, const HomPoint& q, const HomPoint& r) {
  return sign_of(det3(p.coords(), q.coords(), r.coords()));
}

Sign coconic6(std::span<const HomPoint, 6> ps) {
  detail::IntMatrix<6> m;
  for (std::size_t i = 0; i < 6; ++i) m[i] = veronese(ps[i].coords());
  return sign_of(detail::bareiss_determinant<6>(std::move(m)));
}

Conic conic_through5(std::span<const HomPoint, 5> ps) {
  for (std::size_t a = 0; a < 5; ++a)
    for (std::size_t b = a + 1; b < 5; ++b)
      for (std::size_t c = b + 1; c < 5; ++c)
        if (orient3(ps[a], ps[b], ps[c]) == Sign::Zero)
          throw Error(ErrorKind::DegenerateInput, "three of the five points are collinear: " + to_string(ps[a]) +
                                                      " " + to_string(ps[b]) + " " + to_string(ps[c]));
  std::array<std::array<Integer, 6>, 5> rows;
  for (std::size_t i = 0; i < 5; ++i) rows[i] = veronese(ps[i].coords());

  // Laplace expansion along a symbolic first row: coefficient k is the signed
  // 5x5 minor with column k removed.
  std::array<Integer, 6> coeff;
  for (std::size_t k = 0; k < 6; ++k) {
    detail::IntMatrix<5> minor;
    for (std::size_t i = 0; i < 5; ++i)
      for (std::size_t j = 0, col = 0; j < 6; ++j)
        if (j != k) minor[i][col++] = rows[i][j];
    coeff[k] = detail::bareiss_determinant<5>(std::move(minor));
    if (k % 2 == 1) coeff[k] = -coeff[k];
  }
  // (x^2, xy, y^2, xz, yz, z^2) -> 2x the symmetric form.
  Matrix3 m{{{Integer(2 * coeff[0]), coeff[1], coeff[3]},
             {coeff[1], Integer(2 * coeff[2]), coeff[4]},
             {coeff[3], coeff[4], Integer(2 * coeff[5])}}};
  return Conic(std::move(m));
}

ConicSide side_of_conic(const Conic& c, const HomPoint& p) {
  int s = sgn(c.evaluate(p));
  return s < 0 ? ConicSide::Inside : (s > 0 ? ConicSide::Outside : ConicSide::On);
}

ProjLine join(const HomPoint& p, const HomPoint& q) {
  if (p == q) throw Error(ErrorKind::IdenticalArguments, "join of a point with itself: " + to_string(p));
  return ProjLine(cross(p.coords(), q.coords()));
}

HomPoint meet(const ProjLine& l, const ProjLine& m) {
  if (l == m) throw Error(ErrorKind::IdenticalArguments, "meet of a line with itself");
  return HomPoint(cross(l.coords(), m.coords()));
}

bool incident(const ProjLine& l, const HomPoint& p) { return dot(l.coords(), p.coords()) == 0; }

std::vector<std::size_t> cyclic_order_on_line(const ProjLine& l, std::span<const HomPoint> ps) {
  for (const auto& p : ps)
    if (!incident(l, p)) throw Error(ErrorKind::PointNotOnLine, to_string(p) + " is not on the line");

  // Two independent vectors spanning the plane l^perp give homogeneous
  // parameters [a : b] of points on l.
  std::vector<Vec3> candidates;
  for (std::size_t k = 0; k < 3; ++k) {
    Vec3 e{Integer(0), Integer(0), Integer(0)};
    e[k] = 1;
    Vec3 c = cross(l.coords(), e);
    if (c[0] != 0 || c[1] != 0 || c[2] != 0) candidates.push_back(std::move(c));
  }
  const Vec3& u = candidates[0];
  const Vec3* v = nullptr;
  for (std::size_t k = 1; k < candidates.size(); ++k) {
    Vec3 c = cross(u, candidates[k]);
    if (c[0] != 0 || c[1] != 0 || c[2] != 0) {
      v = &candidates[k];
      break;
    }
  }

  struct Param {
    Integer a, b;
  };
  std::vector<Param> params;
  params.reserve(ps.size());
  for (const auto& p : ps) {
    Param t{det3(p.coords(), *v, l.coords()), det3(u, p.coords(), l.coords())};
    if (sgn(t.b) < 0 || (t.b == 0 && sgn(t.a) < 0)) {
      t.a = -t.a;
      t.b = -t.b;
    }
    params.push_back(std::move(t));
  }
  std::vector<std::size_t> order(ps.size());
  std::iota(order.begin(), order.end(), 0);
  // On the half-circle of directions, angle(s) < angle(t) iff cross(s, t) > 0.
  std::sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) {
    return sgn(params[i].a * params[j].b - params[j].a * params[i].b) > 0;
  });
  for (std::size_t k = 0; k + 1 < order.size(); ++k) {
    const auto& s = params[order[k]];
    const auto& t = params[order[k + 1]];
    if (s.a * t.b == t.a * s.b) throw Error(ErrorKind::IdenticalArguments, "repeated point on the line");
  }
  if (order.empty()) return order;
  std::rotate(order.begin(), std::find(order.begin(), order.end(), std::size_t{0}), order.end());
  if (order.size() >= 3 && order[1] > order.back()) std::reverse(order.begin() + 1, order.end());
  return order;
}

}  // namespace septet
