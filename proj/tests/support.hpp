#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "septet/atlas.hpp"
#include "septet/classifier.hpp"
#include "septet/configuration.hpp"
#include "septet/exact_geometry.hpp"

namespace septet::testing {

inline HomPoint pt(long x, long y, long z = 1) { return HomPoint(Rational(x), Rational(y), Rational(z)); }

inline Configuration config(std::initializer_list<std::array<long, 3>> coords) {
  std::vector<HomPoint> pts;
  for (const auto& c : coords) pts.push_back(pt(c[0], c[1], c[2]));
  return Configuration(std::move(pts));
}

inline const Configuration& seed(const std::string& slug) { return builtin_seed(slug).configuration; }

// Plain Gaussian elimination over the rationals.
inline Rational det_oracle(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c] == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t r = c + 1; r < n; ++r) {
      Rational f = m[r][c] / m[c][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

inline std::vector<Rational> coords_of(const HomPoint& p) { return {Rational(p[0]), Rational(p[1]), Rational(p[2])}; }

inline int orient_oracle(const HomPoint& a, const HomPoint& b, const HomPoint& c) {
  return sgn(det_oracle({coords_of(a), coords_of(b), coords_of(c)}));
}

inline std::vector<Rational> veronese_oracle(const HomPoint& p) {
  Rational x(p[0]), y(p[1]), z(p[2]);
  return {x * x, x * y, y * y, x * z, y * z, z * z};
}

// Typical random integer configurations drawn from the census stream.
inline std::vector<Configuration> typical_samples(std::size_t count, std::size_t n, std::uint64_t seed_value,
                                                  long bound = 100) {
  SampleStream stream(n, bound, seed_value);
  std::vector<Configuration> out;
  while (out.size() < count) {
    auto c = stream.next();
    if (c && check_typicality(*c).typical) out.push_back(*c);
  }
  return out;
}

inline Matrix3 random_matrix(std::mt19937_64& rng, long bound = 9) {
  std::uniform_int_distribution<long> d(-bound, bound);
  for (;;) {
    Matrix3 m;
    for (auto& row : m)
      for (auto& v : row) v = d(rng);
    if (det3(m) != 0) return m;
  }
}

// Equal as cyclic sequences up to rotation and reflection.
inline bool same_cycle(std::vector<std::size_t> a, const std::vector<std::size_t>& b) {
  if (a.size() != b.size()) return false;
  for (int flip = 0; flip < 2; ++flip) {
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (a == b) return true;
      std::rotate(a.begin(), a.begin() + 1, a.end());
    }
    std::reverse(a.begin(), a.end());
  }
  return false;
}

// Adjacency by sorting affine parameters along each chord in the chart z != 0
// after applying `chart`: {p, q} is an edge iff no crossing point lies in the
// affine segment (0, 1), or every crossing point does.
inline std::set<std::pair<std::size_t, std::size_t>> adjacency_oracle(const Configuration& c, const Matrix3& chart) {
  Configuration t = c.transformed(chart);
  const std::size_t n = t.size();
  std::vector<std::array<Rational, 2>> aff(n);
  for (std::size_t i = 0; i < n; ++i) aff[i] = {Rational(t[i][0], t[i][2]), Rational(t[i][1], t[i][2])};
  std::set<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = p + 1; q < n; ++q) {
      bool inside = false, outside = false;
      std::array<Rational, 2> d{aff[q][0] - aff[p][0], aff[q][1] - aff[p][1]};
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = r + 1; s < n; ++s) {
          if (r == p || r == q || s == p || s == q) continue;
          // p + lambda d on the line through r and s.
          std::array<Rational, 2> e{aff[s][0] - aff[r][0], aff[s][1] - aff[r][1]};
          Rational den = d[0] * e[1] - d[1] * e[0];
          if (den == 0) {
            outside = true;  // parallel: they meet at infinity
            continue;
          }
          Rational lambda = ((aff[r][0] - aff[p][0]) * e[1] - (aff[r][1] - aff[p][1]) * e[0]) / den;
          (lambda > 0 && lambda < 1 ? inside : outside) = true;
        }
      if (!inside || !outside) edges.insert({p, q});
    }
  return edges;
}

// Faces of the dual arrangement from sign vectors around every vertex of the
// spherical arrangement; sides of a face = lines whose flip is again a face.
inline std::vector<int> spectrum_oracle(const Configuration& c) {
  const std::size_t n = c.size();
  std::set<std::vector<int>> faces;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vec3 v = cross(c[i].coords(), c[j].coords());
      for (int orientation : {1, -1}) {
        std::vector<int> base(n);
        for (std::size_t k = 0; k < n; ++k)
          if (k != i && k != j) base[k] = orientation * sgn(dot(c[k].coords(), v));
        for (int a : {1, -1})
          for (int b : {1, -1}) {
            base[i] = a;
            base[j] = b;
            faces.insert(base);
          }
      }
    }
  std::vector<int> f(n - 2, 0);
  for (const auto& s : faces) {
    int sides = 0;
    for (std::size_t k = 0; k < n; ++k) {
      auto t = s;
      t[k] = -t[k];
      sides += faces.count(t) ? 1 : 0;
    }
    ++f[sides - 3];
  }
  for (int& x : f) x /= 2;
  return f;
}

}  // namespace septet::testing
