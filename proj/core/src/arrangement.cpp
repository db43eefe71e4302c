#include "septet/arrangement.hpp"

#include <algorithm>
#include <map>

#include "septet/error.hpp"

namespace septet {
namespace {

struct CircleVertex {
  Vec3 w;          // a point of the sphere on both great circles
  std::size_t other;
  Integer a, b;    // planar coordinates in the plane of the circle
};

bool upper(const CircleVertex& v) { return sgn(v.b) > 0 || (v.b == 0 && sgn(v.a) > 0); }

// Full-turn angular order in the plane of one great circle.
bool angle_less(const CircleVertex& s, const CircleVertex& t) {
  bool su = upper(s), tu = upper(t);
  if (su != tu) return su;
  return sgn(s.a * t.b - t.a * s.b) > 0;
}

Vec3 negate(const Vec3& v) { return {Integer(-v[0]), Integer(-v[1]), Integer(-v[2])}; }

}  // namespace

std::vector<ArrangementFace> dual_arrangement_faces(const Configuration& c) {
  const std::size_t n = c.size();
  // Spherical face -> (line, predecessor vertex line, successor vertex line)
  // for every arc on its boundary, keyed by the sign vector of an interior point.
  struct Side {
    std::size_t line, from, to;
  };
  std::map<unsigned, std::vector<Side>> face_sides;

  for (std::size_t i = 0; i < n; ++i) {
    const Vec3& l = c[i].coords();
    Vec3 u, v;
    {
      std::vector<Vec3> basis;
      for (std::size_t k = 0; k < 3 && basis.size() < 2; ++k) {
        Vec3 e{Integer(0), Integer(0), Integer(0)};
        e[k] = 1;
        Vec3 cand = cross(l, e);
        if (cand[0] == 0 && cand[1] == 0 && cand[2] == 0) continue;
        if (!basis.empty()) {
          Vec3 cc = cross(basis[0], cand);
          if (cc[0] == 0 && cc[1] == 0 && cc[2] == 0) continue;
        }
        basis.push_back(std::move(cand));
      }
      u = basis[0];
      v = basis[1];
    }
    std::vector<CircleVertex> verts;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      Vec3 w = cross(l, c[j].coords());
      for (int s = 0; s < 2; ++s) {
        CircleVertex cv;
        cv.w = s == 0 ? w : negate(w);
        cv.other = j;
        cv.a = det3(cv.w, v, l);
        cv.b = det3(u, cv.w, l);
        verts.push_back(std::move(cv));
      }
    }
    std::sort(verts.begin(), verts.end(), angle_less);
    for (std::size_t k = 0; k < verts.size(); ++k) {
      const auto& s = verts[k];
      const auto& t = verts[(k + 1) % verts.size()];
      if (upper(s) == upper(t) && s.a * t.b == t.a * s.b)
        throw Error(ErrorKind::NotSimple, "three dual lines are concurrent (collinear points)");
    }
    for (std::size_t k = 0; k < verts.size(); ++k) {
      const auto& s = verts[k];
      const auto& t = verts[(k + 1) % verts.size()];
      Vec3 mid{Integer(s.w[0] + t.w[0]), Integer(s.w[1] + t.w[1]), Integer(s.w[2] + t.w[2])};
      unsigned key = 0;
      for (std::size_t j = 0; j < n; ++j) {
        if (j == i) continue;
        int sg = sgn(dot(c[j].coords(), mid));
        if (sg == 0) throw Error(ErrorKind::NotSimple, "arc midpoint on a third dual line");
        if (sg > 0) key |= 1u << j;
      }
      face_sides[key].push_back({i, s.other, t.other});
      face_sides[key | (1u << i)].push_back({i, s.other, t.other});
    }
  }

  std::vector<ArrangementFace> faces;
  const unsigned all = (1u << n) - 1;
  for (const auto& [key, sides] : face_sides) {
    if (key > (all ^ key)) continue;  // keep one face per antipodal pair
    // Chain the sides: consecutive sides share a vertex, i.e. the side on
    // line x ending at line y is followed by the side on line y.
    ArrangementFace face;
    std::vector<bool> used(sides.size(), false);
    std::size_t current = 0;
    for (std::size_t step = 0; step < sides.size(); ++step) {
      used[current] = true;
      face.sides.push_back(sides[current].line);
      std::size_t next = sides.size();
      for (std::size_t k = 0; k < sides.size(); ++k) {
        if (used[k]) continue;
        const auto& cur = sides[current];
        if (sides[k].line == cur.from || sides[k].line == cur.to) {
          if (sides[k].from == cur.line || sides[k].to == cur.line) {
            next = k;
            break;
          }
        }
      }
      if (next == sides.size()) break;
      current = next;
    }
    if (face.sides.size() != sides.size()) {
      // Sides not chainable cannot happen for a simple arrangement.
      throw Error(ErrorKind::NotSimple, "malformed arrangement face");
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

}  // namespace septet
