#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "septet/configuration.hpp"
#include "septet/polynomial.hpp"

namespace septet {

/// P(t)_i = (1 - t) * start_i + t * end_i on canonical representatives, t in [0, 1].
class LinearPath {
 public:
  /// Throws Error{InvalidArgument} on a size mismatch and Error{RepDegenerate}
  /// when some representative passes through (0, 0, 0).
  LinearPath(Configuration start, Configuration end);

  const Configuration& start() const { return start_; }
  const Configuration& end() const { return end_; }
  std::size_t size() const { return start_.size(); }

  /// Unnormalized representative of point i at time t.
  Vec3 representative(std::size_t i, const Rational& t) const;
  Configuration at(const Rational& t) const;

  /// det[P_i; P_j; P_k](t), degree <= 3.
  Polynomial orientation_polynomial(std::size_t i, std::size_t j, std::size_t k) const;
  /// 6x6 Veronese determinant of the listed points along the path, degree <= 12.
  Polynomial coconic_polynomial(std::span<const std::size_t, 6> labels) const;

 private:
  Configuration start_, end_;
};

enum class WallKind { Collinear, Coconic };
std::string_view to_string(WallKind kind);

struct WallEvent {
  WallKind kind = WallKind::Collinear;
  std::vector<std::size_t> labels;  // the triple or the sextuple
  Rational lo, hi;                  // isolating interval of the root, lo == hi if exact
  bool clustered = false;           // interval meets another event's interval
};

/// Every parameter in (0, 1) where some triple becomes collinear or some
/// sextuple coconic, isolated by Sturm sequences to width <= 2^-20 and sorted.
/// Endpoints must be typical (Error{NotTypical}).
std::vector<WallEvent> wall_events(const LinearPath& path);

struct IsotopyCertificate {
  bool certified = false;
  std::vector<WallEvent> events;
};

/// Certified iff the path has no wall event; then the endpoint fingerprints
/// are compared and a mismatch raises Error{CanonicalizationFailed}.
IsotopyCertificate is_q_isotopy(const LinearPath& path);

struct PathSearchResult {
  bool found = false;
  /// Consecutive waypoints are joined by certified event-free segments. The
  /// last waypoint is `b` relabelled by `relabeling` (waypoint[k] = b[relabeling[k]]).
  std::vector<Configuration> waypoints;
  std::vector<std::size_t> relabeling;
  std::size_t segments_checked = 0;
};

/// Randomized search for a piecewise-linear Q-deformation from a to a
/// relabelling of b; `budget` bounds the number of segment certifications.
/// Not finding a path proves nothing. Throws Error{ClassMismatch}.
PathSearchResult find_q_path(const Configuration& a, const Configuration& b, std::size_t budget,
                             std::uint64_t seed);

}  // namespace septet
