#pragma once

#include <cstddef>
#include <vector>

#include "septet/configuration.hpp"

namespace septet {

/// A face of the arrangement of lines dual to a configuration, as a cell of
/// the projective plane (one antipodal pair of spherical faces).
struct ArrangementFace {
  /// Labels of the dual lines carrying the sides, in cyclic order.
  std::vector<std::size_t> sides;
};

/// Faces of the arrangement of the lines a*x + b*y + c*z = 0 dual to the
/// points (a:b:c), found by walking the great circles of the spherical double
/// cover exactly. Throws Error{NotSimple} if three dual lines are concurrent.
std::vector<ArrangementFace> dual_arrangement_faces(const Configuration& c);

}  // namespace septet
