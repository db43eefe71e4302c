#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <string>

#include "septet/classifier.hpp"
#include "septet/configuration.hpp"

namespace septet {

/// Three distinct labels {i, j, k}, stored sorted.
struct CremonaBase {
  std::array<std::size_t, 3> labels{};
  CremonaBase(std::size_t i, std::size_t j, std::size_t k);
  std::string to_string() const;  // "012"
  friend auto operator<=>(const CremonaBase&, const CremonaBase&) = default;
};

/// All 35 bases in lexicographic order.
const std::vector<CremonaBase>& all_cremona_bases();

/// Frame p_i, p_j, p_k to the coordinate triangle and the lowest remaining
/// label to (1:1:1), then (x:y:z) -> (yz:xz:xy). Base labels i, j, k become
/// (1:0:0), (0:1:0), (0:0:1). Throws Error{NotTypical}, Error{ImageDegenerate}.
Configuration cremona(const Configuration& c, const CremonaBase& base);

/// q_class of the image for each of the 35 bases.
std::map<CremonaBase, QClass> cremona_orbit(const Configuration& c,
                                            const CalibrationTable& table = builtin_calibration());

}  // namespace septet
