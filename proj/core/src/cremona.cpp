#include "septet/cremona.hpp"

#include <algorithm>
#include <optional>

#include "septet/error.hpp"

namespace septet {

CremonaBase::CremonaBase(std::size_t i, std::size_t j, std::size_t k) : labels{i, j, k} {
  std::sort(labels.begin(), labels.end());
  if (labels[0] == labels[1] || labels[1] == labels[2])
    throw Error(ErrorKind::InvalidArgument, "cremona base labels must be distinct");
  if (labels[2] >= 7) throw Error(ErrorKind::InvalidArgument, "cremona base label out of range");
}

std::string CremonaBase::to_string() const {
  return std::to_string(labels[0]) + std::to_string(labels[1]) + std::to_string(labels[2]);
}

const std::vector<CremonaBase>& all_cremona_bases() {
  static const std::vector<CremonaBase> bases = [] {
    std::vector<CremonaBase> out;
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = i + 1; j < 7; ++j)
        for (std::size_t k = j + 1; k < 7; ++k) out.emplace_back(i, j, k);
    return out;
  }();
  return bases;
}

Configuration cremona(const Configuration& c, const CremonaBase& base) {
  if (c.size() != 7) throw Error(ErrorKind::InvalidArgument, "cremona needs a 7-configuration");
  if (!check_typicality(c).typical) throw Error(ErrorKind::NotTypical, "cremona input is not typical");
  const auto [i, j, k] = base.labels;
  std::size_t unit = 0;
  while (unit == i || unit == j || unit == k) ++unit;

  // Rows of adj[p_i p_j p_k]; lambda = coordinates of the unit point in that basis.
  Matrix3 adj{cross(c[j].coords(), c[k].coords()), cross(c[k].coords(), c[i].coords()),
              cross(c[i].coords(), c[j].coords())};
  Vec3 lambda = septet::apply(adj, c[unit].coords());
  // T = diag(1/lambda) * adj, scaled by lambda_0 lambda_1 lambda_2.
  Matrix3 t;
  const Integer scale[3] = {lambda[1] * lambda[2], lambda[0] * lambda[2], lambda[0] * lambda[1]};
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t s = 0; s < 3; ++s) t[r][s] = scale[r] * adj[r][s];

  std::vector<HomPoint> out;
  for (std::size_t l = 0; l < 7; ++l) {
    if (l == i) {
      out.emplace_back(Vec3{1, 0, 0});
    } else if (l == j) {
      out.emplace_back(Vec3{0, 1, 0});
    } else if (l == k) {
      out.emplace_back(Vec3{0, 0, 1});
    } else {
      Vec3 w = septet::apply(t, c[l].coords());
      out.emplace_back(Vec3{Integer(w[1] * w[2]), Integer(w[0] * w[2]), Integer(w[0] * w[1])});
    }
  }
  std::optional<Configuration> image;
  try {
    image.emplace(std::move(out));
  } catch (const Error&) {
    image.reset();
  }
  if (!image || !check_typicality(*image).typical)
    throw Error(ErrorKind::ImageDegenerate, "image under base " + base.to_string() + " is not typical");
  return *image;
}

std::map<CremonaBase, QClass> cremona_orbit(const Configuration& c, const CalibrationTable& table) {
  std::map<CremonaBase, QClass> orbit;
  for (const auto& base : all_cremona_bases()) orbit.emplace(base, q_class(cremona(c, base), table));
  return orbit;
}

}  // namespace septet
