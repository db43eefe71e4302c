#include "septet/configuration.hpp"

#include <bit>
#include <numeric>

#include "septet/error.hpp"

namespace septet {

Configuration::Configuration(std::vector<HomPoint> points) : points_(std::move(points)) {
  if (points_.size() < 5 || points_.size() > kMaxPoints)
    throw Error(ErrorKind::InvalidArgument,
                "a configuration has 5, 6 or 7 points, got " + std::to_string(points_.size()));
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j])
        throw Error(ErrorKind::InvalidArgument, "points " + std::to_string(i) + " and " + std::to_string(j) +
                                                    " coincide at " + to_string(points_[i]));
}

Configuration Configuration::without(std::size_t label) const {
  std::vector<HomPoint> rest;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (i != label) rest.push_back(points_[i]);
  return Configuration(std::move(rest));
}

Configuration Configuration::permuted(std::span<const std::size_t> perm) const {
  if (perm.size() != points_.size()) throw Error(ErrorKind::InvalidArgument, "permutation size mismatch");
  std::vector<HomPoint> out;
  out.reserve(perm.size());
  for (std::size_t k : perm) out.push_back(points_.at(k));
  return Configuration(std::move(out));
}

Configuration Configuration::transformed(const Matrix3& t) const {
  if (det3(t) == 0) throw Error(ErrorKind::InvalidArgument, "singular projective transformation");
  std::vector<HomPoint> out;
  out.reserve(points_.size());
  for (const auto& p : points_) out.emplace_back(apply(t, p.coords()));
  return Configuration(std::move(out));
}

OrientationTable::OrientationTable(const Configuration& c) : n_(c.size()) {
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      for (std::size_t k = j + 1; k < n_; ++k) {
        auto s = static_cast<std::int8_t>(orient3(c[i], c[j], c[k]));
        if (s == 0) simple_ = false;
        signs_[i][j][k] = signs_[j][k][i] = signs_[k][i][j] = s;
        signs_[j][i][k] = signs_[i][k][j] = signs_[k][j][i] = static_cast<std::int8_t>(-s);
      }
}

TypicalityReport check_typicality(const Configuration& c) {
  TypicalityReport report;
  const std::size_t n = c.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (orient3(c[i], c[j], c[k]) == Sign::Zero) report.collinear_triples.push_back({i, j, k});
  if (n >= 6) {
    // Sextuples are enumerated through the labels they omit.
    for (std::size_t skip = 0; skip < (n == 7 ? n : 1); ++skip) {
      std::array<HomPoint, 6> six{c[0], c[0], c[0], c[0], c[0], c[0]};
      std::array<std::size_t, 6> labels{};
      for (std::size_t i = 0, k = 0; i < n; ++i)
        if (n == 6 || i != skip) {
          labels[k] = i;
          six[k++] = c[i];
        }
      if (coconic6(six) == Sign::Zero) report.coconic_sextuples.push_back(labels);
    }
  }
  report.simple = report.collinear_triples.empty();
  report.typical = report.simple && report.coconic_sextuples.empty();
  return report;
}

std::size_t AdjacencyGraph::degree(std::size_t i) const { return static_cast<std::size_t>(std::popcount(adj_[i])); }

std::vector<std::pair<std::size_t, std::size_t>> AdjacencyGraph::edges() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (has_edge(i, j)) out.emplace_back(i, j);
  return out;
}

ComponentPartition components(const AdjacencyGraph& g) {
  ComponentPartition part;
  const std::size_t n = g.vertex_count();
  part.component_of.assign(n, n);
  for (std::size_t start = 0; start < n; ++start) {
    if (part.component_of[start] != n) continue;
    std::vector<std::size_t> stack{start};
    part.component_of[start] = part.count;
    while (!stack.empty()) {
      std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t w = 0; w < n; ++w)
        if (g.has_edge(v, w) && part.component_of[w] == n) {
          part.component_of[w] = part.count;
          stack.push_back(w);
        }
    }
    ++part.count;
  }
  return part;
}

AdjacencyGraph adjacency_graph(const OrientationTable& table, std::span<const std::size_t> labels) {
  if (!table.simple()) {
    for (std::size_t a = 0; a < labels.size(); ++a)
      for (std::size_t b = a + 1; b < labels.size(); ++b)
        for (std::size_t c = b + 1; c < labels.size(); ++c)
          if (table(labels[a], labels[b], labels[c]) == Sign::Zero)
            throw Error(ErrorKind::NotSimple, "collinear triple (" + std::to_string(labels[a]) + "," +
                                                  std::to_string(labels[b]) + "," + std::to_string(labels[c]) + ")");
  }
  const std::size_t m = labels.size();
  AdjacencyGraph g(m);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = a + 1; b < m; ++b) {
      // Points of the line pq are alpha*p + beta*q; the line rs meets it at
      // alpha:beta = (rs.q) : -(rs.p), so the crossing lies on the arc
      // alpha*beta > 0 iff p and q get opposite signs from the form rs.
      int arc = 0;
      bool crossing_free_arc = true;
      for (std::size_t r = 0; r < m && crossing_free_arc; ++r) {
        if (r == a || r == b) continue;
        for (std::size_t s = r + 1; s < m; ++s) {
          if (s == a || s == b) continue;
          const std::size_t p = labels[a], q = labels[b], u = labels[r], v = labels[s];
          int side = static_cast<int>(table(u, v, p)) * static_cast<int>(table(u, v, q));
          if (arc == 0) {
            arc = side;
          } else if (side != arc) {
            crossing_free_arc = false;
            break;
          }
        }
      }
      if (crossing_free_arc) g.add_edge(a, b);
    }
  return g;
}

AdjacencyGraph adjacency_graph(const Configuration& c) {
  OrientationTable table(c);
  std::vector<std::size_t> labels(c.size());
  std::iota(labels.begin(), labels.end(), 0);
  return adjacency_graph(table, labels);
}

}  // namespace septet
