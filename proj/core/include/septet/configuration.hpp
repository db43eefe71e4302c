#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "septet/exact_geometry.hpp"

namespace septet {

inline constexpr std::size_t kMaxPoints = 7;

/// An ordered, labeled tuple of 5 to 7 pairwise distinct projective points.
/// Label i is the position i.
class Configuration {
 public:
  // Throws Error{InvalidArgument} on a bad size or repeated point.
  explicit Configuration(std::vector<HomPoint> points);

  std::size_t size() const { return points_.size(); }
  const HomPoint& operator[](std::size_t label) const { return points_[label]; }
  std::span<const HomPoint> points() const { return points_; }

  /// The configuration with `label` removed; later labels shift down by one.
  Configuration without(std::size_t label) const;
  /// result[k] = (*this)[perm[k]].
  Configuration permuted(std::span<const std::size_t> perm) const;
  /// Applies an invertible integer matrix to every point.
  Configuration transformed(const Matrix3& t) const;

  friend bool operator==(const Configuration&, const Configuration&) = default;

 private:
  std::vector<HomPoint> points_;
};

/// All C(n,3) orientation signs of a configuration, indexable by any label order.
class OrientationTable {
 public:
  explicit OrientationTable(const Configuration& c);

  std::size_t size() const { return n_; }
  Sign operator()(std::size_t i, std::size_t j, std::size_t k) const {
    return static_cast<Sign>(signs_[i][j][k]);
  }
  bool simple() const { return simple_; }

 private:
  std::size_t n_;
  bool simple_ = true;
  std::array<std::array<std::array<std::int8_t, kMaxPoints>, kMaxPoints>, kMaxPoints> signs_{};
};

struct TypicalityReport {
  bool simple = true;
  bool typical = true;
  std::vector<std::array<std::size_t, 3>> collinear_triples;
  std::vector<std::array<std::size_t, 6>> coconic_sextuples;
};

/// Runs every orientation test and, for n >= 6, every coconic test.
TypicalityReport check_typicality(const Configuration& c);

/// Undirected simple graph on at most kMaxPoints vertices.
class AdjacencyGraph {
 public:
  explicit AdjacencyGraph(std::size_t vertex_count) : n_(vertex_count) {}

  std::size_t vertex_count() const { return n_; }
  void add_edge(std::size_t i, std::size_t j) {
    adj_[i] |= std::uint8_t(1u << j);
    adj_[j] |= std::uint8_t(1u << i);
  }
  bool has_edge(std::size_t i, std::size_t j) const { return (adj_[i] >> j) & 1u; }
  std::uint8_t neighbors(std::size_t i) const { return adj_[i]; }
  std::size_t degree(std::size_t i) const;
  std::vector<std::pair<std::size_t, std::size_t>> edges() const;

  friend bool operator==(const AdjacencyGraph&, const AdjacencyGraph&) = default;

 private:
  std::size_t n_;
  std::array<std::uint8_t, kMaxPoints> adj_{};
};

struct ComponentPartition {
  std::size_t count = 0;
  std::vector<std::size_t> component_of;
};

ComponentPartition components(const AdjacencyGraph& g);

/// Edge {p, q} iff one of the two arcs of the line pq bounded by p and q meets
/// none of the lines through two of the remaining points.
/// Throws Error{NotSimple}.
AdjacencyGraph adjacency_graph(const Configuration& c);

/// Adjacency graph of the subconfiguration `labels` (vertices are positions
/// in `labels`), reusing a precomputed orientation table.
AdjacencyGraph adjacency_graph(const OrientationTable& table, std::span<const std::size_t> labels);

}  // namespace septet
