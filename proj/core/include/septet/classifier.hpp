#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "septet/configuration.hpp"

namespace septet {

// ---------------------------------------------------------------------------
// Six-point invariants

/// Component count delta in {1, 2, 3, 6} of the adjacency graph of a simple
/// 6-configuration: cyclic, bicomponent, tricomponent, icosahedral.
/// Throws Error{NotSimple} or Error{InvalidComponentCount}.
int six_class(const Configuration& c);

enum class Dominance { Dominant, Subdominant };

/// Dominant iff the point is outside the conic through the other five.
/// Requires a typical cyclic 6-configuration (Error{NotTypical}, Error{NotCyclic}).
std::vector<Dominance> dominance_coloring(const Configuration& c);

// ---------------------------------------------------------------------------
// Seven-point invariants

struct DerivativeCode {
  std::array<int, 4> sigma{};  // (sigma_1, sigma_2, sigma_3, sigma_6)

  int count(int delta) const;
  std::string to_string() const;  // "(s1,s2,s3,s6)"
  friend bool operator==(const DerivativeCode&, const DerivativeCode&) = default;
  friend auto operator<=>(const DerivativeCode&, const DerivativeCode&) = default;
};

/// The eleven derivative codes of simple 7-configurations, heptagonal first.
const std::vector<DerivativeCode>& known_derivative_codes();

/// delta of c minus each point, indexed by label.
std::array<int, 7> deletion_classes(const Configuration& c);

/// Throws Error{NotSimple} or Error{UnknownCode}.
DerivativeCode derivative_code(const Configuration& c);

/// Bits d(i|j): 1 iff point i is outside the conic through the five points
/// other than i and j.
class DominanceMatrix {
 public:
  DominanceMatrix() = default;

  bool outside(std::size_t i, std::size_t j) const { return bits_[i][j]; }
  int bit(std::size_t i, std::size_t j) const { return bits_[i][j] ? 1 : 0; }
  void set(std::size_t i, std::size_t j, bool outside) { bits_[i][j] = outside; }

  friend bool operator==(const DominanceMatrix&, const DominanceMatrix&) = default;

 private:
  std::array<std::array<bool, 7>, 7> bits_{};
};

/// 21 conics, 42 side tests. Throws Error{NotTypical} when a point is on a conic.
DominanceMatrix dominance_matrix(const Configuration& c);

/// Row sums d(i) = sum_j d(i|j).
std::array<int, 7> dominance_indices(const DominanceMatrix& m);

struct PolygonalSpectrum {
  std::vector<int> f;  // f[k - 3] = number of k-gonal faces, k = 3..n

  int count(int k) const { return k >= 3 && k - 3 < static_cast<int>(f.size()) ? f[k - 3] : 0; }
  int euler_sum() const;  // sum (k - 4) f_k
  std::string to_string() const;
  friend bool operator==(const PolygonalSpectrum&, const PolygonalSpectrum&) = default;
};

/// Throws Error{NotSimple}.
PolygonalSpectrum polygonal_spectrum(const Configuration& c);

enum class ConvexityType { Heptagonal, Hexagonal, Pentagonal };
std::string_view to_string(ConvexityType t);

ConvexityType convexity_type(const PolygonalSpectrum& f);

/// The heptagon order read so the dominance indices are (6,1,4,3,2,5,0).
/// Throws Error{NotHeptagonal}, Error{NotTypical} or Error{CanonicalizationFailed}.
std::array<std::size_t, 7> canonical_cyclic_numeration(const Configuration& c);

/// Index i of the region A_i holding `marked`, read off the labels with
/// dominance index 6 and 0 in the numeration q_0 = marked, q_1 = the
/// subdominant heptagon neighbour of marked, q_2, ... along the heptagon.
/// Throws Error{NotApplicable} or Error{CanonicalizationFailed}.
int heptagonal_region(const Configuration& c, std::size_t marked);

/// The point whose removal leaves a cyclic 6-configuration, for hexagonal and
/// pentagonal (sigma_1 = 1) inputs; nullopt when sigma_1 = 0.
/// Throws Error{NotApplicable} for heptagonal input, Error{Ambiguous}.
std::optional<std::size_t> marked_point(const Configuration& c);

enum class Decoration { Internal, External, Special };
std::string_view to_string(Decoration d);

struct EdgeDecoration {
  std::size_t from = 0;  // for Special: the endpoint inside the shared conic
  std::size_t to = 0;
  Decoration kind = Decoration::Internal;
  friend bool operator==(const EdgeDecoration&, const EdgeDecoration&) = default;
};

/// Decorations of the adjacency-graph edges joining two points with delta 1.
std::vector<EdgeDecoration> edge_decorations(const Configuration& c);

// ---------------------------------------------------------------------------
// Q-classes

struct ClassFingerprint {
  std::string encoding;
  friend bool operator==(const ClassFingerprint&, const ClassFingerprint&) = default;
  friend auto operator<=>(const ClassFingerprint&, const ClassFingerprint&) = default;
};

/// Fingerprint -> class name, as shipped in data/calibration.txt.
class CalibrationTable {
 public:
  CalibrationTable() = default;
  /// Lines "<fingerprint> <name>", '#' comments. Throws Error{ParseError}.
  static CalibrationTable parse(std::string_view text);
  std::string serialize() const;

  void add(const ClassFingerprint& fp, std::string name);
  const std::string* find(const ClassFingerprint& fp) const;
  const std::map<ClassFingerprint, std::string>& entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

  friend bool operator==(const CalibrationTable&, const CalibrationTable&) = default;

 private:
  std::map<ClassFingerprint, std::string> entries_;
};

/// The table compiled into the library.
const CalibrationTable& builtin_calibration();

/// The fourteen class names; the two refined codes carry subscripts _1, _2, _3.
const std::vector<std::string>& q_class_names();

/// Whether the derivative code alone determines the class.
bool code_determines_class(const DerivativeCode& sigma);

/// Canonical encoding of (sigma; adjacency graph; per-vertex delta, dominance
/// colour relative to the marked point and marked flag; edge decorations),
/// minimised over all relabellings. Requires a typical 7-configuration.
ClassFingerprint class_fingerprint(const Configuration& c);

struct QClass {
  std::string name;
  ClassFingerprint fingerprint;
};

/// Throws Error{NotTypical} or Error{UnknownFingerprint}.
QClass q_class(const Configuration& c, const CalibrationTable& table = builtin_calibration());

// ---------------------------------------------------------------------------
// Everything at once

/// All invariants of one configuration; fields that do not apply stay empty.
struct ClassReport {
  std::size_t point_count = 0;
  TypicalityReport typicality;
  std::optional<AdjacencyGraph> graph;
  std::optional<PolygonalSpectrum> spectrum;
  std::optional<ConvexityType> convexity;
  // six-point inputs
  std::optional<int> delta;
  std::optional<std::vector<Dominance>> coloring;
  // seven-point inputs
  std::optional<std::array<int, 7>> deletion_deltas;
  std::optional<DerivativeCode> sigma;
  std::optional<DominanceMatrix> dominance;
  std::optional<std::array<int, 7>> indices;
  std::optional<std::array<std::size_t, 7>> numeration;
  std::optional<std::size_t> marked;
  std::optional<std::vector<EdgeDecoration>> decorations;
  std::optional<ClassFingerprint> fingerprint;
  std::optional<std::string> class_name;
};

/// Computes every applicable invariant without throwing on non-typical input.
ClassReport classify(const Configuration& c, const CalibrationTable& table = builtin_calibration());

}  // namespace septet
