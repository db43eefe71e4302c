#include "septet/classifier.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "septet/arrangement.hpp"
#include "septet/error.hpp"

namespace septet::detail {
extern const std::string_view kCalibrationText;
}

namespace septet {
namespace {

void require_size(const Configuration& c, std::size_t n, const char* op) {
  if (c.size() != n)
    throw Error(ErrorKind::InvalidArgument, std::string(op) + " needs " + std::to_string(n) + " points, got " +
                                                std::to_string(c.size()));
}

int delta_of(const OrientationTable& table, std::span<const std::size_t> labels) {
  auto count = static_cast<int>(components(adjacency_graph(table, labels)).count);
  if (count != 1 && count != 2 && count != 3 && count != 6)
    throw Error(ErrorKind::InvalidComponentCount,
                "adjacency graph of a simple 6-configuration has " + std::to_string(count) + " components");
  return count;
}

std::array<int, 7> deltas_from(const OrientationTable& table) {
  std::array<int, 7> out{};
  for (std::size_t p = 0; p < 7; ++p) {
    std::array<std::size_t, 6> rest{};
    for (std::size_t i = 0, k = 0; i < 7; ++i)
      if (i != p) rest[k++] = i;
    out[p] = delta_of(table, rest);
  }
  return out;
}

DerivativeCode code_from(const std::array<int, 7>& deltas) {
  DerivativeCode code;
  for (int d : deltas) code.sigma[d == 1 ? 0 : d == 2 ? 1 : d == 3 ? 2 : 3]++;
  return code;
}

void require_known(const DerivativeCode& code) {
  const auto& known = known_derivative_codes();
  if (std::find(known.begin(), known.end(), code) == known.end())
    throw Error(ErrorKind::UnknownCode, "derivative code " + code.to_string() + " is not one of the eleven");
}

PolygonalSpectrum spectrum_from(const std::vector<ArrangementFace>& faces, std::size_t n) {
  PolygonalSpectrum s;
  s.f.assign(n - 2, 0);
  for (const auto& face : faces) {
    std::size_t k = face.sides.size();
    if (k < 3 || k > n) throw Error(ErrorKind::NotSimple, "face with " + std::to_string(k) + " sides");
    s.f[k - 3]++;
  }
  return s;
}

// Shared state for the seven-point invariants so each predicate runs once.
struct SevenAnalysis {
  const Configuration& c;
  OrientationTable table;
  AdjacencyGraph graph;
  std::array<int, 7> deltas;
  DerivativeCode sigma;
  std::vector<ArrangementFace> faces;
  PolygonalSpectrum spectrum;
  ConvexityType convexity;

  explicit SevenAnalysis(const Configuration& cfg)
      : c(cfg), table(cfg), graph(0), deltas{}, convexity(ConvexityType::Pentagonal) {
    require_size(cfg, 7, "seven-point analysis");
    if (!table.simple()) throw Error(ErrorKind::NotSimple, "configuration has a collinear triple");
    std::array<std::size_t, 7> all{0, 1, 2, 3, 4, 5, 6};
    graph = adjacency_graph(table, all);
    deltas = deltas_from(table);
    sigma = code_from(deltas);
    faces = dual_arrangement_faces(cfg);
    spectrum = spectrum_from(faces, 7);
    convexity = convexity_type(spectrum);
  }
};

std::optional<std::size_t> marked_from(const SevenAnalysis& a) {
  if (a.convexity == ConvexityType::Heptagonal)
    throw Error(ErrorKind::NotApplicable, "heptagonal configurations have no marked point");
  if (a.sigma.sigma[0] == 0) return std::nullopt;
  if (a.convexity == ConvexityType::Hexagonal) {
    std::optional<std::size_t> marked;
    for (const auto& face : a.faces) {
      if (face.sides.size() != 6) continue;
      if (marked) throw Error(ErrorKind::Ambiguous, "more than one hexagonal face");
      for (std::size_t p = 0; p < 7; ++p)
        if (std::find(face.sides.begin(), face.sides.end(), p) == face.sides.end()) marked = p;
    }
    if (!marked || a.deltas[*marked] != 1)
      throw Error(ErrorKind::Ambiguous, "hull-interior point does not leave a cyclic 6-configuration");
    return marked;
  }
  if (a.sigma.sigma[0] != 1)
    throw Error(ErrorKind::Ambiguous, "pentagonal configuration with sigma_1 = " + std::to_string(a.sigma.sigma[0]));
  for (std::size_t p = 0; p < 7; ++p)
    if (a.deltas[p] == 1) return p;
  return std::nullopt;
}

std::vector<EdgeDecoration> decorations_from(const SevenAnalysis& a, const DominanceMatrix& m) {
  std::vector<EdgeDecoration> out;
  for (auto [i, j] : a.graph.edges()) {
    if (a.deltas[i] != 1 || a.deltas[j] != 1) continue;
    bool oi = m.outside(i, j), oj = m.outside(j, i);
    if (!oi && !oj)
      out.push_back({i, j, Decoration::Internal});
    else if (oi && oj)
      out.push_back({i, j, Decoration::External});
    else if (!oi)
      out.push_back({i, j, Decoration::Special});
    else
      out.push_back({j, i, Decoration::Special});
  }
  return out;
}

// Heptagon cycle starting at `start` and stepping first to `next`.
std::array<std::size_t, 7> walk_cycle(const AdjacencyGraph& g, std::size_t start, std::size_t next) {
  std::array<std::size_t, 7> order{};
  order[0] = start;
  order[1] = next;
  for (std::size_t k = 2; k < 7; ++k) {
    std::size_t prev = order[k - 2], cur = order[k - 1];
    std::size_t found = 7;
    for (std::size_t w = 0; w < 7; ++w)
      if (w != prev && g.has_edge(cur, w)) found = w;
    if (found == 7) throw Error(ErrorKind::CanonicalizationFailed, "adjacency graph is not a 7-cycle");
    order[k] = found;
  }
  return order;
}

void require_seven_cycle(const AdjacencyGraph& g) {
  for (std::size_t v = 0; v < 7; ++v)
    if (g.degree(v) != 2) throw Error(ErrorKind::CanonicalizationFailed, "adjacency graph is not a 7-cycle");
  if (components(g).count != 1) throw Error(ErrorKind::CanonicalizationFailed, "adjacency graph is not a 7-cycle");
}

std::array<std::size_t, 7> numeration_from(const SevenAnalysis& a, const std::array<int, 7>& d) {
  if (a.convexity != ConvexityType::Heptagonal)
    throw Error(ErrorKind::NotHeptagonal, "spectrum " + a.spectrum.to_string() + " has no heptagonal face");
  require_seven_cycle(a.graph);
  std::size_t top = 7;
  for (std::size_t v = 0; v < 7; ++v)
    if (d[v] == 6) {
      if (top != 7) throw Error(ErrorKind::CanonicalizationFailed, "two points of dominance index 6");
      top = v;
    }
  if (top == 7) throw Error(ErrorKind::CanonicalizationFailed, "no point of dominance index 6");
  std::size_t next = 7;
  for (std::size_t w = 0; w < 7; ++w)
    if (a.graph.has_edge(top, w) && d[w] == 1) next = w;
  if (next == 7) throw Error(ErrorKind::CanonicalizationFailed, "index-6 point has no neighbour of index 1");
  auto order = walk_cycle(a.graph, top, next);
  constexpr std::array<int, 7> expected{6, 1, 4, 3, 2, 5, 0};
  for (std::size_t k = 0; k < 7; ++k)
    if (d[order[k]] != expected[k])
      throw Error(ErrorKind::CanonicalizationFailed, "dominance indices along the heptagon are not (6,1,4,3,2,5,0)");
  return order;
}

int region_from(const SevenAnalysis& a, const DominanceMatrix& m, std::size_t marked) {
  if (marked >= 7) throw Error(ErrorKind::InvalidArgument, "marked label out of range");
  if (a.convexity != ConvexityType::Heptagonal)
    throw Error(ErrorKind::NotApplicable, "region lookup needs a heptagonal configuration");
  if (a.deltas[marked] != 1) throw Error(ErrorKind::NotApplicable, "removing the marked point must leave a cyclic 6-configuration");
  require_seven_cycle(a.graph);
  std::vector<std::size_t> nbrs;
  for (std::size_t w = 0; w < 7; ++w)
    if (a.graph.has_edge(marked, w)) nbrs.push_back(w);
  // The two heptagon neighbours are consecutive on the hexagon of the rest,
  // so exactly one of them is subdominant there.
  bool first_sub = !m.outside(nbrs[0], marked), second_sub = !m.outside(nbrs[1], marked);
  if (first_sub == second_sub)
    throw Error(ErrorKind::CanonicalizationFailed, "heptagon neighbours of the marked point have equal colour");
  auto q = walk_cycle(a.graph, marked, first_sub ? nbrs[0] : nbrs[1]);
  auto d = dominance_indices(m);
  std::size_t six = 7, zero = 7;
  for (std::size_t k = 0; k < 7; ++k) {
    if (d[q[k]] == 6) six = k;
    if (d[q[k]] == 0) zero = k;
  }
  // Region A_i -> positions of the index-6 and index-0 points.
  constexpr std::array<std::pair<std::size_t, std::size_t>, 7> table{
      {{0, 1}, {2, 1}, {2, 3}, {4, 3}, {4, 5}, {6, 5}, {6, 0}}};
  for (std::size_t i = 0; i < 7; ++i)
    if (table[i] == std::pair{six, zero}) return static_cast<int>(i);
  throw Error(ErrorKind::CanonicalizationFailed, "extremal dominance pair matches no region");
}

// --- fingerprint --------------------------------------------------------------

constexpr std::size_t kPairs = 21;

// Pairs in column-major order (0,1),(0,2),(1,2),(0,3),...
constexpr std::array<std::pair<std::size_t, std::size_t>, kPairs> kPairOrder = [] {
  std::array<std::pair<std::size_t, std::size_t>, kPairs> out{};
  std::size_t k = 0;
  for (std::size_t j = 1; j < 7; ++j)
    for (std::size_t i = 0; i < j; ++i) out[k++] = {i, j};
  return out;
}();

int delta_rank(int delta) { return delta == 1 ? 0 : delta == 2 ? 1 : delta == 3 ? 2 : 3; }

ClassFingerprint fingerprint_from(const SevenAnalysis& a, const DominanceMatrix& m) {
  std::optional<std::size_t> marked;
  if (a.convexity != ConvexityType::Heptagonal) marked = marked_from(a);

  // vertex code: delta rank, colour (0 none, 1 dominant, 2 subdominant), marked flag
  std::array<std::uint8_t, 7> vcode{};
  for (std::size_t v = 0; v < 7; ++v) {
    int colour = 0;
    if (marked && v != *marked) colour = m.outside(v, *marked) ? 1 : 2;
    vcode[v] = static_cast<std::uint8_t>((delta_rank(a.deltas[v]) << 3) | (colour << 1) |
                                         (marked && v == *marked ? 1 : 0));
  }
  // pair code seen from (i, j): 0 none, 1 edge, 2 internal, 3 external,
  // 4 special from i, 5 special from j
  std::array<std::array<std::uint8_t, 7>, 7> pcode{};
  for (auto [i, j] : a.graph.edges()) pcode[i][j] = pcode[j][i] = 1;
  for (const auto& e : decorations_from(a, m)) {
    std::size_t i = e.from, j = e.to;
    switch (e.kind) {
      case Decoration::Internal: pcode[i][j] = pcode[j][i] = 2; break;
      case Decoration::External: pcode[i][j] = pcode[j][i] = 3; break;
      case Decoration::Special:
        pcode[i][j] = 4;
        pcode[j][i] = 5;
        break;
    }
  }

  std::array<std::uint8_t, 7> sorted = vcode;
  std::sort(sorted.begin(), sorted.end());

  // Enumerate the relabellings that put vertex codes in sorted order and keep
  // the lexicographically smallest pair-code sequence.
  std::array<std::uint8_t, kPairs> best{};
  best.fill(0xff);
  std::array<std::size_t, 7> perm{}, best_perm{};
  std::array<bool, 7> used{};
  std::array<std::uint8_t, kPairs> current{};
  auto recurse = [&](auto&& self, std::size_t pos) -> void {
    if (pos == 7) {
      if (current < best) {
        best = current;
        best_perm = perm;
      }
      return;
    }
    // Positions (0..pos-1, pos) fill pair slots pos*(pos-1)/2 .. +pos.
    const std::size_t base = pos * (pos - 1) / 2;
    for (std::size_t v = 0; v < 7; ++v) {
      if (used[v] || vcode[v] != sorted[pos]) continue;
      perm[pos] = v;
      for (std::size_t i = 0; i < pos; ++i) current[base + i] = pcode[perm[i]][v];
      const std::size_t filled = base + pos;
      if (std::lexicographical_compare(best.begin(), best.begin() + filled, current.begin(), current.begin() + filled))
        continue;
      used[v] = true;
      self(self, pos + 1);
      used[v] = false;
    }
  };
  recurse(recurse, 0);

  static constexpr char kColour[] = {'-', 'D', 'S'};
  static constexpr char kPair[] = {'.', 'e', 'i', 'x', '>', '<'};
  std::string enc;
  for (std::size_t k = 0; k < 4; ++k) {
    if (k) enc += ',';
    enc += std::to_string(a.sigma.sigma[k]);
  }
  enc += '|';
  for (std::size_t k = 0; k < 7; ++k) {
    std::uint8_t code = vcode[best_perm[k]];
    enc += "1236"[code >> 3];
    enc += kColour[(code >> 1) & 3];
    enc += (code & 1) ? '*' : '-';
    if (k + 1 < 7) enc += ',';
  }
  enc += '|';
  for (std::size_t k = 0; k < kPairs; ++k) enc += kPair[best[k]];
  return ClassFingerprint{enc};
}

QClass q_class_from(const SevenAnalysis& a, const DominanceMatrix& m, const CalibrationTable& table) {
  require_known(a.sigma);
  QClass out;
  out.fingerprint = fingerprint_from(a, m);
  const std::string* name = table.find(out.fingerprint);
  if (!name)
    throw Error(ErrorKind::UnknownFingerprint,
                "fingerprint " + out.fingerprint.encoding + " (sigma " + a.sigma.to_string() + ") is not calibrated");
  out.name = *name;
  return out;
}

void require_typical(const Configuration& c) {
  auto report = check_typicality(c);
  if (!report.typical)
    throw Error(report.simple ? ErrorKind::NotTypical : ErrorKind::NotSimple,
                report.simple ? "configuration has a coconic sextuple" : "configuration has a collinear triple");
}

}  // namespace

// ---------------------------------------------------------------------------

int six_class(const Configuration& c) {
  require_size(c, 6, "six_class");
  OrientationTable table(c);
  std::array<std::size_t, 6> all{0, 1, 2, 3, 4, 5};
  return delta_of(table, all);
}

std::vector<Dominance> dominance_coloring(const Configuration& c) {
  require_size(c, 6, "dominance_coloring");
  auto report = check_typicality(c);
  if (!report.typical) throw Error(ErrorKind::NotTypical, "dominance colouring needs a typical configuration");
  if (six_class(c) != 1) throw Error(ErrorKind::NotCyclic, "dominance colouring needs a cyclic configuration");
  std::vector<Dominance> out;
  for (std::size_t p = 0; p < 6; ++p) {
    std::array<HomPoint, 5> rest{c[0], c[0], c[0], c[0], c[0]};
    for (std::size_t i = 0, k = 0; i < 6; ++i)
      if (i != p) rest[k++] = c[i];
    ConicSide side = side_of_conic(conic_through5(rest), c[p]);
    if (side == ConicSide::On) throw Error(ErrorKind::NotTypical, "point on the conic through the others");
    out.push_back(side == ConicSide::Outside ? Dominance::Dominant : Dominance::Subdominant);
  }
  return out;
}

int DerivativeCode::count(int delta) const { return sigma[static_cast<std::size_t>(delta_rank(delta))]; }

std::string DerivativeCode::to_string() const {
  return "(" + std::to_string(sigma[0]) + "," + std::to_string(sigma[1]) + "," + std::to_string(sigma[2]) + "," +
         std::to_string(sigma[3]) + ")";
}

const std::vector<DerivativeCode>& known_derivative_codes() {
  static const std::vector<DerivativeCode> codes{
      {{7, 0, 0, 0}}, {{3, 4, 0, 0}}, {{2, 2, 3, 0}}, {{1, 2, 2, 2}}, {{1, 0, 6, 0}}, {{1, 6, 0, 0}},
      {{1, 4, 2, 0}}, {{1, 2, 4, 0}}, {{0, 4, 3, 0}}, {{0, 6, 1, 0}}, {{0, 3, 3, 1}}};
  return codes;
}

std::array<int, 7> deletion_classes(const Configuration& c) {
  require_size(c, 7, "deletion_classes");
  OrientationTable table(c);
  if (!table.simple()) throw Error(ErrorKind::NotSimple, "configuration has a collinear triple");
  return deltas_from(table);
}

DerivativeCode derivative_code(const Configuration& c) {
  auto code = code_from(deletion_classes(c));
  require_known(code);
  return code;
}

DominanceMatrix dominance_matrix(const Configuration& c) {
  require_size(c, 7, "dominance_matrix");
  DominanceMatrix m;
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = i + 1; j < 7; ++j) {
      std::array<HomPoint, 5> rest{c[0], c[0], c[0], c[0], c[0]};
      for (std::size_t p = 0, k = 0; p < 7; ++p)
        if (p != i && p != j) rest[k++] = c[p];
      Conic q = [&] {
        try {
          return conic_through5(rest);
        } catch (const Error& e) {
          throw Error(ErrorKind::NotTypical, e.detail());
        }
      }();
      for (std::size_t p : {i, j}) {
        ConicSide side = side_of_conic(q, c[p]);
        if (side == ConicSide::On)
          throw Error(ErrorKind::NotTypical, "point " + std::to_string(p) + " lies on the conic through five others");
        m.set(p, p == i ? j : i, side == ConicSide::Outside);
      }
    }
  return m;
}

std::array<int, 7> dominance_indices(const DominanceMatrix& m) {
  std::array<int, 7> d{};
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      if (i != j) d[i] += m.bit(i, j);
  return d;
}

int PolygonalSpectrum::euler_sum() const {
  int s = 0;
  for (std::size_t i = 0; i < f.size(); ++i) s += (static_cast<int>(i) + 3 - 4) * f[i];
  return s;
}

std::string PolygonalSpectrum::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(f[i]);
  }
  return out + ")";
}

PolygonalSpectrum polygonal_spectrum(const Configuration& c) {
  return spectrum_from(dual_arrangement_faces(c), c.size());
}

std::string_view to_string(ConvexityType t) {
  switch (t) {
    case ConvexityType::Heptagonal: return "heptagonal";
    case ConvexityType::Hexagonal: return "hexagonal";
    case ConvexityType::Pentagonal: return "pentagonal";
  }
  return "?";
}

ConvexityType convexity_type(const PolygonalSpectrum& f) {
  if (f.count(7) > 0) return ConvexityType::Heptagonal;
  if (f.count(6) > 0) return ConvexityType::Hexagonal;
  return ConvexityType::Pentagonal;
}

std::array<std::size_t, 7> canonical_cyclic_numeration(const Configuration& c) {
  SevenAnalysis a(c);
  if (a.convexity != ConvexityType::Heptagonal)
    throw Error(ErrorKind::NotHeptagonal, "spectrum " + a.spectrum.to_string() + " has no heptagonal face");
  return numeration_from(a, dominance_indices(dominance_matrix(c)));
}

int heptagonal_region(const Configuration& c, std::size_t marked) {
  SevenAnalysis a(c);
  return region_from(a, dominance_matrix(c), marked);
}

std::optional<std::size_t> marked_point(const Configuration& c) { return marked_from(SevenAnalysis(c)); }

std::string_view to_string(Decoration d) {
  switch (d) {
    case Decoration::Internal: return "internal";
    case Decoration::External: return "external";
    case Decoration::Special: return "special";
  }
  return "?";
}

std::vector<EdgeDecoration> edge_decorations(const Configuration& c) {
  SevenAnalysis a(c);
  return decorations_from(a, dominance_matrix(c));
}

// --- calibration ----------------------------------------------------------------

CalibrationTable CalibrationTable::parse(std::string_view text) {
  CalibrationTable table;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || line.front() == '#') continue;
    auto space = line.find(' ');
    if (space == std::string::npos || space == 0 || space + 1 >= line.size())
      throw Error(ErrorKind::ParseError, "calibration line " + std::to_string(lineno) + " is not '<fingerprint> <name>'");
    table.add(ClassFingerprint{line.substr(0, space)}, line.substr(space + 1));
  }
  return table;
}

std::string CalibrationTable::serialize() const {
  std::string out =
      "# septet calibration table v1: class fingerprint -> Q-class name\n"
      "# one entry per line, sorted by fingerprint\n";
  for (const auto& [fp, name] : entries_) out += fp.encoding + " " + name + "\n";
  return out;
}

void CalibrationTable::add(const ClassFingerprint& fp, std::string name) {
  auto [it, inserted] = entries_.emplace(fp, name);
  if (!inserted && it->second != name)
    throw Error(ErrorKind::ParseError, "fingerprint " + fp.encoding + " mapped to both " + it->second + " and " + name);
}

const std::string* CalibrationTable::find(const ClassFingerprint& fp) const {
  auto it = entries_.find(fp);
  return it == entries_.end() ? nullptr : &it->second;
}

const CalibrationTable& builtin_calibration() {
  static const CalibrationTable table = CalibrationTable::parse(detail::kCalibrationText);
  return table;
}

const std::vector<std::string>& q_class_names() {
  static const std::vector<std::string> names{
      "(7,0,0,0)", "(3,4,0,0)_1", "(3,4,0,0)_2", "(2,2,3,0)_1", "(2,2,3,0)_2", "(2,2,3,0)_3", "(1,2,2,2)",
      "(1,0,6,0)", "(1,6,0,0)",   "(1,4,2,0)",   "(1,2,4,0)",   "(0,4,3,0)",   "(0,6,1,0)",   "(0,3,3,1)"};
  return names;
}

bool code_determines_class(const DerivativeCode& sigma) {
  return sigma != DerivativeCode{{3, 4, 0, 0}} && sigma != DerivativeCode{{2, 2, 3, 0}};
}

ClassFingerprint class_fingerprint(const Configuration& c) {
  require_typical(c);
  SevenAnalysis a(c);
  require_known(a.sigma);
  return fingerprint_from(a, dominance_matrix(c));
}

QClass q_class(const Configuration& c, const CalibrationTable& table) {
  require_size(c, 7, "q_class");
  require_typical(c);
  SevenAnalysis a(c);
  return q_class_from(a, dominance_matrix(c), table);
}

ClassReport classify(const Configuration& c, const CalibrationTable& table) {
  ClassReport r;
  r.point_count = c.size();
  r.typicality = check_typicality(c);
  if (!r.typicality.simple) return r;
  r.graph = adjacency_graph(c);
  r.spectrum = polygonal_spectrum(c);
  if (c.size() == 6) {
    r.delta = six_class(c);
    if (r.typicality.typical && *r.delta == 1) r.coloring = dominance_coloring(c);
    return r;
  }
  if (c.size() != 7) return r;

  SevenAnalysis a(c);
  r.convexity = a.convexity;
  r.deletion_deltas = a.deltas;
  r.sigma = a.sigma;
  if (!r.typicality.typical) return r;
  DominanceMatrix m = dominance_matrix(c);
  r.dominance = m;
  r.indices = dominance_indices(m);
  if (a.convexity == ConvexityType::Heptagonal)
    r.numeration = numeration_from(a, *r.indices);
  else
    r.marked = marked_from(a);
  r.decorations = decorations_from(a, m);
  require_known(a.sigma);
  r.fingerprint = fingerprint_from(a, m);
  if (const std::string* name = table.find(*r.fingerprint)) r.class_name = *name;
  return r;
}

}  // namespace septet
