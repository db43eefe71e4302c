#include "septet/deformation.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <random>

#include "septet/classifier.hpp"
#include "septet/detail/determinant.hpp"
#include "septet/error.hpp"

namespace septet {
namespace {

const Rational kEventWidth(1, 1 << 20);

Rational pow2_inverse(unsigned bits) {
  Integer den = 1;
  den <<= bits;
  return Rational(Integer(1), den);
}

Vec3 integer_rep(const Vec3& a, const Vec3& b, long t) {
  return {Integer(a[0] * (1 - t) + b[0] * t), Integer(a[1] * (1 - t) + b[1] * t),
          Integer(a[2] * (1 - t) + b[2] * t)};
}

void require_typical_endpoint(const Configuration& c, const char* which) {
  auto report = check_typicality(c);
  if (!report.typical)
    throw Error(ErrorKind::NotTypical, std::string("path ") + which + " is not a typical configuration");
}

}  // namespace

LinearPath::LinearPath(Configuration start, Configuration end) : start_(std::move(start)), end_(std::move(end)) {
  if (start_.size() != end_.size()) throw Error(ErrorKind::InvalidArgument, "path endpoints differ in size");
  for (std::size_t i = 0; i < start_.size(); ++i) {
    const Vec3& a = start_[i].coords();
    const Vec3& b = end_[i].coords();
    Vec3 c = cross(a, b);
    if (c[0] == 0 && c[1] == 0 && c[2] == 0 && sgn(dot(a, b)) < 0)
      throw Error(ErrorKind::RepDegenerate, "representative of point " + std::to_string(i) + " vanishes on the path");
  }
}

Vec3 LinearPath::representative(std::size_t i, const Rational& t) const {
  // Scaled by the denominator of t to stay integral.
  const Vec3& a = start_[i].coords();
  const Vec3& b = end_[i].coords();
  const Integer& num = t.get_num();
  const Integer& den = t.get_den();
  return {Integer(a[0] * (den - num) + b[0] * num), Integer(a[1] * (den - num) + b[1] * num),
          Integer(a[2] * (den - num) + b[2] * num)};
}

Configuration LinearPath::at(const Rational& t) const {
  std::vector<HomPoint> pts;
  for (std::size_t i = 0; i < size(); ++i) pts.emplace_back(representative(i, t));
  return Configuration(std::move(pts));
}

Polynomial LinearPath::orientation_polynomial(std::size_t i, std::size_t j, std::size_t k) const {
  std::vector<Rational> xs, ys;
  for (long t = 0; t <= 3; ++t) {
    xs.emplace_back(t);
    ys.emplace_back(det3(integer_rep(start_[i].coords(), end_[i].coords(), t),
                         integer_rep(start_[j].coords(), end_[j].coords(), t),
                         integer_rep(start_[k].coords(), end_[k].coords(), t)));
  }
  return interpolate(xs, ys);
}

Polynomial LinearPath::coconic_polynomial(std::span<const std::size_t, 6> labels) const {
  std::vector<Rational> xs, ys;
  for (long t = 0; t <= 12; ++t) {
    detail::IntMatrix<6> m;
    for (std::size_t r = 0; r < 6; ++r)
      m[r] = veronese(integer_rep(start_[labels[r]].coords(), end_[labels[r]].coords(), t));
    xs.emplace_back(t);
    ys.emplace_back(detail::bareiss_determinant<6>(std::move(m)));
  }
  return interpolate(xs, ys);
}

std::string_view to_string(WallKind kind) { return kind == WallKind::Collinear ? "collinear" : "coconic"; }

std::vector<WallEvent> wall_events(const LinearPath& path) {
  require_typical_endpoint(path.start(), "start");
  require_typical_endpoint(path.end(), "end");
  const std::size_t n = path.size();

  struct Pending {
    WallEvent event;
    std::vector<Polynomial> sturm;
  };
  std::vector<Pending> found;
  auto collect = [&](const Polynomial& p, WallKind kind, std::vector<std::size_t> labels) {
    auto roots = isolate_roots(p, Rational(0), Rational(1), kEventWidth);
    if (roots.empty()) return;
    auto seq = sturm_sequence(p);
    for (const auto& r : roots) found.push_back({WallEvent{kind, labels, r.lo, r.hi, false}, seq});
  };

  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        collect(path.orientation_polynomial(i, j, k), WallKind::Collinear, {i, j, k});
  if (n >= 6) {
    for (std::size_t skip = 0; skip < (n == 7 ? n : 1); ++skip) {
      std::array<std::size_t, 6> labels{};
      for (std::size_t i = 0, k = 0; i < n; ++i)
        if (n == 6 || i != skip) labels[k++] = i;
      collect(path.coconic_polynomial(labels), WallKind::Coconic, {labels.begin(), labels.end()});
    }
  }

  auto overlap = [](const WallEvent& x, const WallEvent& y) { return !(x.hi < y.lo || y.hi < x.lo); };
  // Overlapping intervals of distinct roots separate under refinement; those
  // still overlapping at 2^-80 are reported as clustered.
  const Rational fine = pow2_inverse(80);
  for (std::size_t x = 0; x < found.size(); ++x)
    for (std::size_t y = x + 1; y < found.size(); ++y) {
      auto& ex = found[x].event;
      auto& ey = found[y].event;
      if (!overlap(ex, ey)) continue;
      if (ex.lo != ex.hi) {
        auto r = refine_root(found[x].sturm, {ex.lo, ex.hi}, fine);
        ex.lo = r.lo;
        ex.hi = r.hi;
      }
      if (ey.lo != ey.hi) {
        auto r = refine_root(found[y].sturm, {ey.lo, ey.hi}, fine);
        ey.lo = r.lo;
        ey.hi = r.hi;
      }
      if (overlap(ex, ey)) ex.clustered = ey.clustered = true;
    }

  std::vector<WallEvent> events;
  for (auto& f : found) events.push_back(std::move(f.event));
  std::stable_sort(events.begin(), events.end(), [](const WallEvent& x, const WallEvent& y) { return x.lo < y.lo; });
  return events;
}

IsotopyCertificate is_q_isotopy(const LinearPath& path) {
  IsotopyCertificate cert;
  cert.events = wall_events(path);
  cert.certified = cert.events.empty();
  if (cert.certified && path.size() == 7) {
    if (class_fingerprint(path.start()) != class_fingerprint(path.end()))
      throw Error(ErrorKind::CanonicalizationFailed, "event-free path joins different fingerprints");
  }
  return cert;
}

// --- path search -----------------------------------------------------------------

namespace {

struct LabeledSignature {
  AdjacencyGraph graph{0};
  std::array<int, 7> deltas{};
  DominanceMatrix dominance;
  friend bool operator==(const LabeledSignature&, const LabeledSignature&) = default;
};

LabeledSignature signature_of(const Configuration& c) {
  return {adjacency_graph(c), deletion_classes(c), dominance_matrix(c)};
}

std::vector<std::vector<std::size_t>> alignments(const Configuration& a, const Configuration& b) {
  LabeledSignature target = signature_of(a);
  LabeledSignature sb = signature_of(b);
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> perm(7);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (std::size_t i = 0; i < 7 && ok; ++i) {
      if (sb.deltas[perm[i]] != target.deltas[i]) ok = false;
      for (std::size_t j = 0; j < 7 && ok; ++j) {
        if (i == j) continue;
        if (sb.graph.has_edge(perm[i], perm[j]) != target.graph.has_edge(i, j) ||
            sb.dominance.outside(perm[i], perm[j]) != target.dominance.outside(i, j))
          ok = false;
      }
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Distinct wall roots in (0, 1) over all predicates, counted by Sturm
// sequences without isolation; stops early once the count exceeds `limit`.
std::size_t wall_root_count(const LinearPath& path, std::size_t limit) {
  const std::size_t n = path.size();
  std::size_t total = 0;
  auto add = [&](const Polynomial& p) {
    if (p.is_zero()) {
      total = limit + 1;
      return;
    }
    if (p.degree() > 0) total += static_cast<std::size_t>(count_roots(sturm_sequence(p), Rational(0), Rational(1)));
  };
  for (std::size_t i = 0; i < n && total <= limit; ++i)
    for (std::size_t j = i + 1; j < n && total <= limit; ++j)
      for (std::size_t k = j + 1; k < n && total <= limit; ++k) add(path.orientation_polynomial(i, j, k));
  for (std::size_t skip = 0; skip < n && total <= limit; ++skip) {
    std::array<std::size_t, 6> labels{};
    for (std::size_t i = 0, k = 0; i < n; ++i)
      if (i != skip) labels[k++] = i;
    add(path.coconic_polynomial(labels));
  }
  return total;
}

// Greedy descent on the number of walls between the current configuration
// and the target: each accepted step is an event-free segment to a
// configuration with the same labelled signature and fewer walls to go.
class PathSearch {
 public:
  PathSearch(LabeledSignature sig, std::size_t budget, std::uint64_t seed)
      : sig_(std::move(sig)), budget_(budget), rng_(seed) {}

  std::size_t checked() const { return checked_; }
  bool exhausted() const { return checked_ >= budget_; }

  // Waypoints after x up to and including y, or nullopt.
  std::optional<std::vector<Configuration>> connect(const Configuration& x, const Configuration& y) {
    if (exhausted()) return std::nullopt;
    std::vector<Configuration> out;
    Configuration current = x;
    std::size_t walls = count(current, y, kNoLimit);
    Rational step(1);
    int stalls = 0;
    while (walls > 0) {
      if (exhausted()) return std::nullopt;
      std::optional<Configuration> best;
      std::size_t best_walls = walls;
      for (int k = 0; k < kCandidates && checked_ + 2 <= budget_; ++k) {
        auto w = candidate(current, y, step);
        if (!w || *w == current) continue;
        if (count(current, *w, 0) != 0) continue;
        std::size_t left = count(*w, y, best_walls);
        if (left < best_walls || (left == best_walls && !best)) {
          best = std::move(w);
          best_walls = left;
        }
      }
      if (!best) {
        step /= 2;
        if (step < kMinStep) return std::nullopt;
        continue;
      }
      stalls = best_walls < walls ? 0 : stalls + 1;
      if (stalls > kMaxStalls) return std::nullopt;
      out.push_back(*best);
      current = std::move(*best);
      walls = best_walls;
      if (step < 1) step *= 2;
    }
    if (!(current == y)) out.push_back(y);
    return out;
  }

  // Chains connect() through the given waypoints.
  std::optional<std::vector<Configuration>> connect_through(const Configuration& x,
                                                            const std::vector<Configuration>& via) {
    std::vector<Configuration> out;
    const Configuration* from = &x;
    for (const auto& w : via) {
      auto leg = connect(*from, w);
      if (!leg) return std::nullopt;
      out.insert(out.end(), leg->begin(), leg->end());
      from = &w;
    }
    return out;
  }

 private:
  static constexpr std::size_t kNoLimit = std::size_t(-1) / 2;
  static constexpr int kCandidates = 12;
  static constexpr int kMaxStalls = 24;
  static constexpr long kGrid = 64;
  inline static const Rational kMinStep{1, 1024};

  std::size_t count(const Configuration& x, const Configuration& y, std::size_t limit) {
    ++checked_;
    try {
      return wall_root_count(LinearPath(x, y), limit);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RepDegenerate) throw;
      return kNoLimit;
    }
  }

  static Rational snap(const Rational& v, long noise) {
    Integer scaled = v.get_num() * kGrid;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), scaled.get_mpz_t(), v.get_den().get_mpz_t());
    return Rational(q + noise, kGrid);
  }

  // Moves a random subset of points: half of the time a random fraction (up
  // to `step`) of the way toward y, otherwise sideways by up to `step` times
  // the largest remaining displacement. Coordinates are snapped to a 1/kGrid
  // lattice. Points at infinity jump straight to their target.
  std::optional<Configuration> candidate(const Configuration& x, const Configuration& y, const Rational& step) {
    std::vector<HomPoint> pts(x.points().begin(), x.points().end());
    std::bernoulli_distribution coin(0.5);
    std::uniform_int_distribution<long> frac(1, 8);
    std::uniform_int_distribution<long> jitter(-2, 2);
    std::uniform_int_distribution<long> side(-1024, 1024);
    const bool toward = coin(rng_);
    Rational reach = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (!x[i].is_affine() || !y[i].is_affine()) continue;
      for (std::size_t k = 0; k < 2; ++k)
        reach = std::max(reach, Rational(abs(Rational(x[i][k], x[i][2]) - Rational(y[i][k], y[i][2]))));
    }
    reach = std::max(reach, Rational(1)) * step;
    bool moved = false;
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (!coin(rng_) || (toward && x[i] == y[i])) continue;
      moved = true;
      if (!x[i].is_affine() || !y[i].is_affine()) {
        if (toward) pts[i] = y[i];
        continue;
      }
      Rational px(x[i][0], x[i][2]), py(x[i][1], x[i][2]);
      if (toward) {
        Rational s = step * Rational(frac(rng_), 8);
        if (s == 1) {
          pts[i] = y[i];
          continue;
        }
        px += s * (Rational(y[i][0], y[i][2]) - px);
        py += s * (Rational(y[i][1], y[i][2]) - py);
        pts[i] = HomPoint::affine(snap(px, jitter(rng_)), snap(py, jitter(rng_)));
      } else {
        px += reach * Rational(side(rng_), 1024);
        py += reach * Rational(side(rng_), 1024);
        pts[i] = HomPoint::affine(snap(px, 0), snap(py, 0));
      }
    }
    if (!moved) return std::nullopt;
    try {
      Configuration w(std::move(pts));
      if (!check_typicality(w).typical || !(signature_of(w) == sig_)) return std::nullopt;
      return w;
    } catch (const Error&) {
      return std::nullopt;
    }
  }

  LabeledSignature sig_;
  std::size_t budget_;
  std::size_t checked_ = 0;
  std::mt19937_64 rng_;
};

bool all_affine(const Configuration& c) {
  return std::all_of(c.points().begin(), c.points().end(), [](const HomPoint& p) { return p.is_affine(); });
}

Matrix3 scaled_identity(const Integer& d) { return {Vec3{d, 0, 0}, Vec3{0, d, 0}, Vec3{0, 0, d}}; }

Matrix3 blend(const Matrix3& m0, const Matrix3& m1, long num, long den) {
  Matrix3 out;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) out[r][c] = m0[r][c] * (den - num) + m1[r][c] * num;
  return out;
}

// Whether the linear part of (1 - t) m0 + t m1 stays invertible on [0, 1].
bool invertible_on_segment(const Matrix3& m0, const Matrix3& m1) {
  std::vector<Rational> xs, ys;
  for (long t = 0; t <= 2; ++t) {
    Matrix3 m = blend(m0, m1, t, 1);
    xs.emplace_back(t);
    ys.emplace_back(Integer(m[0][0] * m[1][1] - m[0][1] * m[1][0]));
  }
  Polynomial p = interpolate(xs, ys);
  if (p.sign_at(Rational(0)) <= 0) return false;
  return count_roots(sturm_sequence(p), Rational(0), Rational(1)) == 0 && p.sign_at(Rational(1)) > 0;
}

// Orientation-preserving affine images of b moving labels 0, 1, 2 onto those
// of a, as a chain of waypoints ending at the aligned copy; empty if the two
// triangles have opposite orientation or some point is not affine.
std::vector<Configuration> affine_alignment(const Configuration& a, const Configuration& b) {
  if (!all_affine(a) || !all_affine(b)) return {};
  if (orient3(a[0], a[1], a[2]) != orient3(b[0], b[1], b[2])) return {};
  Matrix3 ca{Vec3{a[0][0] * a[1][2] * a[2][2], a[1][0] * a[0][2] * a[2][2], a[2][0] * a[0][2] * a[1][2]},
             Vec3{a[0][1] * a[1][2] * a[2][2], a[1][1] * a[0][2] * a[2][2], a[2][1] * a[0][2] * a[1][2]},
             Vec3{a[0][2] * a[1][2] * a[2][2], a[0][2] * a[1][2] * a[2][2], a[0][2] * a[1][2] * a[2][2]}};
  // Columns of cb are b_0, b_1, b_2 with z = 1 after scaling by their product.
  Integer zb = b[0][2] * b[1][2] * b[2][2];
  Matrix3 cb{Vec3{b[0][0] * b[1][2] * b[2][2], b[1][0] * b[0][2] * b[2][2], b[2][0] * b[0][2] * b[1][2]},
             Vec3{b[0][1] * b[1][2] * b[2][2], b[1][1] * b[0][2] * b[2][2], b[2][1] * b[0][2] * b[1][2]},
             Vec3{zb, zb, zb}};
  // adj(cb): transpose of the cofactor matrix.
  Vec3 c0{cb[0][0], cb[1][0], cb[2][0]}, c1{cb[0][1], cb[1][1], cb[2][1]}, c2{cb[0][2], cb[1][2], cb[2][2]};
  Matrix3 adj{cross(c1, c2), cross(c2, c0), cross(c0, c1)};
  Integer det = det3(cb);
  Matrix3 target;
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) {
      Integer v = 0;
      for (std::size_t k = 0; k < 3; ++k) v += ca[r][k] * adj[k][c];
      target[r][c] = sgn(det) < 0 ? Integer(-v) : v;
    }
  // target maps z = 1 to z = const; its last row is (0, 0, d) with d > 0.
  const Integer d = target[2][2];
  const Matrix3 id = scaled_identity(d);
  std::vector<Matrix3> corners{id};
  if (invertible_on_segment(id, target)) {
    corners.push_back(target);
  } else {
    const Matrix3 turns[3] = {{Vec3{0, Integer(-d), 0}, Vec3{d, 0, 0}, Vec3{0, 0, d}},
                              {Vec3{Integer(-d), 0, 0}, Vec3{0, Integer(-d), 0}, Vec3{0, 0, d}},
                              {Vec3{0, d, 0}, Vec3{Integer(-d), 0, 0}, Vec3{0, 0, d}}};
    bool found = false;
    for (const auto& turn : turns)
      if (invertible_on_segment(id, turn) && invertible_on_segment(turn, target)) {
        corners.push_back(turn);
        corners.push_back(target);
        found = true;
        break;
      }
    if (!found) return {};
  }
  constexpr long kSteps = 8;
  std::vector<Configuration> chain;
  for (std::size_t leg = 0; leg + 1 < corners.size(); ++leg)
    for (long k = 1; k <= kSteps; ++k) chain.push_back(b.transformed(blend(corners[leg], corners[leg + 1], k, kSteps)));
  return chain;
}

}  // namespace

PathSearchResult find_q_path(const Configuration& a, const Configuration& b, std::size_t budget, std::uint64_t seed) {
  if (a.size() != 7 || b.size() != 7) throw Error(ErrorKind::InvalidArgument, "path search needs 7-configurations");
  QClass qa = q_class(a), qb = q_class(b);
  if (qa.name != qb.name) throw Error(ErrorKind::ClassMismatch, qa.name + " vs " + qb.name);

  PathSearchResult result;
  result.waypoints.push_back(a);
  std::vector<std::size_t> identity(7);
  std::iota(identity.begin(), identity.end(), 0);
  if (a == b) {
    result.found = true;
    result.relabeling = identity;
    return result;
  }
  const LabeledSignature sig = signature_of(a);
  std::size_t remaining = budget;
  std::uint64_t stream = seed;
  const auto candidates = alignments(a, b);
  for (const auto& perm : candidates) {
    if (b.permuted(perm) == a) {
      result.found = true;
      result.relabeling = perm;
      return result;
    }
  }
  // Straight segments first, one certification per alignment.
  for (const auto& perm : candidates) {
    if (remaining == 0) break;
    PathSearch probe(sig, 1, stream);
    auto legs = probe.connect(a, b.permuted(perm));
    result.segments_checked += probe.checked();
    remaining -= std::min(remaining, probe.checked());
    if (legs) {
      result.found = true;
      result.relabeling = perm;
      result.waypoints.insert(result.waypoints.end(), legs->begin(), legs->end());
      return result;
    }
  }
  // Restarts cycle through the alignments with fresh random streams.
  for (std::size_t attempt = 0; remaining > 0 && !candidates.empty(); ++attempt) {
    const auto& perm = candidates[attempt % candidates.size()];
    Configuration target = b.permuted(perm);
    PathSearch search(sig, remaining, stream++);
    std::optional<std::vector<Configuration>> legs;
    // Even attempts go a -> affinely aligned copy of target -> back along the
    // affine chain to target; odd attempts head for target directly.
    std::vector<Configuration> chain = attempt % 2 == 0 ? affine_alignment(a, target) : std::vector<Configuration>{};
    if (!chain.empty()) {
      std::reverse(chain.begin(), chain.end());
      Configuration aligned = chain.front();
      chain.erase(chain.begin());
      chain.push_back(target);
      auto head = search.connect(a, aligned);
      if (head) {
        auto tail = search.connect_through(aligned, chain);
        if (tail) {
          head->insert(head->end(), tail->begin(), tail->end());
          legs = std::move(head);
        }
      }
    } else {
      legs = search.connect(a, target);
    }
    result.segments_checked += search.checked();
    remaining -= std::min(remaining, search.checked());
    if (legs) {
      result.found = true;
      result.relabeling = perm;
      result.waypoints.insert(result.waypoints.end(), legs->begin(), legs->end());
      return result;
    }
  }
  return result;
}

}  // namespace septet
