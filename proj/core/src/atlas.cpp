#include "septet/atlas.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "septet/error.hpp"
#include "septet/io.hpp"

namespace septet::detail {
extern const std::vector<std::pair<std::string_view, std::string_view>> kSeedFiles;
}

namespace septet {

std::string six_class_name(int delta) {
  switch (delta) {
    case 1: return "cyclic";
    case 2: return "bicomponent";
    case 3: return "tricomponent";
    case 6: return "icosahedral";
  }
  throw Error(ErrorKind::InvalidArgument, "no six-point class with delta " + std::to_string(delta));
}

void verify_seed(const Seed& seed, const CalibrationTable& table) {
  auto fail = [&](const std::string& why) { throw Error(ErrorKind::SeedCorrupt, seed.slug + ": " + why); };
  const Configuration& c = seed.configuration;
  if (!check_typicality(c).typical) fail("not typical");
  try {
    if (c.size() == 6) {
      if (!seed.delta) fail("six-point seed without delta");
      int delta = six_class(c);
      if (delta != *seed.delta) fail("delta " + std::to_string(delta) + " != stored " + std::to_string(*seed.delta));
      if (seed.name != six_class_name(delta)) fail("name " + seed.name + " does not match delta");
    } else if (c.size() == 7) {
      if (!seed.fingerprint) fail("seven-point seed without fingerprint");
      QClass q = q_class(c, table);
      if (q.fingerprint != *seed.fingerprint) fail("fingerprint changed to " + q.fingerprint.encoding);
      if (q.name != seed.name) fail("classified as " + q.name + ", stored as " + seed.name);
    } else {
      fail("seeds have 6 or 7 points");
    }
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::SeedCorrupt) throw;
    fail(e.what());
  }
}

const std::vector<Seed>& builtin_seeds() {
  static const std::vector<Seed> seeds = [] {
    std::vector<Seed> out;
    for (const auto& [slug, text] : detail::kSeedFiles) {
      try {
        out.push_back(io::parse_seed(std::string(slug), text));
      } catch (const Error& e) {
        throw Error(ErrorKind::SeedCorrupt, std::string(slug) + ": " + e.what());
      }
      verify_seed(out.back());
    }
    const auto& names = q_class_names();
    auto rank = [&](const Seed& s) -> std::size_t {
      if (s.delta) return static_cast<std::size_t>(*s.delta);
      return 10 + static_cast<std::size_t>(std::find(names.begin(), names.end(), s.name) - names.begin());
    };
    std::stable_sort(out.begin(), out.end(), [&](const Seed& a, const Seed& b) { return rank(a) < rank(b); });
    return out;
  }();
  return seeds;
}

const Seed& builtin_seed(std::string_view slug_or_name) {
  for (const auto& s : builtin_seeds())
    if (s.slug == slug_or_name || s.name == slug_or_name) return s;
  throw Error(ErrorKind::InvalidArgument, "no seed named " + std::string(slug_or_name));
}

SampleStream::SampleStream(std::size_t point_count, long bound, std::uint64_t seed)
    : n_(point_count), rng_(seed), coord_(-bound, bound) {
  if (bound <= 0) throw Error(ErrorKind::InvalidArgument, "coordinate bound must be positive");
}

std::optional<Configuration> SampleStream::next() {
  std::vector<HomPoint> pts;
  pts.reserve(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    long x = coord_(rng_);
    long y = coord_(rng_);
    pts.push_back(HomPoint::affine(Rational(x), Rational(y)));
  }
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = i + 1; j < n_; ++j)
      if (pts[i] == pts[j]) return std::nullopt;
  return Configuration(std::move(pts));
}

std::size_t CensusReport::fingerprints_with_code(const DerivativeCode& sigma) const {
  const auto& s = sigma.sigma;
  std::string prefix = std::to_string(s[0]) + "," + std::to_string(s[1]) + "," + std::to_string(s[2]) + "," +
                       std::to_string(s[3]) + "|";
  std::size_t n = 0;
  for (const auto& [fp, count] : fingerprint_counts)
    if (fp.starts_with(prefix)) ++n;
  return n;
}

std::uint64_t census_chunk_seed(std::uint64_t seed, std::size_t chunk) {
  std::seed_seq seq{std::uint32_t(seed), std::uint32_t(seed >> 32), std::uint32_t(chunk),
                    std::uint32_t(std::uint64_t(chunk) >> 32)};
  std::array<std::uint32_t, 2> out{};
  seq.generate(out.begin(), out.end());
  return (std::uint64_t(out[0]) << 32) | out[1];
}

namespace {

CensusReport census_chunk(std::size_t draws, long bound, std::uint64_t seed, const CalibrationTable& table) {
  CensusReport r;
  SampleStream stream(7, bound, seed);
  for (std::size_t s = 0; s < draws; ++s) {
    ++r.sample_count;
    auto c = stream.next();
    if (!c || !check_typicality(*c).typical) {
      ++r.degenerate_count;
      continue;
    }
    ++r.typical_count;
    ClassFingerprint fp = class_fingerprint(*c);
    ++r.fingerprint_counts[fp.encoding];
    if (const std::string* name = table.find(fp))
      ++r.class_counts[*name];
    else
      ++r.unknown_fingerprints[fp.encoding];
  }
  return r;
}

void merge_into(CensusReport& into, const CensusReport& part) {
  into.sample_count += part.sample_count;
  into.typical_count += part.typical_count;
  into.degenerate_count += part.degenerate_count;
  for (const auto& [k, v] : part.class_counts) into.class_counts[k] += v;
  for (const auto& [k, v] : part.fingerprint_counts) into.fingerprint_counts[k] += v;
  for (const auto& [k, v] : part.unknown_fingerprints) into.unknown_fingerprints[k] += v;
}

}  // namespace

CensusReport census(std::size_t sample_count, long bound, std::uint64_t seed, const CalibrationTable& table,
                    unsigned threads) {
  if (bound <= 0) throw Error(ErrorKind::InvalidArgument, "coordinate bound must be positive");
  const std::size_t chunks = (sample_count + kCensusChunk - 1) / kCensusChunk;
  std::vector<CensusReport> parts(chunks);
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t k = next++; k < chunks; k = next++) {
      std::size_t draws = std::min(kCensusChunk, sample_count - k * kCensusChunk);
      parts[k] = census_chunk(draws, bound, census_chunk_seed(seed, k), table);
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(chunks, 1)));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();

  CensusReport report;
  for (const auto& p : parts) merge_into(report, p);
  for (const auto& name : q_class_names())
    if (!report.class_counts.contains(name)) report.unseen_classes.push_back(name);
  return report;
}

}  // namespace septet
