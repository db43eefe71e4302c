#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "septet/classifier.hpp"
#include "septet/configuration.hpp"

namespace septet {

struct Seed {
  std::string slug;  // file stem, e.g. "hept7"
  std::string name;  // class id, e.g. "(7,0,0,0)" or "cyclic"
  Configuration configuration;
  std::string provenance;
  std::optional<ClassFingerprint> fingerprint;  // seven-point seeds
  std::optional<int> delta;                     // six-point seeds
};

/// "cyclic", "bicomponent", "tricomponent", "icosahedral" for delta 1, 2, 3, 6.
std::string six_class_name(int delta);

/// Throws Error{SeedCorrupt} unless the seed is typical and reproduces its
/// stored class, delta and fingerprint under `table`.
void verify_seed(const Seed& seed, const CalibrationTable& table = builtin_calibration());

/// The 4 six-point and 14 seven-point seeds compiled into the library, each
/// verified on first use. Six-point seeds come first, by delta; then the
/// seven-point seeds in q_class_names() order. Throws Error{SeedCorrupt}.
const std::vector<Seed>& builtin_seeds();

/// Lookup by slug or class name. Throws Error{InvalidArgument}.
const Seed& builtin_seed(std::string_view slug_or_name);

/// Random configurations of integer affine points (x : y : 1), |x|, |y| <= bound.
class SampleStream {
 public:
  SampleStream(std::size_t point_count, long bound, std::uint64_t seed);
  /// nullopt when two drawn points coincide.
  std::optional<Configuration> next();

 private:
  std::size_t n_;
  std::mt19937_64 rng_;
  std::uniform_int_distribution<long> coord_;
};

struct CensusReport {
  std::size_t sample_count = 0;      // draws
  std::size_t typical_count = 0;
  std::size_t degenerate_count = 0;  // repeated, collinear or coconic draws
  std::map<std::string, std::size_t> class_counts;
  std::map<std::string, std::size_t> fingerprint_counts;
  std::map<std::string, std::size_t> unknown_fingerprints;
  std::vector<std::string> unseen_classes;

  /// Number of distinct fingerprints whose derivative code is `sigma`.
  std::size_t fingerprints_with_code(const DerivativeCode& sigma) const;
  friend bool operator==(const CensusReport&, const CensusReport&) = default;
};

/// Classifies `sample_count` random 7-configurations with coordinates in
/// [-bound, bound]. The result depends only on the arguments, not on `threads`
/// (0 = hardware concurrency).
CensusReport census(std::size_t sample_count, long bound, std::uint64_t seed,
                    const CalibrationTable& table = builtin_calibration(), unsigned threads = 0);

/// Seed of the sample stream used for census chunk `chunk`.
std::uint64_t census_chunk_seed(std::uint64_t seed, std::size_t chunk);
inline constexpr std::size_t kCensusChunk = 64;

}  // namespace septet
