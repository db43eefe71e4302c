#include <gtest/gtest.h>

#include <fstream>
#include <numeric>
#include <random>
#include <sstream>

#include "identities.hpp"
#include "septet/classifier.hpp"
#include "septet/error.hpp"
#include "support.hpp"

using namespace septet;
using namespace septet::testing;

namespace {

struct TableRow {
  const char* sigma;
  std::vector<int> f;
};

// Derivative codes and polygonal spectra of the eleven L-classes.
const std::vector<TableRow> kClassTable{
    {"(7,0,0,0)", {7, 14, 0, 0, 1}}, {"(3,4,0,0)", {7, 13, 1, 1, 0}}, {"(2,2,3,0)", {8, 11, 2, 1, 0}},
    {"(1,2,2,2)", {11, 5, 5, 1, 0}}, {"(1,0,6,0)", {9, 9, 3, 1, 0}}, {"(1,6,0,0)", {7, 12, 3, 0, 0}},
    {"(1,4,2,0)", {8, 10, 4, 0, 0}}, {"(1,2,4,0)", {9, 8, 5, 0, 0}}, {"(0,4,3,0)", {8, 10, 4, 0, 0}},
    {"(0,6,1,0)", {7, 12, 3, 0, 0}}, {"(0,3,3,1)", {10, 6, 6, 0, 0}}};

// Seed decorations as "<from><to><kind initial>", frozen. (1,0,6,0) has a
// single delta-1 vertex, hence no decorated edge.
const std::map<std::string, std::string> kSeedDecorations{
    {"c1060", ""},          {"c3400_1", "60s 56i "}, {"c3400_2", "01e 12i "},
    {"c2230_1", "60s "},    {"c2230_2", "01e "},     {"c2230_3", "06i "},
};

std::vector<int> class_spectrum(const std::string& sigma) {
  for (const auto& row : kClassTable)
    if (sigma == row.sigma) return row.f;
  return {};
}

std::vector<std::size_t> random_perm(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

std::vector<const Seed*> seven_point_seeds() {
  std::vector<const Seed*> out;
  for (const auto& s : builtin_seeds())
    if (s.configuration.size() == 7) out.push_back(&s);
  return out;
}

}  // namespace

TEST(SixClass, Seeds) {
  EXPECT_EQ(six_class(seed("hex6")), 1);
  EXPECT_EQ(six_class(seed("bi6")), 2);
  EXPECT_EQ(six_class(seed("tri6")), 3);
  EXPECT_EQ(six_class(seed("ico6")), 6);
}

TEST(SixClass, RelabelingInvariant) {
  std::mt19937_64 rng(1);
  for (const char* slug : {"hex6", "bi6", "tri6", "ico6"})
    for (int k = 0; k < 10; ++k)
      EXPECT_EQ(six_class(seed(slug).permuted(random_perm(6, rng))), six_class(seed(slug))) << slug;
}

TEST(SixClass, NotSimple) {
  Configuration c = config({{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {5, -1, 1}, {-3, 8, 1}, {9, 4, 1}});
  EXPECT_THROW(six_class(c), Error);
}

TEST(DominanceColoring, Hex6Alternates) {
  const Configuration& h = seed("hex6");
  auto colour = dominance_coloring(h);
  EXPECT_EQ(std::count(colour.begin(), colour.end(), Dominance::Dominant), 3);
  EXPECT_TRUE(alternation_violations(h).empty());
  std::mt19937_64 rng(2);
  auto perm = random_perm(6, rng);
  auto moved = dominance_coloring(h.permuted(perm));
  for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(moved[k], colour[perm[k]]);
}

TEST(DominanceColoring, Preconditions) {
  try {
    dominance_coloring(seed("bi6"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCyclic);
  }
  Configuration circle = config({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {3, 4, 5}, {4, 3, 5}});
  try {
    dominance_coloring(circle);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTypical);
  }
}

TEST(DominanceColoring, AlternatesOnSamples) {
  int cyclic = 0;
  for (const auto& c : typical_samples(400, 6, 3)) {
    if (six_class(c) != 1) continue;
    ++cyclic;
    EXPECT_TRUE(alternation_violations(c).empty());
  }
  EXPECT_GT(cyclic, 50);
}

TEST(DerivativeCode, Seeds) {
  EXPECT_EQ(derivative_code(seed("hept7")).to_string(), "(7,0,0,0)");
  EXPECT_EQ(derivative_code(seed("c0331")).to_string(), "(0,3,3,1)");
  std::mt19937_64 rng(4);
  for (const Seed* s : seven_point_seeds()) {
    DerivativeCode sigma = derivative_code(s->configuration);
    EXPECT_EQ(s->name.substr(0, sigma.to_string().size()), sigma.to_string());
    EXPECT_EQ(derivative_code(s->configuration.permuted(random_perm(7, rng))), sigma);
    auto deltas = deletion_classes(s->configuration);
    for (int delta : {1, 2, 3, 6}) EXPECT_EQ(std::count(deltas.begin(), deltas.end(), delta), sigma.count(delta));
  }
}

TEST(DerivativeCode, KnownCodes) {
  const auto& codes = known_derivative_codes();
  ASSERT_EQ(codes.size(), kClassTable.size());
  for (std::size_t k = 0; k < codes.size(); ++k) {
    EXPECT_EQ(codes[k].to_string(), kClassTable[k].sigma);
    EXPECT_EQ(std::accumulate(codes[k].sigma.begin(), codes[k].sigma.end(), 0), 7);
  }
}

TEST(DominanceMatrix, Hept7) {
  const Configuration& h = seed("hept7");
  DominanceMatrix m = dominance_matrix(h);
  auto d = dominance_indices(m);
  std::array<int, 7> sorted = d;
  std::sort(sorted.begin(), sorted.end());
  EXPECT_EQ(sorted, (std::array<int, 7>{0, 1, 2, 3, 4, 5, 6}));
  // Stored in canonical numeration.
  EXPECT_EQ(d, (std::array<int, 7>{6, 1, 4, 3, 2, 5, 0}));
  for (std::size_t i = 0; i < 7; ++i)
    for (std::size_t j = 0; j < 7; ++j)
      if (j != i && j != (i + 1) % 7) EXPECT_EQ(m.bit(i, j) + m.bit((i + 1) % 7, j), 1);
}

TEST(DominanceMatrix, AgreesWithConicThroughFive) {
  for (const auto& c : typical_samples(20, 7, 5)) {
    DominanceMatrix m = dominance_matrix(c);
    for (std::size_t i = 0; i < 7; ++i)
      for (std::size_t j = 0; j < 7; ++j) {
        if (i == j) continue;
        std::vector<HomPoint> five;
        for (std::size_t k = 0; k < 7; ++k)
          if (k != i && k != j) five.push_back(c[k]);
        Conic q = conic_through5(std::span<const HomPoint, 5>(five.data(), 5));
        EXPECT_EQ(m.outside(i, j), side_of_conic(q, c[i]) == ConicSide::Outside);
      }
  }
}

TEST(DominanceMatrix, NotTypical) {
  Configuration c =
      config({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {3, 4, 5}, {4, 3, 5}, {7, -2, 3}});
  EXPECT_THROW(dominance_matrix(c), Error);
}

TEST(DominanceIndices, Rows) {
  DominanceMatrix m;
  for (std::size_t j = 1; j < 7; ++j) m.set(1, j == 1 ? 0 : j, true);
  auto d = dominance_indices(m);
  EXPECT_EQ(d[0], 0);
  EXPECT_EQ(d[1], 6);
}

TEST(CanonicalNumeration, Hept7) {
  const Configuration& h = seed("hept7");
  auto num = canonical_cyclic_numeration(h);
  EXPECT_EQ(num, (std::array<std::size_t, 7>{0, 1, 2, 3, 4, 5, 6}));
  EXPECT_TRUE(heptagonal_violations(h).empty());
  std::mt19937_64 rng(6);
  auto perm = random_perm(7, rng);
  auto moved = canonical_cyclic_numeration(h.permuted(perm));
  for (std::size_t k = 0; k < 7; ++k) EXPECT_EQ(perm[moved[k]], num[k]);
}

TEST(CanonicalNumeration, NotHeptagonal) {
  try {
    canonical_cyclic_numeration(seed("c1060"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotHeptagonal);
  }
}

TEST(HeptagonalRegion, ExtremalPoints) {
  const Configuration& h = seed("hept7");
  EXPECT_EQ(heptagonal_region(h, 0), 0);  // d = 6
  EXPECT_EQ(heptagonal_region(h, 6), 6);  // d = 0
  std::mt19937_64 rng(7);
  auto perm = random_perm(7, rng);
  Configuration moved = h.permuted(perm);
  for (std::size_t k = 0; k < 7; ++k) EXPECT_EQ(heptagonal_region(moved, k), heptagonal_region(h, perm[k]));
  EXPECT_THROW(heptagonal_region(seed("c1600"), 0), Error);
}

TEST(HeptagonalStructure, CensusSamples) {
  int heptagonal = 0;
  for (const auto& c : typical_samples(600, 7, 8)) {
    if (convexity_type(polygonal_spectrum(c)) != ConvexityType::Heptagonal) continue;
    ++heptagonal;
    auto v = heptagonal_violations(c);
    EXPECT_TRUE(v.empty()) << v.front();
  }
  EXPECT_GT(heptagonal, 5);
}

TEST(PolygonalSpectrum, MatchClassTableOnSeeds) {
  for (const Seed* s : seven_point_seeds()) {
    PolygonalSpectrum f = polygonal_spectrum(s->configuration);
    EXPECT_EQ(f.f, class_spectrum(derivative_code(s->configuration).to_string())) << s->slug;
    EXPECT_EQ(f.euler_sum(), -4);
  }
  EXPECT_EQ(polygonal_spectrum(seed("hept7")).f, (std::vector<int>{7, 14, 0, 0, 1}));
  EXPECT_EQ(polygonal_spectrum(seed("c1222")).f, (std::vector<int>{11, 5, 5, 1, 0}));
}

TEST(PolygonalSpectrum, AgreesWithSignVectorOracle) {
  for (std::size_t n : {5, 6, 7})
    for (const auto& c : typical_samples(30, n, 9 + n)) {
      PolygonalSpectrum f = polygonal_spectrum(c);
      EXPECT_EQ(f.f, spectrum_oracle(c));
      EXPECT_EQ(f.euler_sum(), -4);
    }
}

TEST(ConvexityType, Examples) {
  EXPECT_EQ(convexity_type(PolygonalSpectrum{{7, 14, 0, 0, 1}}), ConvexityType::Heptagonal);
  EXPECT_EQ(convexity_type(PolygonalSpectrum{{7, 13, 1, 1, 0}}), ConvexityType::Hexagonal);
  EXPECT_EQ(convexity_type(PolygonalSpectrum{{7, 12, 3, 0, 0}}), ConvexityType::Pentagonal);
}

TEST(MarkedPoint, Seeds) {
  // The centre of (1,0,6,0) lies inside the hull of the other six.
  const Configuration& c = seed("c1060");
  auto marked = marked_point(c);
  ASSERT_TRUE(marked.has_value());
  EXPECT_EQ(deletion_classes(c)[*marked], 1);
  Configuration rest = c.without(*marked);
  EXPECT_EQ(six_class(rest), 1);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j)
      if (adjacency_graph(rest).has_edge(i, j)) {
        // Marked point and all other points on one side of every hexagon edge.
        std::size_t other = 0;
        while (other == i || other == j) ++other;
        EXPECT_EQ(orient3(rest[i], rest[j], c[*marked]) * orient3(rest[i], rest[j], rest[other]) ==
                      Sign::Positive,
                  true);
      }

  auto deltas = deletion_classes(seed("c1600"));
  auto m2 = marked_point(seed("c1600"));
  ASSERT_TRUE(m2.has_value());
  EXPECT_EQ(deltas[*m2], 1);
  EXPECT_EQ(std::count(deltas.begin(), deltas.end(), 1), 1);

  EXPECT_FALSE(marked_point(seed("c0331")).has_value());
  try {
    marked_point(seed("hept7"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotApplicable);
  }
}

TEST(EdgeDecorations, Hept7) {
  auto dec = edge_decorations(seed("hept7"));
  ASSERT_EQ(dec.size(), 7u);
  auto count = [&](Decoration k) { return std::count_if(dec.begin(), dec.end(), [&](auto& e) { return e.kind == k; }); };
  EXPECT_EQ(count(Decoration::Internal), 3);
  EXPECT_EQ(count(Decoration::External), 3);
  EXPECT_EQ(count(Decoration::Special), 1);
}

TEST(EdgeDecorations, SeedsFrozen) {
  for (const auto& [slug, expected] : kSeedDecorations) {
    const Configuration& c = seed(slug);
    std::ostringstream out;
    for (const auto& e : edge_decorations(c)) {
      out << e.from << e.to << to_string(e.kind)[0] << ' ';
      DominanceMatrix m = dominance_matrix(c);
      if (e.kind == Decoration::Special) {
        EXPECT_FALSE(m.outside(e.from, e.to));
        EXPECT_TRUE(m.outside(e.to, e.from));
      } else {
        EXPECT_EQ(m.outside(e.from, e.to), e.kind == Decoration::External);
        EXPECT_EQ(m.outside(e.to, e.from), e.kind == Decoration::External);
      }
    }
    EXPECT_EQ(out.str(), expected) << slug;
  }
}

TEST(EdgeDecorations, SigmaOneZeroIsEmpty) {
  for (const char* slug : {"c0430", "c0610", "c0331"}) EXPECT_TRUE(edge_decorations(seed(slug)).empty()) << slug;
}

TEST(QClass, Seeds) {
  std::set<std::string> names;
  for (const Seed* s : seven_point_seeds()) {
    QClass q = q_class(s->configuration);
    EXPECT_EQ(q.name, s->name);
    EXPECT_EQ(q.fingerprint, *s->fingerprint);
    names.insert(q.name);
  }
  EXPECT_EQ(names.size(), 14u);
  EXPECT_EQ(std::set<std::string>(q_class_names().begin(), q_class_names().end()), names);
  EXPECT_EQ(q_class(seed("hept7")).name, "(7,0,0,0)");
}

TEST(QClass, PermutationAndProjectiveInvariance) {
  std::mt19937_64 rng(10);
  for (const Seed* s : seven_point_seeds())
    for (int k = 0; k < 3; ++k) {
      Configuration c = s->configuration.permuted(random_perm(7, rng)).transformed(random_matrix(rng, 3));
      EXPECT_EQ(class_fingerprint(c), *s->fingerprint) << s->slug;
    }
}

TEST(QClass, CodeDeterminesClass) {
  int refined = 0;
  for (const auto& code : known_derivative_codes()) refined += code_determines_class(code) ? 0 : 1;
  EXPECT_EQ(refined, 2);
  EXPECT_FALSE(code_determines_class(derivative_code(seed("c3400_1"))));
  EXPECT_FALSE(code_determines_class(derivative_code(seed("c2230_1"))));
}

TEST(QClass, Errors) {
  Configuration c =
      config({{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}, {3, 4, 5}, {4, 3, 5}, {7, -2, 3}});
  try {
    q_class(c);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotTypical);
  }
  try {
    q_class(seed("hept7"), CalibrationTable{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::UnknownFingerprint);
  }
}

TEST(Calibration, ShippedFileMatchesSeeds) {
  std::ifstream in(SEPTET_DATA "/calibration.txt");
  ASSERT_TRUE(in);
  std::stringstream text;
  text << in.rdbuf();
  CalibrationTable file = CalibrationTable::parse(text.str());
  EXPECT_EQ(file, builtin_calibration());
  EXPECT_EQ(CalibrationTable::parse(file.serialize()), file);
  ASSERT_EQ(file.size(), 14u);
  for (const Seed* s : seven_point_seeds()) {
    const std::string* name = file.find(class_fingerprint(s->configuration));
    ASSERT_NE(name, nullptr);
    EXPECT_EQ(*name, s->name);
  }
  // Subscripts follow the lexicographic order of the encodings within a code.
  std::map<std::string, std::vector<std::string>> by_code;
  for (const auto& [fp, name] : file.entries()) by_code[fp.encoding.substr(0, fp.encoding.find('|'))].push_back(name);
  EXPECT_EQ(by_code["3,4,0,0"], (std::vector<std::string>{"(3,4,0,0)_1", "(3,4,0,0)_2"}));
  EXPECT_EQ(by_code["2,2,3,0"], (std::vector<std::string>{"(2,2,3,0)_1", "(2,2,3,0)_2", "(2,2,3,0)_3"}));
  EXPECT_THROW(CalibrationTable::parse("nospace\n"), Error);
}

TEST(Classify, ReportIsConsistent) {
  for (const Seed* s : seven_point_seeds()) {
    ClassReport r = classify(s->configuration);
    ASSERT_TRUE(r.sigma && r.deletion_deltas && r.spectrum && r.class_name && r.indices && r.dominance);
    for (int delta : {1, 2, 3, 6})
      EXPECT_EQ(std::count(r.deletion_deltas->begin(), r.deletion_deltas->end(), delta), r.sigma->count(delta));
    EXPECT_EQ(*r.indices, dominance_indices(*r.dominance));
    EXPECT_EQ(*r.class_name, s->name);
    EXPECT_EQ(r.numeration.has_value(), *r.convexity == ConvexityType::Heptagonal);
  }
  Configuration bad =
      config({{0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {5, -1, 1}, {-3, 8, 1}, {9, 4, 1}, {-6, -5, 1}});
  ClassReport r = classify(bad);
  EXPECT_FALSE(r.typicality.simple);
  EXPECT_FALSE(r.class_name.has_value());
  ClassReport six = classify(seed("hex6"));
  EXPECT_EQ(six.delta, 1);
  EXPECT_TRUE(six.coloring.has_value());
}
