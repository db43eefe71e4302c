// Regenerates data/seeds/*.json and data/calibration.txt.
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>

#include <CLI11.hpp>

#include "septet/atlas.hpp"
#include "septet/classifier.hpp"
#include "septet/cremona.hpp"
#include "septet/io.hpp"

namespace fs = std::filesystem;
using namespace septet;

namespace {

// Rounded points on a circle of radius r * (1 + bump[k]).
Configuration polygon(std::size_t n, long r, const std::vector<double>& bump) {
  std::vector<HomPoint> pts;
  for (std::size_t k = 0; k < n; ++k) {
    double a = 2 * std::numbers::pi * double(k) / double(n);
    double rk = double(r) * (1 + bump[k]);
    pts.push_back(HomPoint::affine(Rational(std::lround(rk * std::cos(a))), Rational(std::lround(rk * std::sin(a)))));
  }
  return Configuration(std::move(pts));
}

// Moves every point into the affine chart z != 0 of a small integer frame.
Configuration affine_chart(const Configuration& c) {
  for (long a = 0; a <= 4; ++a)
    for (long b = 0; b <= 4; ++b) {
      Matrix3 t{Vec3{1, 0, 0}, Vec3{0, 1, 0}, Vec3{a, b, 1}};
      Configuration image = c.transformed(t);
      bool finite = true;
      for (const auto& p : image.points()) finite = finite && p.is_affine();
      if (finite) return image;
    }
  throw Error(ErrorKind::InvalidArgument, "no small affine chart found");
}

std::string slug_for(const std::string& name) {
  if (name == "(7,0,0,0)") return "hept7";
  std::string slug = "c";
  for (char ch : name)
    if (std::isdigit(static_cast<unsigned char>(ch))) slug += ch;
  if (auto u = name.find('_'); u != std::string::npos) slug.insert(5, "_");
  return slug;
}

Configuration search_six(int delta, std::uint64_t seed, std::string& provenance) {
  SampleStream stream(6, 20, seed);
  for (std::size_t draw = 0;; ++draw) {
    auto c = stream.next();
    if (!c || !check_typicality(*c).typical || six_class(*c) != delta) continue;
    provenance = "random integer sample (bound 20, stream seed " + std::to_string(seed) + ", draw " +
                 std::to_string(draw) + ")";
    return *c;
  }
}

void write(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  out << text;
  if (!out) throw std::runtime_error("cannot write " + path.string());
  std::cout << "wrote " << path.string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Regenerate the septet seed atlas and calibration table"};
  std::string out_dir = "data";
  std::size_t census_samples = 4000;
  app.add_option("--out", out_dir, "data directory");
  app.add_option("--census", census_samples, "samples used to confirm the fingerprint set");
  CLI11_PARSE(app, argc, argv);

  try {
    fs::create_directories(fs::path(out_dir) / "seeds");

    const std::vector<double> hept_bump{0, 0.03, -0.02, 0.05, -0.04, 0.01, 0.02};
    Configuration raw = polygon(7, 1000, hept_bump);
    auto numeration = canonical_cyclic_numeration(raw);
    Configuration hept = raw.permuted(std::vector<std::size_t>(numeration.begin(), numeration.end()));

    // Fingerprints reached from the heptagon, named per derivative code in
    // lexicographic order of their encodings.
    const std::vector<std::string> fig_bases{"012", "056", "234", "046", "126", "136", "236",
                                             "023", "025", "024", "245", "125", "135"};
    std::map<std::string, std::pair<Configuration, std::string>> by_fingerprint;
    by_fingerprint.emplace(class_fingerprint(hept).encoding,
                           std::pair{hept, "regular heptagon of radius 1000 with radial bumps "
                                           "(0,3,-2,5,-4,1,2)%, rounded, relabelled canonically"});
    for (const auto& b : fig_bases) {
      CremonaBase base(b[0] - '0', b[1] - '0', b[2] - '0');
      Configuration img = affine_chart(cremona(hept, base));
      by_fingerprint.emplace(class_fingerprint(img).encoding,
                             std::pair{img, "Cremona image of hept7 at base " + b + ", moved to an affine chart"});
    }
    for (const auto& base : all_cremona_bases()) {
      Configuration img = cremona(hept, base);
      by_fingerprint.emplace(class_fingerprint(img).encoding,
                             std::pair{affine_chart(img), "Cremona image of hept7 at base " + base.to_string()});
    }

    CalibrationTable table;
    std::map<std::string, int> per_code;
    for (const auto& [fp, entry] : by_fingerprint) {
      std::string code = "(" + fp.substr(0, fp.find('|')) + ")";
      std::size_t total = 0;
      for (const auto& [other, e] : by_fingerprint)
        if (other.starts_with(fp.substr(0, fp.find('|') + 1))) ++total;
      std::string name = total > 1 ? code + "_" + std::to_string(++per_code[code]) : code;
      table.add(ClassFingerprint{fp}, name);
    }

    CensusReport report = census(census_samples, 100, 1, table);
    if (!report.unknown_fingerprints.empty()) {
      std::cerr << "census found fingerprints outside the Cremona orbit:\n";
      for (const auto& [fp, n] : report.unknown_fingerprints) std::cerr << "  " << fp << " x" << n << "\n";
      return 1;
    }
    std::cout << "census " << report.typical_count << " typical samples, " << report.fingerprint_counts.size()
              << " fingerprints\n";

    for (const auto& [fp, entry] : by_fingerprint) {
      Seed s{slug_for(*table.find(ClassFingerprint{fp})), *table.find(ClassFingerprint{fp}), entry.first,
             entry.second, ClassFingerprint{fp}, std::nullopt};
      verify_seed(s, table);
      write(fs::path(out_dir) / "seeds" / (s.slug + ".json"), io::dump(io::to_json(s)));
    }

    std::vector<Seed> six;
    six.push_back({"hex6", "cyclic", polygon(6, 1000, {0, 0.03, -0.02, 0.05, -0.04, 0.01}),
                   "regular hexagon of radius 1000 with radial bumps (0,3,-2,5,-4,1)%, rounded", std::nullopt, 1});
    {
      std::string prov;
      Configuration c = search_six(2, 2, prov);
      six.push_back({"bi6", "bicomponent", c, prov, std::nullopt, 2});
      c = search_six(3, 3, prov);
      six.push_back({"tri6", "tricomponent", c, prov, std::nullopt, 3});
    }
    {
      Configuration pent = polygon(5, 1000, {0, 0, 0, 0, 0});
      std::vector<HomPoint> pts(pent.points().begin(), pent.points().end());
      pts.push_back(HomPoint::affine(Rational(0), Rational(0)));
      six.push_back({"ico6", "icosahedral", Configuration(pts),
                     "regular pentagon of radius 1000, rounded, plus its centre", std::nullopt, 6});
    }
    for (const auto& s : six) {
      verify_seed(s, table);
      write(fs::path(out_dir) / "seeds" / (s.slug + ".json"), io::dump(io::to_json(s)));
    }

    write(fs::path(out_dir) / "calibration.txt", table.serialize());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
