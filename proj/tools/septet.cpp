#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <httplib.h>

#include "septet/atlas.hpp"
#include "septet/classifier.hpp"
#include "septet/io.hpp"
#include "service.hpp"

using namespace septet;

namespace {

// Exit codes.
constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kParse = 2;
constexpr int kNotTypical = 3;
constexpr int kFailure = 4;
constexpr int kNotCertified = 5;

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
      return kParse;
    case ErrorKind::NotSimple:
    case ErrorKind::NotTypical:
      return kNotTypical;
    default:
      return kFailure;
  }
}

io::ConfigFile read_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::stringstream text;
  text << in.rdbuf();
  return io::parse_config_text(text.str());
}

void print_violations(const TypicalityReport& t) {
  for (const auto& tr : t.collinear_triples)
    std::cout << "collinear triple: " << tr[0] << " " << tr[1] << " " << tr[2] << "\n";
  for (const auto& s : t.coconic_sextuples) {
    std::cout << "coconic sextuple:";
    for (auto l : s) std::cout << " " << l;
    std::cout << "\n";
  }
}

int run_classify(const std::string& file, bool json) {
  io::ConfigFile cfg = read_config(file);
  io::Json doc = service::classify_document(cfg);
  ClassReport r = classify(cfg.configuration);
  if (json) {
    std::cout << io::dump(doc);
  } else if (!r.typicality.typical) {
    std::cout << (r.typicality.simple ? "not typical" : "not simple") << "\n";
    print_violations(r.typicality);
  } else if (r.point_count == 7) {
    std::cout << (r.class_name ? *r.class_name : "unknown class") << "\n";
    std::cout << "fingerprint " << r.fingerprint->encoding << "\n";
  } else if (r.point_count == 6) {
    std::cout << six_class_name(*r.delta) << " (delta " << *r.delta << ")\n";
  } else {
    std::cout << r.point_count << "-point configuration, spectrum " << r.spectrum->to_string() << "\n";
  }
  if (!r.typicality.typical) return kNotTypical;
  if (r.point_count == 7 && !r.class_name) {
    std::cerr << "UnknownFingerprint: " << r.fingerprint->encoding << "\n";
    return kFailure;
  }
  return kOk;
}

int run_path(const std::string& fa, const std::string& fb, bool search, std::size_t budget, std::uint64_t seed,
             bool json) {
  Configuration a = read_config(fa).configuration;
  Configuration b = read_config(fb).configuration;
  if (search) {
    io::Json doc = service::search_document(a, b, budget, seed);
    if (json) {
      std::cout << io::dump(doc);
    } else if (doc["found"].get<bool>()) {
      std::cout << "Q-path found: " << doc["waypoints"].size() - 1 << " certified segments ("
                << doc["segments_checked"].get<std::size_t>() << " segments checked)\n";
    } else {
      std::cout << "no Q-path found within budget (" << doc["segments_checked"].get<std::size_t>()
                << " segments checked); this is not a proof that none exists\n";
    }
    return doc["found"].get<bool>() ? kOk : kNotCertified;
  }
  io::Json doc = service::path_document(a, b);
  bool certified = doc["certified"].get<bool>();
  if (json) {
    std::cout << io::dump(doc);
  } else if (certified) {
    std::cout << "Q-isotopy certified (0 events)\n";
  } else {
    std::cout << doc["events"].size() << " wall events\n";
    for (const auto& e : doc["events"]) {
      std::cout << e["kind"].get<std::string>() << " {";
      bool first = true;
      for (const auto& l : e["labels"]) {
        std::cout << (first ? "" : ",") << l.get<std::size_t>();
        first = false;
      }
      std::cout << "} t in [" << e["interval"][0].get<std::string>() << ", " << e["interval"][1].get<std::string>()
                << "]" << (e["clustered"].get<bool>() ? " clustered" : "") << "\n";
    }
  }
  return certified ? kOk : kNotCertified;
}

int run_cremona(const std::string& file, std::size_t i, std::size_t j, std::size_t k, const std::string& out) {
  io::Json doc = service::cremona_document(read_config(file).configuration, i, j, k);
  io::Json image{{"points", doc["points"]}};
  if (out.empty()) {
    std::cout << io::dump(image);
  } else {
    std::ofstream f(out, std::ios::binary);
    f << io::dump(image);
    if (!f) throw Error(ErrorKind::InvalidArgument, "cannot write " + out);
    std::cerr << "image class " << doc.value("class", std::string("unknown")) << "\n";
  }
  return kOk;
}

int run_census(std::size_t samples, long bound, std::uint64_t seed, unsigned threads, bool json) {
  CensusReport r = census(samples, bound, seed, builtin_calibration(), threads);
  if (json) {
    std::cout << io::dump(io::to_json(r));
    return r.unknown_fingerprints.empty() ? kOk : kFailure;
  }
  std::cout << "samples " << r.sample_count << ", typical " << r.typical_count << ", degenerate "
            << r.degenerate_count << "\n";
  for (const auto& name : q_class_names()) {
    auto it = r.class_counts.find(name);
    std::cout << "  " << name << " " << (it == r.class_counts.end() ? 0 : it->second) << "\n";
  }
  std::cout << "fingerprints " << r.fingerprint_counts.size() << "\n";
  if (!r.unseen_classes.empty()) {
    std::cout << "unseen:";
    for (const auto& n : r.unseen_classes) std::cout << " " << n;
    std::cout << "\n";
  }
  for (const auto& [fp, n] : r.unknown_fingerprints) std::cout << "unknown fingerprint " << fp << " x" << n << "\n";
  return r.unknown_fingerprints.empty() ? kOk : kFailure;
}

int run_serve(const std::string& host, int port) {
  auto server = service::make_server();
  std::cerr << "septet service on http://" << host << ":" << port << "\n";
  if (!server->listen(host, port)) {
    std::cerr << "cannot listen on " << host << ":" << port << "\n";
    return kUsage;
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact classification of 7-point configurations in the real projective plane"};
  app.require_subcommand(1);

  std::string file, file_b, out, seed_name, host = "127.0.0.1";
  bool json = false, search = false;
  std::size_t budget = 200, samples = 10000, base_i = 0, base_j = 0, base_k = 0;
  std::uint64_t seed = 1;
  long bound = 100;
  unsigned threads = 0;
  int port = service::default_port();

  auto* classify_cmd = app.add_subcommand("classify", "Classify a configuration file");
  classify_cmd->add_option("file", file, "configuration JSON")->required();
  classify_cmd->add_flag("--json", json, "emit the full report as JSON");

  auto* path_cmd = app.add_subcommand("path", "Certify the linear path between two configurations");
  path_cmd->add_option("a", file, "start configuration")->required();
  path_cmd->add_option("b", file_b, "end configuration")->required();
  path_cmd->add_flag("--search", search, "search for a piecewise-linear Q-path instead");
  path_cmd->add_option("--budget", budget, "segment certifications allowed in --search");
  path_cmd->add_option("--seed", seed, "random seed for --search");
  path_cmd->add_flag("--json", json, "emit JSON");

  auto* cremona_cmd = app.add_subcommand("cremona", "Quadratic Cremona transformation based at i j k");
  cremona_cmd->add_option("file", file, "configuration JSON")->required();
  cremona_cmd->add_option("i", base_i)->required();
  cremona_cmd->add_option("j", base_j)->required();
  cremona_cmd->add_option("k", base_k)->required();
  cremona_cmd->add_option("-o,--output", out, "write the image here instead of stdout");

  auto* seeds_cmd = app.add_subcommand("seeds", "List or emit the built-in seeds");
  seeds_cmd->require_subcommand(1);
  auto* seeds_list = seeds_cmd->add_subcommand("list", "List seed names");
  auto* seeds_emit = seeds_cmd->add_subcommand("emit", "Print one seed as a configuration file");
  seeds_emit->add_option("name", seed_name, "slug or class name")->required();

  auto* census_cmd = app.add_subcommand("census", "Classify random integer configurations");
  census_cmd->add_option("--samples", samples, "number of draws");
  census_cmd->add_option("--bound", bound, "coordinate bound");
  census_cmd->add_option("--seed", seed, "random seed");
  census_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  census_cmd->add_flag("--json", json, "emit JSON");

  auto* serve_cmd = app.add_subcommand("serve", "Run the local JSON service");
  serve_cmd->add_option("--port", port, "port (default $SEPTET_PORT or 8765)");
  serve_cmd->add_option("--host", host, "bind address");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (*classify_cmd) return run_classify(file, json);
    if (*path_cmd) return run_path(file, file_b, search, budget, seed, json);
    if (*cremona_cmd) return run_cremona(file, base_i, base_j, base_k, out);
    if (*seeds_list) {
      for (const auto& s : builtin_seeds()) std::cout << s.slug << "\t" << s.name << "\n";
      return kOk;
    }
    if (*seeds_emit) {
      std::cout << io::dump(io::to_json(builtin_seed(seed_name)));
      return kOk;
    }
    if (*census_cmd) return run_census(samples, bound, seed, threads, json);
    if (*serve_cmd) return run_serve(host, port);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
