#include "septet/io.hpp"

namespace septet::io {
namespace {

Rational parse_coordinate(const Json& v) {
  if (v.is_string()) return parse_rational(v.get<std::string>());
  if (v.is_number_integer()) return parse_rational(v.dump());
  if (v.is_number_float())
    throw Error(ErrorKind::ParseError, "coordinate " + v.dump() + " is a float; write it as a string");
  throw Error(ErrorKind::ParseError, "coordinate must be a rational string or an integer, got " + v.dump());
}

Json label_list(std::span<const std::size_t> labels) {
  Json out = Json::array();
  for (std::size_t l : labels) out.push_back(l);
  return out;
}

std::string_view dominance_name(Dominance d) { return d == Dominance::Dominant ? "dominant" : "subdominant"; }

Json sigma_json(const DerivativeCode& s) { return Json::array({s.sigma[0], s.sigma[1], s.sigma[2], s.sigma[3]}); }

}  // namespace

ConfigFile parse_config(const Json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::ParseError, "configuration document must be an object");
  auto it = doc.find("points");
  if (it == doc.end() || !it->is_array()) throw Error(ErrorKind::ParseError, "missing \"points\" array");
  std::vector<HomPoint> points;
  for (const auto& p : *it) {
    if (!p.is_array() || p.size() != 3)
      throw Error(ErrorKind::ParseError, "each point must be an array of 3 coordinates, got " + p.dump());
    Rational x = parse_coordinate(p[0]), y = parse_coordinate(p[1]), z = parse_coordinate(p[2]);
    if (x == 0 && y == 0 && z == 0) throw Error(ErrorKind::ParseError, "point (0, 0, 0) is not projective");
    points.emplace_back(x, y, z);
  }
  ConfigFile file{Configuration(std::move(points)), std::nullopt};
  if (auto lt = doc.find("labels"); lt != doc.end()) {
    if (!lt->is_array() || lt->size() != file.configuration.size())
      throw Error(ErrorKind::ParseError, "\"labels\" must be an array with one entry per point");
    std::vector<std::string> labels;
    for (const auto& l : *lt) {
      if (!l.is_string()) throw Error(ErrorKind::ParseError, "labels must be strings");
      labels.push_back(l.get<std::string>());
    }
    file.labels = std::move(labels);
  }
  return file;
}

ConfigFile parse_config_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return parse_config(doc);
}

Json to_json(const Configuration& c) {
  Json points = Json::array();
  for (const auto& p : c.points()) points.push_back({p[0].get_str(), p[1].get_str(), p[2].get_str()});
  return Json{{"points", std::move(points)}};
}

Json to_json(const ConfigFile& file) {
  Json doc = to_json(file.configuration);
  if (file.labels) doc["labels"] = *file.labels;
  return doc;
}

Json to_json(const ClassReport& r) {
  Json doc;
  doc["point_count"] = r.point_count;
  Json triples = Json::array(), sextuples = Json::array();
  for (const auto& t : r.typicality.collinear_triples) triples.push_back(label_list(t));
  for (const auto& s : r.typicality.coconic_sextuples) sextuples.push_back(label_list(s));
  doc["typicality"] = {{"simple", r.typicality.simple},
                       {"typical", r.typicality.typical},
                       {"collinear_triples", std::move(triples)},
                       {"coconic_sextuples", std::move(sextuples)}};
  if (r.graph) {
    Json edges = Json::array();
    for (auto [i, j] : r.graph->edges()) edges.push_back({i, j});
    doc["adjacency"] = {{"edges", std::move(edges)}, {"components", components(*r.graph).count}};
  }
  if (r.spectrum) doc["spectrum"] = r.spectrum->f;
  if (r.convexity) doc["convexity"] = std::string(to_string(*r.convexity));
  if (r.delta) doc["delta"] = *r.delta;
  if (r.coloring) {
    Json colors = Json::array();
    for (Dominance d : *r.coloring) colors.push_back(std::string(dominance_name(d)));
    doc["coloring"] = std::move(colors);
  }
  if (r.deletion_deltas) doc["deletion_deltas"] = *r.deletion_deltas;
  if (r.sigma) doc["sigma"] = sigma_json(*r.sigma);
  if (r.dominance) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < 7; ++i) {
      Json row = Json::array();
      for (std::size_t j = 0; j < 7; ++j) row.push_back(i == j ? Json(nullptr) : Json(r.dominance->bit(i, j)));
      rows.push_back(std::move(row));
    }
    doc["dominance_matrix"] = std::move(rows);
  }
  if (r.indices) doc["dominance_indices"] = *r.indices;
  if (r.numeration) doc["numeration"] = *r.numeration;
  if (r.marked) doc["marked"] = *r.marked;
  if (r.decorations) {
    Json decs = Json::array();
    for (const auto& d : *r.decorations)
      decs.push_back({{"from", d.from}, {"to", d.to}, {"kind", std::string(to_string(d.kind))}});
    doc["decorations"] = std::move(decs);
  }
  if (r.fingerprint) doc["fingerprint"] = r.fingerprint->encoding;
  if (r.class_name) doc["class"] = *r.class_name;
  return doc;
}

Json to_json(const WallEvent& e) {
  return {{"kind", std::string(to_string(e.kind))},
          {"labels", e.labels},
          {"interval", {to_string(e.lo), to_string(e.hi)}},
          {"clustered", e.clustered}};
}

Json to_json(const Seed& s) {
  Json doc;
  doc["name"] = s.name;
  doc["provenance"] = s.provenance;
  doc["points"] = to_json(s.configuration)["points"];
  if (s.fingerprint) doc["fingerprint"] = s.fingerprint->encoding;
  if (s.delta) doc["delta"] = *s.delta;
  return doc;
}

Json to_json(const CensusReport& r) {
  Json doc;
  doc["sample_count"] = r.sample_count;
  doc["typical_count"] = r.typical_count;
  doc["degenerate_count"] = r.degenerate_count;
  doc["class_counts"] = r.class_counts;
  doc["fingerprint_counts"] = r.fingerprint_counts;
  doc["unknown_fingerprints"] = r.unknown_fingerprints;
  doc["unseen_classes"] = r.unseen_classes;
  return doc;
}

Json to_json(const Error& e) {
  return {{"error", {{"kind", std::string(to_string(e.kind()))}, {"detail", e.detail()}}}};
}

Seed parse_seed(std::string slug, std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, "seed " + slug + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string())
    throw Error(ErrorKind::ParseError, "seed " + slug + " has no name");
  Seed seed{std::move(slug), doc["name"].get<std::string>(), parse_config(doc).configuration,
            doc.value("provenance", std::string()), std::nullopt, std::nullopt};
  if (auto it = doc.find("fingerprint"); it != doc.end()) {
    if (!it->is_string()) throw Error(ErrorKind::ParseError, "seed fingerprint must be a string");
    seed.fingerprint = ClassFingerprint{it->get<std::string>()};
  }
  if (auto it = doc.find("delta"); it != doc.end()) {
    if (!it->is_number_integer()) throw Error(ErrorKind::ParseError, "seed delta must be an integer");
    seed.delta = it->get<int>();
  }
  return seed;
}

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

}  // namespace septet::io
