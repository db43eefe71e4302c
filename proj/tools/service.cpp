#include "service.hpp"

#include <cstdlib>

#include <httplib.h>

#include "septet/cremona.hpp"
#include "septet/deformation.hpp"

namespace septet::service {
namespace {

io::Json parse_body(std::string_view body) {
  try {
    return io::Json::parse(body);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

const io::Json& member(const io::Json& doc, const char* key) {
  if (!doc.is_object() || !doc.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing \"") + key + "\"");
  return doc.at(key);
}

template <class T>
T number_or(const io::Json& doc, const char* key, T fallback) {
  if (!doc.contains(key)) return fallback;
  const auto& v = doc.at(key);
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<long long>() >= 0))
    throw Error(ErrorKind::ParseError, std::string("\"") + key + "\" must be a non-negative integer");
  return v.get<T>();
}

template <class F>
Reply guarded(F&& f) {
  try {
    return {200, io::dump(f())};
  } catch (const Error& e) {
    return {status_for(e), io::dump(io::to_json(e))};
  } catch (const nlohmann::json::exception& e) {
    return {400, io::dump(io::to_json(Error(ErrorKind::ParseError, e.what())))};
  }
}

}  // namespace

int default_port() {
  if (const char* env = std::getenv(kPortVariable)) {
    char* end = nullptr;
    long port = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && port > 0 && port < 65536) return static_cast<int>(port);
  }
  return kDefaultPort;
}

io::Json classify_document(const io::ConfigFile& file) {
  io::Json doc = io::to_json(classify(file.configuration));
  if (file.labels) doc["labels"] = *file.labels;
  return doc;
}

io::Json path_document(const Configuration& a, const Configuration& b) {
  IsotopyCertificate cert = is_q_isotopy(LinearPath(a, b));
  io::Json events = io::Json::array();
  for (const auto& e : cert.events) events.push_back(io::to_json(e));
  return {{"certified", cert.certified}, {"events", std::move(events)}};
}

io::Json search_document(const Configuration& a, const Configuration& b, std::size_t budget, std::uint64_t seed) {
  PathSearchResult r = find_q_path(a, b, budget, seed);
  io::Json waypoints = io::Json::array();
  for (const auto& w : r.waypoints) waypoints.push_back(io::to_json(w)["points"]);
  return {{"found", r.found},
          {"segments_checked", r.segments_checked},
          {"relabeling", r.relabeling},
          {"waypoints", std::move(waypoints)}};
}

io::Json cremona_document(const Configuration& c, std::size_t i, std::size_t j, std::size_t k) {
  CremonaBase base(i, j, k);
  Configuration image = cremona(c, base);
  io::Json doc = io::to_json(image);
  doc["base"] = base.to_string();
  ClassReport r = classify(image);
  if (r.class_name) doc["class"] = *r.class_name;
  return doc;
}

io::Json seeds_document() {
  io::Json list = io::Json::array();
  for (const auto& s : builtin_seeds()) {
    io::Json entry{{"slug", s.slug}};
    entry.update(io::to_json(s));
    list.push_back(std::move(entry));
  }
  return {{"seeds", std::move(list)}};
}

int status_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::ParseError:
    case ErrorKind::InvalidArgument:
      return 400;
    case ErrorKind::NotSimple:
    case ErrorKind::NotTypical:
    case ErrorKind::ImageDegenerate:
    case ErrorKind::RepDegenerate:
    case ErrorKind::ClassMismatch:
      return 422;
    default:
      return 500;
  }
}

Reply handle_classify(std::string_view body) {
  return guarded([&] { return classify_document(io::parse_config(parse_body(body))); });
}

Reply handle_path(std::string_view body) {
  return guarded([&] {
    io::Json doc = parse_body(body);
    Configuration a = io::parse_config(member(doc, "a")).configuration;
    Configuration b = io::parse_config(member(doc, "b")).configuration;
    if (doc.value("search", false))
      return search_document(a, b, number_or<std::size_t>(doc, "budget", 200), number_or<std::uint64_t>(doc, "seed", 1));
    return path_document(a, b);
  });
}

Reply handle_cremona(std::string_view body) {
  return guarded([&] {
    io::Json doc = parse_body(body);
    const io::Json& base = member(doc, "base");
    if (!base.is_array() || base.size() != 3) throw Error(ErrorKind::ParseError, "\"base\" must hold 3 labels");
    for (const auto& l : base)
      if (!l.is_number_unsigned()) throw Error(ErrorKind::ParseError, "base labels must be non-negative integers");
    return cremona_document(io::parse_config(doc).configuration, base[0].get<std::size_t>(),
                            base[1].get<std::size_t>(), base[2].get<std::size_t>());
  });
}

Reply handle_seeds() {
  return guarded([] { return seeds_document(); });
}

std::unique_ptr<httplib::Server> make_server() {
  auto server = std::make_unique<httplib::Server>();
  auto send = [](httplib::Response& res, const Reply& reply) {
    res.status = reply.status;
    res.set_content(reply.body, "application/json");
  };
  server->Post("/classify", [send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_classify(req.body));
  });
  server->Post("/path", [send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_path(req.body));
  });
  server->Post("/cremona", [send](const httplib::Request& req, httplib::Response& res) {
    send(res, handle_cremona(req.body));
  });
  server->Get("/seeds", [send](const httplib::Request&, httplib::Response& res) { send(res, handle_seeds()); });
  server->Options(R"(/.*)", [](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS");
    res.set_header("Access-Control-Allow-Headers", "Content-Type");
    res.status = 204;
  });
  server->set_post_routing_handler([](const httplib::Request&, httplib::Response& res) {
    res.set_header("Access-Control-Allow-Origin", "*");
  });
  return server;
}

}  // namespace septet::service
