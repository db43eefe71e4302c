#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>

#include "septet/io.hpp"

namespace httplib {
class Server;
}

namespace septet::service {

inline constexpr int kDefaultPort = 8765;
inline constexpr const char* kPortVariable = "SEPTET_PORT";

/// SEPTET_PORT if set to a valid port, else kDefaultPort.
int default_port();

struct Reply {
  int status = 200;
  std::string body;
};

/// Documents shared by the CLI and the HTTP handlers.
io::Json classify_document(const io::ConfigFile& file);
io::Json path_document(const Configuration& a, const Configuration& b);
io::Json search_document(const Configuration& a, const Configuration& b, std::size_t budget, std::uint64_t seed);
io::Json cremona_document(const Configuration& c, std::size_t i, std::size_t j, std::size_t k);
io::Json seeds_document();

/// HTTP status for a library error.
int status_for(const Error& e);

// Request handlers: body text in, JSON reply out.
Reply handle_classify(std::string_view body);
Reply handle_path(std::string_view body);
Reply handle_cremona(std::string_view body);
Reply handle_seeds();

/// Server with all routes installed.
std::unique_ptr<httplib::Server> make_server();

}  // namespace septet::service
