#include <csignal>
#include <cstdlib>
#include <iostream>

#include "service.hpp"

namespace {
aln::service::HttpServer* g_server = nullptr;
void on_signal(int) {
  if (g_server) g_server->stop();
}
}  // namespace

int main() {
  using namespace aln::service;
  try {
    Service svc(options_from_env());
    int port = 8080;
    if (const char* p = std::getenv("MAMAS_PORT")) port = std::atoi(p);
    HttpServer http(svc);
    int bound = http.bind("0.0.0.0", port);
    if (bound < 0) {
      std::cerr << "error: bind-failed: port " << port << "\n";
      return 1;
    }
    g_server = &http;
    std::signal(SIGINT, on_signal);
    std::signal(SIGTERM, on_signal);
    svc.start_reaper();
    std::cerr << "listening on port " << bound << "\n";
    http.run();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
