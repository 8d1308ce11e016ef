#ifndef ALN_SERVICE_HPP
#define ALN_SERVICE_HPP

#include <chrono>
#include <condition_variable>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <string>
#include <thread>

#include "aln/concept.hpp"
#include "aln/tbox.hpp"

namespace aln::service {

using Clock = std::chrono::steady_clock;

struct Options {
  std::chrono::milliseconds ttl{300'000};
  std::chrono::milliseconds reaper_period{10'000};
  std::function<Clock::time_point()> now = [] { return Clock::now(); };
};

/// Reads MAMAS_TTL_SECONDS into `opts.ttl` when set.
Options options_from_env(Options opts = {});

struct Response {
  int status = 200;
  std::string body;
};

/// DIG-style concept XML: top, bottom, catom, not, and, all, atleast, atmost.
Concept concept_from_xml_text(const std::string& xml);
/// Element only, no XML declaration.
std::string concept_to_xml_text(const Concept& c);
/// A <tells> request adding `axioms` to `uri`.
std::string tells_xml(const std::string& uri, const std::vector<Axiom>& axioms);

class Service {
 public:
  explicit Service(Options opts = {});
  ~Service();
  Service(const Service&) = delete;
  Service& operator=(const Service&) = delete;

  /// One request body from `client`. Never throws.
  Response handle(const std::string& body, const std::string& client);

  /// Drops every expired non-permanent KB; returns how many went.
  std::size_t reap();
  void start_reaper();
  void stop_reaper();

  std::size_t live_kbs() const;

 private:
  struct Session {
    std::string owner;
    bool shared = true;
    bool permanent = false;
    Clock::time_point last_used;
    std::vector<Axiom> axioms;
    TBox tbox;
    std::shared_mutex lock;
  };

  std::shared_ptr<Session> lookup(const std::string& uri);

  Options opts_;
  mutable std::mutex mu_;
  std::map<std::string, std::shared_ptr<Session>> kbs_;
  std::set<std::string> expired_;
  std::size_t next_id_ = 0;

  std::thread reaper_;
  std::mutex reaper_mu_;
  std::condition_variable reaper_cv_;
  bool stopping_ = false;

  friend struct Handler;
};

/// Request bodies go to POST /. The owner is the peer address unless an
/// X-Mamas-Client header names one.
class HttpServer {
 public:
  explicit HttpServer(Service& service);
  ~HttpServer();
  /// Port 0 picks a free port. Returns the bound port or -1.
  int bind(const std::string& host, int port);
  /// Blocks until stop().
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace aln::service

#endif  // ALN_SERVICE_HPP
