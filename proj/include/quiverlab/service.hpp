#pragma once

// Mutation-exploration sessions behind a small JSON API.
//
//   POST /session                    quiver JSON, or {"type":"A3","orientation":"fan"}
//   GET  /session/{id}
//   POST /session/{id}/mutate        {"vertex": k}
//   POST /session/{id}/undo
//   GET  /session/{id}/hint
//   GET  /session/{id}/variable/{k}  full text of one cluster variable
//   GET  /session/{id}/characters    type A only
//
// Errors come back as {"error": text} with 400, 404, 409, or 500 when an
// internal invariant breaks.

#include <cstddef>
#include <functional>
#include <list>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "quiverlab/io.hpp"
#include "quiverlab/mgs.hpp"

namespace quiverlab {

// Seed and framed matrix move together; both are always the fold of
// mutation over history from the initial quiver.
class Session {
 public:
  explicit Session(Quiver q);

  int size() const { return initial_.size(); }
  const Quiver& initial() const { return initial_; }
  const Seed& seed() const { return seed_; }
  const FramedMatrix& framed() const { return framed_; }
  const std::vector<int>& history() const { return history_; }
  const std::vector<bool>& history_green() const { return history_green_; }

  // Returns whether k was green.  Throws BadDirection.
  bool mutate(int k);
  // Throws InvalidArgument on an empty history.
  void undo();

  const CharacterTable& characters();  // throws NotTypeA

 private:
  Quiver initial_;
  Seed seed_;
  FramedMatrix framed_;
  std::vector<int> history_;
  std::vector<bool> history_green_;
  std::optional<CharacterTable> characters_;
};

inline constexpr std::size_t kVariableDisplayLimit = 400;

Json state_json(const std::string& id, const Session& s);

class SessionStore {
 public:
  explicit SessionStore(std::size_t capacity = 256) : capacity_(capacity) {}

  std::string create(Quiver q);
  // Runs f with exclusive access to the session; false if the id is unknown
  // (or was evicted).
  bool with(const std::string& id, const std::function<void(Session&)>& f);
  std::size_t size() const;

 private:
  struct Entry {
    std::mutex mutex;
    Session session;
    std::list<std::string>::iterator position;

    explicit Entry(Quiver q) : session(std::move(q)) {}
  };

  std::string fresh_id();

  std::size_t capacity_;
  mutable std::mutex mutex_;
  std::list<std::string> recent_;  // most recent first
  std::unordered_map<std::string, std::shared_ptr<Entry>> entries_;
  std::uint64_t counter_ = 0;
};

struct Response {
  int status = 200;
  Json body;
};

class ExplorerService {
 public:
  explicit ExplorerService(std::size_t capacity = 256) : store_(capacity) {}

  Response handle(const std::string& method, const std::string& path, const std::string& body);
  SessionStore& store() { return store_; }

 private:
  SessionStore store_;
};

struct ServeOptions {
  std::string host = "127.0.0.1";
  int port = 8080;  // 0 picks a free port
  std::string static_dir;  // served at / when nonempty
};

// httplib front end.  start() binds and serves on a background thread.
class HttpServer {
 public:
  HttpServer(ExplorerService& service, ServeOptions options);
  ~HttpServer();

  // Returns the bound port; throws InvalidArgument if binding fails.
  int start();
  // Blocks until stop().
  void run();
  void stop();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

}  // namespace quiverlab
