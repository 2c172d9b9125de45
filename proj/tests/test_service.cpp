#include "quiverlab/service.hpp"

#include <thread>

#include "doctest.h"
#include "httplib.h"

using namespace quiverlab;

namespace {

const std::string kA2 = R"({"n":2,"arrows":[[1,2]]})";
const std::string kA3 = R"({"n":3,"arrows":[[2,1],[3,1]]})";

std::string create(ExplorerService& s, const std::string& quiver) {
  const auto r = s.handle("POST", "/session", quiver);
  REQUIRE(r.status == 201);
  return r.body.at("id").get<std::string>();
}

Response mutate(ExplorerService& s, const std::string& id, int k) {
  return s.handle("POST", "/session/" + id + "/mutate", R"({"vertex":)" + std::to_string(k) + "}");
}

// Everything except the fields that record how the state was reached.
Json position(Json state) {
  state.erase("history");
  state.erase("history_green");
  state.erase("green_move");
  return state;
}

}  // namespace

TEST_CASE("initial state") {
  ExplorerService s;
  const auto r = s.handle("POST", "/session", kA2);
  CHECK(r.status == 201);
  CHECK(r.body.at("green") == Json({1, 2}));
  CHECK(r.body.at("red") == Json::array());
  CHECK(r.body.at("variables")[0].at("text") == "x1");
  CHECK(r.body.at("variables")[1].at("text") == "x2");
  CHECK(r.body.at("arrows") == Json::parse("[[1,2]]"));
  CHECK(r.body.at("mgs_done") == false);
  CHECK(r.body.at("green_move").is_null());
  CHECK(s.handle("POST", "/session", kA3).body.at("mgs_done") == false);
  CHECK(s.handle("POST", "/session", R"({"type":"A3","orientation":"fan"})").body.at("arrows") ==
        Json::parse("[[2,1],[3,1]]"));
}

TEST_CASE("bad requests") {
  ExplorerService s;
  CHECK(s.handle("POST", "/session", R"({"n":1,"arrows":[[1,1]]})").status == 400);
  CHECK(s.handle("POST", "/session", R"({"n":2,"arrows":[[1,2],[2,1]]})").status == 400);
  CHECK(s.handle("POST", "/session", "{nope").status == 400);
  CHECK(s.handle("POST", "/session", R"({"type":"Z9"})").status == 400);
  const auto bad = s.handle("POST", "/session", R"({"n":1,"arrows":[[1,1]]})");
  CHECK(bad.body.at("error").get<std::string>().find("LoopPresent") != std::string::npos);
  CHECK(s.handle("GET", "/session/nope", "").status == 404);
  CHECK(mutate(s, "nope", 1).status == 404);
  CHECK(s.handle("GET", "/elsewhere", "").status == 404);
  const auto id = create(s, kA2);
  CHECK(mutate(s, id, 0).status == 400);
  CHECK(mutate(s, id, 3).status == 400);
  CHECK(s.handle("POST", "/session/" + id + "/mutate", R"({"vertex":"1"})").status == 400);
  CHECK(s.handle("POST", "/session/" + id + "/mutate", "").status == 400);
  CHECK(s.handle("POST", "/session/" + id + "/undo", "").status == 409);
  CHECK(s.handle("GET", "/session/" + id + "/bogus", "").status == 404);
  CHECK(s.handle("GET", "/session/" + id + "/variable/9", "").status == 400);
  CHECK(s.handle("GET", "/session", "").status == 405);
}

TEST_CASE("A2 green sequence 1 2 1") {
  ExplorerService s;
  const auto id = create(s, kA2);
  auto r = mutate(s, id, 1);
  CHECK(r.body.at("green") == Json({2}));
  CHECK(r.body.at("red") == Json({1}));
  CHECK(r.body.at("green_move") == true);
  CHECK(r.body.at("mgs_done") == false);
  mutate(s, id, 2);
  r = mutate(s, id, 1);
  CHECK(r.status == 200);
  CHECK(r.body.at("mgs_done") == true);
  CHECK(r.body.at("green") == Json::array());
  CHECK(r.body.at("history") == Json({1, 2, 1}));
  CHECK(r.body.at("history_green") == Json({true, true, true}));
  CHECK(s.handle("GET", "/session/" + id + "/hint", "").body.at("green") == Json::array());
  // Going back through a red vertex is allowed but not green.
  r = mutate(s, id, 2);
  CHECK(r.body.at("green_move") == false);
}

TEST_CASE("A3 variables, undo and involution") {
  ExplorerService s;
  const auto id = create(s, kA3);
  const auto initial = s.handle("GET", "/session/" + id, "").body;
  CHECK(s.handle("GET", "/session/" + id + "/hint", "").body.at("green") == Json({1, 2, 3}));
  auto r = mutate(s, id, 1);
  CHECK(r.body.at("variables")[0].at("text") == "(x2*x3 + 1)/x1");
  r = mutate(s, id, 1);
  CHECK(position(r.body) == position(initial));
  CHECK(r.body.at("history").size() == 2);
  mutate(s, id, 2);
  r = s.handle("POST", "/session/" + id + "/undo", "");
  CHECK(r.status == 200);
  CHECK(r.body.at("history") == Json({1, 1}));
  CHECK(position(r.body) == position(initial));
  s.handle("POST", "/session/" + id + "/undo", "");
  r = s.handle("POST", "/session/" + id + "/undo", "");
  CHECK(r.body == initial);
  CHECK(s.handle("GET", "/session/" + id + "/characters", "").body.at("M[1,1]") == "(x2*x3 + 1)/x1");
}

TEST_CASE("replay determinism and colors") {
  ExplorerService s;
  const auto id = create(s, R"({"type":"A4","orientation":"alternating"})");
  const std::vector<int> walk{1, 3, 2, 4, 2, 1, 3, 3, 4};
  for (int k : walk) {
    const auto r = mutate(s, id, k);
    REQUIRE(r.status == 200);
    std::vector<int> green, red;
    const auto& c = r.body.at("c_vectors");
    for (std::size_t j = 0; j < c.size(); ++j) {
      bool positive = false;
      for (const auto& x : c[j]) positive = positive || x.get<int>() > 0;
      (positive ? green : red).push_back(static_cast<int>(j + 1));
    }
    CHECK(r.body.at("green") == Json(green));
    CHECK(r.body.at("red") == Json(red));
  }
  const auto replayed = create(s, R"({"type":"A4","orientation":"alternating"})");
  for (int k : walk) mutate(s, replayed, k);
  auto a = s.handle("GET", "/session/" + id, "").body;
  auto b = s.handle("GET", "/session/" + replayed, "").body;
  a.erase("id");
  b.erase("id");
  CHECK(a == b);
}

TEST_CASE("long variables are truncated") {
  ExplorerService s;
  const auto id = create(s, R"({"type":"K2"})");
  Response r;
  for (int i = 0; i < 12; ++i) r = mutate(s, id, 1 + i % 2);
  bool truncated = false;
  for (const auto& v : r.body.at("variables"))
    if (v.at("truncated") == true) {
      truncated = true;
      CHECK(v.at("text").get<std::string>().size() == kVariableDisplayLimit + 3);
      const int k = v.at("index");
      const auto full = s.handle("GET", "/session/" + id + "/variable/" + std::to_string(k), "");
      CHECK(full.body.at("text").get<std::string>().size() > kVariableDisplayLimit);
    }
  CHECK(truncated);
  CHECK(s.handle("GET", "/session/" + id + "/characters", "").status == 400);
}

TEST_CASE("LRU eviction") {
  ExplorerService s(3);
  const auto a = create(s, kA2);
  const auto b = create(s, kA2);
  const auto c = create(s, kA2);
  CHECK(s.handle("GET", "/session/" + a, "").status == 200);  // a is now fresh
  const auto d = create(s, kA2);
  CHECK(s.store().size() == 3);
  CHECK(s.handle("GET", "/session/" + b, "").status == 404);
  for (const auto& id : {a, c, d}) CHECK(s.handle("GET", "/session/" + id, "").status == 200);
}

TEST_CASE("concurrent requests") {
  ExplorerService s;
  const auto shared = create(s, kA3);
  std::vector<std::string> own;
  for (int t = 0; t < 8; ++t) own.push_back(create(s, kA3));
  std::vector<std::thread> threads;
  for (int t = 0; t < 8; ++t)
    threads.emplace_back([&, t] {
      for (int i = 0; i < 50; ++i) {
        mutate(s, own[static_cast<std::size_t>(t)], 1 + (i + t) % 3);
        mutate(s, shared, 1 + t % 3);
      }
    });
  for (auto& th : threads) th.join();
  const auto state = s.handle("GET", "/session/" + shared, "").body;
  CHECK(state.at("history").size() == 400);
  // Replaying the recorded history lands on the same state.
  const auto again = create(s, kA3);
  for (const auto& k : state.at("history")) mutate(s, again, k.get<int>());
  CHECK(position(s.handle("GET", "/session/" + again, "").body).at("variables") == position(state).at("variables"));
}

TEST_CASE("over HTTP") {
  ExplorerService service;
  HttpServer server(service, {"127.0.0.1", 0, ""});
  const int port = server.start();
  httplib::Client client("127.0.0.1", port);
  auto r = client.Post("/session", kA2, "application/json");
  REQUIRE(r);
  CHECK(r->status == 201);
  const auto id = Json::parse(r->body).at("id").get<std::string>();
  for (int k : {1, 2, 1}) {
    r = client.Post("/session/" + id + "/mutate", R"({"vertex":)" + std::to_string(k) + "}", "application/json");
    REQUIRE(r);
    CHECK(r->status == 200);
  }
  CHECK(Json::parse(r->body).at("mgs_done") == true);
  r = client.Get("/session/" + id + "/hint");
  REQUIRE(r);
  CHECK(Json::parse(r->body).at("green") == Json::array());
  r = client.Get("/session/missing");
  REQUIRE(r);
  CHECK(r->status == 404);
  CHECK(Json::parse(r->body).contains("error"));
  r = client.Post("/session", R"({"n":1,"arrows":[[1,1]]})", "application/json");
  REQUIRE(r);
  CHECK(r->status == 400);
  server.stop();
}
