#include "quiverlab/service.hpp"

#include <charconv>
#include <iomanip>
#include <random>
#include <sstream>

namespace quiverlab {

Session::Session(Quiver q)
    : initial_(std::move(q)), seed_(initial_seed(initial_)), framed_(quiverlab::framed(seed_.matrix)) {}

bool Session::mutate(int k) {
  if (k < 1 || k > size()) throw Error(ErrorKind::BadDirection, "vertex " + std::to_string(k));
  const auto greens = green_vertices(framed_);
  const bool green = std::find(greens.begin(), greens.end(), k) != greens.end();
  Seed seed = quiverlab::mutate(seed_, k);
  FramedMatrix f = mutate_framed(framed_, k);
  seed_ = std::move(seed);
  framed_ = std::move(f);
  history_.push_back(k);
  history_green_.push_back(green);
  return green;
}

void Session::undo() {
  if (history_.empty()) throw Error(ErrorKind::InvalidArgument, "nothing to undo");
  auto directions = history_;
  directions.pop_back();
  seed_ = initial_seed(initial_);
  framed_ = quiverlab::framed(seed_.matrix);
  history_.clear();
  history_green_.clear();
  for (int k : directions) mutate(k);
}

const CharacterTable& Session::characters() {
  if (!characters_) characters_ = char_table(TypeAQuiver(initial_));
  return *characters_;
}

Json state_json(const std::string& id, const Session& s) {
  const Quiver current = quiver_from_matrix(s.seed().matrix);
  Json variables = Json::array();
  for (std::size_t i = 0; i < s.seed().cluster.size(); ++i) {
    auto text = render(s.seed().cluster[i]);
    const bool truncated = text.size() > kVariableDisplayLimit;
    if (truncated) text = text.substr(0, kVariableDisplayLimit) + "...";
    variables.push_back({{"index", i + 1}, {"text", text}, {"truncated", truncated}});
  }
  Json c = Json::array();
  for (const auto& v : c_vectors(s.framed())) c.push_back(std::vector<std::int64_t>(v.begin(), v.end()));
  const auto green = green_vertices(s.framed());
  Json state{{"id", id},
             {"n", s.size()},
             {"arrows", to_json(current).at("arrows")},
             {"matrix", matrix_to_json(s.framed())},
             {"variables", variables},
             {"c_vectors", c},
             {"green", green},
             {"red", red_vertices(s.framed())},
             {"mgs_done", green.empty()},
             {"history", s.history()},
             {"history_green", s.history_green()}};
  state["green_move"] = s.history_green().empty() ? Json(nullptr) : Json(s.history_green().back());
  return state;
}

std::string SessionStore::fresh_id() {
  static thread_local std::mt19937_64 rng{std::random_device{}()};
  std::ostringstream out;
  out << std::hex << std::setw(16) << std::setfill('0') << (rng() ^ ++counter_);
  return out.str();
}

std::string SessionStore::create(Quiver q) {
  auto entry = std::make_shared<Entry>(std::move(q));
  std::lock_guard lock(mutex_);
  std::string id;
  do id = fresh_id();
  while (entries_.contains(id));
  recent_.push_front(id);
  entry->position = recent_.begin();
  entries_.emplace(id, std::move(entry));
  while (entries_.size() > capacity_) {
    entries_.erase(recent_.back());
    recent_.pop_back();
  }
  return id;
}

bool SessionStore::with(const std::string& id, const std::function<void(Session&)>& f) {
  std::shared_ptr<Entry> entry;
  {
    std::lock_guard lock(mutex_);
    auto it = entries_.find(id);
    if (it == entries_.end()) return false;
    entry = it->second;
    recent_.splice(recent_.begin(), recent_, entry->position);
  }
  std::lock_guard lock(entry->mutex);
  f(entry->session);
  return true;
}

std::size_t SessionStore::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

namespace {

Response error(int status, const std::string& what) { return {status, {{"error", what}}}; }

std::vector<std::string> split_path(const std::string& path) {
  std::vector<std::string> parts;
  std::string current;
  for (char ch : path.substr(0, path.find('?'))) {
    if (ch == '/') {
      if (!current.empty()) parts.push_back(std::move(current));
      current.clear();
    } else {
      current += ch;
    }
  }
  if (!current.empty()) parts.push_back(std::move(current));
  return parts;
}

int status_for(ErrorKind kind) { return is_internal(kind) ? 500 : 400; }

Quiver quiver_from_request(const Json& body) {
  if (body.is_object() && body.contains("type")) {
    if (!body.at("type").is_string()) throw Error(ErrorKind::InvalidArgument, "type must be a string");
    std::string orientation = "linear";
    if (body.contains("orientation")) {
      if (!body.at("orientation").is_string()) throw Error(ErrorKind::InvalidArgument, "orientation must be a string");
      orientation = body.at("orientation").get<std::string>();
    }
    return named_quiver(body.at("type").get<std::string>(), orientation);
  }
  if (body.is_array()) return quiver_from_matrix(matrix_from_json(body));
  return quiver_from_json(body);
}

}  // namespace

Response ExplorerService::handle(const std::string& method, const std::string& path, const std::string& body) {
  const auto parts = split_path(path);
  if (parts.empty() || parts[0] != "session" || parts.size() > 4) return error(404, "no such endpoint");
  try {
    Json request;
    if (method == "POST" && !body.empty()) {
      try {
        request = Json::parse(body);
      } catch (const Json::parse_error&) {
        return error(400, "request body is not valid JSON");
      }
    }
    if (parts.size() == 1) {
      if (method != "POST") return error(405, "use POST to create a session");
      const std::string id = store_.create(quiver_from_request(request));
      Response r{201, {}};
      store_.with(id, [&](Session& s) { r.body = state_json(id, s); });
      return r;
    }
    const std::string& id = parts[1];
    const std::string action = parts.size() >= 3 ? parts[2] : "";
    Response r{200, {}};
    bool routed = true;
    const bool found = store_.with(id, [&](Session& s) {
      if (action.empty() && parts.size() == 2 && method == "GET") {
        r.body = state_json(id, s);
      } else if (action == "mutate" && parts.size() == 3 && method == "POST") {
        if (!request.is_object() || !request.contains("vertex") || !request.at("vertex").is_number_integer()) {
          r = error(400, "body must be {\"vertex\": k}");
          return;
        }
        const auto k = request.at("vertex").get<std::int64_t>();
        if (k < 1 || k > s.size()) {
          r = error(400, "vertex must be between 1 and " + std::to_string(s.size()));
          return;
        }
        s.mutate(static_cast<int>(k));
        r.body = state_json(id, s);
      } else if (action == "undo" && parts.size() == 3 && method == "POST") {
        if (s.history().empty()) {
          r = error(409, "history is empty");
          return;
        }
        s.undo();
        r.body = state_json(id, s);
      } else if (action == "hint" && parts.size() == 3 && method == "GET") {
        r.body = {{"green", green_vertices(s.framed())}};
      } else if (action == "variable" && parts.size() == 4 && method == "GET") {
        int k = 0;
        const auto& text = parts[3];
        const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), k);
        if (ec != std::errc() || ptr != text.data() + text.size() || k < 1 || k > s.size()) {
          r = error(400, "bad variable index");
          return;
        }
        r.body = {{"index", k}, {"text", render(s.seed().cluster[static_cast<std::size_t>(k - 1)])}};
      } else if (action == "characters" && parts.size() == 3 && method == "GET") {
        r.body = to_json(s.characters());
      } else {
        routed = false;
      }
    });
    if (!found) return error(404, "unknown session");
    if (!routed) return error(404, "no such endpoint");
    return r;
  } catch (const Error& e) {
    return error(status_for(e.kind()), e.what());
  }
}

}  // namespace quiverlab
