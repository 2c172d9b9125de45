#include "quiverlab/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

namespace quiverlab {

namespace {

int as_int(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw Error(ErrorKind::InvalidArgument, std::string(what) + " must be an integer");
  const auto v = j.get<std::int64_t>();
  if (v < std::numeric_limits<int>::min() || v > std::numeric_limits<int>::max())
    throw Error(ErrorKind::InvalidArgument, std::string(what) + " out of range");
  return static_cast<int>(v);
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, "malformed JSON");
  }
}

// Hand-rolled cursor for the bracket literals.
class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_space();
    return pos_ == text_.size();
  }
  bool accept(std::string_view s) {
    skip_space();
    if (text_.substr(pos_, s.size()) != s) return false;
    pos_ += s.size();
    return true;
  }
  void expect(std::string_view s) {
    if (!accept(s)) throw ParseError(pos_, "expected '" + std::string(s) + "'");
  }
  int number() {
    skip_space();
    int v = 0;
    const auto* first = text_.data() + pos_;
    const auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), v);
    if (ec != std::errc() || ptr == first) throw ParseError(pos_, "expected a number");
    pos_ += static_cast<std::size_t>(ptr - first);
    return v;
  }
  std::size_t position() const { return pos_; }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

std::string trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return std::string(s);
}

Quiver arrow_list(std::string_view text, int n = 0) {
  std::string s(text);
  // Accept the unicode arrow too.
  for (std::size_t p; (p = s.find("→")) != std::string::npos;) s.replace(p, 3, "->");
  Cursor c(s);
  std::vector<std::pair<int, int>> arrows;
  int top = 0;
  if (!c.done()) {
    do {
      const int a = c.number();
      c.expect("->");
      const int b = c.number();
      arrows.emplace_back(a, b);
      top = std::max({top, a, b});
    } while (c.accept(","));
  }
  if (!c.done()) throw ParseError(c.position(), "trailing input in arrow list");
  return Quiver::from_arrows(std::max(n, top), arrows);
}

}  // namespace

Quiver quiver_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("arrows"))
    throw Error(ErrorKind::InvalidArgument, "quiver needs \"n\" and \"arrows\"");
  const int n = as_int(j.at("n"), "n");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "n must be positive");
  if (!j.at("arrows").is_array()) throw Error(ErrorKind::InvalidArgument, "arrows must be an array");
  std::vector<std::pair<int, int>> arrows;
  for (const auto& a : j.at("arrows")) {
    if (!a.is_array() || a.size() != 2) throw Error(ErrorKind::InvalidArgument, "arrow must be [source, target]");
    arrows.emplace_back(as_int(a[0], "source"), as_int(a[1], "target"));
  }
  return Quiver::from_arrows(n, arrows);
}

Json to_json(const Quiver& q) {
  Json arrows = Json::array();
  for (const auto& [s, t] : q.arrow_list()) arrows.push_back({s, t});
  return {{"n", q.size()}, {"arrows", arrows}};
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array() || j.empty()) throw Error(ErrorKind::InvalidArgument, "matrix must be a nonempty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array() || j[0].empty()) throw Error(ErrorKind::InvalidArgument, "matrix rows must be nonempty arrays");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  IntMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const auto& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols)
      throw Error(ErrorKind::InvalidArgument, "ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) {
      const auto& x = row[static_cast<std::size_t>(k)];
      if (!x.is_number_integer()) throw Error(ErrorKind::InvalidArgument, "matrix entries must be integers");
      m(i, k) = x.get<std::int64_t>();
    }
  }
  return m;
}

Json matrix_to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(m(i, k));
    out.push_back(row);
  }
  return out;
}

Quiver parse_quiver(std::string_view text) {
  const auto t = trim(text);
  if (t.empty()) throw ParseError(0, "empty quiver");
  if (t.front() == '{') return quiver_from_json(parse_json(t));
  if (t.front() == '[') return quiver_from_matrix(matrix_from_json(parse_json(t)));
  return arrow_list(t);
}

IntMatrix parse_exchange_matrix(std::string_view text) {
  const auto t = trim(text);
  if (!t.empty() && t.front() == '[') {
    IntMatrix b = matrix_from_json(parse_json(t));
    if (!is_skew_symmetric(b)) throw Error(ErrorKind::NotSkewSymmetric, "exchange matrix");
    return b;
  }
  return exchange_matrix(parse_quiver(t));
}

Quiver named_quiver(std::string_view type, std::string_view orientation) {
  const auto t = trim(type);
  int n = 0;
  if (t.size() >= 2 && (t[0] == 'A' || t[0] == 'K')) {
    const auto [ptr, ec] = std::from_chars(t.data() + 1, t.data() + t.size(), n);
    if (ec != std::errc() || ptr != t.data() + t.size() || n < 1) n = 0;
  }
  if (n == 0) throw ParseError(0, "unknown quiver type '" + t + "'");
  if (t[0] == 'K') {
    std::vector<std::pair<int, int>> arrows(static_cast<std::size_t>(n), {2, 1});
    return Quiver::from_arrows(2, arrows);
  }
  const auto o = trim(orientation);
  if (o == "linear") return linear_a(n);
  if (o == "alternating") {
    std::uint32_t mask = 0;
    for (int i = 2; i < n; i += 2) mask |= 1U << (i - 1);  // even i -> i+1
    return oriented_a(n, mask);
  }
  if (o == "fan") {
    std::vector<std::pair<int, int>> arrows;
    if (n >= 2) arrows.emplace_back(2, 1);
    if (n >= 3) arrows.emplace_back(3, 1);
    for (int i = 4; i <= n; ++i) arrows.emplace_back(i, i - 2);
    return Quiver::from_arrows(n, arrows);
  }
  const Quiver q = arrow_list(o, n);
  if (q.size() != n) throw Error(ErrorKind::BadLabel, "arrow list mentions a vertex beyond " + std::to_string(n));
  TypeAQuiver check(q);  // throws NotTypeA
  return q;
}

ModuleDesc parse_module(const TypeAQuiver& q, std::string_view text) {
  Cursor c(text);
  ModuleDesc m;
  if (c.accept("M[")) {
    const int a = c.number();
    c.expect(",");
    const int b = c.number();
    c.expect("]");
    if (a < 1 || b < 1 || a > q.size() || b > q.size())
      throw Error(ErrorKind::BadLabel, "interval label out of range");
    m = ModuleDesc::interval(a, b);
  } else {
    char kind = 0;
    for (char k : {'P', 'I', 'S'})
      if (c.accept(std::string(1, k) + "[")) kind = k;
    if (!kind) throw ParseError(c.position(), "expected M[, P[, I[ or S[");
    const int i = c.number();
    c.expect("]");
    if (i < 1 || i > q.size()) throw Error(ErrorKind::BadLabel, "vertex " + std::to_string(i));
    if (kind == 'P' && c.accept("[")) {
      const auto at = c.position();
      if (c.number() != 1) throw ParseError(at, "only the shift [1] is supported");
      c.expect("]");
      m = ModuleDesc::shifted(i);
    } else {
      m = kind == 'P' ? projective_module(q, i) : kind == 'I' ? injective_module(q, i) : simple_module(q, i);
    }
  }
  if (!c.done()) throw ParseError(c.position(), "trailing input in module literal");
  return m;
}

SiltingPair parse_pair(std::string_view text) {
  Cursor c(text);
  std::vector<ModuleDesc> members;
  c.expect("T=[");
  if (!c.accept("]")) {
    do {
      c.expect("M[");
      const int a = c.number();
      c.expect(",");
      const int b = c.number();
      c.expect("]");
      if (a < 1 || b < 1) throw Error(ErrorKind::BadLabel, "interval label out of range");
      members.push_back(ModuleDesc::interval(a, b));
    } while (c.accept(","));
    c.expect("]");
  }
  c.expect(";");
  c.expect("P=[");
  if (!c.accept("]")) {
    do {
      const int i = c.number();
      if (i < 1) throw Error(ErrorKind::BadLabel, "vertex " + std::to_string(i));
      members.push_back(ModuleDesc::shifted(i));
    } while (c.accept(","));
    c.expect("]");
  }
  if (!c.done()) throw ParseError(c.position(), "trailing input in pair literal");
  return make_pair(members);
}

Json to_json(const CharacterTable& table) {
  Json out = Json::object();
  for (const auto& [m, chi] : table) out[to_literal(m)] = render(chi);
  return out;
}

Json to_json(const ExchangeGraph& g) {
  Json nodes = Json::array();
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    Json cluster = Json::array();
    for (const auto& x : g.nodes[i].seed.cluster) cluster.push_back(render(x));
    nodes.push_back({{"id", i}, {"depth", g.nodes[i].depth}, {"cluster", cluster}});
  }
  Json edges = Json::array();
  for (const auto& e : g.edges) edges.push_back({e.from, e.to, e.direction});
  return {{"nodes", nodes}, {"edges", edges}, {"complete", g.complete}};
}

Json to_json(const SiltingPair& p) {
  Json modules = Json::array();
  for (const auto& m : p.modules) modules.push_back(to_literal(m));
  return {{"literal", to_literal(p)}, {"modules", modules}, {"shifted", p.shifted}};
}

}  // namespace quiverlab
