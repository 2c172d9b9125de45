#include "quiverlab/stability.hpp"

#include <array>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

namespace quiverlab {

namespace {

Rational dot(const RatVector& theta, const DimVector& d) {
  Rational s = 0;
  for (Eigen::Index i = 0; i < d.size(); ++i)
    if (d(i) != 0) s += theta(i) * d(i);
  return s;
}

void check_theta(const TypeAQuiver& q, const RatVector& theta) {
  if (theta.size() != q.size()) throw Error(ErrorKind::DimensionMismatch, "theta has wrong length");
}

std::vector<DimVector> proper_submodules(const TypeAQuiver& q, const ModuleDesc& m) {
  std::vector<DimVector> out;
  const Support whole = support(q, m);
  for (const auto& sub : submodules(q, m))
    if (sub.support != 0 && sub.support != whole) out.push_back(sub.dim);
  return out;
}

bool check(const TypeAQuiver& q, const ModuleDesc& m, const RatVector& theta, bool strict) {
  check_theta(q, theta);
  if (m.is_shifted()) throw Error(ErrorKind::InvalidArgument, "stability is defined for modules");
  if (dot(theta, dim(q, m)) != 0) return false;
  for (const auto& l : proper_submodules(q, m)) {
    const Rational v = dot(theta, l);
    if (strict ? v >= 0 : v > 0) return false;
  }
  return true;
}

}  // namespace

bool is_semistable(const TypeAQuiver& q, const ModuleDesc& m, const RatVector& theta) {
  return check(q, m, theta, false);
}

bool is_stable(const TypeAQuiver& q, const ModuleDesc& m, const RatVector& theta) {
  return check(q, m, theta, true);
}

bool Wall::contains(const RatVector& theta) const {
  if (theta.size() != normal.size()) throw Error(ErrorKind::DimensionMismatch, "theta has wrong length");
  if (dot(theta, normal) != 0) return false;
  for (const auto& l : constraints)
    if (dot(theta, l) > 0) return false;
  return true;
}

std::vector<Wall> walls(const TypeAQuiver& q) {
  std::vector<Wall> out;
  for (const auto& m : interval_modules(q)) out.push_back({m, dim(q, m), proper_submodules(q, m)});
  return out;
}

bool Chamber::contains(const RatVector& theta) const {
  const auto c = exact_solve(generators, theta);
  if (!c) throw Error(ErrorKind::Internal, "chamber generators are dependent");
  for (Eigen::Index i = 0; i < c->size(); ++i)
    if ((*c)(i) <= 0) return false;
  return true;
}

std::vector<Chamber> chambers(const TypeAQuiver& q) {
  std::vector<Chamber> out;
  for (auto& p : silting_pairs(q)) {
    IntMatrix g = g_matrix(q, p);
    out.push_back({std::move(p), std::move(g)});
  }
  return out;
}

ChamberQuery chamber_of(const TypeAQuiver& q, const RatVector& theta) {
  check_theta(q, theta);
  WallHit hit;
  for (const auto& m : interval_modules(q))
    if (is_semistable(q, m, theta)) hit.semistable.push_back(m);
  if (!hit.semistable.empty()) return hit;
  std::optional<Chamber> found;
  for (auto& c : chambers(q)) {
    if (!c.contains(theta)) continue;
    if (found) throw Error(ErrorKind::Internal, "chambers overlap");
    found = std::move(c);
  }
  if (!found) throw Error(ErrorKind::NoChamber, "theta is on no wall and in no chamber");
  return *found;
}

SampleReport sample_chambers(const TypeAQuiver& q, int radius) {
  const int n = q.size();
  // Each chamber as an integer matrix K with K theta = (positive) * coefficients.
  std::vector<IntMatrix> scaled;
  for (const auto& c : chambers(q)) {
    const auto inv = exact_inverse(c.generators);
    if (!inv) throw Error(ErrorKind::Internal, "chamber generators are dependent");
    Integer common = 1;
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        common = boost::multiprecision::lcm(common, boost::multiprecision::denominator((*inv)(i, j)));
    IntMatrix k(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        k(i, j) = static_cast<std::int64_t>(boost::multiprecision::numerator((*inv)(i, j) * common));
    scaled.push_back(std::move(k));
  }
  const auto ws = walls(q);

  SampleReport report;
  IntVector theta = IntVector::Constant(n, -radius);
  while (true) {
    if (!theta.isZero()) {
      ++report.directions;
      bool on_wall = false;
      for (const auto& w : ws) {
        if (w.normal.dot(theta) != 0) continue;
        bool ok = true;
        for (const auto& l : w.constraints)
          if (l.dot(theta) > 0) ok = false;
        if (ok) {
          on_wall = true;
          break;
        }
      }
      std::size_t inside = 0;
      for (const auto& k : scaled)
        if (((k * theta).array() > 0).all()) ++inside;
      if (on_wall) {
        ++report.on_walls;
        if (inside != 0) ++report.wall_in_chamber;
      } else {
        ++report.generic;
        if (inside == 0) ++report.uncovered;
        if (inside > 1) ++report.overlaps;
      }
    }
    Eigen::Index i = 0;
    while (i < n && theta(i) == radius) theta(i++) = -radius;
    if (i == n) break;
    ++theta(i);
  }
  return report;
}

ChamberGraph chamber_graph(const TypeAQuiver& q) {
  ChamberGraph g;
  g.chambers = chambers(q);
  const int n = q.size();
  for (std::size_t i = 0; i < g.chambers.size(); ++i)
    for (std::size_t j = i + 1; j < g.chambers.size(); ++j) {
      int shared = 0;
      const auto& a = g.chambers[i].generators;
      const auto& b = g.chambers[j].generators;
      for (Eigen::Index x = 0; x < n; ++x)
        for (Eigen::Index y = 0; y < n; ++y)
          if (a.col(x) == b.col(y)) ++shared;
      if (shared == n - 1) g.edges.emplace_back(i, j);
    }
  return g;
}

// ---------------------------------------------------------------------------
// SVG.

namespace {

using Vec3 = std::array<double, 3>;

double dot3(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross3(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 normalized(const Vec3& a) {
  const double len = std::sqrt(dot3(a, a));
  return {a[0] / len, a[1] / len, a[2] / len};
}

std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else if (c == '&') out += "&amp;";
    else out += c;
  }
  return out;
}

struct Point {
  double x;
  double y;
};

struct Drawing {
  std::vector<std::pair<std::string, std::vector<std::vector<Point>>>> walls;  // label, polylines
  std::vector<std::pair<std::string, Point>> markers;
};

std::string assemble(const Drawing& d, const SvgOptions& options) {
  std::ostringstream out;
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
         "viewBox=\"-300 -300 600 600\" width=\"600\" height=\"600\">\n"
      << "<rect x=\"-300\" y=\"-300\" width=\"600\" height=\"600\" fill=\"white\"/>\n"
      << "<g stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n";
  for (const auto& [label, lines] : d.walls) {
    out << "<path class=\"wall\" data-module=\"" << escape(label) << "\" d=\"";
    bool first_line = true;
    for (const auto& line : lines) {
      if (!first_line) out << ' ';
      first_line = false;
      for (std::size_t i = 0; i < line.size(); ++i)
        out << (i == 0 ? "M" : " L") << num(line[i].x) << ' ' << num(line[i].y);
    }
    out << "\"/>\n";
  }
  out << "</g>\n";
  if (options.labels) {
    out << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
    for (const auto& [label, lines] : d.walls) {
      const auto& longest = *std::max_element(
          lines.begin(), lines.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
      const Point p = longest[longest.size() / 2];
      out << "<text class=\"wall-label\" x=\"" << num(p.x + 4) << "\" y=\"" << num(p.y - 4)
          << "\">D(" << escape(label) << ")</text>\n";
    }
    out << "</g>\n";
  }
  out << "<g fill=\"red\">\n";
  for (const auto& [label, p] : d.markers) {
    out << "<circle class=\"gvector\" data-module=\"" << escape(label) << "\" cx=\"" << num(p.x)
        << "\" cy=\"" << num(p.y) << "\" r=\"4\"/>\n";
    if (options.labels)
      out << "<text class=\"gvector-label\" x=\"" << num(p.x + 6) << "\" y=\"" << num(p.y + 12)
          << "\" font-family=\"sans-serif\" font-size=\"11\">g(" << escape(label) << ")</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

std::vector<ModuleDesc> all_objects(const TypeAQuiver& q) {
  auto objects = interval_modules(q);
  for (int i = 1; i <= q.size(); ++i) objects.push_back(ModuleDesc::shifted(i));
  return objects;
}

Drawing draw_rank2(const TypeAQuiver& q) {
  constexpr double kScale = 100;
  constexpr double kReach = 280;
  Drawing d;
  for (const auto& w : walls(q)) {
    const std::array<std::int64_t, 2> u{-w.normal(1), w.normal(0)};
    bool plus = true, minus = true;
    for (const auto& l : w.constraints) {
      const auto v = u[0] * l(0) + u[1] * l(1);
      if (v > 0) plus = false;
      if (v < 0) minus = false;
    }
    const double len = std::hypot(static_cast<double>(u[0]), static_cast<double>(u[1]));
    const Point tip{kReach * u[0] / len, -kReach * u[1] / len};
    const Point origin{0, 0};
    std::vector<Point> line;
    if (plus && minus)
      line = {{-tip.x, -tip.y}, tip};
    else if (plus)
      line = {origin, tip};
    else if (minus)
      line = {origin, {-tip.x, -tip.y}};
    else
      throw Error(ErrorKind::Internal, "wall of codimension 2 in rank 2");
    d.walls.push_back({to_literal(w.module), {line}});
  }
  for (const auto& m : all_objects(q)) {
    const IntVector g = g_vector(q, m);
    d.markers.push_back({to_literal(m), {kScale * g(0), -kScale * g(1)}});
  }
  return d;
}

Drawing draw_rank3(const TypeAQuiver& q, const SvgOptions& options) {
  constexpr double kScale = 85;
  const double r3 = std::sqrt(3.0);
  const Vec3 pole{1 / r3, 1 / r3, 1 / r3};
  const Vec3 ex = normalized({1, -1, 0});
  const Vec3 ey = normalized({1, 1, -2});
  auto project = [&](const Vec3& x) -> Point {
    const double denom = 1 - dot3(x, pole);
    if (denom < 1e-9) throw Error(ErrorKind::Internal, "point at the projection pole");
    return {kScale * dot3(x, ex) / denom, -kScale * dot3(x, ey) / denom};
  };

  Drawing d;
  for (const auto& w : walls(q)) {
    const Vec3 normal = normalized({static_cast<double>(w.normal(0)), static_cast<double>(w.normal(1)),
                                    static_cast<double>(w.normal(2))});
    const Vec3 helper = std::abs(normal[0]) < 0.9 ? Vec3{1, 0, 0} : Vec3{0, 1, 0};
    const Vec3 a = normalized(cross3(normal, helper));
    const Vec3 b = cross3(normal, a);
    auto at = [&](double phi) -> Vec3 {
      return {std::cos(phi) * a[0] + std::sin(phi) * b[0], std::cos(phi) * a[1] + std::sin(phi) * b[1],
              std::cos(phi) * a[2] + std::sin(phi) * b[2]};
    };
    auto allowed = [&](double phi) {
      const Vec3 x = at(phi);
      for (const auto& l : w.constraints) {
        const Vec3 lv{static_cast<double>(l(0)), static_cast<double>(l(1)), static_cast<double>(l(2))};
        if (dot3(lv, x) > 1e-12) return false;
      }
      return true;
    };
    constexpr int kProbe = 4096;
    const double step = 2 * std::numbers::pi / kProbe;
    std::vector<bool> ok(kProbe);
    for (int k = 0; k < kProbe; ++k) ok[k] = allowed(k * step);
    std::vector<std::pair<double, double>> arcs;
    const int segments = std::max(options.min_arc_segments, 64);
    if (std::all_of(ok.begin(), ok.end(), [](bool v) { return v; })) {
      arcs.emplace_back(0.0, 2 * std::numbers::pi);
    } else {
      // Start scanning just after a disallowed sample so runs do not wrap.
      int start = 0;
      while (ok[start]) ++start;
      for (int offset = 1; offset <= kProbe; ++offset) {
        const int k = (start + offset) % kProbe;
        const int prev = (k + kProbe - 1) % kProbe;
        if (!ok[k] || ok[prev]) continue;
        int len = 0;
        while (ok[(k + len) % kProbe]) ++len;
        // Refine both ends by bisection.
        auto refine = [&](double in, double out) {
          for (int it = 0; it < 40; ++it) {
            const double mid = (in + out) / 2;
            (allowed(mid) ? in : out) = mid;
          }
          return in;
        };
        const double begin = refine((start + offset) * step, (start + offset - 1) * step);
        const double end = refine((start + offset + len - 1) * step, (start + offset + len) * step);
        arcs.emplace_back(begin, end);
      }
    }
    std::vector<std::vector<Point>> lines;
    for (const auto& [begin, end] : arcs) {
      std::vector<Point> line;
      for (int s = 0; s <= segments * 2; ++s) line.push_back(project(at(begin + (end - begin) * s / (segments * 2))));
      lines.push_back(std::move(line));
    }
    d.walls.push_back({to_literal(w.module), std::move(lines)});
  }
  for (const auto& m : all_objects(q)) {
    const IntVector g = g_vector(q, m);
    d.markers.push_back({to_literal(m), project(normalized({static_cast<double>(g(0)), static_cast<double>(g(1)),
                                                            static_cast<double>(g(2))}))});
  }
  return d;
}

}  // namespace

std::string render_svg(const TypeAQuiver& q, const SvgOptions& options) {
  if (q.size() == 2) return assemble(draw_rank2(q), options);
  if (q.size() == 3) return assemble(draw_rank3(q, options), options);
  throw Error(ErrorKind::UnsupportedRank,
              "stability pictures exist for rank 2 and 3, not " + std::to_string(q.size()));
}

}  // namespace quiverlab
