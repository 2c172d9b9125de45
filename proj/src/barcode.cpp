#include "quiverlab/barcode.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "quiverlab/errors.hpp"

namespace quiverlab {

IntVector Barcode::dimension() const {
  IntVector d = IntVector::Zero(v.size());
  for (const auto& bar : bars)
    for (int i = bar.a; i <= bar.b; ++i) d(i - 1) += bar.multiplicity;
  return d;
}

Barcode stable_barcode(const IntVector& v) {
  const int n = static_cast<int>(v.size());
  std::int64_t height = 0;
  for (int i = 0; i < n; ++i) {
    if (v(i) < 0) throw Error(ErrorKind::InvalidArgument, "negative dimension entry");
    height = std::max(height, v(i));
  }
  std::map<std::pair<int, int>, Bar> found;
  for (std::int64_t h = height; h >= 1; --h) {
    for (int i = 0; i < n;) {
      if (v(i) < h) {
        ++i;
        continue;
      }
      int j = i;
      while (j + 1 < n && v(j + 1) >= h) ++j;
      auto [it, fresh] = found.try_emplace({i + 1, j + 1}, Bar{i + 1, j + 1, 0, static_cast<int>(h)});
      ++it->second.multiplicity;
      i = j + 1;
    }
  }
  Barcode code{v, {}};
  for (const auto& [key, bar] : found) code.bars.push_back(bar);
  return code;
}

bool interval_ext_nonzero(int c, int d, int a, int b) {
  if (c < 1 || c > d || a < 1 || a > b)
    throw Error(ErrorKind::InvalidArgument, "invalid interval");
  return (a < c && c <= b && b < d) || b + 1 == c;
}

bool is_rigid(const std::vector<Bar>& bars) {
  for (const auto& x : bars)
    for (const auto& y : bars)
      if (interval_ext_nonzero(x.a, x.b, y.a, y.b)) return false;
  return true;
}

std::string render_text(const Barcode& code) {
  if (code.bars.empty()) return "0";
  auto bars = code.bars;
  std::stable_sort(bars.begin(), bars.end(), [](const Bar& x, const Bar& y) {
    return x.top != y.top ? x.top > y.top : x.a < y.a;
  });
  std::ostringstream out;
  for (std::size_t i = 0; i < bars.size(); ++i) {
    if (i) out << " + ";
    if (bars[i].multiplicity > 1) out << bars[i].multiplicity << '*';
    out << "M[" << bars[i].a << ',' << bars[i].b << ']';
  }
  return out.str();
}

std::string render_svg(const Barcode& code) {
  const int n = static_cast<int>(code.v.size());
  std::int64_t height = 0;
  for (int i = 0; i < n; ++i) height = std::max(height, code.v(i));
  const int step = 40;
  const int width = step * (n + 1);
  const int total = static_cast<int>(step * (height + 1));
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"0 0 " << width << ' ' << total + 20
      << "\">\n";
  out << "  <line class=\"axis\" x1=\"0\" y1=\"" << total << "\" x2=\"" << width << "\" y2=\"" << total
      << "\" stroke=\"black\"/>\n";
  for (int i = 1; i <= n; ++i)
    out << "  <text class=\"tick\" x=\"" << i * step << "\" y=\"" << total + 16
        << "\" text-anchor=\"middle\">" << i << "</text>\n";
  // Redo the level sweep so each bar sits at its own height.
  for (std::int64_t h = 1; h <= height; ++h) {
    const auto y = total - h * step;
    for (int i = 0; i < n;) {
      if (code.v(i) < h) {
        ++i;
        continue;
      }
      int j = i;
      while (j + 1 < n && code.v(j + 1) >= h) ++j;
      out << "  <line class=\"bar\" data-interval=\"M[" << i + 1 << ',' << j + 1 << "]\" x1=\""
          << (i + 1) * step << "\" y1=\"" << y << "\" x2=\"" << (j + 1) * step << "\" y2=\"" << y
          << "\" stroke=\"black\" stroke-width=\"6\" stroke-linecap=\"round\"/>\n";
      i = j + 1;
    }
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace quiverlab
