// SPDX-License-Identifier: Apache-2.0
#include <algorithm>
#include <cmath>
#include <sstream>

#include "ratiocut/io.hpp"

namespace ratiocut {

namespace {

std::string f2(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

struct Range {
  double lo = 0, hi = 1;
  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  static Range of(const std::vector<PlotSeries>& series, bool x_axis) {
    bool first = true;
    Range r;
    for (const auto& s : series)
      for (const Vec2& p : s.points) {
        const double v = x_axis ? p.x : p.y;
        if (first) {
          r.lo = r.hi = v;
          first = false;
        } else {
          r.include(v);
        }
      }
    if (r.hi - r.lo < 1e-12) {
      r.lo -= 1;
      r.hi += 1;
    }
    return r;
  }
};

void svg_open(std::ostringstream& os, int w, int h) {
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w
     << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h << "\">\n"
     << "<rect width=\"" << w << "\" height=\"" << h << "\" fill=\"#ffffff\"/>\n";
}

std::string polyline(const std::vector<Vec2>& pts, const std::string& color,
                     double width, bool dashed, bool closed) {
  std::ostringstream os;
  os << (closed ? "<polygon points=\"" : "<polyline points=\"");
  for (const Vec2& p : pts) os << f2(p.x) << ',' << f2(p.y) << ' ';
  os << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\""
     << f2(width) << "\"";
  if (dashed) os << " stroke-dasharray=\"7 3 2 3\"";
  os << "/>\n";
  return os.str();
}

}  // namespace

std::string line_plot_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label,
                          const std::vector<PlotSeries>& series) {
  constexpr int W = 560, H = 400;
  constexpr double ml = 70, mr = 20, mt = 36, mb = 48;
  const Range rx = Range::of(series, true);
  const Range ry = Range::of(series, false);
  auto X = [&](double x) { return ml + (x - rx.lo) / (rx.hi - rx.lo) * (W - ml - mr); };
  auto Y = [&](double y) { return H - mb - (y - ry.lo) / (ry.hi - ry.lo) * (H - mt - mb); };

  std::ostringstream os;
  svg_open(os, W, H);
  os << "<text x=\"" << W / 2 << "\" y=\"20\" text-anchor=\"middle\" "
        "font-family=\"sans-serif\" font-size=\"14\">"
     << title << "</text>\n";
  // frame and ticks
  os << "<rect x=\"" << f2(ml) << "\" y=\"" << f2(mt) << "\" width=\""
     << f2(W - ml - mr) << "\" height=\"" << f2(H - mt - mb)
     << "\" fill=\"none\" stroke=\"#444444\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = rx.lo + (rx.hi - rx.lo) * i / 4;
    const double fy = ry.lo + (ry.hi - ry.lo) * i / 4;
    os << "<line x1=\"" << f2(X(fx)) << "\" y1=\"" << f2(H - mb) << "\" x2=\""
       << f2(X(fx)) << "\" y2=\"" << f2(H - mb + 5) << "\" stroke=\"#444444\"/>\n";
    os << "<text x=\"" << f2(X(fx)) << "\" y=\"" << f2(H - mb + 18)
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt(fx) << "</text>\n";
    os << "<line x1=\"" << f2(ml - 5) << "\" y1=\"" << f2(Y(fy)) << "\" x2=\""
       << f2(ml) << "\" y2=\"" << f2(Y(fy)) << "\" stroke=\"#444444\"/>\n";
    os << "<text x=\"" << f2(ml - 8) << "\" y=\"" << f2(Y(fy) + 4)
       << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"11\">"
       << fmt(fy) << "</text>\n";
  }
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 12
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
     << x_label << "</text>\n";
  os << "<text x=\"16\" y=\"" << H / 2
     << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
        "transform=\"rotate(-90 16 "
     << H / 2 << ")\">" << y_label << "</text>\n";

  int legend_y = int(mt) + 14;
  for (const auto& s : series) {
    std::vector<Vec2> px;
    px.reserve(s.points.size());
    for (const Vec2& p : s.points) px.push_back({X(p.x), Y(p.y)});
    os << polyline(px, s.color, 1.8, s.dashed, false);
    os << "<line x1=\"" << f2(ml + 10) << "\" y1=\"" << legend_y << "\" x2=\""
       << f2(ml + 34) << "\" y2=\"" << legend_y << "\" stroke=\"" << s.color
       << "\" stroke-width=\"1.8\""
       << (s.dashed ? " stroke-dasharray=\"7 3 2 3\"" : "") << "/>\n";
    os << "<text x=\"" << f2(ml + 40) << "\" y=\"" << legend_y + 4
       << "\" font-family=\"sans-serif\" font-size=\"11\">" << s.label
       << "</text>\n";
    legend_y += 16;
  }
  os << "</svg>\n";
  return os.str();
}

std::string drawing_svg(const std::vector<DrawPath>& paths,
                        const std::vector<DrawDot>& dots, int width_px,
                        const std::string& caption) {
  double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
  auto grow = [&](Vec2 p) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
    ylo = std::min(ylo, p.y);
    yhi = std::max(yhi, p.y);
  };
  for (const auto& p : paths)
    for (const Vec2& v : p.points) grow(v);
  for (const auto& d : dots) grow(d.at);
  if (!(xhi > xlo)) {
    xlo = 0;
    xhi = 1;
  }
  if (!(yhi > ylo)) {
    ylo = 0;
    yhi = 1;
  }
  const double margin = 14;
  const double cap_h = caption.empty() ? 0 : 22;
  const double scale = (width_px - 2 * margin) / (xhi - xlo);
  const int H = int((yhi - ylo) * scale + 2 * margin + cap_h);
  auto X = [&](double x) { return margin + (x - xlo) * scale; };
  auto Y = [&](double y) { return margin + (yhi - y) * scale; };

  std::ostringstream os;
  svg_open(os, width_px, H);
  for (const auto& p : paths) {
    std::vector<Vec2> px;
    px.reserve(p.points.size());
    for (const Vec2& v : p.points) px.push_back({X(v.x), Y(v.y)});
    os << polyline(px, p.color, p.width, p.dashed, p.closed);
  }
  for (const auto& d : dots)
    os << "<circle cx=\"" << f2(X(d.at.x)) << "\" cy=\"" << f2(Y(d.at.y))
       << "\" r=\"" << f2(d.radius) << "\" fill=\"" << d.color << "\"/>\n";
  if (!caption.empty())
    os << "<text x=\"" << width_px / 2 << "\" y=\"" << H - 8
       << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">"
       << caption << "</text>\n";
  os << "</svg>\n";
  return os.str();
}

std::string filmstrip_svg(const std::vector<std::vector<DrawPath>>& panels,
                          int panel_px) {
  std::ostringstream os;
  const int W = int(panels.size()) * panel_px;
  const int H = panel_px + 24;
  svg_open(os, std::max(W, 1), H);
  for (size_t k = 0; k < panels.size(); ++k) {
    double xlo = 1e300, xhi = -1e300, ylo = 1e300, yhi = -1e300;
    for (const auto& p : panels[k])
      for (const Vec2& v : p.points) {
        xlo = std::min(xlo, v.x);
        xhi = std::max(xhi, v.x);
        ylo = std::min(ylo, v.y);
        yhi = std::max(yhi, v.y);
      }
    if (!(xhi > xlo) || !(yhi > ylo)) continue;
    const double m = 12;
    const double s = std::min((panel_px - 2 * m) / (xhi - xlo),
                              (panel_px - 2 * m) / (yhi - ylo));
    const double ox = k * panel_px + m;
    for (const auto& p : panels[k]) {
      std::vector<Vec2> px;
      px.reserve(p.points.size());
      for (const Vec2& v : p.points)
        px.push_back({ox + (v.x - xlo) * s, m + (yhi - v.y) * s});
      os << polyline(px, p.color, p.width, p.dashed, p.closed);
    }
    os << "<text x=\"" << f2(k * panel_px + panel_px / 2.0) << "\" y=\""
       << H - 8 << "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       << "font-size=\"11\">step " << k << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

std::vector<Vec2> sample_curve(const BoundaryCurve& c, int segments) {
  std::vector<Vec2> pts;
  pts.reserve(segments + 1);
  for (int i = 0; i <= segments; ++i)
    pts.push_back(c.point(c.t0 + (c.t1 - c.t0) * i / segments));
  return pts;
}

}  // namespace ratiocut
