// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <string>
#include <vector>

#include "ratiocut/geometry.hpp"

namespace ratiocut {

// Fixed-format float rendering so emitted CSV/SVG bytes are reproducible.
std::string fmt(double v);

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::string to_string() const;
};

void write_text_file(const std::string& path, const std::string& content);

// ---------------------------------------------------------------------------
// Minimal deterministic SVG emitters (no timestamps, fixed precision).

struct PlotSeries {
  std::string label;
  std::vector<Vec2> points;
  std::string color = "#1f4e9c";
  bool dashed = false;
};

std::string line_plot_svg(const std::string& title, const std::string& x_label,
                          const std::string& y_label,
                          const std::vector<PlotSeries>& series);

struct DrawPath {
  std::vector<Vec2> points;  // already in data coordinates
  std::string color = "#000000";
  bool dashed = false;
  double width = 1.5;
  bool closed = false;
};

struct DrawDot {
  Vec2 at;
  std::string color;
  double radius = 1.6;
};

// Draws data-space paths/dots into a fixed viewport, preserving aspect.
std::string drawing_svg(const std::vector<DrawPath>& paths,
                        const std::vector<DrawDot>& dots, int width_px = 480,
                        const std::string& caption = "");

// Horizontal strip of per-panel drawings (one per iteration step).
std::string filmstrip_svg(const std::vector<std::vector<DrawPath>>& panels,
                          int panel_px = 220);

std::vector<Vec2> sample_curve(const BoundaryCurve& c, int segments = 96);

}  // namespace ratiocut
