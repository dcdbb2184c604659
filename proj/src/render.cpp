// Copyright 2026 The ruclab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// CSV/JSON/SVG writers for run records. Plots are diagnostic; the CSV tables
// are the source of truth for every acceptance gate, so the SVG is generated
// directly without a plotting dependency.

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "ruclab/experiment.hpp"
#include "ruclab/format.hpp"

namespace ruclab::experiment {

namespace {

std::string svg_coord(double v) {
  char buffer[32];
  std::snprintf(buffer, sizeof(buffer), "%.2f", v);
  return buffer;
}

std::string histogram_svg(const Plot& plot) {
  constexpr int kWidth = 720, kHeight = 420;
  constexpr int kLeft = 60, kRight = 20, kTop = 40, kBottom = 50;
  constexpr int kBins = 48;
  const double plot_w = kWidth - kLeft - kRight;
  const double plot_h = kHeight - kTop - kBottom;

  double lo = plot.samples.empty() ? 0.0 : *std::min_element(plot.samples.begin(), plot.samples.end());
  double hi = plot.samples.empty() ? 1.0 : *std::max_element(plot.samples.begin(), plot.samples.end());
  for (double atom : plot.atoms) {
    lo = std::min(lo, atom);
    hi = std::max(hi, atom);
  }
  if (hi <= lo) hi = lo + 1.0;
  const double pad = 0.05 * (hi - lo);
  lo -= pad;
  hi += pad;

  std::vector<int> counts(kBins, 0);
  for (double x : plot.samples) {
    int bin = static_cast<int>((x - lo) / (hi - lo) * kBins);
    bin = std::clamp(bin, 0, kBins - 1);
    ++counts[bin];
  }
  const int peak = std::max(1, *std::max_element(counts.begin(), counts.end()));

  auto x_of = [&](double v) { return kLeft + (v - lo) / (hi - lo) * plot_w; };
  auto y_of = [&](double count) { return kTop + plot_h * (1.0 - count / peak); };

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(kWidth) +
         "\" height=\"" + std::to_string(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + std::to_string(kLeft) + "\" y=\"24\" font-family=\"monospace\" font-size=\"15\">" +
         plot.name + "</text>\n";

  for (int b = 0; b < kBins; ++b) {
    if (counts[b] == 0) continue;
    const double x0 = kLeft + plot_w * b / kBins;
    const double y0 = y_of(counts[b]);
    svg += "<rect x=\"" + svg_coord(x0) + "\" y=\"" + svg_coord(y0) + "\" width=\"" +
           svg_coord(plot_w / kBins) + "\" height=\"" + svg_coord(kTop + plot_h - y0) +
           "\" fill=\"#4878a8\"/>\n";
  }
  for (double atom : plot.atoms) {
    const double x = x_of(atom);
    svg += "<line x1=\"" + svg_coord(x) + "\" y1=\"" + svg_coord(kTop) + "\" x2=\"" + svg_coord(x) +
           "\" y2=\"" + svg_coord(kTop + plot_h) +
           "\" stroke=\"#c03028\" stroke-width=\"1.5\" stroke-dasharray=\"5,3\"/>\n";
  }

  // axes and x ticks
  svg += "<line x1=\"" + svg_coord(kLeft) + "\" y1=\"" + svg_coord(kTop + plot_h) + "\" x2=\"" +
         svg_coord(kLeft + plot_w) + "\" y2=\"" + svg_coord(kTop + plot_h) + "\" stroke=\"black\"/>\n";
  svg += "<line x1=\"" + svg_coord(kLeft) + "\" y1=\"" + svg_coord(kTop) + "\" x2=\"" + svg_coord(kLeft) +
         "\" y2=\"" + svg_coord(kTop + plot_h) + "\" stroke=\"black\"/>\n";
  for (int tick = 0; tick <= 5; ++tick) {
    const double v = lo + (hi - lo) * tick / 5.0;
    const double x = x_of(v);
    char label[32];
    std::snprintf(label, sizeof(label), "%.4g", v);
    svg += "<line x1=\"" + svg_coord(x) + "\" y1=\"" + svg_coord(kTop + plot_h) + "\" x2=\"" +
           svg_coord(x) + "\" y2=\"" + svg_coord(kTop + plot_h + 5) + "\" stroke=\"black\"/>\n";
    svg += "<text x=\"" + svg_coord(x) + "\" y=\"" + svg_coord(kTop + plot_h + 20) +
           "\" font-family=\"monospace\" font-size=\"11\" text-anchor=\"middle\">" + label +
           "</text>\n";
  }
  svg += "<text x=\"" + svg_coord(kLeft + plot_w / 2) + "\" y=\"" + svg_coord(kHeight - 12) +
         "\" font-family=\"monospace\" font-size=\"12\" text-anchor=\"middle\">" + plot.x_label +
         "</text>\n";
  svg += "<text x=\"" + svg_coord(kLeft - 45) + "\" y=\"" + svg_coord(kTop - 8) +
         "\" font-family=\"monospace\" font-size=\"11\">count (peak " + std::to_string(peak) +
         ")</text>\n";

  double legend_y = kTop + 14;
  for (const auto& [label, value] : plot.annotations) {
    svg += "<text x=\"" + svg_coord(kLeft + plot_w - 230) + "\" y=\"" + svg_coord(legend_y) +
           "\" font-family=\"monospace\" font-size=\"12\">" + label + " = " + format::number(value) +
           "</text>\n";
    legend_y += 16;
  }
  svg += "</svg>\n";
  return svg;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("render_outputs: cannot write " + path.string());
  out << text;
}

}  // namespace

void render_outputs(const RunRecord& record, const std::vector<std::string>& formats,
                    const std::string& out_dir) {
  if (formats.empty() || out_dir.empty()) return;
  const std::filesystem::path dir(out_dir);
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("render_outputs: cannot create " + out_dir + ": " + ec.message());

  bool want_csv = false, want_json = false, want_svg = false;
  for (const auto& f : formats) {
    want_csv |= f == "csv";
    want_json |= f == "json";
    want_svg |= f == "svg";
  }
  if (want_csv) {
    for (const auto& [name, text] : record.tables) write_file(dir / (name + ".csv"), text);
  }
  if (want_json) write_file(dir / "run_record.json", record.to_json().dump(2) + "\n");
  if (want_svg) {
    for (const auto& plot : record.plots) write_file(dir / (plot.name + ".svg"), histogram_svg(plot));
  }
}

}  // namespace ruclab::experiment
