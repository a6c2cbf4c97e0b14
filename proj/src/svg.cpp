// Copyright 2026 The gravrotor Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gravrotor/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string_view>
#include <vector>

namespace gravrotor {

namespace {

constexpr double kWidth = 760.0;
constexpr double kPlotLeft = 90.0;
constexpr double kPlotWidth = 460.0;

// Maps a data interval onto a pixel interval.
struct LinearMap {
  double d0, d1, p0, p1;
  double operator()(double v) const { return p0 + (v - d0) / (d1 - d0) * (p1 - p0); }
};

std::string header(double width, double height) {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{:.0f}\" height=\"{:.0f}\" viewBox=\"0 0 {:.0f} {:.0f}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      width, height, width, height);
}

// 1-2-5 tick spacing covering [lo, hi].
std::vector<double> nice_ticks(double lo, double hi) {
  std::vector<double> ticks;
  const double span = hi - lo;
  if (!(span > 0.0)) return {lo};
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (span / step <= 6.0) break;
  }
  for (double v = std::ceil(lo / step) * step; v <= hi + 1e-9 * span; v += step) {
    ticks.push_back(std::abs(v) < 1e-12 * span ? 0.0 : v);
  }
  return ticks;
}

std::string frame(double x, double y, double w, double h) {
  return fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" fill=\"none\" "
                     "stroke=\"black\"/>\n",
                     x, y, w, h);
}

std::string decade_label(int k) {
  return fmt::format("10<tspan dy=\"-6\" font-size=\"9\">{}</tspan>", k);
}

struct Layer {
  std::string_view id;
  std::string_view fill;
  std::string_view stroke;
  const Mask* mask;
};

}  // namespace

std::string render_regions_svg(const FeasibilityGrid& grid) {
  const double height = 560.0;
  const double top = 40.0;
  const double plot_h = 440.0;
  std::string svg = header(kWidth, height);

  svg +=
      "<defs>\n"
      "<pattern id=\"pat-phase\" width=\"6\" height=\"6\" patternUnits=\"userSpaceOnUse\">"
      "<circle cx=\"3\" cy=\"3\" r=\"1.1\" fill=\"#e08a00\"/></pattern>\n"
      "<pattern id=\"pat-centrifugal\" width=\"10\" height=\"10\" patternUnits=\"userSpaceOnUse\">"
      "<circle cx=\"5\" cy=\"5\" r=\"2.6\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"0.8\"/></pattern>\n"
      "<pattern id=\"pat-spinup\" width=\"8\" height=\"8\" patternUnits=\"userSpaceOnUse\" "
      "patternTransform=\"rotate(45)\"><line x1=\"0\" y1=\"0\" x2=\"0\" y2=\"8\" stroke=\"#2a62c9\" "
      "stroke-width=\"1.6\"/></pattern>\n"
      "</defs>\n";

  const std::size_t nr = grid.radii.size();
  const std::size_t nw = grid.omegas.size();
  if (nr < 2 || nw < 2) {
    svg += "<text x=\"20\" y=\"30\">empty grid</text>\n</svg>\n";
    return svg;
  }

  // Cells are centred on log-spaced nodes; extend half a step past the ends.
  const double lr0 = std::log10(grid.radii.front());
  const double lr1 = std::log10(grid.radii.back());
  const double lw0 = std::log10(grid.omegas.front());
  const double lw1 = std::log10(grid.omegas.back());
  const double hr = 0.5 * (lr1 - lr0) / static_cast<double>(nr - 1);
  const double hw = 0.5 * (lw1 - lw0) / static_cast<double>(nw - 1);
  const LinearMap xmap{lr0 - hr, lr1 + hr, kPlotLeft, kPlotLeft + kPlotWidth};
  const LinearMap ymap{lw0 - hw, lw1 + hw, top + plot_h, top};
  const auto cell_x = [&](std::size_t i) { return xmap(lr0 + 2.0 * hr * static_cast<double>(i) - hr); };
  const auto cell_y = [&](std::size_t j) { return ymap(lw0 + 2.0 * hw * static_cast<double>(j) - hw); };

  const std::vector<Layer> layers = {
      {"phase", "url(#pat-phase)", "none", &grid.phase_ok},
      {"centrifugal", "url(#pat-centrifugal)", "none", &grid.centrifugal_ok},
      {"spinup", "url(#pat-spinup)", "none", &grid.spin_up_ok},
      {"overlap", "#222222", "#000000", &grid.overlap},
  };
  for (const auto& layer : layers) {
    const bool is_overlap = layer.id == "overlap";
    svg += fmt::format("<g id=\"{}\" fill=\"{}\"{}>\n", layer.id, layer.fill,
                       is_overlap ? " fill-opacity=\"0.45\" stroke=\"#000000\" stroke-width=\"0.6\"" : "");
    for (std::size_t i = 0; i < nr; ++i) {
      // merge runs along omega within one radius column
      std::size_t j = 0;
      while (j < nw) {
        if (!(*layer.mask)(i, j)) {
          ++j;
          continue;
        }
        std::size_t end = j;
        while (end < nw && (*layer.mask)(i, end)) ++end;
        const double x0 = cell_x(i);
        const double x1 = cell_x(i + 1);
        const double y_hi = cell_y(end);
        const double y_lo = cell_y(j);
        svg += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" data-cells=\"{}\"/>\n",
                           x0, y_hi, x1 - x0, y_lo - y_hi, end - j);
        j = end;
      }
    }
    svg += "</g>\n";
  }

  svg += frame(kPlotLeft, top, kPlotWidth, plot_h);

  // decade ticks
  for (int k = static_cast<int>(std::ceil(lr0 - hr - 1e-12)); k <= static_cast<int>(std::floor(lr1 + hr + 1e-12)); ++k) {
    const double x = xmap(k);
    svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n", x,
                       top + plot_h, x, top + plot_h + 5);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{}</text>\n", x, top + plot_h + 20,
                       decade_label(k));
  }
  for (int k = static_cast<int>(std::ceil(lw0 - hw - 1e-12)); k <= static_cast<int>(std::floor(lw1 + hw + 1e-12)); ++k) {
    const double y = ymap(k);
    svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n",
                       kPlotLeft - 5, y, kPlotLeft, y);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{}</text>\n", kPlotLeft - 8, y + 4,
                       decade_label(k));
  }
  svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">R (m)</text>\n",
                     kPlotLeft + kPlotWidth / 2, top + plot_h + 42);
  svg += fmt::format(
      "<text x=\"20\" y=\"{:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {:.2f})\">"
      "ω<tspan dy=\"4\" font-size=\"9\">max</tspan><tspan dy=\"-4\"> (rad s</tspan>"
      "<tspan dy=\"-6\" font-size=\"9\">-1</tspan><tspan dy=\"6\">)</tspan></text>\n",
      top + plot_h / 2, top + plot_h / 2);
  svg += fmt::format("<text x=\"{:.2f}\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">{} rotors</text>\n",
                     kPlotLeft + kPlotWidth / 2, to_string(grid.spec.shape));

  // legend
  const double lx = kPlotLeft + kPlotWidth + 20;
  double ly = top + 10;
  const auto legend_entry = [&](std::string_view fill, std::string_view label, bool solid) {
    svg += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"18\" height=\"14\" fill=\"{}\"{} stroke=\"#555555\"/>\n",
                       lx, ly, fill, solid ? " fill-opacity=\"0.45\"" : "");
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\">{}</text>\n", lx + 26, ly + 11, label);
    ly += 24;
  };
  legend_entry("url(#pat-phase)", "phase φ &gt; φ_min", false);
  legend_entry("url(#pat-centrifugal)", "ωR &lt; v_s", false);
  legend_entry("url(#pat-spinup)", "spin-up reachable", false);
  legend_entry("#222222", "overlap", true);
  const bool any_overlap = std::any_of(grid.overlap.data().begin(), grid.overlap.data().end(),
                                       [](std::uint8_t v) { return v != 0; });
  if (!any_overlap) svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" fill=\"#c0392b\">no overlap</text>\n", lx, ly + 6);

  svg += "</svg>\n";
  return svg;
}

std::string render_trajectory_svg(const SpinUpTrajectory& traj) {
  const double height = 620.0;
  const double panel_h = 220.0;
  const double tops[2] = {40.0, 340.0};
  std::string svg = header(kWidth, height);

  const auto& s = traj.samples;
  const double t_end = s.empty() ? 1.0 : std::max(s.back().t, 1e-300);
  double theta_max = 0.0;
  double omega_max = 0.0;
  for (const auto& x : s) {
    theta_max = std::max(theta_max, x.theta);
    omega_max = std::max(omega_max, x.omega);
  }
  if (!(theta_max > 0.0)) theta_max = 1.0;
  if (!(omega_max > 0.0)) omega_max = 1.0;

  const std::size_t stride = std::max<std::size_t>(1, (s.size() + 1999) / 2000);
  const LinearMap xmap{0.0, t_end, kPlotLeft, kPlotLeft + kPlotWidth};

  struct Panel {
    const char* id;
    const char* label;
    double vmax;
    double SpinUpSample::*field;
  };
  const Panel panels[2] = {{"theta", "θ (rad)", theta_max * 1.05, &SpinUpSample::theta},
                           {"omega", "ω (rad s<tspan dy=\"-6\" font-size=\"9\">-1</tspan><tspan dy=\"6\">)</tspan>",
                            omega_max * 1.05, &SpinUpSample::omega}};

  for (int p = 0; p < 2; ++p) {
    const Panel& pn = panels[p];
    const double top = tops[p];
    const LinearMap ymap{0.0, pn.vmax, top + panel_h, top};
    svg += frame(kPlotLeft, top, kPlotWidth, panel_h);

    for (double v : nice_ticks(0.0, pn.vmax)) {
      const double y = ymap(v);
      svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n",
                         kPlotLeft - 5, y, kPlotLeft, y);
      svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"end\">{:g}</text>\n", kPlotLeft - 8, y + 4, v);
    }
    for (double v : nice_ticks(0.0, t_end)) {
      const double x = xmap(v);
      svg += fmt::format("<line x1=\"{:.2f}\" y1=\"{:.2f}\" x2=\"{:.2f}\" y2=\"{:.2f}\" stroke=\"black\"/>\n", x,
                         top + panel_h, x, top + panel_h + 5);
      svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">{:g}</text>\n", x,
                         top + panel_h + 20, v);
    }
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\">t (s)</text>\n",
                       kPlotLeft + kPlotWidth / 2, top + panel_h + 40);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{:.2f}\" text-anchor=\"middle\" transform=\"rotate(-90 {:.2f} {:.2f})\">{}</text>\n",
                       30.0, top + panel_h / 2, 30.0, top + panel_h / 2, pn.label);

    svg += fmt::format("<polyline id=\"{}\" fill=\"none\" stroke=\"#2a62c9\" stroke-width=\"1.5\" points=\"", pn.id);
    for (std::size_t i = 0; i < s.size(); i += stride) {
      svg += fmt::format("{:.2f},{:.2f} ", xmap(s[i].t), ymap(s[i].*pn.field));
    }
    if (!s.empty() && (s.size() - 1) % stride != 0) {
      svg += fmt::format("{:.2f},{:.2f} ", xmap(s.back().t), ymap(s.back().*pn.field));
    }
    svg += "\"/>\n";

    if (p == 1 && traj.t0_fit) {
      const double t0 = *traj.t0_fit;
      const double slope = 2.0 / std::numbers::pi * traj.problem.max_torque / traj.problem.inertia;
      const double knee = std::clamp(t0, 0.0, t_end);
      const double w_end = slope * std::max(0.0, t_end - t0);
      svg += fmt::format(
          "<polyline id=\"empirical\" fill=\"none\" stroke=\"#e08a00\" stroke-width=\"1.5\" "
          "stroke-dasharray=\"6 4\" points=\"{:.2f},{:.2f} {:.2f},{:.2f} {:.2f},{:.2f}\"/>\n",
          xmap(0.0), ymap(0.0), xmap(knee), ymap(0.0), xmap(t_end), ymap(std::min(w_end, pn.vmax)));
      svg += fmt::format(
          "<text x=\"{:.2f}\" y=\"{:.2f}\" fill=\"#e08a00\">fitted ramp, t<tspan dy=\"4\" font-size=\"9\">0</tspan>"
          "<tspan dy=\"-4\"> = {:.4g} s</tspan></text>\n",
          kPlotLeft + 10, top + 18, t0);
    }
  }
  svg += fmt::format("<text x=\"{:.2f}\" y=\"24\" text-anchor=\"middle\" font-size=\"14\">spin-up, θ<tspan dy=\"4\" "
                     "font-size=\"9\">0</tspan><tspan dy=\"-4\"> = {:.3g} rad</tspan></text>\n",
                     kPlotLeft + kPlotWidth / 2, traj.problem.theta0);
  svg += "</svg>\n";
  return svg;
}

}  // namespace gravrotor
