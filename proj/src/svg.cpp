// SPDX-License-Identifier: Apache-2.0
//
// nearsec - secure beam focusing for near-field hybrid MIMO transmitters
// Copyright (C) 2026 The nearsec authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "nearsec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <fmt/format.h>

#include "nearsec/error.hpp"

namespace nearsec::svg {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 20.0;
constexpr double kTop = 40.0;
constexpr double kBottom = 50.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            default: out += c;
        }
    }
    return out;
}

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        if (std::isfinite(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    void fix() {
        if (!(lo <= hi)) lo = 0.0, hi = 1.0;
        if (hi == lo) lo -= 0.5, hi += 0.5;
    }
};

std::string frame(const std::string& title, const std::string& x_label,
                  const std::string& y_label, const Range& xr, const Range& yr) {
    std::string s = fmt::format(
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" "
        "viewBox=\"0 0 {0} {1}\" font-family=\"sans-serif\" font-size=\"12\">\n"
        "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
        kWidth, kHeight);
    s += fmt::format("<text x=\"{}\" y=\"22\" text-anchor=\"middle\" font-size=\"14\">{}</text>\n",
                     kWidth / 2, escape(title));
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", kWidth / 2,
                     kHeight - 12, escape(x_label));
    s += fmt::format("<text x=\"16\" y=\"{0}\" text-anchor=\"middle\" "
                     "transform=\"rotate(-90 16 {0})\">{1}</text>\n",
                     kHeight / 2, escape(y_label));
    s += fmt::format("<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" "
                     "stroke=\"black\"/>\n",
                     kLeft, kTop, kWidth - kLeft - kRight, kHeight - kTop - kBottom);
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"start\">{:.4g}</text>\n", kLeft,
                     kHeight - kBottom + 16, xr.lo);
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{:.4g}</text>\n", kWidth - kRight,
                     kHeight - kBottom + 16, xr.hi);
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{:.4g}</text>\n", kLeft - 4,
                     kHeight - kBottom, yr.lo);
    s += fmt::format("<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{:.4g}</text>\n", kLeft - 4,
                     kTop + 10, yr.hi);
    return s;
}

double px(double v, const Range& r) {
    return kLeft + (v - r.lo) / (r.hi - r.lo) * (kWidth - kLeft - kRight);
}
double py(double v, const Range& r) {
    return kHeight - kBottom - (v - r.lo) / (r.hi - r.lo) * (kHeight - kTop - kBottom);
}

}  // namespace

std::string line_plot(const std::string& title, const std::string& x_label,
                      const std::string& y_label, const std::vector<double>& x,
                      const std::vector<Series>& series) {
    Range xr, yr;
    for (double v : x) xr.add(v);
    for (const auto& s : series) {
        if (s.y.size() != x.size()) throw ArgumentError("svg::line_plot: series length mismatch");
        for (double v : s.y) yr.add(v);
    }
    xr.fix();
    yr.fix();
    std::string out = frame(title, x_label, y_label, xr, yr);
    for (std::size_t k = 0; k < series.size(); ++k) {
        const char* color = kPalette[k % std::size(kPalette)];
        std::string pts;
        for (std::size_t i = 0; i < x.size(); ++i) {
            if (!std::isfinite(series[k].y[i])) continue;
            pts += fmt::format("{:.2f},{:.2f} ", px(x[i], xr), py(series[k].y[i], yr));
        }
        out += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" "
                           "points=\"{}\"/>\n",
                           color, pts);
        out += fmt::format("<text x=\"{}\" y=\"{}\" fill=\"{}\">{}</text>\n", kLeft + 8,
                           kTop + 16 + 14 * static_cast<double>(k), color,
                           escape(series[k].name));
    }
    out += "</svg>\n";
    return out;
}

std::string heatmap(const std::string& title, const std::string& x_label,
                    const std::string& y_label, const std::vector<double>& xs,
                    const std::vector<double>& ys, const std::vector<double>& values) {
    if (xs.empty() || ys.empty() || values.size() != xs.size() * ys.size()) {
        throw ArgumentError("svg::heatmap: grid and values do not match");
    }
    Range xr, yr, vr;
    for (double v : xs) xr.add(v);
    for (double v : ys) yr.add(v);
    for (double v : values) vr.add(v);
    xr.fix();
    yr.fix();
    vr.fix();
    std::string out = frame(title, x_label, y_label, xr, yr);
    const double cw = (kWidth - kLeft - kRight) / static_cast<double>(xs.size());
    const double ch = (kHeight - kTop - kBottom) / static_cast<double>(ys.size());
    for (std::size_t r = 0; r < ys.size(); ++r) {
        for (std::size_t c = 0; c < xs.size(); ++c) {
            const double t = std::clamp((values[r * xs.size() + c] - vr.lo) / (vr.hi - vr.lo), 0.0, 1.0);
            // dark blue -> yellow
            const int red = static_cast<int>(std::lround(255 * t));
            const int green = static_cast<int>(std::lround(40 + 200 * t));
            const int blue = static_cast<int>(std::lround(120 * (1.0 - t)));
            out += fmt::format("<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" height=\"{:.2f}\" "
                               "fill=\"rgb({},{},{})\"/>\n",
                               kLeft + cw * static_cast<double>(c),
                               kHeight - kBottom - ch * static_cast<double>(r + 1), cw + 0.3,
                               ch + 0.3, red, green, blue);
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace nearsec::svg
