// Copyright 2026 The surfdec Authors
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

#include "surfdec/svg_plot.h"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <limits>

namespace surfdec {

namespace {

constexpr const char *kPalette[] = {"#d62728", "#2ca02c", "#1f77b4", "#ff7f0e", "#9467bd", "#8c564b", "#17becf"};
constexpr int kLeft = 80;
constexpr int kRight = 170;
constexpr int kTop = 50;
constexpr int kBottom = 60;

const char *color(std::size_t i) {
    return kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
}

std::string escape(const std::string &text) {
    std::string out;
    for (char c : text) {
        switch (c) {
            case '&':
                out += "&amp;";
                break;
            case '<':
                out += "&lt;";
                break;
            case '>':
                out += "&gt;";
                break;
            case '"':
                out += "&quot;";
                break;
            default:
                out += c;
        }
    }
    return out;
}

std::string comment_block(const std::string &data) {
    if (data.empty()) {
        return "";
    }
    std::string safe;
    for (char c : data) {
        if (c == '-' && !safe.empty() && safe.back() == '-') {
            safe += ' ';
        }
        safe += c;
    }
    if (!safe.empty() && safe.back() == '-') {
        safe += ' ';
    }
    return "<!--\n" + safe + (safe.back() == '\n' ? "" : "\n") + "-->\n";
}

std::string header(int width, int height, const std::string &data) {
    return fmt::format(
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n{}"
        "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" viewBox=\"0 0 {} {}\" "
        "font-family=\"sans-serif\" font-size=\"12\">\n"
        "<rect x=\"0\" y=\"0\" width=\"{}\" height=\"{}\" fill=\"white\"/>\n",
        comment_block(data), width, height, width, height, width, height);
}

std::string num(double v) {
    return fmt::format("{:.2f}", v);
}

std::string tick_label(double v, bool log_scale) {
    if (v == 0) {
        return "0";
    }
    if (log_scale) {
        int e = static_cast<int>(std::lround(std::log10(v)));
        if (e >= -2 && e <= 3) {
            return fmt::format("{:g}", v);
        }
        return fmt::format("1e{}", e);
    }
    return fmt::format("{:g}", v);
}

struct Axis {
    double lo = 0;
    double hi = 1;
    bool log_scale = false;

    double fraction(double v) const {
        if (log_scale) {
            return (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
        }
        return (v - lo) / (hi - lo);
    }
    bool drawable(double v) const {
        return std::isfinite(v) && (!log_scale || v > 0);
    }
};

double nice_step(double span) {
    double raw = span / 6;
    double mag = std::pow(10.0, std::floor(std::log10(raw)));
    for (double m : {1.0, 2.0, 5.0, 10.0}) {
        if (m * mag >= raw) {
            return m * mag;
        }
    }
    return 10 * mag;
}

Axis make_axis(std::vector<double> values, bool log_scale, bool include_zero) {
    Axis axis;
    axis.log_scale = log_scale;
    double lo = std::numeric_limits<double>::infinity();
    double hi = -lo;
    for (double v : values) {
        if (axis.drawable(v)) {
            lo = std::min(lo, v);
            hi = std::max(hi, v);
        }
    }
    if (lo > hi) {
        axis.lo = log_scale ? 1 : 0;
        axis.hi = log_scale ? 10 : 1;
        return axis;
    }
    if (log_scale) {
        axis.lo = std::pow(10.0, std::floor(std::log10(lo)));
        axis.hi = std::pow(10.0, std::ceil(std::log10(hi)));
        if (axis.hi <= axis.lo) {
            axis.hi = axis.lo * 10;
        }
        return axis;
    }
    if (include_zero) {
        lo = std::min(lo, 0.0);
        hi = std::max(hi, 0.0);
    }
    if (hi == lo) {
        double pad = lo == 0 ? 1 : std::abs(lo) * 0.1;
        lo -= pad;
        hi += pad;
    }
    double step = nice_step(hi - lo);
    axis.lo = std::floor(lo / step) * step;
    axis.hi = std::ceil(hi / step) * step;
    return axis;
}

std::string frame(
    int width,
    int height,
    const Axis &x,
    const Axis &y,
    const std::string &title,
    const std::string &x_label,
    const std::string &y_label,
    bool x_ticks) {
    const int pw = width - kLeft - kRight;
    const int ph = height - kTop - kBottom;
    std::string out;
    out += fmt::format(
        "<text x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n", kLeft + pw / 2, escape(title));
    out += fmt::format(
        "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"black\"/>\n", kLeft, kTop, pw, ph);
    for (double t : axis_ticks(y.lo, y.hi, y.log_scale)) {
        double py = kTop + ph * (1 - y.fraction(t));
        out += fmt::format(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#dddddd\"/>\n", kLeft, num(py), kLeft + pw, num(py));
        out += fmt::format(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"end\">{}</text>\n", kLeft - 6, num(py + 4),
            tick_label(t, y.log_scale));
    }
    if (x_ticks) {
        for (double t : axis_ticks(x.lo, x.hi, x.log_scale)) {
            double px = kLeft + pw * x.fraction(t);
            out += fmt::format(
                "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"#dddddd\"/>\n", num(px), kTop, num(px),
                kTop + ph);
            out += fmt::format(
                "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", num(px), kTop + ph + 18,
                tick_label(t, x.log_scale));
        }
    }
    out += fmt::format(
        "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", kLeft + pw / 2, height - 14, escape(x_label));
    out += fmt::format(
        "<text x=\"18\" y=\"{}\" text-anchor=\"middle\" transform=\"rotate(-90 18 {})\">{}</text>\n", kTop + ph / 2,
        kTop + ph / 2, escape(y_label));
    return out;
}

std::string legend(int width, const std::vector<std::string> &labels) {
    std::string out;
    int x = width - kRight + 14;
    for (std::size_t i = 0; i < labels.size(); i++) {
        int y = kTop + 10 + static_cast<int>(i) * 20;
        out += fmt::format(
            "<rect x=\"{}\" y=\"{}\" width=\"14\" height=\"10\" fill=\"{}\"/>\n<text x=\"{}\" y=\"{}\">{}</text>\n", x,
            y - 9, color(i), x + 20, y, escape(labels[i]));
    }
    return out;
}

}  // namespace

std::vector<double> axis_ticks(double lo, double hi, bool log_scale) {
    std::vector<double> ticks;
    if (!(hi > lo)) {
        return ticks;
    }
    if (log_scale) {
        int a = static_cast<int>(std::ceil(std::log10(lo) - 1e-9));
        int b = static_cast<int>(std::floor(std::log10(hi) + 1e-9));
        int stride = std::max(1, (b - a) / 8 + 1);
        for (int e = a; e <= b; e += stride) {
            ticks.push_back(std::pow(10.0, e));
        }
        return ticks;
    }
    double step = nice_step(hi - lo);
    auto first = static_cast<long long>(std::ceil(lo / step - 1e-9));
    auto last = static_cast<long long>(std::floor(hi / step + 1e-9));
    for (auto k = first; k <= last; k++) {
        ticks.push_back(static_cast<double>(k) * step);
    }
    return ticks;
}

std::string render_line_plot(const LinePlot &plot) {
    std::vector<double> xs, ys;
    for (const auto &s : plot.series) {
        xs.insert(xs.end(), s.x.begin(), s.x.end());
        ys.insert(ys.end(), s.y.begin(), s.y.end());
    }
    if (plot.marker_x) {
        xs.push_back(*plot.marker_x);
    }
    Axis x = make_axis(xs, plot.log_x, false);
    Axis y = make_axis(ys, plot.log_y, true);
    const int pw = plot.width - kLeft - kRight;
    const int ph = plot.height - kTop - kBottom;

    std::string out = header(plot.width, plot.height, plot.data_comment);
    out += frame(plot.width, plot.height, x, y, plot.title, plot.x_label, plot.y_label, true);

    bool any_point = false;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < plot.series.size(); i++) {
        const auto &s = plot.series[i];
        labels.push_back(s.label);
        std::vector<std::string> segments;
        std::string current;
        std::string dots;
        std::size_t n = std::min(s.x.size(), s.y.size());
        for (std::size_t k = 0; k <= n; k++) {
            bool ok = k < n && x.drawable(s.x[k]) && y.drawable(s.y[k]);
            if (!ok) {
                if (!current.empty()) {
                    segments.push_back(current);
                    current.clear();
                }
                continue;
            }
            any_point = true;
            double px = kLeft + pw * x.fraction(s.x[k]);
            double py = kTop + ph * (1 - y.fraction(s.y[k]));
            current += (current.empty() ? "" : " ") + num(px) + "," + num(py);
            dots += fmt::format("<circle cx=\"{}\" cy=\"{}\" r=\"2.5\" fill=\"{}\"/>\n", num(px), num(py), color(i));
        }
        out += fmt::format("<g class=\"series\" data-label=\"{}\">\n", escape(s.label));
        for (const auto &seg : segments) {
            out += fmt::format(
                "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"2\" points=\"{}\"/>\n", color(i), seg);
        }
        out += dots + "</g>\n";
    }
    if (plot.marker_x && x.drawable(*plot.marker_x)) {
        double px = kLeft + pw * x.fraction(*plot.marker_x);
        out += fmt::format(
            "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"black\" stroke-dasharray=\"6,4\"/>\n", num(px), kTop,
            num(px), kTop + ph);
        if (!plot.marker_label.empty()) {
            out += fmt::format(
                "<text x=\"{}\" y=\"{}\" font-size=\"11\">{}</text>\n", num(px + 4), kTop + 14,
                escape(plot.marker_label));
        }
    }
    if (!any_point) {
        out += fmt::format(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" fill=\"#888888\">no data</text>\n", kLeft + pw / 2,
            kTop + ph / 2);
    }
    out += legend(plot.width, labels);
    out += "</svg>\n";
    return out;
}

std::string render_bar_chart(const BarChart &chart) {
    std::vector<double> ys;
    for (const auto &s : chart.values) {
        ys.insert(ys.end(), s.begin(), s.end());
    }
    Axis y = make_axis(ys, false, true);
    Axis x;
    const int pw = chart.width - kLeft - kRight;
    const int ph = chart.height - kTop - kBottom;
    std::string out = header(chart.width, chart.height, chart.data_comment);
    out += frame(chart.width, chart.height, x, y, chart.title, chart.x_label, chart.y_label, false);

    const std::size_t groups = chart.categories.size();
    const std::size_t per_group = std::max<std::size_t>(1, chart.values.size());
    bool any_bar = false;
    if (groups > 0) {
        double group_w = static_cast<double>(pw) / static_cast<double>(groups);
        double bar_w = group_w * 0.8 / static_cast<double>(per_group);
        std::size_t label_every = std::max<std::size_t>(1, groups / 26 + 1);
        for (std::size_t c = 0; c < groups; c++) {
            double gx = kLeft + group_w * static_cast<double>(c);
            for (std::size_t s = 0; s < chart.values.size(); s++) {
                double v = c < chart.values[s].size() ? chart.values[s][c] : 0;
                if (!std::isfinite(v) || v == 0) {
                    continue;
                }
                any_bar = true;
                double top = kTop + ph * (1 - y.fraction(std::max(v, 0.0)));
                double base = kTop + ph * (1 - y.fraction(0));
                out += fmt::format(
                    "<rect class=\"bar\" x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"{}\"/>\n",
                    num(gx + group_w * 0.1 + bar_w * static_cast<double>(s)), num(std::min(top, base)), num(bar_w),
                    num(std::abs(base - top)), color(s));
            }
            if (c % label_every == 0) {
                out += fmt::format(
                    "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", num(gx + group_w / 2),
                    kTop + ph + 18, escape(chart.categories[c]));
            }
        }
    }
    if (!any_bar) {
        out += fmt::format(
            "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\" fill=\"#888888\">no data</text>\n", kLeft + pw / 2,
            kTop + ph / 2);
    }
    out += legend(chart.width, chart.series_labels);
    out += "</svg>\n";
    return out;
}

std::string render_venn(
    const std::string &title,
    const std::string &left_label,
    const std::string &right_label,
    std::uint64_t left_only,
    std::uint64_t right_only,
    std::uint64_t both) {
    const int width = 520, height = 340;
    std::string data = fmt::format("category,count\n{},{}\n{},{}\nboth,{}\n", left_label, left_only, right_label,
                                   right_only, both);
    std::string out = header(width, height, data);
    out += fmt::format(
        "<text x=\"{}\" y=\"28\" text-anchor=\"middle\" font-size=\"16\">{}</text>\n", width / 2, escape(title));
    out += fmt::format(
        "<circle cx=\"200\" cy=\"180\" r=\"110\" fill=\"{}\" fill-opacity=\"0.35\" stroke=\"{}\"/>\n", color(0),
        color(0));
    out += fmt::format(
        "<circle cx=\"320\" cy=\"180\" r=\"110\" fill=\"{}\" fill-opacity=\"0.35\" stroke=\"{}\"/>\n", color(1),
        color(1));
    out += fmt::format("<text x=\"140\" y=\"184\" text-anchor=\"middle\">{}</text>\n", left_only);
    out += fmt::format("<text x=\"380\" y=\"184\" text-anchor=\"middle\">{}</text>\n", right_only);
    out += fmt::format("<text x=\"260\" y=\"184\" text-anchor=\"middle\">{}</text>\n", both);
    out += fmt::format("<text x=\"140\" y=\"60\" text-anchor=\"middle\">{}</text>\n", escape(left_label));
    out += fmt::format("<text x=\"380\" y=\"60\" text-anchor=\"middle\">{}</text>\n", escape(right_label));
    out += "</svg>\n";
    return out;
}

}  // namespace surfdec
