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

#ifndef SURFDEC_SVG_PLOT_H
#define SURFDEC_SVG_PLOT_H

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace surfdec {

struct Series {
    std::string label;
    std::vector<double> x;
    std::vector<double> y;
};

/// A self-contained line plot. Output is a pure function of the spec, so
/// identical specs give identical bytes.
///
/// On a log axis, points with a non-positive coordinate are dropped and the
/// polyline is split around them. A plot with no drawable point still gets
/// axes and a "no data" note.
struct LinePlot {
    std::string title;
    std::string x_label;
    std::string y_label;
    bool log_x = false;
    bool log_y = false;
    std::vector<Series> series;
    std::optional<double> marker_x;
    std::string marker_label;
    /// Emitted verbatim inside an XML comment at the top of the document.
    std::string data_comment;
    int width = 720;
    int height = 480;
};

std::string render_line_plot(const LinePlot &plot);

/// Grouped vertical bars: one group per category, one bar per series.
struct BarChart {
    std::string title;
    std::string x_label;
    std::string y_label;
    std::vector<std::string> categories;
    std::vector<std::string> series_labels;
    /// values[s][c]
    std::vector<std::vector<double>> values;
    std::string data_comment;
    int width = 720;
    int height = 480;
};

std::string render_bar_chart(const BarChart &chart);

/// Two overlapping circles with the exclusive and joint counts.
std::string render_venn(
    const std::string &title,
    const std::string &left_label,
    const std::string &right_label,
    std::uint64_t left_only,
    std::uint64_t right_only,
    std::uint64_t both);

/// Axis tick positions for [lo, hi]: 1-2-5 steps on a linear axis, decades
/// on a log axis. Exposed for tests.
std::vector<double> axis_ticks(double lo, double hi, bool log_scale);

}  // namespace surfdec

#endif
