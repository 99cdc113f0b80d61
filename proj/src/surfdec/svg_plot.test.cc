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

#include <gtest/gtest.h>

using namespace surfdec;

namespace {

std::size_t count(const std::string &text, const std::string &needle) {
    std::size_t n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
        n++;
    }
    return n;
}

LinePlot two_curves() {
    LinePlot plot;
    plot.title = "ratio";
    plot.x_label = "weight";
    plot.y_label = "fraction";
    plot.series = {{"MWPM", {1, 2, 3, 4}, {0.0, 0.1, 0.2, 0.3}}, {"BPOSD", {1, 2, 3, 4}, {0.0, 0.2, 0.1, 0.05}}};
    plot.data_comment = "weight,mwpm,bposd\n1,0,0\n";
    return plot;
}

}  // namespace

TEST(svg_plot, line_plot_is_deterministic) {
    auto a = render_line_plot(two_curves());
    auto b = render_line_plot(two_curves());
    EXPECT_EQ(a, b);
    EXPECT_EQ(a.rfind("<?xml", 0), 0u);
    EXPECT_NE(a.find("</svg>"), std::string::npos);
}

TEST(svg_plot, line_plot_has_one_polyline_per_series) {
    auto svg = render_line_plot(two_curves());
    EXPECT_EQ(count(svg, "<polyline"), 2u);
    EXPECT_NE(svg.find(">MWPM<"), std::string::npos);
    EXPECT_NE(svg.find(">BPOSD<"), std::string::npos);
    EXPECT_NE(svg.find("weight,mwpm,bposd"), std::string::npos);
    EXPECT_EQ(svg.find("no data"), std::string::npos);
}

TEST(svg_plot, comment_cannot_close_early) {
    auto plot = two_curves();
    plot.data_comment = "a--b-->c";
    auto svg = render_line_plot(plot);
    auto open = svg.find("<!--");
    auto close = svg.find("-->", open);
    ASSERT_NE(open, std::string::npos);
    EXPECT_EQ(svg.find("--", open + 4), close);
}

TEST(svg_plot, log_axis_splits_at_non_positive_points) {
    LinePlot plot;
    plot.log_y = true;
    plot.series = {{"s", {1, 2, 3, 4, 5}, {1e-3, 1e-2, 0, 1e-1, 1}}};
    auto svg = render_line_plot(plot);
    EXPECT_EQ(count(svg, "<polyline"), 2u);
}

TEST(svg_plot, empty_plot_notes_no_data) {
    LinePlot plot;
    plot.title = "empty";
    auto svg = render_line_plot(plot);
    EXPECT_NE(svg.find("no data"), std::string::npos);
    EXPECT_EQ(count(svg, "<polyline"), 0u);

    BarChart chart;
    auto bars = render_bar_chart(chart);
    EXPECT_NE(bars.find("no data"), std::string::npos);
}

TEST(svg_plot, marker_line) {
    auto plot = two_curves();
    plot.marker_x = 2.5;
    plot.marker_label = "here";
    auto svg = render_line_plot(plot);
    EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
    EXPECT_NE(svg.find(">here<"), std::string::npos);
}

TEST(svg_plot, bar_chart_draws_every_bar) {
    BarChart chart;
    chart.categories = {"4", "5", "6"};
    chart.series_labels = {"MWPM", "BPOSD"};
    chart.values = {{0, 131, 900}, {48, 24, 700}};
    auto svg = render_bar_chart(chart);
    // Zero values draw nothing.
    EXPECT_EQ(count(svg, "<rect class=\"bar\""), 5u);
    EXPECT_EQ(svg, render_bar_chart(chart));
}

TEST(svg_plot, venn_shows_counts) {
    auto svg = render_venn("Failures", "MWPM", "BPOSD", 32768, 32768, 16744448);
    EXPECT_NE(svg.find(">32768<"), std::string::npos);
    EXPECT_NE(svg.find(">16744448<"), std::string::npos);
    EXPECT_EQ(count(svg, "<circle"), 2u);
}

TEST(svg_plot, ticks) {
    auto linear = axis_ticks(0, 1, false);
    std::vector<double> expected = {0, 0.2, 0.4, 0.6, 0.8, 1.0};
    ASSERT_EQ(linear.size(), expected.size());
    for (std::size_t i = 0; i < linear.size(); i++) {
        EXPECT_NEAR(linear[i], expected[i], 1e-12);
    }
    EXPECT_EQ(axis_ticks(1e-3, 1, true), (std::vector<double>{1e-3, 1e-2, 1e-1, 1}));
    auto t = axis_ticks(0, 37, false);
    EXPECT_LE(t.front(), 0);
    EXPECT_GE(t.back(), 37 - 10);
}
