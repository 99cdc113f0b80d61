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

#include "surfdec/report.h"

#include <fmt/format.h>

#include "json.hpp"
#include "surfdec/svg_plot.h"

namespace surfdec {

std::string venn_json(const ComparisonStats &stats) {
    auto venn = venn_counts(stats);
    nlohmann::ordered_json doc = {
        {"mwpm_only", venn.mwpm_only},
        {"bposd_only", venn.bposd_only},
        {"both", venn.both},
    };
    return doc.dump(2) + "\n";
}

std::string exclusive_histogram_svg(const ComparisonStats &stats) {
    BarChart chart;
    chart.title = fmt::format("Errors decoded wrongly by one decoder only, distance {}", stats.distance);
    chart.x_label = "error weight";
    chart.y_label = "exclusive failures";
    chart.series_labels = {"MWPM", "BPOSD"};
    chart.values.resize(2);
    chart.data_comment = "weight,mwpm_only_fail,bposd_only_fail\n";
    for (std::size_t w = 0; w < stats.per_weight.size(); w++) {
        const auto &row = stats.per_weight[w];
        chart.categories.push_back(std::to_string(w));
        chart.values[0].push_back(static_cast<double>(row.mwpm_only_fail));
        chart.values[1].push_back(static_cast<double>(row.bposd_only_fail));
        chart.data_comment += fmt::format("{},{},{}\n", w, row.mwpm_only_fail, row.bposd_only_fail);
    }
    return render_bar_chart(chart);
}

std::string failure_ratio_svg(const ComparisonStats &stats) {
    const bool exact = is_complete_exhaustive(stats);
    LinePlot plot;
    plot.title = fmt::format("Exclusive failure ratio, distance {}", stats.distance);
    plot.x_label = "error weight";
    plot.y_label = exact ? "exclusive failures / C(n, w)" : "exclusive failures / errors processed";
    plot.data_comment = fmt::format("ratio={}\nweight,total,mwpm_ratio,bposd_ratio\n", exact ? "exact" : "estimated");
    if (stats.total_errors() > 0) {
        auto mwpm = exact ? failure_ratio(stats, DecoderSelector::Mwpm)
                          : estimated_failure_ratio(stats, DecoderSelector::Mwpm);
        auto bposd = exact ? failure_ratio(stats, DecoderSelector::Bposd)
                           : estimated_failure_ratio(stats, DecoderSelector::Bposd);
        Series a{"MWPM", {}, {}}, b{"BPOSD", {}, {}};
        for (std::size_t w = 0; w < stats.per_weight.size(); w++) {
            if (stats.per_weight[w].total == 0) {
                continue;
            }
            a.x.push_back(static_cast<double>(w));
            a.y.push_back(mwpm[w]);
            b.x.push_back(static_cast<double>(w));
            b.y.push_back(bposd[w]);
            plot.data_comment += fmt::format("{},{},{:.9e},{:.9e}\n", w, stats.per_weight[w].total, mwpm[w], bposd[w]);
        }
        plot.series = {a, b};
    }
    return render_line_plot(plot);
}

std::string venn_svg(const ComparisonStats &stats) {
    auto venn = venn_counts(stats);
    return render_venn(
        fmt::format("Failing errors, distance {}", stats.distance), "MWPM", "BPOSD", venn.mwpm_only, venn.bposd_only,
        venn.both);
}

}  // namespace surfdec
