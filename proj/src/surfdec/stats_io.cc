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

#include "surfdec/stats_io.h"

#include <fmt/format.h>

#include <charconv>
#include <optional>
#include <vector>

#include "json.hpp"

#include "surfdec/errors.h"
#include "surfdec/file_io.h"

namespace surfdec {

namespace {

constexpr std::string_view kMagic = "# surfdec-stats v";

std::vector<std::string_view> split(std::string_view text, char sep) {
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    while (true) {
        auto pos = text.find(sep, start);
        parts.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) {
            break;
        }
        start = pos + 1;
    }
    return parts;
}

std::vector<std::string_view> lines_of(std::string_view text) {
    std::vector<std::string_view> lines;
    for (auto line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
    }
    // A trailing newline leaves one empty piece behind.
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    return lines;
}

[[noreturn]] void fail(FileErrorKind kind, const std::string &source, const std::string &what) {
    throw FileError(kind, source + ": " + what);
}

std::uint64_t parse_u64(std::string_view field, const std::string &source, std::size_t line) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        fail(FileErrorKind::Format, source, fmt::format("line {}: '{}' is not a non-negative integer", line, field));
    }
    return value;
}

}  // namespace

std::string stats_to_csv(const ComparisonStats &stats) {
    std::string out = fmt::format(
        "{}{} distance={} mode={}\n{}\n", kMagic, kStatsCsvVersion, stats.distance, run_mode_name(stats.mode),
        kStatsCsvHeader);
    for (std::size_t w = 0; w < stats.per_weight.size(); w++) {
        const auto &row = stats.per_weight[w];
        out += fmt::format(
            "{},{},{},{},{}\n", w, row.total, row.mwpm_only_fail, row.bposd_only_fail, row.both_fail);
    }
    return out;
}

ComparisonStats stats_from_csv(std::string_view text, const std::string &source) {
    auto lines = lines_of(text);
    if (lines.empty()) {
        fail(FileErrorKind::Truncated, source, "empty statistics file");
    }
    auto first = lines[0];
    if (first.substr(0, kMagic.size()) != kMagic) {
        fail(FileErrorKind::Format, source, "missing '# surfdec-stats v<N>' version line");
    }
    auto meta = split(first.substr(kMagic.size()), ' ');
    auto version = parse_u64(meta[0], source, 1);
    if (version != kStatsCsvVersion) {
        fail(FileErrorKind::Version, source, fmt::format("unsupported statistics format version {}", version));
    }
    int distance = -1;
    std::optional<RunMode> mode;
    for (std::size_t i = 1; i < meta.size(); i++) {
        auto kv = split(meta[i], '=');
        if (kv.size() != 2) {
            fail(FileErrorKind::Format, source, fmt::format("malformed version line field '{}'", meta[i]));
        }
        if (kv[0] == "distance") {
            distance = static_cast<int>(parse_u64(kv[1], source, 1));
        } else if (kv[0] == "mode") {
            try {
                mode = parse_run_mode(std::string(kv[1]));
            } catch (const std::invalid_argument &) {
                fail(FileErrorKind::Format, source, fmt::format("unknown mode '{}'", kv[1]));
            }
        } else {
            fail(FileErrorKind::Format, source, fmt::format("unknown version line field '{}'", kv[0]));
        }
    }
    if (distance < 3 || distance % 2 == 0 || distance > kMaxHarnessDistance || !mode) {
        fail(FileErrorKind::Format, source, "version line needs an odd distance in [3, 7] and a mode");
    }
    if (lines.size() < 2) {
        fail(FileErrorKind::Truncated, source, "missing column header");
    }
    if (lines[1] != kStatsCsvHeader) {
        fail(
            FileErrorKind::Format, source,
            fmt::format("unexpected columns '{}', expected '{}'", lines[1], kStatsCsvHeader));
    }
    auto stats = ComparisonStats::empty(distance, *mode);
    const auto n = static_cast<unsigned>(distance * distance);
    if (lines.size() < n + 3) {
        fail(FileErrorKind::Truncated, source, fmt::format("expected {} weight rows, found {}", n + 1, lines.size() - 2));
    }
    if (lines.size() > n + 3) {
        fail(FileErrorKind::Format, source, "rows beyond the largest weight");
    }
    for (unsigned w = 0; w <= n; w++) {
        const std::size_t line_no = w + 3;
        auto fields = split(lines[w + 2], ',');
        if (fields.size() != 5) {
            fail(FileErrorKind::Format, source, fmt::format("line {}: expected 5 fields", line_no));
        }
        if (parse_u64(fields[0], source, line_no) != w) {
            fail(FileErrorKind::Format, source, fmt::format("line {}: expected weight {}", line_no, w));
        }
        auto &row = stats.per_weight[w];
        row.total = parse_u64(fields[1], source, line_no);
        row.mwpm_only_fail = parse_u64(fields[2], source, line_no);
        row.bposd_only_fail = parse_u64(fields[3], source, line_no);
        row.both_fail = parse_u64(fields[4], source, line_no);
        // Compare without overflow.
        if (row.mwpm_only_fail > row.total || row.bposd_only_fail > row.total - row.mwpm_only_fail ||
            row.both_fail > row.total - row.mwpm_only_fail - row.bposd_only_fail) {
            fail(FileErrorKind::Format, source, fmt::format("line {}: failure counts exceed the total", line_no));
        }
        if (*mode == RunMode::Exhaustive && row.total > binomial(n, w)) {
            fail(FileErrorKind::Format, source, fmt::format("line {}: total exceeds C({}, {})", line_no, n, w));
        }
    }
    return stats;
}

void save_stats_csv(const ComparisonStats &stats, const std::string &path) {
    write_file(path, stats_to_csv(stats));
}

ComparisonStats load_stats_csv(const std::string &path) {
    return stats_from_csv(read_file(path), path);
}

std::string stats_to_json(const ComparisonStats &stats) {
    nlohmann::ordered_json doc;
    doc["distance"] = stats.distance;
    doc["mode"] = run_mode_name(stats.mode);
    doc["total_errors"] = stats.total_errors();
    auto rows = nlohmann::ordered_json::array();
    for (std::size_t w = 0; w < stats.per_weight.size(); w++) {
        const auto &r = stats.per_weight[w];
        rows.push_back({
            {"weight", w},
            {"total", r.total},
            {"mwpm_only_fail", r.mwpm_only_fail},
            {"bposd_only_fail", r.bposd_only_fail},
            {"both_fail", r.both_fail},
        });
    }
    doc["per_weight"] = rows;
    auto venn = venn_counts(stats);
    doc["venn"] = {{"mwpm_only", venn.mwpm_only}, {"bposd_only", venn.bposd_only}, {"both", venn.both}};
    doc["example_cap"] = stats.example_cap;
    nlohmann::ordered_json examples;
    for (std::size_t c = 0; c < stats.examples.size(); c++) {
        examples[failure_category_name(static_cast<FailureCategory>(c))] = stats.examples[c];
    }
    doc["examples"] = examples;
    return doc.dump(2) + "\n";
}

}  // namespace surfdec
