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

// surfdec command line front end. Every command writes its outputs plus a
// JSON manifest recording the arguments, timestamps and output digests.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "surfdec/surfdec.h"

namespace {

using json = nlohmann::ordered_json;

enum ExitCode { kOk = 0, kUsage = 1, kIo = 2, kInternal = 3 };

class CommandError : public std::runtime_error {
   public:
    CommandError(int code, const std::string &message) : std::runtime_error(message), code_(code) {
    }
    int code() const {
        return code_;
    }

   private:
    int code_;
};

int exit_code_for(sd_status status) {
    switch (status) {
        case SD_OK:
            return kOk;
        case SD_ERR_INVALID_ARGUMENT:
        case SD_ERR_UNSUPPORTED:
            return kUsage;
        case SD_ERR_IO:
        case SD_ERR_FORMAT:
        case SD_ERR_TRUNCATED:
        case SD_ERR_VERSION:
            return kIo;
        case SD_ERR_INTERNAL:
            return kInternal;
    }
    return kInternal;
}

void check(sd_status status) {
    if (status != SD_OK) {
        throw CommandError(exit_code_for(status), std::string(sd_status_name(status)) + ": " + sd_last_error());
    }
}

struct CodeDeleter {
    void operator()(sd_code *c) const {
        sd_code_free(c);
    }
};
struct StatsDeleter {
    void operator()(sd_stats *s) const {
        sd_stats_free(s);
    }
};
struct LutDeleter {
    void operator()(sd_lut *l) const {
        sd_lut_free(l);
    }
};
using CodePtr = std::unique_ptr<sd_code, CodeDeleter>;
using StatsPtr = std::unique_ptr<sd_stats, StatsDeleter>;
using LutPtr = std::unique_ptr<sd_lut, LutDeleter>;

CodePtr make_code(int distance) {
    sd_code *code = nullptr;
    check(sd_code_create(distance, &code));
    return CodePtr(code);
}

std::string take(char *text) {
    std::string out(text);
    sd_string_free(text);
    return out;
}

template <typename Fn>
std::string text_of(Fn &&fn) {
    char *out = nullptr;
    check(fn(&out));
    return take(out);
}

std::string utc_now() {
    auto now = std::chrono::system_clock::now();
    auto t = std::chrono::system_clock::to_time_t(now);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buffer[32];
    std::strftime(buffer, sizeof(buffer), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buffer;
}

// Collects outputs and parameters for the manifest.
class Run {
   public:
    Run(std::string command, int argc, char **argv) : command_(std::move(command)), started_(utc_now()) {
        for (int i = 0; i < argc; i++) {
            argv_.push_back(argv[i]);
        }
    }

    json &params() {
        return params_;
    }

    void write(const std::string &path, const std::string &contents) {
        std::ofstream out(path, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw CommandError(kIo, "cannot open " + path + " for writing");
        }
        out << contents;
        out.close();
        if (!out) {
            throw CommandError(kIo, "failed writing " + path);
        }
        outputs_.push_back(path);
    }

    void record(const std::string &path) {
        outputs_.push_back(path);
    }

    void finish(const std::string &manifest_path) {
        json doc;
        doc["command"] = command_;
        doc["argv"] = argv_;
        doc["library_version"] = sd_version();
        doc["parameters"] = params_;
        doc["started_utc"] = started_;
        doc["finished_utc"] = utc_now();
        auto outputs = json::array();
        for (const auto &path : outputs_) {
            char hex[65];
            check(sd_sha256_file(path.c_str(), hex));
            outputs.push_back({{"path", path}, {"sha256", hex}});
        }
        doc["outputs"] = outputs;
        std::ofstream out(manifest_path, std::ios::trunc);
        if (!out) {
            throw CommandError(kIo, "cannot open " + manifest_path + " for writing");
        }
        out << doc.dump(2) << "\n";
        if (!out) {
            throw CommandError(kIo, "failed writing " + manifest_path);
        }
    }

   private:
    std::string command_;
    std::string started_;
    std::vector<std::string> argv_;
    std::vector<std::string> outputs_;
    json params_ = json::object();
};

std::string manifest_for(const std::string &explicit_path, const std::string &primary) {
    return explicit_path.empty() ? primary + ".manifest.json" : explicit_path;
}

std::pair<std::uint64_t, std::uint64_t> parse_range(const std::string &text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) {
        throw CommandError(kUsage, "--range must look like LO:HI");
    }
    try {
        std::size_t used = 0;
        auto lo = std::stoull(text.substr(0, colon), &used);
        if (used != colon) {
            throw std::invalid_argument("lo");
        }
        auto rest = text.substr(colon + 1);
        auto hi = std::stoull(rest, &used);
        if (used != rest.size()) {
            throw std::invalid_argument("hi");
        }
        return {lo, hi};
    } catch (const std::logic_error &) {
        throw CommandError(kUsage, "--range must look like LO:HI with non-negative integers");
    }
}

// "0.06:0.16:0.02" or "0.05,0.1,0.15".
std::vector<double> parse_grid(const std::string &text) {
    std::vector<double> grid;
    try {
        if (text.find(':') != std::string::npos) {
            std::vector<double> parts;
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ':')) {
                parts.push_back(std::stod(item));
            }
            if (parts.size() != 3 || parts[2] <= 0 || parts[1] < parts[0]) {
                throw std::invalid_argument("grid");
            }
            auto steps = static_cast<long>(std::floor((parts[1] - parts[0]) / parts[2] + 1e-9));
            for (long k = 0; k <= steps; k++) {
                // Rounded so 0.06 + 2 * 0.02 prints as 0.1.
                grid.push_back(std::round((parts[0] + k * parts[2]) * 1e12) / 1e12);
            }
        } else {
            std::stringstream ss(text);
            std::string item;
            while (std::getline(ss, item, ',')) {
                grid.push_back(std::stod(item));
            }
        }
    } catch (const std::logic_error &) {
        throw CommandError(kUsage, "--p-grid must be LO:HI:STEP or a comma separated list");
    }
    if (grid.empty()) {
        throw CommandError(kUsage, "--p-grid is empty");
    }
    return grid;
}

sd_compare_options compare_options(unsigned workers, double p, int bp_iterations, std::size_t example_cap, bool cache) {
    auto options = sd_compare_options_default();
    options.workers = workers;
    options.error_probability = p;
    options.bp_max_iterations = bp_iterations;
    options.example_cap = example_cap;
    options.syndrome_cache = cache ? 1 : 0;
    return options;
}

json decoder_params(double p, int bp_iterations) {
    return {{"mwpm", json::object()}, {"bposd", {{"error_probability", p}, {"bp_max_iterations", bp_iterations}}}};
}

struct Options {
    std::string manifest;
    unsigned workers = 0;

    int distance = 3;
    std::string out;

    std::string mode = "exhaustive";
    std::string range;
    std::uint64_t samples = 100000;
    std::vector<int> weights;
    std::uint64_t per_weight = 10000;
    std::uint64_t seed = 1;
    double p = 0.1;
    int bp_iterations = 32;
    std::size_t example_cap = 1000;
    bool no_cache = false;
    std::string json_out;

    std::string stats;
    std::string venn;
    std::string venn_svg;
    std::string hist;
    std::string ratio;

    std::vector<int> distances;
    std::uint64_t cores = SD_LUMI_CORES;
    std::uint64_t low_samples = 10000;
    double t_mwpm = 0;
    double t_bposd = 0;
    std::string csv;
    std::string plot_dir;

    std::string decoder = "mwpm";
    std::string p_grid = "0.06:0.16:0.02";
    std::uint64_t shots = 100000;
    std::string plot;

    std::vector<std::string> inputs;
};

int cmd_build_code(const Options &o, Run &run) {
    auto code = make_code(o.distance);
    run.params()["distance"] = o.distance;
    run.write(o.out, text_of([&](char **out) { return sd_code_to_json(code.get(), out); }));
    run.finish(manifest_for(o.manifest, o.out));
    std::cout << "wrote distance " << o.distance << " code with " << sd_code_num_checks(code.get()) << " checks to "
              << o.out << "\n";
    return kOk;
}

int cmd_compare(const Options &o, Run &run) {
    auto code = make_code(o.distance);
    auto options = compare_options(o.workers, o.p, o.bp_iterations, o.example_cap, !o.no_cache);
    sd_stats *raw = nullptr;
    auto &params = run.params();
    params["distance"] = o.distance;
    params["mode"] = o.mode;
    params["decoders"] = decoder_params(o.p, o.bp_iterations);
    params["workers"] = o.workers;
    params["example_cap"] = o.example_cap;
    if (o.mode == "exhaustive") {
        const auto n = sd_code_num_data(code.get());
        std::uint64_t lo = 0;
        std::uint64_t hi = n >= 64 ? ~0ull : (std::uint64_t{1} << n);
        if (!o.range.empty()) {
            std::tie(lo, hi) = parse_range(o.range);
        }
        params["shard"] = {{"lo", lo}, {"hi", hi}};
        check(sd_compare_exhaustive(code.get(), &options, lo, hi, &raw));
    } else if (o.mode == "sample" || o.mode == "sampled") {
        params["samples"] = o.samples;
        params["seed"] = o.seed;
        check(sd_compare_sampled(code.get(), &options, o.samples, o.seed, &raw));
    } else if (o.mode == "stratified") {
        if (o.weights.empty()) {
            throw CommandError(kUsage, "--mode stratified needs --weights");
        }
        params["weights"] = o.weights;
        params["per_weight"] = o.per_weight;
        params["seed"] = o.seed;
        check(sd_compare_stratified(
            code.get(), &options, o.weights.data(), o.weights.size(), o.per_weight, o.seed, &raw));
    } else {
        throw CommandError(kUsage, "--mode must be exhaustive, sample or stratified");
    }
    StatsPtr stats(raw);
    run.write(o.out, text_of([&](char **out) { return sd_stats_to_csv(stats.get(), out); }));
    if (!o.json_out.empty()) {
        run.write(o.json_out, text_of([&](char **out) { return sd_stats_to_json(stats.get(), out); }));
    }
    run.finish(manifest_for(o.manifest, o.out));
    sd_venn venn{};
    check(sd_stats_venn(stats.get(), &venn));
    std::cout << "errors: " << sd_stats_total(stats.get()) << "  mwpm_only: " << venn.mwpm_only
              << "  bposd_only: " << venn.bposd_only << "  both: " << venn.both << "\n";
    return kOk;
}

StatsPtr load_stats(const std::string &path) {
    sd_stats *raw = nullptr;
    check(sd_stats_load_csv(path.c_str(), &raw));
    return StatsPtr(raw);
}

int cmd_report(const Options &o, Run &run) {
    auto stats = load_stats(o.stats);
    run.params()["stats"] = o.stats;
    std::string primary;
    auto emit = [&](const std::string &path, auto fn) {
        if (path.empty()) {
            return;
        }
        run.write(path, text_of([&](char **out) { return fn(stats.get(), out); }));
        if (primary.empty()) {
            primary = path;
        }
    };
    emit(o.venn, sd_report_venn_json);
    emit(o.venn_svg, sd_report_venn_svg);
    emit(o.hist, sd_report_histogram_svg);
    emit(o.ratio, sd_report_ratio_svg);
    if (primary.empty()) {
        throw CommandError(kUsage, "report needs at least one of --venn, --venn-svg, --hist, --ratio");
    }
    run.finish(manifest_for(o.manifest, primary));
    return kOk;
}

int cmd_build_lut(const Options &o, Run &run) {
    auto code = make_code(o.distance);
    sd_lut *raw = nullptr;
    check(sd_lut_build(code.get(), &raw));
    LutPtr lut(raw);
    check(sd_lut_save(lut.get(), o.out.c_str()));
    run.record(o.out);
    run.params()["distance"] = o.distance;
    run.finish(manifest_for(o.manifest, o.out));
    std::cout << "wrote " << sd_lut_num_entries(lut.get()) << " entries to " << o.out << "\n";
    return kOk;
}

int cmd_estimate(const Options &o, Run &run) {
    auto distances = o.distances.empty() ? std::vector<int>{o.distance} : o.distances;
    const bool synthetic = o.t_mwpm > 0 || o.t_bposd > 0;
    if (synthetic && (o.t_mwpm <= 0 || o.t_bposd <= 0)) {
        throw CommandError(kUsage, "--t-mwpm and --t-bposd must be given together and be positive");
    }
    auto &params = run.params();
    params["distances"] = distances;
    params["cores"] = o.cores;
    params["probability"] = o.p;
    params["decoders"] = decoder_params(o.p, o.bp_iterations);

    std::vector<sd_timing_profile> profiles;
    std::string table, csv;
    json doc = {{"measured", json::array()}, {"projection", json::array()}};
    auto options = compare_options(1, o.p, o.bp_iterations, 0, false);
    for (int d : distances) {
        double tm = o.t_mwpm, tb = o.t_bposd;
        std::vector<sd_timing_profile> mine;
        if (!synthetic) {
            auto code = make_code(d);
            sd_timing_profile profile{};
            check(sd_measure_rates(code.get(), &options, o.samples, o.low_samples, o.seed, &profile));
            tm = profile.per_million.mwpm;
            tb = profile.per_million.bposd;
            mine.push_back(profile);
            std::cerr << "distance " << d << ": " << tm << " s (MWPM), " << tb << " s (BPOSD) per 10^6 errors\n";
        }
        auto part = [&](sd_projection_format format) {
            return text_of([&](char **out) {
                return sd_projection_report(&d, 1, tm, tb, o.p, o.cores, mine.data(), mine.size(), format, out);
            });
        };
        auto t = part(SD_PROJECTION_TABLE);
        table += table.empty() ? t : t.substr(t.find('\n') + 1);
        auto c = part(SD_PROJECTION_CSV);
        csv += csv.empty() ? c : c.substr(c.find('\n') + 1);
        auto j = json::parse(part(SD_PROJECTION_JSON));
        for (auto &m : j["measured"]) {
            doc["measured"].push_back(m);
        }
        for (auto &r : j["projection"]) {
            doc["projection"].push_back(r);
        }
        if (!o.plot_dir.empty()) {
            std::filesystem::create_directories(o.plot_dir);
            run.write(
                (std::filesystem::path(o.plot_dir) / ("core_scaling_d" + std::to_string(d) + ".svg")).string(),
                text_of([&](char **out) { return sd_core_scaling_svg(d, tm, tb, o.cores, out); }));
        }
    }
    if (synthetic) {
        params["t_mwpm"] = o.t_mwpm;
        params["t_bposd"] = o.t_bposd;
    } else {
        params["samples"] = o.samples;
        params["low_weight_samples"] = o.low_samples;
        params["seed"] = o.seed;
    }
    std::cout << table;
    std::string primary;
    if (!o.out.empty()) {
        run.write(o.out, table);
        primary = o.out;
    }
    if (!o.csv.empty()) {
        run.write(o.csv, csv);
        primary = primary.empty() ? o.csv : primary;
    }
    if (!o.json_out.empty()) {
        run.write(o.json_out, doc.dump(2) + "\n");
        primary = primary.empty() ? o.json_out : primary;
    }
    if (!primary.empty() || !o.manifest.empty()) {
        run.finish(manifest_for(o.manifest, primary));
    }
    return kOk;
}

int cmd_threshold(const Options &o, Run &run) {
    sd_decoder_kind kind{};
    check(sd_decoder_kind_from_name(o.decoder.c_str(), &kind));
    auto grid = parse_grid(o.p_grid);
    auto distances = o.distances.empty() ? std::vector<int>{3, 5, 7} : o.distances;
    auto options = sd_threshold_options_default();
    options.workers = o.workers;
    options.bp_max_iterations = o.bp_iterations;
    auto &params = run.params();
    params["decoder"] = o.decoder;
    params["distances"] = distances;
    params["p_grid"] = grid;
    params["shots"] = o.shots;
    params["seed"] = o.seed;
    params["workers"] = o.workers;

    std::vector<sd_threshold_point> points;
    for (int d : distances) {
        auto code = make_code(d);
        for (double p : grid) {
            sd_threshold_point pt{};
            check(sd_logical_error_rate(code.get(), kind, p, o.shots, o.seed, &options, &pt));
            points.push_back(pt);
            std::cerr << "d=" << d << " p=" << p << " rate=" << pt.rate << "\n";
        }
    }
    run.write(o.out, text_of([&](char **out) {
                  return sd_threshold_to_csv(points.data(), points.size(), o.decoder.c_str(), o.seed, o.workers, out);
              }));
    if (!o.plot.empty()) {
        run.write(o.plot, text_of([&](char **out) {
                      return sd_threshold_svg(points.data(), points.size(), o.decoder.c_str(), out);
                  }));
    }
    json summary = {{"decoder", o.decoder}};
    if (distances.size() >= 2) {
        sd_crossing crossing{};
        std::vector<sd_crossing_pair> pairs(distances.size());
        check(sd_find_crossing(points.data(), points.size(), &crossing, pairs.data(), pairs.size()));
        summary["found"] = crossing.found != 0;
        if (crossing.found) {
            summary["estimate"] = crossing.estimate;
            summary["spread"] = crossing.spread;
            std::cout << "crossing at p = " << crossing.estimate << " (spread " << crossing.spread << ")\n";
        } else {
            summary["message"] = "no crossing in range";
            std::cout << "no crossing in range\n";
        }
        auto list = json::array();
        for (std::size_t i = 0; i < crossing.num_pairs && i < pairs.size(); i++) {
            json pair = {{"lower_distance", pairs[i].lower_distance},
                         {"upper_distance", pairs[i].upper_distance},
                         {"found", pairs[i].found != 0}};
            if (pairs[i].found) {
                pair["p"] = pairs[i].p;
            }
            list.push_back(pair);
        }
        summary["pairs"] = list;
    }
    if (!o.json_out.empty()) {
        run.write(o.json_out, summary.dump(2) + "\n");
    }
    run.finish(manifest_for(o.manifest, o.out));
    return kOk;
}

int cmd_merge(const Options &o, Run &run) {
    if (o.inputs.empty()) {
        throw CommandError(kUsage, "merge-stats needs at least one input");
    }
    StatsPtr total = load_stats(o.inputs[0]);
    for (std::size_t i = 1; i < o.inputs.size(); i++) {
        auto part = load_stats(o.inputs[i]);
        check(sd_stats_merge(total.get(), part.get()));
    }
    run.params()["inputs"] = o.inputs;
    run.write(o.out, text_of([&](char **out) { return sd_stats_to_csv(total.get(), out); }));
    run.finish(manifest_for(o.manifest, o.out));
    std::cout << "merged " << o.inputs.size() << " files, " << sd_stats_total(total.get()) << " errors\n";
    return kOk;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Exhaustive and sampled comparison of surface code decoders"};
    app.require_subcommand(1);
    app.set_version_flag("--version", sd_version());
    Options o;

    auto common = [&](CLI::App *sub) {
        sub->add_option("--manifest", o.manifest, "Manifest path (default: <output>.manifest.json)");
    };
    auto workers = [&](CLI::App *sub) {
        sub->add_option("--workers", o.workers, "Worker threads, 0 for all cores")->capture_default_str();
    };
    auto decoder_flags = [&](CLI::App *sub) {
        sub->add_option("--p", o.p, "Error probability given to BPOSD")->capture_default_str();
        sub->add_option("--bp-iterations", o.bp_iterations, "BP iteration limit")->capture_default_str();
    };

    auto *build_code = app.add_subcommand("build-code", "Write the code's checks and logicals as JSON");
    build_code->add_option("--distance", o.distance, "Odd code distance >= 3")->required();
    build_code->add_option("--out", o.out, "Output JSON path")->required();
    common(build_code);

    auto *compare = app.add_subcommand("compare", "Decode errors with MWPM and BPOSD and tabulate failures");
    compare->add_option("--distance", o.distance, "Code distance")->required();
    compare->add_option("--mode", o.mode, "exhaustive, sample or stratified")->capture_default_str();
    compare->add_option("--range", o.range, "Error integer interval LO:HI for exhaustive shards");
    compare->add_option("--samples", o.samples, "Samples for --mode sample")->capture_default_str();
    compare->add_option("--weights", o.weights, "Weights for --mode stratified")->delimiter(',');
    compare->add_option("--per-weight", o.per_weight, "Samples per weight for --mode stratified")
        ->capture_default_str();
    compare->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
    compare->add_option("--example-cap", o.example_cap, "Example errors kept per category")->capture_default_str();
    compare->add_flag("--no-cache", o.no_cache, "Decode every error instead of every syndrome once");
    compare->add_option("--out", o.out, "Statistics CSV path")->required();
    compare->add_option("--json", o.json_out, "Also write the statistics and examples as JSON");
    workers(compare);
    decoder_flags(compare);
    common(compare);

    auto *report = app.add_subcommand("report", "Venn counts, exclusive-failure histogram and ratio plot");
    report->add_option("--stats", o.stats, "Statistics CSV")->required();
    report->add_option("--venn", o.venn, "Venn counts JSON");
    report->add_option("--venn-svg", o.venn_svg, "Venn diagram SVG");
    report->add_option("--hist", o.hist, "Exclusive failures per weight SVG");
    report->add_option("--ratio", o.ratio, "Exclusive failure ratio SVG");
    common(report);

    auto *build_lut = app.add_subcommand("build-lut", "Build a minimum-weight lookup table");
    build_lut->add_option("--distance", o.distance, "Code distance, at most 7")->required();
    build_lut->add_option("--out", o.out, "Table path")->required();
    common(build_lut);

    auto *estimate = app.add_subcommand("estimate", "Project exhaustive run times onto many cores");
    estimate->add_option("--distance", o.distance, "Single distance to measure")->capture_default_str();
    estimate->add_option("--distances", o.distances, "Distances to measure, e.g. 5,7,9")->delimiter(',');
    estimate->add_option("--cores", o.cores, "Core count for the projection")->capture_default_str();
    estimate->add_option("--samples", o.samples, "Uniform errors timed per distance")->capture_default_str();
    estimate->add_option("--low-samples", o.low_samples, "Extra low-weight errors timed")->capture_default_str();
    estimate->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
    estimate->add_option("--t-mwpm", o.t_mwpm, "Use this MWPM time (s per 10^6) instead of measuring");
    estimate->add_option("--t-bposd", o.t_bposd, "Use this BPOSD time (s per 10^6) instead of measuring");
    estimate->add_option("--out", o.out, "Projection table (text)");
    estimate->add_option("--csv", o.csv, "Projection CSV");
    estimate->add_option("--json", o.json_out, "Measurements and projection JSON");
    estimate->add_option("--plot-dir", o.plot_dir, "Directory for core-scaling SVGs");
    decoder_flags(estimate);
    common(estimate);

    auto *threshold = app.add_subcommand("threshold", "Logical error rate sweep and threshold crossing");
    threshold->add_option("--decoder", o.decoder, "mwpm, bposd or lut")->capture_default_str();
    threshold->add_option("--distances", o.distances, "Distances, default 3,5,7")->delimiter(',');
    threshold->add_option("--p-grid", o.p_grid, "LO:HI:STEP or a comma separated list")->capture_default_str();
    threshold->add_option("--shots", o.shots, "Shots per point")->capture_default_str();
    threshold->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
    threshold->add_option("--bp-iterations", o.bp_iterations, "BP iteration limit")->capture_default_str();
    threshold->add_option("--out", o.out, "Points CSV")->required();
    threshold->add_option("--plot", o.plot, "Rate against p SVG");
    threshold->add_option("--json", o.json_out, "Crossing summary JSON");
    workers(threshold);
    common(threshold);

    auto *merge = app.add_subcommand("merge-stats", "Add statistics CSVs from shards");
    merge->add_option("inputs", o.inputs, "Statistics CSVs")->required();
    merge->add_option("--out", o.out, "Merged CSV")->required();
    common(merge);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kUsage;
    }

    try {
        auto *sub = app.get_subcommands().front();
        Run run(sub->get_name(), argc, argv);
        if (sub == build_code) {
            return cmd_build_code(o, run);
        }
        if (sub == compare) {
            return cmd_compare(o, run);
        }
        if (sub == report) {
            return cmd_report(o, run);
        }
        if (sub == build_lut) {
            return cmd_build_lut(o, run);
        }
        if (sub == estimate) {
            return cmd_estimate(o, run);
        }
        if (sub == threshold) {
            return cmd_threshold(o, run);
        }
        return cmd_merge(o, run);
    } catch (const CommandError &e) {
        std::cerr << "error: " << e.what() << "\n";
        return e.code();
    } catch (const std::filesystem::filesystem_error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kInternal;
    }
}
