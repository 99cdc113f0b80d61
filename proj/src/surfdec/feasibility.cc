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

#include "surfdec/feasibility.h"

#include <fmt/format.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>

#include "json.hpp"
#include "surfdec/svg_plot.h"

#ifdef __linux__
#include <sched.h>
#endif

namespace surfdec {

namespace {

using Clock = std::chrono::steady_clock;

// Smallest reportable duration; keeps every time strictly positive.
constexpr double kClockTick = 1e-9;

double seconds_since(Clock::time_point start) {
    return std::max(kClockTick, std::chrono::duration<double>(Clock::now() - start).count());
}

class CorePin {
   public:
    explicit CorePin(bool enable) {
#ifdef __linux__
        if (!enable) {
            return;
        }
        int cpu = sched_getcpu();
        if (cpu < 0 || sched_getaffinity(0, sizeof(saved_), &saved_) != 0) {
            return;
        }
        cpu_set_t one;
        CPU_ZERO(&one);
        CPU_SET(cpu, &one);
        pinned_ = sched_setaffinity(0, sizeof(one), &one) == 0;
#else
        (void)enable;
#endif
    }
    ~CorePin() {
#ifdef __linux__
        if (pinned_) {
            sched_setaffinity(0, sizeof(saved_), &saved_);
        }
#endif
    }
    CorePin(const CorePin &) = delete;
    CorePin &operator=(const CorePin &) = delete;

    bool pinned() const {
        return pinned_;
    }

   private:
    bool pinned_ = false;
#ifdef __linux__
    cpu_set_t saved_{};
#endif
};

// Errors and syndromes stored back to back, one fixed-width record each.
struct ErrorBuffer {
    std::size_t error_words = 0;
    std::size_t syndrome_words = 0;
    std::vector<std::uint64_t> errors;
    std::vector<std::uint64_t> syndromes;

    std::size_t size() const {
        return error_words == 0 ? 0 : errors.size() / error_words;
    }
    const std::uint64_t *error(std::size_t i) const {
        return errors.data() + i * error_words;
    }
    const std::uint64_t *syndrome(std::size_t i) const {
        return syndromes.data() + i * syndrome_words;
    }
};

void append_syndrome(const SurfaceCode &code, const std::uint64_t *error, std::vector<std::uint64_t> &out) {
    const auto &h = code.parity_matrix();
    const std::size_t base = out.size();
    out.resize(base + (h.num_rows() + 63) / 64, 0);
    for (std::size_t k = 0; k < h.num_rows(); k++) {
        auto row = h.row(k).words();
        unsigned parity = 0;
        for (std::size_t w = 0; w < row.size(); w++) {
            parity ^= static_cast<unsigned>(std::popcount(row[w] & error[w]));
        }
        if (parity & 1) {
            out[base + k / 64] |= std::uint64_t{1} << (k % 64);
        }
    }
}

std::size_t weight_of(const std::uint64_t *words, std::size_t count) {
    std::size_t w = 0;
    for (std::size_t i = 0; i < count; i++) {
        w += static_cast<std::size_t>(std::popcount(words[i]));
    }
    return w;
}

double unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double binomial_double(std::size_t n, int k) {
    double c = 1;
    for (int i = 0; i < k; i++) {
        c = c * static_cast<double>(n - i) / static_cast<double>(i + 1);
    }
    return c;
}

struct PassResult {
    double seconds = 0;
    std::uint64_t failures = 0;
};

PassResult decode_pass(
    const SurfaceCode &code, const DecoderFactory &factory, const ErrorBuffer &buffer,
    const std::vector<std::size_t> &indices) {
    auto decoder = factory();
    BitString syndrome(code.num_checks());
    BitString error(code.num_data());
    DecodeOutcome out;
    PassResult result;
    auto start = Clock::now();
    for (auto i : indices) {
        std::copy_n(buffer.syndrome(i), buffer.syndrome_words, syndrome.words().begin());
        decoder->decode_into(syndrome, out);
        std::copy_n(buffer.error(i), buffer.error_words, error.words().begin());
        error ^= out.correction;
        result.failures += error.dot(code.logical_z_mask()) ? 1 : 0;
    }
    result.seconds = indices.empty() ? 0 : seconds_since(start);
    return result;
}

double per_million(double seconds, std::uint64_t count) {
    return count == 0 ? 0 : seconds / static_cast<double>(count) * 1e6;
}

}  // namespace

TimingProfile measure_rates(
    const std::shared_ptr<const SurfaceCode> &code,
    const DecoderPair &decoders,
    std::uint64_t num_samples,
    std::uint64_t seed,
    const MeasureOptions &options) {
    if (num_samples == 0) {
        throw std::invalid_argument("timing needs at least one sample");
    }
    const std::size_t n = code->num_data();
    const int d = code->distance();
    CorePin pin(options.pin_core);

    TimingProfile profile;
    profile.distance = d;
    profile.sample_count = num_samples;
    profile.seed = seed;
    profile.pinned = pin.pinned();

    ErrorBuffer uniform;
    uniform.error_words = (n + 63) / 64;
    uniform.syndrome_words = (code->num_checks() + 63) / 64;
    uniform.errors.reserve(num_samples * uniform.error_words);
    uniform.syndromes.reserve(num_samples * uniform.syndrome_words);
    const std::uint64_t tail_mask = n % 64 == 0 ? ~0ull : (std::uint64_t{1} << (n % 64)) - 1;

    std::seed_seq uniform_seed{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 0u};
    std::mt19937_64 rng(uniform_seed);
    auto start = Clock::now();
    for (std::uint64_t i = 0; i < num_samples; i++) {
        for (std::size_t w = 0; w < uniform.error_words; w++) {
            std::uint64_t word = rng();
            uniform.errors.push_back(w + 1 == uniform.error_words ? word & tail_mask : word);
        }
        append_syndrome(*code, uniform.error(i), uniform.syndromes);
    }
    const double gen_uniform = seconds_since(start);

    // Low weight sample: weight w < d/2 with probability proportional to
    // C(n, w), then a uniform support of that size.
    ErrorBuffer low = uniform;
    low.errors.clear();
    low.syndromes.clear();
    const int max_low = (d - 1) / 2;
    std::vector<double> cumulative;
    double acc = 0;
    for (int w = 0; w <= max_low; w++) {
        acc += binomial_double(n, w);
        cumulative.push_back(acc);
    }
    std::seed_seq low_seed{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), 1u};
    std::mt19937_64 low_rng(low_seed);
    std::vector<std::uint32_t> positions(n);
    start = Clock::now();
    for (std::uint64_t i = 0; i < options.low_weight_samples; i++) {
        double u = unit(low_rng) * acc;
        int w = static_cast<int>(std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
        w = std::min(w, max_low);
        for (std::size_t q = 0; q < n; q++) {
            positions[q] = static_cast<std::uint32_t>(q);
        }
        const std::size_t base = low.errors.size();
        low.errors.resize(base + low.error_words, 0);
        for (int k = 0; k < w; k++) {
            auto j = static_cast<std::size_t>(k) + static_cast<std::size_t>(low_rng() % (n - k));
            std::swap(positions[k], positions[j]);
            low.errors[base + positions[k] / 64] |= std::uint64_t{1} << (positions[k] % 64);
        }
        append_syndrome(*code, low.error(i), low.syndromes);
    }
    const double gen_low = options.low_weight_samples == 0 ? 0 : seconds_since(start);

    std::vector<std::size_t> uniform_low, uniform_high, low_all(low.size());
    for (std::size_t i = 0; i < uniform.size(); i++) {
        (2 * weight_of(uniform.error(i), uniform.error_words) < static_cast<std::size_t>(d) ? uniform_low
                                                                                             : uniform_high)
            .push_back(i);
    }
    for (std::size_t i = 0; i < low_all.size(); i++) {
        low_all[i] = i;
    }

    auto time_decoder = [&](const DecoderFactory &factory, double PassTimes::*field, std::uint64_t &failures) {
        auto high = decode_pass(*code, factory, uniform, uniform_high);
        auto ulow = decode_pass(*code, factory, uniform, uniform_low);
        auto extra = decode_pass(*code, factory, low, low_all);
        failures = high.failures + ulow.failures;
        profile.per_million.*field = per_million(high.seconds + ulow.seconds, num_samples);
        profile.high.per_million.*field = per_million(high.seconds, uniform_high.size());
        profile.low.per_million.*field = per_million(ulow.seconds + extra.seconds, uniform_low.size() + low_all.size());
    };
    time_decoder(decoders.mwpm, &PassTimes::mwpm, profile.mwpm_failures);
    time_decoder(decoders.bposd, &PassTimes::bposd, profile.bposd_failures);

    profile.per_million.generate = per_million(gen_uniform, num_samples);
    profile.high.count = uniform_high.size();
    profile.high.per_million.generate = uniform_high.empty() ? 0 : profile.per_million.generate;
    profile.low.count = uniform_low.size() + low_all.size();
    // Uniform draws are attributed to the low stratum in proportion to count.
    profile.low.per_million.generate = per_million(
        gen_uniform / static_cast<double>(num_samples) * static_cast<double>(uniform_low.size()) + gen_low,
        profile.low.count);
    return profile;
}

double error_space_size(int distance) {
    if (distance < 3 || distance % 2 == 0) {
        throw std::invalid_argument("distance must be odd and >= 3");
    }
    double size = std::ldexp(1.0, distance * distance);
    if (!std::isfinite(size)) {
        throw std::invalid_argument("2^(d^2) overflows a double for distance " + std::to_string(distance));
    }
    return size;
}

double extrapolate_single_core(double t_per_million, int distance) {
    if (!std::isfinite(t_per_million) || t_per_million <= 0) {
        throw std::invalid_argument("per-10^6 time must be finite and positive");
    }
    return t_per_million * error_space_size(distance) / 1e6;
}

double extrapolate_multicore(double single_core_seconds, std::uint64_t cores) {
    if (cores < 1) {
        throw std::invalid_argument("core count must be at least 1");
    }
    if (!std::isfinite(single_core_seconds) || single_core_seconds < 0) {
        throw std::invalid_argument("single-core time must be finite and non-negative");
    }
    return single_core_seconds / static_cast<double>(cores);
}

double per_million_from_multicore(double multicore_seconds, std::uint64_t cores, int distance) {
    if (cores < 1) {
        throw std::invalid_argument("core count must be at least 1");
    }
    return multicore_seconds * static_cast<double>(cores) * 1e6 / error_space_size(distance);
}

std::vector<ProjectionRow> project(
    const std::vector<int> &distances, double t_mwpm, double t_bposd, double probability, std::uint64_t cores) {
    std::vector<ProjectionRow> rows;
    for (int d : distances) {
        for (auto [name, t] : {std::pair<const char *, double>{"MWPM", t_mwpm}, {"BPOSD", t_bposd}}) {
            ProjectionRow row;
            row.distance = d;
            row.num_errors = error_space_size(d);
            row.decoder = name;
            row.probability = probability;
            row.t_per_million = t;
            row.single_core_seconds = extrapolate_single_core(t, d);
            row.multicore_seconds = extrapolate_multicore(row.single_core_seconds, cores);
            row.cores = cores;
            rows.push_back(row);
        }
    }
    return rows;
}

std::string format_error_count(double count) {
    if (count < 1e10) {
        return fmt::format("{:.0f}", count);
    }
    return fmt::format("{:.4e}", count);
}

std::string projection_csv(const std::vector<ProjectionRow> &rows) {
    std::string out = "distance,num_errors,decoder,probability,t_per_million_s,single_core_s,cores,multicore_s\n";
    for (const auto &r : rows) {
        out += fmt::format(
            "{},{},{},{},{:.6e},{:.6e},{},{:.6e}\n", r.distance, format_error_count(r.num_errors), r.decoder,
            r.probability, r.t_per_million, r.single_core_seconds, r.cores, r.multicore_seconds);
    }
    return out;
}

std::string projection_table(const std::vector<ProjectionRow> &rows) {
    std::string out = fmt::format("{:<5} {:>14} {:<8} {:>6} {:>16}\n", "Dist", "Nr. errors", "Decoder", "Prob.",
                                  "Time (s)");
    int last = -1;
    for (const auto &r : rows) {
        bool first = r.distance != last;
        last = r.distance;
        out += fmt::format(
            "{:<5} {:>14} {:<8} {:>6} {:>16.2e}\n", first ? std::to_string(r.distance) : "",
            first ? format_error_count(r.num_errors) : "", r.decoder, r.probability, r.multicore_seconds);
    }
    return out;
}

std::string timing_json(const std::vector<TimingProfile> &profiles, const std::vector<ProjectionRow> &rows) {
    auto times = [](const PassTimes &t) {
        return nlohmann::ordered_json{{"generate", t.generate}, {"mwpm", t.mwpm}, {"bposd", t.bposd}};
    };
    nlohmann::ordered_json doc;
    auto measured = nlohmann::ordered_json::array();
    for (const auto &p : profiles) {
        measured.push_back({
            {"distance", p.distance},
            {"sample_count", p.sample_count},
            {"seed", p.seed},
            {"seconds_per_million", times(p.per_million)},
            {"low_weight", {{"count", p.low.count}, {"seconds_per_million", times(p.low.per_million)}}},
            {"high_weight", {{"count", p.high.count}, {"seconds_per_million", times(p.high.per_million)}}},
            {"mwpm_failures", p.mwpm_failures},
            {"bposd_failures", p.bposd_failures},
            {"pinned", p.pinned},
        });
    }
    doc["measured"] = measured;
    auto projection = nlohmann::ordered_json::array();
    for (const auto &r : rows) {
        projection.push_back({
            {"distance", r.distance},
            {"num_errors", format_error_count(r.num_errors)},
            {"decoder", r.decoder},
            {"probability", r.probability},
            {"t_per_million_s", r.t_per_million},
            {"single_core_s", r.single_core_seconds},
            {"cores", r.cores},
            {"multicore_s", r.multicore_seconds},
        });
    }
    doc["projection"] = projection;
    return doc.dump(2) + "\n";
}

std::string core_scaling_svg(int distance, double t_mwpm, double t_bposd, std::uint64_t marker_cores) {
    LinePlot plot;
    plot.title = fmt::format("Projected exhaustive run time, distance {}", distance);
    plot.x_label = "cores";
    plot.y_label = "time (s)";
    plot.log_x = true;
    plot.log_y = true;
    plot.marker_x = static_cast<double>(marker_cores);
    plot.marker_label = fmt::format("{} cores", marker_cores);
    std::string data = "cores,mwpm_s,bposd_s\n";
    Series mwpm{"MWPM", {}, {}}, bposd{"BPOSD", {}, {}};
    const double t1 = extrapolate_single_core(t_mwpm, distance);
    const double t2 = extrapolate_single_core(t_bposd, distance);
    for (int e = 0; e <= 7; e++) {
        auto cores = static_cast<std::uint64_t>(std::llround(std::pow(10.0, e)));
        double a = extrapolate_multicore(t1, cores);
        double b = extrapolate_multicore(t2, cores);
        mwpm.x.push_back(static_cast<double>(cores));
        mwpm.y.push_back(a);
        bposd.x.push_back(static_cast<double>(cores));
        bposd.y.push_back(b);
        data += fmt::format("{},{:.6e},{:.6e}\n", cores, a, b);
    }
    plot.series = {mwpm, bposd};
    plot.data_comment = data;
    return render_line_plot(plot);
}

}  // namespace surfdec
