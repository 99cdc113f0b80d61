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

#include "surfdec/threshold.h"

#include <fmt/format.h>

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string_view>

#include "surfdec/errors.h"
#include "surfdec/harness.h"
#include "surfdec/parallel.h"
#include "surfdec/svg_plot.h"

namespace surfdec {

namespace {

constexpr std::size_t kShotBlock = 4096;
constexpr double kZ95 = 1.959963984540054;
constexpr std::string_view kMagic = "# surfdec-threshold v";

std::mt19937_64 block_rng(std::uint64_t seed, std::uint64_t block, int distance, double p) {
    auto pbits = std::bit_cast<std::uint64_t>(p);
    std::seed_seq seq{
        static_cast<std::uint32_t>(seed),
        static_cast<std::uint32_t>(seed >> 32),
        static_cast<std::uint32_t>(block),
        static_cast<std::uint32_t>(block >> 32),
        static_cast<std::uint32_t>(distance),
        static_cast<std::uint32_t>(pbits),
        static_cast<std::uint32_t>(pbits >> 32)};
    return std::mt19937_64(seq);
}

bool bernoulli(std::mt19937_64 &rng, double p) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

// Counts failures for one range of shot blocks.
class ShotRunner {
   public:
    ShotRunner(const SurfaceCode &code, const DecoderFactory &factory, const std::vector<std::uint8_t> *cache)
        : code_(code), cache_(cache), syndrome_(code.num_checks()), error_(code.num_data()) {
        if (cache_ == nullptr) {
            decoder_ = factory();
        }
    }

    std::uint64_t run(std::uint64_t seed, std::uint64_t block, std::size_t count, double p) {
        auto rng = block_rng(seed, block, code_.distance(), p);
        const std::size_t n = code_.num_data();
        std::uint64_t failures = 0;
        for (std::size_t s = 0; s < count; s++) {
            if (code_.fits_word()) {
                std::uint64_t e = 0;
                for (std::size_t q = 0; q < n; q++) {
                    e |= static_cast<std::uint64_t>(bernoulli(rng, p)) << q;
                }
                failures += fails_word(e) ? 1 : 0;
            } else {
                error_.clear();
                for (std::size_t q = 0; q < n; q++) {
                    if (bernoulli(rng, p)) {
                        error_.flip(q);
                    }
                }
                auto syndrome = code_.syndrome_of(error_);
                decoder_->decode_into(syndrome, out_);
                error_ ^= out_.correction;
                failures += error_.dot(code_.logical_z_mask()) ? 1 : 0;
            }
        }
        return failures;
    }

   private:
    bool fails_word(std::uint64_t e) {
        if (e == 0) {
            return false;
        }
        auto s = code_.syndrome_of(e);
        bool flip;
        if (cache_ != nullptr) {
            flip = (*cache_)[s] != 0;
        } else {
            syndrome_.words()[0] = s;
            decoder_->decode_into(syndrome_, out_);
            flip = out_.correction.dot(code_.logical_z_mask());
        }
        return code_.logical_flip(e) != flip;
    }

    const SurfaceCode &code_;
    const std::vector<std::uint8_t> *cache_;
    std::unique_ptr<Decoder> decoder_;
    BitString syndrome_;
    BitString error_;
    DecodeOutcome out_;
};

// Logical parity of the correction chosen for every syndrome.
std::vector<std::uint8_t> build_flip_cache(const SurfaceCode &code, const DecoderFactory &factory, unsigned workers) {
    const std::uint64_t count = std::uint64_t{1} << code.num_checks();
    std::vector<std::uint8_t> flips(count);
    parallel_chunks(workers, count, [&](unsigned, std::uint64_t begin, std::uint64_t end) {
        auto decoder = factory();
        BitString syndrome(code.num_checks());
        DecodeOutcome out;
        for (auto s = begin; s < end; s++) {
            syndrome.words()[0] = s;
            decoder->decode_into(syndrome, out);
            if (code.syndrome_of(out.correction) != syndrome) {
                throw std::logic_error("decoder correction does not reproduce its syndrome");
            }
            flips[s] = out.correction.dot(code.logical_z_mask()) ? 1 : 0;
        }
    });
    return flips;
}

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

[[noreturn]] void fail(FileErrorKind kind, const std::string &source, const std::string &what) {
    throw FileError(kind, source + ": " + what);
}

template <typename T>
T parse_number(std::string_view field, const std::string &source, std::size_t line) {
    T value{};
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (field.empty() || ec != std::errc() || ptr != field.data() + field.size()) {
        fail(FileErrorKind::Format, source, fmt::format("line {}: '{}' is not a number", line, field));
    }
    return value;
}

}  // namespace

std::pair<double, double> wilson_interval(std::uint64_t k, std::uint64_t n) {
    if (n == 0) {
        return {0.0, 1.0};
    }
    const double nn = static_cast<double>(n);
    const double phat = static_cast<double>(k) / nn;
    const double z2 = kZ95 * kZ95;
    const double denom = 1 + z2 / nn;
    const double centre = (phat + z2 / (2 * nn)) / denom;
    const double half = kZ95 * std::sqrt(phat * (1 - phat) / nn + z2 / (4 * nn * nn)) / denom;
    return {std::clamp(centre - half, 0.0, phat), std::clamp(centre + half, phat, 1.0)};
}

ThresholdPoint logical_error_rate(
    const std::shared_ptr<const SurfaceCode> &code,
    DecoderKind kind,
    double p,
    std::uint64_t shots,
    std::uint64_t seed,
    const ThresholdOptions &options) {
    if (!(p >= 0 && p < 1)) {
        throw std::invalid_argument("p must lie in [0, 1)");
    }
    if (shots < 1) {
        throw std::invalid_argument("at least one shot is required");
    }
    ThresholdPoint point;
    point.distance = code->distance();
    point.p = p;
    point.shots = shots;

    DecoderConfig config;
    config.error_probability = std::clamp(p, 1e-9, 1 - 1e-9);
    config.bp_max_iterations = options.bp_max_iterations;
    auto factory = decoder_factory(kind, code, config);
    const unsigned workers = resolve_workers(options.workers);

    std::vector<std::uint8_t> cache;
    const bool use_cache = options.syndrome_cache && code->num_checks() <= kSyndromeCacheMaxChecks && p > 0;
    if (use_cache) {
        cache = build_flip_cache(*code, factory, workers);
    }

    const std::uint64_t num_blocks = (shots + kShotBlock - 1) / kShotBlock;
    std::vector<std::uint64_t> failures(workers, 0);
    if (p > 0) {
        parallel_chunks(workers, num_blocks, [&](unsigned w, std::uint64_t begin, std::uint64_t end) {
            ShotRunner runner(*code, factory, use_cache ? &cache : nullptr);
            for (auto b = begin; b < end; b++) {
                auto count = static_cast<std::size_t>(std::min<std::uint64_t>(kShotBlock, shots - b * kShotBlock));
                failures[w] += runner.run(seed, b, count, p);
            }
        });
    }
    for (auto f : failures) {
        point.failures += f;
    }
    point.rate = static_cast<double>(point.failures) / static_cast<double>(shots);
    std::tie(point.lo, point.hi) = wilson_interval(point.failures, shots);
    return point;
}

std::vector<ThresholdPoint> threshold_sweep(
    DecoderKind kind,
    const std::vector<int> &distances,
    const std::vector<double> &p_grid,
    std::uint64_t shots,
    std::uint64_t seed,
    const ThresholdOptions &options) {
    std::vector<ThresholdPoint> points;
    for (int d : distances) {
        auto code = std::make_shared<const SurfaceCode>(d);
        for (double p : p_grid) {
            points.push_back(logical_error_rate(code, kind, p, shots, seed, options));
        }
    }
    return points;
}

std::vector<double> default_p_grid() {
    return {0.06, 0.08, 0.10, 0.12, 0.14, 0.16};
}

CrossingResult find_crossing(const std::vector<ThresholdPoint> &points) {
    std::map<int, std::map<double, double>> curves;
    for (const auto &pt : points) {
        curves[pt.distance][pt.p] = pt.rate;
    }
    if (curves.size() < 2) {
        throw std::invalid_argument("a crossing needs points at two or more distances");
    }
    CrossingResult result;
    result.found = true;
    std::vector<double> found;
    for (auto it = curves.begin(); std::next(it) != curves.end(); ++it) {
        const auto &low = it->second;
        const auto &high = std::next(it)->second;
        PairCrossing pair;
        pair.lower_distance = it->first;
        pair.upper_distance = std::next(it)->first;
        std::vector<std::pair<double, double>> diff;
        for (const auto &[p, rate] : low) {
            auto h = high.find(p);
            if (h != high.end()) {
                diff.emplace_back(p, h->second - rate);
            }
        }
        if (diff.size() < 2) {
            throw std::invalid_argument(fmt::format(
                "distances {} and {} share fewer than two p values", pair.lower_distance, pair.upper_distance));
        }
        for (std::size_t k = 1; k < diff.size(); k++) {
            auto [p0, f0] = diff[k - 1];
            auto [p1, f1] = diff[k];
            if (f0 < 0 && f1 >= 0) {
                pair.found = true;
                pair.p = f1 == 0 ? p1 : p0 + (p1 - p0) * (-f0) / (f1 - f0);
                break;
            }
        }
        if (pair.found) {
            found.push_back(pair.p);
        } else {
            result.found = false;
        }
        result.pairs.push_back(pair);
    }
    if (result.found) {
        double sum = 0;
        for (double p : found) {
            sum += p;
        }
        result.estimate = sum / static_cast<double>(found.size());
        auto [mn, mx] = std::minmax_element(found.begin(), found.end());
        result.spread = *mx - *mn;
        result.message = fmt::format("crossing at p = {:.4f} (spread {:.4f})", result.estimate, result.spread);
    } else {
        result.message = "no crossing in range";
    }
    return result;
}

std::string threshold_to_csv(const std::vector<ThresholdPoint> &points, const ThresholdRunInfo &info) {
    std::string out = fmt::format(
        "{}{} decoder={} seed={} workers={}\n{}\n", kMagic, kThresholdCsvVersion, info.decoder, info.seed,
        info.workers, kThresholdCsvHeader);
    for (const auto &pt : points) {
        out += fmt::format(
            "{},{},{},{},{},{},{}\n", pt.distance, pt.p, pt.shots, pt.failures, pt.rate, pt.lo, pt.hi);
    }
    return out;
}

std::vector<ThresholdPoint> threshold_from_csv(const std::string &text, const std::string &source) {
    std::vector<std::string_view> lines;
    for (auto line : split(text, '\n')) {
        if (!line.empty() && line.back() == '\r') {
            line.remove_suffix(1);
        }
        lines.push_back(line);
    }
    while (!lines.empty() && lines.back().empty()) {
        lines.pop_back();
    }
    if (lines.empty()) {
        fail(FileErrorKind::Truncated, source, "empty threshold file");
    }
    if (lines[0].substr(0, kMagic.size()) != kMagic) {
        fail(FileErrorKind::Format, source, "missing '# surfdec-threshold v<N>' version line");
    }
    auto meta = split(lines[0].substr(kMagic.size()), ' ');
    if (parse_number<int>(meta[0], source, 1) != kThresholdCsvVersion) {
        fail(FileErrorKind::Version, source, fmt::format("unsupported threshold format version {}", meta[0]));
    }
    if (lines.size() < 2) {
        fail(FileErrorKind::Truncated, source, "missing header line");
    }
    if (lines[1] != kThresholdCsvHeader) {
        fail(FileErrorKind::Format, source, fmt::format("expected header '{}'", kThresholdCsvHeader));
    }
    std::vector<ThresholdPoint> points;
    for (std::size_t i = 2; i < lines.size(); i++) {
        auto f = split(lines[i], ',');
        if (f.size() != 7) {
            fail(FileErrorKind::Format, source, fmt::format("line {}: expected 7 fields", i + 1));
        }
        ThresholdPoint pt;
        pt.distance = parse_number<int>(f[0], source, i + 1);
        pt.p = parse_number<double>(f[1], source, i + 1);
        pt.shots = parse_number<std::uint64_t>(f[2], source, i + 1);
        pt.failures = parse_number<std::uint64_t>(f[3], source, i + 1);
        pt.rate = parse_number<double>(f[4], source, i + 1);
        pt.lo = parse_number<double>(f[5], source, i + 1);
        pt.hi = parse_number<double>(f[6], source, i + 1);
        if (pt.failures > pt.shots || !(pt.lo <= pt.rate && pt.rate <= pt.hi)) {
            fail(FileErrorKind::Format, source, fmt::format("line {}: inconsistent counts", i + 1));
        }
        points.push_back(pt);
    }
    return points;
}

std::string threshold_svg(
    const std::vector<ThresholdPoint> &points, const CrossingResult &crossing, const std::string &decoder) {
    LinePlot plot;
    plot.title = fmt::format("Logical error rate, {}", decoder);
    plot.x_label = "physical error rate p";
    plot.y_label = "logical error rate";
    plot.log_y = true;
    std::map<int, Series> by_distance;
    for (const auto &pt : points) {
        auto &s = by_distance[pt.distance];
        s.label = fmt::format("d = {}", pt.distance);
        s.x.push_back(pt.p);
        s.y.push_back(pt.rate);
    }
    for (auto &[d, s] : by_distance) {
        plot.series.push_back(s);
    }
    if (crossing.found) {
        plot.marker_x = crossing.estimate;
        plot.marker_label = fmt::format("p = {:.4f}", crossing.estimate);
    }
    plot.data_comment = std::string(kThresholdCsvHeader) + "\n";
    for (const auto &pt : points) {
        plot.data_comment += fmt::format(
            "{},{},{},{},{},{},{}\n", pt.distance, pt.p, pt.shots, pt.failures, pt.rate, pt.lo, pt.hi);
    }
    return render_line_plot(plot);
}

}  // namespace surfdec
