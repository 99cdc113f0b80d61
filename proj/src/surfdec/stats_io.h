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

#ifndef SURFDEC_STATS_IO_H
#define SURFDEC_STATS_IO_H

#include <string>
#include <string_view>

#include "surfdec/harness.h"

namespace surfdec {

inline constexpr int kStatsCsvVersion = 1;
inline constexpr std::string_view kStatsCsvHeader = "weight,total,mwpm_only_fail,bposd_only_fail,both_fail";

/// Per-weight counters as CSV.
///
///     # surfdec-stats v1 distance=5 mode=exhaustive
///     weight,total,mwpm_only_fail,bposd_only_fail,both_fail
///     0,1,0,0,0
///     ...
///
/// One row per weight 0..d^2, in order. Example lists are not part of the
/// CSV; they travel in the JSON form.
std::string stats_to_csv(const ComparisonStats &stats);

/// Throws FileError: Version for another format version, Truncated for
/// missing lines, Format for anything else malformed (unknown columns, bad
/// numbers, out-of-order weights, counts violating the per-weight bounds).
/// `source` names the input in messages.
ComparisonStats stats_from_csv(std::string_view text, const std::string &source = "<stats>");

void save_stats_csv(const ComparisonStats &stats, const std::string &path);
ComparisonStats load_stats_csv(const std::string &path);

/// {distance, mode, total_errors, per_weight, venn, examples} as JSON.
std::string stats_to_json(const ComparisonStats &stats);

}  // namespace surfdec

#endif
