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

#ifndef SURFDEC_REPORT_H
#define SURFDEC_REPORT_H

#include <string>

#include "surfdec/harness.h"

namespace surfdec {

/// {"mwpm_only": .., "bposd_only": .., "both": ..} and nothing else.
std::string venn_json(const ComparisonStats &stats);

/// Exclusive failures of each decoder per error weight, as grouped bars.
std::string exclusive_histogram_svg(const ComparisonStats &stats);

/// Exclusive-failure ratio per weight, one curve per decoder. Exact ratios
/// over C(d^2, w) for a complete exhaustive run, otherwise ratios over the
/// errors processed at each weight. Weights with no processed errors are
/// left out; with none at all the plot is empty.
std::string failure_ratio_svg(const ComparisonStats &stats);

std::string venn_svg(const ComparisonStats &stats);

}  // namespace surfdec

#endif
