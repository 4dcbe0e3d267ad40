// Copyright 2026 The causelab Authors
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

#ifndef CAUSELAB_DETERMINISTIC_SEARCH_H
#define CAUSELAB_DETERMINISTIC_SEARCH_H

#include <string>
#include <vector>

#include "causelab/consistency.h"
#include "causelab/errors.h"
#include "causelab/scenario.h"

namespace causelab {

/// Joint input i⃗(a⃗) received for every joint setting, under one process
/// function and one family of output maps g_k(a_k, i_k).
struct ResponsePattern {
    std::u32string inputs_for_setting;
    /// First (lexicographic) realization of this pattern.
    size_t function_index = 0;
    uint64_t output_family = 0;
};

/// Every distinct response pattern reachable by process functions of a
/// scenario, in order of first realization.
struct ResponsePatternSet {
    Scenario scenario;
    std::vector<QuasiProcessFunction> functions;
    std::vector<ResponsePattern> patterns;
    uint64_t output_families = 0;

    /// g_k tables of output family `index` (party 1's first entry most significant).
    std::vector<std::vector<uint32_t>> output_maps(uint64_t index) const;
};

/// Throws Error(SearchSpaceTooLarge) when functions × output families exceed
/// the enumeration cap.
ResponsePatternSet compute_response_patterns(const Scenario &scenario, const SearchLimits &limits, bool reduced);

/// A deterministic correlation reachable by a process function, with its
/// first realization.
struct DcVertex {
    std::vector<size_t> outcome_for_setting;
    size_t pattern_index = 0;
    /// h_k tables indexed by a_k*d_I + i_k.
    std::vector<std::vector<uint32_t>> outcome_maps;
};

/// All distinct deterministic correlations from (ω, deterministic intervention).
/// Throws Error(CapExceeded) once more than `limits.hull_vertex_cap` distinct
/// vertices are found.
std::vector<DcVertex> enumerate_dc_vertices(const ResponsePatternSet &patterns, const SearchLimits &limits);

}  // namespace causelab

#endif
