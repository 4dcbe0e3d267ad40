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


#include "causelab/deterministic_search.h"

#include <set>

#include "oracles.h"
#include "test_util.h"

using namespace causelab;

namespace {

std::vector<std::vector<size_t>> sorted_vertices(const std::vector<DcVertex> &vertices) {
    std::set<std::vector<size_t>> s;
    for (const auto &v : vertices) {
        s.insert(v.outcome_for_setting);
    }
    return {s.begin(), s.end()};
}

}  // namespace

TEST(ResponsePatterns, SinglePartyIsTrivial) {
    auto set = compute_response_patterns(Scenario::uniform(1, 2), {}, true);
    EXPECT_EQ(set.functions.size(), 2u);
    EXPECT_EQ(set.output_families, 16u);
    // ω constant 0 or 1: each setting receives that constant.
    EXPECT_EQ(set.patterns.size(), 2u);
    EXPECT_EQ(set.output_maps(0), (std::vector<std::vector<uint32_t>>{{0, 0, 0, 0}}));
    EXPECT_EQ(set.output_maps(1), (std::vector<std::vector<uint32_t>>{{0, 0, 0, 1}}));
}

TEST(DcVertices, CountsPerScenario) {
    for (auto [parties, expected] : {std::pair{1u, 4u}, std::pair{2u, 112u}}) {
        auto set = compute_response_patterns(Scenario::uniform(parties, 2), {}, true);
        EXPECT_EQ(enumerate_dc_vertices(set, {}).size(), expected);
    }
}

TEST(DcVertices, ThreePartyCount) {
    auto set = compute_response_patterns(Scenario::uniform(3, 2), {}, true);
    EXPECT_EQ(set.functions.size(), 744u);
    EXPECT_EQ(enumerate_dc_vertices(set, {}).size(), 54208u);
}

TEST(DcVertices, MatchOracleEnumeration) {
    for (size_t parties : {1, 2}) {
        Scenario s = Scenario::uniform(parties, 2);
        for (bool reduced : {true, false}) {
            auto set = compute_response_patterns(s, {}, reduced);
            EXPECT_EQ(sorted_vertices(enumerate_dc_vertices(set, {})), oracle::dc_vertices(s))
                << parties << " parties, reduced=" << reduced;
        }
    }
    Scenario trivial = Scenario::make({PartyAlphabet{2, 2, 1, 1}, PartyAlphabet{2, 2, 1, 1}});
    auto set = compute_response_patterns(trivial, {}, true);
    auto vertices = sorted_vertices(enumerate_dc_vertices(set, {}));
    EXPECT_EQ(vertices.size(), 16u);
    EXPECT_EQ(vertices, oracle::dc_vertices(trivial));
}

TEST(DcVertices, RealizationsReplay) {
    Scenario s = Scenario::uniform(2, 2);
    auto set = compute_response_patterns(s, {}, true);
    for (const auto &v : enumerate_dc_vertices(set, {})) {
        const auto &pattern = set.patterns[v.pattern_index];
        DeterministicIntervention det{set.output_maps(pattern.output_family), v.outcome_maps};
        auto corr = evaluate_correlation(quasiprocess_from_function(set.functions[pattern.function_index]),
                                         det.to_family(s));
        EXPECT_EQ(corr, deterministic_correlation(s, v.outcome_for_setting));
    }
}

TEST(DcVertices, Caps) {
    SearchLimits tight;
    tight.hull_vertex_cap = 50;
    auto set = compute_response_patterns(Scenario::uniform(2, 2), {}, true);
    EXPECT_ERROR_KIND(enumerate_dc_vertices(set, tight), ErrorKind::CapExceeded);
    tight.enumeration_cap = 10;
    EXPECT_ERROR_KIND(compute_response_patterns(Scenario::uniform(2, 2), tight, true),
                      ErrorKind::SearchSpaceTooLarge);
}
