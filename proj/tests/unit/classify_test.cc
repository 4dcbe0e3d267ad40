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


#include "causelab/classify.h"

#include "generators.h"
#include "test_util.h"

using namespace causelab;

TEST(Classify, GyninPerfectIsProcessButAntinomic) {
    auto corr = gynin_perfect_correlation();
    auto label = classify(corr, {builtin_gynin()});
    EXPECT_EQ(label.pc.verdict, Membership::In);
    EXPECT_EQ(label.pc.method, "canonical");
    EXPECT_EQ(label.dc.verdict, Membership::Out);
    EXPECT_EQ(label.dc.method, "hull");
    EXPECT_EQ(label.dc.vertex_count, 54208u);
    EXPECT_GT(label.dc.functional_value, label.dc.functional_bound);
    ASSERT_EQ(label.dc.witnesses.size(), 1u);
    EXPECT_TRUE(label.dc.witnesses[0].violated);
    EXPECT_EQ(label.dc.witnesses[0].bound, Rational(5, 8));
    EXPECT_EQ(replay_certificates(corr, label), "");
}

TEST(Classify, GyniPerfectIsAntinomic) {
    auto corr = gyni_perfect_correlation();
    auto label = classify(corr, {builtin_gyni()});
    EXPECT_EQ(label.dc.verdict, Membership::Out);
    EXPECT_EQ(label.pc.verdict, Membership::Unknown);
    EXPECT_EQ(label.qc.verdict, Membership::In);
    EXPECT_EQ(replay_certificates(corr, label), "");
}

TEST(Classify, KnownPcBoundGivesPcOut) {
    Game g = builtin_gyni();
    Game with_bound(g.name(), g.scenario(), g.payoff(), g.settings_distribution(), Rational(1, 2));
    auto corr = gyni_perfect_correlation();
    auto label = classify(corr, {with_bound});
    EXPECT_EQ(label.pc.verdict, Membership::Out);
    EXPECT_EQ(label.pc.method, "witness");
    EXPECT_EQ(replay_certificates(corr, label), "");
}

TEST(Classify, PrBoxIsDcOut) {
    auto corr = pr_box_correlation();
    auto label = classify(corr, {builtin_chsh()});
    EXPECT_EQ(label.dc.verdict, Membership::Out);
    EXPECT_EQ(label.dc.witnesses[0].bound, Rational(3, 4));
    EXPECT_EQ(replay_certificates(corr, label), "");
}

TEST(Classify, RandomMixturesOfVerticesAreInside) {
    gen::Rng rng(31);
    Scenario s = Scenario::uniform(2, 2);
    auto set = compute_response_patterns(s, {}, true);
    auto vertices = enumerate_dc_vertices(set, {});
    for (int t = 0; t < 5; t++) {
        size_t k = gen::uniform(rng, 1, 4);
        auto w = gen::distribution(rng, k);
        Correlation corr = Correlation::zeros(s);
        for (size_t j = 0; j < k; j++) {
            const auto &v = vertices[gen::uniform(rng, 0, static_cast<uint32_t>(vertices.size() - 1))];
            for (size_t a = 0; a < v.outcome_for_setting.size(); a++) {
                corr.at(v.outcome_for_setting[a], a) += w[j];
            }
        }
        auto label = classify(corr, {});
        EXPECT_EQ(label.dc.verdict, Membership::In);
        EXPECT_EQ(label.pc.verdict, Membership::In);
        EXPECT_EQ(label.pc.method, "implied-by-dc");
        EXPECT_EQ(replay_certificates(corr, label), "");
    }
}

TEST(Classify, CapFallsBackToWitnesses) {
    SearchLimits tight;
    tight.hull_vertex_cap = 10;
    auto corr = gyni_perfect_correlation();
    auto label = classify(corr, {builtin_gyni()}, tight);
    EXPECT_TRUE(label.dc.cap_binding);
    EXPECT_EQ(label.dc.method, "witness");
    EXPECT_EQ(label.dc.verdict, Membership::Out);
    EXPECT_EQ(replay_certificates(corr, label), "");

    auto noise = classify(Correlation(corr.scenario(), std::vector<Rational>(16, Rational(1, 4))), {}, tight);
    EXPECT_EQ(noise.dc.verdict, Membership::Unknown);
}

TEST(Classify, TamperedCertificateFailsReplay) {
    auto corr = gyni_perfect_correlation();
    auto label = classify(corr, {builtin_gyni()});
    label.dc.functional_bound = label.dc.functional_value;
    EXPECT_NE(replay_certificates(corr, label), "");
}

TEST(Classify, RejectsInvalidCorrelation) {
    Correlation bad(Scenario::uniform(1, 2), {1, 1, 1, 0});
    EXPECT_ERROR_KIND(classify(bad, {}), ErrorKind::InvalidTable);
}
