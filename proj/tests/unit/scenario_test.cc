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


#include "causelab/scenario.h"

#include "generators.h"
#include "oracles.h"
#include "test_util.h"

using namespace causelab;

TEST(MixedRadix, FirstDigitMostSignificant) {
    MixedRadix r({2, 3, 2});
    EXPECT_EQ(r.size(), 12u);
    std::vector<uint32_t> d{1, 2, 0};
    EXPECT_EQ(r.flatten(d), 1u * 6 + 2 * 2 + 0);
    EXPECT_EQ(r.unflatten(10), (std::vector<uint32_t>{1, 2, 0}));
    for (size_t f = 0; f < r.size(); f++) {
        EXPECT_EQ(r.flatten(r.unflatten(f)), f);
        EXPECT_EQ(r.digit(f, 1), r.unflatten(f)[1]);
    }
    std::vector<uint32_t> bad{0, 3, 0};
    EXPECT_ERROR_KIND(r.flatten(bad), ErrorKind::DimensionMismatch);
    std::vector<uint32_t> short_index{0, 1};
    EXPECT_ERROR_KIND(r.flatten(short_index), ErrorKind::DimensionMismatch);
}

TEST(Scenario, RejectsDegenerateAlphabets) {
    EXPECT_ERROR_KIND(Scenario::make({}), ErrorKind::InvalidScenario);
    EXPECT_ERROR_KIND(Scenario::make({PartyAlphabet{2, 0, 1, 1}}), ErrorKind::InvalidScenario);
    EXPECT_ERROR_KIND(Scenario::uniform(0, 2), ErrorKind::InvalidScenario);
}

TEST(Scenario, CanonicalEnlargement) {
    Scenario s = Scenario::make({PartyAlphabet{4, 2, 1, 1}, PartyAlphabet{2, 3, 1, 1}});
    EXPECT_FALSE(s.canonicalizable());
    Scenario e = s.canonical_enlargement();
    EXPECT_TRUE(e.canonicalizable());
    EXPECT_EQ(e.party(0), (PartyAlphabet{4, 2, 2, 4}));
    EXPECT_EQ(e.party(1), (PartyAlphabet{2, 3, 3, 2}));
    EXPECT_ERROR_KIND(canonical_interventions(s), ErrorKind::NotCanonicalizable);
    EXPECT_TRUE(Scenario::uniform(3, 2).canonicalizable());
}

TEST(QuasiProcess, ValidatesTable) {
    Scenario s = Scenario::uniform(1, 2);
    EXPECT_ERROR_KIND(QuasiProcess(s, {1, 0, 0}), ErrorKind::DimensionMismatch);
    EXPECT_ERROR_KIND(QuasiProcess(s, {Rational(3, 2), 0, Rational(-1, 2), 1}), ErrorKind::InvalidTable);
    EXPECT_ERROR_KIND(QuasiProcess(s, {1, 1, 1, 0}), ErrorKind::InvalidTable);
    QuasiProcess ok(s, {Rational(1, 3), 1, Rational(2, 3), 0});
    EXPECT_EQ(ok.at(1, 0), Rational(2, 3));
}

TEST(LocalIntervention, ValidatesColumns) {
    PartyAlphabet p{1, 2, 1, 1};
    EXPECT_ERROR_KIND(LocalIntervention(p, {1}), ErrorKind::DimensionMismatch);
    EXPECT_ERROR_KIND(LocalIntervention(p, {Rational(1, 2), Rational(1, 3)}), ErrorKind::InvalidTable);
    EXPECT_ERROR_KIND(LocalIntervention(p, {2, -1}), ErrorKind::InvalidTable);
    Scenario s = Scenario::uniform(2, 2);
    LocalIntervention wrong(p, {Rational(1, 2), Rational(1, 2)});
    EXPECT_ERROR_KIND(InterventionFamily(s, {wrong, wrong}), ErrorKind::ScenarioMismatch);
    EXPECT_ERROR_KIND(InterventionFamily(Scenario::make({p}), {wrong, wrong}), ErrorKind::ScenarioMismatch);
}

TEST(Correlation, ValidationReportsEachViolation) {
    Scenario s = Scenario::make({PartyAlphabet{2, 2, 1, 1}});
    Correlation c(s, {Rational(1, 2), 1, Rational(1, 2), -1});
    auto report = validate_correlation(c);
    ASSERT_EQ(report.violations.size(), 2u);
    EXPECT_EQ(report.violations[0].kind, CorrelationViolation::Kind::Negative);
    EXPECT_EQ(report.violations[0].setting_index, 1u);
    EXPECT_EQ(report.violations[1].kind, CorrelationViolation::Kind::Normalization);
    EXPECT_EQ(report.violations[1].value, 0);
    EXPECT_EQ(c.masses(), (std::vector<Rational>{1, 0}));
    EXPECT_ERROR_KIND(universal_realization(c), ErrorKind::InvalidTable);
}

TEST(Evaluation, MatchesLiteralSumOnRandomInputs) {
    gen::Rng rng(11);
    for (int t = 0; t < 40; t++) {
        Scenario s = gen::binary_scenario(rng, 3);
        std::vector<Rational> table(s.inputs().size() * s.outputs().size());
        for (size_t o = 0; o < s.outputs().size(); o++) {
            auto d = gen::distribution(rng, s.inputs().size());
            for (size_t i = 0; i < d.size(); i++) {
                table[i * s.outputs().size() + o] = d[i];
            }
        }
        QuasiProcess p(s, table);
        auto family = gen::interventions(rng, s);
        EXPECT_EQ(evaluate_correlation(p, family).table(), oracle::evaluate(p, family));
    }
}

TEST(Evaluation, MultilinearInEachIntervention) {
    gen::Rng rng(5);
    Scenario s = Scenario::uniform(2, 2);
    for (int t = 0; t < 10; t++) {
        std::vector<Rational> table(16);
        for (size_t o = 0; o < 4; o++) {
            auto d = gen::distribution(rng, 4);
            for (size_t i = 0; i < 4; i++) {
                table[i * 4 + o] = d[i];
            }
        }
        QuasiProcess p(s, table);
        auto f1 = gen::interventions(rng, s);
        auto f2 = gen::interventions(rng, s);
        Rational lambda = Rational(gen::uniform(rng, 0, 7)) / 7;
        for (size_t k = 0; k < 2; k++) {
            std::vector<Rational> mixed(f1.party(k).table().size());
            for (size_t e = 0; e < mixed.size(); e++) {
                mixed[e] = lambda * f1.party(k).table()[e] + (1 - lambda) * f2.party(k).table()[e];
            }
            auto fm = f1.with_party_unchecked(k, LocalIntervention(s.party(k), mixed));
            auto fb = f1.with_party_unchecked(k, f2.party(k));
            auto lhs = evaluate_correlation(p, fm).table();
            auto a = evaluate_correlation(p, f1).table();
            auto b = evaluate_correlation(p, fb).table();
            for (size_t e = 0; e < lhs.size(); e++) {
                EXPECT_EQ(lhs[e], lambda * a[e] + (1 - lambda) * b[e]);
            }
            auto scaled = evaluate_correlation(p, f1.with_party_unchecked(k, f1.party(k).scaled_unchecked(3))).table();
            for (size_t e = 0; e < scaled.size(); e++) {
                EXPECT_EQ(scaled[e], 3 * a[e]);
            }
        }
    }
}

TEST(Evaluation, RejectsMismatchedFamily) {
    QuasiProcess p(Scenario::uniform(1, 2), {1, 0, 0, 1});
    auto other = canonical_interventions(Scenario::uniform(2, 2));
    EXPECT_ERROR_KIND(evaluate_correlation(p, other), ErrorKind::ScenarioMismatch);
}

TEST(UniversalRealization, ReproducesCorrelation) {
    gen::Rng rng(3);
    for (int t = 0; t < 20; t++) {
        Correlation c = gen::correlation(rng, gen::correlation_scenario(rng, 3, 3));
        auto r = universal_realization(c);
        EXPECT_TRUE(r.process.scenario().canonicalizable());
        EXPECT_EQ(evaluate_correlation(r.process, r.interventions).table(), c.table());
    }
}

TEST(StrategyInterventions, EncodeResponseFunctions) {
    Scenario s = Scenario::make({PartyAlphabet{2, 2, 1, 1}, PartyAlphabet{3, 2, 1, 1}});
    auto f = strategy_interventions(s);
    EXPECT_EQ(f.scenario().party(0).inputs, 4u);
    EXPECT_EQ(f.scenario().party(1).inputs, 8u);
    // Party 2, response i = 0b110: a=0 -> 1, a=1 -> 1, a=2 -> 0.
    EXPECT_EQ(f.party(1).at(1, 0, 0, 6), 1);
    EXPECT_EQ(f.party(1).at(1, 0, 1, 6), 1);
    EXPECT_EQ(f.party(1).at(0, 0, 2, 6), 1);
    EXPECT_ERROR_KIND(strategy_interventions(Scenario::uniform(1, 2)), ErrorKind::NotCanonicalizable);
    EXPECT_TRUE(is_nonsignaling_scenario(s));
}

TEST(DeterministicCorrelation, PlacesOnes) {
    Scenario s = Scenario::make({PartyAlphabet{2, 3, 1, 1}});
    std::vector<size_t> f{2, 0};
    auto c = deterministic_correlation(s, f);
    EXPECT_EQ(c.at(2, 0), 1);
    EXPECT_EQ(c.at(0, 1), 1);
    EXPECT_TRUE(validate_correlation(c).ok());
    std::vector<size_t> bad{1};
    EXPECT_ERROR_KIND(deterministic_correlation(s, bad), ErrorKind::DimensionMismatch);
}
