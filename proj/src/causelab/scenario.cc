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

#include <sstream>

#include "causelab/errors.h"

namespace causelab {

// Joint alphabets are meant to stay at desk scale.
static constexpr size_t MAX_JOINT_SIZE = size_t{1} << 24;

MixedRadix::MixedRadix(std::vector<uint32_t> dims) : dims_(std::move(dims)), strides_(dims_.size()) {
    size_ = 1;
    for (size_t k = dims_.size(); k-- > 0;) {
        strides_[k] = size_;
        size_ *= dims_[k];
        if (size_ > MAX_JOINT_SIZE) {
            throw Error(ErrorKind::InvalidScenario, "joint alphabet too large");
        }
    }
}

size_t MixedRadix::flatten(std::span<const uint32_t> digits) const {
    if (digits.size() != dims_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "multi-index has wrong rank");
    }
    size_t flat = 0;
    for (size_t k = 0; k < digits.size(); k++) {
        if (digits[k] >= dims_[k]) {
            throw Error(ErrorKind::DimensionMismatch, "multi-index digit out of range");
        }
        flat += digits[k] * strides_[k];
    }
    return flat;
}

std::vector<uint32_t> MixedRadix::unflatten(size_t flat) const {
    std::vector<uint32_t> out(dims_.size());
    for (size_t k = 0; k < dims_.size(); k++) {
        out[k] = digit(flat, k);
    }
    return out;
}

Scenario Scenario::make(std::vector<PartyAlphabet> parties) {
    if (parties.empty()) {
        throw Error(ErrorKind::InvalidScenario, "a scenario needs at least one party");
    }
    std::vector<uint32_t> a, x, i, o;
    for (size_t k = 0; k < parties.size(); k++) {
        const auto &p = parties[k];
        if (p.settings == 0 || p.outcomes == 0 || p.inputs == 0 || p.outputs == 0) {
            throw Error(ErrorKind::InvalidScenario, "party " + std::to_string(k + 1) + " has a zero cardinality");
        }
        a.push_back(p.settings);
        x.push_back(p.outcomes);
        i.push_back(p.inputs);
        o.push_back(p.outputs);
    }
    Scenario s;
    s.parties_ = std::move(parties);
    s.settings_ = MixedRadix(std::move(a));
    s.outcomes_ = MixedRadix(std::move(x));
    s.inputs_ = MixedRadix(std::move(i));
    s.outputs_ = MixedRadix(std::move(o));
    return s;
}

Scenario Scenario::uniform(size_t num_parties, uint32_t card) {
    return make(std::vector<PartyAlphabet>(num_parties, PartyAlphabet{card, card, card, card}));
}

bool Scenario::canonicalizable() const {
    for (const auto &p : parties_) {
        if (p.outcomes != p.inputs || p.outputs != p.settings) {
            return false;
        }
    }
    return true;
}

Scenario Scenario::canonical_enlargement() const {
    auto parties = parties_;
    for (auto &p : parties) {
        p.inputs = p.outcomes;
        p.outputs = p.settings;
    }
    return make(std::move(parties));
}

std::string Scenario::str() const {
    std::stringstream out;
    out << "Scenario(" << parties_.size() << " parties;";
    for (const auto &p : parties_) {
        out << " [A=" << p.settings << " X=" << p.outcomes << " I=" << p.inputs << " O=" << p.outputs << "]";
    }
    out << ")";
    return out.str();
}

void require_same_scenario(const Scenario &a, const Scenario &b, const char *context) {
    if (!(a == b)) {
        throw Error(ErrorKind::ScenarioMismatch, std::string(context) + ": " + a.str() + " vs " + b.str());
    }
}

Correlation::Correlation(Scenario scenario, std::vector<Rational> table)
    : scenario_(std::move(scenario)), table_(std::move(table)) {
    if (table_.size() != scenario_.outcomes().size() * scenario_.settings().size()) {
        throw Error(ErrorKind::DimensionMismatch, "correlation table has the wrong size");
    }
}

Correlation Correlation::zeros(const Scenario &scenario) {
    return Correlation(scenario, std::vector<Rational>(scenario.outcomes().size() * scenario.settings().size()));
}

std::vector<Rational> Correlation::masses() const {
    size_t na = scenario_.settings().size();
    std::vector<Rational> mass(na);
    for (size_t x = 0; x < scenario_.outcomes().size(); x++) {
        for (size_t a = 0; a < na; a++) {
            mass[a] += table_[x * na + a];
        }
    }
    return mass;
}

CorrelationReport validate_correlation(const Correlation &corr) {
    CorrelationReport report;
    size_t na = corr.scenario().settings().size();
    size_t nx = corr.scenario().outcomes().size();
    for (size_t x = 0; x < nx; x++) {
        for (size_t a = 0; a < na; a++) {
            if (sgn(corr.at(x, a)) < 0) {
                report.violations.push_back({CorrelationViolation::Kind::Negative, x, a, corr.at(x, a)});
            }
        }
    }
    auto mass = corr.masses();
    for (size_t a = 0; a < na; a++) {
        if (mass[a] != 1) {
            report.violations.push_back({CorrelationViolation::Kind::Normalization, 0, a, mass[a]});
        }
    }
    return report;
}

QuasiProcess::QuasiProcess(Scenario scenario, std::vector<Rational> table)
    : scenario_(std::move(scenario)), table_(std::move(table)) {
    size_t ni = scenario_.inputs().size();
    size_t no = scenario_.outputs().size();
    if (table_.size() != ni * no) {
        throw Error(ErrorKind::DimensionMismatch, "quasi-process table has the wrong size");
    }
    for (size_t o = 0; o < no; o++) {
        Rational mass = 0;
        for (size_t i = 0; i < ni; i++) {
            const auto &v = table_[i * no + o];
            if (sgn(v) < 0) {
                throw Error(ErrorKind::InvalidTable, "quasi-process entry (" + std::to_string(i) + "," +
                                                         std::to_string(o) + ") is negative");
            }
            mass += v;
        }
        if (mass != 1) {
            throw Error(ErrorKind::InvalidTable, "quasi-process column o=" + std::to_string(o) + " has mass " +
                                                     format_rational(mass));
        }
    }
}

LocalIntervention::LocalIntervention(PartyAlphabet alphabet, std::vector<Rational> table)
    : alphabet_(alphabet), table_(std::move(table)) {
    size_t rows = static_cast<size_t>(alphabet_.outcomes) * alphabet_.outputs;
    size_t cols = num_columns();
    if (table_.size() != rows * cols) {
        throw Error(ErrorKind::DimensionMismatch, "intervention table has the wrong size");
    }
    for (size_t c = 0; c < cols; c++) {
        Rational mass = 0;
        for (size_t r = 0; r < rows; r++) {
            const auto &v = table_[r * cols + c];
            if (sgn(v) < 0) {
                throw Error(ErrorKind::InvalidTable, "intervention entry is negative");
            }
            mass += v;
        }
        if (mass != 1) {
            throw Error(ErrorKind::InvalidTable, "intervention column " + std::to_string(c) + " has mass " +
                                                     format_rational(mass));
        }
    }
}

LocalIntervention LocalIntervention::scaled_unchecked(const Rational &factor) const {
    LocalIntervention out;
    out.alphabet_ = alphabet_;
    out.table_ = table_;
    for (auto &v : out.table_) {
        v *= factor;
    }
    return out;
}

InterventionFamily::InterventionFamily(Scenario scenario, std::vector<LocalIntervention> parties)
    : scenario_(std::move(scenario)), parties_(std::move(parties)) {
    if (parties_.size() != scenario_.num_parties()) {
        throw Error(ErrorKind::ScenarioMismatch, "intervention family has the wrong number of parties");
    }
    for (size_t k = 0; k < parties_.size(); k++) {
        if (!(parties_[k].alphabet() == scenario_.party(k))) {
            throw Error(ErrorKind::ScenarioMismatch,
                        "intervention of party " + std::to_string(k + 1) + " does not match the scenario");
        }
    }
}

InterventionFamily InterventionFamily::with_party_unchecked(size_t k, LocalIntervention local) const {
    InterventionFamily out = *this;
    out.parties_.at(k) = std::move(local);
    return out;
}

InterventionFamily DeterministicIntervention::to_family(const Scenario &scenario) const {
    if (output_map.size() != scenario.num_parties() || outcome_map.size() != scenario.num_parties()) {
        throw Error(ErrorKind::ScenarioMismatch, "deterministic intervention has the wrong number of parties");
    }
    std::vector<LocalIntervention> parties;
    for (size_t k = 0; k < scenario.num_parties(); k++) {
        const auto &p = scenario.party(k);
        size_t cols = static_cast<size_t>(p.settings) * p.inputs;
        if (output_map[k].size() != cols || outcome_map[k].size() != cols) {
            throw Error(ErrorKind::DimensionMismatch, "deterministic intervention map has the wrong size");
        }
        std::vector<Rational> table(static_cast<size_t>(p.outcomes) * p.outputs * cols);
        for (size_t c = 0; c < cols; c++) {
            uint32_t o = output_map[k][c];
            uint32_t x = outcome_map[k][c];
            if (o >= p.outputs || x >= p.outcomes) {
                throw Error(ErrorKind::DimensionMismatch, "deterministic intervention value out of range");
            }
            table[(static_cast<size_t>(x) * p.outputs + o) * cols + c] = 1;
        }
        parties.emplace_back(p, std::move(table));
    }
    return InterventionFamily(scenario, std::move(parties));
}

Correlation evaluate_correlation(const QuasiProcess &process, const InterventionFamily &interventions) {
    const Scenario &s = process.scenario();
    require_same_scenario(s, interventions.scenario(), "evaluate_correlation");
    size_t n = s.num_parties();
    size_t na = s.settings().size();
    size_t nx = s.outcomes().size();
    size_t ni = s.inputs().size();
    size_t no = s.outputs().size();

    Correlation out = Correlation::zeros(s);
    std::vector<uint32_t> ad(n), id(n), od(n);
    Rational term;
    for (size_t i = 0; i < ni; i++) {
        for (size_t k = 0; k < n; k++) {
            id[k] = s.inputs().digit(i, k);
        }
        for (size_t o = 0; o < no; o++) {
            const Rational &w = process.at(i, o);
            if (is_zero(w)) {
                continue;
            }
            for (size_t k = 0; k < n; k++) {
                od[k] = s.outputs().digit(o, k);
            }
            for (size_t a = 0; a < na; a++) {
                for (size_t k = 0; k < n; k++) {
                    ad[k] = s.settings().digit(a, k);
                }
                for (size_t x = 0; x < nx; x++) {
                    term = w;
                    for (size_t k = 0; k < n && !is_zero(term); k++) {
                        term *= interventions.party(k).at(s.outcomes().digit(x, k), od[k], ad[k], id[k]);
                    }
                    if (!is_zero(term)) {
                        out.at(x, a) += term;
                    }
                }
            }
        }
    }
    return out;
}

InterventionFamily canonical_interventions(const Scenario &scenario) {
    if (!scenario.canonicalizable()) {
        throw Error(ErrorKind::NotCanonicalizable,
                    "canonical interventions need outcomes = inputs and outputs = settings per party: " +
                        scenario.str());
    }
    DeterministicIntervention det;
    for (const auto &p : scenario.parties()) {
        std::vector<uint32_t> g, h;
        for (uint32_t a = 0; a < p.settings; a++) {
            for (uint32_t i = 0; i < p.inputs; i++) {
                g.push_back(a);
                h.push_back(i);
            }
        }
        det.output_map.push_back(std::move(g));
        det.outcome_map.push_back(std::move(h));
    }
    return det.to_family(scenario);
}

bool is_nonsignaling_scenario(const Scenario &scenario) {
    for (const auto &p : scenario.parties()) {
        if (p.outputs != 1) {
            return false;
        }
    }
    return true;
}

InterventionFamily strategy_interventions(const Scenario &scenario) {
    if (!is_nonsignaling_scenario(scenario)) {
        throw Error(ErrorKind::NotCanonicalizable, "strategy interventions need d_O = 1 for every party: " +
                                                       scenario.str());
    }
    std::vector<PartyAlphabet> parties;
    for (const auto &p : scenario.parties()) {
        uint64_t d = 1;
        for (uint32_t a = 0; a < p.settings; a++) {
            d *= p.outcomes;
            if (d > MAX_JOINT_SIZE) {
                throw Error(ErrorKind::SearchSpaceTooLarge, "too many local response functions");
            }
        }
        parties.push_back(PartyAlphabet{p.settings, p.outcomes, static_cast<uint32_t>(d), 1});
    }
    Scenario enlarged = Scenario::make(std::move(parties));
    DeterministicIntervention det;
    for (const auto &p : enlarged.parties()) {
        std::vector<uint32_t> g, h;
        for (uint32_t a = 0; a < p.settings; a++) {
            for (uint32_t i = 0; i < p.inputs; i++) {
                uint32_t digit = i;
                for (uint32_t b = a + 1; b < p.settings; b++) {
                    digit /= p.outcomes;
                }
                g.push_back(0);
                h.push_back(digit % p.outcomes);
            }
        }
        det.output_map.push_back(std::move(g));
        det.outcome_map.push_back(std::move(h));
    }
    return det.to_family(enlarged);
}

Realization universal_realization(const Correlation &corr) {
    auto report = validate_correlation(corr);
    if (!report.ok()) {
        throw Error(ErrorKind::InvalidTable, "universal realization needs a valid correlation");
    }
    Scenario enlarged = corr.scenario().canonical_enlargement();
    // With d_I⃗ = |X⃗| and d_O⃗ = |A⃗| the (i⃗, o⃗) layout coincides with (x⃗, a⃗).
    QuasiProcess process(enlarged, corr.table());
    return Realization{std::move(process), canonical_interventions(enlarged)};
}

Correlation deterministic_correlation(const Scenario &scenario, std::span<const size_t> outcome_for_setting) {
    if (outcome_for_setting.size() != scenario.settings().size()) {
        throw Error(ErrorKind::DimensionMismatch, "deterministic correlation map has the wrong size");
    }
    Correlation out = Correlation::zeros(scenario);
    for (size_t a = 0; a < outcome_for_setting.size(); a++) {
        out.at(outcome_for_setting[a], a) = 1;
    }
    return out;
}

}  // namespace causelab
