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

#ifndef CAUSELAB_SCENARIO_H
#define CAUSELAB_SCENARIO_H

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "causelab/rational.h"

namespace causelab {

/// Alphabet sizes of one party: |A_k|, |X_k|, d_{I_k}, d_{O_k}.
struct PartyAlphabet {
    uint32_t settings = 1;
    uint32_t outcomes = 1;
    uint32_t inputs = 1;
    uint32_t outputs = 1;

    bool operator==(const PartyAlphabet &) const = default;
};

/// Row-major multi-index with the first digit most significant.
class MixedRadix {
   public:
    MixedRadix() = default;
    explicit MixedRadix(std::vector<uint32_t> dims);

    size_t size() const {
        return size_;
    }
    size_t rank() const {
        return dims_.size();
    }
    uint32_t dim(size_t k) const {
        return dims_[k];
    }
    size_t stride(size_t k) const {
        return strides_[k];
    }
    const std::vector<uint32_t> &dims() const {
        return dims_;
    }

    size_t flatten(std::span<const uint32_t> digits) const;
    std::vector<uint32_t> unflatten(size_t flat) const;
    uint32_t digit(size_t flat, size_t k) const {
        return static_cast<uint32_t>((flat / strides_[k]) % dims_[k]);
    }

   private:
    std::vector<uint32_t> dims_;
    std::vector<size_t> strides_;
    size_t size_ = 1;
};

/// Party count plus per-party alphabets. Every joint space (settings a⃗,
/// outcomes x⃗, inputs i⃗, outputs o⃗) is flattened with party 1 most significant.
class Scenario {
   public:
    Scenario() = default;

    /// Throws Error(InvalidScenario) on an empty party list or a zero cardinality.
    static Scenario make(std::vector<PartyAlphabet> parties);
    static Scenario uniform(size_t num_parties, uint32_t card);

    size_t num_parties() const {
        return parties_.size();
    }
    const PartyAlphabet &party(size_t k) const {
        return parties_[k];
    }
    const std::vector<PartyAlphabet> &parties() const {
        return parties_;
    }
    const MixedRadix &settings() const {
        return settings_;
    }
    const MixedRadix &outcomes() const {
        return outcomes_;
    }
    const MixedRadix &inputs() const {
        return inputs_;
    }
    const MixedRadix &outputs() const {
        return outputs_;
    }

    /// True when x_k = i_k, o_k = a_k is a well-typed intervention for every party.
    bool canonicalizable() const;
    /// Same settings/outcomes, with d_{I_k} = |X_k| and d_{O_k} = |A_k|.
    Scenario canonical_enlargement() const;

    bool operator==(const Scenario &other) const {
        return parties_ == other.parties_;
    }
    std::string str() const;

   private:
    std::vector<PartyAlphabet> parties_;
    MixedRadix settings_, outcomes_, inputs_, outputs_;
};

void require_same_scenario(const Scenario &a, const Scenario &b, const char *context);

/// p(x⃗|a⃗), stored at x⃗ * |A⃗| + a⃗. Entries are not forced to be normalized:
/// correlations evaluated from inconsistent quasi-processes stay representable.
class Correlation {
   public:
    Correlation() = default;
    Correlation(Scenario scenario, std::vector<Rational> table);
    static Correlation zeros(const Scenario &scenario);

    const Scenario &scenario() const {
        return scenario_;
    }
    const std::vector<Rational> &table() const {
        return table_;
    }
    const Rational &at(size_t x, size_t a) const {
        return table_[x * scenario_.settings().size() + a];
    }
    Rational &at(size_t x, size_t a) {
        return table_[x * scenario_.settings().size() + a];
    }
    /// Σ_x⃗ p(x⃗|a⃗) for every a⃗.
    std::vector<Rational> masses() const;

    bool operator==(const Correlation &) const = default;

   private:
    Scenario scenario_;
    std::vector<Rational> table_;
};

struct CorrelationViolation {
    enum class Kind { Negative, Normalization };
    Kind kind;
    size_t outcome_index;  // meaningful for Negative only
    size_t setting_index;
    Rational value;
};

struct CorrelationReport {
    std::vector<CorrelationViolation> violations;
    bool ok() const {
        return violations.empty();
    }
};

CorrelationReport validate_correlation(const Correlation &corr);

/// p(i⃗|o⃗), stored at i⃗ * d_O⃗ + o⃗. Construction enforces non-negativity and
/// per-o⃗ normalization.
class QuasiProcess {
   public:
    QuasiProcess() = default;
    QuasiProcess(Scenario scenario, std::vector<Rational> table);

    const Scenario &scenario() const {
        return scenario_;
    }
    const std::vector<Rational> &table() const {
        return table_;
    }
    const Rational &at(size_t i, size_t o) const {
        return table_[i * scenario_.outputs().size() + o];
    }

    bool operator==(const QuasiProcess &) const = default;

   private:
    Scenario scenario_;
    std::vector<Rational> table_;
};

/// One party's p(x_k,o_k|a_k,i_k); row (x_k, o_k) = x_k*d_O + o_k, column
/// (a_k, i_k) = a_k*d_I + i_k.
class LocalIntervention {
   public:
    LocalIntervention() = default;
    LocalIntervention(PartyAlphabet alphabet, std::vector<Rational> table);

    const PartyAlphabet &alphabet() const {
        return alphabet_;
    }
    const std::vector<Rational> &table() const {
        return table_;
    }
    size_t num_columns() const {
        return static_cast<size_t>(alphabet_.settings) * alphabet_.inputs;
    }
    const Rational &at(uint32_t x, uint32_t o, uint32_t a, uint32_t i) const {
        return table_[(static_cast<size_t>(x) * alphabet_.outputs + o) * num_columns() + a * alphabet_.inputs + i];
    }
    /// Multiplies every entry by `factor`, bypassing normalization (used for
    /// multilinearity checks).
    LocalIntervention scaled_unchecked(const Rational &factor) const;

    bool operator==(const LocalIntervention &) const = default;

   private:
    PartyAlphabet alphabet_;
    std::vector<Rational> table_;
};

class InterventionFamily {
   public:
    InterventionFamily() = default;
    InterventionFamily(Scenario scenario, std::vector<LocalIntervention> parties);

    const Scenario &scenario() const {
        return scenario_;
    }
    const LocalIntervention &party(size_t k) const {
        return parties_[k];
    }
    const std::vector<LocalIntervention> &parties() const {
        return parties_;
    }
    /// Replaces one party's table without checking normalization.
    InterventionFamily with_party_unchecked(size_t k, LocalIntervention local) const;

    bool operator==(const InterventionFamily &) const = default;

   private:
    Scenario scenario_;
    std::vector<LocalIntervention> parties_;
};

/// Output map g_k(a_k,i_k) and outcome map h_k(a_k,i_k) per party, indexed
/// by a_k*d_{I_k} + i_k.
struct DeterministicIntervention {
    std::vector<std::vector<uint32_t>> output_map;
    std::vector<std::vector<uint32_t>> outcome_map;

    InterventionFamily to_family(const Scenario &scenario) const;
    bool operator==(const DeterministicIntervention &) const = default;
};

/// Born-rule style evaluation: Σ_{i⃗,o⃗} Π_k p(x_k,o_k|a_k,i_k) p(i⃗|o⃗).
/// The result is not renormalized; inspect Correlation::masses().
Correlation evaluate_correlation(const QuasiProcess &process, const InterventionFamily &interventions);

/// x_k = i_k and o_k = a_k for every party. Throws Error(NotCanonicalizable).
InterventionFamily canonical_interventions(const Scenario &scenario);

/// True when every d_{O_k} = 1, so no party can signal through the process.
bool is_nonsignaling_scenario(const Scenario &scenario);

/// For a scenario with trivial outputs: inputs enlarged to d_{I_k} = |X_k|^{|A_k|}
/// so that i_k encodes a local response function, read off as
/// x_k = digit a_k of i_k (base |X_k|, a_k = 0 most significant).
/// Throws Error(NotCanonicalizable) if some d_{O_k} != 1.
InterventionFamily strategy_interventions(const Scenario &scenario);

struct Realization {
    QuasiProcess process;
    InterventionFamily interventions;
};

/// Encodes p(x⃗|a⃗) as p(i⃗=x⃗|o⃗=a⃗) on the canonical enlargement, paired
/// with canonical interventions. Throws Error(InvalidTable) for invalid input.
Realization universal_realization(const Correlation &corr);

/// Deterministic correlation p(x⃗|a⃗) = δ_{x⃗, f(a⃗)} from a setting→outcome map.
Correlation deterministic_correlation(const Scenario &scenario, std::span<const size_t> outcome_for_setting);

}  // namespace causelab

#endif
