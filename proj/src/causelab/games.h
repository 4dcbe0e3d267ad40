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

#ifndef CAUSELAB_GAMES_H
#define CAUSELAB_GAMES_H

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "causelab/consistency.h"
#include "causelab/errors.h"
#include "causelab/scenario.h"

namespace causelab {

/// Payoff over (x⃗, a⃗), stored at x⃗ * |A⃗| + a⃗, plus a distribution over a⃗.
class Game {
   public:
    Game() = default;
    /// Throws Error(InvalidTable) unless the setting distribution is
    /// non-negative and sums to 1.
    Game(std::string name, Scenario scenario, std::vector<Rational> payoff, std::vector<Rational> settings_distribution,
         std::optional<Rational> known_pc_bound = std::nullopt);

    const std::string &name() const {
        return name_;
    }
    const Scenario &scenario() const {
        return scenario_;
    }
    const std::vector<Rational> &payoff() const {
        return payoff_;
    }
    const std::vector<Rational> &settings_distribution() const {
        return settings_;
    }
    /// An externally established upper bound on the full classical-process
    /// value, if one is known. Used only as a PC-out witness.
    const std::optional<Rational> &known_pc_bound() const {
        return known_pc_bound_;
    }
    /// payoff(x⃗,a⃗) * p(a⃗), same layout as the payoff.
    const std::vector<Rational> &weights() const {
        return weights_;
    }
    /// Σ_a⃗ max_x⃗ weight: the value over all correlations.
    Rational max_score() const;

    /// Same game on a scenario with other input/output dimensions.
    Game with_scenario(const Scenario &scenario) const;

   private:
    std::string name_;
    Scenario scenario_;
    std::vector<Rational> payoff_;
    std::vector<Rational> settings_;
    std::vector<Rational> weights_;
    std::optional<Rational> known_pc_bound_;
};

/// Three binary parties; wins iff x⃗ = (a_3, a_1, a_2) or its bitwise complement.
Game builtin_gynin();
/// Two binary parties; wins iff x_1 = a_2 and x_2 = a_1.
Game builtin_gyni();
/// Two parties with qubit-sized input/output. Party 2's setting is
/// a_2 = 2*b' + b. For b' = 0 party 1 must output b; for b' = 1 party 2 must
/// output a_1. Uniform settings.
Game builtin_ocb();
/// CHSH on the trivial-output scenario (d_I = d_O = 1): wins iff x_1 ⊕ x_2 = a_1 a_2.
Game builtin_chsh();
/// Looks up "gynin", "gyni", "ocb", "chsh". Throws Error(Parse) otherwise.
Game builtin_game(const std::string &name);

/// Three binary parties: ½ δ_{i⃗,(o_3,o_1,o_2)} + ½ δ_{i⃗,(ō_3,ō_1,ō_2)}.
QuasiProcess bfw_process();
/// The BFW process under canonical interventions; scores 1 on GYNIN.
Correlation gynin_perfect_correlation();
/// x_1 = a_2, x_2 = a_1 on two binary parties (binary inputs/outputs).
Correlation gyni_perfect_correlation();
/// x_1 ⊕ x_2 = a_1 a_2 with uniform marginals, on the trivial-output scenario.
Correlation pr_box_correlation();

/// Settings and outcomes alphabets must match; input/output dimensions may differ.
void require_compatible(const Game &game, const Scenario &scenario);

/// Σ payoff(x⃗,a⃗) p(a⃗) p(x⃗|a⃗), exact.
Rational score(const Game &game, const Correlation &corr);

struct CausalStep;

struct CausalBranch {
    uint32_t setting = 0;
    uint32_t outcome = 0;
    std::shared_ptr<const CausalStep> next;
};

/// One party acts; each branch fixes its setting and chosen outcome, and
/// `next` (possibly null) chooses the following party given that branch.
struct CausalStep {
    uint32_t party = 0;
    std::vector<CausalBranch> branches;
};

struct CausalBound {
    Rational value;
    CausalStep strategy;
    uint64_t leaves_visited = 0;
};

/// Maximum over deterministic strategies with a dynamic causal order: the
/// first party's outcome depends on its own setting, and each later party (and
/// the choice of who acts next) may depend on all earlier settings.
CausalBound causal_bound(const Game &game, const SearchLimits &limits = {});

/// The deterministic correlation produced by a causal strategy tree.
Correlation causal_strategy_correlation(const Scenario &scenario, const CausalStep &strategy);

struct DcBound {
    Rational value;
    QuasiProcessFunction omega;
    DeterministicIntervention intervention;
    uint64_t process_functions = 0;
    uint64_t output_families = 0;
    uint64_t distinct_patterns = 0;
};

/// Maximum score over process functions with deterministic local
/// interventions. The witness is the lexicographically first optimum in
/// (ω, output maps, outcome maps) order, independent of thread count.
DcBound dc_bound(const Game &game, const SearchLimits &limits = {}, bool reduced = true);

struct PcBound {
    Rational value;
    QuasiProcess process;
    InterventionFamily interventions;
    /// "canonical" or "dc-witness".
    std::string interventions_source;
    std::optional<Rational> canonical_value;
    size_t lp_constraints = 0;
};

/// LP over the classical-process polytope with the interventions held fixed.
PcBound pc_lp(const Game &game, const InterventionFamily &interventions, const SearchLimits &limits = {});

/// pc_lp with canonical interventions. Throws Error(NotCanonicalizable).
PcBound pc_bound_canonical(const Game &game, const SearchLimits &limits = {});

/// Inner bound on the classical-process value: the best of the canonical LP
/// (when the scenario allows it) and the LP under the dc_bound witness's
/// interventions. Never below dc_bound.
PcBound pc_bound(const Game &game, const SearchLimits &limits = {});

}  // namespace causelab

#endif
