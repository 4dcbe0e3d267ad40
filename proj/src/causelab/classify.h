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

#ifndef CAUSELAB_CLASSIFY_H
#define CAUSELAB_CLASSIFY_H

#include <optional>
#include <string>
#include <vector>

#include "causelab/deterministic_search.h"
#include "causelab/games.h"

namespace causelab {

enum class Membership { In, Out, Unknown };

const char *membership_name(Membership m);

/// Score of a witness game against its bound.
struct WitnessCheck {
    std::string game;
    Rational score;
    Rational bound;
    bool violated = false;
    Game definition;
};

/// A vertex of the nomic polytope with a concrete realization.
struct NomicComponent {
    QuasiProcessFunction omega;
    DeterministicIntervention intervention;
    std::vector<size_t> outcome_for_setting;
    Rational weight;
};

struct NomicLabel {
    Membership verdict = Membership::Unknown;
    /// "hull", "witness", or "none".
    std::string method = "none";
    bool cap_binding = false;
    std::string cap_note;
    size_t vertex_count = 0;
    std::vector<NomicComponent> components;  // in
    std::vector<Rational> functional;        // out via hull
    Rational functional_value;
    Rational functional_bound;
    std::vector<WitnessCheck> witnesses;
};

struct ProcessLabel {
    Membership verdict = Membership::Unknown;
    /// "canonical", "implied-by-dc", "witness", or "none".
    std::string method = "none";
    std::optional<Realization> realization;
    std::vector<WitnessCheck> witnesses;
};

struct QuasiLabel {
    Membership verdict = Membership::In;
    Realization realization;
};

struct ClassLabel {
    QuasiLabel qc;
    ProcessLabel pc;
    NomicLabel dc;
};

/// Places a valid correlation in the DC ⊆ PC ⊆ qC hierarchy, with
/// certificates. Throws Error(InvalidTable) for an invalid correlation.
ClassLabel classify(const Correlation &corr, const std::vector<Game> &witnesses, const SearchLimits &limits = {});

/// Re-checks every certificate exactly. Returns an empty string on success,
/// otherwise a description of the first failure.
std::string replay_certificates(const Correlation &corr, const ClassLabel &label);

}  // namespace causelab

#endif
