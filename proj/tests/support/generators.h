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

// Seeded random objects for property tests.

#ifndef CAUSELAB_TESTS_GENERATORS_H
#define CAUSELAB_TESTS_GENERATORS_H

#include <random>
#include <vector>

#include "causelab/consistency.h"
#include "causelab/games.h"

namespace gen {

using causelab::Rational;
using Rng = std::mt19937_64;

/// Uniform integer in [lo, hi].
uint32_t uniform(Rng &rng, uint32_t lo, uint32_t hi);

/// Random rational probability vector with small denominators.
std::vector<Rational> distribution(Rng &rng, size_t n);

/// Binary inputs/outputs with 1..max_parties parties.
causelab::Scenario binary_scenario(Rng &rng, size_t max_parties);

/// Random settings/outcomes in [1, max_card] per party, trivial I/O.
causelab::Scenario correlation_scenario(Rng &rng, size_t max_parties, uint32_t max_card);

/// A mixture of 1..4 process functions drawn from `pool` with random weights.
causelab::ProcessFunctionMixture mixture(Rng &rng, const std::vector<causelab::QuasiProcessFunction> &pool);

/// Every column of every party is an independent random distribution.
causelab::InterventionFamily interventions(Rng &rng, const causelab::Scenario &s);

/// Each column is a random distribution over x⃗.
causelab::Correlation correlation(Rng &rng, const causelab::Scenario &s);

/// 0/1 payoff with random setting distribution.
causelab::Game game(Rng &rng, const causelab::Scenario &s);

}  // namespace gen

#endif
