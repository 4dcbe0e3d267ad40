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

#include "generators.h"

namespace gen {

using namespace causelab;

uint32_t uniform(Rng &rng, uint32_t lo, uint32_t hi) {
    return std::uniform_int_distribution<uint32_t>(lo, hi)(rng);
}

std::vector<Rational> distribution(Rng &rng, size_t n) {
    std::vector<Rational> w(n);
    Rational total = 0;
    while (total == 0) {
        total = 0;
        for (auto &v : w) {
            // Zeros are frequent so faces of the simplex get exercised.
            v = uniform(rng, 0, 3) == 0 ? 0 : uniform(rng, 1, 9);
            total += v;
        }
    }
    for (auto &v : w) {
        v /= total;
    }
    return w;
}

Scenario binary_scenario(Rng &rng, size_t max_parties) {
    return Scenario::uniform(uniform(rng, 1, static_cast<uint32_t>(max_parties)), 2);
}

Scenario correlation_scenario(Rng &rng, size_t max_parties, uint32_t max_card) {
    std::vector<PartyAlphabet> parties(uniform(rng, 1, static_cast<uint32_t>(max_parties)));
    for (auto &p : parties) {
        p.settings = uniform(rng, 1, max_card);
        p.outcomes = uniform(rng, 1, max_card);
    }
    return Scenario::make(parties);
}

ProcessFunctionMixture mixture(Rng &rng, const std::vector<QuasiProcessFunction> &pool) {
    size_t n = uniform(rng, 1, 4);
    auto weights = distribution(rng, n);
    ProcessFunctionMixture m;
    for (size_t k = 0; k < n; k++) {
        m.components.emplace_back(pool[uniform(rng, 0, static_cast<uint32_t>(pool.size() - 1))], weights[k]);
    }
    return m;
}

InterventionFamily interventions(Rng &rng, const Scenario &s) {
    std::vector<LocalIntervention> locals;
    for (const auto &p : s.parties()) {
        size_t rows = static_cast<size_t>(p.outcomes) * p.outputs;
        size_t cols = static_cast<size_t>(p.settings) * p.inputs;
        std::vector<Rational> table(rows * cols);
        for (size_t c = 0; c < cols; c++) {
            auto d = distribution(rng, rows);
            for (size_t r = 0; r < rows; r++) {
                table[r * cols + c] = d[r];
            }
        }
        locals.emplace_back(p, std::move(table));
    }
    return InterventionFamily(s, std::move(locals));
}

Correlation correlation(Rng &rng, const Scenario &s) {
    size_t nx = s.outcomes().size(), na = s.settings().size();
    Correlation c = Correlation::zeros(s);
    for (size_t a = 0; a < na; a++) {
        auto d = distribution(rng, nx);
        for (size_t x = 0; x < nx; x++) {
            c.at(x, a) = d[x];
        }
    }
    return c;
}

Game game(Rng &rng, const Scenario &s) {
    size_t nx = s.outcomes().size(), na = s.settings().size();
    std::vector<Rational> payoff(nx * na);
    for (auto &v : payoff) {
        v = uniform(rng, 0, 1);
    }
    return Game("random", s, std::move(payoff), distribution(rng, na));
}

}  // namespace gen
