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

#include "suites.h"

#include <cmath>
#include <exception>
#include <functional>
#include <map>
#include <sstream>

#include "causelab/quantum.h"
#include "generators.h"
#include "oracles.h"

namespace suites {

using namespace causelab;

namespace {

/// Runs `body` per case; the first failure message stops the suite.
SuiteResult run(const std::string &name, size_t cases, const std::function<std::string(size_t)> &body) {
    SuiteResult r{name, true, 0, ""};
    for (size_t c = 0; c < cases; c++) {
        std::string failure;
        try {
            failure = body(c);
        } catch (const std::exception &e) {
            failure = std::string("exception: ") + e.what();
        }
        r.cases++;
        if (!failure.empty()) {
            r.passed = false;
            r.detail = "case " + std::to_string(c) + ": " + failure;
            break;
        }
    }
    return r;
}

QuasiProcessFunction function_from_flat(const Scenario &s, const std::vector<size_t> &flat_omega) {
    std::vector<std::vector<uint32_t>> omega(s.num_parties(), std::vector<uint32_t>(flat_omega.size()));
    for (size_t o = 0; o < flat_omega.size(); o++) {
        auto id = s.inputs().unflatten(flat_omega[o]);
        for (size_t k = 0; k < s.num_parties(); k++) {
            omega[k][o] = id[k];
        }
    }
    return QuasiProcessFunction(s, std::move(omega));
}

/// Σ_i⃗ p(i⃗|f(i⃗)) for every output choice equals 1.
bool oracle_consistent(const QuasiProcess &p) {
    for (const auto &f : oracle::all_output_choices(p.scenario())) {
        Rational mass = 0;
        for (size_t i = 0; i < f.size(); i++) {
            mass += p.at(i, f[i]);
        }
        if (mass != 1) {
            return false;
        }
    }
    return true;
}

const std::vector<QuasiProcessFunction> &function_pool(size_t parties) {
    static std::map<size_t, std::vector<QuasiProcessFunction>> cache;
    auto it = cache.find(parties);
    if (it == cache.end()) {
        // Unreduced enumeration is only cheap up to two parties.
        bool reduced = parties >= 3;
        it = cache.emplace(parties, enumerate_process_functions(Scenario::uniform(parties, 2), reduced)).first;
    }
    return it->second;
}

}  // namespace

SuiteResult consistency_equivalence() {
    std::vector<std::pair<Scenario, size_t>> cases;
    for (size_t n : {1, 2}) {
        Scenario s = Scenario::uniform(n, 2);
        size_t ni = s.inputs().size(), no = s.outputs().size();
        size_t total = 1;
        for (size_t o = 0; o < no; o++) {
            total *= ni;
        }
        for (size_t code = 0; code < total; code++) {
            cases.emplace_back(s, code);
        }
    }
    return run("consistency <=> unique fixed point", cases.size(), [&](size_t c) -> std::string {
        const auto &[s, code] = cases[c];
        auto digits = oracle::digits(code, std::vector<uint32_t>(s.outputs().size(), s.inputs().size()));
        std::vector<size_t> flat_omega(digits.begin(), digits.end());
        auto omega = function_from_flat(s, flat_omega);
        bool expected = oracle::is_process_function(s, flat_omega);
        auto consistency = is_logically_consistent(quasiprocess_from_function(omega));
        auto pf = is_process_function(omega);
        if (consistency.consistent != expected || pf.is_process_function != expected) {
            return "verdict mismatch for code " + std::to_string(code);
        }
        if (!expected) {
            std::vector<size_t> f_flat(s.inputs().size());
            for (size_t i = 0; i < f_flat.size(); i++) {
                f_flat[i] = consistency.violating_choice->apply(s, i);
            }
            if (Rational(oracle::fixed_point_count(flat_omega, f_flat)) != consistency.violating_mass ||
                consistency.violating_mass == 1) {
                return "certificate mass does not match its fixed-point count";
            }
        }
        return "";
    });
}

SuiteResult mixture_closure(size_t cases, uint64_t seed) {
    gen::Rng rng(seed);
    return run("mixture closure", cases, [&](size_t) -> std::string {
        size_t parties = gen::uniform(rng, 1, 3);
        auto m = gen::mixture(rng, function_pool(parties));
        QuasiProcess p = mixture_process(m);
        if (!is_logically_consistent(p).consistent) {
            return "library reports a mixture as inconsistent";
        }
        if (!oracle_consistent(p)) {
            return "oracle reports a mixture as inconsistent";
        }
        return "";
    });
}

SuiteResult diagonal_bridge(size_t cases, uint64_t seed) {
    gen::Rng rng(seed);
    return run("diagonal bridge", cases, [&](size_t) -> std::string {
        size_t parties = gen::uniform(rng, 1, 3);
        QuasiProcess p = mixture_process(gen::mixture(rng, function_pool(parties)));
        auto family = gen::interventions(rng, p.scenario());
        auto exact = oracle::evaluate(p, family);
        ProcessMatrix w = diagonal_from_classical(p);
        auto quantum = pm_correlation(w, diagonal_instruments(family));
        for (size_t k = 0; k < exact.size(); k++) {
            double diff = std::fabs(quantum.table[k] - exact[k].get_d());
            if (!(diff <= 1e-12)) {
                std::ostringstream os;
                os << "entry " << k << " differs by " << diff;
                return os.str();
            }
        }
        if (!(classical_from_diagonal(w, p.scenario()) == p)) {
            return "diagonal table does not round-trip";
        }
        if (!is_valid_process_matrix(w).valid) {
            return "diagonal process matrix of a consistent process judged invalid";
        }
        return "";
    });
}

SuiteResult bound_monotonicity(size_t cases, uint64_t seed) {
    gen::Rng rng(seed);
    return run("bound monotonicity", cases, [&](size_t) -> std::string {
        Game g = gen::game(rng, gen::binary_scenario(rng, 2));
        Rational causal = causal_bound(g).value;
        Rational dc = dc_bound(g).value;
        Rational pc = pc_bound(g).value;
        if (causal != oracle::causal_value(g)) {
            return "causal bound disagrees with the oracle";
        }
        if (dc != oracle::dc_value(g)) {
            return "dc bound disagrees with the oracle";
        }
        if (!(causal <= dc && dc <= pc && pc <= g.max_score())) {
            return "chain violated: " + format_rational(causal) + ", " + format_rational(dc) + ", " +
                   format_rational(pc);
        }
        return "";
    });
}

SuiteResult realization_round_trip(size_t cases, uint64_t seed) {
    gen::Rng rng(seed);
    return run("universal realization round trip", cases, [&](size_t) -> std::string {
        Correlation corr = gen::correlation(rng, gen::correlation_scenario(rng, 2, 3));
        Realization r = universal_realization(corr);
        if (evaluate_correlation(r.process, r.interventions).table() != corr.table()) {
            return "library evaluation differs";
        }
        if (oracle::evaluate(r.process, r.interventions) != corr.table()) {
            return "oracle evaluation differs";
        }
        return "";
    });
}

}  // namespace suites
