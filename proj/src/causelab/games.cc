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

#include "causelab/games.h"

#include <array>
#include <set>

#include "causelab/linear_program.h"

namespace causelab {

Game::Game(std::string name, Scenario scenario, std::vector<Rational> payoff,
           std::vector<Rational> settings_distribution, std::optional<Rational> known_pc_bound)
    : name_(std::move(name)),
      scenario_(std::move(scenario)),
      payoff_(std::move(payoff)),
      settings_(std::move(settings_distribution)),
      known_pc_bound_(std::move(known_pc_bound)) {
    size_t na = scenario_.settings().size();
    size_t nx = scenario_.outcomes().size();
    if (payoff_.size() != nx * na) {
        throw Error(ErrorKind::DimensionMismatch, "payoff table has the wrong size");
    }
    if (settings_.size() != na) {
        throw Error(ErrorKind::DimensionMismatch, "setting distribution has the wrong size");
    }
    Rational total = 0;
    for (const auto &p : settings_) {
        if (sgn(p) < 0) {
            throw Error(ErrorKind::InvalidTable, "negative setting probability");
        }
        total += p;
    }
    if (total != 1) {
        throw Error(ErrorKind::InvalidTable, "setting distribution sums to " + format_rational(total));
    }
    weights_.resize(payoff_.size());
    for (size_t x = 0; x < nx; x++) {
        for (size_t a = 0; a < na; a++) {
            weights_[x * na + a] = payoff_[x * na + a] * settings_[a];
        }
    }
}

Rational Game::max_score() const {
    size_t na = scenario_.settings().size();
    size_t nx = scenario_.outcomes().size();
    Rational total = 0;
    for (size_t a = 0; a < na; a++) {
        Rational best = weights_[a];
        for (size_t x = 1; x < nx; x++) {
            if (weights_[x * na + a] > best) {
                best = weights_[x * na + a];
            }
        }
        total += best;
    }
    return total;
}

Game Game::with_scenario(const Scenario &scenario) const {
    require_compatible(*this, scenario);
    return Game(name_, scenario, payoff_, settings_, known_pc_bound_);
}

QuasiProcess bfw_process() {
    Scenario s = Scenario::uniform(3, 2);
    std::vector<Rational> table(8 * 8);
    for (size_t o = 0; o < 8; o++) {
        uint32_t o1 = s.outputs().digit(o, 0), o2 = s.outputs().digit(o, 1), o3 = s.outputs().digit(o, 2);
        std::array<uint32_t, 3> cyclic{o3, o1, o2};
        std::array<uint32_t, 3> flipped{1 - o3, 1 - o1, 1 - o2};
        table[s.inputs().flatten(cyclic) * 8 + o] += Rational(1, 2);
        table[s.inputs().flatten(flipped) * 8 + o] += Rational(1, 2);
    }
    return QuasiProcess(s, std::move(table));
}

Correlation gynin_perfect_correlation() {
    QuasiProcess w = bfw_process();
    return evaluate_correlation(w, canonical_interventions(w.scenario()));
}

Correlation gyni_perfect_correlation() {
    Scenario s = Scenario::uniform(2, 2);
    std::vector<size_t> outcome_for_setting(4);
    for (size_t a = 0; a < 4; a++) {
        std::array<uint32_t, 2> x{s.settings().digit(a, 1), s.settings().digit(a, 0)};
        outcome_for_setting[a] = s.outcomes().flatten(x);
    }
    return deterministic_correlation(s, outcome_for_setting);
}

Correlation pr_box_correlation() {
    Scenario s = Scenario::make({PartyAlphabet{2, 2, 1, 1}, PartyAlphabet{2, 2, 1, 1}});
    std::vector<Rational> table(16);
    for (uint32_t x1 = 0; x1 < 2; x1++) {
        for (uint32_t x2 = 0; x2 < 2; x2++) {
            for (uint32_t a1 = 0; a1 < 2; a1++) {
                for (uint32_t a2 = 0; a2 < 2; a2++) {
                    if ((x1 ^ x2) == (a1 & a2)) {
                        table[(x1 * 2 + x2) * 4 + a1 * 2 + a2] = Rational(1, 2);
                    }
                }
            }
        }
    }
    return Correlation(s, std::move(table));
}

void require_compatible(const Game &game, const Scenario &scenario) {
    const Scenario &g = game.scenario();
    bool ok = g.num_parties() == scenario.num_parties();
    for (size_t k = 0; ok && k < g.num_parties(); k++) {
        ok = g.party(k).settings == scenario.party(k).settings && g.party(k).outcomes == scenario.party(k).outcomes;
    }
    if (!ok) {
        throw Error(ErrorKind::ScenarioMismatch,
                    "game '" + game.name() + "' is defined on " + g.str() + ", not " + scenario.str());
    }
}

static Game uniform_game(std::string name, const Scenario &s, const std::function<bool(const std::vector<uint32_t> &,
                                                                                        const std::vector<uint32_t> &)> &win) {
    size_t na = s.settings().size();
    size_t nx = s.outcomes().size();
    std::vector<Rational> payoff(nx * na);
    for (size_t x = 0; x < nx; x++) {
        auto xs = s.outcomes().unflatten(x);
        for (size_t a = 0; a < na; a++) {
            if (win(xs, s.settings().unflatten(a))) {
                payoff[x * na + a] = 1;
            }
        }
    }
    return Game(std::move(name), s, std::move(payoff), std::vector<Rational>(na, Rational(1, na)));
}

Game builtin_gynin() {
    return uniform_game("gynin", Scenario::uniform(3, 2), [](const auto &x, const auto &a) {
        bool same = x[0] == a[2] && x[1] == a[0] && x[2] == a[1];
        bool flipped = x[0] != a[2] && x[1] != a[0] && x[2] != a[1];
        return same || flipped;
    });
}

Game builtin_gyni() {
    return uniform_game("gyni", Scenario::uniform(2, 2),
                        [](const auto &x, const auto &a) { return x[0] == a[1] && x[1] == a[0]; });
}

Game builtin_ocb() {
    auto s = Scenario::make({PartyAlphabet{2, 2, 2, 2}, PartyAlphabet{4, 2, 2, 2}});
    return uniform_game("ocb", s, [](const auto &x, const auto &a) {
        uint32_t b = a[1] & 1;
        uint32_t b_prime = a[1] >> 1;
        return b_prime == 0 ? x[0] == b : x[1] == a[0];
    });
}

Game builtin_chsh() {
    auto s = Scenario::make({PartyAlphabet{2, 2, 1, 1}, PartyAlphabet{2, 2, 1, 1}});
    return uniform_game("chsh", s, [](const auto &x, const auto &a) { return (x[0] ^ x[1]) == (a[0] & a[1]); });
}

Game builtin_game(const std::string &name) {
    if (name == "gynin") {
        return builtin_gynin();
    }
    if (name == "gyni") {
        return builtin_gyni();
    }
    if (name == "ocb") {
        return builtin_ocb();
    }
    if (name == "chsh") {
        return builtin_chsh();
    }
    throw Error(ErrorKind::Parse, "unknown built-in game '" + name + "'");
}

Rational score(const Game &game, const Correlation &corr) {
    require_compatible(game, corr.scenario());
    Rational total = 0;
    const auto &w = game.weights();
    for (size_t j = 0; j < w.size(); j++) {
        if (!is_zero(w[j])) {
            total += w[j] * corr.table()[j];
        }
    }
    return total;
}

namespace {

struct CausalSearch {
    const Game &game;
    const Scenario &s;
    size_t n;
    std::vector<uint32_t> settings, outcomes;
    uint64_t leaves = 0;

    struct Result {
        Rational value;
        std::shared_ptr<CausalStep> step;
    };

    Result solve(uint32_t done) {
        if (done == (uint32_t{1} << n) - 1) {
            leaves++;
            size_t a = s.settings().flatten(settings);
            size_t x = s.outcomes().flatten(outcomes);
            return {game.weights()[x * s.settings().size() + a], nullptr};
        }
        Result best;
        bool have = false;
        for (uint32_t k = 0; k < n; k++) {
            if (done & (uint32_t{1} << k)) {
                continue;
            }
            auto step = std::make_shared<CausalStep>();
            step->party = k;
            Rational total = 0;
            for (uint32_t a = 0; a < s.party(k).settings; a++) {
                settings[k] = a;
                Result best_x;
                uint32_t best_outcome = 0;
                for (uint32_t x = 0; x < s.party(k).outcomes; x++) {
                    outcomes[k] = x;
                    Result r = solve(done | (uint32_t{1} << k));
                    if (x == 0 || r.value > best_x.value) {
                        best_x = std::move(r);
                        best_outcome = x;
                    }
                }
                total += best_x.value;
                step->branches.push_back(CausalBranch{a, best_outcome, std::move(best_x.step)});
            }
            settings[k] = 0;
            outcomes[k] = 0;
            if (!have || total > best.value) {
                best = Result{total, std::move(step)};
                have = true;
            }
        }
        return best;
    }
};

}  // namespace

CausalBound causal_bound(const Game &game, const SearchLimits &limits) {
    const Scenario &s = game.scenario();
    size_t n = s.num_parties();
    if (n > 16) {
        throw Error(ErrorKind::SearchSpaceTooLarge, "causal bound supports at most 16 parties");
    }
    // Leaves per order: Π |A_k||X_k|; orders: n!.
    long double leaves = 1;
    for (size_t k = 0; k < n; k++) {
        leaves *= static_cast<long double>(s.party(k).settings) * s.party(k).outcomes * (k + 1);
    }
    if (leaves > static_cast<long double>(limits.enumeration_cap)) {
        throw Error(ErrorKind::SearchSpaceTooLarge, "causal strategy tree exceeds the enumeration cap");
    }
    CausalSearch search{game, s, n, std::vector<uint32_t>(n), std::vector<uint32_t>(n)};
    auto r = search.solve(0);
    CausalBound out;
    out.value = r.value;
    out.strategy = *r.step;
    out.leaves_visited = search.leaves;
    return out;
}

static void fill_causal(const Scenario &s, const CausalStep &step, std::vector<int64_t> &settings,
                        std::vector<uint32_t> &outcomes, std::vector<size_t> &result) {
    for (const auto &branch : step.branches) {
        settings[step.party] = branch.setting;
        outcomes[step.party] = branch.outcome;
        if (branch.next) {
            fill_causal(s, *branch.next, settings, outcomes, result);
            continue;
        }
        // Leaf: every party is fixed except none; map this setting tuple.
        std::vector<uint32_t> a(settings.size());
        for (size_t k = 0; k < a.size(); k++) {
            if (settings[k] < 0) {
                throw Error(ErrorKind::InvalidTable, "causal strategy leaves a party unassigned");
            }
            a[k] = static_cast<uint32_t>(settings[k]);
        }
        result[s.settings().flatten(a)] = s.outcomes().flatten(outcomes);
    }
    settings[step.party] = -1;
    outcomes[step.party] = 0;
}

Correlation causal_strategy_correlation(const Scenario &scenario, const CausalStep &strategy) {
    std::vector<int64_t> settings(scenario.num_parties(), -1);
    std::vector<uint32_t> outcomes(scenario.num_parties(), 0);
    std::vector<size_t> result(scenario.settings().size(), SIZE_MAX);
    fill_causal(scenario, strategy, settings, outcomes, result);
    for (size_t v : result) {
        if (v == SIZE_MAX) {
            throw Error(ErrorKind::InvalidTable, "causal strategy does not cover every setting");
        }
    }
    return deterministic_correlation(scenario, result);
}

PcBound pc_lp(const Game &game, const InterventionFamily &interventions, const SearchLimits &limits) {
    const Scenario &s = interventions.scenario();
    require_compatible(game, s);
    size_t n = s.num_parties();
    size_t na = s.settings().size();
    size_t nx = s.outcomes().size();
    size_t ni = s.inputs().size();
    size_t no = s.outputs().size();
    const auto &w = game.weights();

    // Objective coefficient of p(i⃗|o⃗): Σ_{x⃗,a⃗} w(x⃗,a⃗) Π_k p_k(x_k,o_k|a_k,i_k).
    LinearProgram lp(ni * no, OptimizationSense::Maximize);
    Rational coef, term;
    for (size_t i = 0; i < ni; i++) {
        for (size_t o = 0; o < no; o++) {
            coef = 0;
            for (size_t x = 0; x < nx; x++) {
                for (size_t a = 0; a < na; a++) {
                    const Rational &wa = w[x * na + a];
                    if (is_zero(wa)) {
                        continue;
                    }
                    term = wa;
                    for (size_t k = 0; k < n && !is_zero(term); k++) {
                        term *= interventions.party(k).at(s.outcomes().digit(x, k), s.outputs().digit(o, k),
                                                          s.settings().digit(a, k), s.inputs().digit(i, k));
                    }
                    coef += term;
                }
            }
            lp.set_objective(i * no + o, coef);
        }
    }

    // Consistency rows Σ_i⃗ p(i⃗|f(i⃗)) = 1; constant choices give normalization.
    std::set<std::vector<size_t>> rows;
    for_each_output_choice(s, limits.enumeration_cap, [&](const OutputChoice &f) {
        std::vector<size_t> row;
        for (size_t i = 0; i < ni; i++) {
            row.push_back(i * no + f.apply(s, i));
        }
        rows.insert(std::move(row));
        return true;
    });
    for (size_t o = 0; o < no; o++) {
        std::vector<size_t> row;
        for (size_t i = 0; i < ni; i++) {
            row.push_back(i * no + o);
        }
        rows.insert(std::move(row));
    }
    for (const auto &row : rows) {
        std::vector<std::pair<size_t, Rational>> terms;
        for (size_t v : row) {
            terms.emplace_back(v, Rational(1));
        }
        lp.add_constraint(std::move(terms), RowKind::Equal, Rational(1));
    }

    LpResult r = lp_solve_or_throw(lp);
    PcBound out;
    out.value = r.value;
    out.process = QuasiProcess(s, r.solution);
    out.interventions = interventions;
    out.lp_constraints = rows.size();
    return out;
}

PcBound pc_bound_canonical(const Game &game, const SearchLimits &limits) {
    PcBound out;
    if (!game.scenario().canonicalizable() && is_nonsignaling_scenario(game.scenario())) {
        out = pc_lp(game, strategy_interventions(game.scenario()), limits);
        out.interventions_source = "strategy";
    } else {
        out = pc_lp(game, canonical_interventions(game.scenario()), limits);
        out.interventions_source = "canonical";
    }
    out.canonical_value = out.value;
    return out;
}

PcBound pc_bound(const Game &game, const SearchLimits &limits) {
    std::optional<PcBound> best;
    if (game.scenario().canonicalizable() || is_nonsignaling_scenario(game.scenario())) {
        best = pc_bound_canonical(game, limits);
        if (best->value == game.max_score()) {
            return *best;
        }
    }
    DcBound dc = dc_bound(game, limits);
    PcBound witness = pc_lp(game, dc.intervention.to_family(game.scenario()), limits);
    witness.interventions_source = "dc-witness";
    if (best) {
        witness.canonical_value = best->value;
        if (best->value >= witness.value) {
            return *best;
        }
    }
    return witness;
}

}  // namespace causelab
