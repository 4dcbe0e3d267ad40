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

#include "causelab/deterministic_search.h"

#include <algorithm>
#include <atomic>
#include <limits>
#include <thread>
#include <tuple>
#include <unordered_map>

#include "causelab/games.h"

namespace causelab {

namespace {

uint64_t checked_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a) {
        return std::numeric_limits<uint64_t>::max();
    }
    return a * b;
}

uint64_t checked_pow(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    for (uint64_t e = 0; e < exp; e++) {
        r = checked_mul(r, base);
    }
    return r;
}

/// Runs `work(worker)` on `threads` workers (inline when threads <= 1).
template <typename F>
void run_workers(unsigned threads, F &&work) {
    if (threads <= 1) {
        work(0u);
        return;
    }
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; t++) {
        pool.emplace_back([&work, t] { work(t); });
    }
    for (auto &th : pool) {
        th.join();
    }
}

/// Cells (a_k, i_k) touched by a pattern, per party, plus each setting's cell.
struct CellLayout {
    std::vector<std::vector<uint32_t>> used;       // used[k] = sorted cell ids
    std::vector<std::vector<uint32_t>> cell_of;    // cell_of[k][a] = position in used[k]
    std::vector<std::vector<std::vector<uint32_t>>> members;  // members[k][c] = settings

    CellLayout(const Scenario &s, const std::u32string &inputs_for_setting) {
        size_t n = s.num_parties();
        size_t na = s.settings().size();
        used.resize(n);
        cell_of.assign(n, std::vector<uint32_t>(na));
        members.resize(n);
        for (size_t k = 0; k < n; k++) {
            uint32_t d_in = s.party(k).inputs;
            std::vector<uint32_t> raw(na);
            for (size_t a = 0; a < na; a++) {
                raw[a] = s.settings().digit(a, k) * d_in + s.inputs().digit(inputs_for_setting[a], k);
            }
            used[k] = raw;
            std::sort(used[k].begin(), used[k].end());
            used[k].erase(std::unique(used[k].begin(), used[k].end()), used[k].end());
            members[k].resize(used[k].size());
            for (size_t a = 0; a < na; a++) {
                auto pos = std::lower_bound(used[k].begin(), used[k].end(), raw[a]) - used[k].begin();
                cell_of[k][a] = static_cast<uint32_t>(pos);
                members[k][pos].push_back(static_cast<uint32_t>(a));
            }
        }
    }
};

/// Steps an odometer over values[k][c] < radix[k], last digit fastest.
/// Returns false once it wraps around.
bool advance(std::vector<std::vector<uint32_t>> &values, const std::vector<uint32_t> &radix, size_t parties) {
    for (size_t k = parties; k-- > 0;) {
        auto &v = values[k];
        for (size_t j = v.size(); j-- > 0;) {
            if (++v[j] < radix[k]) {
                return true;
            }
            v[j] = 0;
        }
    }
    return false;
}

struct PatternOptimum {
    int64_t value = std::numeric_limits<int64_t>::min();
    std::vector<std::vector<uint32_t>> cell_values;  // per party, per used cell
};

PatternOptimum optimize_outcomes(const Scenario &s, const CellLayout &cells, const std::vector<int64_t> &w,
                                 int64_t upper_bound) {
    size_t n = s.num_parties();
    size_t na = s.settings().size();
    size_t last = n - 1;
    std::vector<uint32_t> radix(n);
    for (size_t k = 0; k < n; k++) {
        radix[k] = s.party(k).outcomes;
    }
    std::vector<std::vector<uint32_t>> vals(n);
    for (size_t k = 0; k < n; k++) {
        vals[k].assign(cells.used[k].size(), 0);
    }
    std::vector<size_t> partial(na);
    size_t last_stride = s.outcomes().stride(last);

    PatternOptimum best;
    std::vector<uint32_t> last_choice(cells.used[last].size());
    do {
        for (size_t a = 0; a < na; a++) {
            size_t px = 0;
            for (size_t k = 0; k < last; k++) {
                px += vals[k][cells.cell_of[k][a]] * s.outcomes().stride(k);
            }
            partial[a] = px;
        }
        int64_t total = 0;
        for (size_t c = 0; c < cells.used[last].size(); c++) {
            int64_t cell_best = std::numeric_limits<int64_t>::min();
            uint32_t arg = 0;
            for (uint32_t xl = 0; xl < radix[last]; xl++) {
                int64_t acc = 0;
                for (uint32_t a : cells.members[last][c]) {
                    acc += w[(partial[a] + xl * last_stride) * na + a];
                }
                if (acc > cell_best) {
                    cell_best = acc;
                    arg = xl;
                }
            }
            total += cell_best;
            last_choice[c] = arg;
        }
        if (total > best.value) {
            best.value = total;
            best.cell_values = vals;
            best.cell_values[last] = last_choice;
            if (total >= upper_bound) {
                break;
            }
        }
    } while (advance(vals, radix, last));
    return best;
}

std::vector<std::vector<uint32_t>> expand_cells(const Scenario &s, const CellLayout &cells,
                                                const std::vector<std::vector<uint32_t>> &cell_values) {
    std::vector<std::vector<uint32_t>> h(s.num_parties());
    for (size_t k = 0; k < s.num_parties(); k++) {
        h[k].assign(static_cast<size_t>(s.party(k).settings) * s.party(k).inputs, 0);
        for (size_t c = 0; c < cells.used[k].size(); c++) {
            h[k][cells.used[k][c]] = cell_values[k][c];
        }
    }
    return h;
}

uint64_t assignments_for(const Scenario &s, const CellLayout &cells, size_t parties) {
    uint64_t total = 1;
    for (size_t k = 0; k < parties; k++) {
        total = checked_mul(total, checked_pow(s.party(k).outcomes, cells.used[k].size()));
    }
    return total;
}

}  // namespace

std::vector<std::vector<uint32_t>> ResponsePatternSet::output_maps(uint64_t index) const {
    std::vector<std::vector<uint32_t>> g(scenario.num_parties());
    for (size_t k = 0; k < g.size(); k++) {
        g[k].assign(static_cast<size_t>(scenario.party(k).settings) * scenario.party(k).inputs, 0);
    }
    for (size_t k = g.size(); k-- > 0;) {
        uint32_t radix = scenario.party(k).outputs;
        for (size_t j = g[k].size(); j-- > 0;) {
            g[k][j] = static_cast<uint32_t>(index % radix);
            index /= radix;
        }
    }
    return g;
}

ResponsePatternSet compute_response_patterns(const Scenario &s, const SearchLimits &limits, bool reduced) {
    ResponsePatternSet out;
    out.scenario = s;
    out.functions = enumerate_process_functions(s, reduced, limits);

    size_t n = s.num_parties();
    uint64_t families = 1;
    for (const auto &p : s.parties()) {
        families = checked_mul(families, checked_pow(p.outputs, static_cast<uint64_t>(p.settings) * p.inputs));
    }
    out.output_families = families;
    uint64_t work = checked_mul(families, out.functions.size());
    if (work > limits.enumeration_cap) {
        throw Error(ErrorKind::SearchSpaceTooLarge, "process functions x output families = " + std::to_string(work) +
                                                        " exceeds the enumeration cap " +
                                                        std::to_string(limits.enumeration_cap));
    }

    size_t na = s.settings().size();
    size_t ni = s.inputs().size();
    std::vector<uint32_t> a_digits(na * n), i_digits(ni * n);
    for (size_t a = 0; a < na; a++) {
        for (size_t k = 0; k < n; k++) {
            a_digits[a * n + k] = s.settings().digit(a, k);
        }
    }
    for (size_t i = 0; i < ni; i++) {
        for (size_t k = 0; k < n; k++) {
            i_digits[i * n + k] = s.inputs().digit(i, k);
        }
    }

    using Seen = std::unordered_map<std::u32string, std::pair<size_t, uint64_t>>;
    unsigned threads = std::max(1u, limits.threads);
    std::vector<Seen> seen(threads);
    run_workers(threads, [&](unsigned t) {
        Seen &local = seen[t];
        std::vector<std::vector<uint32_t>> g(n);
        std::vector<uint32_t> radix(n);
        for (size_t k = 0; k < n; k++) {
            radix[k] = s.party(k).outputs;
        }
        std::u32string key(na, 0);
        for (size_t fi = t; fi < out.functions.size(); fi += threads) {
            const auto &flat = out.functions[fi].flat_table();
            for (size_t k = 0; k < n; k++) {
                g[k].assign(static_cast<size_t>(s.party(k).settings) * s.party(k).inputs, 0);
            }
            uint64_t gi = 0;
            do {
                for (size_t a = 0; a < na; a++) {
                    const uint32_t *ad = &a_digits[a * n];
                    for (size_t i = 0; i < ni; i++) {
                        const uint32_t *id = &i_digits[i * n];
                        size_t o = 0;
                        for (size_t k = 0; k < n; k++) {
                            o += g[k][ad[k] * s.party(k).inputs + id[k]] * s.outputs().stride(k);
                        }
                        if (flat[o] == i) {
                            key[a] = static_cast<char32_t>(i);
                            break;
                        }
                    }
                }
                local.emplace(key, std::make_pair(fi, gi));
                gi++;
            } while (advance(g, radix, n));
        }
    });

    Seen merged;
    for (auto &local : seen) {
        for (auto &[key, first] : local) {
            auto [it, inserted] = merged.emplace(key, first);
            if (!inserted && first < it->second) {
                it->second = first;
            }
        }
    }
    out.patterns.reserve(merged.size());
    for (auto &[key, first] : merged) {
        out.patterns.push_back(ResponsePattern{key, first.first, first.second});
    }
    std::sort(out.patterns.begin(), out.patterns.end(), [](const ResponsePattern &x, const ResponsePattern &y) {
        return std::tie(x.function_index, x.output_family) < std::tie(y.function_index, y.output_family);
    });
    return out;
}

DcBound dc_bound(const Game &game, const SearchLimits &limits, bool reduced) {
    const Scenario &s = game.scenario();
    ResponsePatternSet set = compute_response_patterns(s, limits, reduced);

    const auto &weights = game.weights();
    int64_t scale = common_denominator(weights);
    std::vector<int64_t> w(weights.size());
    mpz_class abs_total = 0;
    for (size_t j = 0; j < weights.size(); j++) {
        Rational scaled = weights[j] * scale;
        w[j] = scaled.get_num().get_si();
        abs_total += abs(scaled.get_num());
    }
    if (abs_total > mpz_class(std::numeric_limits<int64_t>::max() / 4)) {
        throw Error(ErrorKind::SearchSpaceTooLarge, "payoff magnitudes exceed 64-bit accumulation range");
    }
    Rational ub = game.max_score() * scale;
    int64_t upper_bound = ub.get_num().get_si();

    size_t np = set.patterns.size();
    std::vector<PatternOptimum> results(np);
    std::vector<CellLayout> layouts;
    layouts.reserve(np);
    for (const auto &p : set.patterns) {
        layouts.emplace_back(s, p.inputs_for_setting);
        if (assignments_for(s, layouts.back(), s.num_parties() - 1) > limits.enumeration_cap) {
            throw Error(ErrorKind::SearchSpaceTooLarge, "outcome-map search exceeds the enumeration cap");
        }
    }

    unsigned threads = std::max(1u, limits.threads);
    std::atomic<size_t> first_perfect{np};
    run_workers(threads, [&](unsigned t) {
        for (size_t pi = t; pi < np; pi += threads) {
            if (pi > first_perfect.load()) {
                break;
            }
            results[pi] = optimize_outcomes(s, layouts[pi], w, upper_bound);
            if (results[pi].value >= upper_bound) {
                size_t cur = first_perfect.load();
                while (pi < cur && !first_perfect.compare_exchange_weak(cur, pi)) {
                }
            }
        }
    });

    size_t best = np;
    for (size_t pi = 0; pi < np && pi <= first_perfect.load(); pi++) {
        if (results[pi].cell_values.empty()) {
            continue;
        }
        if (best == np || results[pi].value > results[best].value) {
            best = pi;
        }
    }
    if (best == np) {
        throw Error(ErrorKind::InvalidScenario, "no process function exists for " + s.str());
    }

    const auto &pattern = set.patterns[best];
    DcBound out;
    out.value = Rational(results[best].value, scale);
    out.value.canonicalize();
    out.omega = set.functions[pattern.function_index];
    out.intervention.output_map = set.output_maps(pattern.output_family);
    out.intervention.outcome_map = expand_cells(s, layouts[best], results[best].cell_values);
    out.process_functions = set.functions.size();
    out.output_families = set.output_families;
    out.distinct_patterns = np;
    return out;
}

std::vector<DcVertex> enumerate_dc_vertices(const ResponsePatternSet &set, const SearchLimits &limits) {
    const Scenario &s = set.scenario;
    size_t n = s.num_parties();
    size_t na = s.settings().size();
    std::vector<uint32_t> radix(n);
    for (size_t k = 0; k < n; k++) {
        radix[k] = s.party(k).outcomes;
    }
    std::unordered_map<std::u32string, size_t> index;
    std::vector<DcVertex> out;
    std::u32string key(na, 0);
    for (size_t pi = 0; pi < set.patterns.size(); pi++) {
        CellLayout cells(s, set.patterns[pi].inputs_for_setting);
        if (assignments_for(s, cells, n) > limits.enumeration_cap) {
            throw Error(ErrorKind::SearchSpaceTooLarge, "vertex enumeration exceeds the enumeration cap");
        }
        std::vector<std::vector<uint32_t>> vals(n);
        for (size_t k = 0; k < n; k++) {
            vals[k].assign(cells.used[k].size(), 0);
        }
        do {
            for (size_t a = 0; a < na; a++) {
                size_t x = 0;
                for (size_t k = 0; k < n; k++) {
                    x += vals[k][cells.cell_of[k][a]] * s.outcomes().stride(k);
                }
                key[a] = static_cast<char32_t>(x);
            }
            if (index.emplace(key, out.size()).second) {
                if (out.size() >= limits.hull_vertex_cap) {
                    throw Error(ErrorKind::CapExceeded, "more than " + std::to_string(limits.hull_vertex_cap) +
                                                            " distinct deterministic vertices");
                }
                DcVertex v;
                v.outcome_for_setting.assign(key.begin(), key.end());
                v.pattern_index = pi;
                v.outcome_maps = expand_cells(s, cells, vals);
                out.push_back(std::move(v));
            }
        } while (advance(vals, radix, n));
    }
    return out;
}

}  // namespace causelab
