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

#include "causelab/consistency.h"

#include <limits>

namespace causelab {

static uint64_t saturating_mul(uint64_t a, uint64_t b) {
    if (a != 0 && b > std::numeric_limits<uint64_t>::max() / a) {
        return std::numeric_limits<uint64_t>::max();
    }
    return a * b;
}

static uint64_t saturating_pow(uint64_t base, uint64_t exp) {
    uint64_t r = 1;
    for (uint64_t e = 0; e < exp; e++) {
        r = saturating_mul(r, base);
    }
    return r;
}

size_t OutputChoice::apply(const Scenario &scenario, size_t flat_input) const {
    size_t o = 0;
    for (size_t k = 0; k < maps.size(); k++) {
        o += maps[k][scenario.inputs().digit(flat_input, k)] * scenario.outputs().stride(k);
    }
    return o;
}

uint64_t count_output_choices(const Scenario &scenario) {
    uint64_t total = 1;
    for (const auto &p : scenario.parties()) {
        total = saturating_mul(total, saturating_pow(p.outputs, p.inputs));
    }
    return total;
}

void for_each_output_choice(const Scenario &scenario, uint64_t cap,
                            const std::function<bool(const OutputChoice &)> &visit) {
    uint64_t total = count_output_choices(scenario);
    if (total > cap) {
        throw Error(ErrorKind::SearchSpaceTooLarge, "output-choice count " + std::to_string(total) +
                                                        " exceeds the enumeration cap " + std::to_string(cap));
    }
    OutputChoice choice;
    for (const auto &p : scenario.parties()) {
        choice.maps.emplace_back(p.inputs, 0);
    }
    while (true) {
        if (!visit(choice)) {
            return;
        }
        // Odometer step: the last entry of the last party moves fastest.
        size_t k = choice.maps.size();
        bool carried = true;
        while (carried && k-- > 0) {
            auto &m = choice.maps[k];
            uint32_t limit = scenario.party(k).outputs;
            size_t j = m.size();
            while (j-- > 0) {
                if (++m[j] < limit) {
                    carried = false;
                    break;
                }
                m[j] = 0;
            }
        }
        if (carried) {
            return;
        }
    }
}

namespace {

/// Every output choice pre-applied to every flat input: row c holds f_c(i⃗) for all i⃗.
struct ChoiceTable {
    std::vector<OutputChoice> choices;
    std::vector<uint32_t> outputs;
    size_t width = 0;

    ChoiceTable(const Scenario &s, uint64_t cap) {
        width = s.inputs().size();
        for_each_output_choice(s, cap, [&](const OutputChoice &f) {
            choices.push_back(f);
            for (size_t i = 0; i < width; i++) {
                outputs.push_back(static_cast<uint32_t>(f.apply(s, i)));
            }
            return true;
        });
    }
    const uint32_t *row(size_t c) const {
        return outputs.data() + c * width;
    }
};

size_t count_fixed_points(const std::vector<uint32_t> &flat_omega, const uint32_t *f_row, size_t width,
                          size_t stop_after) {
    size_t count = 0;
    for (size_t i = 0; i < width; i++) {
        if (flat_omega[f_row[i]] == i) {
            if (++count >= stop_after) {
                break;
            }
        }
    }
    return count;
}

}  // namespace

ConsistencyVerdict is_logically_consistent(const QuasiProcess &process, const SearchLimits &limits) {
    const Scenario &s = process.scenario();
    ConsistencyVerdict verdict;
    Rational mass;
    for_each_output_choice(s, limits.enumeration_cap, [&](const OutputChoice &f) {
        verdict.choices_checked++;
        mass = 0;
        for (size_t i = 0; i < s.inputs().size(); i++) {
            mass += process.at(i, f.apply(s, i));
        }
        // Report the smallest violating mass, so antinomies (mass 0) win.
        if (mass != 1 && (verdict.consistent || mass < verdict.violating_mass)) {
            verdict.consistent = false;
            verdict.violating_choice = f;
            verdict.violating_mass = mass;
        }
        return !(verdict.violating_choice && is_zero(verdict.violating_mass));
    });
    return verdict;
}

QuasiProcessFunction::QuasiProcessFunction(Scenario scenario, std::vector<std::vector<uint32_t>> omega)
    : scenario_(std::move(scenario)), omega_(std::move(omega)) {
    size_t no = scenario_.outputs().size();
    if (omega_.size() != scenario_.num_parties()) {
        throw Error(ErrorKind::DimensionMismatch, "omega needs one map per party");
    }
    flat_.assign(no, 0);
    for (size_t k = 0; k < omega_.size(); k++) {
        if (omega_[k].size() != no) {
            throw Error(ErrorKind::DimensionMismatch,
                        "omega_" + std::to_string(k + 1) + " must be defined on every joint output");
        }
        for (size_t o = 0; o < no; o++) {
            if (omega_[k][o] >= scenario_.party(k).inputs) {
                throw Error(ErrorKind::DimensionMismatch, "omega value out of the input alphabet");
            }
            flat_[o] += static_cast<uint32_t>(omega_[k][o] * scenario_.inputs().stride(k));
        }
    }
}

bool QuasiProcessFunction::is_reduced() const {
    const auto &out = scenario_.outputs();
    for (size_t k = 0; k < omega_.size(); k++) {
        for (size_t o = 0; o < out.size(); o++) {
            uint32_t ok = out.digit(o, k);
            if (ok == 0) {
                continue;
            }
            size_t base = o - ok * out.stride(k);
            if (omega_[k][o] != omega_[k][base]) {
                return false;
            }
        }
    }
    return true;
}

std::vector<size_t> fixed_points(const QuasiProcessFunction &omega, const OutputChoice &choice) {
    const Scenario &s = omega.scenario();
    std::vector<size_t> out;
    for (size_t i = 0; i < s.inputs().size(); i++) {
        if (omega.apply(choice.apply(s, i)) == i) {
            out.push_back(i);
        }
    }
    return out;
}

ProcessFunctionVerdict is_process_function(const QuasiProcessFunction &omega, const SearchLimits &limits) {
    const Scenario &s = omega.scenario();
    ProcessFunctionVerdict verdict;
    for_each_output_choice(s, limits.enumeration_cap, [&](const OutputChoice &f) {
        size_t count = fixed_points(omega, f).size();
        if (count != 1 && (verdict.is_process_function || count < verdict.fixed_point_count)) {
            verdict.is_process_function = false;
            verdict.offending_choice = f;
            verdict.fixed_point_count = count;
        }
        return !(verdict.offending_choice && verdict.fixed_point_count == 0);
    });
    return verdict;
}

uint64_t count_candidate_functions(const Scenario &scenario, bool reduced) {
    uint64_t total = 1;
    uint64_t no = scenario.outputs().size();
    for (const auto &p : scenario.parties()) {
        uint64_t domain = reduced ? no / p.outputs : no;
        total = saturating_mul(total, saturating_pow(p.inputs, domain));
    }
    return total;
}

void for_each_process_function(const Scenario &s, bool reduced, const SearchLimits &limits,
                               const std::function<bool(const QuasiProcessFunction &)> &visit) {
    uint64_t candidates = count_candidate_functions(s, reduced);
    if (candidates > limits.enumeration_cap) {
        throw Error(ErrorKind::SearchSpaceTooLarge, "candidate count " + std::to_string(candidates) +
                                                        " exceeds the enumeration cap " +
                                                        std::to_string(limits.enumeration_cap));
    }
    ChoiceTable choices(s, limits.enumeration_cap);
    size_t n = s.num_parties();
    size_t no = s.outputs().size();
    const auto &out = s.outputs();

    // Domain of each party's table: o⃗ itself, or o⃗ with o_k dropped.
    std::vector<size_t> domain(n);
    std::vector<std::vector<size_t>> entry_of(n, std::vector<size_t>(no));
    for (size_t k = 0; k < n; k++) {
        domain[k] = reduced ? no / s.party(k).outputs : no;
        for (size_t o = 0; o < no; o++) {
            if (!reduced) {
                entry_of[k][o] = o;
                continue;
            }
            // Re-flatten o⃗ without digit k, remaining digits in party order.
            size_t r = 0;
            for (size_t j = 0; j < n; j++) {
                if (j != k) {
                    r = r * out.dim(j) + out.digit(o, j);
                }
            }
            entry_of[k][o] = r;
        }
    }

    std::vector<std::vector<uint32_t>> tables(n);
    for (size_t k = 0; k < n; k++) {
        tables[k].assign(domain[k], 0);
    }
    std::vector<uint32_t> flat(no);
    std::vector<std::vector<uint32_t>> omega(n, std::vector<uint32_t>(no));
    while (true) {
        std::fill(flat.begin(), flat.end(), 0);
        for (size_t k = 0; k < n; k++) {
            size_t stride = s.inputs().stride(k);
            for (size_t o = 0; o < no; o++) {
                flat[o] += static_cast<uint32_t>(tables[k][entry_of[k][o]] * stride);
            }
        }
        bool ok = true;
        for (size_t c = 0; c < choices.choices.size() && ok; c++) {
            ok = count_fixed_points(flat, choices.row(c), choices.width, 2) == 1;
        }
        if (ok) {
            for (size_t k = 0; k < n; k++) {
                for (size_t o = 0; o < no; o++) {
                    omega[k][o] = tables[k][entry_of[k][o]];
                }
            }
            if (!visit(QuasiProcessFunction(s, omega))) {
                return;
            }
        }
        size_t k = n;
        bool carried = true;
        while (carried && k-- > 0) {
            auto &t = tables[k];
            uint32_t limit = s.party(k).inputs;
            size_t j = t.size();
            while (j-- > 0) {
                if (++t[j] < limit) {
                    carried = false;
                    break;
                }
                t[j] = 0;
            }
        }
        if (carried) {
            return;
        }
    }
}

std::vector<QuasiProcessFunction> enumerate_process_functions(const Scenario &scenario, bool reduced,
                                                              const SearchLimits &limits) {
    std::vector<QuasiProcessFunction> out;
    for_each_process_function(scenario, reduced, limits, [&](const QuasiProcessFunction &w) {
        out.push_back(w);
        return true;
    });
    return out;
}

QuasiProcessFunction identity_loop() {
    return QuasiProcessFunction(Scenario::uniform(1, 2), {{0, 1}});
}

QuasiProcess quasiprocess_from_function(const QuasiProcessFunction &omega) {
    const Scenario &s = omega.scenario();
    size_t no = s.outputs().size();
    std::vector<Rational> table(s.inputs().size() * no);
    for (size_t o = 0; o < no; o++) {
        table[omega.apply(o) * no + o] = 1;
    }
    return QuasiProcess(s, std::move(table));
}

QuasiProcess mixture_process(const ProcessFunctionMixture &mixture, const SearchLimits &limits) {
    if (mixture.components.empty()) {
        throw Error(ErrorKind::InvalidMixture, "empty mixture");
    }
    const Scenario &s = mixture.components.front().first.scenario();
    size_t no = s.outputs().size();
    std::vector<Rational> table(s.inputs().size() * no);
    Rational total = 0;
    for (const auto &[omega, weight] : mixture.components) {
        if (!(omega.scenario() == s)) {
            throw Error(ErrorKind::InvalidMixture, "mixture components live in different scenarios");
        }
        if (sgn(weight) < 0) {
            throw Error(ErrorKind::InvalidMixture, "negative mixture weight " + format_rational(weight));
        }
        if (!is_process_function(omega, limits).is_process_function) {
            throw Error(ErrorKind::InvalidMixture, "mixture component is not a process function");
        }
        total += weight;
        for (size_t o = 0; o < no; o++) {
            table[omega.apply(o) * no + o] += weight;
        }
    }
    if (total != 1) {
        throw Error(ErrorKind::InvalidMixture, "mixture weights sum to " + format_rational(total));
    }
    return QuasiProcess(s, std::move(table));
}

}  // namespace causelab
