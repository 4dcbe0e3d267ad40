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

#include "causelab/classify.h"

#include "causelab/linear_program.h"

namespace causelab {

const char *membership_name(Membership m) {
    switch (m) {
        case Membership::In:
            return "in";
        case Membership::Out:
            return "out";
        case Membership::Unknown:
            return "unknown";
    }
    return "unknown";
}

static std::vector<Rational> vertex_point(const Scenario &s, const std::vector<size_t> &outcome_for_setting) {
    size_t na = s.settings().size();
    std::vector<Rational> p(s.outcomes().size() * na);
    for (size_t a = 0; a < na; a++) {
        p[outcome_for_setting[a] * na + a] = 1;
    }
    return p;
}

static Rational dot(const std::vector<Rational> &u, const std::vector<Rational> &v) {
    Rational total = 0;
    for (size_t j = 0; j < u.size(); j++) {
        if (!is_zero(u[j]) && !is_zero(v[j])) {
            total += u[j] * v[j];
        }
    }
    return total;
}

ClassLabel classify(const Correlation &corr, const std::vector<Game> &witnesses, const SearchLimits &limits) {
    if (!validate_correlation(corr).ok()) {
        throw Error(ErrorKind::InvalidTable, "classify needs a valid correlation");
    }
    const Scenario &s = corr.scenario();
    ClassLabel label;
    label.qc.realization = universal_realization(corr);

    for (const auto &game : witnesses) {
        Game g = game.with_scenario(s);
        WitnessCheck dc_check{game.name(), score(g, corr), dc_bound(g, limits).value, false, g};
        dc_check.violated = dc_check.score > dc_check.bound;
        label.dc.witnesses.push_back(dc_check);
        if (game.known_pc_bound()) {
            WitnessCheck pc_check{game.name(), dc_check.score, *game.known_pc_bound(), false, g};
            pc_check.violated = pc_check.score > pc_check.bound;
            label.pc.witnesses.push_back(pc_check);
        }
    }

    try {
        ResponsePatternSet patterns = compute_response_patterns(s, limits, true);
        std::vector<DcVertex> vertices = enumerate_dc_vertices(patterns, limits);
        std::vector<std::vector<Rational>> points;
        points.reserve(vertices.size());
        for (const auto &v : vertices) {
            points.push_back(vertex_point(s, v.outcome_for_setting));
        }
        HullResult hull = hull_membership(corr.table(), points, limits.hull_vertex_cap);
        label.dc.method = "hull";
        label.dc.vertex_count = vertices.size();
        if (hull.inside) {
            label.dc.verdict = Membership::In;
            for (size_t v = 0; v < vertices.size(); v++) {
                if (is_zero(hull.weights[v])) {
                    continue;
                }
                const auto &pattern = patterns.patterns[vertices[v].pattern_index];
                NomicComponent c;
                c.omega = patterns.functions[pattern.function_index];
                c.intervention.output_map = patterns.output_maps(pattern.output_family);
                c.intervention.outcome_map = vertices[v].outcome_maps;
                c.outcome_for_setting = vertices[v].outcome_for_setting;
                c.weight = hull.weights[v];
                label.dc.components.push_back(std::move(c));
            }
        } else {
            label.dc.verdict = Membership::Out;
            label.dc.functional = hull.functional;
            label.dc.functional_bound = hull.bound;
            label.dc.functional_value = dot(hull.functional, corr.table());
        }
    } catch (const Error &e) {
        if (e.kind() != ErrorKind::CapExceeded && e.kind() != ErrorKind::SearchSpaceTooLarge) {
            throw;
        }
        label.dc.cap_binding = true;
        label.dc.cap_note = e.what();
        label.dc.method = "witness";
        for (const auto &w : label.dc.witnesses) {
            if (w.violated) {
                label.dc.verdict = Membership::Out;
                break;
            }
        }
    }

    if (label.dc.verdict == Membership::In) {
        label.pc.verdict = Membership::In;
        label.pc.method = "implied-by-dc";
    } else if (s.canonicalizable()) {
        // Under canonical interventions the process must equal the correlation table.
        QuasiProcess as_process(s, corr.table());
        if (is_logically_consistent(as_process, limits).consistent) {
            label.pc.verdict = Membership::In;
            label.pc.method = "canonical";
            label.pc.realization = Realization{as_process, canonical_interventions(s)};
        }
    }
    if (label.pc.verdict != Membership::In) {
        for (const auto &w : label.pc.witnesses) {
            if (w.violated) {
                label.pc.verdict = Membership::Out;
                label.pc.method = "witness";
                break;
            }
        }
    }
    return label;
}

std::string replay_certificates(const Correlation &corr, const ClassLabel &label) {
    const Scenario &s = corr.scenario();
    {
        Correlation got = evaluate_correlation(label.qc.realization.process, label.qc.realization.interventions);
        if (got.table() != corr.table()) {
            return "qC realization does not reproduce the correlation";
        }
    }

    const auto &dc = label.dc;
    if (dc.verdict == Membership::In) {
        Correlation sum = Correlation::zeros(s);
        Rational total = 0;
        for (const auto &c : dc.components) {
            if (sgn(c.weight) < 0) {
                return "negative nomic weight";
            }
            if (!is_process_function(c.omega).is_process_function) {
                return "nomic component is not a process function";
            }
            total += c.weight;
            Correlation part = evaluate_correlation(quasiprocess_from_function(c.omega), c.intervention.to_family(s));
            for (size_t j = 0; j < part.table().size(); j++) {
                sum.at(j / s.settings().size(), j % s.settings().size()) += c.weight * part.table()[j];
            }
        }
        if (total != 1) {
            return "nomic weights do not sum to one";
        }
        if (sum.table() != corr.table()) {
            return "nomic mixture does not reproduce the correlation";
        }
    } else if (dc.verdict == Membership::Out) {
        if (dc.method == "hull") {
            if (dot(dc.functional, corr.table()) != dc.functional_value || !(dc.functional_value > dc.functional_bound)) {
                return "separating functional does not separate the correlation";
            }
            SearchLimits limits;
            auto patterns = compute_response_patterns(s, limits, true);
            for (const auto &v : enumerate_dc_vertices(patterns, limits)) {
                if (dot(dc.functional, vertex_point(s, v.outcome_for_setting)) > dc.functional_bound) {
                    return "a nomic vertex exceeds the separating bound";
                }
            }
        } else {
            bool any = false;
            for (const auto &w : dc.witnesses) {
                if (w.violated) {
                    Game g = w.definition.with_scenario(s);
                    if (score(g, corr) != w.score || !(w.score > w.bound)) {
                        return "witness score does not exceed its bound";
                    }
                    any = true;
                }
            }
            if (!any) {
                return "DC out without a violated witness";
            }
        }
    }

    const auto &pc = label.pc;
    if (pc.verdict == Membership::In) {
        if (pc.method == "implied-by-dc") {
            if (dc.verdict != Membership::In) {
                return "PC in is implied by DC, but DC is not in";
            }
        } else {
            if (!pc.realization) {
                return "PC in without a realization";
            }
            if (!is_logically_consistent(pc.realization->process).consistent) {
                return "PC realization is not a classical process";
            }
            Correlation got = evaluate_correlation(pc.realization->process, pc.realization->interventions);
            if (got.table() != corr.table()) {
                return "PC realization does not reproduce the correlation";
            }
        }
    } else if (pc.verdict == Membership::Out) {
        bool any = false;
        for (const auto &w : pc.witnesses) {
            any = any || (w.violated && w.score > w.bound);
        }
        if (!any) {
            return "PC out without a violated witness";
        }
    }
    return "";
}

}  // namespace causelab
