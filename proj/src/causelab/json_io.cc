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

#include "causelab/json_io.h"

#include <cmath>

namespace causelab {

namespace {

[[noreturn]] void parse_fail(const std::string &what) {
    throw Error(ErrorKind::Parse, what);
}

const Json &field(const Json &j, const char *key) {
    if (!j.is_object()) {
        parse_fail(std::string("expected an object with field '") + key + "'");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        parse_fail(std::string("missing field '") + key + "'");
    }
    return *it;
}

uint32_t as_count(const Json &j, const char *what) {
    if (!j.is_number_integer() || j.get<int64_t>() < 0 || j.get<int64_t>() > UINT32_MAX) {
        parse_fail(std::string(what) + " must be a non-negative integer");
    }
    return j.get<uint32_t>();
}

std::vector<uint32_t> as_counts(const Json &j, const char *what) {
    if (!j.is_array()) {
        parse_fail(std::string(what) + " must be an array");
    }
    std::vector<uint32_t> out;
    for (const auto &v : j) {
        out.push_back(as_count(v, what));
    }
    return out;
}

Rational as_rational(const Json &j) {
    if (j.is_string()) {
        return parse_rational(j.get<std::string>());
    }
    if (j.is_number_integer()) {
        return Rational(j.get<int64_t>());
    }
    parse_fail("rationals must be \"num/den\" strings or integers");
}

Json rational_json(const Rational &r) {
    return format_rational(r);
}

Json rationals_json(const std::vector<Rational> &values) {
    Json out = Json::array();
    for (const auto &v : values) {
        out.push_back(rational_json(v));
    }
    return out;
}

std::vector<Rational> as_rationals(const Json &j, const char *what) {
    if (!j.is_array()) {
        parse_fail(std::string(what) + " must be an array");
    }
    std::vector<Rational> out;
    for (const auto &v : j) {
        out.push_back(as_rational(v));
    }
    return out;
}

/// Dense rows x cols table of rationals.
Json matrix_json(const std::vector<Rational> &flat, size_t rows, size_t cols) {
    Json out = Json::array();
    for (size_t r = 0; r < rows; r++) {
        Json row = Json::array();
        for (size_t c = 0; c < cols; c++) {
            row.push_back(rational_json(flat[r * cols + c]));
        }
        out.push_back(std::move(row));
    }
    return out;
}

std::vector<Rational> as_matrix(const Json &j, size_t rows, size_t cols, const char *what) {
    if (!j.is_array() || j.size() != rows) {
        parse_fail(std::string(what) + " must have " + std::to_string(rows) + " rows");
    }
    std::vector<Rational> out;
    out.reserve(rows * cols);
    for (const auto &row : j) {
        if (!row.is_array() || row.size() != cols) {
            parse_fail(std::string(what) + " rows must have " + std::to_string(cols) + " entries");
        }
        for (const auto &v : row) {
            out.push_back(as_rational(v));
        }
    }
    return out;
}

Json complex_matrix_json(const ComplexMatrix &m) {
    Json out = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); r++) {
        for (Eigen::Index c = 0; c < m.cols(); c++) {
            out.push_back(Json::array({m(r, c).real(), m(r, c).imag()}));
        }
    }
    return out;
}

ComplexMatrix as_complex_matrix(const Json &j, size_t d, const char *what) {
    if (!j.is_array() || j.size() != d * d) {
        parse_fail(std::string(what) + " must hold " + std::to_string(d * d) + " [re, im] pairs");
    }
    ComplexMatrix m(d, d);
    size_t idx = 0;
    for (const auto &entry : j) {
        if (!entry.is_array() || entry.size() != 2 || !entry[0].is_number() || !entry[1].is_number()) {
            parse_fail(std::string(what) + " entries must be [re, im] number pairs");
        }
        m(idx / d, idx % d) = std::complex<double>(entry[0].get<double>(), entry[1].get<double>());
        idx++;
    }
    return m;
}

Json maps_json(const std::vector<std::vector<uint32_t>> &maps) {
    Json out = Json::array();
    for (const auto &m : maps) {
        out.push_back(m);
    }
    return out;
}

}  // namespace

Json parse_json_text(std::string_view text) {
    try {
        return Json::parse(text.begin(), text.end());
    } catch (const nlohmann::json::exception &e) {
        parse_fail(std::string("invalid JSON: ") + e.what());
    }
}

Json to_json(const Scenario &scenario) {
    Json j;
    std::vector<uint32_t> settings, outcomes, inputs, outputs;
    for (const auto &p : scenario.parties()) {
        settings.push_back(p.settings);
        outcomes.push_back(p.outcomes);
        inputs.push_back(p.inputs);
        outputs.push_back(p.outputs);
    }
    j["parties"] = scenario.num_parties();
    j["settings"] = settings;
    j["outcomes"] = outcomes;
    j["inputs"] = inputs;
    j["outputs"] = outputs;
    return j;
}

Scenario scenario_from_json(const Json &j) {
    auto settings = as_counts(field(j, "settings"), "settings");
    auto outcomes = as_counts(field(j, "outcomes"), "outcomes");
    auto inputs = as_counts(field(j, "inputs"), "inputs");
    auto outputs = as_counts(field(j, "outputs"), "outputs");
    size_t n = settings.size();
    if (j.contains("parties") && as_count(j["parties"], "parties") != n) {
        parse_fail("'parties' disagrees with the alphabet arrays");
    }
    if (outcomes.size() != n || inputs.size() != n || outputs.size() != n) {
        parse_fail("alphabet arrays must all have one entry per party");
    }
    std::vector<PartyAlphabet> parties;
    for (size_t k = 0; k < n; k++) {
        parties.push_back(PartyAlphabet{settings[k], outcomes[k], inputs[k], outputs[k]});
    }
    return Scenario::make(std::move(parties));
}

Json to_json(const Correlation &corr) {
    const Scenario &s = corr.scenario();
    Json j;
    j["scenario"] = to_json(s);
    j["p"] = matrix_json(corr.table(), s.outcomes().size(), s.settings().size());
    return j;
}

Correlation correlation_from_json(const Json &j) {
    Scenario s = scenario_from_json(field(j, "scenario"));
    return Correlation(s, as_matrix(field(j, "p"), s.outcomes().size(), s.settings().size(), "p"));
}

Json to_json(const QuasiProcess &process) {
    const Scenario &s = process.scenario();
    Json j;
    j["scenario"] = to_json(s);
    j["p"] = matrix_json(process.table(), s.inputs().size(), s.outputs().size());
    return j;
}

QuasiProcess quasiprocess_from_json(const Json &j) {
    Scenario s = scenario_from_json(field(j, "scenario"));
    return QuasiProcess(s, as_matrix(field(j, "p"), s.inputs().size(), s.outputs().size(), "p"));
}

Json to_json(const InterventionFamily &interventions) {
    Json j;
    j["scenario"] = to_json(interventions.scenario());
    Json parties = Json::array();
    for (const auto &local : interventions.parties()) {
        const auto &p = local.alphabet();
        parties.push_back(matrix_json(local.table(), static_cast<size_t>(p.outcomes) * p.outputs,
                                      static_cast<size_t>(p.settings) * p.inputs));
    }
    j["interventions"] = std::move(parties);
    return j;
}

InterventionFamily interventions_from_json(const Json &j) {
    Scenario s = scenario_from_json(field(j, "scenario"));
    const Json &tables = field(j, "interventions");
    if (!tables.is_array() || tables.size() != s.num_parties()) {
        parse_fail("'interventions' must hold one table per party");
    }
    std::vector<LocalIntervention> parties;
    for (size_t k = 0; k < s.num_parties(); k++) {
        const auto &p = s.party(k);
        parties.emplace_back(p, as_matrix(tables[k], static_cast<size_t>(p.outcomes) * p.outputs,
                                          static_cast<size_t>(p.settings) * p.inputs, "intervention"));
    }
    return InterventionFamily(s, std::move(parties));
}

Json to_json(const QuasiProcessFunction &omega) {
    Json j;
    j["scenario"] = to_json(omega.scenario());
    j["omega"] = maps_json(omega.omega());
    return j;
}

QuasiProcessFunction process_function_from_json(const Json &j) {
    Scenario s = scenario_from_json(field(j, "scenario"));
    const Json &table = field(j, "omega");
    if (!table.is_array()) {
        parse_fail("'omega' must be an array");
    }
    std::vector<std::vector<uint32_t>> omega;
    for (const auto &row : table) {
        omega.push_back(as_counts(row, "omega"));
    }
    return QuasiProcessFunction(s, std::move(omega));
}

Json to_json(const DeterministicIntervention &intervention) {
    Json j;
    j["output_map"] = maps_json(intervention.output_map);
    j["outcome_map"] = maps_json(intervention.outcome_map);
    return j;
}

Json to_json(const OutputChoice &choice) {
    return maps_json(choice.maps);
}

Json to_json(const Game &game) {
    const Scenario &s = game.scenario();
    Json j;
    j["name"] = game.name();
    j["scenario"] = to_json(s);
    j["payoff"] = matrix_json(game.payoff(), s.outcomes().size(), s.settings().size());
    j["settings"] = rationals_json(game.settings_distribution());
    if (game.known_pc_bound()) {
        j["known_pc_bound"] = rational_json(*game.known_pc_bound());
    }
    return j;
}

Game game_from_json(const Json &j) {
    Scenario s = scenario_from_json(field(j, "scenario"));
    std::string name = "file";
    if (j.contains("name")) {
        if (!j["name"].is_string()) {
            parse_fail("'name' must be a string");
        }
        name = j["name"].get<std::string>();
    }
    auto payoff = as_matrix(field(j, "payoff"), s.outcomes().size(), s.settings().size(), "payoff");
    auto settings = as_rationals(field(j, "settings"), "settings");
    if (settings.size() != s.settings().size()) {
        parse_fail("'settings' must hold one probability per joint setting");
    }
    std::optional<Rational> known;
    if (j.contains("known_pc_bound")) {
        known = as_rational(j["known_pc_bound"]);
    }
    return Game(name, s, std::move(payoff), std::move(settings), known);
}

Json to_json(const ProcessMatrix &pm) {
    Json j;
    j["dims"] = {{"inputs", pm.dims().inputs}, {"outputs", pm.dims().outputs}};
    j["W"] = complex_matrix_json(pm.matrix());
    return j;
}

ProcessMatrix process_matrix_from_json(const Json &j) {
    const Json &dims_json = field(j, "dims");
    QuantumDims dims{as_counts(field(dims_json, "inputs"), "inputs"), as_counts(field(dims_json, "outputs"), "outputs")};
    if (dims.inputs.size() != dims.outputs.size() || dims.inputs.empty()) {
        parse_fail("'dims' needs matching, non-empty input and output arrays");
    }
    for (size_t k = 0; k < dims.inputs.size(); k++) {
        if (dims.inputs[k] == 0 || dims.outputs[k] == 0 || dims.inputs[k] > 64 || dims.outputs[k] > 64) {
            parse_fail("dimensions must lie in 1..64");
        }
    }
    size_t d = dims.total();
    if (d > 4096) {
        parse_fail("process matrix dimension above 4096 is not supported");
    }
    return ProcessMatrix(std::move(dims), as_complex_matrix(field(j, "W"), d, "W"));
}

Json to_json(const InstrumentFamily &instruments) {
    Json parties = Json::array();
    for (const auto &ins : instruments) {
        Json p;
        p["input_dim"] = ins.input_dim;
        p["output_dim"] = ins.output_dim;
        Json elements = Json::array();
        for (const auto &row : ins.elements) {
            Json r = Json::array();
            for (const auto &m : row) {
                r.push_back(complex_matrix_json(m));
            }
            elements.push_back(std::move(r));
        }
        p["elements"] = std::move(elements);
        parties.push_back(std::move(p));
    }
    Json j;
    j["parties"] = std::move(parties);
    return j;
}

InstrumentFamily instruments_from_json(const Json &j) {
    const Json &parties = field(j, "parties");
    if (!parties.is_array() || parties.empty()) {
        parse_fail("'parties' must be a non-empty array");
    }
    InstrumentFamily out;
    for (const auto &p : parties) {
        Instrument ins;
        ins.input_dim = as_count(field(p, "input_dim"), "input_dim");
        ins.output_dim = as_count(field(p, "output_dim"), "output_dim");
        if (ins.input_dim == 0 || ins.output_dim == 0 || ins.input_dim > 64 || ins.output_dim > 64) {
            parse_fail("instrument dimensions must lie in 1..64");
        }
        size_t d = static_cast<size_t>(ins.input_dim) * ins.output_dim;
        const Json &elements = field(p, "elements");
        if (!elements.is_array() || elements.empty()) {
            parse_fail("'elements' must be a non-empty array indexed [setting][outcome]");
        }
        for (const auto &row : elements) {
            if (!row.is_array() || row.empty()) {
                parse_fail("each setting needs a non-empty array of CJ matrices");
            }
            std::vector<ComplexMatrix> ms;
            for (const auto &m : row) {
                ms.push_back(as_complex_matrix(m, d, "CJ matrix"));
            }
            ins.elements.push_back(std::move(ms));
        }
        out.push_back(std::move(ins));
    }
    return out;
}

Json to_json(const FloatCorrelation &corr) {
    const Scenario &s = corr.scenario;
    size_t na = s.settings().size();
    Json rows = Json::array();
    for (size_t x = 0; x < s.outcomes().size(); x++) {
        Json row = Json::array();
        for (size_t a = 0; a < na; a++) {
            row.push_back(corr.table[x * na + a]);
        }
        rows.push_back(std::move(row));
    }
    Json j;
    j["scenario"] = to_json(s);
    j["p"] = std::move(rows);
    j["min_entry"] = corr.min_entry;
    j["max_normalization_residual"] = corr.max_normalization_residual;
    return j;
}

Json to_json(const ValidityReport &report) {
    Json j;
    j["valid"] = report.valid;
    j["min_eigenvalue"] = report.min_eigenvalue;
    j["hermiticity_residual"] = report.hermiticity_residual;
    j["normalization_residual"] = report.normalization_residual;
    j["checks"] = report.checks;
    if (!report.reason.empty()) {
        j["reason"] = report.reason;
    }
    return j;
}

Json to_json(const ConsistencyVerdict &verdict) {
    Json j;
    j["consistent"] = verdict.consistent;
    j["choices_checked"] = verdict.choices_checked;
    if (verdict.violating_choice) {
        j["certificate"] = {{"output_choice", to_json(*verdict.violating_choice)},
                            {"mass", rational_json(verdict.violating_mass)}};
    }
    return j;
}

Json to_json(const ProcessFunctionVerdict &verdict) {
    Json j;
    j["is_process_function"] = verdict.is_process_function;
    if (verdict.offending_choice) {
        j["certificate"] = {{"output_choice", to_json(*verdict.offending_choice)},
                            {"fixed_points", verdict.fixed_point_count}};
    }
    return j;
}

Json to_json(const CausalStep &strategy) {
    Json j;
    j["party"] = strategy.party + 1;
    Json branches = Json::array();
    for (const auto &b : strategy.branches) {
        Json bj;
        bj["setting"] = b.setting;
        bj["outcome"] = b.outcome;
        if (b.next) {
            bj["next"] = to_json(*b.next);
        }
        branches.push_back(std::move(bj));
    }
    j["branches"] = std::move(branches);
    return j;
}

Json to_json(const CausalBound &bound) {
    Json j;
    j["value"] = rational_json(bound.value);
    j["witness"] = {{"strategy", to_json(bound.strategy)}};
    j["stats"] = {{"leaves_visited", bound.leaves_visited}};
    return j;
}

Json to_json(const DcBound &bound) {
    Json j;
    j["value"] = rational_json(bound.value);
    j["witness"] = {{"process_function", to_json(bound.omega)}, {"intervention", to_json(bound.intervention)}};
    j["stats"] = {{"process_functions", bound.process_functions},
                  {"output_families", bound.output_families},
                  {"distinct_patterns", bound.distinct_patterns}};
    return j;
}

Json to_json(const PcBound &bound) {
    Json j;
    j["value"] = rational_json(bound.value);
    j["witness"] = {{"process", to_json(bound.process)},
                    {"interventions", to_json(bound.interventions)},
                    {"interventions_source", bound.interventions_source}};
    if (bound.canonical_value) {
        j["canonical_value"] = rational_json(*bound.canonical_value);
    }
    j["stats"] = {{"lp_constraints", bound.lp_constraints}};
    j["note"] = "inner bound: interventions held fixed";
    return j;
}

Json to_json(const WitnessCheck &check) {
    Json j;
    j["game"] = check.game;
    j["score"] = rational_json(check.score);
    j["bound"] = rational_json(check.bound);
    j["violated"] = check.violated;
    return j;
}

static Json witnesses_json(const std::vector<WitnessCheck> &checks) {
    Json out = Json::array();
    for (const auto &c : checks) {
        out.push_back(to_json(c));
    }
    return out;
}

Json to_json(const ClassLabel &label) {
    Json qc;
    qc["verdict"] = membership_name(label.qc.verdict);
    qc["certificate"] = {{"process", to_json(label.qc.realization.process)},
                         {"interventions", to_json(label.qc.realization.interventions)}};

    Json pc;
    pc["verdict"] = membership_name(label.pc.verdict);
    pc["method"] = label.pc.method;
    if (label.pc.realization) {
        pc["certificate"] = {{"process", to_json(label.pc.realization->process)},
                             {"interventions", to_json(label.pc.realization->interventions)}};
    }
    pc["witnesses"] = witnesses_json(label.pc.witnesses);

    const auto &d = label.dc;
    Json dc;
    dc["verdict"] = membership_name(d.verdict);
    dc["method"] = d.method;
    dc["vertex_count"] = d.vertex_count;
    if (d.cap_binding) {
        dc["cap_binding"] = true;
        dc["cap_note"] = d.cap_note;
    }
    if (d.verdict == Membership::In) {
        Json comps = Json::array();
        for (const auto &c : d.components) {
            Json cj;
            cj["weight"] = rational_json(c.weight);
            cj["process_function"] = maps_json(c.omega.omega());
            cj["intervention"] = to_json(c.intervention);
            cj["outcome_for_setting"] = c.outcome_for_setting;
            comps.push_back(std::move(cj));
        }
        dc["certificate"] = {{"components", std::move(comps)}};
    } else if (d.verdict == Membership::Out && d.method == "hull") {
        dc["certificate"] = {{"functional", rationals_json(d.functional)},
                             {"value", rational_json(d.functional_value)},
                             {"bound", rational_json(d.functional_bound)}};
    }
    dc["witnesses"] = witnesses_json(d.witnesses);

    Json j;
    j["qC"] = std::move(qc);
    j["PC"] = std::move(pc);
    j["DC"] = std::move(dc);
    return j;
}

}  // namespace causelab
