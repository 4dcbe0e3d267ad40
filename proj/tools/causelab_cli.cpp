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

// causelab command-line front end. Talks to the library only through the C API.

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "causelab.h"

namespace {

using Json = nlohmann::ordered_json;

enum ExitCode { EXIT_OK = 0, EXIT_VIOLATION = 1, EXIT_BAD_INPUT = 2, EXIT_CAP = 3 };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;
    std::string format = "json";
    unsigned threads = 1;
    uint64_t enumeration_cap = uint64_t{1} << 32;
    uint64_t hull_cap = 100000;
    uint64_t seed = 0;
    bool timing = false;
    std::string output;
};

/// Carries a library failure up to main.
struct Failure {
    causelab_status status;
    std::string detail;  // JSON from causelab_last_error, or a plain message
};

struct ContextDeleter {
    void operator()(causelab_context *c) const {
        causelab_context_free(c);
    }
};
using Context = std::unique_ptr<causelab_context, ContextDeleter>;

template <class T, void (*Free)(T *)>
struct Handle {
    T *ptr = nullptr;
    Handle() = default;
    Handle(const Handle &) = delete;
    Handle &operator=(const Handle &) = delete;
    ~Handle() {
        Free(ptr);
    }
    T **out() {
        return &ptr;
    }
    T *get() const {
        return ptr;
    }
};

using QuasiProcessH = Handle<causelab_quasiprocess, causelab_quasiprocess_free>;
using CorrelationH = Handle<causelab_correlation, causelab_correlation_free>;
using GameH = Handle<causelab_game, causelab_game_free>;
using ProcessMatrixH = Handle<causelab_process_matrix, causelab_process_matrix_free>;
using InstrumentsH = Handle<causelab_instruments, causelab_instruments_free>;

void check(causelab_context *ctx, causelab_status status) {
    if (status != CAUSELAB_OK) {
        throw Failure{status, causelab_last_error(ctx)};
    }
}

/// Takes ownership of a library string.
std::string take(char *s) {
    std::string out = s == nullptr ? "" : s;
    causelab_string_free(s);
    return out;
}

Json take_json(char *s) {
    return Json::parse(take(s));
}

std::string read_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Failure{CAUSELAB_ERR_INVALID_ARGUMENT, "cannot read '" + path + "'"};
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool is_builtin_game(const std::string &name) {
    return name == "gynin" || name == "gyni" || name == "ocb" || name == "chsh";
}

void load_game(causelab_context *ctx, const std::string &spec, GameH &game) {
    if (is_builtin_game(spec)) {
        check(ctx, causelab_game_builtin(ctx, spec.c_str(), game.out()));
    } else {
        check(ctx, causelab_game_from_json(ctx, read_file(spec).c_str(), game.out()));
    }
}

Context make_context(const RunConfig &cfg) {
    causelab_context *raw = nullptr;
    if (causelab_context_new(&raw) != CAUSELAB_OK) {
        throw Failure{CAUSELAB_ERR_INTERNAL, "cannot allocate a context"};
    }
    Context ctx(raw);
    check(raw, causelab_context_set_threads(raw, cfg.threads));
    check(raw, causelab_context_set_enumeration_cap(raw, cfg.enumeration_cap));
    check(raw, causelab_context_set_hull_cap(raw, cfg.hull_cap));
    return ctx;
}

Json config_json(const RunConfig &cfg) {
    Json j;
    j["command"] = cfg.command;
    j["inputs"] = cfg.inputs;
    j["format"] = cfg.format;
    j["threads"] = cfg.threads;
    j["caps"] = {{"enumeration", cfg.enumeration_cap}, {"hull_vertices", cfg.hull_cap}};
    j["seed"] = cfg.seed;
    return j;
}

struct Outcome {
    Json result;
    int exit_code = EXIT_OK;
    std::string text;                       // --format text
    std::vector<std::vector<std::string>> csv;  // --format csv, first row is the header
};

void write_output(const RunConfig &cfg, const Outcome &outcome, double runtime_ms) {
    std::ostringstream out;
    if (cfg.format == "json") {
        Json report;
        report["tool"] = "causelab";
        report["version"] = causelab_version();
        report["config"] = config_json(cfg);
        report["result"] = outcome.result;
        if (cfg.timing) {
            report["runtime_ms"] = runtime_ms;
        }
        out << report.dump(2) << "\n";
    } else if (cfg.format == "text") {
        out << outcome.text;
    } else {
        if (outcome.csv.empty()) {
            throw Failure{CAUSELAB_ERR_INVALID_ARGUMENT, "csv output is only available for bound tables"};
        }
        for (const auto &row : outcome.csv) {
            for (size_t c = 0; c < row.size(); c++) {
                out << (c ? "," : "") << row[c];
            }
            out << "\n";
        }
    }
    if (cfg.output.empty()) {
        std::cout << out.str();
    } else {
        std::ofstream f(cfg.output, std::ios::binary);
        if (!f) {
            throw Failure{CAUSELAB_ERR_INVALID_ARGUMENT, "cannot write '" + cfg.output + "'"};
        }
        f << out.str();
    }
}

// --- subcommands -----------------------------------------------------------

Outcome run_check_consistency(causelab_context *ctx, const std::string &path) {
    QuasiProcessH qp;
    check(ctx, causelab_quasiprocess_from_json(ctx, read_file(path).c_str(), qp.out()));
    int consistent = 0;
    char *report = nullptr;
    check(ctx, causelab_check_consistency(ctx, qp.get(), &consistent, &report));
    Outcome o;
    o.result = take_json(report);
    o.exit_code = consistent ? EXIT_OK : EXIT_VIOLATION;
    std::ostringstream t;
    t << (consistent ? "consistent" : "inconsistent");
    if (!consistent) {
        t << ": output choice " << o.result["certificate"]["output_choice"].dump() << " gives total mass "
          << o.result["certificate"]["mass"].get<std::string>();
    }
    t << "\n";
    o.text = t.str();
    return o;
}

Outcome run_enum_pf(causelab_context *ctx, unsigned parties, unsigned alphabet, bool reduced, bool list) {
    char *report = nullptr;
    check(ctx, causelab_enumerate_process_functions(ctx, parties, alphabet, reduced ? 1 : 0, list ? 1 : 0, &report));
    Outcome o;
    o.result = take_json(report);
    std::ostringstream t;
    t << o.result["count"] << " process functions among " << o.result["candidates"] << " candidates ("
      << (reduced ? "reduced" : "unreduced") << ")\n";
    o.text = t.str();
    return o;
}

causelab_bound_set parse_set(const std::string &set) {
    if (set == "causal") {
        return CAUSELAB_BOUND_CAUSAL;
    }
    if (set == "dc") {
        return CAUSELAB_BOUND_DC;
    }
    if (set == "pc") {
        return CAUSELAB_BOUND_PC;
    }
    return CAUSELAB_BOUND_PC_CANONICAL;
}

Outcome run_bound(causelab_context *ctx, const std::string &game_spec, const std::vector<std::string> &sets) {
    GameH game;
    load_game(ctx, game_spec, game);
    Outcome o;
    o.csv.push_back({"game", "set", "value"});
    std::ostringstream t;
    Json results = Json::object();
    for (const auto &set : sets) {
        char *value = nullptr;
        char *report = nullptr;
        check(ctx, causelab_bound(ctx, game.get(), parse_set(set), &value, &report));
        std::string v = take(value);
        results[set] = take_json(report);
        o.csv.push_back({game_spec, set, v});
        t << game_spec << " " << set << " " << v << "\n";
    }
    o.result = sets.size() == 1 ? results[sets.front()] : results;
    if (sets.size() == 1) {
        o.result["game"] = game_spec;
        o.result["set"] = sets.front();
    }
    o.text = t.str();
    return o;
}

/// Built-in games whose settings/outcomes fit the correlation.
std::vector<std::string> default_witnesses(causelab_context *ctx, const causelab_correlation *corr) {
    std::vector<std::string> out;
    for (const char *name : {"gynin", "gyni", "chsh", "ocb"}) {
        GameH game;
        check(ctx, causelab_game_builtin(ctx, name, game.out()));
        char *score = nullptr;
        if (causelab_score(ctx, game.get(), corr, &score) == CAUSELAB_OK) {
            out.push_back(name);
        }
        causelab_string_free(score);
    }
    return out;
}

Outcome classify_correlation(causelab_context *ctx, const causelab_correlation *corr,
                             std::vector<std::string> witness_specs) {
    if (witness_specs.empty()) {
        witness_specs = default_witnesses(ctx, corr);
    }
    std::vector<std::unique_ptr<GameH>> games;
    std::vector<const causelab_game *> raw;
    for (const auto &spec : witness_specs) {
        games.push_back(std::make_unique<GameH>());
        load_game(ctx, spec, *games.back());
        raw.push_back(games.back()->get());
    }
    int replayed = 0;
    char *report = nullptr;
    check(ctx, causelab_classify(ctx, corr, raw.data(), raw.size(), &replayed, &report));
    Outcome o;
    o.result = take_json(report);
    o.exit_code = replayed ? EXIT_OK : EXIT_VIOLATION;
    std::ostringstream t;
    for (const char *set : {"qC", "PC", "DC"}) {
        const Json &s = o.result[set];
        t << set << ": " << s["verdict"].get<std::string>();
        if (s.contains("method")) {
            t << " (" << s["method"].get<std::string>() << ")";
        }
        t << "\n";
    }
    t << "replay: " << o.result["replay"].get<std::string>() << "\n";
    o.text = t.str();
    return o;
}

Outcome run_classify(causelab_context *ctx, const std::string &path, const std::vector<std::string> &witnesses) {
    CorrelationH corr;
    check(ctx, causelab_correlation_from_json(ctx, read_file(path).c_str(), corr.out()));
    return classify_correlation(ctx, corr.get(), witnesses);
}

Outcome run_pm_eval(causelab_context *ctx, const std::string &process, const std::string &instruments,
                    std::string game_spec) {
    ProcessMatrixH pm;
    if (process == "ocb" || process == "bfw") {
        check(ctx, causelab_process_matrix_builtin(ctx, process.c_str(), pm.out()));
    } else {
        check(ctx, causelab_process_matrix_from_json(ctx, read_file(process).c_str(), pm.out()));
    }
    InstrumentsH ins;
    if (instruments == "ocb") {
        check(ctx, causelab_instruments_builtin(ctx, "ocb", ins.out()));
    } else if (instruments == "canonical") {
        check(ctx, causelab_instruments_canonical(ctx, pm.get(), ins.out()));
    } else {
        check(ctx, causelab_instruments_from_json(ctx, read_file(instruments).c_str(), ins.out()));
    }
    if (game_spec.empty()) {
        game_spec = process == "ocb" ? "ocb" : process == "bfw" ? "gynin" : "";
    }
    GameH game;
    if (!game_spec.empty()) {
        load_game(ctx, game_spec, game);
    }
    int valid = 0;
    char *validity = nullptr;
    check(ctx, causelab_pm_validate(ctx, pm.get(), ins.get(), &valid, &validity));
    double score = 0;
    char *report = nullptr;
    check(ctx, causelab_pm_evaluate(ctx, pm.get(), ins.get(), game.get(), &score, &report));
    Outcome o;
    o.result = take_json(report);
    o.result["validity"] = take_json(validity);
    o.exit_code = valid ? EXIT_OK : EXIT_VIOLATION;
    std::ostringstream t;
    t.precision(12);
    t << "valid: " << (valid ? "yes" : "no") << "\n";
    if (game.get() != nullptr) {
        t << game_spec << " score: " << score << "\n";
    }
    o.text = t.str();
    return o;
}

// --- hierarchy demo ----------------------------------------------------------

struct DemoRow {
    std::string name;
    std::string observed;
    std::string expected;
    bool pass = false;
};

std::string bound_value(causelab_context *ctx, const char *game_name, causelab_bound_set set, Json *report = nullptr) {
    GameH game;
    check(ctx, causelab_game_builtin(ctx, game_name, game.out()));
    char *value = nullptr;
    char *rep = nullptr;
    check(ctx, causelab_bound(ctx, game.get(), set, &value, report ? &rep : nullptr));
    if (report != nullptr) {
        *report = take_json(rep);
    }
    return take(value);
}

Outcome run_hierarchy_demo(causelab_context *ctx) {
    std::vector<DemoRow> rows;
    auto add = [&](std::string name, std::string observed, std::string expected, bool pass) {
        rows.push_back({std::move(name), std::move(observed), std::move(expected), pass});
    };
    auto eq = [&](std::string name, const std::string &observed, const std::string &expected) {
        add(std::move(name), observed, expected, observed == expected);
    };

    eq("gynin dc bound", bound_value(ctx, "gynin", CAUSELAB_BOUND_DC), "5/8");
    eq("gynin causal bound", bound_value(ctx, "gynin", CAUSELAB_BOUND_CAUSAL), "1/2");
    {
        Json pc;
        std::string v = bound_value(ctx, "gynin", CAUSELAB_BOUND_PC, &pc);
        QuasiProcessH bfw;
        check(ctx, causelab_quasiprocess_builtin(ctx, "bfw", bfw.out()));
        char *bfw_json = nullptr;
        check(ctx, causelab_quasiprocess_to_json(ctx, bfw.get(), &bfw_json));
        bool is_bfw = pc["witness"]["process"] == take_json(bfw_json);
        add("gynin pc value, BFW optimizer", v + (is_bfw ? " (BFW)" : " (other optimizer)"), "1/1 (BFW)",
            v == "1/1" && is_bfw);
    }
    eq("gyni causal bound", bound_value(ctx, "gyni", CAUSELAB_BOUND_CAUSAL), "1/2");
    eq("gyni dc bound", bound_value(ctx, "gyni", CAUSELAB_BOUND_DC), "1/2");
    eq("gyni pc canonical", bound_value(ctx, "gyni", CAUSELAB_BOUND_PC_CANONICAL), "1/2");
    eq("chsh dc bound", bound_value(ctx, "chsh", CAUSELAB_BOUND_DC), "3/4");
    eq("chsh pc canonical", bound_value(ctx, "chsh", CAUSELAB_BOUND_PC_CANONICAL), "3/4");
    {
        QuasiProcessH gf;
        check(ctx, causelab_quasiprocess_builtin(ctx, "grandfather", gf.out()));
        int consistent = 1;
        char *rep = nullptr;
        check(ctx, causelab_check_consistency(ctx, gf.get(), &consistent, &rep));
        Json r = take_json(rep);
        std::string observed = consistent ? "consistent" : "f=" + r["certificate"]["output_choice"].dump() +
                                                                 " mass " + r["certificate"]["mass"].get<std::string>();
        eq("grandfather loop rejected", observed, "f=[[1,0]] mass 0/1");
    }

    // Named points.
    Json points = Json::object();
    double ocb_score = 0;
    {
        ProcessMatrixH pm;
        InstrumentsH ins;
        GameH game;
        check(ctx, causelab_process_matrix_builtin(ctx, "ocb", pm.out()));
        check(ctx, causelab_instruments_builtin(ctx, "ocb", ins.out()));
        check(ctx, causelab_game_builtin(ctx, "ocb", game.out()));
        int valid = 0;
        char *rep = nullptr;
        check(ctx, causelab_pm_validate(ctx, pm.get(), ins.get(), &valid, &rep));
        causelab_string_free(rep);
        char *eval = nullptr;
        check(ctx, causelab_pm_evaluate(ctx, pm.get(), ins.get(), game.get(), &ocb_score, &eval));
        causelab_string_free(eval);
        std::string causal = bound_value(ctx, "ocb", CAUSELAB_BOUND_CAUSAL);
        std::string dc = bound_value(ctx, "ocb", CAUSELAB_BOUND_DC);
        double target = (2.0 + std::sqrt(2.0)) / 4.0;
        std::ostringstream s;
        s.precision(12);
        s << ocb_score;
        add("ocb score (2+sqrt2)/4", s.str(), "0.853553390593", std::fabs(ocb_score - target) <= 1e-9 && valid);
        auto as_double = [](const std::string &r) {
            auto slash = r.find('/');
            return std::stod(r.substr(0, slash)) / std::stod(r.substr(slash + 1));
        };
        bool outside = ocb_score > as_double(causal) && ocb_score > as_double(dc);
        add("ocb point outside causal and DC", "causal " + causal + ", dc " + dc, "both below the score", outside);
        points["OCB"] = {{"qC", "in"},
                         {"QP", valid ? "in (valid process matrix and instruments)" : "unknown"},
                         {"PC", "out (score above the DC bound; bipartite DC = PC is an external fact)"},
                         {"DC", outside ? "out" : "unknown"},
                         {"causal", outside ? "out" : "unknown"}};
    }
    for (const auto &[point, witness] : {std::pair<std::string, std::string>{"gynin-perfect", "gynin"},
                                         {"gyni-perfect", "gyni"},
                                         {"pr-box", "chsh"}}) {
        CorrelationH corr;
        check(ctx, causelab_correlation_builtin(ctx, point.c_str(), corr.out()));
        Outcome c = classify_correlation(ctx, corr.get(), {witness});
        const Json &r = c.result;
        std::string pc = r["PC"]["verdict"], dc = r["DC"]["verdict"], replay = r["replay"];
        std::string observed = "PC " + pc + ", DC " + dc + ", replay " + replay;
        if (point == "gynin-perfect") {
            eq("gynin-perfect: PC in, DC out", observed, "PC in, DC out, replay ok");
            points["GYNIN"] = {{"qC", "in"}, {"PC", pc}, {"DC", dc}};
        } else if (point == "gyni-perfect") {
            add("gyni-perfect: DC out", observed, "DC out, replay ok", dc == "out" && replay == "ok");
            points["GYNI"] = {{"qC", r["qC"]["verdict"]},
                              {"QP", "out (external fact; not decided by this tool)"},
                              {"PC", pc},
                              {"DC", dc}};
        } else {
            add("pr-box: DC out", observed, "DC out, replay ok", dc == "out" && replay == "ok");
        }
    }

    bool all = true;
    Json table = Json::array();
    std::ostringstream t;
    for (const auto &row : rows) {
        all = all && row.pass;
        table.push_back(
            {{"check", row.name}, {"observed", row.observed}, {"expected", row.expected}, {"pass", row.pass}});
        t << (row.pass ? "PASS " : "FAIL ") << row.name << ": " << row.observed << "\n";
    }
    t << "\nset membership of the named points\n";
    for (const auto &[name, m] : points.items()) {
        t << "  " << name << ":";
        for (const auto &[set, verdict] : m.items()) {
            t << " " << set << "=" << verdict.get<std::string>();
        }
        t << "\n";
    }
    bool dc_pc = points["GYNIN"]["PC"] == "in" && points["GYNIN"]["DC"] == "out";
    t << "strict inclusions: DC < PC via GYNIN (" << (dc_pc ? "certified" : "NOT certified")
      << "); PC < QP via OCB; QP < qC via GYNI\n";
    t << (all ? "all checks passed\n" : "some checks FAILED\n");

    Outcome o;
    o.result = {{"checks", table}, {"points", points}, {"all_passed", all}};
    o.exit_code = all ? EXIT_OK : EXIT_VIOLATION;
    o.text = t.str();
    o.csv.push_back({"check", "observed", "expected", "pass"});
    for (const auto &row : rows) {
        o.csv.push_back({row.name, row.observed, row.expected, row.pass ? "true" : "false"});
    }
    return o;
}

int exit_code_for(causelab_status status) {
    switch (status) {
        case CAUSELAB_ERR_CAP_EXCEEDED:
        case CAUSELAB_ERR_SEARCH_SPACE_TOO_LARGE:
            return EXIT_CAP;
        default:
            return EXIT_BAD_INPUT;
    }
}

void report_failure(const Failure &f, const RunConfig &cfg) {
    Json j;
    Json detail = Json::parse(f.detail, nullptr, false);
    if (detail.is_object()) {
        j = detail;
    } else {
        j["error"] = causelab_status_string(f.status);
        j["message"] = f.detail;
    }
    j["status"] = causelab_status_string(f.status);
    j["exit_code"] = exit_code_for(f.status);
    j["config"] = config_json(cfg);
    std::cerr << j.dump() << "\n";
}

unsigned default_threads() {
    const char *env = std::getenv("CAUSELAB_THREADS");
    if (env != nullptr) {
        char *end = nullptr;
        unsigned long v = std::strtoul(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v <= 1024) {
            return static_cast<unsigned>(v);
        }
    }
    return 1;
}

}  // namespace

int main(int argc, char **argv) {
    RunConfig cfg;
    cfg.threads = default_threads();

    CLI::App app{"causelab: classical and quantum process correlations, bounds and certificates"};
    app.require_subcommand(1);
    app.fallthrough();
    app.set_version_flag("--version", std::string(causelab_version()));
    app.add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    app.add_option("--threads", cfg.threads, "Worker threads (default: $CAUSELAB_THREADS or 1)")
        ->check(CLI::Range(1u, 1024u));
    app.add_option("--enum-cap", cfg.enumeration_cap, "Enumeration cap")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--hull-cap", cfg.hull_cap, "Hull vertex cap")->check(CLI::PositiveNumber)->capture_default_str();
    app.add_option("--seed", cfg.seed, "Seed recorded in the report")->capture_default_str();
    app.add_flag("--timing", cfg.timing, "Add runtime_ms to JSON reports");
    app.add_option("-o,--output", cfg.output, "Write the report to a file");

    std::string path;
    auto *cc = app.add_subcommand("check-consistency", "Decide logical consistency of a quasi-process");
    cc->add_option("file", path, "Quasi-process JSON")->required();

    unsigned parties = 1, alphabet = 2;
    bool reduced = false, list = false;
    auto *ep = app.add_subcommand("enum-pf", "Enumerate process functions");
    ep->add_option("--parties", parties, "Number of parties")->required()->check(CLI::Range(1u, 8u));
    ep->add_option("--alphabet", alphabet, "Uniform alphabet size")->required()->check(CLI::Range(1u, 16u));
    ep->add_flag("--reduced", reduced, "Only ω_k independent of o_k");
    ep->add_flag("--list", list, "Include every process function in the report");

    std::string game_spec;
    std::vector<std::string> sets;
    auto *bd = app.add_subcommand("bound", "Bound a game over a correlation set");
    bd->add_option("--game", game_spec, "gynin | gyni | ocb | chsh | path to a game JSON")->required();
    bd->add_option("--set", sets, "causal | dc | pc | pc-canonical (repeatable)")
        ->required()
        ->check(CLI::IsMember({"causal", "dc", "pc", "pc-canonical"}));

    std::vector<std::string> witnesses;
    auto *cl = app.add_subcommand("classify", "Place a correlation in the DC/PC/qC hierarchy");
    cl->add_option("file", path, "Correlation JSON")->required();
    cl->add_option("--witness", witnesses, "Witness game name or file (repeatable)");

    std::string process, instruments, pm_game;
    auto *pe = app.add_subcommand("pm-eval", "Evaluate a process matrix with instruments");
    pe->add_option("--process", process, "ocb | bfw | path")->required();
    pe->add_option("--instruments", instruments, "ocb | canonical | path")->required();
    pe->add_option("--game", pm_game, "Game to score (default: ocb for ocb, gynin for bfw)");

    auto *hd = app.add_subcommand("hierarchy-demo", "Run the reference checks and print set memberships");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) {
            return app.exit(e);
        }
        Json j{{"error", "Usage"}, {"message", e.what()}, {"exit_code", int(EXIT_BAD_INPUT)}};
        std::cerr << j.dump() << "\n";
        return EXIT_BAD_INPUT;
    }

    cfg.command = app.get_subcommands().front()->get_name();
    if (!path.empty()) {
        cfg.inputs.push_back(path);
    }

    try {
        Context ctx = make_context(cfg);
        auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        if (*cc) {
            outcome = run_check_consistency(ctx.get(), path);
        } else if (*ep) {
            cfg.inputs = {"parties=" + std::to_string(parties), "alphabet=" + std::to_string(alphabet)};
            outcome = run_enum_pf(ctx.get(), parties, alphabet, reduced, list);
        } else if (*bd) {
            cfg.inputs = {game_spec};
            outcome = run_bound(ctx.get(), game_spec, sets);
        } else if (*cl) {
            for (const auto &w : witnesses) {
                cfg.inputs.push_back("witness=" + w);
            }
            outcome = run_classify(ctx.get(), path, witnesses);
        } else if (*pe) {
            cfg.inputs = {"process=" + process, "instruments=" + instruments};
            if (!pm_game.empty()) {
                cfg.inputs.push_back("game=" + pm_game);
            }
            outcome = run_pm_eval(ctx.get(), process, instruments, pm_game);
        } else if (*hd) {
            outcome = run_hierarchy_demo(ctx.get());
        }
        double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        write_output(cfg, outcome, ms);
        return outcome.exit_code;
    } catch (const Failure &f) {
        report_failure(f, cfg);
        return exit_code_for(f.status);
    } catch (const std::exception &e) {
        report_failure(Failure{CAUSELAB_ERR_INTERNAL, e.what()}, cfg);
        return EXIT_BAD_INPUT;
    }
}
