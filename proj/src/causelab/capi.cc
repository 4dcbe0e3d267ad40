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

#include "causelab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "causelab/json_io.h"

using namespace causelab;

struct causelab_context {
    SearchLimits limits;
    std::string last_error;
};

struct causelab_quasiprocess {
    QuasiProcess value;
};
struct causelab_correlation {
    Correlation value;
};
struct causelab_game {
    Game value;
};
struct causelab_process_matrix {
    ProcessMatrix value;
};
struct causelab_instruments {
    InstrumentFamily value;
};

namespace {

struct ArgumentError {
    std::string message;
};

causelab_status status_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::InvalidScenario:
            return CAUSELAB_ERR_INVALID_SCENARIO;
        case ErrorKind::ScenarioMismatch:
            return CAUSELAB_ERR_SCENARIO_MISMATCH;
        case ErrorKind::InvalidTable:
            return CAUSELAB_ERR_INVALID_TABLE;
        case ErrorKind::NotCanonicalizable:
            return CAUSELAB_ERR_NOT_CANONICALIZABLE;
        case ErrorKind::InvalidMixture:
            return CAUSELAB_ERR_INVALID_MIXTURE;
        case ErrorKind::SearchSpaceTooLarge:
            return CAUSELAB_ERR_SEARCH_SPACE_TOO_LARGE;
        case ErrorKind::CapExceeded:
            return CAUSELAB_ERR_CAP_EXCEEDED;
        case ErrorKind::Infeasible:
            return CAUSELAB_ERR_INFEASIBLE;
        case ErrorKind::Unbounded:
            return CAUSELAB_ERR_UNBOUNDED;
        case ErrorKind::NonDiagonal:
            return CAUSELAB_ERR_NON_DIAGONAL;
        case ErrorKind::DimensionMismatch:
            return CAUSELAB_ERR_DIMENSION_MISMATCH;
        case ErrorKind::Parse:
            return CAUSELAB_ERR_PARSE;
    }
    return CAUSELAB_ERR_INTERNAL;
}

void set_error(causelab_context *ctx, const std::string &kind, const std::string &message) {
    Json j;
    j["error"] = kind;
    j["message"] = message;
    ctx->last_error = j.dump();
}

/// Runs `body` with exceptions mapped to status codes.
template <class F>
causelab_status guarded(causelab_context *ctx, F &&body) {
    if (ctx == nullptr) {
        return CAUSELAB_ERR_INVALID_ARGUMENT;
    }
    ctx->last_error.clear();
    try {
        body();
        return CAUSELAB_OK;
    } catch (const ArgumentError &e) {
        set_error(ctx, "InvalidArgument", e.message);
        return CAUSELAB_ERR_INVALID_ARGUMENT;
    } catch (const Error &e) {
        set_error(ctx, error_kind_name(e.kind()), e.what());
        return status_for(e.kind());
    } catch (const std::bad_alloc &) {
        set_error(ctx, "Internal", "out of memory");
        return CAUSELAB_ERR_INTERNAL;
    } catch (const std::exception &e) {
        set_error(ctx, "Internal", e.what());
        return CAUSELAB_ERR_INTERNAL;
    }
}

void require(bool ok, const char *what) {
    if (!ok) {
        throw ArgumentError{what};
    }
}

char *dup_string(const std::string &s) {
    char *out = static_cast<char *>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void emit(char **out, const Json &j) {
    if (out != nullptr) {
        *out = dup_string(j.dump());
    }
}

template <class Handle, class T>
void make_handle(Handle **out, T value) {
    *out = new Handle{std::move(value)};
}

Json parse_arg(const char *json) {
    require(json != nullptr, "json text is NULL");
    return parse_json_text(json);
}

}  // namespace

extern "C" {

const char *causelab_version(void) {
    return CAUSELAB_VERSION_STRING;
}

const char *causelab_status_string(causelab_status status) {
    switch (status) {
        case CAUSELAB_OK:
            return "ok";
        case CAUSELAB_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case CAUSELAB_ERR_PARSE:
            return "parse error";
        case CAUSELAB_ERR_INVALID_SCENARIO:
            return "invalid scenario";
        case CAUSELAB_ERR_SCENARIO_MISMATCH:
            return "scenario mismatch";
        case CAUSELAB_ERR_INVALID_TABLE:
            return "invalid table";
        case CAUSELAB_ERR_NOT_CANONICALIZABLE:
            return "not canonicalizable";
        case CAUSELAB_ERR_INVALID_MIXTURE:
            return "invalid mixture";
        case CAUSELAB_ERR_SEARCH_SPACE_TOO_LARGE:
            return "search space too large";
        case CAUSELAB_ERR_CAP_EXCEEDED:
            return "cap exceeded";
        case CAUSELAB_ERR_INFEASIBLE:
            return "infeasible";
        case CAUSELAB_ERR_UNBOUNDED:
            return "unbounded";
        case CAUSELAB_ERR_NON_DIAGONAL:
            return "non-diagonal";
        case CAUSELAB_ERR_DIMENSION_MISMATCH:
            return "dimension mismatch";
        case CAUSELAB_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

void causelab_string_free(char *s) {
    std::free(s);
}

causelab_status causelab_context_new(causelab_context **out) {
    if (out == nullptr) {
        return CAUSELAB_ERR_INVALID_ARGUMENT;
    }
    *out = new (std::nothrow) causelab_context();
    return *out == nullptr ? CAUSELAB_ERR_INTERNAL : CAUSELAB_OK;
}

void causelab_context_free(causelab_context *ctx) {
    delete ctx;
}

causelab_status causelab_context_set_threads(causelab_context *ctx, unsigned threads) {
    return guarded(ctx, [&] {
        require(threads > 0, "thread count must be positive");
        ctx->limits.threads = threads;
    });
}

causelab_status causelab_context_set_enumeration_cap(causelab_context *ctx, uint64_t cap) {
    return guarded(ctx, [&] {
        require(cap > 0, "enumeration cap must be positive");
        ctx->limits.enumeration_cap = cap;
    });
}

causelab_status causelab_context_set_hull_cap(causelab_context *ctx, uint64_t cap) {
    return guarded(ctx, [&] {
        require(cap > 0, "hull cap must be positive");
        ctx->limits.hull_vertex_cap = cap;
    });
}

const char *causelab_last_error(const causelab_context *ctx) {
    return ctx == nullptr ? "" : ctx->last_error.c_str();
}

causelab_status causelab_quasiprocess_from_json(causelab_context *ctx, const char *json, causelab_quasiprocess **out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out is NULL");
        make_handle(out, quasiprocess_from_json(parse_arg(json)));
    });
}

causelab_status causelab_quasiprocess_builtin(causelab_context *ctx, const char *name, causelab_quasiprocess **out) {
    return guarded(ctx, [&] {
        require(out != nullptr && name != nullptr, "NULL argument");
        std::string n = name;
        if (n == "bfw") {
            make_handle(out, bfw_process());
        } else if (n == "grandfather") {
            make_handle(out, quasiprocess_from_function(identity_loop()));
        } else {
            throw Error(ErrorKind::Parse, "unknown built-in quasi-process '" + n + "'");
        }
    });
}

causelab_status causelab_quasiprocess_to_json(causelab_context *ctx, const causelab_quasiprocess *qp, char **out) {
    return guarded(ctx, [&] {
        require(qp != nullptr && out != nullptr, "NULL argument");
        emit(out, to_json(qp->value));
    });
}

void causelab_quasiprocess_free(causelab_quasiprocess *qp) {
    delete qp;
}

causelab_status causelab_correlation_from_json(causelab_context *ctx, const char *json, causelab_correlation **out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out is NULL");
        make_handle(out, correlation_from_json(parse_arg(json)));
    });
}

causelab_status causelab_correlation_builtin(causelab_context *ctx, const char *name, causelab_correlation **out) {
    return guarded(ctx, [&] {
        require(out != nullptr && name != nullptr, "NULL argument");
        std::string n = name;
        if (n == "gynin-perfect") {
            make_handle(out, gynin_perfect_correlation());
        } else if (n == "gyni-perfect") {
            make_handle(out, gyni_perfect_correlation());
        } else if (n == "pr-box") {
            make_handle(out, pr_box_correlation());
        } else {
            throw Error(ErrorKind::Parse, "unknown built-in correlation '" + n + "'");
        }
    });
}

causelab_status causelab_correlation_to_json(causelab_context *ctx, const causelab_correlation *corr, char **out) {
    return guarded(ctx, [&] {
        require(corr != nullptr && out != nullptr, "NULL argument");
        emit(out, to_json(corr->value));
    });
}

void causelab_correlation_free(causelab_correlation *corr) {
    delete corr;
}

causelab_status causelab_game_from_json(causelab_context *ctx, const char *json, causelab_game **out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out is NULL");
        make_handle(out, game_from_json(parse_arg(json)));
    });
}

causelab_status causelab_game_builtin(causelab_context *ctx, const char *name, causelab_game **out) {
    return guarded(ctx, [&] {
        require(out != nullptr && name != nullptr, "NULL argument");
        make_handle(out, builtin_game(name));
    });
}

causelab_status causelab_game_to_json(causelab_context *ctx, const causelab_game *game, char **out) {
    return guarded(ctx, [&] {
        require(game != nullptr && out != nullptr, "NULL argument");
        emit(out, to_json(game->value));
    });
}

void causelab_game_free(causelab_game *game) {
    delete game;
}

causelab_status causelab_process_matrix_from_json(causelab_context *ctx, const char *json,
                                                  causelab_process_matrix **out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out is NULL");
        make_handle(out, process_matrix_from_json(parse_arg(json)));
    });
}

causelab_status causelab_process_matrix_builtin(causelab_context *ctx, const char *name,
                                                causelab_process_matrix **out) {
    return guarded(ctx, [&] {
        require(out != nullptr && name != nullptr, "NULL argument");
        std::string n = name;
        if (n == "ocb") {
            make_handle(out, builtin_ocb_process());
        } else if (n == "bfw") {
            make_handle(out, builtin_bfw_process());
        } else {
            throw Error(ErrorKind::Parse, "unknown built-in process matrix '" + n + "'");
        }
    });
}

causelab_status causelab_process_matrix_to_json(causelab_context *ctx, const causelab_process_matrix *pm, char **out) {
    return guarded(ctx, [&] {
        require(pm != nullptr && out != nullptr, "NULL argument");
        emit(out, to_json(pm->value));
    });
}

void causelab_process_matrix_free(causelab_process_matrix *pm) {
    delete pm;
}

causelab_status causelab_instruments_from_json(causelab_context *ctx, const char *json, causelab_instruments **out) {
    return guarded(ctx, [&] {
        require(out != nullptr, "out is NULL");
        make_handle(out, instruments_from_json(parse_arg(json)));
    });
}

causelab_status causelab_instruments_builtin(causelab_context *ctx, const char *name, causelab_instruments **out) {
    return guarded(ctx, [&] {
        require(out != nullptr && name != nullptr, "NULL argument");
        if (std::string(name) != "ocb") {
            throw Error(ErrorKind::Parse, std::string("unknown built-in instruments '") + name + "'");
        }
        make_handle(out, builtin_ocb_instruments());
    });
}

causelab_status causelab_instruments_canonical(causelab_context *ctx, const causelab_process_matrix *pm,
                                               causelab_instruments **out) {
    return guarded(ctx, [&] {
        require(pm != nullptr && out != nullptr, "NULL argument");
        const auto &dims = pm->value.dims();
        std::vector<PartyAlphabet> parties;
        for (size_t k = 0; k < dims.num_parties(); k++) {
            parties.push_back(PartyAlphabet{dims.outputs[k], dims.inputs[k], dims.inputs[k], dims.outputs[k]});
        }
        make_handle(out, diagonal_instruments(canonical_interventions(Scenario::make(std::move(parties)))));
    });
}

causelab_status causelab_instruments_to_json(causelab_context *ctx, const causelab_instruments *ins, char **out) {
    return guarded(ctx, [&] {
        require(ins != nullptr && out != nullptr, "NULL argument");
        emit(out, to_json(ins->value));
    });
}

void causelab_instruments_free(causelab_instruments *ins) {
    delete ins;
}

causelab_status causelab_check_consistency(causelab_context *ctx, const causelab_quasiprocess *qp, int *consistent,
                                           char **report_json) {
    return guarded(ctx, [&] {
        require(qp != nullptr, "quasi-process is NULL");
        ConsistencyVerdict v = is_logically_consistent(qp->value, ctx->limits);
        if (consistent != nullptr) {
            *consistent = v.consistent ? 1 : 0;
        }
        emit(report_json, to_json(v));
    });
}

causelab_status causelab_enumerate_process_functions(causelab_context *ctx, unsigned parties, unsigned alphabet,
                                                     int reduced, int include_list, char **report_json) {
    return guarded(ctx, [&] {
        require(parties > 0 && alphabet > 0, "parties and alphabet must be positive");
        Scenario s = Scenario::uniform(parties, alphabet);
        Json list = Json::array();
        uint64_t count = 0;
        for_each_process_function(s, reduced != 0, ctx->limits, [&](const QuasiProcessFunction &omega) {
            count++;
            if (include_list != 0) {
                list.push_back(to_json(omega)["omega"]);
            }
            return true;
        });
        Json j;
        j["scenario"] = to_json(s);
        j["reduced"] = reduced != 0;
        j["candidates"] = count_candidate_functions(s, reduced != 0);
        j["count"] = count;
        if (include_list != 0) {
            j["process_functions"] = std::move(list);
        }
        emit(report_json, j);
    });
}

causelab_status causelab_bound(causelab_context *ctx, const causelab_game *game, causelab_bound_set set,
                               char **value_out, char **report_json) {
    return guarded(ctx, [&] {
        require(game != nullptr, "game is NULL");
        Json j;
        switch (set) {
            case CAUSELAB_BOUND_CAUSAL:
                j = to_json(causal_bound(game->value, ctx->limits));
                break;
            case CAUSELAB_BOUND_DC:
                j = to_json(dc_bound(game->value, ctx->limits));
                break;
            case CAUSELAB_BOUND_PC:
                j = to_json(pc_bound(game->value, ctx->limits));
                break;
            case CAUSELAB_BOUND_PC_CANONICAL:
                j = to_json(pc_bound_canonical(game->value, ctx->limits));
                break;
            default:
                throw ArgumentError{"unknown bound set"};
        }
        if (value_out != nullptr) {
            *value_out = dup_string(j["value"].get<std::string>());
        }
        emit(report_json, j);
    });
}

causelab_status causelab_score(causelab_context *ctx, const causelab_game *game, const causelab_correlation *corr,
                               char **value_out) {
    return guarded(ctx, [&] {
        require(game != nullptr && corr != nullptr && value_out != nullptr, "NULL argument");
        *value_out = dup_string(format_rational(score(game->value, corr->value)));
    });
}

causelab_status causelab_classify(causelab_context *ctx, const causelab_correlation *corr,
                                  const causelab_game *const *witnesses, size_t n, int *replayed,
                                  char **report_json) {
    return guarded(ctx, [&] {
        require(corr != nullptr, "correlation is NULL");
        require(n == 0 || witnesses != nullptr, "witness array is NULL");
        std::vector<Game> games;
        for (size_t w = 0; w < n; w++) {
            require(witnesses[w] != nullptr, "witness game is NULL");
            games.push_back(witnesses[w]->value);
        }
        ClassLabel label = classify(corr->value, games, ctx->limits);
        std::string replay = replay_certificates(corr->value, label);
        if (replayed != nullptr) {
            *replayed = replay.empty() ? 1 : 0;
        }
        Json j = to_json(label);
        j["replay"] = replay.empty() ? "ok" : replay;
        emit(report_json, j);
    });
}

causelab_status causelab_realize(causelab_context *ctx, const causelab_correlation *corr, char **report_json) {
    return guarded(ctx, [&] {
        require(corr != nullptr, "correlation is NULL");
        Realization r = universal_realization(corr->value);
        Json j;
        j["process"] = to_json(r.process);
        j["interventions"] = to_json(r.interventions);
        emit(report_json, j);
    });
}

causelab_status causelab_pm_validate(causelab_context *ctx, const causelab_process_matrix *pm,
                                     const causelab_instruments *ins, int *valid, char **report_json) {
    return guarded(ctx, [&] {
        require(pm != nullptr, "process matrix is NULL");
        ValidityReport w = is_valid_process_matrix(pm->value);
        bool ok = w.valid;
        Json j;
        j["process_matrix"] = to_json(w);
        if (ins != nullptr) {
            Json parts = Json::array();
            for (const auto &instrument : ins->value) {
                ValidityReport r = is_valid_instrument(instrument);
                ok = ok && r.valid;
                parts.push_back(to_json(r));
            }
            j["instruments"] = std::move(parts);
        }
        j["valid"] = ok;
        if (valid != nullptr) {
            *valid = ok ? 1 : 0;
        }
        emit(report_json, j);
    });
}

causelab_status causelab_pm_evaluate(causelab_context *ctx, const causelab_process_matrix *pm,
                                     const causelab_instruments *ins, const causelab_game *game, double *score_out,
                                     char **report_json) {
    return guarded(ctx, [&] {
        require(pm != nullptr && ins != nullptr, "NULL argument");
        FloatCorrelation corr = pm_correlation(pm->value, ins->value);
        Json j;
        j["correlation"] = to_json(corr);
        if (game != nullptr) {
            double s = score(game->value, corr);
            j["game"] = game->value.name();
            j["score"] = s;
            if (score_out != nullptr) {
                *score_out = s;
            }
        }
        emit(report_json, j);
    });
}

causelab_status causelab_pm_to_classical(causelab_context *ctx, const causelab_process_matrix *pm,
                                         causelab_quasiprocess **out) {
    return guarded(ctx, [&] {
        require(pm != nullptr && out != nullptr, "NULL argument");
        make_handle(out, classical_from_diagonal(pm->value));
    });
}

}  // extern "C"
