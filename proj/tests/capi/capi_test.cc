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


// Exercises the shared library through the public C header only.

#include <causelab.h>
#include <gtest/gtest.h>

#include <cmath>
#include <json.hpp>
#include <memory>
#include <string>

namespace {

using nlohmann::json;

struct StringDeleter {
    void operator()(char *s) const {
        causelab_string_free(s);
    }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

class CApi : public ::testing::Test {
   protected:
    void SetUp() override {
        ASSERT_EQ(causelab_context_new(&ctx), CAUSELAB_OK);
    }
    void TearDown() override {
        causelab_context_free(ctx);
    }
    json last_error() const {
        return json::parse(causelab_last_error(ctx));
    }
    std::string bound(const char *game_name, causelab_bound_set set) {
        causelab_game *game = nullptr;
        EXPECT_EQ(causelab_game_builtin(ctx, game_name, &game), CAUSELAB_OK);
        char *value = nullptr;
        EXPECT_EQ(causelab_bound(ctx, game, set, &value, nullptr), CAUSELAB_OK) << causelab_last_error(ctx);
        causelab_game_free(game);
        OwnedString owned(value);
        return value == nullptr ? "" : value;
    }

    causelab_context *ctx = nullptr;
};

}  // namespace

TEST_F(CApi, VersionAndStatusStrings) {
    EXPECT_STREQ(causelab_version(), "0.3.0");
    for (int s = CAUSELAB_OK; s <= CAUSELAB_ERR_INTERNAL; s++) {
        EXPECT_GT(std::string(causelab_status_string(static_cast<causelab_status>(s))).size(), 0u);
    }
    EXPECT_STREQ(causelab_last_error(ctx), "");
    EXPECT_STREQ(causelab_last_error(nullptr), "");
}

TEST_F(CApi, NullArguments) {
    EXPECT_EQ(causelab_context_new(nullptr), CAUSELAB_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(causelab_context_set_threads(nullptr, 2), CAUSELAB_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(causelab_context_set_threads(ctx, 0), CAUSELAB_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(last_error()["error"], "InvalidArgument");
    EXPECT_EQ(causelab_context_set_enumeration_cap(ctx, 0), CAUSELAB_ERR_INVALID_ARGUMENT);
    EXPECT_EQ(causelab_check_consistency(ctx, nullptr, nullptr, nullptr), CAUSELAB_ERR_INVALID_ARGUMENT);
    causelab_game *game = nullptr;
    EXPECT_EQ(causelab_game_builtin(ctx, nullptr, &game), CAUSELAB_ERR_INVALID_ARGUMENT);
    causelab_string_free(nullptr);
    causelab_game_free(nullptr);
}

TEST_F(CApi, ParseErrorsCarryJson) {
    causelab_quasiprocess *qp = nullptr;
    EXPECT_EQ(causelab_quasiprocess_from_json(ctx, "{\"scenario\":", &qp), CAUSELAB_ERR_PARSE);
    EXPECT_EQ(qp, nullptr);
    EXPECT_EQ(last_error()["error"], "Parse");
    EXPECT_EQ(causelab_quasiprocess_builtin(ctx, "nope", &qp), CAUSELAB_ERR_PARSE);
    const char *negative =
        R"({"scenario":{"settings":[2],"outcomes":[2],"inputs":[2],"outputs":[2]},"p":[["3/2","0"],["-1/2","1"]]})";
    EXPECT_EQ(causelab_quasiprocess_from_json(ctx, negative, &qp), CAUSELAB_ERR_INVALID_TABLE);
    EXPECT_EQ(last_error()["error"], "InvalidTable");
    // A later success clears the error.
    ASSERT_EQ(causelab_quasiprocess_builtin(ctx, "bfw", &qp), CAUSELAB_OK);
    EXPECT_STREQ(causelab_last_error(ctx), "");
    causelab_quasiprocess_free(qp);
}

TEST_F(CApi, GrandfatherIsInconsistent) {
    causelab_quasiprocess *qp = nullptr;
    ASSERT_EQ(causelab_quasiprocess_builtin(ctx, "grandfather", &qp), CAUSELAB_OK);
    int consistent = -1;
    char *report = nullptr;
    ASSERT_EQ(causelab_check_consistency(ctx, qp, &consistent, &report), CAUSELAB_OK);
    OwnedString owned(report);
    EXPECT_EQ(consistent, 0);
    auto j = json::parse(report);
    EXPECT_EQ(j["certificate"]["output_choice"], json::parse("[[1,0]]"));
    EXPECT_EQ(j["certificate"]["mass"], "0/1");

    char *text = nullptr;
    ASSERT_EQ(causelab_quasiprocess_to_json(ctx, qp, &text), CAUSELAB_OK);
    OwnedString owned_text(text);
    causelab_quasiprocess *back = nullptr;
    ASSERT_EQ(causelab_quasiprocess_from_json(ctx, text, &back), CAUSELAB_OK);
    ASSERT_EQ(causelab_check_consistency(ctx, back, &consistent, nullptr), CAUSELAB_OK);
    EXPECT_EQ(consistent, 0);
    causelab_quasiprocess_free(back);
    causelab_quasiprocess_free(qp);
}

TEST_F(CApi, Bounds) {
    EXPECT_EQ(bound("gynin", CAUSELAB_BOUND_CAUSAL), "1/2");
    EXPECT_EQ(bound("gynin", CAUSELAB_BOUND_DC), "5/8");
    EXPECT_EQ(bound("gynin", CAUSELAB_BOUND_PC), "1/1");
    EXPECT_EQ(bound("gyni", CAUSELAB_BOUND_PC_CANONICAL), "1/2");
    EXPECT_EQ(bound("chsh", CAUSELAB_BOUND_PC_CANONICAL), "3/4");
    EXPECT_EQ(bound("chsh", CAUSELAB_BOUND_DC), "3/4");
}

TEST_F(CApi, BoundReportAndCaps) {
    causelab_game *game = nullptr;
    ASSERT_EQ(causelab_game_builtin(ctx, "ocb", &game), CAUSELAB_OK);
    char *report = nullptr;
    ASSERT_EQ(causelab_bound(ctx, game, CAUSELAB_BOUND_DC, nullptr, &report), CAUSELAB_OK);
    OwnedString owned(report);
    auto j = json::parse(report);
    EXPECT_EQ(j["value"], "3/4");
    EXPECT_TRUE(j.contains("witness"));
    EXPECT_EQ(causelab_bound(ctx, game, CAUSELAB_BOUND_PC_CANONICAL, nullptr, nullptr),
              CAUSELAB_ERR_NOT_CANONICALIZABLE);
    EXPECT_EQ(causelab_bound(ctx, game, static_cast<causelab_bound_set>(9), nullptr, nullptr),
              CAUSELAB_ERR_INVALID_ARGUMENT);
    ASSERT_EQ(causelab_context_set_enumeration_cap(ctx, 10), CAUSELAB_OK);
    EXPECT_EQ(causelab_bound(ctx, game, CAUSELAB_BOUND_DC, nullptr, nullptr), CAUSELAB_ERR_SEARCH_SPACE_TOO_LARGE);
    EXPECT_EQ(last_error()["error"], "SearchSpaceTooLarge");
    causelab_game_free(game);
}

TEST_F(CApi, ThreadsDoNotChangeReports) {
    causelab_game *game = nullptr;
    ASSERT_EQ(causelab_game_builtin(ctx, "gyni", &game), CAUSELAB_OK);
    char *one = nullptr, *four = nullptr;
    ASSERT_EQ(causelab_bound(ctx, game, CAUSELAB_BOUND_DC, nullptr, &one), CAUSELAB_OK);
    ASSERT_EQ(causelab_context_set_threads(ctx, 4), CAUSELAB_OK);
    ASSERT_EQ(causelab_bound(ctx, game, CAUSELAB_BOUND_DC, nullptr, &four), CAUSELAB_OK);
    EXPECT_STREQ(one, four);
    causelab_string_free(one);
    causelab_string_free(four);
    causelab_game_free(game);
}

TEST_F(CApi, ScoreAndClassify) {
    causelab_game *gyni = nullptr;
    causelab_correlation *corr = nullptr;
    ASSERT_EQ(causelab_game_builtin(ctx, "gyni", &gyni), CAUSELAB_OK);
    ASSERT_EQ(causelab_correlation_builtin(ctx, "gyni-perfect", &corr), CAUSELAB_OK);
    char *value = nullptr;
    ASSERT_EQ(causelab_score(ctx, gyni, corr, &value), CAUSELAB_OK);
    EXPECT_STREQ(value, "1/1");
    causelab_string_free(value);

    int replayed = 0;
    char *report = nullptr;
    const causelab_game *witnesses[] = {gyni};
    ASSERT_EQ(causelab_classify(ctx, corr, witnesses, 1, &replayed, &report), CAUSELAB_OK);
    OwnedString owned(report);
    EXPECT_EQ(replayed, 1);
    auto j = json::parse(report);
    EXPECT_EQ(j["DC"]["verdict"], "out");
    EXPECT_EQ(j["qC"]["verdict"], "in");

    causelab_correlation *pr = nullptr;
    ASSERT_EQ(causelab_correlation_builtin(ctx, "pr-box", &pr), CAUSELAB_OK);
    causelab_game *gynin = nullptr;
    ASSERT_EQ(causelab_game_builtin(ctx, "gynin", &gynin), CAUSELAB_OK);
    char *unused = nullptr;
    EXPECT_EQ(causelab_score(ctx, gynin, pr, &unused), CAUSELAB_ERR_SCENARIO_MISMATCH);
    EXPECT_EQ(unused, nullptr);
    causelab_game_free(gynin);
    char *realized = nullptr;
    ASSERT_EQ(causelab_realize(ctx, pr, &realized), CAUSELAB_OK);
    OwnedString owned_realized(realized);
    EXPECT_TRUE(json::parse(realized).contains("process"));
    causelab_correlation_free(pr);
    causelab_correlation_free(corr);
    causelab_game_free(gyni);
}

TEST_F(CApi, EnumerateProcessFunctions) {
    char *report = nullptr;
    ASSERT_EQ(causelab_enumerate_process_functions(ctx, 2, 2, 0, 1, &report), CAUSELAB_OK);
    OwnedString owned(report);
    auto j = json::parse(report);
    EXPECT_EQ(j["count"], 12);
    EXPECT_EQ(j["candidates"], 256);
    EXPECT_EQ(j["process_functions"].size(), 12u);
    EXPECT_EQ(causelab_enumerate_process_functions(ctx, 0, 2, 0, 0, nullptr), CAUSELAB_ERR_INVALID_ARGUMENT);
}

TEST_F(CApi, ProcessMatrices) {
    causelab_process_matrix *ocb = nullptr;
    causelab_instruments *ins = nullptr;
    causelab_game *game = nullptr;
    ASSERT_EQ(causelab_process_matrix_builtin(ctx, "ocb", &ocb), CAUSELAB_OK);
    ASSERT_EQ(causelab_instruments_builtin(ctx, "ocb", &ins), CAUSELAB_OK);
    ASSERT_EQ(causelab_game_builtin(ctx, "ocb", &game), CAUSELAB_OK);
    int valid = 0;
    ASSERT_EQ(causelab_pm_validate(ctx, ocb, ins, &valid, nullptr), CAUSELAB_OK);
    EXPECT_EQ(valid, 1);
    double score = 0;
    ASSERT_EQ(causelab_pm_evaluate(ctx, ocb, ins, game, &score, nullptr), CAUSELAB_OK);
    EXPECT_NEAR(score, (2 + std::sqrt(2.0)) / 4, 1e-9);
    causelab_quasiprocess *qp = nullptr;
    EXPECT_EQ(causelab_pm_to_classical(ctx, ocb, &qp), CAUSELAB_ERR_NON_DIAGONAL);

    causelab_process_matrix *bfw = nullptr;
    causelab_instruments *canonical = nullptr;
    causelab_game *gynin = nullptr;
    ASSERT_EQ(causelab_process_matrix_builtin(ctx, "bfw", &bfw), CAUSELAB_OK);
    ASSERT_EQ(causelab_instruments_canonical(ctx, bfw, &canonical), CAUSELAB_OK);
    ASSERT_EQ(causelab_game_builtin(ctx, "gynin", &gynin), CAUSELAB_OK);
    ASSERT_EQ(causelab_pm_evaluate(ctx, bfw, canonical, gynin, &score, nullptr), CAUSELAB_OK);
    EXPECT_NEAR(score, 1.0, 1e-12);
    EXPECT_EQ(causelab_pm_evaluate(ctx, bfw, ins, nullptr, nullptr, nullptr), CAUSELAB_ERR_DIMENSION_MISMATCH);
    ASSERT_EQ(causelab_pm_to_classical(ctx, bfw, &qp), CAUSELAB_OK);
    int consistent = 0;
    ASSERT_EQ(causelab_check_consistency(ctx, qp, &consistent, nullptr), CAUSELAB_OK);
    EXPECT_EQ(consistent, 1);

    char *text = nullptr;
    ASSERT_EQ(causelab_process_matrix_to_json(ctx, ocb, &text), CAUSELAB_OK);
    causelab_process_matrix *back = nullptr;
    EXPECT_EQ(causelab_process_matrix_from_json(ctx, text, &back), CAUSELAB_OK);
    causelab_string_free(text);

    causelab_process_matrix_free(back);
    causelab_quasiprocess_free(qp);
    causelab_game_free(gynin);
    causelab_instruments_free(canonical);
    causelab_process_matrix_free(bfw);
    causelab_game_free(game);
    causelab_instruments_free(ins);
    causelab_process_matrix_free(ocb);
}
