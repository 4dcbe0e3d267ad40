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


#ifndef CAUSELAB_TESTS_UNIT_TEST_UTIL_H
#define CAUSELAB_TESTS_UNIT_TEST_UTIL_H

#include <gtest/gtest.h>

#include "causelab/errors.h"

/// Expects `stmt` to throw causelab::Error of the given kind.
#define EXPECT_ERROR_KIND(stmt, expected_kind)                                                          \
    do {                                                                                                 \
        try {                                                                                            \
            stmt;                                                                                        \
            ADD_FAILURE() << "expected " << causelab::error_kind_name(expected_kind) << " from " #stmt; \
        } catch (const causelab::Error &e) {                                                             \
            EXPECT_EQ(e.kind(), expected_kind) << e.what();                                              \
        }                                                                                                \
    } while (0)

#endif
