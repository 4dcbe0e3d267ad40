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

#ifndef CAUSELAB_ERRORS_H
#define CAUSELAB_ERRORS_H

#include <cstdint>
#include <stdexcept>
#include <string>

namespace causelab {

enum class ErrorKind {
    InvalidScenario,
    ScenarioMismatch,
    InvalidTable,
    NotCanonicalizable,
    InvalidMixture,
    SearchSpaceTooLarge,
    CapExceeded,
    Infeasible,
    Unbounded,
    NonDiagonal,
    DimensionMismatch,
    Parse,
};

const char *error_kind_name(ErrorKind kind);

/// Every failure raised by the library carries one of the kinds above so the
/// C boundary can map it onto a status code without string matching.
class Error : public std::runtime_error {
   public:
    Error(ErrorKind kind, const std::string &message) : std::runtime_error(message), kind_(kind) {
    }
    ErrorKind kind() const {
        return kind_;
    }

   private:
    ErrorKind kind_;
};

/// Search caps shared by every enumeration routine.
struct SearchLimits {
    uint64_t enumeration_cap = uint64_t{1} << 32;
    uint64_t hull_vertex_cap = 100000;
    unsigned threads = 1;
};

}  // namespace causelab

#endif
