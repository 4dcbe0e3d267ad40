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

// Property suites shared by the unit tests and the acceptance runner.

#ifndef CAUSELAB_TESTS_SUITES_H
#define CAUSELAB_TESTS_SUITES_H

#include <cstdint>
#include <string>

namespace suites {

struct SuiteResult {
    std::string name;
    bool passed = true;
    size_t cases = 0;
    /// First failure, empty on success.
    std::string detail;
};

/// Every candidate map at 1 and 2 binary parties: library consistency,
/// library fixed-point test and the oracle agree.
SuiteResult consistency_equivalence();

/// Random mixtures of process functions (1 to 3 binary parties) are
/// logically consistent.
SuiteResult mixture_closure(size_t cases, uint64_t seed);

/// diag(p) with diagonal instruments reproduces the classical correlation
/// within 1e-12, and the classical table round-trips exactly.
SuiteResult diagonal_bridge(size_t cases, uint64_t seed);

/// causal <= dc <= pc on random 0/1 games over 1 and 2 binary parties, with
/// the causal and dc values matched against brute-force oracles.
SuiteResult bound_monotonicity(size_t cases, uint64_t seed);

/// The universal realization reproduces random correlations exactly.
SuiteResult realization_round_trip(size_t cases, uint64_t seed);

}  // namespace suites

#endif
