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

#ifndef CAUSELAB_CONSISTENCY_H
#define CAUSELAB_CONSISTENCY_H

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "causelab/errors.h"
#include "causelab/scenario.h"

namespace causelab {

/// One deterministic local output map f_k: i_k -> o_k per party.
struct OutputChoice {
    std::vector<std::vector<uint32_t>> maps;

    /// Flat o⃗ = f(i⃗) for a flat i⃗.
    size_t apply(const Scenario &scenario, size_t flat_input) const;
    bool operator==(const OutputChoice &) const = default;
};

/// Saturating count Π_k d_{O_k}^{d_{I_k}}.
uint64_t count_output_choices(const Scenario &scenario);

/// Visits every OutputChoice in lexicographic order (party 1's f_1(0) most
/// significant). Stops early when `visit` returns false.
/// Throws Error(SearchSpaceTooLarge) when the count exceeds `cap`.
void for_each_output_choice(const Scenario &scenario, uint64_t cap,
                            const std::function<bool(const OutputChoice &)> &visit);

struct ConsistencyVerdict {
    bool consistent = true;
    std::optional<OutputChoice> violating_choice;
    Rational violating_mass;
    uint64_t choices_checked = 0;
};

/// Checks Σ_i⃗ p(i⃗|f(i⃗)) = 1 for every deterministic output choice f. By
/// multilinearity this decides normalization under every local intervention.
/// The certificate is the violating choice of least mass (first in
/// enumeration order among equals).
ConsistencyVerdict is_logically_consistent(const QuasiProcess &process, const SearchLimits &limits = {});

/// Deterministic map ω: o⃗ -> i⃗, stored per party as ω_k[flat o⃗] = i_k.
class QuasiProcessFunction {
   public:
    QuasiProcessFunction() = default;
    QuasiProcessFunction(Scenario scenario, std::vector<std::vector<uint32_t>> omega);

    const Scenario &scenario() const {
        return scenario_;
    }
    const std::vector<std::vector<uint32_t>> &omega() const {
        return omega_;
    }
    /// Flat i⃗ = ω(o⃗) for every flat o⃗.
    const std::vector<uint32_t> &flat_table() const {
        return flat_;
    }
    size_t apply(size_t flat_output) const {
        return flat_[flat_output];
    }
    /// True iff no ω_k reads o_k.
    bool is_reduced() const;

    bool operator==(const QuasiProcessFunction &other) const {
        return scenario_ == other.scenario_ && omega_ == other.omega_;
    }

   private:
    Scenario scenario_;
    std::vector<std::vector<uint32_t>> omega_;
    std::vector<uint32_t> flat_;
};

/// All i⃗ with i⃗ = ω(f(i⃗)), ascending flat order.
std::vector<size_t> fixed_points(const QuasiProcessFunction &omega, const OutputChoice &choice);

struct ProcessFunctionVerdict {
    bool is_process_function = true;
    std::optional<OutputChoice> offending_choice;
    size_t fixed_point_count = 1;
};

/// The certificate is the offending choice with the fewest fixed points.
ProcessFunctionVerdict is_process_function(const QuasiProcessFunction &omega, const SearchLimits &limits = {});

/// Number of candidate quasi-process functions. Reduced candidates have ω_k
/// independent of o_k. Saturates at UINT64_MAX.
uint64_t count_candidate_functions(const Scenario &scenario, bool reduced);

/// Visits the candidates passing is_process_function in lexicographic order
/// of (ω_1[0], ω_1[1], ..., ω_N[last]).
void for_each_process_function(const Scenario &scenario, bool reduced, const SearchLimits &limits,
                               const std::function<bool(const QuasiProcessFunction &)> &visit);

std::vector<QuasiProcessFunction> enumerate_process_functions(const Scenario &scenario, bool reduced,
                                                              const SearchLimits &limits = {});

/// Single binary party with ω(o_1) = o_1.
QuasiProcessFunction identity_loop();

/// p(i⃗|o⃗) = δ_{i⃗, ω(o⃗)}.
QuasiProcess quasiprocess_from_function(const QuasiProcessFunction &omega);

struct ProcessFunctionMixture {
    std::vector<std::pair<QuasiProcessFunction, Rational>> components;
};

/// Σ_λ p(λ) δ_{i⃗, ω^λ(o⃗)}. Throws Error(InvalidMixture) for bad weights, an
/// empty mixture, mismatched scenarios, or a component that is not a
/// process function.
QuasiProcess mixture_process(const ProcessFunctionMixture &mixture, const SearchLimits &limits = {});

}  // namespace causelab

#endif
