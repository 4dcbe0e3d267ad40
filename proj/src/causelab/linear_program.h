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

#ifndef CAUSELAB_LINEAR_PROGRAM_H
#define CAUSELAB_LINEAR_PROGRAM_H

#include <string>
#include <utility>
#include <vector>

#include "causelab/rational.h"

namespace causelab {

enum class OptimizationSense { Maximize, Minimize };
enum class RowKind { LessEqual, Equal, GreaterEqual };

struct LinearConstraint {
    std::vector<std::pair<size_t, Rational>> terms;
    RowKind kind = RowKind::Equal;
    Rational rhs;
};

/// Variables are implicitly non-negative.
class LinearProgram {
   public:
    explicit LinearProgram(size_t num_variables, OptimizationSense sense = OptimizationSense::Maximize);

    size_t num_variables() const {
        return objective_.size();
    }
    OptimizationSense sense() const {
        return sense_;
    }
    const std::vector<Rational> &objective() const {
        return objective_;
    }
    const std::vector<LinearConstraint> &constraints() const {
        return constraints_;
    }

    void set_objective(size_t var, Rational coefficient);
    /// Terms with repeated variables are summed. Throws Error(DimensionMismatch)
    /// for an out-of-range variable index.
    void add_constraint(std::vector<std::pair<size_t, Rational>> terms, RowKind kind, Rational rhs);
    void add_dense_constraint(const std::vector<Rational> &row, RowKind kind, Rational rhs);

    /// Plain-text dump, one equation per line, for debugging.
    std::string to_text() const;

   private:
    std::vector<Rational> objective_;
    std::vector<LinearConstraint> constraints_;
    OptimizationSense sense_;
};

enum class LpStatus { Optimal, Infeasible, Unbounded };

const char *lp_status_name(LpStatus status);

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> solution;
    size_t pivots = 0;
};

/// Exact two-phase simplex with Bland's rule. Deterministic.
LpResult lp_solve(const LinearProgram &lp);

/// Like lp_solve, but throws Error(Infeasible / Unbounded) on failure.
LpResult lp_solve_or_throw(const LinearProgram &lp);

struct HullResult {
    bool inside = false;
    /// Convex weights (inside): point = Σ weights[v] * vertices[v].
    std::vector<Rational> weights;
    /// Separating functional (outside): functional·point > bound >= functional·v for all v.
    std::vector<Rational> functional;
    Rational bound;
};

/// Exact convex-hull membership. Throws Error(CapExceeded) above `vertex_cap`
/// vertices and Error(DimensionMismatch) on ragged input.
HullResult hull_membership(const std::vector<Rational> &point, const std::vector<std::vector<Rational>> &vertices,
                           uint64_t vertex_cap = 100000);

}  // namespace causelab

#endif
