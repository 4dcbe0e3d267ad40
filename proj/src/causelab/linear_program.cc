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

#include "causelab/linear_program.h"

#include <algorithm>

#include <map>
#include <sstream>

#include "causelab/errors.h"

namespace causelab {

LinearProgram::LinearProgram(size_t num_variables, OptimizationSense sense)
    : objective_(num_variables), sense_(sense) {
}

void LinearProgram::set_objective(size_t var, Rational coefficient) {
    if (var >= objective_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "objective variable out of range");
    }
    objective_[var] = std::move(coefficient);
}

void LinearProgram::add_constraint(std::vector<std::pair<size_t, Rational>> terms, RowKind kind, Rational rhs) {
    std::map<size_t, Rational> merged;
    for (auto &[var, coef] : terms) {
        if (var >= objective_.size()) {
            throw Error(ErrorKind::DimensionMismatch, "constraint variable out of range");
        }
        merged[var] += coef;
    }
    LinearConstraint c;
    for (auto &[var, coef] : merged) {
        if (!is_zero(coef)) {
            c.terms.emplace_back(var, coef);
        }
    }
    c.kind = kind;
    c.rhs = std::move(rhs);
    constraints_.push_back(std::move(c));
}

void LinearProgram::add_dense_constraint(const std::vector<Rational> &row, RowKind kind, Rational rhs) {
    if (row.size() != objective_.size()) {
        throw Error(ErrorKind::DimensionMismatch, "dense constraint row has the wrong width");
    }
    std::vector<std::pair<size_t, Rational>> terms;
    for (size_t j = 0; j < row.size(); j++) {
        if (!is_zero(row[j])) {
            terms.emplace_back(j, row[j]);
        }
    }
    add_constraint(std::move(terms), kind, std::move(rhs));
}

static void write_terms(std::ostream &out, const std::vector<std::pair<size_t, Rational>> &terms) {
    if (terms.empty()) {
        out << "0";
    }
    bool first = true;
    for (const auto &[var, coef] : terms) {
        if (!first) {
            out << (sgn(coef) < 0 ? " - " : " + ");
        } else if (sgn(coef) < 0) {
            out << "-";
        }
        out << Rational(abs(coef)).get_str() << " x" << var;
        first = false;
    }
}

std::string LinearProgram::to_text() const {
    std::stringstream out;
    out << (sense_ == OptimizationSense::Maximize ? "maximize " : "minimize ");
    std::vector<std::pair<size_t, Rational>> obj;
    for (size_t j = 0; j < objective_.size(); j++) {
        if (!is_zero(objective_[j])) {
            obj.emplace_back(j, objective_[j]);
        }
    }
    write_terms(out, obj);
    out << "\nsubject to\n";
    for (const auto &c : constraints_) {
        out << "  ";
        write_terms(out, c.terms);
        out << (c.kind == RowKind::LessEqual ? " <= " : c.kind == RowKind::Equal ? " = " : " >= ") << c.rhs.get_str()
            << "\n";
    }
    out << "  x >= 0\n";
    return out.str();
}

const char *lp_status_name(LpStatus status) {
    switch (status) {
        case LpStatus::Optimal:
            return "optimal";
        case LpStatus::Infeasible:
            return "infeasible";
        case LpStatus::Unbounded:
            return "unbounded";
    }
    return "unknown";
}

namespace {

class Tableau {
   public:
    std::vector<std::vector<Rational>> rows;  // last column is the rhs
    std::vector<size_t> basis;
    std::vector<Rational> objective_row;  // z_j - c_j, last entry is the objective value
    std::vector<bool> banned;             // columns that may not enter
    size_t pivots = 0;
    size_t columns = 0;  // excluding the rhs

    size_t width() const {
        return columns;
    }

    void pivot(size_t r, size_t e) {
        pivots++;
        auto &pr = rows[r];
        Rational inv = 1 / pr[e];
        std::vector<size_t> nz;
        for (size_t j = 0; j < pr.size(); j++) {
            if (!is_zero(pr[j])) {
                pr[j] *= inv;
                nz.push_back(j);
            }
        }
        Rational f;
        auto eliminate = [&](std::vector<Rational> &row) {
            if (is_zero(row[e])) {
                return;
            }
            f = row[e];
            for (size_t j : nz) {
                row[j] -= f * pr[j];
            }
        };
        for (size_t i = 0; i < rows.size(); i++) {
            if (i != r) {
                eliminate(rows[i]);
            }
        }
        eliminate(objective_row);
        basis[r] = e;
    }

    /// Sets objective_row for maximizing Σ cost[j] x_j with the current basis.
    void price(const std::vector<Rational> &cost) {
        size_t w = width();
        objective_row.assign(w + 1, Rational(0));
        for (size_t j = 0; j < w; j++) {
            objective_row[j] = -cost[j];
        }
        for (size_t r = 0; r < rows.size(); r++) {
            const Rational &cb = cost[basis[r]];
            if (is_zero(cb)) {
                continue;
            }
            for (size_t j = 0; j <= w; j++) {
                if (!is_zero(rows[r][j])) {
                    objective_row[j] += cb * rows[r][j];
                }
            }
        }
    }

    /// Bland's rule iterations. Returns false if unbounded.
    bool run() {
        size_t w = width();
        Rational best_ratio, ratio;
        while (true) {
            size_t enter = w;
            for (size_t j = 0; j < w; j++) {
                if (!banned[j] && sgn(objective_row[j]) < 0) {
                    enter = j;
                    break;
                }
            }
            if (enter == w) {
                return true;
            }
            size_t leave = rows.size();
            for (size_t r = 0; r < rows.size(); r++) {
                if (sgn(rows[r][enter]) <= 0) {
                    continue;
                }
                ratio = rows[r][w] / rows[r][enter];
                if (leave == rows.size() || ratio < best_ratio ||
                    (ratio == best_ratio && basis[r] < basis[leave])) {
                    leave = r;
                    best_ratio = ratio;
                }
            }
            if (leave == rows.size()) {
                return false;
            }
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult lp_solve(const LinearProgram &lp) {
    size_t n = lp.num_variables();
    const auto &cons = lp.constraints();
    size_t m = cons.size();

    size_t num_slack = 0, num_art = 0;
    std::vector<RowKind> kinds(m);
    std::vector<bool> flip(m);
    for (size_t r = 0; r < m; r++) {
        flip[r] = sgn(cons[r].rhs) < 0;
        RowKind k = cons[r].kind;
        if (flip[r] && k != RowKind::Equal) {
            k = k == RowKind::LessEqual ? RowKind::GreaterEqual : RowKind::LessEqual;
        }
        kinds[r] = k;
        if (k != RowKind::Equal) {
            num_slack++;
        }
        if (k != RowKind::LessEqual) {
            num_art++;
        }
    }
    size_t first_art = n + num_slack;
    size_t w = first_art + num_art;

    Tableau t;
    t.columns = w;
    t.rows.assign(m, std::vector<Rational>(w + 1));
    t.basis.assign(m, 0);
    t.banned.assign(w, false);
    size_t next_slack = n, next_art = first_art;
    for (size_t r = 0; r < m; r++) {
        auto &row = t.rows[r];
        for (const auto &[var, coef] : cons[r].terms) {
            row[var] = flip[r] ? Rational(-coef) : coef;
        }
        row[w] = flip[r] ? Rational(-cons[r].rhs) : cons[r].rhs;
        if (kinds[r] == RowKind::LessEqual) {
            row[next_slack] = 1;
            t.basis[r] = next_slack++;
        } else {
            if (kinds[r] == RowKind::GreaterEqual) {
                row[next_slack++] = -1;
            }
            row[next_art] = 1;
            t.basis[r] = next_art++;
        }
    }

    LpResult result;
    if (num_art > 0) {
        std::vector<Rational> phase1(w);
        for (size_t j = first_art; j < w; j++) {
            phase1[j] = -1;
        }
        t.price(phase1);
        t.run();  // bounded above by zero
        if (sgn(t.objective_row[w]) < 0) {
            result.status = LpStatus::Infeasible;
            result.pivots = t.pivots;
            return result;
        }
        // Drive zero-level artificials out of the basis, dropping redundant rows.
        for (size_t r = 0; r < t.rows.size();) {
            if (t.basis[r] < first_art) {
                r++;
                continue;
            }
            size_t enter = first_art;
            for (size_t j = 0; j < first_art; j++) {
                if (!is_zero(t.rows[r][j])) {
                    enter = j;
                    break;
                }
            }
            if (enter == first_art) {
                t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(r));
                t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(r));
                continue;
            }
            t.pivot(r, enter);
            r++;
        }
        for (size_t j = first_art; j < w; j++) {
            t.banned[j] = true;
        }
    }

    std::vector<Rational> cost(w);
    bool maximize = lp.sense() == OptimizationSense::Maximize;
    for (size_t j = 0; j < n; j++) {
        cost[j] = maximize ? lp.objective()[j] : Rational(-lp.objective()[j]);
    }
    t.price(cost);
    bool bounded = t.run();
    result.pivots = t.pivots;
    if (!bounded) {
        result.status = LpStatus::Unbounded;
        return result;
    }
    result.status = LpStatus::Optimal;
    result.solution.assign(n, Rational(0));
    for (size_t r = 0; r < t.rows.size(); r++) {
        if (t.basis[r] < n) {
            result.solution[t.basis[r]] = t.rows[r][w];
        }
    }
    result.value = 0;
    for (size_t j = 0; j < n; j++) {
        result.value += lp.objective()[j] * result.solution[j];
    }
    return result;
}

LpResult lp_solve_or_throw(const LinearProgram &lp) {
    LpResult r = lp_solve(lp);
    if (r.status == LpStatus::Infeasible) {
        throw Error(ErrorKind::Infeasible, "linear program is infeasible");
    }
    if (r.status == LpStatus::Unbounded) {
        throw Error(ErrorKind::Unbounded, "linear program is unbounded");
    }
    return r;
}

namespace {

using SparseVector = std::vector<std::pair<size_t, Rational>>;

Rational sparse_dot(const std::vector<Rational> &dense, const SparseVector &sparse) {
    Rational total = 0;
    for (const auto &[d, value] : sparse) {
        if (!is_zero(dense[d])) {
            total += dense[d] * value;
        }
    }
    return total;
}

/// maximize c·point - β subject to c·v <= β for active v, |c_d| <= 1.
/// Variables: c+ (dim), c- (dim), β+, β-.
LpResult solve_separation(const std::vector<Rational> &point, const std::vector<SparseVector> &vertices,
                          const std::vector<size_t> &active) {
    size_t dim = point.size();
    size_t bp = 2 * dim, bm = 2 * dim + 1;
    LinearProgram sep(2 * dim + 2);
    for (size_t d = 0; d < dim; d++) {
        sep.set_objective(d, point[d]);
        sep.set_objective(dim + d, -point[d]);
        sep.add_constraint({{d, Rational(1)}}, RowKind::LessEqual, Rational(1));
        sep.add_constraint({{dim + d, Rational(1)}}, RowKind::LessEqual, Rational(1));
    }
    sep.set_objective(bp, Rational(-1));
    sep.set_objective(bm, Rational(1));
    for (size_t v : active) {
        std::vector<std::pair<size_t, Rational>> terms;
        for (const auto &[d, value] : vertices[v]) {
            terms.emplace_back(d, value);
            terms.emplace_back(dim + d, -value);
        }
        terms.emplace_back(bp, Rational(-1));
        terms.emplace_back(bm, Rational(1));
        sep.add_constraint(std::move(terms), RowKind::LessEqual, Rational(0));
    }
    return lp_solve_or_throw(sep);
}

/// λ >= 0, Σ λ_v v = point, Σ λ_v = 1 over the active vertices.
LpResult solve_membership(const std::vector<Rational> &point, const std::vector<SparseVector> &vertices,
                          const std::vector<size_t> &active) {
    size_t dim = point.size();
    LinearProgram member(active.size());
    std::vector<std::vector<std::pair<size_t, Rational>>> rows(dim);
    for (size_t col = 0; col < active.size(); col++) {
        for (const auto &[d, value] : vertices[active[col]]) {
            rows[d].emplace_back(col, value);
        }
    }
    for (size_t d = 0; d < dim; d++) {
        member.add_constraint(std::move(rows[d]), RowKind::Equal, point[d]);
    }
    std::vector<std::pair<size_t, Rational>> sum;
    for (size_t col = 0; col < active.size(); col++) {
        sum.emplace_back(col, Rational(1));
    }
    member.add_constraint(std::move(sum), RowKind::Equal, Rational(1));
    return lp_solve(member);
}

}  // namespace

HullResult hull_membership(const std::vector<Rational> &point, const std::vector<std::vector<Rational>> &vertices,
                           uint64_t vertex_cap) {
    if (vertices.size() > vertex_cap) {
        throw Error(ErrorKind::CapExceeded, "vertex count " + std::to_string(vertices.size()) +
                                                " exceeds the hull cap " + std::to_string(vertex_cap));
    }
    if (vertices.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "hull query with no vertices");
    }
    size_t dim = point.size();
    size_t nv = vertices.size();
    std::vector<SparseVector> sparse(nv);
    for (size_t v = 0; v < nv; v++) {
        if (vertices[v].size() != dim) {
            throw Error(ErrorKind::DimensionMismatch, "hull vertex has the wrong dimension");
        }
        for (size_t d = 0; d < dim; d++) {
            if (!is_zero(vertices[v][d])) {
                sparse[v].emplace_back(d, vertices[v][d]);
            }
        }
    }

    // Constraint generation on the separation LP. Its optimum over a vertex
    // subset is the l1 distance from the point to that subset's hull, so a
    // zero optimum means the point lies in the hull of the active vertices.
    constexpr size_t CUTS_PER_ROUND = 16;
    std::vector<size_t> active{0};
    std::vector<bool> is_active(nv, false);
    is_active[0] = true;
    HullResult out;
    while (true) {
        LpResult s = solve_separation(point, sparse, active);
        if (sgn(s.value) <= 0) {
            LpResult r = solve_membership(point, sparse, active);
            if (r.status != LpStatus::Optimal) {
                throw Error(ErrorKind::Infeasible, "hull membership: restricted hull lost feasibility");
            }
            out.inside = true;
            out.weights.assign(nv, Rational(0));
            for (size_t col = 0; col < active.size(); col++) {
                out.weights[active[col]] = r.solution[col];
            }
            return out;
        }
        std::vector<Rational> c(dim);
        for (size_t d = 0; d < dim; d++) {
            c[d] = s.solution[d] - s.solution[dim + d];
        }
        Rational beta = s.solution[2 * dim] - s.solution[2 * dim + 1];

        // Most violated vertices first, ties to the lower index.
        std::vector<std::pair<Rational, size_t>> violated;
        Rational best;
        for (size_t v = 0; v < nv; v++) {
            Rational val = sparse_dot(c, sparse[v]);
            if (v == 0 || val > best) {
                best = val;
            }
            if (val > beta && !is_active[v]) {
                violated.emplace_back(val, v);
            }
        }
        if (violated.empty()) {
            out.functional = std::move(c);
            out.bound = best;
            return out;
        }
        size_t take = std::min(CUTS_PER_ROUND, violated.size());
        std::partial_sort(violated.begin(), violated.begin() + static_cast<std::ptrdiff_t>(take), violated.end(),
                          [](const auto &x, const auto &y) { return x.first > y.first || (x.first == y.first && x.second < y.second); });
        for (size_t t = 0; t < take; t++) {
            active.push_back(violated[t].second);
            is_active[violated[t].second] = true;
        }
    }
}

}  // namespace causelab
