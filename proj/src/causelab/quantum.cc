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

#include "causelab/quantum.h"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "causelab/errors.h"

namespace causelab {

using cd = std::complex<double>;

size_t QuantumDims::total() const {
    size_t d = 1;
    for (size_t k = 0; k < inputs.size(); k++) {
        d *= static_cast<size_t>(inputs[k]) * outputs[k];
    }
    return d;
}

static double hermiticity_residual(const ComplexMatrix &m) {
    return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

ProcessMatrix::ProcessMatrix(QuantumDims dims, ComplexMatrix w) : dims_(std::move(dims)), w_(std::move(w)) {
    if (dims_.inputs.size() != dims_.outputs.size() || dims_.inputs.empty()) {
        throw Error(ErrorKind::DimensionMismatch, "process matrix needs matching, non-empty input/output dims");
    }
    for (size_t k = 0; k < dims_.inputs.size(); k++) {
        if (dims_.inputs[k] == 0 || dims_.outputs[k] == 0) {
            throw Error(ErrorKind::DimensionMismatch, "process matrix dimension is zero");
        }
    }
    size_t d = dims_.total();
    if (static_cast<size_t>(w_.rows()) != d || static_cast<size_t>(w_.cols()) != d) {
        throw Error(ErrorKind::DimensionMismatch,
                    "process matrix must be " + std::to_string(d) + "x" + std::to_string(d));
    }
    if (!w_.allFinite()) {
        throw Error(ErrorKind::InvalidTable, "process matrix has non-finite entries");
    }
    if (hermiticity_residual(w_) > HERMITIAN_TOLERANCE) {
        throw Error(ErrorKind::InvalidTable, "process matrix is not Hermitian");
    }
}

static ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); i++) {
        for (Eigen::Index j = 0; j < a.cols(); j++) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

/// Tr(W K) without forming the product.
static cd trace_product(const ComplexMatrix &w, const ComplexMatrix &k) {
    return w.cwiseProduct(k.transpose()).sum();
}

ComplexMatrix cj_from_kraus(std::span<const ComplexMatrix> kraus, uint32_t d_in, uint32_t d_out) {
    if (d_in == 0 || d_out == 0) {
        throw Error(ErrorKind::DimensionMismatch, "CJ dimensions must be positive");
    }
    size_t d = static_cast<size_t>(d_in) * d_out;
    ComplexMatrix m = ComplexMatrix::Zero(d, d);
    for (const auto &op : kraus) {
        if (op.rows() != d_out || op.cols() != d_in) {
            throw Error(ErrorKind::DimensionMismatch, "Kraus operator must be d_out x d_in");
        }
        // Σ_{j,k} |j⟩⟨k| ⊗ K|j⟩⟨k|K†.
        for (uint32_t j = 0; j < d_in; j++) {
            for (uint32_t k = 0; k < d_in; k++) {
                m.block(j * d_out, k * d_out, d_out, d_out) += op.col(j) * op.col(k).adjoint();
            }
        }
    }
    return m.transpose();
}

ComplexMatrix partial_trace_output(const ComplexMatrix &m, uint32_t d_in, uint32_t d_out) {
    ComplexMatrix out = ComplexMatrix::Zero(d_in, d_in);
    for (uint32_t i = 0; i < d_in; i++) {
        for (uint32_t j = 0; j < d_in; j++) {
            for (uint32_t o = 0; o < d_out; o++) {
                out(i, j) += m(i * d_out + o, j * d_out + o);
            }
        }
    }
    return out;
}

static double min_eigenvalue(const ComplexMatrix &m) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

ValidityReport is_valid_instrument(const Instrument &instrument, double tol) {
    ValidityReport report;
    size_t d = static_cast<size_t>(instrument.input_dim) * instrument.output_dim;
    ComplexMatrix identity = ComplexMatrix::Identity(instrument.input_dim, instrument.input_dim);
    report.min_eigenvalue = std::numeric_limits<double>::infinity();
    if (instrument.elements.empty()) {
        report.valid = false;
        report.reason = "instrument has no settings";
        return report;
    }
    for (size_t a = 0; a < instrument.elements.size(); a++) {
        const auto &outcomes = instrument.elements[a];
        if (outcomes.size() != instrument.outcomes() || outcomes.empty()) {
            report.valid = false;
            report.reason = "settings have different outcome counts";
            return report;
        }
        ComplexMatrix total = ComplexMatrix::Zero(d, d);
        for (const auto &m : outcomes) {
            if (static_cast<size_t>(m.rows()) != d || static_cast<size_t>(m.cols()) != d) {
                report.valid = false;
                report.reason = "CJ matrix has the wrong dimension";
                return report;
            }
            report.checks++;
            report.hermiticity_residual = std::max(report.hermiticity_residual, hermiticity_residual(m));
            ComplexMatrix herm = (m + m.adjoint()) / 2.0;
            report.min_eigenvalue = std::min(report.min_eigenvalue, min_eigenvalue(herm));
            total += m;
        }
        ComplexMatrix reduced = partial_trace_output(total, instrument.input_dim, instrument.output_dim);
        report.normalization_residual =
            std::max(report.normalization_residual, (reduced - identity).cwiseAbs().maxCoeff());
    }
    if (report.hermiticity_residual > tol) {
        report.valid = false;
        report.reason = "CJ matrix is not Hermitian";
    } else if (report.min_eigenvalue < -tol) {
        report.valid = false;
        report.reason = "CJ matrix has a negative eigenvalue";
    } else if (report.normalization_residual > tol) {
        report.valid = false;
        report.reason = "Tr_O of the summed CJ matrices is not the identity";
    }
    return report;
}

/// Base point 1/d_O plus base + D for each Hermitian D with Tr_O D = 0.
static std::vector<ComplexMatrix> affine_spanning_family(uint32_t d_in, uint32_t d_out) {
    auto unit = [](uint32_t d, uint32_t r, uint32_t c) {
        ComplexMatrix e = ComplexMatrix::Zero(d, d);
        e(r, c) = 1;
        return e;
    };
    std::vector<ComplexMatrix> herm_in;
    for (uint32_t j = 0; j < d_in; j++) {
        herm_in.push_back(unit(d_in, j, j));
        for (uint32_t k = j + 1; k < d_in; k++) {
            herm_in.push_back(unit(d_in, j, k) + unit(d_in, k, j));
            herm_in.push_back(cd(0, 1) * (unit(d_in, j, k) - unit(d_in, k, j)));
        }
    }
    std::vector<ComplexMatrix> traceless_out;
    for (uint32_t j = 0; j < d_out; j++) {
        if (j + 1 < d_out) {
            traceless_out.push_back(unit(d_out, j, j) - unit(d_out, j + 1, j + 1));
        }
        for (uint32_t k = j + 1; k < d_out; k++) {
            traceless_out.push_back(unit(d_out, j, k) + unit(d_out, k, j));
            traceless_out.push_back(cd(0, 1) * (unit(d_out, j, k) - unit(d_out, k, j)));
        }
    }
    size_t d = static_cast<size_t>(d_in) * d_out;
    ComplexMatrix base = ComplexMatrix::Identity(d, d) / static_cast<double>(d_out);
    std::vector<ComplexMatrix> family{base};
    for (const auto &h : herm_in) {
        for (const auto &t : traceless_out) {
            family.push_back(base + kron(h, t));
        }
    }
    return family;
}

ValidityReport is_valid_process_matrix(const ProcessMatrix &pm, double tol) {
    ValidityReport report;
    const ComplexMatrix &w = pm.matrix();
    report.hermiticity_residual = hermiticity_residual(w);
    report.min_eigenvalue = min_eigenvalue((w + w.adjoint()) / 2.0);

    size_t n = pm.dims().num_parties();
    std::vector<std::vector<ComplexMatrix>> families(n);
    for (size_t k = 0; k < n; k++) {
        families[k] = affine_spanning_family(pm.dims().inputs[k], pm.dims().outputs[k]);
    }
    std::vector<size_t> pick(n, 0);
    while (true) {
        ComplexMatrix m = families[0][pick[0]];
        for (size_t k = 1; k < n; k++) {
            m = kron(m, families[k][pick[k]]);
        }
        cd t = trace_product(w, m);
        report.normalization_residual = std::max(report.normalization_residual, std::abs(t - cd(1, 0)));
        report.checks++;
        size_t k = n;
        while (k-- > 0) {
            if (++pick[k] < families[k].size()) {
                break;
            }
            pick[k] = 0;
        }
        if (k == SIZE_MAX) {
            break;
        }
    }

    if (report.hermiticity_residual > tol) {
        report.valid = false;
        report.reason = "W is not Hermitian";
    } else if (report.min_eigenvalue < -tol) {
        report.valid = false;
        report.reason = "W has a negative eigenvalue";
    } else if (report.normalization_residual > tol) {
        report.valid = false;
        report.reason = "Tr(W M_1 ⊗ ... ⊗ M_N) != 1 for some admissible CJ tuple";
    }
    return report;
}

std::vector<double> FloatCorrelation::clipped() const {
    std::vector<double> out = table;
    for (auto &v : out) {
        v = std::clamp(v, 0.0, 1.0);
    }
    return out;
}

FloatCorrelation pm_correlation(const ProcessMatrix &pm, const InstrumentFamily &instruments) {
    const auto &dims = pm.dims();
    size_t n = dims.num_parties();
    if (instruments.size() != n) {
        throw Error(ErrorKind::DimensionMismatch, "need one instrument per party");
    }
    std::vector<PartyAlphabet> parties;
    for (size_t k = 0; k < n; k++) {
        const auto &ins = instruments[k];
        if (ins.input_dim != dims.inputs[k] || ins.output_dim != dims.outputs[k]) {
            throw Error(ErrorKind::DimensionMismatch, "instrument " + std::to_string(k + 1) +
                                                          " does not match the process dimensions");
        }
        if (ins.settings() == 0 || ins.outcomes() == 0) {
            throw Error(ErrorKind::DimensionMismatch, "instrument " + std::to_string(k + 1) + " is empty");
        }
        size_t d = static_cast<size_t>(ins.input_dim) * ins.output_dim;
        for (const auto &row : ins.elements) {
            if (row.size() != ins.outcomes()) {
                throw Error(ErrorKind::DimensionMismatch, "instrument settings have different outcome counts");
            }
            for (const auto &m : row) {
                if (static_cast<size_t>(m.rows()) != d || static_cast<size_t>(m.cols()) != d) {
                    throw Error(ErrorKind::DimensionMismatch, "CJ matrix has the wrong dimension");
                }
            }
        }
        parties.push_back(PartyAlphabet{ins.settings(), ins.outcomes(), dims.inputs[k], dims.outputs[k]});
    }

    FloatCorrelation out;
    out.scenario = Scenario::make(parties);
    const Scenario &s = out.scenario;
    size_t na = s.settings().size();
    size_t nx = s.outcomes().size();
    out.table.assign(nx * na, 0.0);
    for (size_t a = 0; a < na; a++) {
        for (size_t x = 0; x < nx; x++) {
            ComplexMatrix m = instruments[0].elements[s.settings().digit(a, 0)][s.outcomes().digit(x, 0)];
            for (size_t k = 1; k < n; k++) {
                m = kron(m, instruments[k].elements[s.settings().digit(a, k)][s.outcomes().digit(x, k)]);
            }
            out.table[x * na + a] = trace_product(pm.matrix(), m).real();
        }
    }
    out.min_entry = *std::min_element(out.table.begin(), out.table.end());
    for (size_t a = 0; a < na; a++) {
        double mass = 0;
        for (size_t x = 0; x < nx; x++) {
            mass += out.table[x * na + a];
        }
        out.max_normalization_residual = std::max(out.max_normalization_residual, std::fabs(mass - 1.0));
    }
    return out;
}

double score(const Game &game, const FloatCorrelation &corr) {
    require_compatible(game, corr.scenario);
    double total = 0;
    const auto &w = game.weights();
    for (size_t j = 0; j < w.size(); j++) {
        if (!is_zero(w[j])) {
            total += w[j].get_d() * corr.table[j];
        }
    }
    return total;
}

/// Position of (i⃗, o⃗) in the interleaved I_1 O_1 I_2 O_2 ... basis.
static size_t interleaved_index(const Scenario &s, size_t i, size_t o) {
    size_t idx = 0;
    for (size_t k = 0; k < s.num_parties(); k++) {
        const auto &p = s.party(k);
        idx = (idx * p.inputs + s.inputs().digit(i, k)) * p.outputs + s.outputs().digit(o, k);
    }
    return idx;
}

ProcessMatrix diagonal_from_classical(const QuasiProcess &process) {
    const Scenario &s = process.scenario();
    QuantumDims dims;
    for (const auto &p : s.parties()) {
        dims.inputs.push_back(p.inputs);
        dims.outputs.push_back(p.outputs);
    }
    size_t d = dims.total();
    ComplexMatrix w = ComplexMatrix::Zero(d, d);
    for (size_t i = 0; i < s.inputs().size(); i++) {
        for (size_t o = 0; o < s.outputs().size(); o++) {
            size_t j = interleaved_index(s, i, o);
            w(j, j) = process.at(i, o).get_d();
        }
    }
    return ProcessMatrix(std::move(dims), std::move(w));
}

QuasiProcess classical_from_diagonal(const ProcessMatrix &pm, const Scenario &shape) {
    const auto &dims = pm.dims();
    if (shape.num_parties() != dims.num_parties()) {
        throw Error(ErrorKind::DimensionMismatch, "scenario and process matrix have different party counts");
    }
    for (size_t k = 0; k < shape.num_parties(); k++) {
        if (shape.party(k).inputs != dims.inputs[k] || shape.party(k).outputs != dims.outputs[k]) {
            throw Error(ErrorKind::DimensionMismatch, "scenario dims do not match the process matrix");
        }
    }
    const ComplexMatrix &w = pm.matrix();
    for (Eigen::Index r = 0; r < w.rows(); r++) {
        for (Eigen::Index c = 0; c < w.cols(); c++) {
            double limit = r == c ? std::fabs(w(r, c).imag()) : std::abs(w(r, c));
            if (limit > DIAGONAL_TOLERANCE) {
                throw Error(ErrorKind::NonDiagonal, "process matrix is not diagonal in the product basis");
            }
        }
    }
    size_t ni = shape.inputs().size();
    size_t no = shape.outputs().size();
    std::vector<Rational> table(ni * no);
    for (size_t i = 0; i < ni; i++) {
        for (size_t o = 0; o < no; o++) {
            size_t j = interleaved_index(shape, i, o);
            double v = w(j, j).real();
            if (v < -DIAGONAL_TOLERANCE) {
                throw Error(ErrorKind::InvalidTable, "negative diagonal entry");
            }
            table[i * no + o] = rational_from_double(std::max(v, 0.0));
        }
    }
    return QuasiProcess(shape, std::move(table));
}

QuasiProcess classical_from_diagonal(const ProcessMatrix &pm) {
    std::vector<PartyAlphabet> parties;
    for (size_t k = 0; k < pm.dims().num_parties(); k++) {
        uint32_t di = pm.dims().inputs[k];
        uint32_t dout = pm.dims().outputs[k];
        parties.push_back(PartyAlphabet{dout, di, di, dout});
    }
    return classical_from_diagonal(pm, Scenario::make(std::move(parties)));
}

InstrumentFamily diagonal_instruments(const InterventionFamily &interventions) {
    InstrumentFamily out;
    for (const auto &local : interventions.parties()) {
        const auto &p = local.alphabet();
        Instrument ins;
        ins.input_dim = p.inputs;
        ins.output_dim = p.outputs;
        size_t d = static_cast<size_t>(p.inputs) * p.outputs;
        for (uint32_t a = 0; a < p.settings; a++) {
            std::vector<ComplexMatrix> row;
            for (uint32_t x = 0; x < p.outcomes; x++) {
                ComplexMatrix m = ComplexMatrix::Zero(d, d);
                for (uint32_t i = 0; i < p.inputs; i++) {
                    for (uint32_t o = 0; o < p.outputs; o++) {
                        m(i * p.outputs + o, i * p.outputs + o) = local.at(x, o, a, i).get_d();
                    }
                }
                row.push_back(std::move(m));
            }
            ins.elements.push_back(std::move(row));
        }
        out.push_back(std::move(ins));
    }
    return out;
}

namespace {

ComplexMatrix pauli_x() {
    ComplexMatrix m(2, 2);
    m << 0, 1, 1, 0;
    return m;
}

ComplexMatrix pauli_z() {
    ComplexMatrix m(2, 2);
    m << 1, 0, 0, -1;
    return m;
}

ComplexMatrix id2() {
    return ComplexMatrix::Identity(2, 2);
}

ComplexMatrix ket_projector(uint32_t bit) {
    ComplexMatrix m = ComplexMatrix::Zero(2, 2);
    m(bit, bit) = 1;
    return m;
}

/// Projector on the X eigenstate with eigenvalue (-1)^y.
ComplexMatrix x_projector(uint32_t y) {
    return (id2() + (y == 0 ? 1.0 : -1.0) * pauli_x()) / 2.0;
}

}  // namespace

ProcessMatrix builtin_ocb_process() {
    // Ordering: I_1 (A1), O_1 (A2), I_2 (B1), O_2 (B2).
    ComplexMatrix zz = kron(kron(kron(id2(), pauli_z()), pauli_z()), id2());
    ComplexMatrix zxz = kron(kron(kron(pauli_z(), id2()), pauli_x()), pauli_z());
    ComplexMatrix w = (ComplexMatrix::Identity(16, 16) + (zz + zxz) / std::sqrt(2.0)) / 4.0;
    return ProcessMatrix(QuantumDims{{2, 2}, {2, 2}}, std::move(w));
}

InstrumentFamily builtin_ocb_instruments() {
    Instrument first;
    first.input_dim = 2;
    first.output_dim = 2;
    for (uint32_t a = 0; a < 2; a++) {
        std::vector<ComplexMatrix> row;
        for (uint32_t x = 0; x < 2; x++) {
            row.push_back(kron(ket_projector(x), ket_projector(a)));
        }
        first.elements.push_back(std::move(row));
    }

    Instrument second;
    second.input_dim = 2;
    second.output_dim = 2;
    for (uint32_t setting = 0; setting < 4; setting++) {
        uint32_t b = setting & 1;
        uint32_t b_prime = setting >> 1;
        std::vector<ComplexMatrix> row;
        for (uint32_t y = 0; y < 2; y++) {
            if (b_prime == 0) {
                row.push_back(kron(x_projector(y), ket_projector(b ^ y)));
            } else {
                row.push_back(kron(ket_projector(y), ket_projector(0)));
            }
        }
        second.elements.push_back(std::move(row));
    }
    return {first, second};
}

ProcessMatrix builtin_bfw_process() {
    return diagonal_from_classical(bfw_process());
}

}  // namespace causelab
