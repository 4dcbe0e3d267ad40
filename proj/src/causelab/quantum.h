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

#ifndef CAUSELAB_QUANTUM_H
#define CAUSELAB_QUANTUM_H

#include <Eigen/Dense>
#include <complex>
#include <span>
#include <string>
#include <vector>

#include "causelab/games.h"
#include "causelab/scenario.h"

namespace causelab {

using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double HERMITIAN_TOLERANCE = 1e-9;
inline constexpr double DIAGONAL_TOLERANCE = 1e-12;

/// Per-party quantum dimensions d_{I_k}, d_{O_k}.
struct QuantumDims {
    std::vector<uint32_t> inputs;
    std::vector<uint32_t> outputs;

    size_t num_parties() const {
        return inputs.size();
    }
    /// Π_k d_{I_k} d_{O_k}.
    size_t total() const;
    bool operator==(const QuantumDims &) const = default;
};

/// W on H^{I_1} ⊗ H^{O_1} ⊗ H^{I_2} ⊗ H^{O_2} ⊗ ..., party 1 most significant,
/// I before O inside each party.
class ProcessMatrix {
   public:
    ProcessMatrix() = default;
    /// Throws Error(DimensionMismatch) on a size mismatch and
    /// Error(InvalidTable) for non-finite or non-Hermitian (> 1e-9) input.
    ProcessMatrix(QuantumDims dims, ComplexMatrix w);

    const QuantumDims &dims() const {
        return dims_;
    }
    const ComplexMatrix &matrix() const {
        return w_;
    }

   private:
    QuantumDims dims_;
    ComplexMatrix w_;
};

/// CJ matrices M_{x|a} on H^I ⊗ H^O, indexed elements[a][x].
struct Instrument {
    uint32_t input_dim = 1;
    uint32_t output_dim = 1;
    std::vector<std::vector<ComplexMatrix>> elements;

    uint32_t settings() const {
        return static_cast<uint32_t>(elements.size());
    }
    uint32_t outcomes() const {
        return elements.empty() ? 0 : static_cast<uint32_t>(elements.front().size());
    }
};

using InstrumentFamily = std::vector<Instrument>;

struct ValidityReport {
    bool valid = true;
    double min_eigenvalue = 0;
    double hermiticity_residual = 0;
    double normalization_residual = 0;
    size_t checks = 0;
    std::string reason;
};

/// [(id ⊗ M)(d_I |Φ+⟩⟨Φ+|)]^T for the CP map with the given Kraus operators
/// (each d_out x d_in). Throws Error(DimensionMismatch).
ComplexMatrix cj_from_kraus(std::span<const ComplexMatrix> kraus, uint32_t d_in, uint32_t d_out);

/// Tr_O of a matrix on H^I ⊗ H^O.
ComplexMatrix partial_trace_output(const ComplexMatrix &m, uint32_t d_in, uint32_t d_out);

/// Each element PSD and, for every setting, Tr_O Σ_x M_{x|a} = 1_I, within `tol`.
ValidityReport is_valid_instrument(const Instrument &instrument, double tol = HERMITIAN_TOLERANCE);

/// W >= 0 and Tr(W ⊗_k M_k) = 1 on a grid that affinely spans every party's
/// set {M : Tr_O M = 1_I}: the base point 1/d_O plus one point per Hermitian
/// direction with vanishing partial trace.
ValidityReport is_valid_process_matrix(const ProcessMatrix &pm, double tol = HERMITIAN_TOLERANCE);

/// Floating-point p(x⃗|a⃗) from the process-matrix Born rule. Raw values are
/// kept; `clipped()` is for display only.
struct FloatCorrelation {
    Scenario scenario;
    std::vector<double> table;  // x⃗ * |A⃗| + a⃗
    double min_entry = 0;
    double max_normalization_residual = 0;

    double at(size_t x, size_t a) const {
        return table[x * scenario.settings().size() + a];
    }
    std::vector<double> clipped() const;
};

FloatCorrelation pm_correlation(const ProcessMatrix &pm, const InstrumentFamily &instruments);

double score(const Game &game, const FloatCorrelation &corr);

/// W = Σ p(i⃗|o⃗) |i⃗ o⃗⟩⟨i⃗ o⃗| in the product basis.
ProcessMatrix diagonal_from_classical(const QuasiProcess &process);

/// Inverse of diagonal_from_classical. Diagonal entries are recovered as the
/// nearest rationals with denominator <= 10^6. Settings/outcomes are taken
/// from `shape` (whose inputs/outputs must match the dims). Throws
/// Error(NonDiagonal) if an off-diagonal entry exceeds 1e-12.
QuasiProcess classical_from_diagonal(const ProcessMatrix &pm, const Scenario &shape);
/// Same, with settings = outputs and outcomes = inputs.
QuasiProcess classical_from_diagonal(const ProcessMatrix &pm);

/// M_{x|a} = Σ_{i,o} p(x,o|a,i) |i o⟩⟨i o| for every party.
InstrumentFamily diagonal_instruments(const InterventionFamily &interventions);

/// 1/4 [1 + (Z^{O_1} Z^{I_2} + Z^{I_1} X^{I_2} Z^{O_2}) / √2] on four qubits.
ProcessMatrix builtin_ocb_process();
/// Party 1 measures Z and re-prepares |a⟩; party 2 (a_2 = 2b' + b) measures X
/// and prepares |b ⊕ y⟩ when b' = 0, measures Z when b' = 1.
InstrumentFamily builtin_ocb_instruments();
/// diagonal_from_classical(bfw_process()).
ProcessMatrix builtin_bfw_process();

}  // namespace causelab

#endif
