// Copyright 2026 The qinv Authors
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

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "qinv/state.h"

namespace qinv {

enum class Pauli : std::uint8_t { I, X, Y, Z };

char pauli_char(Pauli p);

/// One Pauli letter per qubit; letter k acts on qubit k+1.
class PauliString {
   public:
    PauliString() = default;
    explicit PauliString(std::vector<Pauli> letters);

    /// Parses "IXYZ"-style text (case-insensitive, '_' accepted for I).
    static PauliString parse(std::string_view text);

    /// Identity everywhere except the given (qubit, letter) assignments.
    static PauliString sparse(int num_qubits, std::initializer_list<std::pair<int, Pauli>> letters);

    std::size_t size() const noexcept {
        return letters_.size();
    }
    Pauli operator[](std::size_t k) const {
        return letters_[k];
    }
    std::string str() const;

   private:
    std::vector<Pauli> letters_;
};

using SingleQubitOp = Eigen::Matrix2cd;

/// One 2x2 operator per qubit; entry k acts on qubit k+1.
using OperatorString = std::vector<SingleQubitOp, Eigen::aligned_allocator<SingleQubitOp>>;

SingleQubitOp pauli_matrix(Pauli p);

/// T = i sigma_y, the spin flip used by the concurrence-type bilinears.
SingleQubitOp spin_flip();

OperatorString operator_string(const PauliString &p);

/// U acting on a single qubit (1-based), via the pair-stride kernel.
PureState apply_single_qubit(const PureState &state, int qubit, const SingleQubitOp &op);

/// U_1 (x) ... (x) U_n.
PureState apply_string(const PureState &state, const OperatorString &ops);

/// P|psi> using the bit-mask form of a Pauli string.
PureState apply_pauli(const PureState &state, const PauliString &p);

/// <psi|P|psi> for a Hermitian Pauli string on a normalized state.
///
/// Throws HermitianViolation when the imaginary part exceeds 1e-10; that can
/// only happen if a kernel is broken.
double expectation(const PureState &state, const PauliString &p);

/// Bilinear form <psi|M|psi*> = sum_ij conj(psi_i) M_ij conj(psi_j).
///
/// Note <psi*|M|psi> is the complex conjugate of this value.
Complex bilinear(const PureState &state, const OperatorString &ops);

/// The SO(3) matrix O with U^dagger sigma_i U = sum_j O_ij sigma_j (i, j over x, y, z).
///
/// Composition: adjoint_rotation(U * V) == adjoint_rotation(U) * adjoint_rotation(V).
Eigen::Matrix3d adjoint_rotation(const SingleQubitOp &u);

/// Largest entry of |U^dagger U - I|.
double unitarity_defect(const SingleQubitOp &u);

}  // namespace qinv
