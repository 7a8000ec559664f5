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

#include <complex>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

namespace qinv {

using Complex = std::complex<double>;

inline constexpr int kMaxQubits = 24;
inline constexpr int kMaxKeptQubits = 12;
inline constexpr double kNormTolerance = 1e-10;
inline constexpr double kZeroNormThreshold = 1e-14;

/// How the constructor treats a vector whose squared norm is not 1.
enum class Normalization {
    kStrict,  ///< reject with Unnormalized
    kAuto,    ///< rescale to unit norm
    kRaw,     ///< keep as given; invariant operations that need unit norm will reject it
};

/// Basis index of qubit `qubit` (1-based; qubit 1 is the most significant bit).
std::uint64_t qubit_bit(int num_qubits, int qubit);

/// Throws IndexOutOfRange unless 1 <= qubit <= num_qubits.
void check_qubit(int num_qubits, int qubit);

/// Pure state of n qubits as a dense amplitude vector of length 2^n.
///
/// Basis index b encodes |q1 q2 ... qn> with qubit 1 as the most significant
/// bit. Values are immutable after construction.
class PureState {
   public:
    PureState(int num_qubits, std::vector<Complex> amplitudes,
              Normalization policy = Normalization::kStrict);

    /// Computational basis state |index>.
    static PureState basis(int num_qubits, std::uint64_t index);

    int num_qubits() const noexcept {
        return num_qubits_;
    }
    std::size_t dim() const noexcept {
        return amplitudes_.size();
    }
    std::span<const Complex> amplitudes() const noexcept {
        return amplitudes_;
    }
    const Complex &operator[](std::size_t index) const {
        return amplitudes_[index];
    }

    double norm_squared() const noexcept {
        return norm_squared_;
    }
    bool is_normalized() const noexcept;

    /// Throws Unnormalized naming `context` if |<psi|psi> - 1| > kNormTolerance.
    void require_normalized(std::string_view context) const;

    PureState normalized() const;

   private:
    int num_qubits_;
    std::vector<Complex> amplitudes_;
    double norm_squared_;
};

PureState new_state(int num_qubits, std::vector<Complex> amplitudes,
                    Normalization policy = Normalization::kStrict);

/// Entrywise complex conjugate; the normalization status carries over.
PureState conjugate(const PureState &state);

/// Inner product <a|b>.
Complex inner_product(const PureState &a, const PureState &b);

/// (|0...0> + |1...1>)/sqrt(2).
PureState ghz_state(int num_qubits);

/// Uniform superposition of the n single-excitation basis states.
PureState w_state(int num_qubits);

/// Reduced density matrix over an ordered list of qubits.
///
/// The first kept qubit is the most significant bit of the row index.
class DensityMatrix {
   public:
    /// Validates: distinct in-range qubits, side 2^k, Hermitian to 1e-12,
    /// unit trace to 1e-10, eigenvalues >= -1e-10.
    DensityMatrix(std::vector<int> kept_qubits, Eigen::MatrixXcd matrix);

    const std::vector<int> &kept_qubits() const noexcept {
        return kept_qubits_;
    }
    const Eigen::MatrixXcd &matrix() const noexcept {
        return matrix_;
    }
    int num_kept() const noexcept {
        return static_cast<int>(kept_qubits_.size());
    }
    Eigen::Index side() const noexcept {
        return matrix_.rows();
    }

    /// Ascending eigenvalues of the Hermitized matrix (rho + rho^dagger)/2.
    Eigen::VectorXd eigenvalues() const;

   private:
    struct Unchecked {};
    DensityMatrix(Unchecked, std::vector<int> kept_qubits, Eigen::MatrixXcd matrix);

    friend DensityMatrix partial_trace(const PureState &, std::span<const int>);

    std::vector<int> kept_qubits_;
    Eigen::MatrixXcd matrix_;
};

/// Traces out every qubit not in `keep` (1-based indices, any order,
/// duplicates rejected). The result is ordered by ascending qubit index.
DensityMatrix partial_trace(const PureState &state, std::span<const int> keep);
DensityMatrix partial_trace(const PureState &state, std::initializer_list<int> keep);

/// tr(rho^2).
double purity(const DensityMatrix &rho);

/// tr(rho^k) for k >= 1.
double trace_power(const DensityMatrix &rho, int k);

/// tr[(rhoA (x) rhoB) rhoAB]. rhoAB must cover exactly the union of the two
/// disjoint qubit sets; any ordering of its qubits is accepted.
double cross_term(const DensityMatrix &rho_a, const DensityMatrix &rho_b, const DensityMatrix &rho_ab);

/// Real part of det(rho); the imaginary residue is checked against 1e-12.
double determinant(const DensityMatrix &rho);

}  // namespace qinv
