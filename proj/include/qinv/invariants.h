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
#include <string>
#include <vector>

#include "qinv/pauli.h"
#include "qinv/report.h"
#include "qinv/state.h"

namespace qinv {

// Qubit arguments are 1-based throughout. Functions built from expectation
// values or density matrices (the real, first-kind invariants) require a
// normalized state. The complex bilinear invariants are homogeneous
// polynomials in the amplitudes and accept unnormalized states, which is
// how SLOCC images are evaluated.

/// 1 - <X_i>^2 - <Y_i>^2 - <Z_i>^2, which equals 4 det(rho_i).
double inv_single(const PureState &state, int qubit);

/// Same value through rho_i: checks 1 - |r|^2, 2(1 - tr rho_i^2) and
/// 4 det rho_i against each other (InternalDisagreement beyond 1e-10) and
/// returns 2(1 - tr rho_i^2).
double inv_single_dm(const PureState &state, int qubit);

/// 1 minus the nine squared two-point correlators <s_ia s_jb>, a, b in x, y, z.
double inv_pair(const PureState &state, int i, int j);

/// I_i + I_j + I_ij - 4(1 - tr rho_ij^2); zero for every normalized state.
double pair_identity_residual(const PureState &state, int i, int j);

/// <psi| T (x) ... (x) T |psi*> with T = i sigma_y; needs an even qubit count.
Complex concurrence_even(const PureState &state);

/// b_x^2 + b_z^2 - b_0^2 where b_k = <psi| T...T s_k |psi*>, with the last
/// qubit carrying sigma_x, sigma_z or the identity; needs an odd qubit count.
Complex z_odd(const PureState &state);

/// sum over a, b in x, y, z of <s_ia><s_jb><s_ia s_jb>.
double delta_ab(const PureState &state, int i, int j);

enum class I5Method { kDensity, kPauli };

/// Three-qubit I_5 with A = qubit 1, B = qubit 2. The density route is
/// 3 tr[(rhoA (x) rhoB) rhoAB] - tr rhoA^3 - tr rhoB^3; the Pauli route is
/// (1 + 3 delta_ab(1, 2)) / 4.
double i5(const PureState &state, I5Method method);

enum class QubitPair { kAB, kAC, kBC };

std::string qubit_pair_name(QubitPair pair);

/// Three-qubit sigma_y sigma_y form: sigma_y on the pair, {sigma_x, sigma_z, I}
/// on the remaining qubit, b_x^2 + b_z^2 - b_0^2.
///
/// Evaluated with the <psi|M|psi*> bilinear, so c_pair(AB) equals z_odd.
/// Writing the bilinear as <psi*|M|psi> instead gives the complex conjugate.
Complex c_pair(const PureState &state, QubitPair pair);

/// Three-tangle 4|d1 - 2 d2 + 4 d3| from the quartic amplitude polynomials.
double ckw_tangle(const PureState &state);

/// I_1..I_6 of a normalized three-qubit state. I_2..I_4 are purities of
/// rho_C, rho_B, rho_A; each is computed through the density matrix and the
/// one-point Pauli form, I_5 through both routes and I_6 both as the
/// tangle and as |c_pair(AB)|. Disagreement raises InternalDisagreement.
InvariantReport sudbery_suite(const PureState &state);

/// 2^(n+1) - (3n + 1), the number of independent LU invariant parameters.
std::int64_t invariant_count(int num_qubits);

inline constexpr double kAgreementTolerance = 1e-10;
inline constexpr double kTangleAgreementTolerance = 1e-9;

enum class InvariantFamily { kSingle, kPair, kConcurrence, kZ, kSudbery, kCPair, kTangle };

/// Names one invariant so it can be evaluated generically (reports,
/// orbit verification).
class InvariantSelector {
   public:
    static InvariantSelector single(int qubit);
    static InvariantSelector pair(int i, int j);
    static InvariantSelector concurrence();
    static InvariantSelector z();
    /// Entry k (1..6) of the three-qubit suite.
    static InvariantSelector sudbery(int k);
    static InvariantSelector c_pair(QubitPair pair);
    static InvariantSelector tangle();

    InvariantFamily family() const noexcept {
        return family_;
    }

    /// Report name: "I_{1}" single, "I_{12}" pair ("I_{1,10}" past nine
    /// qubits), "C", "Z", "I_1".."I_6", "C_AB", "tau_ABC".
    std::string name(int num_qubits) const;

    bool is_complex() const noexcept;

    /// True for invariants of determinant-one local operators (evaluated on
    /// unnormalized images).
    bool slocc_invariant() const noexcept;

    bool applicable(int num_qubits) const noexcept;

    Complex evaluate(const PureState &state) const;

   private:
    InvariantSelector(InvariantFamily family, int a, int b, QubitPair pair)
        : family_(family), a_(a), b_(b), pair_(pair) {
    }

    InvariantFamily family_;
    int a_ = 0;
    int b_ = 0;
    QubitPair pair_ = QubitPair::kAB;
};

/// Every invariant the report carries for n qubits, in report order: the
/// three-qubit suite (n = 3), single-qubit, pairwise, then C (even n) or
/// Z (odd n), then C_AB, C_AC, C_BC (n = 3).
std::vector<InvariantSelector> applicable_invariants(int num_qubits);

/// Evaluates applicable_invariants on a normalized state.
InvariantReport invariant_report(const PureState &state);

}  // namespace qinv
