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

#include "qinv/invariants.h"
#include "qinv/pauli.h"
#include "qinv/state.h"

namespace qinv {

enum class GroupKind { kLU, kSL };

std::string group_name(GroupKind kind);

/// Unitary tolerance for LU elements and determinant tolerance for SL elements.
inline constexpr double kGroupTolerance = 1e-10;
/// Structural cap checked on every SL element.
inline constexpr double kMaxSlCondition = 100;
/// Cap enforced by the SL sampler.
inline constexpr double kSampledSlCondition = 10;

/// One 2x2 operator per qubit, either unitary (LU) or determinant one (SL).
class LocalOperator {
   public:
    /// Validates every factor against `kind`.
    LocalOperator(OperatorString ops, GroupKind kind);

    const OperatorString &ops() const noexcept {
        return ops_;
    }
    GroupKind kind() const noexcept {
        return kind_;
    }
    int num_qubits() const noexcept {
        return static_cast<int>(ops_.size());
    }

    static LocalOperator identity(int num_qubits, GroupKind kind = GroupKind::kLU);

   private:
    OperatorString ops_;
    GroupKind kind_;
};

/// Per-qubit product h * g (apply g first). The kind is SL if either is SL.
LocalOperator compose(const LocalOperator &h, const LocalOperator &g);

/// exp(i alpha Z) exp(i omega Y) exp(i beta Z).
SingleQubitOp euler_unitary(double alpha, double omega, double beta);

/// Singular-value ratio of a 2x2 matrix.
double condition_number(const SingleQubitOp &m);

/// Standard complex Gaussian amplitudes, normalized. Deterministic per seed.
PureState random_state(int num_qubits, std::uint64_t seed);

/// Per qubit: alpha, beta uniform in [0, 2pi), omega uniform in [0, pi),
/// and when `global_phase` is set an extra uniform phase factor.
LocalOperator random_lu(int num_qubits, std::uint64_t seed, bool global_phase = false);

/// Per qubit: exp of a traceless complex Gaussian matrix scaled by `spread`,
/// rescaled by sqrt(det), resampled until the condition number is at most 10.
/// Throws ConditioningFailure after 10000 rejected draws for one qubit.
LocalOperator random_sl(int num_qubits, std::uint64_t seed, double spread = 0.5);

struct LocalImage {
    PureState raw;         ///< g|psi> as computed
    PureState state;       ///< raw image rescaled to unit norm
    double raw_norm = 1;   ///< sqrt(<psi|g^dagger g|psi>)
};

LocalImage apply_local(const PureState &state, const LocalOperator &g);

/// Seed of sample `index` in a campaign started from `seed`.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

struct VerificationReport {
    std::string invariant;
    GroupKind group = GroupKind::kLU;
    int samples = 0;
    double max_abs_deviation = 0;
    /// |deviation| / max(|base value|, kRelativeFloor).
    double max_rel_deviation = 0;
    std::uint64_t seed = 0;
    double tolerance = 0;
    /// LU: max_abs_deviation < tolerance. SL: max_rel_deviation < tolerance.
    bool pass = false;
    Complex base_value;
};

inline constexpr double kRelativeFloor = 1e-12;

/// Evaluates `invariant` on `state` and on `samples` random images of it,
/// recording the largest deviations. LU images carry per-qubit global phases,
/// so complex invariants are compared by modulus; SL images are evaluated
/// unnormalized and compared as complex numbers.
VerificationReport verify_invariance(const PureState &state, const InvariantSelector &invariant, GroupKind group,
                                     int samples, double tolerance, std::uint64_t seed);

}  // namespace qinv
