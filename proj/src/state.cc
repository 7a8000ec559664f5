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

#include "qinv/state.h"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qinv/error.h"

namespace qinv {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kTraceTolerance = 1e-10;
constexpr double kEigenvalueFloor = -1e-10;
constexpr double kImagResidue = 1e-12;

double squared_norm(std::span<const Complex> v) {
    double total = 0;
    for (const auto &a : v) {
        total += std::norm(a);
    }
    return total;
}

void check_qubit_count(int num_qubits) {
    if (num_qubits < 1) {
        throw Error(ErrorCode::kInvalidArgument, "qubit count must be at least 1, got " + std::to_string(num_qubits));
    }
    if (num_qubits > kMaxQubits) {
        throw Error(ErrorCode::kTooLarge, "qubit count " + std::to_string(num_qubits) + " exceeds the limit of " +
                                              std::to_string(kMaxQubits));
    }
}

double checked_real(Complex value, const char *what) {
    if (std::abs(value.imag()) >= kImagResidue) {
        std::ostringstream ss;
        ss << what << " has imaginary residue " << value.imag();
        throw Error(ErrorCode::kHermitianViolation, ss.str());
    }
    return value.real();
}

// Maps an index over `qubits` (first entry most significant) to the
// corresponding bits of an n-qubit basis index.
std::vector<std::uint64_t> scatter_table(int num_qubits, const std::vector<int> &qubits) {
    const auto k = qubits.size();
    std::vector<std::uint64_t> table(std::size_t{1} << k, 0);
    for (std::size_t r = 0; r < table.size(); ++r) {
        std::uint64_t full = 0;
        for (std::size_t t = 0; t < k; ++t) {
            if ((r >> (k - 1 - t)) & 1) {
                full |= qubit_bit(num_qubits, qubits[t]);
            }
        }
        table[r] = full;
    }
    return table;
}

}  // namespace

std::uint64_t qubit_bit(int num_qubits, int qubit) {
    return std::uint64_t{1} << (num_qubits - qubit);
}

void check_qubit(int num_qubits, int qubit) {
    if (qubit < 1 || qubit > num_qubits) {
        throw Error(ErrorCode::kIndexOutOfRange,
                    "qubit " + std::to_string(qubit) + " outside 1.." + std::to_string(num_qubits));
    }
}

PureState::PureState(int num_qubits, std::vector<Complex> amplitudes, Normalization policy)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)) {
    check_qubit_count(num_qubits);
    const std::size_t expected = std::size_t{1} << num_qubits;
    if (amplitudes_.size() != expected) {
        throw Error(ErrorCode::kLengthMismatch, "expected " + std::to_string(expected) + " amplitudes for " +
                                                    std::to_string(num_qubits) + " qubits, got " +
                                                    std::to_string(amplitudes_.size()));
    }
    for (const auto &a : amplitudes_) {
        if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
            throw Error(ErrorCode::kInvalidArgument, "amplitudes must be finite");
        }
    }
    norm_squared_ = squared_norm(amplitudes_);
    if (std::sqrt(norm_squared_) < kZeroNormThreshold) {
        throw Error(ErrorCode::kZeroVector, "amplitude vector has zero norm");
    }
    if (std::abs(norm_squared_ - 1) > kNormTolerance) {
        switch (policy) {
            case Normalization::kStrict: {
                std::ostringstream ss;
                ss.precision(17);
                ss << "squared norm " << norm_squared_ << " differs from 1 by more than " << kNormTolerance;
                throw Error(ErrorCode::kUnnormalized, ss.str());
            }
            case Normalization::kAuto: {
                const double scale = 1 / std::sqrt(norm_squared_);
                for (auto &a : amplitudes_) {
                    a *= scale;
                }
                norm_squared_ = squared_norm(amplitudes_);
                break;
            }
            case Normalization::kRaw:
                break;
        }
    }
}

PureState PureState::basis(int num_qubits, std::uint64_t index) {
    check_qubit_count(num_qubits);
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    if (index >= amps.size()) {
        throw Error(ErrorCode::kIndexOutOfRange, "basis index " + std::to_string(index) + " out of range");
    }
    amps[index] = 1;
    return PureState(num_qubits, std::move(amps));
}

bool PureState::is_normalized() const noexcept {
    return std::abs(norm_squared_ - 1) <= kNormTolerance;
}

void PureState::require_normalized(std::string_view context) const {
    if (!is_normalized()) {
        std::ostringstream ss;
        ss.precision(17);
        ss << context << " requires a normalized state; squared norm is " << norm_squared_;
        throw Error(ErrorCode::kUnnormalized, ss.str());
    }
}

PureState PureState::normalized() const {
    return PureState(num_qubits_, amplitudes_, Normalization::kAuto);
}

PureState new_state(int num_qubits, std::vector<Complex> amplitudes, Normalization policy) {
    return PureState(num_qubits, std::move(amplitudes), policy);
}

PureState conjugate(const PureState &state) {
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (auto &a : amps) {
        a = std::conj(a);
    }
    return PureState(state.num_qubits(), std::move(amps), Normalization::kRaw);
}

Complex inner_product(const PureState &a, const PureState &b) {
    if (a.num_qubits() != b.num_qubits()) {
        throw Error(ErrorCode::kLengthMismatch, "inner product of states with different qubit counts");
    }
    Complex total = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) {
        total += std::conj(a[i]) * b[i];
    }
    return total;
}

PureState ghz_state(int num_qubits) {
    check_qubit_count(num_qubits);
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    amps.front() = M_SQRT1_2;
    amps.back() = M_SQRT1_2;
    return PureState(num_qubits, std::move(amps));
}

PureState w_state(int num_qubits) {
    check_qubit_count(num_qubits);
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    const double a = 1 / std::sqrt(static_cast<double>(num_qubits));
    for (int q = 1; q <= num_qubits; ++q) {
        amps[qubit_bit(num_qubits, q)] = a;
    }
    return PureState(num_qubits, std::move(amps));
}

DensityMatrix::DensityMatrix(Unchecked, std::vector<int> kept_qubits, Eigen::MatrixXcd matrix)
    : kept_qubits_(std::move(kept_qubits)), matrix_(std::move(matrix)) {
}

DensityMatrix::DensityMatrix(std::vector<int> kept_qubits, Eigen::MatrixXcd matrix)
    : kept_qubits_(std::move(kept_qubits)), matrix_(std::move(matrix)) {
    if (kept_qubits_.empty()) {
        throw Error(ErrorCode::kBadSubset, "density matrix needs at least one qubit");
    }
    if (kept_qubits_.size() > static_cast<std::size_t>(kMaxKeptQubits)) {
        throw Error(ErrorCode::kBadSubset, "density matrix over more than " + std::to_string(kMaxKeptQubits) +
                                               " qubits");
    }
    auto sorted = kept_qubits_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 1) {
        throw Error(ErrorCode::kBadSubset, "kept qubits must be distinct positive indices");
    }
    const Eigen::Index side = Eigen::Index{1} << kept_qubits_.size();
    if (matrix_.rows() != side || matrix_.cols() != side) {
        throw Error(ErrorCode::kDimensionMismatch, "matrix side must be " + std::to_string(side));
    }
    if ((matrix_ - matrix_.adjoint()).cwiseAbs().maxCoeff() > kHermitianTolerance) {
        throw Error(ErrorCode::kHermitianViolation, "density matrix is not Hermitian");
    }
    if (std::abs(matrix_.trace() - Complex(1)) > kTraceTolerance) {
        throw Error(ErrorCode::kInvalidArgument, "density matrix trace differs from 1");
    }
    if (eigenvalues().minCoeff() < kEigenvalueFloor) {
        throw Error(ErrorCode::kInvalidArgument, "density matrix has a negative eigenvalue");
    }
}

Eigen::VectorXd DensityMatrix::eigenvalues() const {
    const Eigen::MatrixXcd hermitized = 0.5 * (matrix_ + matrix_.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(hermitized, Eigen::EigenvaluesOnly);
    return solver.eigenvalues();
}

DensityMatrix partial_trace(const PureState &state, std::span<const int> keep) {
    const int n = state.num_qubits();
    if (keep.empty()) {
        throw Error(ErrorCode::kBadSubset, "keep set is empty");
    }
    std::vector<int> kept(keep.begin(), keep.end());
    std::sort(kept.begin(), kept.end());
    if (std::adjacent_find(kept.begin(), kept.end()) != kept.end()) {
        throw Error(ErrorCode::kBadSubset, "keep set has duplicate qubits");
    }
    if (kept.front() < 1 || kept.back() > n) {
        throw Error(ErrorCode::kBadSubset, "keep set has a qubit outside 1.." + std::to_string(n));
    }
    if (kept.size() > static_cast<std::size_t>(kMaxKeptQubits)) {
        throw Error(ErrorCode::kBadSubset, "keep set larger than " + std::to_string(kMaxKeptQubits) + " qubits");
    }
    state.require_normalized("partial_trace");

    std::vector<int> traced;
    for (int q = 1; q <= n; ++q) {
        if (!std::binary_search(kept.begin(), kept.end(), q)) {
            traced.push_back(q);
        }
    }
    const auto rows = scatter_table(n, kept);
    const auto cols = scatter_table(n, traced);

    // rho = Psi Psi^dagger with Psi[r, c] = amplitude(kept bits r, traced bits c).
    Eigen::MatrixXcd psi(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
    for (std::size_t c = 0; c < cols.size(); ++c) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            psi(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = state[rows[r] | cols[c]];
        }
    }
    Eigen::MatrixXcd rho = psi * psi.adjoint();
    rho = (0.5 * (rho + rho.adjoint())).eval();
    return DensityMatrix(DensityMatrix::Unchecked{}, std::move(kept), std::move(rho));
}

DensityMatrix partial_trace(const PureState &state, std::initializer_list<int> keep) {
    return partial_trace(state, std::span<const int>(keep.begin(), keep.size()));
}

double purity(const DensityMatrix &rho) {
    return trace_power(rho, 2);
}

double trace_power(const DensityMatrix &rho, int k) {
    if (k < 1) {
        throw Error(ErrorCode::kInvalidArgument, "trace power needs k >= 1");
    }
    const auto &m = rho.matrix();
    if (k == 1) {
        return checked_real(m.trace(), "tr(rho)");
    }
    if (k == 2) {
        // tr(rho rho) without forming the product.
        return checked_real((m.array() * m.transpose().array()).sum(), "tr(rho^2)");
    }
    Eigen::MatrixXcd power = m;
    for (int i = 1; i < k - 1; ++i) {
        power = (power * m).eval();
    }
    return checked_real((power.array() * m.transpose().array()).sum(), "tr(rho^k)");
}

double cross_term(const DensityMatrix &rho_a, const DensityMatrix &rho_b, const DensityMatrix &rho_ab) {
    const auto &qa = rho_a.kept_qubits();
    const auto &qb = rho_b.kept_qubits();
    const auto &qab = rho_ab.kept_qubits();
    if (qa.size() + qb.size() != qab.size()) {
        throw Error(ErrorCode::kDimensionMismatch, "joint density matrix does not cover the two subsystems");
    }
    // Position of each qubit of A and B inside the joint ordering, as a bit of the joint index.
    const auto position_bits = [&](const std::vector<int> &sub) {
        std::vector<std::uint64_t> bits;
        for (int q : sub) {
            auto it = std::find(qab.begin(), qab.end(), q);
            if (it == qab.end()) {
                throw Error(ErrorCode::kDimensionMismatch,
                            "qubit " + std::to_string(q) + " missing from the joint density matrix");
            }
            bits.push_back(std::uint64_t{1} << (qab.size() - 1 - static_cast<std::size_t>(it - qab.begin())));
        }
        return bits;
    };
    const auto bits_a = position_bits(qa);
    const auto bits_b = position_bits(qb);
    std::uint64_t seen = 0;
    for (auto b : bits_a) {
        seen |= b;
    }
    for (auto b : bits_b) {
        if (seen & b) {
            throw Error(ErrorCode::kDimensionMismatch, "subsystems overlap");
        }
    }
    const auto joint_index = [](const std::vector<std::uint64_t> &bits, std::uint64_t local) {
        std::uint64_t out = 0;
        const auto k = bits.size();
        for (std::size_t t = 0; t < k; ++t) {
            if ((local >> (k - 1 - t)) & 1) {
                out |= bits[t];
            }
        }
        return out;
    };

    const auto da = static_cast<std::uint64_t>(rho_a.side());
    const auto db = static_cast<std::uint64_t>(rho_b.side());
    std::vector<std::uint64_t> ja(da), jb(db);
    for (std::uint64_t i = 0; i < da; ++i) {
        ja[i] = joint_index(bits_a, i);
    }
    for (std::uint64_t i = 0; i < db; ++i) {
        jb[i] = joint_index(bits_b, i);
    }

    // tr[(A (x) B) R] = sum A[a,a'] B[b,b'] R[(a',b'),(a,b)].
    const auto &ma = rho_a.matrix();
    const auto &mb = rho_b.matrix();
    const auto &mr = rho_ab.matrix();
    Complex total = 0;
    for (std::uint64_t a = 0; a < da; ++a) {
        for (std::uint64_t a2 = 0; a2 < da; ++a2) {
            const Complex va = ma(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(a2));
            for (std::uint64_t b = 0; b < db; ++b) {
                for (std::uint64_t b2 = 0; b2 < db; ++b2) {
                    total += va * mb(static_cast<Eigen::Index>(b), static_cast<Eigen::Index>(b2)) *
                             mr(static_cast<Eigen::Index>(ja[a2] | jb[b2]), static_cast<Eigen::Index>(ja[a] | jb[b]));
                }
            }
        }
    }
    return checked_real(total, "tr[(rhoA x rhoB) rhoAB]");
}

double determinant(const DensityMatrix &rho) {
    return checked_real(rho.matrix().determinant(), "det(rho)");
}

}  // namespace qinv
