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

#include "qinv/orbit.h"

#include <cmath>
#include <numbers>
#include <random>
#include <sstream>

#include "qinv/error.h"

namespace qinv {

namespace {

constexpr int kMaxSlRetries = 10000;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

void check_factor(const SingleQubitOp &m, GroupKind kind, int qubit) {
    std::ostringstream ss;
    if (!m.allFinite()) {
        ss << "factor on qubit " << qubit << " has non-finite entries";
        throw Error(ErrorCode::kInvalidArgument, ss.str());
    }
    if (kind == GroupKind::kLU) {
        if (unitarity_defect(m) > kGroupTolerance) {
            ss << "LU factor on qubit " << qubit << " is not unitary";
            throw Error(ErrorCode::kNotUnitary, ss.str());
        }
        return;
    }
    if (std::abs(m.determinant() - Complex(1)) > kGroupTolerance) {
        ss << "SL factor on qubit " << qubit << " has determinant " << m.determinant();
        throw Error(ErrorCode::kInvalidArgument, ss.str());
    }
    if (condition_number(m) > kMaxSlCondition) {
        ss << "SL factor on qubit " << qubit << " has condition number above " << kMaxSlCondition;
        throw Error(ErrorCode::kConditioningFailure, ss.str());
    }
}

// exp(X) for traceless X, using X^2 = -det(X) I.
SingleQubitOp exp_traceless(const SingleQubitOp &x) {
    const Complex s = std::sqrt(-x.determinant());
    Complex sinh_over_s;
    if (std::abs(s) < 1e-4) {
        const Complex s2 = s * s;
        sinh_over_s = 1.0 + s2 / 6.0 + s2 * s2 / 120.0;
    } else {
        sinh_over_s = std::sinh(s) / s;
    }
    return std::cosh(s) * SingleQubitOp::Identity() + sinh_over_s * x;
}

}  // namespace

std::string group_name(GroupKind kind) {
    return kind == GroupKind::kLU ? "lu" : "sl";
}

LocalOperator::LocalOperator(OperatorString ops, GroupKind kind) : ops_(std::move(ops)), kind_(kind) {
    if (ops_.empty()) {
        throw Error(ErrorCode::kInvalidArgument, "local operator needs at least one factor");
    }
    for (std::size_t k = 0; k < ops_.size(); ++k) {
        check_factor(ops_[k], kind_, static_cast<int>(k + 1));
    }
}

LocalOperator LocalOperator::identity(int num_qubits, GroupKind kind) {
    return LocalOperator(OperatorString(static_cast<std::size_t>(num_qubits), SingleQubitOp::Identity()), kind);
}

LocalOperator compose(const LocalOperator &h, const LocalOperator &g) {
    if (h.num_qubits() != g.num_qubits()) {
        throw Error(ErrorCode::kLengthMismatch, "composing local operators of different sizes");
    }
    OperatorString ops;
    ops.reserve(h.ops().size());
    for (std::size_t k = 0; k < h.ops().size(); ++k) {
        ops.push_back(h.ops()[k] * g.ops()[k]);
    }
    const auto kind = h.kind() == GroupKind::kSL || g.kind() == GroupKind::kSL ? GroupKind::kSL : GroupKind::kLU;
    return LocalOperator(std::move(ops), kind);
}

SingleQubitOp euler_unitary(double alpha, double omega, double beta) {
    using namespace std::complex_literals;
    const auto phase = [](double angle) {
        SingleQubitOp m;
        m << std::exp(1i * angle), 0, 0, std::exp(-1i * angle);
        return m;
    };
    SingleQubitOp rotation;
    rotation << std::cos(omega), std::sin(omega), -std::sin(omega), std::cos(omega);
    return phase(alpha) * rotation * phase(beta);
}

double condition_number(const SingleQubitOp &m) {
    Eigen::JacobiSVD<SingleQubitOp> svd(m);
    const auto &sv = svd.singularValues();
    return sv(1) == 0 ? std::numeric_limits<double>::infinity() : sv(0) / sv(1);
}

PureState random_state(int num_qubits, std::uint64_t seed) {
    if (num_qubits > kMaxQubits) {
        throw Error(ErrorCode::kTooLarge, "qubit count " + std::to_string(num_qubits) + " exceeds the limit of " +
                                              std::to_string(kMaxQubits));
    }
    if (num_qubits < 1) {
        throw Error(ErrorCode::kInvalidArgument, "qubit count must be at least 1");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    std::vector<Complex> amps(std::size_t{1} << num_qubits);
    for (auto &a : amps) {
        const double re = gauss(rng);
        const double im = gauss(rng);
        a = {re, im};
    }
    return PureState(num_qubits, std::move(amps), Normalization::kAuto);
}

LocalOperator random_lu(int num_qubits, std::uint64_t seed, bool global_phase) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> full_turn(0, 2 * std::numbers::pi);
    std::uniform_real_distribution<double> half_turn(0, std::numbers::pi);
    OperatorString ops;
    for (int q = 0; q < num_qubits; ++q) {
        const double alpha = full_turn(rng);
        const double omega = half_turn(rng);
        const double beta = full_turn(rng);
        SingleQubitOp u = euler_unitary(alpha, omega, beta);
        if (global_phase) {
            u *= std::polar(1.0, full_turn(rng));
        }
        ops.push_back(u);
    }
    return LocalOperator(std::move(ops), GroupKind::kLU);
}

LocalOperator random_sl(int num_qubits, std::uint64_t seed, double spread) {
    if (!(spread > 0)) {
        throw Error(ErrorCode::kInvalidArgument, "spread must be positive");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss;
    OperatorString ops;
    for (int q = 0; q < num_qubits; ++q) {
        bool accepted = false;
        for (int attempt = 0; attempt < kMaxSlRetries && !accepted; ++attempt) {
            SingleQubitOp x;
            for (int k = 0; k < 4; ++k) {
                const double re = gauss(rng);
                const double im = gauss(rng);
                x(k / 2, k % 2) = spread * Complex(re, im);
            }
            x -= (0.5 * x.trace()) * SingleQubitOp::Identity();
            SingleQubitOp m = exp_traceless(x);
            m /= std::sqrt(m.determinant());
            if (m.allFinite() && condition_number(m) <= kSampledSlCondition) {
                ops.push_back(m);
                accepted = true;
            }
        }
        if (!accepted) {
            throw Error(ErrorCode::kConditioningFailure,
                        "no SL sample with condition number <= 10 for qubit " + std::to_string(q + 1));
        }
    }
    return LocalOperator(std::move(ops), GroupKind::kSL);
}

LocalImage apply_local(const PureState &state, const LocalOperator &g) {
    if (g.num_qubits() != state.num_qubits()) {
        throw Error(ErrorCode::kLengthMismatch, "local operator has " + std::to_string(g.num_qubits()) +
                                                    " factors but the state has " +
                                                    std::to_string(state.num_qubits()) + " qubits");
    }
    PureState raw = apply_string(state, g.ops());
    PureState unit = raw.normalized();
    const double norm = std::sqrt(raw.norm_squared());
    return {std::move(raw), std::move(unit), norm};
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ (index * 0xd1b54a32d192ed03ull));
}

VerificationReport verify_invariance(const PureState &state, const InvariantSelector &invariant, GroupKind group,
                                     int samples, double tolerance, std::uint64_t seed) {
    const int n = state.num_qubits();
    if (!invariant.applicable(n)) {
        throw Error(ErrorCode::kInvariantNotApplicable,
                    invariant.name(n) + " does not apply to " + std::to_string(n) + " qubits");
    }
    if (group == GroupKind::kSL && !invariant.slocc_invariant()) {
        throw Error(ErrorCode::kInvariantNotApplicable, invariant.name(n) + " is not an SLOCC invariant");
    }
    if (samples < 0) {
        throw Error(ErrorCode::kInvalidArgument, "sample count must be non-negative");
    }
    state.require_normalized("verify_invariance");

    VerificationReport report;
    report.invariant = invariant.name(n);
    report.group = group;
    report.samples = samples;
    report.seed = seed;
    report.tolerance = tolerance;
    report.base_value = invariant.evaluate(state);

    const bool by_modulus = group == GroupKind::kLU && invariant.is_complex();
    const double scale = std::max(std::abs(report.base_value), kRelativeFloor);
    for (int i = 0; i < samples; ++i) {
        const auto sub_seed = derive_seed(seed, static_cast<std::uint64_t>(i));
        const auto g = group == GroupKind::kLU ? random_lu(n, sub_seed, true) : random_sl(n, sub_seed);
        const auto image = apply_local(state, g);
        const Complex value = invariant.evaluate(group == GroupKind::kLU ? image.state : image.raw);
        const double deviation = by_modulus ? std::abs(std::abs(value) - std::abs(report.base_value))
                                            : std::abs(value - report.base_value);
        report.max_abs_deviation = std::max(report.max_abs_deviation, deviation);
        report.max_rel_deviation = std::max(report.max_rel_deviation, deviation / scale);
    }
    const double metric = group == GroupKind::kLU ? report.max_abs_deviation : report.max_rel_deviation;
    report.pass = metric < tolerance;
    return report;
}

}  // namespace qinv
