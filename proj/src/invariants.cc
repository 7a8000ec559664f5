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

#include "qinv/invariants.h"

#include <array>
#include <cmath>
#include <sstream>

#include "qinv/error.h"

namespace qinv {

namespace {

constexpr std::array<Pauli, 3> kAxes = {Pauli::X, Pauli::Y, Pauli::Z};

void check_pair(const PureState &state, int i, int j) {
    check_qubit(state.num_qubits(), i);
    check_qubit(state.num_qubits(), j);
    if (i == j) {
        throw Error(ErrorCode::kSameIndex, "pair invariant needs two distinct qubits, got " + std::to_string(i) +
                                               " twice");
    }
}

void require_three_qubits(const PureState &state, const char *what) {
    if (state.num_qubits() != 3) {
        throw Error(ErrorCode::kWrongQubitCount,
                    std::string(what) + " needs 3 qubits, got " + std::to_string(state.num_qubits()));
    }
}

std::array<double, 3> bloch_vector(const PureState &state, int qubit) {
    const int n = state.num_qubits();
    std::array<double, 3> r{};
    for (std::size_t a = 0; a < 3; ++a) {
        r[a] = expectation(state, PauliString::sparse(n, {{qubit, kAxes[a]}}));
    }
    return r;
}

// <s_ia s_jb> in (a, b) lexicographic order x, y, z.
std::array<double, 9> correlators(const PureState &state, int i, int j) {
    const int n = state.num_qubits();
    std::array<double, 9> c{};
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            c[3 * a + b] = expectation(state, PauliString::sparse(n, {{i, kAxes[a]}, {j, kAxes[b]}}));
        }
    }
    return c;
}

double squared_sum(std::span<const double> values) {
    double total = 0;
    for (double v : values) {
        total += v * v;
    }
    return total;
}

// b_x^2 + b_z^2 - b_0^2 with `ops` fixed except at `slot`.
Complex three_slot_form(const PureState &state, OperatorString ops, int slot) {
    const auto k = static_cast<std::size_t>(slot - 1);
    ops[k] = pauli_matrix(Pauli::X);
    const Complex bx = bilinear(state, ops);
    ops[k] = pauli_matrix(Pauli::Z);
    const Complex bz = bilinear(state, ops);
    ops[k] = SingleQubitOp::Identity();
    const Complex b0 = bilinear(state, ops);
    return bx * bx + bz * bz - b0 * b0;
}

void check_agreement(double a, double b, double tolerance, const std::string &what) {
    if (!(std::abs(a - b) <= tolerance)) {
        std::ostringstream ss;
        ss.precision(17);
        ss << what << ": " << a << " vs " << b;
        throw Error(ErrorCode::kInternalDisagreement, ss.str());
    }
}

}  // namespace

double inv_single(const PureState &state, int qubit) {
    check_qubit(state.num_qubits(), qubit);
    state.require_normalized("inv_single");
    const auto r = bloch_vector(state, qubit);
    return 1 - squared_sum(r);
}

double inv_single_dm(const PureState &state, int qubit) {
    check_qubit(state.num_qubits(), qubit);
    state.require_normalized("inv_single_dm");
    const auto rho = partial_trace(state, {qubit});
    const double from_purity = 2 * (1 - purity(rho));
    const double from_det = 4 * determinant(rho);
    const double from_pauli = inv_single(state, qubit);
    check_agreement(from_purity, from_det, kAgreementTolerance, "2(1 - tr rho^2) vs 4 det rho");
    check_agreement(from_purity, from_pauli, kAgreementTolerance, "2(1 - tr rho^2) vs Pauli form");
    return from_purity;
}

double inv_pair(const PureState &state, int i, int j) {
    check_pair(state, i, j);
    state.require_normalized("inv_pair");
    const auto c = correlators(state, i, j);
    return 1 - squared_sum(c);
}

double pair_identity_residual(const PureState &state, int i, int j) {
    check_pair(state, i, j);
    state.require_normalized("pair_identity_residual");
    const double lhs = inv_single(state, i) + inv_single(state, j) + inv_pair(state, i, j);
    return lhs - 4 * (1 - purity(partial_trace(state, {i, j})));
}

Complex concurrence_even(const PureState &state) {
    const int n = state.num_qubits();
    if (n % 2 != 0) {
        throw Error(ErrorCode::kOddQubitCount, "concurrence_even needs an even qubit count, got " + std::to_string(n));
    }
    return bilinear(state, OperatorString(static_cast<std::size_t>(n), spin_flip()));
}

Complex z_odd(const PureState &state) {
    const int n = state.num_qubits();
    if (n % 2 == 0) {
        throw Error(ErrorCode::kEvenQubitCount, "z_odd needs an odd qubit count, got " + std::to_string(n));
    }
    return three_slot_form(state, OperatorString(static_cast<std::size_t>(n), spin_flip()), n);
}

double delta_ab(const PureState &state, int i, int j) {
    check_pair(state, i, j);
    state.require_normalized("delta_ab");
    const auto ri = bloch_vector(state, i);
    const auto rj = bloch_vector(state, j);
    const auto c = correlators(state, i, j);
    double total = 0;
    for (std::size_t a = 0; a < 3; ++a) {
        for (std::size_t b = 0; b < 3; ++b) {
            total += ri[a] * rj[b] * c[3 * a + b];
        }
    }
    return total;
}

double i5(const PureState &state, I5Method method) {
    require_three_qubits(state, "i5");
    state.require_normalized("i5");
    if (method == I5Method::kPauli) {
        return 0.25 * (1 + 3 * delta_ab(state, 1, 2));
    }
    const auto rho_a = partial_trace(state, {1});
    const auto rho_b = partial_trace(state, {2});
    const auto rho_ab = partial_trace(state, {1, 2});
    return 3 * cross_term(rho_a, rho_b, rho_ab) - trace_power(rho_a, 3) - trace_power(rho_b, 3);
}

std::string qubit_pair_name(QubitPair pair) {
    switch (pair) {
        case QubitPair::kAB:
            return "AB";
        case QubitPair::kAC:
            return "AC";
        case QubitPair::kBC:
            return "BC";
    }
    return "?";
}

Complex c_pair(const PureState &state, QubitPair pair) {
    require_three_qubits(state, "c_pair");
    const SingleQubitOp sy = pauli_matrix(Pauli::Y);
    OperatorString ops(3, sy);
    const int slot = pair == QubitPair::kAB ? 3 : pair == QubitPair::kAC ? 2 : 1;
    return three_slot_form(state, std::move(ops), slot);
}

double ckw_tangle(const PureState &state) {
    require_three_qubits(state, "ckw_tangle");
    // a[ijk] with qubit 1 as the most significant bit.
    const auto a = [&](int i, int j, int k) { return state[static_cast<std::size_t>(4 * i + 2 * j + k)]; };
    const Complex d1 = a(0, 0, 0) * a(0, 0, 0) * a(1, 1, 1) * a(1, 1, 1) +
                       a(0, 0, 1) * a(0, 0, 1) * a(1, 1, 0) * a(1, 1, 0) +
                       a(0, 1, 0) * a(0, 1, 0) * a(1, 0, 1) * a(1, 0, 1) +
                       a(1, 0, 0) * a(1, 0, 0) * a(0, 1, 1) * a(0, 1, 1);
    const Complex p0 = a(0, 0, 0) * a(1, 1, 1);
    const Complex p1 = a(0, 1, 1) * a(1, 0, 0);
    const Complex p2 = a(1, 0, 1) * a(0, 1, 0);
    const Complex p3 = a(1, 1, 0) * a(0, 0, 1);
    const Complex d2 = p0 * p1 + p0 * p2 + p0 * p3 + p1 * p2 + p1 * p3 + p2 * p3;
    const Complex d3 = a(0, 0, 0) * a(1, 1, 0) * a(1, 0, 1) * a(0, 1, 1) +
                       a(1, 1, 1) * a(0, 0, 1) * a(0, 1, 0) * a(1, 0, 0);
    return 4 * std::abs(d1 - 2.0 * d2 + 4.0 * d3);
}

InvariantReport sudbery_suite(const PureState &state) {
    require_three_qubits(state, "sudbery_suite");
    state.require_normalized("sudbery_suite");

    InvariantReport report(3);
    report.tolerances["pauli_vs_density"] = kAgreementTolerance;
    report.tolerances["tangle_vs_c_pair"] = kTangleAgreementTolerance;
    report.state_digest = state_digest(state);

    report.add_real("I_1", state.norm_squared());
    // I_2, I_3, I_4 are the purities of C, B, A in that order.
    for (int qubit : {3, 2, 1}) {
        const double from_density = purity(partial_trace(state, {qubit}));
        const double from_pauli = 0.5 * (state.norm_squared() + squared_sum(bloch_vector(state, qubit)));
        check_agreement(from_density, from_pauli, kAgreementTolerance,
                        "purity of qubit " + std::to_string(qubit) + " (density vs Pauli)");
        report.add_real("I_" + std::to_string(5 - qubit), from_density);
    }
    const double i5_density = i5(state, I5Method::kDensity);
    check_agreement(i5_density, i5(state, I5Method::kPauli), kAgreementTolerance, "I_5 (density vs Pauli)");
    report.add_real("I_5", i5_density);

    const double tangle = ckw_tangle(state);
    check_agreement(tangle, std::abs(c_pair(state, QubitPair::kAB)), kTangleAgreementTolerance,
                    "I_6 (tangle vs |C_AB|)");
    report.add_real("I_6", tangle);
    return report;
}

std::int64_t invariant_count(int num_qubits) {
    if (num_qubits < 1 || num_qubits > 61) {
        throw Error(ErrorCode::kInvalidArgument, "invariant_count needs 1 <= n <= 61");
    }
    return (std::int64_t{1} << (num_qubits + 1)) - (3 * std::int64_t{num_qubits} + 1);
}

InvariantSelector InvariantSelector::single(int qubit) {
    return {InvariantFamily::kSingle, qubit, 0, QubitPair::kAB};
}

InvariantSelector InvariantSelector::pair(int i, int j) {
    return {InvariantFamily::kPair, i, j, QubitPair::kAB};
}

InvariantSelector InvariantSelector::concurrence() {
    return {InvariantFamily::kConcurrence, 0, 0, QubitPair::kAB};
}

InvariantSelector InvariantSelector::z() {
    return {InvariantFamily::kZ, 0, 0, QubitPair::kAB};
}

InvariantSelector InvariantSelector::sudbery(int k) {
    if (k < 1 || k > 6) {
        throw Error(ErrorCode::kInvalidArgument, "suite entries are numbered 1..6");
    }
    return {InvariantFamily::kSudbery, k, 0, QubitPair::kAB};
}

InvariantSelector InvariantSelector::c_pair(QubitPair pair) {
    return {InvariantFamily::kCPair, 0, 0, pair};
}

InvariantSelector InvariantSelector::tangle() {
    return {InvariantFamily::kTangle, 0, 0, QubitPair::kAB};
}

std::string InvariantSelector::name(int num_qubits) const {
    switch (family_) {
        case InvariantFamily::kSingle:
            return "I_{" + std::to_string(a_) + "}";
        case InvariantFamily::kPair:
            return "I_{" + std::to_string(a_) + (num_qubits > 9 ? "," : "") + std::to_string(b_) + "}";
        case InvariantFamily::kConcurrence:
            return "C";
        case InvariantFamily::kZ:
            return "Z";
        case InvariantFamily::kSudbery:
            return "I_" + std::to_string(a_);
        case InvariantFamily::kCPair:
            return "C_" + qubit_pair_name(pair_);
        case InvariantFamily::kTangle:
            return "tau_ABC";
    }
    return "?";
}

bool InvariantSelector::is_complex() const noexcept {
    return family_ == InvariantFamily::kConcurrence || family_ == InvariantFamily::kZ ||
           family_ == InvariantFamily::kCPair;
}

bool InvariantSelector::slocc_invariant() const noexcept {
    return is_complex() || family_ == InvariantFamily::kTangle ||
           (family_ == InvariantFamily::kSudbery && a_ == 6);
}

bool InvariantSelector::applicable(int n) const noexcept {
    switch (family_) {
        case InvariantFamily::kSingle:
            return a_ >= 1 && a_ <= n;
        case InvariantFamily::kPair:
            return a_ >= 1 && a_ <= n && b_ >= 1 && b_ <= n && a_ != b_;
        case InvariantFamily::kConcurrence:
            return n % 2 == 0;
        case InvariantFamily::kZ:
            return n % 2 == 1;
        case InvariantFamily::kSudbery:
        case InvariantFamily::kCPair:
        case InvariantFamily::kTangle:
            return n == 3;
    }
    return false;
}

Complex InvariantSelector::evaluate(const PureState &state) const {
    if (!applicable(state.num_qubits())) {
        throw Error(ErrorCode::kInvariantNotApplicable,
                    name(state.num_qubits()) + " does not apply to " + std::to_string(state.num_qubits()) + " qubits");
    }
    switch (family_) {
        case InvariantFamily::kSingle:
            return inv_single(state, a_);
        case InvariantFamily::kPair:
            return inv_pair(state, a_, b_);
        case InvariantFamily::kConcurrence:
            return concurrence_even(state);
        case InvariantFamily::kZ:
            return z_odd(state);
        case InvariantFamily::kSudbery:
            if (a_ == 6) {
                // Polynomial, so it is also evaluated on unnormalized SLOCC images.
                return ckw_tangle(state);
            }
            return sudbery_suite(state).value("I_" + std::to_string(a_));
        case InvariantFamily::kCPair:
            return qinv::c_pair(state, pair_);
        case InvariantFamily::kTangle:
            return ckw_tangle(state);
    }
    return {};
}

std::vector<InvariantSelector> applicable_invariants(int n) {
    std::vector<InvariantSelector> out;
    if (n == 3) {
        for (int k = 1; k <= 6; ++k) {
            out.push_back(InvariantSelector::sudbery(k));
        }
    }
    for (int i = 1; i <= n; ++i) {
        out.push_back(InvariantSelector::single(i));
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            out.push_back(InvariantSelector::pair(i, j));
        }
    }
    out.push_back(n % 2 == 0 ? InvariantSelector::concurrence() : InvariantSelector::z());
    if (n == 3) {
        for (auto p : {QubitPair::kAB, QubitPair::kAC, QubitPair::kBC}) {
            out.push_back(InvariantSelector::c_pair(p));
        }
    }
    return out;
}

InvariantReport invariant_report(const PureState &state) {
    state.require_normalized("invariant_report");
    const int n = state.num_qubits();
    InvariantReport report(n);
    report.state_digest = state_digest(state);
    report.tolerances["normalization"] = kNormTolerance;
    if (n == 3) {
        const auto suite = sudbery_suite(state);
        for (const auto &[name, tol] : suite.tolerances) {
            report.tolerances[name] = tol;
        }
        for (const auto &entry : suite.entries()) {
            report.add_real(entry.name, entry.value.real());
        }
    }
    for (const auto &selector : applicable_invariants(n)) {
        if (selector.family() == InvariantFamily::kSudbery) {
            continue;
        }
        const Complex value = selector.evaluate(state);
        if (selector.is_complex()) {
            report.add_complex(selector.name(n), value);
        } else {
            report.add_real(selector.name(n), value.real());
        }
    }
    return report;
}

}  // namespace qinv
