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

#include "qinv/pauli.h"

#include <bit>
#include <cctype>
#include <cmath>
#include <sstream>

#include "qinv/error.h"

namespace qinv {

namespace {

constexpr double kExpectationImagTolerance = 1e-10;
constexpr double kUnitaryTolerance = 1e-10;
constexpr double kRotationImagTolerance = 1e-10;

// In place: every index pair (j, j | bit) with the qubit's bit clear in j is
// mixed by the 2x2 matrix.
void apply_in_place(std::span<Complex> amps, std::uint64_t bit, const SingleQubitOp &op) {
    const Complex m00 = op(0, 0), m01 = op(0, 1), m10 = op(1, 0), m11 = op(1, 1);
    const std::uint64_t dim = amps.size();
    for (std::uint64_t block = 0; block < dim; block += 2 * bit) {
        for (std::uint64_t j = block; j < block + bit; ++j) {
            const Complex a = amps[j];
            const Complex b = amps[j + bit];
            amps[j] = m00 * a + m01 * b;
            amps[j + bit] = m10 * a + m11 * b;
        }
    }
}

bool is_identity(const SingleQubitOp &op) {
    return op == SingleQubitOp::Identity();
}

void check_length(const PureState &state, std::size_t length, const char *what) {
    if (length != static_cast<std::size_t>(state.num_qubits())) {
        throw Error(ErrorCode::kLengthMismatch, std::string(what) + " has length " + std::to_string(length) +
                                                    " but the state has " + std::to_string(state.num_qubits()) +
                                                    " qubits");
    }
}

struct PauliMasks {
    std::uint64_t flip = 0;   // X or Y
    std::uint64_t phase = 0;  // Z or Y
    int y_count = 0;
};

PauliMasks masks_of(const PauliString &p) {
    const int n = static_cast<int>(p.size());
    PauliMasks m;
    for (int q = 1; q <= n; ++q) {
        const auto bit = qubit_bit(n, q);
        switch (p[static_cast<std::size_t>(q - 1)]) {
            case Pauli::I:
                break;
            case Pauli::X:
                m.flip |= bit;
                break;
            case Pauli::Y:
                m.flip |= bit;
                m.phase |= bit;
                ++m.y_count;
                break;
            case Pauli::Z:
                m.phase |= bit;
                break;
        }
    }
    return m;
}

// i^k for integer k.
Complex i_power(int k) {
    switch (k & 3) {
        case 0:
            return {1, 0};
        case 1:
            return {0, 1};
        case 2:
            return {-1, 0};
        default:
            return {0, -1};
    }
}

}  // namespace

char pauli_char(Pauli p) {
    return "IXYZ"[static_cast<int>(p)];
}

PauliString::PauliString(std::vector<Pauli> letters) : letters_(std::move(letters)) {
}

PauliString PauliString::parse(std::string_view text) {
    std::vector<Pauli> letters;
    letters.reserve(text.size());
    for (char c : text) {
        switch (std::toupper(static_cast<unsigned char>(c))) {
            case 'I':
            case '_':
                letters.push_back(Pauli::I);
                break;
            case 'X':
                letters.push_back(Pauli::X);
                break;
            case 'Y':
                letters.push_back(Pauli::Y);
                break;
            case 'Z':
                letters.push_back(Pauli::Z);
                break;
            default:
                throw Error(ErrorCode::kInvalidArgument, std::string("not a Pauli letter: '") + c + "'");
        }
    }
    return PauliString(std::move(letters));
}

PauliString PauliString::sparse(int num_qubits, std::initializer_list<std::pair<int, Pauli>> letters) {
    std::vector<Pauli> out(static_cast<std::size_t>(num_qubits), Pauli::I);
    for (const auto &[qubit, letter] : letters) {
        check_qubit(num_qubits, qubit);
        out[static_cast<std::size_t>(qubit - 1)] = letter;
    }
    return PauliString(std::move(out));
}

std::string PauliString::str() const {
    std::string out;
    for (auto p : letters_) {
        out.push_back(pauli_char(p));
    }
    return out;
}

SingleQubitOp pauli_matrix(Pauli p) {
    using namespace std::complex_literals;
    SingleQubitOp m;
    switch (p) {
        case Pauli::I:
            m << 1, 0, 0, 1;
            break;
        case Pauli::X:
            m << 0, 1, 1, 0;
            break;
        case Pauli::Y:
            m << 0, -1i, 1i, 0;
            break;
        case Pauli::Z:
            m << 1, 0, 0, -1;
            break;
    }
    return m;
}

SingleQubitOp spin_flip() {
    SingleQubitOp t;
    t << 0, 1, -1, 0;
    return t;
}

OperatorString operator_string(const PauliString &p) {
    OperatorString ops;
    ops.reserve(p.size());
    for (std::size_t k = 0; k < p.size(); ++k) {
        ops.push_back(pauli_matrix(p[k]));
    }
    return ops;
}

PureState apply_single_qubit(const PureState &state, int qubit, const SingleQubitOp &op) {
    const int n = state.num_qubits();
    check_qubit(n, qubit);
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    apply_in_place(amps, qubit_bit(n, qubit), op);
    return PureState(n, std::move(amps), Normalization::kRaw);
}

PureState apply_string(const PureState &state, const OperatorString &ops) {
    const int n = state.num_qubits();
    check_length(state, ops.size(), "operator string");
    std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    for (int q = 1; q <= n; ++q) {
        const auto &op = ops[static_cast<std::size_t>(q - 1)];
        if (!is_identity(op)) {
            apply_in_place(amps, qubit_bit(n, q), op);
        }
    }
    return PureState(n, std::move(amps), Normalization::kRaw);
}

PureState apply_pauli(const PureState &state, const PauliString &p) {
    check_length(state, p.size(), "Pauli string");
    const auto m = masks_of(p);
    const Complex global = i_power(m.y_count);
    // P|b> = i^y (-1)^{popcount(b & phase)} |b ^ flip>.
    std::vector<Complex> out(state.dim());
    for (std::uint64_t b = 0; b < state.dim(); ++b) {
        const Complex v = (std::popcount(b & m.phase) & 1) ? -state[b] : state[b];
        out[b ^ m.flip] = global * v;
    }
    return PureState(state.num_qubits(), std::move(out), Normalization::kRaw);
}

double expectation(const PureState &state, const PauliString &p) {
    check_length(state, p.size(), "Pauli string");
    state.require_normalized("expectation");
    const auto m = masks_of(p);
    Complex total = 0;
    for (std::uint64_t b = 0; b < state.dim(); ++b) {
        const Complex term = std::conj(state[b ^ m.flip]) * state[b];
        total += (std::popcount(b & m.phase) & 1) ? -term : term;
    }
    total *= i_power(m.y_count);
    if (std::abs(total.imag()) > kExpectationImagTolerance) {
        std::ostringstream ss;
        ss << "<" << p.str() << "> has imaginary part " << total.imag();
        throw Error(ErrorCode::kHermitianViolation, ss.str());
    }
    return total.real();
}

Complex bilinear(const PureState &state, const OperatorString &ops) {
    check_length(state, ops.size(), "operator string");
    // M psi*, then contract with conj(psi).
    const auto image = apply_string(conjugate(state), ops);
    Complex total = 0;
    for (std::uint64_t b = 0; b < state.dim(); ++b) {
        total += std::conj(state[b]) * image[b];
    }
    return total;
}

double unitarity_defect(const SingleQubitOp &u) {
    return (u.adjoint() * u - SingleQubitOp::Identity()).cwiseAbs().maxCoeff();
}

Eigen::Matrix3d adjoint_rotation(const SingleQubitOp &u) {
    if (!u.allFinite() || unitarity_defect(u) > kUnitaryTolerance) {
        throw Error(ErrorCode::kNotUnitary, "adjoint rotation needs a unitary operator");
    }
    static const std::array<SingleQubitOp, 3> sigma = {pauli_matrix(Pauli::X), pauli_matrix(Pauli::Y),
                                                      pauli_matrix(Pauli::Z)};
    Eigen::Matrix3d o;
    for (int i = 0; i < 3; ++i) {
        const SingleQubitOp conjugated = u.adjoint() * sigma[static_cast<std::size_t>(i)] * u;
        for (int j = 0; j < 3; ++j) {
            const Complex c = 0.5 * (sigma[static_cast<std::size_t>(j)] * conjugated).trace();
            if (std::abs(c.imag()) > kRotationImagTolerance) {
                throw Error(ErrorCode::kNotUnitary, "conjugated Pauli has a non-real expansion coefficient");
            }
            o(i, j) = c.real();
        }
    }
    return o;
}

}  // namespace qinv
