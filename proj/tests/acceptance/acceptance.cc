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


// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion.
//
// Usage: qinv_acceptance <path-to-qinv-binary> <work-dir>

#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>

#include "../oracle.h"
#include "qinv/invariants.h"
#include "qinv/orbit.h"
#include "qinv/pauli.h"
#include "qinv/state.h"
#include "qinv/state_file.h"

using namespace qinv;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

int failures = 0;

void run(const char *id, const char *title, const std::function<Outcome()> &check) {
    Outcome o;
    try {
        o = check();
    } catch (const std::exception &e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) {
        ++failures;
    }
    std::printf("[%s] %s %s: %s\n", o.pass ? "PASS" : "FAIL", id, title, o.detail.c_str());
    std::fflush(stdout);
}

std::string fmt(const char *f, double a, double b = 0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

double dev_of(const InvariantEntry &a, const InvariantEntry &b) {
    if (a.kind == ValueKind::kComplex) {
        return std::abs(std::abs(a.value) - std::abs(b.value));
    }
    return std::abs(a.value.real() - b.value.real());
}

// ---- 1 ------------------------------------------------------------------
Outcome pair_identity() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0;
    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t s = 0; s < 1000; ++s) {
            auto psi = random_state(n, 1'000'000 * n + s);
            for (int i = 1; i <= n; ++i) {
                for (int j = i + 1; j <= n; ++j) {
                    worst = std::max(worst, pair_identity_residual(psi, i, j));
                }
            }
        }
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return {worst < 1e-10 && secs < 30, fmt("max residual %.3g, %.2f s (limits 1e-10, 30 s)", worst, secs)};
}

// ---- 2 ------------------------------------------------------------------
Outcome lu_invariance() {
    double worst = 0;
    int checked = 0;
    for (int n = 2; n <= 5; ++n) {
        for (std::uint64_t s = 0; s < 100; ++s) {
            auto psi = random_state(n, 2'000'000 * n + s);
            std::vector<InvariantSelector> sel;
            for (int i = 1; i <= n; ++i) {
                sel.push_back(InvariantSelector::single(i));
                for (int j = i + 1; j <= n; ++j) {
                    sel.push_back(InvariantSelector::pair(i, j));
                }
            }
            std::vector<double> base;
            for (const auto &x : sel) {
                base.push_back(x.evaluate(psi).real());
            }
            for (std::uint64_t k = 0; k < 100; ++k) {
                auto image = apply_local(psi, random_lu(n, derive_seed(s * 10 + n, k), true)).state;
                for (std::size_t e = 0; e < sel.size(); ++e) {
                    worst = std::max(worst, std::abs(sel[e].evaluate(image).real() - base[e]));
                    ++checked;
                }
            }
        }
    }
    return {worst < 1e-9, fmt("max deviation %.3g over %.0f evaluations (limit 1e-9)", worst, checked)};
}

// ---- 3 ------------------------------------------------------------------
Outcome suite_values() {
    struct Case {
        const char *label;
        PureState state;
        double expected[6];
    };
    const Case cases[] = {
        {"GHZ", ghz_state(3), {1, 0.5, 0.5, 0.5, 0.25, 1}},
        {"|000>", PureState::basis(3, 0), {1, 1, 1, 1, 1, 0}},
        {"W", w_state(3), {1, 5.0 / 9, 5.0 / 9, 5.0 / 9, 2.0 / 9, 0}},
    };
    double worst = 0;
    for (const auto &c : cases) {
        auto r = sudbery_suite(c.state);
        for (int k = 1; k <= 6; ++k) {
            worst = std::max(worst, std::abs(r.real("I_" + std::to_string(k)) - c.expected[k - 1]));
        }
    }
    return {worst < 1e-10, fmt("max deviation %.3g from closed forms (limit 1e-10)", worst)};
}

// ---- 4 ------------------------------------------------------------------
Outcome tangle_vs_c_pair() {
    double worst = 0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        auto psi = random_state(3, 4'000'000 + s);
        worst = std::max(worst, std::abs(std::abs(c_pair(psi, QubitPair::kAB)) - ckw_tangle(psi)));
    }
    return {worst < 1e-9, fmt("max ||C_AB| - tau| %.3g on 1000 states (limit 1e-9)", worst)};
}

// ---- 5 ------------------------------------------------------------------
Outcome c_pair_symmetry() {
    double worst = 0;
    for (std::uint64_t s = 0; s < 1000; ++s) {
        auto psi = random_state(3, 5'000'000 + s);
        const Complex ab = c_pair(psi, QubitPair::kAB);
        const Complex ac = c_pair(psi, QubitPair::kAC);
        const Complex bc = c_pair(psi, QubitPair::kBC);
        worst = std::max({worst, std::abs(ab - ac), std::abs(ab - bc), std::abs(ac - bc)});
    }
    return {worst < 1e-10, fmt("max pairwise difference %.3g on 1000 states (limit 1e-10)", worst)};
}

// ---- 6 ------------------------------------------------------------------
Outcome i5_routes() {
    double worst = 0;
    for (std::uint64_t s = 0; s < 500; ++s) {
        auto psi = random_state(3, 6'000'000 + s);
        worst = std::max(worst, std::abs(i5(psi, I5Method::kDensity) - i5(psi, I5Method::kPauli)));
    }
    return {worst < 1e-10, fmt("max route difference %.3g on 500 states (limit 1e-10)", worst)};
}

// ---- 7 ------------------------------------------------------------------
double slocc_worst(int n, const std::function<Complex(const PureState &)> &f, std::uint64_t offset, double &max_kappa) {
    double worst = 0;
    for (std::uint64_t s = 0; s < 100; ++s) {
        auto psi = random_state(n, offset + s);
        const Complex base = f(psi);
        for (std::uint64_t k = 0; k < 50; ++k) {
            auto g = random_sl(n, derive_seed(offset + s, k));
            for (const auto &m : g.ops()) {
                max_kappa = std::max(max_kappa, condition_number(m));
            }
            const Complex v = f(apply_local(psi, g).raw);
            worst = std::max(worst, std::abs(v - base) / std::max(std::abs(base), kRelativeFloor));
        }
    }
    return worst;
}

Outcome slocc_invariance() {
    double kappa = 0;
    const double c4 = slocc_worst(4, concurrence_even, 7'000'000, kappa);
    const double z3 = slocc_worst(3, z_odd, 7'100'000, kappa);
    const double z5 = slocc_worst(5, z_odd, 7'200'000, kappa);
    const double worst = std::max({c4, z3, z5});
    char buf[200];
    std::snprintf(buf, sizeof buf, "max rel deviation C(n=4) %.3g, Z(n=3) %.3g, Z(n=5) %.3g; max kappa %.3g (limits 1e-7, 10)",
                  c4, z3, z5, kappa);
    return {worst < 1e-7 && kappa <= kSampledSlCondition, buf};
}

// ---- 8 ------------------------------------------------------------------
Outcome adjoint_orthogonality() {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> angle(0, 2 * M_PI);
    double worst_orth = 0;
    double worst_det = 0;
    for (int k = 0; k < 1000; ++k) {
        const Eigen::Matrix3d o = adjoint_rotation(euler_unitary(angle(rng), angle(rng), angle(rng)));
        worst_orth = std::max(worst_orth, (o.transpose() * o - Eigen::Matrix3d::Identity()).cwiseAbs().maxCoeff());
        worst_det = std::max(worst_det, std::abs(o.determinant() - 1));
    }
    return {worst_orth < 1e-9 && worst_det < 1e-9,
            fmt("max |O^T O - I| %.3g, max |det O - 1| %.3g (limit 1e-9)", worst_orth, worst_det)};
}

// ---- 9 ------------------------------------------------------------------
Outcome bilinear_oracle() {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> normal;
    double worst = 0;
    int cases = 0;
    for (int n = 1; n <= 6; ++n) {
        for (int t = 0; t < 50; ++t) {
            auto psi = random_state(n, 9'000'000 + 100 * n + t);
            OperatorString ops(n);
            for (auto &m : ops) {
                for (int e = 0; e < 4; ++e) {
                    m(e / 2, e % 2) = Complex(normal(rng), normal(rng));
                }
            }
            worst = std::max(worst, std::abs(bilinear(psi, ops) - oracle::bilinear(psi, ops)));
            ++cases;
        }
    }
    return {worst < 1e-12, fmt("max |kernel - dense| %.3g over %.0f cases, n <= 6 (limit 1e-12)", worst, cases)};
}

// ---- 10 -----------------------------------------------------------------
Outcome counts() {
    const auto a = invariant_count(1), b = invariant_count(2), c = invariant_count(3);
    char buf[96];
    std::snprintf(buf, sizeof buf, "n=1,2,3 -> %lld, %lld, %lld (expected 0, 1, 6)", static_cast<long long>(a),
                  static_cast<long long>(b), static_cast<long long>(c));
    return {a == 0 && b == 1 && c == 6, buf};
}

// ---- 11 -----------------------------------------------------------------
struct Shell {
    int code;
    std::string out;
};

Shell shell(const std::string &cmd) {
    Shell r{-1, {}};
    FILE *p = popen((cmd + " 2>/dev/null").c_str(), "r");
    if (!p) {
        return r;
    }
    char buf[4096];
    while (std::fgets(buf, sizeof buf, p)) {
        r.out += buf;
    }
    const int status = pclose(p);
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

std::string quote(const fs::path &p) {
    return "'" + p.string() + "'";
}

Outcome cli_round_trip(const fs::path &bin, const fs::path &dir) {
    fs::create_directories(dir);
    const auto q = quote(bin);
    const auto psi = dir / "random.json";
    const auto image = dir / "image.json";
    const auto ghz = dir / "ghz.json";
    const auto w = dir / "w.json";
    std::string trace;
    bool ok = true;
    const auto expect = [&](const char *step, const Shell &s, int code, const std::string &needle) {
        const bool good = s.code == code && s.out.find(needle) != std::string::npos;
        trace += std::string(step) + "=" + std::to_string(s.code) + (good ? " " : "! ");
        ok = ok && good;
    };

    expect("random", shell(q + " random -n 3 --seed 11 -o " + quote(psi)), 0, "");
    expect("compute", shell(q + " compute " + quote(psi)), 0, "\"I_6\"");
    write_state_file(image, apply_local(read_state_file(psi), random_lu(3, 12, true)).state);
    expect("compare-lu", shell(q + " compare " + quote(psi) + " " + quote(image)), 0, "indistinguishable");
    write_state_file(ghz, ghz_state(3));
    write_state_file(w, w_state(3));
    expect("compare-ghz-w", shell(q + " compare " + quote(ghz) + " " + quote(w)), 1, "distinguished by I_6");
    return {ok, trace};
}

}  // namespace

int main(int argc, char **argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <qinv-binary> <work-dir>\n", argv[0]);
        return 2;
    }
    const fs::path bin = argv[1];
    const fs::path dir = argv[2];

    run("AC1", "pair identity", pair_identity);
    run("AC2", "LU invariance", lu_invariance);
    run("AC3", "three-qubit suite values", suite_values);
    run("AC4", "tangle matches |C_AB|", tangle_vs_c_pair);
    run("AC5", "C_AB = C_AC = C_BC", c_pair_symmetry);
    run("AC6", "I_5 routes agree", i5_routes);
    run("AC7", "SLOCC invariance", slocc_invariance);
    run("AC8", "adjoint rotation in SO(3)", adjoint_orthogonality);
    run("AC9", "bilinear matches dense oracle", bilinear_oracle);
    run("AC10", "invariant counts", counts);
    run("AC11", "CLI round trip", [&] { return cli_round_trip(bin, dir); });

    std::printf("%d of 11 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
