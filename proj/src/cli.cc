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

#include "qinv/cli.h"

#include <cstdio>
#include <fstream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "qinv/error.h"
#include "qinv/invariants.h"
#include "qinv/orbit.h"
#include "qinv/state_file.h"

namespace qinv::cli {

namespace {

constexpr double kDefaultLuTolerance = 1e-9;
constexpr double kDefaultSlTolerance = 1e-7;
constexpr double kDefaultCompareTolerance = 1e-9;

struct Options {
    std::vector<std::string> state_paths;
    std::string compute_format;
    std::string verify_format;
    bool normalize = false;
    std::string group = "lu";
    int samples = 100;
    std::optional<double> tol;
    std::uint64_t seed = 0;
    int qubits = 0;
    std::string out_path;
};

// Maps library errors raised while loading or evaluating to exit codes.
int exit_code_for(const Error &e) {
    switch (e.code()) {
        case ErrorCode::kUnnormalized:
            return kUnnormalized;
        case ErrorCode::kIoError:
            return kUnwritable;
        case ErrorCode::kInternalDisagreement:
            return kFailed;
        default:
            return kParseError;
    }
}

PureState load(const std::string &path, bool normalize) {
    return read_state_file(path, normalize ? Normalization::kAuto : Normalization::kStrict);
}

std::string fmt17(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string describe(Complex v, bool is_complex) {
    if (!is_complex) {
        return fmt17(v.real());
    }
    return "(" + fmt17(v.real()) + ", " + fmt17(v.imag()) + ")";
}

int cmd_compute(const Options &opt, std::ostream &out) {
    const auto state = load(opt.state_paths.front(), opt.normalize);
    const auto report = invariant_report(state);
    out << (opt.compute_format == "text" ? report.to_text() : report.to_json());
    return kOk;
}

int cmd_verify(const Options &opt, std::ostream &out, std::ostream &err) {
    const auto state = load(opt.state_paths.front(), opt.normalize);
    const auto group = opt.group == "sl" ? GroupKind::kSL : GroupKind::kLU;
    const double tol = opt.tol.value_or(group == GroupKind::kLU ? kDefaultLuTolerance : kDefaultSlTolerance);
    const int n = state.num_qubits();

    std::vector<VerificationReport> reports;
    for (const auto &selector : applicable_invariants(n)) {
        if (group == GroupKind::kSL && !selector.slocc_invariant()) {
            continue;
        }
        reports.push_back(verify_invariance(state, selector, group, opt.samples, tol, opt.seed));
    }

    const VerificationReport *worst = nullptr;
    const auto metric = [](const VerificationReport &r) {
        return r.group == GroupKind::kLU ? r.max_abs_deviation : r.max_rel_deviation;
    };
    for (const auto &r : reports) {
        if (!r.pass && (worst == nullptr || metric(r) > metric(*worst))) {
            worst = &r;
        }
    }

    if (opt.verify_format == "json") {
        nlohmann::ordered_json doc = nlohmann::ordered_json::array();
        for (const auto &r : reports) {
            nlohmann::ordered_json item;
            item["invariant"] = r.invariant;
            item["group"] = group_name(r.group);
            item["samples"] = r.samples;
            item["max_abs_deviation"] = r.max_abs_deviation;
            item["max_rel_deviation"] = r.max_rel_deviation;
            item["seed"] = r.seed;
            item["tolerance"] = r.tolerance;
            item["pass"] = r.pass;
            doc.push_back(std::move(item));
        }
        out << doc.dump(2) << "\n";
    } else {
        char line[200];
        std::snprintf(line, sizeof line, "%-10s %-5s %8s %24s %24s %10s %s\n", "invariant", "group", "samples",
                      "max_abs_deviation", "max_rel_deviation", "tolerance", "result");
        out << line;
        for (const auto &r : reports) {
            std::snprintf(line, sizeof line, "%-10s %-5s %8d %24.17g %24.17g %10.3g %s\n", r.invariant.c_str(),
                          group_name(r.group).c_str(), r.samples, r.max_abs_deviation, r.max_rel_deviation,
                          r.tolerance, r.pass ? "PASS" : "FAIL");
            out << line;
        }
    }
    if (worst != nullptr) {
        err << "invariance check failed; worst offender " << worst->invariant << " with deviation "
            << fmt17(metric(*worst)) << " against tolerance " << fmt17(worst->tolerance) << "\n";
        return kFailed;
    }
    return kOk;
}

int cmd_compare(const Options &opt, std::ostream &out, std::ostream &err) {
    const auto a = load(opt.state_paths[0], opt.normalize);
    const auto b = load(opt.state_paths[1], opt.normalize);
    if (a.num_qubits() != b.num_qubits()) {
        err << "qubit-count mismatch: " << a.num_qubits() << " vs " << b.num_qubits() << "\n";
        return kQubitMismatch;
    }
    const double tol = opt.tol.value_or(kDefaultCompareTolerance);
    const auto ra = invariant_report(a);
    const auto rb = invariant_report(b);
    const auto cmp = compare_reports(ra, rb, tol);
    if (!cmp.distinguished) {
        out << "indistinguishable by computed invariants (max deviation " << fmt17(cmp.max_deviation) << ", "
            << ra.entries().size() << " invariants, tolerance " << fmt17(tol) << ")\n";
        return kOk;
    }
    const auto &s = *cmp.strongest;
    const bool is_complex = ra.find(s.name)->kind == ValueKind::kComplex;
    out << "distinguished by " << s.name << " (" << describe(s.a, is_complex) << " vs " << describe(s.b, is_complex)
        << ")\n";
    for (const auto &d : cmp.differences) {
        const bool c = ra.find(d.name)->kind == ValueKind::kComplex;
        out << "  " << d.name << " = " << describe(d.a, c) << " vs " << describe(d.b, c) << " (deviation "
            << fmt17(d.deviation) << ")\n";
    }
    return kFailed;
}

int cmd_random(const Options &opt, std::ostream &out) {
    const auto state = random_state(opt.qubits, opt.seed);
    if (opt.out_path.empty()) {
        out << serialize_state(state);
    } else {
        write_state_file(opt.out_path, state);
    }
    return kOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Local-unitary and SLOCC invariants of multi-qubit pure states", "qinv"};
    app.require_subcommand(1);
    Options opt;

    auto *compute = app.add_subcommand("compute", "Compute every applicable invariant of a state file");
    compute->add_option("-s,--state,state", opt.state_paths, "State file")->required()->expected(1);
    compute->add_option("--format", opt.compute_format, "Report format")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_val("json");
    compute->add_flag("--normalize", opt.normalize, "Rescale unnormalized input instead of rejecting it");

    auto *verify = app.add_subcommand("verify", "Check invariance over random local-operator orbits");
    verify->add_option("-s,--state,state", opt.state_paths, "State file")->required()->expected(1);
    verify->add_option("--group", opt.group, "lu (local unitaries) or sl (determinant-one local operators)")
        ->check(CLI::IsMember({"lu", "sl"}))
        ->default_val("lu");
    verify->add_option("--samples", opt.samples, "Orbit samples per invariant")
        ->check(CLI::NonNegativeNumber)
        ->default_val(100);
    verify->add_option("--tol", opt.tol, "Tolerance (default 1e-9 for lu, 1e-7 relative for sl)");
    verify->add_option("--seed", opt.seed, "Sampling seed")->envname("QINV_SEED")->default_val(0);
    verify->add_option("--format", opt.verify_format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->default_val("text");
    verify->add_flag("--normalize", opt.normalize, "Rescale unnormalized input instead of rejecting it");

    auto *compare = app.add_subcommand("compare", "Compare the invariant fingerprints of two states");
    compare->add_option("-s,--state,states", opt.state_paths, "Two state files")->required()->expected(2);
    compare->add_option("--tol", opt.tol, "Absolute tolerance per invariant (default 1e-9)");
    compare->add_flag("--normalize", opt.normalize, "Rescale unnormalized input instead of rejecting it");

    auto *random = app.add_subcommand("random", "Write a reproducible random normalized state");
    random->add_option("-n,--qubits,qubits", opt.qubits, "Number of qubits")->required();
    random->add_option("--seed", opt.seed, "Generator seed")->envname("QINV_SEED")->default_val(0);
    random->add_option("-o,--out", opt.out_path, "Output path (default: stdout)");

    std::vector<const char *> argv;
    for (const auto &a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError &e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }

    try {
        if (*compute) {
            return cmd_compute(opt, out);
        }
        if (*verify) {
            return cmd_verify(opt, out, err);
        }
        if (*compare) {
            return cmd_compare(opt, out, err);
        }
        return cmd_random(opt, out);
    } catch (const Error &e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
}

}  // namespace qinv::cli
