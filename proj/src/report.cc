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

#include "qinv/report.h"

#include <algorithm>
#include <cstdio>
#include <cstring>

#include "json.hpp"
#include "qinv/error.h"

namespace qinv {

void InvariantReport::add(InvariantEntry entry) {
    if (find(entry.name) != nullptr) {
        throw Error(ErrorCode::kInvalidArgument, "duplicate invariant name " + entry.name);
    }
    entries_.push_back(std::move(entry));
}

void InvariantReport::add_real(std::string name, double value) {
    add({std::move(name), Complex(value, 0), ValueKind::kReal});
}

void InvariantReport::add_complex(std::string name, Complex value) {
    add({std::move(name), value, ValueKind::kComplex});
}

const InvariantEntry *InvariantReport::find(std::string_view name) const {
    auto it = std::find_if(entries_.begin(), entries_.end(), [&](const auto &e) { return e.name == name; });
    return it == entries_.end() ? nullptr : &*it;
}

Complex InvariantReport::value(std::string_view name) const {
    const auto *entry = find(name);
    if (entry == nullptr) {
        throw Error(ErrorCode::kInvalidArgument, "report has no entry named " + std::string(name));
    }
    return entry->value;
}

double InvariantReport::real(std::string_view name) const {
    return value(name).real();
}

std::string InvariantReport::to_json() const {
    nlohmann::ordered_json out;
    out["n"] = num_qubits_;
    auto &invariants = out["invariants"];
    invariants = nlohmann::ordered_json::object();
    for (const auto &e : entries_) {
        nlohmann::ordered_json item;
        if (e.kind == ValueKind::kReal) {
            item["value"] = e.value.real();
            item["kind"] = "real";
        } else {
            item["value"] = {e.value.real(), e.value.imag()};
            item["kind"] = "complex";
        }
        invariants[e.name] = std::move(item);
    }
    out["tolerances"] = nlohmann::ordered_json::object();
    for (const auto &[name, tol] : tolerances) {
        out["tolerances"][name] = tol;
    }
    auto &meta = out["metadata"];
    meta["state_digest"] = state_digest;
    if (seed) {
        meta["seed"] = *seed;
    }
    return out.dump(2) + "\n";
}

std::string InvariantReport::to_text() const {
    std::string out;
    char line[160];
    std::snprintf(line, sizeof line, "n = %d  digest = %s\n", num_qubits_, state_digest.c_str());
    out += line;
    std::snprintf(line, sizeof line, "%-12s %-8s %24s %24s\n", "name", "kind", "real", "imag");
    out += line;
    for (const auto &e : entries_) {
        if (e.kind == ValueKind::kReal) {
            std::snprintf(line, sizeof line, "%-12s %-8s %24.17g %24s\n", e.name.c_str(), "real", e.value.real(), "");
        } else {
            std::snprintf(line, sizeof line, "%-12s %-8s %24.17g %24.17g\n", e.name.c_str(), "complex",
                          e.value.real(), e.value.imag());
        }
        out += line;
    }
    return out;
}

std::string state_digest(const PureState &state) {
    std::uint64_t hash = 14695981039346656037ull;
    const auto mix = [&](const void *data, std::size_t size) {
        const auto *bytes = static_cast<const unsigned char *>(data);
        for (std::size_t i = 0; i < size; ++i) {
            hash ^= bytes[i];
            hash *= 1099511628211ull;
        }
    };
    const int n = state.num_qubits();
    mix(&n, sizeof n);
    for (const auto &a : state.amplitudes()) {
        const double parts[2] = {a.real(), a.imag()};
        mix(parts, sizeof parts);
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash));
    return buf;
}

ReportComparison compare_reports(const InvariantReport &a, const InvariantReport &b, double tolerance) {
    ReportComparison result;
    for (const auto &ea : a.entries()) {
        const auto *eb = b.find(ea.name);
        if (eb == nullptr) {
            throw Error(ErrorCode::kInvalidArgument, "reports disagree on entry " + ea.name);
        }
        const double deviation = ea.kind == ValueKind::kComplex ? std::abs(std::abs(ea.value) - std::abs(eb->value))
                                                                : std::abs(ea.value.real() - eb->value.real());
        result.max_deviation = std::max(result.max_deviation, deviation);
        if (deviation > tolerance) {
            EntryDifference diff{ea.name, ea.value, eb->value, deviation};
            // Deviations within tolerance of each other count as ties.
            if (!result.strongest || deviation > result.strongest->deviation + tolerance) {
                result.strongest = diff;
            }
            result.differences.push_back(std::move(diff));
        }
    }
    result.distinguished = !result.differences.empty();
    return result;
}

}  // namespace qinv
