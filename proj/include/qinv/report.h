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
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qinv/state.h"

namespace qinv {

enum class ValueKind { kReal, kComplex };

struct InvariantEntry {
    std::string name;
    Complex value;
    ValueKind kind = ValueKind::kReal;
};

/// Named invariant values in insertion order, plus the tolerances used to
/// produce them and enough metadata to trace the input.
class InvariantReport {
   public:
    explicit InvariantReport(int num_qubits) : num_qubits_(num_qubits) {
    }

    /// Throws InvalidArgument on a duplicate name.
    void add_real(std::string name, double value);
    void add_complex(std::string name, Complex value);

    int num_qubits() const noexcept {
        return num_qubits_;
    }
    const std::vector<InvariantEntry> &entries() const noexcept {
        return entries_;
    }
    const InvariantEntry *find(std::string_view name) const;

    /// Value of a named entry; throws InvalidArgument if absent.
    Complex value(std::string_view name) const;
    double real(std::string_view name) const;

    std::map<std::string, double> tolerances;
    std::string state_digest;
    std::optional<std::uint64_t> seed;

    std::string to_json() const;
    std::string to_text() const;

   private:
    void add(InvariantEntry entry);

    int num_qubits_;
    std::vector<InvariantEntry> entries_;
};

/// FNV-1a over the amplitude bytes, as 16 hex digits.
std::string state_digest(const PureState &state);

struct EntryDifference {
    std::string name;
    Complex a;
    Complex b;
    double deviation = 0;
};

struct ReportComparison {
    bool distinguished = false;
    /// Entry with the largest deviation above tolerance. Deviations within
    /// `tolerance` of each other tie, and ties go to the earlier entry.
    std::optional<EntryDifference> strongest;
    std::vector<EntryDifference> differences;  ///< every entry above tolerance, report order
    double max_deviation = 0;
};

/// Entrywise comparison of two reports over the same entry names. Complex
/// entries are compared by modulus, since local phases rotate them.
ReportComparison compare_reports(const InvariantReport &a, const InvariantReport &b, double tolerance);

}  // namespace qinv
