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

#include <filesystem>
#include <string>
#include <string_view>

#include "qinv/error.h"
#include "qinv/state.h"

namespace qinv {

/// A malformed state file. `line` and `column` are 1-based and set for
/// syntax errors; schema errors carry the JSON path of the offending value.
class StateFileError : public Error {
   public:
    StateFileError(const std::string &message, std::string path, int line = 0, int column = 0);

    const std::string &json_path() const noexcept {
        return json_path_;
    }
    int line() const noexcept {
        return line_;
    }
    int column() const noexcept {
        return column_;
    }

   private:
    std::string json_path_;
    int line_;
    int column_;
};

/// Parses the state-file JSON:
///
///     {"n_qubits": n, "normalized": bool (optional), "amplitudes": [[re, im], ...]}
///
/// Amplitudes are in basis order with qubit 1 most significant. Structural
/// problems throw StateFileError; a well-formed but unnormalized vector
/// throws Error(Unnormalized) under Normalization::kStrict.
PureState parse_state_json(std::string_view text, Normalization policy = Normalization::kStrict);

/// Reads and parses a file. An unreadable file is a StateFileError.
PureState read_state_file(const std::filesystem::path &path, Normalization policy = Normalization::kStrict);

/// Canonical form: fixed field order, one amplitude per line, 17
/// significant digits, negative zero written as 0. Byte-stable under
/// parse/serialize.
std::string serialize_state(const PureState &state);

/// Throws Error(IoError) when the file cannot be written.
void write_state_file(const std::filesystem::path &path, const PureState &state);

}  // namespace qinv
