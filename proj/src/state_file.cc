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

#include "qinv/state_file.h"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace qinv {

namespace {

using nlohmann::json;

std::string format_location(const std::string &path, int line, int column) {
    std::ostringstream ss;
    if (line > 0) {
        ss << "line " << line << ", column " << column;
    } else {
        ss << "at " << path;
    }
    return ss.str();
}

// Byte offset (as reported by the JSON parser, pointing just past the
// offending character) to a 1-based line and column.
std::pair<int, int> line_column(std::string_view text, std::size_t byte) {
    int line = 1;
    int column = 0;
    const std::size_t end = std::min(byte, text.size());
    for (std::size_t i = 0; i < end; ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 0;
        } else {
            ++column;
        }
    }
    return {line, std::max(column, 1)};
}

[[noreturn]] void schema_error(const std::string &path, const std::string &what) {
    throw StateFileError(what, path);
}

double number_at(const json &value, const std::string &path) {
    if (!value.is_number()) {
        schema_error(path, "expected a number");
    }
    return value.get<double>();
}

void append_number(std::string &out, double v) {
    if (v == 0) {
        v = 0;  // drops the sign of -0
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    out += buf;
}

}  // namespace

StateFileError::StateFileError(const std::string &message, std::string path, int line, int column)
    : Error(ErrorCode::kParseError, format_location(path, line, column) + ": " + message),
      json_path_(std::move(path)),
      line_(line),
      column_(column) {
}

PureState parse_state_json(std::string_view text, Normalization policy) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error &e) {
        const auto [line, column] = line_column(text, e.byte);
        std::string what = e.what();
        // Drop the library's "[json.exception.parse_error.101] parse error at ..." prefix.
        if (auto pos = what.find(": "); pos != std::string::npos) {
            what = what.substr(pos + 2);
        }
        throw StateFileError(what, "$", line, column);
    }

    if (!doc.is_object()) {
        schema_error("$", "top level must be an object");
    }
    for (const auto &[key, _] : doc.items()) {
        if (key != "n_qubits" && key != "amplitudes" && key != "normalized") {
            schema_error("$." + key, "unknown field '" + key + "'");
        }
    }
    if (!doc.contains("n_qubits")) {
        schema_error("$", "missing field 'n_qubits'");
    }
    const auto &n_value = doc["n_qubits"];
    if (!n_value.is_number_integer()) {
        schema_error("$.n_qubits", "expected an integer");
    }
    const auto n = n_value.get<std::int64_t>();
    if (n < 1) {
        schema_error("$.n_qubits", "must be at least 1");
    }
    if (n > kMaxQubits) {
        schema_error("$.n_qubits", "TooLarge: " + std::to_string(n) + " qubits exceeds the limit of " +
                                       std::to_string(kMaxQubits));
    }
    if (doc.contains("normalized") && !doc["normalized"].is_boolean()) {
        schema_error("$.normalized", "expected a boolean");
    }
    if (!doc.contains("amplitudes")) {
        schema_error("$", "missing field 'amplitudes'");
    }
    const auto &amps_value = doc["amplitudes"];
    if (!amps_value.is_array()) {
        schema_error("$.amplitudes", "expected an array");
    }
    const std::size_t expected = std::size_t{1} << n;
    if (amps_value.size() != expected) {
        schema_error("$.amplitudes", "expected length " + std::to_string(expected) + " for " + std::to_string(n) +
                                         " qubits, got " + std::to_string(amps_value.size()));
    }
    std::vector<Complex> amps;
    amps.reserve(expected);
    for (std::size_t i = 0; i < expected; ++i) {
        const std::string path = "$.amplitudes[" + std::to_string(i) + "]";
        const auto &pair = amps_value[i];
        if (!pair.is_array() || pair.size() != 2) {
            schema_error(path, "expected a [re, im] pair");
        }
        amps.emplace_back(number_at(pair[0], path + "[0]"), number_at(pair[1], path + "[1]"));
    }
    try {
        return PureState(static_cast<int>(n), std::move(amps), policy);
    } catch (const Error &e) {
        if (e.code() == ErrorCode::kUnnormalized) {
            throw;
        }
        schema_error("$.amplitudes", e.what());
    }
}

PureState read_state_file(const std::filesystem::path &path, Normalization policy) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw StateFileError("cannot open " + path.string(), "$");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_state_json(buffer.str(), policy);
}

std::string serialize_state(const PureState &state) {
    std::string out = "{\n  \"n_qubits\": " + std::to_string(state.num_qubits()) + ",\n";
    out += "  \"normalized\": ";
    out += state.is_normalized() ? "true" : "false";
    out += ",\n  \"amplitudes\": [\n";
    const auto amps = state.amplitudes();
    for (std::size_t i = 0; i < amps.size(); ++i) {
        out += "    [";
        append_number(out, amps[i].real());
        out += ", ";
        append_number(out, amps[i].imag());
        out += i + 1 < amps.size() ? "],\n" : "]\n";
    }
    out += "  ]\n}\n";
    return out;
}

void write_state_file(const std::filesystem::path &path, const PureState &state) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw Error(ErrorCode::kIoError, "cannot write " + path.string());
    }
    out << serialize_state(state);
    out.flush();
    if (!out) {
        throw Error(ErrorCode::kIoError, "failed writing " + path.string());
    }
}

}  // namespace qinv
