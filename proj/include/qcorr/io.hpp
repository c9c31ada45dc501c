// Copyright 2026 The qcorr Authors
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

// State file format: a JSON object
//
//   { "dim_a": 2, "dim_b": 2, "matrix": [[re, im], [re, im], ...] }
//
// with the (dim_a*dim_b)^2 entries of rho in row-major order. Numbers are
// written with 17 significant digits so files round-trip exactly.

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "qcorr/states.hpp"

namespace qcorr::io {

/// Unreadable or structurally malformed input (distinct from a well-formed
/// matrix that fails state validation, which raises NotAState).
class FormatError : public Error {
public:
    using Error::Error;
};

inline std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline std::string matrix_json(const CMatrix& a) {
    std::ostringstream os;
    os << '[';
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            if (i != 0 || j != 0) os << ", ";
            os << '[' << format_double(a(i, j).real()) << ", " << format_double(a(i, j).imag())
               << ']';
        }
    }
    os << ']';
    return os.str();
}

inline std::string write_state(Eigen::Index dim_a, Eigen::Index dim_b, const CMatrix& rho) {
    std::ostringstream os;
    os << "{\n  \"dim_a\": " << dim_a << ",\n  \"dim_b\": " << dim_b
       << ",\n  \"matrix\": " << matrix_json(rho) << "\n}\n";
    return os.str();
}

inline std::string write_state(const BipartiteState& state) {
    return write_state(state.dim_a(), state.dim_b(), state.rho());
}

struct RawState {
    Eigen::Index dim_a = 0;
    Eigen::Index dim_b = 0;
    CMatrix rho;
};

/// Parse without validating density-matrix properties.
inline RawState parse_raw_state(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("state file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) throw FormatError("state file: top level must be an object");
    for (const char* key : {"dim_a", "dim_b", "matrix"}) {
        if (!doc.contains(key)) throw FormatError(std::string("state file: missing field ") + key);
    }
    if (!doc["dim_a"].is_number_integer() || !doc["dim_b"].is_number_integer()) {
        throw FormatError("state file: dim_a and dim_b must be integers");
    }
    RawState raw;
    raw.dim_a = doc["dim_a"].get<Eigen::Index>();
    raw.dim_b = doc["dim_b"].get<Eigen::Index>();
    if (raw.dim_a < 1 || raw.dim_b < 1) throw FormatError("state file: dimensions must be >= 1");
    const auto& entries = doc["matrix"];
    const Eigen::Index d = raw.dim_a * raw.dim_b;
    if (!entries.is_array() || static_cast<Eigen::Index>(entries.size()) != d * d) {
        throw FormatError("state file: matrix must hold " + std::to_string(d * d) +
                          " [re, im] pairs");
    }
    raw.rho.resize(d, d);
    for (Eigen::Index k = 0; k < d * d; ++k) {
        const auto& pair = entries[static_cast<std::size_t>(k)];
        if (!pair.is_array() || pair.size() != 2 || !pair[0].is_number() || !pair[1].is_number()) {
            throw FormatError("state file: entry " + std::to_string(k) + " is not an [re, im] pair");
        }
        raw.rho(k / d, k % d) = cplx(pair[0].get<double>(), pair[1].get<double>());
    }
    return raw;
}

inline BipartiteState parse_state(const std::string& text) {
    auto raw = parse_raw_state(text);
    return BipartiteState(raw.dim_a, raw.dim_b, raw.rho);
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

inline BipartiteState load_state(const std::string& path) { return parse_state(read_file(path)); }

inline void write_file(const std::string& path, const std::string& contents) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path);
    out << contents;
    if (!out) throw FormatError("write failed for " + path);
}

inline void save_state(const std::string& path, const BipartiteState& state) {
    write_file(path, write_state(state));
}

}  // namespace qcorr::io
