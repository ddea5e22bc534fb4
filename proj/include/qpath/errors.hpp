// Copyright 2026 The qpath Authors
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

#ifndef QPATH_ERRORS_HPP
#define QPATH_ERRORS_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace qpath {

/// Machine-readable classification carried by every library error. The CLI
/// reports these verbatim in error envelopes.
enum class ErrorCode {
    division_by_zero,
    modulus_mismatch,
    unknown_variable,
    not_closed,
    not_exact,
    half_power_mismatch,
    parse_error,
    invalid_circuit,
    cap_exceeded,
    dimension_mismatch,
    non_hermitian,
    not_clifford,
    singular_system,
    invalid_argument,
    io_error,
};

inline std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::division_by_zero: return "division_by_zero";
        case ErrorCode::modulus_mismatch: return "modulus_mismatch";
        case ErrorCode::unknown_variable: return "unknown_variable";
        case ErrorCode::not_closed: return "not_closed";
        case ErrorCode::not_exact: return "not_exact";
        case ErrorCode::half_power_mismatch: return "half_power_mismatch";
        case ErrorCode::parse_error: return "parse_error";
        case ErrorCode::invalid_circuit: return "invalid_circuit";
        case ErrorCode::cap_exceeded: return "cap_exceeded";
        case ErrorCode::dimension_mismatch: return "dimension_mismatch";
        case ErrorCode::non_hermitian: return "non_hermitian";
        case ErrorCode::not_clifford: return "not_clifford";
        case ErrorCode::singular_system: return "singular_system";
        case ErrorCode::invalid_argument: return "invalid_argument";
        case ErrorCode::io_error: return "io_error";
    }
    return "unknown";
}

class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {
    }

    ErrorCode code() const noexcept {
        return code_;
    }

   private:
    ErrorCode code_;
};

/// Parse failure with a 1-based source position.
class ParseError : public Error {
   public:
    ParseError(std::size_t line, std::size_t column, const std::string &message)
        : Error(ErrorCode::parse_error,
                "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
          line_(line),
          column_(column) {
    }

    std::size_t line() const noexcept {
        return line_;
    }
    std::size_t column() const noexcept {
        return column_;
    }

   private:
    std::size_t line_;
    std::size_t column_;
};

}  // namespace qpath

#endif
