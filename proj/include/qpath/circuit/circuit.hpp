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

#ifndef QPATH_CIRCUIT_CIRCUIT_HPP
#define QPATH_CIRCUIT_CIRCUIT_HPP

#include <charconv>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qpath/algebra/modint.hpp"
#include "qpath/errors.hpp"

namespace qpath {

enum class GateKind { F, R, SUM, ID };

inline std::string_view gate_mnemonic(GateKind k) {
    switch (k) {
        case GateKind::F: return "F";
        case GateKind::R: return "R";
        case GateKind::SUM: return "SUM";
        case GateKind::ID: return "ID";
    }
    return "?";
}

inline std::optional<GateKind> parse_gate_kind(std::string_view s) {
    if (s == "F") return GateKind::F;
    if (s == "R") return GateKind::R;
    if (s == "SUM") return GateKind::SUM;
    if (s == "ID") return GateKind::ID;
    return std::nullopt;
}

/// One gate of the quopit Clifford gate set. For SUM, `wire` is the control
/// and `target` the target; single-wire gates ignore `target`.
struct Gate {
    GateKind kind = GateKind::ID;
    std::uint32_t wire = 0;
    std::uint32_t target = 0;

    static Gate F(std::uint32_t w) {
        return {GateKind::F, w, 0};
    }
    static Gate R(std::uint32_t w) {
        return {GateKind::R, w, 0};
    }
    static Gate ID(std::uint32_t w) {
        return {GateKind::ID, w, 0};
    }
    static Gate SUM(std::uint32_t control, std::uint32_t target) {
        return {GateKind::SUM, control, target};
    }

    std::size_t arity() const noexcept {
        return kind == GateKind::SUM ? 2 : 1;
    }
    /// Wires acted on, control first.
    std::vector<std::uint32_t> wires() const {
        if (kind == GateKind::SUM) {
            return {wire, target};
        }
        return {wire};
    }

    std::string to_string() const {
        std::string s(gate_mnemonic(kind));
        s += " " + std::to_string(wire);
        if (kind == GateKind::SUM) {
            s += " " + std::to_string(target);
        }
        return s;
    }

    friend bool operator==(const Gate &a, const Gate &b) {
        return a.kind == b.kind && a.wire == b.wire && (a.kind != GateKind::SUM || a.target == b.target);
    }
};

/// A sequential quopit Clifford circuit: one gate per time step.
struct CircuitIR {
    std::uint32_t d = 3;
    std::uint32_t n = 1;
    std::vector<Gate> gates;

    friend bool operator==(const CircuitIR &, const CircuitIR &) = default;

    std::size_t count(GateKind k) const {
        std::size_t c = 0;
        for (const auto &g : gates) {
            c += g.kind == k;
        }
        return c;
    }
};

inline void validate_gate(const Gate &g, std::uint32_t n) {
    if (g.wire >= n) {
        throw Error(ErrorCode::invalid_circuit,
                    "wire " + std::to_string(g.wire) + " out of range for n=" + std::to_string(n));
    }
    if (g.kind == GateKind::SUM) {
        if (g.target >= n) {
            throw Error(ErrorCode::invalid_circuit,
                        "wire " + std::to_string(g.target) + " out of range for n=" + std::to_string(n));
        }
        if (g.target == g.wire) {
            throw Error(ErrorCode::invalid_circuit, "SUM control equals target");
        }
    }
}

inline void validate(const CircuitIR &ir) {
    if (!is_odd_prime(ir.d)) {
        throw Error(ErrorCode::invalid_circuit, "d must be an odd prime, got " + std::to_string(ir.d));
    }
    if (ir.n == 0) {
        throw Error(ErrorCode::invalid_circuit, "n must be positive");
    }
    for (const auto &g : ir.gates) {
        validate_gate(g, ir.n);
    }
}

inline std::string format_circuit(const CircuitIR &ir) {
    std::ostringstream out;
    out << "d " << ir.d << "\nn " << ir.n << "\n";
    for (const auto &g : ir.gates) {
        out << g.to_string() << "\n";
    }
    return out.str();
}

namespace detail {

struct Token {
    std::string_view text;
    std::size_t column;  // 1-based
};

inline std::vector<Token> split_tokens(std::string_view line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        if (i >= line.size()) {
            break;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            i++;
        }
        out.push_back({line.substr(start, i - start), start + 1});
    }
    return out;
}

inline std::uint64_t parse_uint(const Token &t, std::size_t line) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
    if (ec != std::errc() || ptr != t.text.data() + t.text.size()) {
        throw ParseError(line, t.column, "expected a non-negative decimal integer, got '" + std::string(t.text) + "'");
    }
    return v;
}

}  // namespace detail

/// Parses the line-oriented circuit format:
///
///     # comment
///     d 5
///     n 2
///     F 0
///     SUM 0 1
///
/// The `d` and `n` headers appear exactly once each, before any gate.
inline CircuitIR parse_circuit(std::string_view text) {
    using detail::Token;
    CircuitIR ir;
    std::optional<std::uint32_t> d, n;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto toks = detail::split_tokens(line);
        if (toks.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        const Token &head = toks[0];
        auto expect_args = [&](std::size_t k) {
            if (toks.size() != k + 1) {
                std::size_t col = toks.size() > k + 1 ? toks[k + 1].column : head.column + head.text.size();
                throw ParseError(line_no, col,
                                 "'" + std::string(head.text) + "' takes " + std::to_string(k) + " argument(s)");
            }
        };
        if (head.text == "d" || head.text == "n") {
            bool is_d = head.text == "d";
            if ((is_d && d) || (!is_d && n)) {
                throw ParseError(line_no, head.column, "duplicate '" + std::string(head.text) + "' header");
            }
            if (!ir.gates.empty()) {
                throw ParseError(line_no, head.column, "header after gate lines");
            }
            expect_args(1);
            std::uint64_t v = detail::parse_uint(toks[1], line_no);
            if (is_d) {
                if (v > 0x7fffffffu || !is_odd_prime(v)) {
                    throw ParseError(line_no, toks[1].column, "d must be an odd prime, got " + std::string(toks[1].text));
                }
                d = static_cast<std::uint32_t>(v);
            } else {
                if (v == 0 || v > 0xffffu) {
                    throw ParseError(line_no, toks[1].column, "n must be a positive integer, got " + std::string(toks[1].text));
                }
                n = static_cast<std::uint32_t>(v);
            }
            continue;
        }
        auto kind = parse_gate_kind(head.text);
        if (!kind) {
            throw ParseError(line_no, head.column, "unknown mnemonic '" + std::string(head.text) + "'");
        }
        if (!d || !n) {
            throw ParseError(line_no, head.column, "gate before 'd' and 'n' headers");
        }
        Gate g;
        g.kind = *kind;
        auto wire_arg = [&](const Token &t) {
            std::uint64_t w = detail::parse_uint(t, line_no);
            if (w >= *n) {
                throw ParseError(line_no, t.column,
                                 "wire " + std::string(t.text) + " out of range for n=" + std::to_string(*n));
            }
            return static_cast<std::uint32_t>(w);
        };
        if (*kind == GateKind::SUM) {
            expect_args(2);
            g.wire = wire_arg(toks[1]);
            g.target = wire_arg(toks[2]);
            if (g.wire == g.target) {
                throw ParseError(line_no, toks[2].column, "SUM control equals target");
            }
        } else {
            expect_args(1);
            g.wire = wire_arg(toks[1]);
        }
        ir.gates.push_back(g);
        if (end == text.size()) {
            break;
        }
    }
    if (!d) {
        throw ParseError(line_no, 1, "missing 'd' header");
    }
    if (!n) {
        throw ParseError(line_no, 1, "missing 'n' header");
    }
    ir.d = *d;
    ir.n = *n;
    return ir;
}

}  // namespace qpath

#endif
