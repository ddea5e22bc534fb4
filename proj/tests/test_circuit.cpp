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

#include <gtest/gtest.h>

#include <random>

#include "qpath/circuit/circuit.hpp"
#include "qpath/circuit/labeling.hpp"

using namespace qpath;

namespace {

ParseError parse_error_of(const std::string &text) {
    try {
        parse_circuit(text);
    } catch (const ParseError &e) {
        return e;
    }
    ADD_FAILURE() << "expected a parse error for:\n" << text;
    return ParseError(0, 0, "");
}

}  // namespace

TEST(Parse, SingleGate) {
    auto ir = parse_circuit("d 3\nn 1\nF 0\n");
    EXPECT_EQ(ir.d, 3u);
    EXPECT_EQ(ir.n, 1u);
    ASSERT_EQ(ir.gates.size(), 1u);
    EXPECT_EQ(ir.gates[0], Gate::F(0));
}

TEST(Parse, CommentsAndWhitespace) {
    auto ir = parse_circuit("# header\n  d 5   # prime\n\tn 2\n\nSUM 0 1\nR 1 # phase\nID 0");
    EXPECT_EQ(ir.d, 5u);
    EXPECT_EQ(ir.n, 2u);
    EXPECT_EQ(ir.gates, (std::vector<Gate>{Gate::SUM(0, 1), Gate::R(1), Gate::ID(0)}));
}

TEST(Parse, Diagnostics) {
    auto e = parse_error_of("d 4\nn 1\nF 0\n");
    EXPECT_EQ(e.line(), 1u);
    EXPECT_EQ(e.column(), 3u);
    EXPECT_NE(std::string(e.what()).find("odd prime"), std::string::npos);

    e = parse_error_of("d 3\nn 2\nSUM 0 0\n");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_NE(std::string(e.what()).find("control equals target"), std::string::npos);

    e = parse_error_of("d 3\nn 1\nH 0\n");
    EXPECT_EQ(e.line(), 3u);
    EXPECT_EQ(e.column(), 1u);

    e = parse_error_of("d 3\nd 3\nn 1\n");
    EXPECT_EQ(e.line(), 2u);

    e = parse_error_of("d 3\nn 2\nF 2\n");
    EXPECT_EQ(e.column(), 3u);

    e = parse_error_of("d 2\nn 1\n");
    EXPECT_EQ(e.line(), 1u);

    e = parse_error_of("F 0\nd 3\nn 1\n");
    EXPECT_EQ(e.line(), 1u);

    e = parse_error_of("d 3\n");
    EXPECT_NE(std::string(e.what()).find("missing 'n'"), std::string::npos);

    e = parse_error_of("d 3\nn 1\nF 0 1\n");
    EXPECT_EQ(e.column(), 5u);

    e = parse_error_of("d 3\nn 1\nR x\n");
    EXPECT_EQ(e.column(), 3u);

    e = parse_error_of("d 3\nn 1\nF 0\nn 1\n");
    EXPECT_EQ(e.line(), 4u);
}

TEST(Parse, RoundTripsRandomCircuits) {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 200; trial++) {
        CircuitIR ir;
        ir.d = std::vector<std::uint32_t>{3, 5, 7, 11}[rng() % 4];
        ir.n = 1 + static_cast<std::uint32_t>(rng() % 4);
        std::size_t len = rng() % 10;
        for (std::size_t k = 0; k < len; k++) {
            auto w = static_cast<std::uint32_t>(rng() % ir.n);
            switch (rng() % 4) {
                case 0: ir.gates.push_back(Gate::F(w)); break;
                case 1: ir.gates.push_back(Gate::R(w)); break;
                case 2: ir.gates.push_back(Gate::ID(w)); break;
                default:
                    if (ir.n > 1) {
                        ir.gates.push_back(Gate::SUM(w, (w + 1 + rng() % (ir.n - 1)) % ir.n));
                    }
            }
        }
        EXPECT_EQ(parse_circuit(format_circuit(ir)), ir);
    }
}

TEST(Validate, RejectsBadIR) {
    CircuitIR ir{9, 1, {}};
    EXPECT_THROW(validate(ir), Error);
    ir = {3, 2, {Gate::SUM(1, 1)}};
    EXPECT_THROW(validate(ir), Error);
    ir = {3, 2, {Gate::F(2)}};
    EXPECT_THROW(validate(ir), Error);
}

TEST(Labeling, SingleF) {
    auto lab = label_wires({3, 1, {Gate::F(0)}});
    PrimeField f(3);
    EXPECT_EQ(lab.num_free(), 1u);
    EXPECT_EQ(lab.outputs[0], ModPolynomial::variable(f, "x1"));
}

TEST(Labeling, RKeepsBoundary) {
    auto lab = label_wires({3, 1, {Gate::R(0)}});
    PrimeField f(3);
    EXPECT_EQ(lab.num_free(), 0u);
    EXPECT_EQ(lab.outputs[0], ModPolynomial::variable(f, "q0_1"));
}

TEST(Labeling, FThenSum) {
    auto lab = label_wires({3, 2, {Gate::F(0), Gate::SUM(0, 1)}});
    PrimeField f(3);
    auto x1 = ModPolynomial::variable(f, "x1");
    EXPECT_EQ(lab.num_free(), 1u);
    EXPECT_EQ(lab.outputs[0], x1);
    EXPECT_EQ(lab.outputs[1], ModPolynomial::variable(f, "q0_2") + x1);
}

TEST(Labeling, ExpressionsStayAffine) {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; trial++) {
        CircuitIR ir;
        ir.d = 5;
        ir.n = 3;
        for (int k = 0; k < 12; k++) {
            auto w = static_cast<std::uint32_t>(rng() % 3);
            switch (rng() % 3) {
                case 0: ir.gates.push_back(Gate::F(w)); break;
                case 1: ir.gates.push_back(Gate::R(w)); break;
                default: ir.gates.push_back(Gate::SUM(w, (w + 1) % 3));
            }
        }
        auto lab = label_wires(ir);
        EXPECT_EQ(lab.num_free(), ir.count(GateKind::F));
        for (const auto &g : lab.gates) {
            for (const auto &e : g.outputs) {
                EXPECT_LE(e.degree(), 1u);
            }
        }
    }
}
