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

#ifndef QPATH_CIRCUIT_LABELING_HPP
#define QPATH_CIRCUIT_LABELING_HPP

#include <string>
#include <vector>

#include "qpath/algebra/fields.hpp"
#include "qpath/algebra/modint.hpp"
#include "qpath/algebra/polynomial.hpp"
#include "qpath/circuit/circuit.hpp"

namespace qpath {

/// Symbol for the initial configuration of 0-based wire `w`: "q0_<w+1>".
inline std::string boundary_symbol(std::uint32_t w) {
    return "q0_" + std::to_string(w + 1);
}

/// Symbol for the l-th (1-based) free configuration parameter: "x<l>".
inline std::string free_symbol(std::size_t l) {
    return "x" + std::to_string(l);
}

/// Affine configuration expressions flowing through one gate.
struct GateLabel {
    std::vector<ModPolynomial> inputs;
    std::vector<ModPolynomial> outputs;
};

/// Result of threading symbolic configurations through a circuit: each F
/// output is a fresh free parameter, every other output is the affine image
/// of its inputs.
struct WireLabeling {
    std::uint32_t d = 3;
    std::uint32_t n = 1;
    std::vector<GateLabel> gates;
    std::vector<std::string> boundary;
    std::vector<std::string> free_params;
    /// B^(i): final expression on each wire.
    std::vector<ModPolynomial> outputs;

    std::size_t num_free() const noexcept {
        return free_params.size();
    }
};

inline WireLabeling label_wires(const CircuitIR &ir) {
    validate(ir);
    PrimeField field(ir.d);
    WireLabeling lab;
    lab.d = ir.d;
    lab.n = ir.n;
    std::vector<ModPolynomial> wires;
    for (std::uint32_t w = 0; w < ir.n; w++) {
        lab.boundary.push_back(boundary_symbol(w));
        wires.push_back(ModPolynomial::variable(field, lab.boundary.back()));
    }
    for (const auto &g : ir.gates) {
        GateLabel gl;
        for (auto w : g.wires()) {
            gl.inputs.push_back(wires[w]);
        }
        switch (g.kind) {
            case GateKind::F: {
                lab.free_params.push_back(free_symbol(lab.free_params.size() + 1));
                gl.outputs.push_back(ModPolynomial::variable(field, lab.free_params.back()));
                break;
            }
            case GateKind::R:
            case GateKind::ID:
                gl.outputs = gl.inputs;
                break;
            case GateKind::SUM:
                gl.outputs = {gl.inputs[0], gl.inputs[0] + gl.inputs[1]};
                break;
        }
        auto ws = g.wires();
        for (std::size_t j = 0; j < ws.size(); j++) {
            wires[ws[j]] = gl.outputs[j];
        }
        lab.gates.push_back(std::move(gl));
    }
    lab.outputs = std::move(wires);
    return lab;
}

}  // namespace qpath

#endif
