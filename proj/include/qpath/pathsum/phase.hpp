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

#ifndef QPATH_PATHSUM_PHASE_HPP
#define QPATH_PATHSUM_PHASE_HPP

#include <cstdint>
#include <cstdlib>
#include <string>
#include <vector>

#include "qpath/algebra/mod_matrix.hpp"
#include "qpath/algebra/polynomial.hpp"
#include "qpath/circuit/circuit.hpp"
#include "qpath/circuit/labeling.hpp"

namespace qpath {

/// Default limit on the number of paths a brute-force sum may visit.
inline constexpr std::uint64_t kDefaultEnumerationCap = 10'000'000;

/// The enumeration cap, honouring the QPATH_CAP environment variable.
inline std::uint64_t default_cap() {
    if (const char *env = std::getenv("QPATH_CAP")) {
        char *end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) {
            return v;
        }
    }
    return kDefaultEnumerationCap;
}

/// d^k, or 0 when it does not fit below `limit`.
inline std::uint64_t checked_power(std::uint64_t d, std::size_t k, std::uint64_t limit) {
    std::uint64_t r = 1;
    for (std::size_t i = 0; i < k; i++) {
        if (r > limit / d) {
            return 0;
        }
        r *= d;
    }
    return r;
}

/// Phase of a circuit's path sum as an integer polynomial: the amplitude of
/// a path is chi(phase) / d^{f_count/2}.
struct PhaseData {
    ModPolynomial phase;
    std::size_t f_count = 0;
};

inline PhaseData build_phase(const CircuitIR &ir, const WireLabeling &lab) {
    PrimeField field(ir.d);
    PhaseData out{ModPolynomial(field), 0};
    for (const auto &s : lab.boundary) {
        out.phase.declare(s);
    }
    for (const auto &x : lab.free_params) {
        out.phase.declare(x);
    }
    ModInt h = half(ir.d);
    for (std::size_t k = 0; k < ir.gates.size(); k++) {
        const GateLabel &gl = lab.gates[k];
        switch (ir.gates[k].kind) {
            case GateKind::F:
                out.phase += gl.inputs[0] * gl.outputs[0];
                out.f_count++;
                break;
            case GateKind::R:
                out.phase += h * (gl.inputs[0] * (gl.inputs[0] - field.one()));
                break;
            case GateKind::SUM:
            case GateKind::ID:
                break;
        }
    }
    return out;
}

inline PhaseData build_phase(const CircuitIR &ir) {
    return build_phase(ir, label_wires(ir));
}

inline ModVector check_configuration(const std::vector<std::uint32_t> &q, std::uint32_t n, std::uint32_t d,
                                     const char *what) {
    if (q.size() != n) {
        throw Error(ErrorCode::dimension_mismatch, std::string(what) + " has " + std::to_string(q.size()) +
                                                       " entries, expected " + std::to_string(n));
    }
    for (auto v : q) {
        if (v >= d) {
            throw Error(ErrorCode::invalid_argument,
                        std::string(what) + " entry " + std::to_string(v) + " is not below d=" + std::to_string(d));
        }
    }
    return q;
}

/// Boundary assignment {q0_i -> q0[i]} as polynomial substitution values.
inline std::map<std::string, ModInt, VariableOrder> boundary_point(const WireLabeling &lab, const ModVector &q0) {
    std::map<std::string, ModInt, VariableOrder> pt;
    for (std::uint32_t i = 0; i < lab.n; i++) {
        pt.emplace(lab.boundary[i], ModInt(q0[i], lab.d));
    }
    return pt;
}

/// The free parameters consistent with boundary conditions (q0, qf):
/// solutions of B^(i)(x) = qf^(i) with q0 substituted.
inline AffineSolution solve_constraints(const WireLabeling &lab, const ModVector &q0, const ModVector &qf) {
    check_configuration(q0, lab.n, lab.d, "q0");
    check_configuration(qf, lab.n, lab.d, "qf");
    auto pt = boundary_point(lab, q0);
    std::size_t l = lab.num_free();
    ModMatrix a(lab.n, l, lab.d);
    ModVector rhs(lab.n);
    for (std::uint32_t i = 0; i < lab.n; i++) {
        ModPolynomial b = lab.outputs[i].partial_evaluate(pt);
        for (std::size_t j = 0; j < l; j++) {
            a.set(i, j, b.coefficient(Monomial{{lab.free_params[j], 1}}).value());
        }
        rhs[i] = (ModInt(qf[i], lab.d) - b.constant_term()).value();
    }
    return solve_affine(a, rhs);
}

}  // namespace qpath

#endif
