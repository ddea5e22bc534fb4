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

#ifndef QPATH_ACTION_ACTION_HPP
#define QPATH_ACTION_ACTION_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "qpath/action/genfun.hpp"
#include "qpath/action/paths.hpp"
#include "qpath/algebra/fields.hpp"
#include "qpath/circuit/circuit.hpp"
#include "qpath/circuit/labeling.hpp"
#include "qpath/pathsum/phase.hpp"
#include "qpath/phasespace/symplectic.hpp"

namespace qpath {

/// The affine map written as polynomials in phase_space_coordinates(n).
inline PolynomialMap<PrimeField> polynomial_map(const AffineSymplectomorphism &phi) {
    PrimeField field(phi.d);
    auto names = phase_space_coordinates(phi.n);
    PolynomialMap<PrimeField> m{phi.n, {}};
    for (std::uint32_t i = 0; i < 2 * phi.n; i++) {
        auto img = ModPolynomial::constant(field, phi.a[i]);
        for (std::uint32_t j = 0; j < 2 * phi.n; j++) {
            img += ModPolynomial::variable(field, names[j]) * phi.s.at(i, j);
            img.declare(names[j]);
        }
        m.images.push_back(std::move(img));
    }
    return m;
}

inline GeneratingFunction<PrimeField> generating_function(const AffineSymplectomorphism &phi) {
    return derive_generating_function(polynomial_map(phi));
}

/// Local generating function of a generator in (q, Q) or (q1, q2, Q1, Q2),
/// SUM acting with control on local wire 0.
inline ModPolynomial gate_generating_function(GateKind kind, std::uint32_t d) {
    Gate local = kind == GateKind::SUM ? Gate::SUM(0, 1) : Gate{kind, 0, 0};
    auto arity = static_cast<std::uint32_t>(local.arity());
    return generating_function(gate_symplectomorphism(local, arity, d)).g;
}

inline std::vector<ClassicalStep<PrimeField>> classical_steps(const CircuitIR &ir) {
    validate(ir);
    std::map<GateKind, ClassicalStep<PrimeField>> cache;
    std::vector<ClassicalStep<PrimeField>> steps;
    for (const auto &g : ir.gates) {
        auto it = cache.find(g.kind);
        if (it == cache.end()) {
            Gate local = g.kind == GateKind::SUM ? Gate::SUM(0, 1) : Gate{g.kind, 0, 0};
            auto arity = static_cast<std::uint32_t>(local.arity());
            auto phi = gate_symplectomorphism(local, arity, ir.d);
            auto m = polynomial_map(phi);
            auto gf = derive_generating_function(m);
            it = cache.emplace(g.kind, ClassicalStep<PrimeField>{{}, m, gf.g}).first;
        }
        ClassicalStep<PrimeField> st = it->second;
        st.wires = g.wires();
        steps.push_back(std::move(st));
    }
    return steps;
}

/// S_Phi(q_0, ..., q_N) / (2 pi / d) in path symbols q<k>_<i>.
inline ModPolynomial action_functional(const CircuitIR &ir) {
    return action_from_steps(PrimeField(ir.d), ir.n, classical_steps(ir));
}

struct MainDiscReport {
    ModPolynomial action_on_paths;
    ModPolynomial path_sum_phase;
    bool phases_equal = false;
    bool constraints_equal = false;

    bool holds() const noexcept {
        return phases_equal && constraints_equal;
    }
};

/// Restricts S_Phi to paths allowed by the step maps and compares it with
/// the path-sum phase built from matrix elements.
inline MainDiscReport verify_main_disc_report(const CircuitIR &ir) {
    PrimeField field(ir.d);
    auto steps = classical_steps(ir);
    auto paths = parametrize_paths(field, ir.n, steps);
    auto lab = label_wires(ir);
    MainDiscReport r{action_from_steps(field, ir.n, steps).substitute(paths.substitution),
                     build_phase(ir, lab).phase};
    r.phases_equal = r.action_on_paths == r.path_sum_phase;
    r.constraints_equal = paths.free_params == lab.free_params && paths.outputs.size() == lab.outputs.size();
    for (std::size_t i = 0; r.constraints_equal && i < paths.outputs.size(); i++) {
        r.constraints_equal = paths.outputs[i] == lab.outputs[i];
    }
    return r;
}

inline bool verify_main_disc(const CircuitIR &ir) {
    return verify_main_disc_report(ir).holds();
}

/// Phase-space path (Gamma_0, Phi_1(Gamma_0), ..., Phi_N(Gamma_0)) and its
/// configuration projection.
struct ClassicalTrajectory {
    std::vector<ModVector> phase_path;
    std::vector<ModVector> config_path;
};

inline ClassicalTrajectory evolve(const CircuitIR &ir, const ModVector &start) {
    ClassicalTrajectory t;
    t.phase_path.push_back(start);
    for (const auto &g : ir.gates) {
        t.phase_path.push_back(gate_symplectomorphism(g, ir.n, ir.d)(t.phase_path.back()));
    }
    for (const auto &v : t.phase_path) {
        t.config_path.emplace_back(v.begin(), v.begin() + ir.n);
    }
    return t;
}

/// All trajectories from q0 reaching qN, by enumerating initial momenta.
inline std::vector<ClassicalTrajectory> classical_trajectories(const CircuitIR &ir, const ModVector &q0,
                                                               const ModVector &qN,
                                                               std::uint64_t cap = default_cap()) {
    check_configuration(q0, ir.n, ir.d, "q0");
    check_configuration(qN, ir.n, ir.d, "qN");
    std::uint64_t count = checked_power(ir.d, ir.n, cap);
    if (count == 0) {
        throw Error(ErrorCode::cap_exceeded, "enumerating d^n initial momenta exceeds the cap");
    }
    std::vector<ClassicalTrajectory> out;
    for (std::uint64_t idx = 0; idx < count; idx++) {
        ModVector start = q0;
        auto p0 = unpack_configuration(idx, ir.n, ir.d);
        start.insert(start.end(), p0.begin(), p0.end());
        auto t = evolve(ir, start);
        if (t.config_path.back() == qN) {
            out.push_back(std::move(t));
        }
    }
    return out;
}

inline std::map<std::string, ModInt, VariableOrder> path_point(const ClassicalTrajectory &t, std::uint32_t d) {
    std::map<std::string, ModInt, VariableOrder> pt;
    for (std::size_t k = 0; k < t.config_path.size(); k++) {
        for (std::uint32_t w = 0; w < t.config_path[k].size(); w++) {
            pt.emplace(path_symbol(k, w), ModInt(t.config_path[k][w], d));
        }
    }
    return pt;
}

inline std::map<std::string, ModInt, VariableOrder> boundary_pair_point(const ModVector &q0, const ModVector &qN,
                                                                        std::uint32_t d) {
    auto ins = phase_space_coordinates(q0.size());
    auto outs = output_coordinates(q0.size());
    std::map<std::string, ModInt, VariableOrder> pt;
    for (std::size_t i = 0; i < q0.size(); i++) {
        pt.emplace(ins[i], ModInt(q0[i], d));
        pt.emplace(outs[i], ModInt(qN[i], d));
    }
    return pt;
}

struct ActClassTrajReport {
    std::size_t trajectories = 0;
    std::size_t boundary_pairs = 0;
    /// Distinct values of S_Phi(gamma) - G_{Phi_N}(q0, qN) seen.
    std::set<std::uint32_t> offsets;

    bool holds() const noexcept {
        return trajectories > 0 && offsets.size() == 1;
    }
};

namespace detail {

struct ActionComparison {
    ModPolynomial action;
    ModPolynomial g_total;
    std::uint32_t d;

    explicit ActionComparison(const CircuitIR &ir)
        : action(action_functional(ir)), g_total(generating_function(circuit_symplectomorphism(ir)).g), d(ir.d) {
    }

    std::uint32_t offset(const ClassicalTrajectory &t) const {
        ModInt s = action.evaluate(path_point(t, d));
        ModInt g = g_total.evaluate(boundary_pair_point(t.config_path.front(), t.config_path.back(), d));
        return (s - g).value();
    }
};

}  // namespace detail

/// S_Phi(gamma_cl) against G_{Phi_N}(q0, qN) on every classical trajectory
/// between q0 and qN.
inline ActClassTrajReport verify_actclasstraj(const CircuitIR &ir, const ModVector &q0, const ModVector &qN) {
    detail::ActionComparison cmp(ir);
    ActClassTrajReport r;
    for (const auto &t : classical_trajectories(ir, q0, qN)) {
        r.trajectories++;
        r.offsets.insert(cmp.offset(t));
    }
    r.boundary_pairs = r.trajectories > 0;
    return r;
}

/// The same comparison over every boundary pair at once, with one offset
/// shared by the whole circuit.
inline ActClassTrajReport verify_actclasstraj_all(const CircuitIR &ir, std::uint64_t cap = default_cap()) {
    validate(ir);
    std::uint64_t count = checked_power(ir.d, 2 * ir.n, cap);
    if (count == 0) {
        throw Error(ErrorCode::cap_exceeded, "enumerating d^{2n} initial points exceeds the cap");
    }
    detail::ActionComparison cmp(ir);
    ActClassTrajReport r;
    std::set<std::pair<ModVector, ModVector>> pairs;
    for (std::uint64_t idx = 0; idx < count; idx++) {
        auto t = evolve(ir, unpack_configuration(idx, 2 * ir.n, ir.d));
        r.trajectories++;
        r.offsets.insert(cmp.offset(t));
        pairs.emplace(t.config_path.front(), t.config_path.back());
    }
    r.boundary_pairs = pairs.size();
    return r;
}

}  // namespace qpath

#endif
