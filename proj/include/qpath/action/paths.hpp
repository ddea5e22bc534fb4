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

#ifndef QPATH_ACTION_PATHS_HPP
#define QPATH_ACTION_PATHS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "qpath/action/genfun.hpp"
#include "qpath/algebra/polynomial.hpp"
#include "qpath/errors.hpp"

namespace qpath {

/// Configuration of 0-based wire `w` after time step k: "q<k>_<w+1>". Step 0
/// coincides with the boundary symbols of the wire labeling.
inline std::string path_symbol(std::size_t k, std::uint32_t w) {
    return "q" + std::to_string(k) + "_" + std::to_string(w + 1);
}

/// One time step of a circuit seen classically: the wires it touches, its
/// local phase-space map and its local generating function G(q, Q).
template <class Field>
struct ClassicalStep {
    std::vector<std::uint32_t> wires;
    PolynomialMap<Field> map;
    Polynomial<Field> g;
};

/// S_Phi = sum_k G_k(q_{k-1}, q_k) in path symbols, scaled so that the phase
/// is 2 pi / d (discrete) or 1 (continuous) times this polynomial.
template <class Field>
Polynomial<Field> action_from_steps(const Field &field, std::uint32_t n, const std::vector<ClassicalStep<Field>> &steps) {
    using Poly = Polynomial<Field>;
    Poly s(field);
    for (std::size_t k = 0; k <= steps.size(); k++) {
        for (std::uint32_t w = 0; w < n; w++) {
            s.declare(path_symbol(k, w));
        }
    }
    for (std::size_t k = 0; k < steps.size(); k++) {
        const auto &st = steps[k];
        auto ins = phase_space_coordinates(st.wires.size());
        auto outs = output_coordinates(st.wires.size());
        std::map<std::string, Poly, VariableOrder> subs;
        for (std::size_t j = 0; j < st.wires.size(); j++) {
            subs.emplace(ins[j], Poly::variable(field, path_symbol(k, st.wires[j])));
            subs.emplace(outs[j], Poly::variable(field, path_symbol(k + 1, st.wires[j])));
        }
        s += st.g.substitute(subs);
    }
    return s;
}

/// Path symbols expressed through the boundary symbols and one fresh free
/// parameter per step whose configuration image depends on momenta.
template <class Field>
struct PathParametrization {
    std::map<std::string, Polynomial<Field>, VariableOrder> substitution;
    std::vector<std::string> free_params;
    std::vector<Polynomial<Field>> outputs;
};

/// Follows configurations through the steps using only the maps' q-parts:
/// a step with dQ/dp = 0 sends q to Q(q); a step with invertible dQ/dp
/// frees its outputs, each becoming a new parameter "x<l>".
template <class Field>
PathParametrization<Field> parametrize_paths(const Field &field, std::uint32_t n,
                                             const std::vector<ClassicalStep<Field>> &steps) {
    using Poly = Polynomial<Field>;
    PathParametrization<Field> out;
    std::vector<Poly> current;
    for (std::uint32_t w = 0; w < n; w++) {
        current.push_back(Poly::variable(field, path_symbol(0, w)));
        out.substitution.emplace(path_symbol(0, w), current.back());
    }
    for (std::size_t k = 0; k < steps.size(); k++) {
        const auto &st = steps[k];
        std::size_t m = st.wires.size();
        auto b = st.map.momentum_block();
        std::size_t nonzero = 0;
        for (const auto &row : b) {
            for (const auto &e : row) {
                nonzero += !field.is_zero(e);
            }
        }
        std::vector<Poly> next;
        if (nonzero == 0) {
            auto ins = phase_space_coordinates(m);
            std::map<std::string, Poly, VariableOrder> subs;
            for (std::size_t j = 0; j < m; j++) {
                subs.emplace(ins[j], current[st.wires[j]]);
            }
            for (std::size_t j = 0; j < m; j++) {
                next.push_back(st.map.q_image_without_momenta(j).substitute(subs));
            }
        } else {
            std::vector<Poly> zero(m, Poly(field));
            if (!detail::solve_momenta(field, b, zero).kernel.empty()) {
                throw Error(ErrorCode::invalid_argument, "step mixes free and determined outputs");
            }
            for (std::size_t j = 0; j < m; j++) {
                out.free_params.push_back("x" + std::to_string(out.free_params.size() + 1));
                next.push_back(Poly::variable(field, out.free_params.back()));
            }
        }
        for (std::size_t j = 0; j < m; j++) {
            current[st.wires[j]] = next[j];
        }
        for (std::uint32_t w = 0; w < n; w++) {
            out.substitution.emplace(path_symbol(k + 1, w), current[w]);
        }
    }
    out.outputs = current;
    return out;
}

}  // namespace qpath

#endif
