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

#ifndef QPATH_RANDOM_HPP
#define QPATH_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "qpath/algebra/mod_matrix.hpp"
#include "qpath/algebra/polynomial.hpp"
#include "qpath/circuit/circuit.hpp"
#include "qpath/densesim/dense.hpp"

namespace qpath {

/// splitmix64 step; used to derive independent per-case seeds from one
/// campaign seed.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

/// Seed for case `index` of a campaign seeded with `seed`.
inline std::uint64_t case_seed(std::uint64_t seed, std::uint64_t index) {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ULL));
}

using Rng = std::mt19937_64;

inline std::uint64_t uniform_below(Rng &rng, std::uint64_t bound) {
    return std::uniform_int_distribution<std::uint64_t>(0, bound - 1)(rng);
}

/// Uniform random generator gate on n wires; SUM only when n >= 2.
inline Gate random_gate(Rng &rng, std::uint32_t n) {
    auto w = static_cast<std::uint32_t>(uniform_below(rng, n));
    std::uint64_t kinds = n >= 2 ? 4 : 3;
    switch (uniform_below(rng, kinds)) {
        case 0: return Gate::F(w);
        case 1: return Gate::R(w);
        case 2: return Gate::ID(w);
        default: {
            auto t = static_cast<std::uint32_t>((w + 1 + uniform_below(rng, n - 1)) % n);
            return Gate::SUM(w, t);
        }
    }
}

/// Random circuit with exactly the given d and n and 0..max_gates gates.
inline CircuitIR random_circuit(Rng &rng, std::uint32_t d, std::uint32_t n, std::size_t max_gates) {
    CircuitIR ir{d, n, {}};
    std::size_t len = uniform_below(rng, max_gates + 1);
    for (std::size_t k = 0; k < len; k++) {
        ir.gates.push_back(random_gate(rng, n));
    }
    return ir;
}

inline ModVector random_configuration(Rng &rng, std::uint32_t n, std::uint32_t d) {
    ModVector q(n);
    for (auto &v : q) {
        v = static_cast<std::uint32_t>(uniform_below(rng, d));
    }
    return q;
}

/// rho = A A^dagger / tr(A A^dagger) with i.i.d. standard complex Gaussian A.
inline DenseMatrix random_density_matrix(Rng &rng, std::size_t dim) {
    std::normal_distribution<double> g(0.0, 1.0);
    DenseMatrix a(dim);
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = 0; j < dim; j++) {
            a(i, j) = Complex(g(rng), g(rng));
        }
    }
    DenseMatrix rho = a * a.adjoint();
    return Complex(1.0 / rho.trace().real(), 0) * rho;
}

/// Sum of `terms` random monomials in `vars`, each exponent in [0, max_exp].
inline ModPolynomial random_mod_polynomial(Rng &rng, const PrimeField &f, const std::vector<std::string> &vars,
                                           std::uint32_t max_exp, std::size_t terms) {
    ModPolynomial p(f);
    for (const auto &v : vars) {
        p.declare(v);
    }
    for (std::size_t t = 0; t < terms; t++) {
        Monomial m;
        for (const auto &v : vars) {
            if (auto k = static_cast<std::uint32_t>(uniform_below(rng, max_exp + 1))) {
                m[v] = k;
            }
        }
        p.add_term(m, f.from_int(static_cast<std::int64_t>(uniform_below(rng, f.modulus()))));
    }
    return p;
}

}  // namespace qpath

#endif
