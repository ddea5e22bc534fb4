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

#ifndef QPATH_PHASESPACE_SYMPLECTIC_HPP
#define QPATH_PHASESPACE_SYMPLECTIC_HPP

#include <cstdint>
#include <ostream>
#include <vector>

#include "qpath/algebra/mod_matrix.hpp"
#include "qpath/algebra/modint.hpp"
#include "qpath/circuit/circuit.hpp"
#include "qpath/errors.hpp"

namespace qpath {

/// J = [[0, I], [-I, 0]] on Z_d^{2n}, coordinates ordered (q^(1..n), p^(1..n)).
inline ModMatrix symplectic_j(std::uint32_t n, std::uint32_t d) {
    ModMatrix j(2 * n, 2 * n, d);
    for (std::uint32_t i = 0; i < n; i++) {
        j.set(i, n + i, 1);
        j.set(n + i, i, -1);
    }
    return j;
}

/// S^T J S == J.
inline bool is_symplectic(const ModMatrix &s) {
    if (s.rows() != s.cols() || s.rows() % 2 != 0) {
        return false;
    }
    auto j = symplectic_j(static_cast<std::uint32_t>(s.rows() / 2), s.modulus());
    return s.transpose() * j * s == j;
}

/// Affine map v -> S v + a on the discrete phase space Z_d^{2n}.
struct AffineSymplectomorphism {
    std::uint32_t n = 1;
    std::uint32_t d = 3;
    ModMatrix s{2, 2, 3};
    ModVector a{0, 0};

    static AffineSymplectomorphism identity(std::uint32_t n, std::uint32_t d) {
        return {n, d, ModMatrix::identity(2 * n, d), ModVector(2 * n, 0)};
    }

    ModVector operator()(const ModVector &v) const {
        ModVector r = s.apply(v);
        for (std::size_t i = 0; i < r.size(); i++) {
            r[i] = (r[i] + a[i]) % d;
        }
        return r;
    }

    friend bool operator==(const AffineSymplectomorphism &, const AffineSymplectomorphism &) = default;

    friend std::ostream &operator<<(std::ostream &out, const AffineSymplectomorphism &f) {
        out << "S=" << f.s << " a=[";
        for (std::size_t i = 0; i < f.a.size(); i++) {
            out << (i ? "," : "") << f.a[i];
        }
        return out << "]";
    }
};

/// Phase-space map of a generator embedded on n wires:
///   F:   (q, p) -> (-p, q)
///   R:   (q, p) -> (q, p + q - 1/2)
///   SUM: (q1, q2, p1, p2) -> (q1, q1 + q2, p1 - p2, p2)
inline AffineSymplectomorphism gate_symplectomorphism(const Gate &g, std::uint32_t n, std::uint32_t d) {
    validate_gate(g, n);
    auto f = AffineSymplectomorphism::identity(n, d);
    std::uint32_t q = g.wire, p = n + g.wire;
    switch (g.kind) {
        case GateKind::F:
            f.s.set(q, q, 0);
            f.s.set(q, p, -1);
            f.s.set(p, q, 1);
            f.s.set(p, p, 0);
            break;
        case GateKind::R:
            f.s.set(p, q, 1);
            f.a[p] = (-half(d)).value();
            break;
        case GateKind::SUM: {
            std::uint32_t qt = g.target, pt = n + g.target;
            f.s.set(qt, q, 1);
            f.s.set(p, pt, -1);
            break;
        }
        case GateKind::ID:
            break;
    }
    return f;
}

inline void check_same_space(const AffineSymplectomorphism &g, const AffineSymplectomorphism &f) {
    if (g.n != f.n || g.d != f.d) {
        throw Error(ErrorCode::dimension_mismatch, "composing maps on different phase spaces");
    }
}

/// (g o f)(v) = g(f(v)) = S_g S_f v + (S_g a_f + a_g).
inline AffineSymplectomorphism compose(const AffineSymplectomorphism &g, const AffineSymplectomorphism &f) {
    check_same_space(g, f);
    AffineSymplectomorphism r{f.n, f.d, g.s * f.s, g(f.a)};
    return r;
}

inline AffineSymplectomorphism inverse(const AffineSymplectomorphism &f) {
    auto sinv = qpath::inverse(f.s);
    if (!sinv) {
        throw Error(ErrorCode::singular_system, "affine map is not invertible");
    }
    ModVector a = sinv->apply(f.a);
    for (auto &v : a) {
        v = (f.d - v) % f.d;
    }
    return {f.n, f.d, *sinv, a};
}

/// Phi_k = phi_k o ... o phi_1 for k = 0..N (Phi_0 = identity).
inline std::vector<AffineSymplectomorphism> circuit_symplectomorphisms(const CircuitIR &ir) {
    validate(ir);
    std::vector<AffineSymplectomorphism> out{AffineSymplectomorphism::identity(ir.n, ir.d)};
    for (const auto &g : ir.gates) {
        out.push_back(compose(gate_symplectomorphism(g, ir.n, ir.d), out.back()));
    }
    return out;
}

inline AffineSymplectomorphism circuit_symplectomorphism(const CircuitIR &ir) {
    return circuit_symplectomorphisms(ir).back();
}

}  // namespace qpath

#endif
