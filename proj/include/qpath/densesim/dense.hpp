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

#ifndef QPATH_DENSESIM_DENSE_HPP
#define QPATH_DENSESIM_DENSE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qpath/algebra/mod_matrix.hpp"
#include "qpath/algebra/modint.hpp"
#include "qpath/circuit/circuit.hpp"
#include "qpath/errors.hpp"

namespace qpath {

using Complex = std::complex<double>;

/// Largest Hilbert-space dimension the dense oracle will materialize as a
/// full matrix (3^8).
inline constexpr std::size_t kDefaultDenseDimCap = 6561;

/// Square complex matrix, row-major. Basis states are packed little-endian
/// in the wires: index = sum_i q^(i) d^i.
class DenseMatrix {
   public:
    DenseMatrix() = default;
    explicit DenseMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, Complex(0, 0)) {
    }

    static DenseMatrix identity(std::size_t dim) {
        DenseMatrix m(dim);
        for (std::size_t i = 0; i < dim; i++) {
            m(i, i) = 1;
        }
        return m;
    }
    static DenseMatrix projector(const std::vector<Complex> &psi) {
        DenseMatrix m(psi.size());
        for (std::size_t i = 0; i < psi.size(); i++) {
            for (std::size_t j = 0; j < psi.size(); j++) {
                m(i, j) = psi[i] * std::conj(psi[j]);
            }
        }
        return m;
    }

    std::size_t dim() const noexcept {
        return dim_;
    }
    Complex &operator()(std::size_t i, std::size_t j) {
        return data_[i * dim_ + j];
    }
    const Complex &operator()(std::size_t i, std::size_t j) const {
        return data_[i * dim_ + j];
    }

    friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
        if (a.dim_ != b.dim_) {
            throw Error(ErrorCode::dimension_mismatch, "dense product shape mismatch");
        }
        DenseMatrix r(a.dim_);
        for (std::size_t i = 0; i < a.dim_; i++) {
            for (std::size_t k = 0; k < a.dim_; k++) {
                Complex aik = a(i, k);
                if (aik == Complex(0, 0)) {
                    continue;
                }
                for (std::size_t j = 0; j < a.dim_; j++) {
                    r(i, j) += aik * b(k, j);
                }
            }
        }
        return r;
    }
    friend DenseMatrix operator*(Complex k, DenseMatrix a) {
        for (auto &v : a.data_) {
            v *= k;
        }
        return a;
    }

    DenseMatrix adjoint() const {
        DenseMatrix r(dim_);
        for (std::size_t i = 0; i < dim_; i++) {
            for (std::size_t j = 0; j < dim_; j++) {
                r(j, i) = std::conj((*this)(i, j));
            }
        }
        return r;
    }

    Complex trace() const {
        Complex t = 0;
        for (std::size_t i = 0; i < dim_; i++) {
            t += (*this)(i, i);
        }
        return t;
    }

    double max_abs_diff(const DenseMatrix &other) const {
        if (other.dim_ != dim_) {
            throw Error(ErrorCode::dimension_mismatch, "comparing matrices of different size");
        }
        double m = 0;
        for (std::size_t k = 0; k < data_.size(); k++) {
            m = std::max(m, std::abs(data_[k] - other.data_[k]));
        }
        return m;
    }

    bool is_unitary(double tol = 1e-10) const {
        return (adjoint() * *this).max_abs_diff(identity(dim_)) <= tol;
    }
    bool is_hermitian(double tol = 1e-10) const {
        return adjoint().max_abs_diff(*this) <= tol;
    }

    std::vector<Complex> column(std::size_t j) const {
        std::vector<Complex> c(dim_);
        for (std::size_t i = 0; i < dim_; i++) {
            c[i] = (*this)(i, j);
        }
        return c;
    }

   private:
    std::size_t dim_ = 0;
    std::vector<Complex> data_;
};

/// Local matrix of a generator on d^arity dimensions. For SUM the local
/// index is q_control + d * q_target.
inline DenseMatrix gate_matrix(const Gate &g, std::uint32_t d) {
    switch (g.kind) {
        case GateKind::F: {
            DenseMatrix m(d);
            double norm = 1.0 / std::sqrt(static_cast<double>(d));
            for (std::uint32_t out = 0; out < d; out++) {
                for (std::uint32_t in = 0; in < d; in++) {
                    m(out, in) = norm * chi(std::int64_t{out} * in, d);
                }
            }
            return m;
        }
        case GateKind::R: {
            DenseMatrix m(d);
            ModInt h = half(d);
            for (std::uint32_t q = 0; q < d; q++) {
                ModInt mq(q, d);
                m(q, q) = chi(h * mq * (mq - ModInt(1, d)));
            }
            return m;
        }
        case GateKind::SUM: {
            DenseMatrix m(std::size_t{d} * d);
            for (std::uint32_t c = 0; c < d; c++) {
                for (std::uint32_t t = 0; t < d; t++) {
                    m(c + d * ((c + t) % d), c + d * t) = 1;
                }
            }
            return m;
        }
        case GateKind::ID:
            return DenseMatrix::identity(d);
    }
    throw Error(ErrorCode::invalid_argument, "unknown gate kind");
}

inline std::size_t hilbert_dim(std::uint32_t n, std::uint32_t d, std::size_t cap) {
    std::size_t dim = 1;
    for (std::uint32_t i = 0; i < n; i++) {
        if (dim > cap / d) {
            throw Error(ErrorCode::cap_exceeded, "dense dimension " + std::to_string(d) + "^" + std::to_string(n) +
                                                     " exceeds the cap of " + std::to_string(cap));
        }
        dim *= d;
    }
    return dim;
}

/// Applies a local matrix on `wires` (first wire is the fastest local digit)
/// to a state on n wires.
inline void apply_local(std::vector<Complex> &state, const DenseMatrix &m, const std::vector<std::uint32_t> &wires,
                        std::uint32_t n, std::uint32_t d) {
    std::vector<std::size_t> stride(n);
    std::size_t s = 1;
    for (std::uint32_t i = 0; i < n; i++) {
        stride[i] = s;
        s *= d;
    }
    if (state.size() != s) {
        throw Error(ErrorCode::dimension_mismatch, "state size does not match d^n");
    }
    std::size_t local = m.dim();
    std::vector<std::size_t> offset(local, 0);
    for (std::size_t k = 0; k < local; k++) {
        std::size_t r = k;
        for (auto w : wires) {
            offset[k] += (r % d) * stride[w];
            r /= d;
        }
    }
    std::vector<Complex> in(local), out(local);
    for (std::size_t base = 0; base < s; base++) {
        bool is_base = true;
        for (auto w : wires) {
            if ((base / stride[w]) % d != 0) {
                is_base = false;
                break;
            }
        }
        if (!is_base) {
            continue;
        }
        for (std::size_t k = 0; k < local; k++) {
            in[k] = state[base + offset[k]];
        }
        for (std::size_t i = 0; i < local; i++) {
            Complex acc = 0;
            for (std::size_t j = 0; j < local; j++) {
                acc += m(i, j) * in[j];
            }
            out[i] = acc;
        }
        for (std::size_t k = 0; k < local; k++) {
            state[base + offset[k]] = out[k];
        }
    }
}

inline std::vector<Complex> basis_state(const ModVector &q, std::uint32_t d) {
    std::size_t dim = 1, idx = 0, stride = 1;
    for (auto v : q) {
        idx += v * stride;
        stride *= d;
        dim *= d;
    }
    std::vector<Complex> psi(dim, Complex(0, 0));
    psi[idx] = 1;
    return psi;
}

inline std::vector<Complex> apply_circuit(const CircuitIR &ir, std::vector<Complex> state) {
    validate(ir);
    for (const auto &g : ir.gates) {
        apply_local(state, gate_matrix(g, ir.d), g.wires(), ir.n, ir.d);
    }
    return state;
}

/// Dense reference value of <qf| U |q0>.
inline Complex dense_amplitude(const CircuitIR &ir, const ModVector &q0, const ModVector &qf,
                               std::size_t cap = kDefaultDenseDimCap) {
    hilbert_dim(ir.n, ir.d, cap);
    auto psi = apply_circuit(ir, basis_state(q0, ir.d));
    std::size_t idx = 0, stride = 1;
    for (auto v : qf) {
        idx += v * stride;
        stride *= ir.d;
    }
    return psi.at(idx);
}

/// U = U_N ... U_1 with each gate embedded next to identities.
inline DenseMatrix circuit_unitary(const CircuitIR &ir, std::size_t cap = kDefaultDenseDimCap) {
    validate(ir);
    std::size_t dim = hilbert_dim(ir.n, ir.d, cap);
    DenseMatrix u(dim);
    for (std::size_t j = 0; j < dim; j++) {
        std::vector<Complex> psi(dim, Complex(0, 0));
        psi[j] = 1;
        psi = apply_circuit(ir, std::move(psi));
        for (std::size_t i = 0; i < dim; i++) {
            u(i, j) = psi[i];
        }
    }
    return u;
}

/// Gate g acting on n wires as a full d^n matrix.
inline DenseMatrix embedded_gate_matrix(const Gate &g, std::uint32_t n, std::uint32_t d) {
    return circuit_unitary(CircuitIR{d, n, {g}});
}

struct BalanceReport {
    bool balanced = false;
    double magnitude = 0;
    std::size_t support_size = 0;
};

/// Whether all entries above `tol` in magnitude share one magnitude.
inline BalanceReport is_balanced(const DenseMatrix &u, double tol = 1e-8) {
    BalanceReport r;
    r.balanced = true;
    for (std::size_t i = 0; i < u.dim(); i++) {
        for (std::size_t j = 0; j < u.dim(); j++) {
            double a = std::abs(u(i, j));
            if (a <= tol) {
                continue;
            }
            if (r.support_size == 0) {
                r.magnitude = a;
            } else if (std::abs(a - r.magnitude) > tol) {
                r.balanced = false;
            }
            r.support_size++;
        }
    }
    return r;
}

}  // namespace qpath

#endif
