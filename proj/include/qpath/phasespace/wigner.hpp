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

#ifndef QPATH_PHASESPACE_WIGNER_HPP
#define QPATH_PHASESPACE_WIGNER_HPP

#include <cmath>
#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "qpath/algebra/mod_matrix.hpp"
#include "qpath/algebra/modint.hpp"
#include "qpath/densesim/dense.hpp"
#include "qpath/errors.hpp"
#include "qpath/phasespace/symplectic.hpp"
#include "qpath/random.hpp"

namespace qpath {

/// Discrete Wigner function on Z_d^{2n}. The point (q, p) lives at index
/// pack(q) + d^n pack(p), with pack little-endian in the wires.
struct WignerFunction {
    std::uint32_t n = 1;
    std::uint32_t d = 3;
    std::vector<double> values;

    std::size_t configurations() const noexcept {
        return values.size() == 0 ? 0 : static_cast<std::size_t>(std::llround(std::sqrt(double(values.size()))));
    }
    std::size_t index(const ModVector &v) const {
        std::size_t iq = 0, ip = 0, stride = 1;
        for (std::uint32_t i = 0; i < n; i++) {
            iq += v[i] * stride;
            ip += v[n + i] * stride;
            stride *= d;
        }
        return iq + stride * ip;
    }
    ModVector point(std::size_t idx) const {
        std::size_t dn = configurations();
        std::size_t iq = idx % dn, ip = idx / dn;
        ModVector v(2 * n);
        for (std::uint32_t i = 0; i < n; i++) {
            v[i] = static_cast<std::uint32_t>(iq % d);
            v[n + i] = static_cast<std::uint32_t>(ip % d);
            iq /= d;
            ip /= d;
        }
        return v;
    }
    double operator()(const ModVector &v) const {
        return values[index(v)];
    }
    double total() const {
        double s = 0;
        for (double w : values) {
            s += w;
        }
        return s;
    }
};

/// W(q, p) = d^{-n} sum_x chi(-x.p) rho[q + x/2, q - x/2].
inline WignerFunction wigner_transform(const DenseMatrix &rho, std::uint32_t n, std::uint32_t d,
                                       double hermitian_tol = 1e-10) {
    std::size_t dn = hilbert_dim(n, d, std::size_t{1} << 24);
    if (rho.dim() != dn) {
        throw Error(ErrorCode::dimension_mismatch, "density matrix is not d^n dimensional");
    }
    if (!rho.is_hermitian(hermitian_tol)) {
        throw Error(ErrorCode::non_hermitian, "Wigner transform needs a Hermitian operator");
    }
    WignerFunction w{n, d, std::vector<double>(dn * dn, 0.0)};
    std::uint64_t h = half(d).value();
    std::vector<Complex> roots(d);
    for (std::uint32_t s = 0; s < d; s++) {
        roots[s] = chi(s, d);
    }
    std::vector<ModVector> configs(dn);
    for (std::size_t i = 0; i < dn; i++) {
        configs[i].resize(n);
        std::size_t r = i;
        for (std::uint32_t k = 0; k < n; k++) {
            configs[i][k] = static_cast<std::uint32_t>(r % d);
            r /= d;
        }
    }
    double norm = 1.0 / static_cast<double>(dn);
    for (std::size_t iq = 0; iq < dn; iq++) {
        const ModVector &q = configs[iq];
        // Row/column indices of rho for every shift x.
        std::vector<std::size_t> row(dn), col(dn);
        for (std::size_t ix = 0; ix < dn; ix++) {
            const ModVector &x = configs[ix];
            std::size_t r = 0, c = 0, stride = 1;
            for (std::uint32_t k = 0; k < n; k++) {
                std::uint64_t hx = h * x[k] % d;
                r += ((q[k] + hx) % d) * stride;
                c += ((q[k] + d - hx) % d) * stride;
                stride *= d;
            }
            row[ix] = r;
            col[ix] = c;
        }
        for (std::size_t ip = 0; ip < dn; ip++) {
            const ModVector &p = configs[ip];
            Complex acc = 0;
            for (std::size_t ix = 0; ix < dn; ix++) {
                std::uint64_t xp = 0;
                for (std::uint32_t k = 0; k < n; k++) {
                    xp += std::uint64_t{configs[ix][k]} * p[k];
                }
                acc += std::conj(roots[xp % d]) * rho(row[ix], col[ix]);
            }
            acc *= norm;
            if (std::abs(acc.imag()) > 1e-8) {
                throw Error(ErrorCode::non_hermitian, "Wigner value has a non-negligible imaginary part");
            }
            w.values[iq + dn * ip] = acc.real();
        }
    }
    return w;
}

/// Momentum eigenstate d^{-n/2} sum_x chi(p.x) |x>.
inline std::vector<Complex> momentum_state(const ModVector &p, std::uint32_t d) {
    std::size_t n = p.size(), dn = 1;
    for (std::size_t i = 0; i < n; i++) {
        dn *= d;
    }
    std::vector<Complex> psi(dn);
    double norm = 1.0 / std::sqrt(static_cast<double>(dn));
    for (std::size_t idx = 0; idx < dn; idx++) {
        std::size_t r = idx;
        std::uint64_t xp = 0;
        for (std::size_t k = 0; k < n; k++) {
            xp += (r % d) * p[k];
            r /= d;
        }
        psi[idx] = norm * chi(static_cast<std::int64_t>(xp % d), d);
    }
    return psi;
}

inline DenseMatrix conjugate_by(const DenseMatrix &u, const DenseMatrix &rho) {
    return u * rho * u.adjoint();
}

/// max_v |W_{U rho U^dag}(S v + a) - W_rho(v)|.
inline double covariance_error(const DenseMatrix &u, const AffineSymplectomorphism &phi, const DenseMatrix &rho) {
    auto before = wigner_transform(rho, phi.n, phi.d);
    auto after = wigner_transform(conjugate_by(u, rho), phi.n, phi.d);
    double err = 0;
    for (std::size_t idx = 0; idx < before.values.size(); idx++) {
        ModVector v = before.point(idx);
        err = std::max(err, std::abs(after(phi(v)) - before.values[idx]));
    }
    return err;
}

/// Covariance of the Wigner function under one generator embedded on n wires.
inline bool check_covariance(const Gate &g, const DenseMatrix &rho, std::uint32_t n, std::uint32_t d,
                             double tol = 1e-10) {
    return covariance_error(embedded_gate_matrix(g, n, d), gate_symplectomorphism(g, n, d), rho) <= tol;
}

namespace detail {

/// Support of the Wigner function of a pure stabilizer state: exactly d^n
/// points carrying 1/d^n each. Anything else means U was not Clifford.
inline std::set<std::size_t> stabilizer_support(const WignerFunction &w) {
    std::size_t dn = w.configurations();
    double level = 1.0 / static_cast<double>(dn);
    std::set<std::size_t> support;
    for (std::size_t idx = 0; idx < w.values.size(); idx++) {
        double v = w.values[idx];
        if (std::abs(v) < 1e-8) {
            continue;
        }
        if (std::abs(v - level) > 1e-8) {
            throw Error(ErrorCode::not_clifford, "image of a stabilizer state has a non-uniform Wigner function");
        }
        support.insert(idx);
    }
    if (support.size() != dn) {
        throw Error(ErrorCode::not_clifford, "image of a stabilizer state is not supported on a Lagrangian plane");
    }
    return support;
}

inline std::set<std::size_t> image_support(const DenseMatrix &u, const std::vector<Complex> &psi, std::uint32_t n,
                                           std::uint32_t d) {
    std::vector<Complex> out(psi.size(), Complex(0, 0));
    for (std::size_t i = 0; i < u.dim(); i++) {
        for (std::size_t j = 0; j < u.dim(); j++) {
            out[i] += u(i, j) * psi[j];
        }
    }
    return stabilizer_support(wigner_transform(DenseMatrix::projector(out), n, d));
}

}  // namespace detail

/// Recovers the unique affine symplectic (S, a) with
/// W_{U rho U^dag}(S v + a) = W_rho(v): the image of the point (q, p) is the
/// single point shared by the images of the position line through q and the
/// momentum line through p.
inline AffineSymplectomorphism recover_symplectomorphism(const DenseMatrix &u, std::uint32_t n, std::uint32_t d,
                                                         std::uint64_t seed = 1) {
    std::size_t dn = hilbert_dim(n, d, std::size_t{1} << 24);
    if (u.dim() != dn) {
        throw Error(ErrorCode::dimension_mismatch, "unitary is not d^n dimensional");
    }
    WignerFunction layout{n, d, std::vector<double>(dn * dn, 0.0)};
    auto image_of = [&](const ModVector &q, const ModVector &p) {
        auto lq = detail::image_support(u, basis_state(q, d), n, d);
        auto lp = detail::image_support(u, momentum_state(p, d), n, d);
        std::vector<std::size_t> both;
        for (auto idx : lq) {
            if (lp.count(idx)) {
                both.push_back(idx);
            }
        }
        if (both.size() != 1) {
            throw Error(ErrorCode::not_clifford, "position and momentum images do not meet in a single point");
        }
        return layout.point(both.front());
    };
    ModVector zero(n, 0);
    AffineSymplectomorphism f{n, d, ModMatrix(2 * n, 2 * n, d), image_of(zero, zero)};
    for (std::uint32_t k = 0; k < 2 * n; k++) {
        ModVector q = zero, p = zero;
        (k < n ? q[k] : p[k - n]) = 1;
        ModVector img = image_of(q, p);
        for (std::uint32_t i = 0; i < 2 * n; i++) {
            f.s.set(i, k, std::int64_t{img[i]} - f.a[i]);
        }
    }
    if (!is_symplectic(f.s)) {
        throw Error(ErrorCode::not_clifford, "recovered linear part is not symplectic");
    }
    // The map must also be right on every position line, and covariant on
    // generic states.
    for (std::size_t idx = 0; idx < dn; idx++) {
        ModVector q = unpack_configuration(idx, n, d);
        auto support = detail::image_support(u, basis_state(q, d), n, d);
        for (std::size_t ip = 0; ip < dn; ip++) {
            ModVector v = q;
            ModVector p = unpack_configuration(ip, n, d);
            v.insert(v.end(), p.begin(), p.end());
            if (!support.count(layout.index(f(v)))) {
                throw Error(ErrorCode::not_clifford, "recovered map disagrees with a position-line image");
            }
        }
    }
    Rng rng(seed);
    for (int k = 0; k < 3; k++) {
        if (covariance_error(u, f, random_density_matrix(rng, dn)) > 1e-8) {
            throw Error(ErrorCode::not_clifford, "recovered map fails the covariance check");
        }
    }
    return f;
}

}  // namespace qpath

#endif
