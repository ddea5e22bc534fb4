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

#ifndef QPATH_PATHSUM_GAUSS_HPP
#define QPATH_PATHSUM_GAUSS_HPP

#include <cstdint>
#include <limits>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "qpath/algebra/mod_matrix.hpp"
#include "qpath/algebra/polynomial.hpp"
#include "qpath/errors.hpp"

namespace qpath {

/// f(t) = t^T A t + b.t + c over Z_d^m with A symmetric (off-diagonal
/// entries carry half of the corresponding cross-term coefficient).
struct QuadraticForm {
    ModMatrix a;
    ModVector b;
    std::uint32_t c = 0;

    std::size_t size() const noexcept {
        return b.size();
    }
};

/// Splits a polynomial of degree <= 2 in `vars` into symmetric matrix,
/// linear and constant parts.
inline QuadraticForm quadratic_form_of(const ModPolynomial &poly, const std::vector<std::string> &vars) {
    std::uint32_t d = poly.field().modulus();
    std::map<std::string, std::size_t, VariableOrder> index;
    for (std::size_t i = 0; i < vars.size(); i++) {
        index.emplace(vars[i], i);
    }
    QuadraticForm f{ModMatrix(vars.size(), vars.size(), d), ModVector(vars.size(), 0), 0};
    ModInt h = half(d);
    auto lookup = [&](const std::string &v) {
        auto it = index.find(v);
        if (it == index.end()) {
            throw Error(ErrorCode::unknown_variable, "phase mentions unexpected variable '" + v + "'");
        }
        return it->second;
    };
    auto bump = [](ModMatrix &m, std::size_t i, std::size_t j, ModInt v) {
        m.set(i, j, (m.at(i, j) + v).value());
    };
    for (const auto &[m, c] : poly.terms()) {
        switch (total_degree(m)) {
            case 0:
                f.c = (ModInt(f.c, d) + c).value();
                break;
            case 1: {
                auto i = lookup(m.begin()->first);
                f.b[i] = (ModInt(f.b[i], d) + c).value();
                break;
            }
            case 2: {
                if (m.size() == 1) {
                    auto i = lookup(m.begin()->first);
                    bump(f.a, i, i, c);
                } else {
                    auto i = lookup(m.begin()->first);
                    auto j = lookup(std::next(m.begin())->first);
                    bump(f.a, i, j, c * h);
                    bump(f.a, j, i, c * h);
                }
                break;
            }
            default:
                throw Error(ErrorCode::invalid_argument, "phase polynomial has degree above 2");
        }
    }
    return f;
}

/// Pulls f back along x = particular + sum_j t_j basis_j.
inline QuadraticForm restrict_form(const QuadraticForm &f, const AffineSolution &sol) {
    std::uint32_t d = f.a.modulus();
    const ModVector &p = *sol.particular;
    std::size_t l = f.size(), m = sol.dimension();
    ModMatrix basis(l, m, d);
    for (std::size_t j = 0; j < m; j++) {
        for (std::size_t i = 0; i < l; i++) {
            basis.set(i, j, sol.basis[j][i]);
        }
    }
    QuadraticForm r{basis.transpose() * f.a * basis, ModVector(m, 0), 0};
    ModVector ap = f.a.apply(p);
    ModVector lin(l);
    for (std::size_t i = 0; i < l; i++) {
        lin[i] = reduce_mod(2 * std::int64_t{ap[i]} + f.b[i], d);
    }
    r.b = basis.transpose().apply(lin);
    std::int64_t c = f.c;
    for (std::size_t i = 0; i < l; i++) {
        c += std::int64_t{p[i]} * ((ap[i] + std::int64_t{f.b[i]}) % d);
        c %= d;
    }
    r.c = static_cast<std::uint32_t>(c);
    return r;
}

namespace detail {

/// #{u in Z_d : a u^2 = s} for every s, cached per (d, a).
inline const std::vector<std::int64_t> &square_histogram(std::uint32_t d, std::uint32_t a) {
    static std::mutex mu;
    static std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<std::int64_t>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto [it, inserted] = cache.try_emplace({d, a});
    if (inserted) {
        it->second.assign(d, 0);
        for (std::uint64_t u = 0; u < d; u++) {
            it->second[(u * u % d) * a % d]++;
        }
    }
    return it->second;
}

inline std::vector<std::int64_t> convolve(const std::vector<std::int64_t> &x, const std::vector<std::int64_t> &y) {
    std::size_t d = x.size();
    std::vector<std::int64_t> r(d, 0);
    for (std::size_t s = 0; s < d; s++) {
        if (x[s] == 0) {
            continue;
        }
        for (std::size_t t = 0; t < d; t++) {
            r[(s + t) % d] += x[s] * y[t];
        }
    }
    return r;
}

}  // namespace detail

/// Histogram counts[s] = #{t in Z_d^m : f(t) = s}, computed without
/// enumeration by symmetric completion of squares. Each step is an affine
/// change of variables, so the histogram is preserved exactly.
inline std::vector<std::int64_t> quadratic_form_histogram(QuadraticForm f) {
    std::uint32_t d = f.a.modulus();
    std::size_t m = f.size();
    {
        std::uint64_t total = 1;
        for (std::size_t k = 0; k < m; k++) {
            if (total > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()) / d) {
                throw Error(ErrorCode::cap_exceeded, "path count d^" + std::to_string(m) + " overflows 64-bit counts");
            }
            total *= d;
        }
    }
    ModMatrix &a = f.a;
    ModVector &b = f.b;
    ModInt c(f.c, d);
    std::vector<bool> active(m, true);
    std::vector<std::int64_t> hist(d, 0);
    hist[0] = 1;

    auto eliminate = [&](std::size_t j) {
        ModInt ajj = a.at(j, j);
        ModInt inv = ajj.inverse();
        ModInt bj(b[j], d);
        for (std::size_t k = 0; k < m; k++) {
            if (!active[k] || k == j) {
                continue;
            }
            ModInt ajk = a.at(j, k);
            if (ajk.is_zero()) {
                continue;
            }
            for (std::size_t l = 0; l < m; l++) {
                if (!active[l] || l == j) {
                    continue;
                }
                a.set(k, l, (a.at(k, l) - ajk * a.at(j, l) * inv).value());
            }
            b[k] = (ModInt(b[k], d) - bj * ajk * inv).value();
        }
        c -= bj * bj * (ajj * 4).inverse();
        active[j] = false;
        hist = detail::convolve(hist, detail::square_histogram(d, ajj.value()));
    };

    for (;;) {
        std::size_t pivot = m;
        for (std::size_t j = 0; j < m && pivot == m; j++) {
            if (active[j] && a(j, j) != 0) {
                pivot = j;
            }
        }
        if (pivot != m) {
            eliminate(pivot);
            continue;
        }
        std::size_t pj = m, pk = m;
        for (std::size_t j = 0; j < m && pj == m; j++) {
            for (std::size_t k = j + 1; k < m; k++) {
                if (active[j] && active[k] && a(j, k) != 0) {
                    pj = j;
                    pk = k;
                    break;
                }
            }
        }
        if (pj == m) {
            break;
        }
        // Hyperbolic pair: t_j = s_j + s_k makes the (k,k) entry 2 a_jk.
        for (std::size_t i = 0; i < m; i++) {
            a.set(i, pk, (a.at(i, pk) + a.at(i, pj)).value());
        }
        for (std::size_t i = 0; i < m; i++) {
            a.set(pk, i, (a.at(pk, i) + a.at(pj, i)).value());
        }
        b[pk] = (ModInt(b[pk], d) + ModInt(b[pj], d)).value();
    }

    // Remaining variables appear at most linearly.
    for (std::size_t j = 0; j < m; j++) {
        if (!active[j]) {
            continue;
        }
        if (b[j] != 0) {
            hist = detail::convolve(hist, std::vector<std::int64_t>(d, 1));
        } else {
            for (auto &h : hist) {
                h *= d;
            }
        }
    }
    std::vector<std::int64_t> out(d, 0);
    for (std::uint32_t s = 0; s < d; s++) {
        out[(s + c.value()) % d] = hist[s];
    }
    return out;
}

/// Histogram of `poly` (degree <= 2 in `vars`) over the solution set `sol`.
inline std::vector<std::int64_t> phase_histogram_gauss(const ModPolynomial &poly, const std::vector<std::string> &vars,
                                                       const AffineSolution &sol) {
    std::uint32_t d = poly.field().modulus();
    if (sol.empty()) {
        return std::vector<std::int64_t>(d, 0);
    }
    return quadratic_form_histogram(restrict_form(quadratic_form_of(poly, vars), sol));
}

}  // namespace qpath

#endif
