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

#ifndef QPATH_ACTION_GENFUN_HPP
#define QPATH_ACTION_GENFUN_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpath/algebra/kahler.hpp"
#include "qpath/algebra/polynomial.hpp"
#include "qpath/errors.hpp"

namespace qpath {

/// Names of the output configuration coordinates: "Q" for n == 1, else
/// "Q1".."Qn".
inline std::vector<std::string> output_coordinates(std::size_t n) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; i++) {
        names.push_back(n == 1 ? "Q" : "Q" + std::to_string(i + 1));
    }
    return names;
}

/// A phase-space map written out as polynomials: images[i] is Q^(i) for
/// i < n and P^(i-n) otherwise, in the coordinates
/// phase_space_coordinates(n). Coefficients may mention parameters.
template <class Field>
struct PolynomialMap {
    using Poly = Polynomial<Field>;

    std::size_t n = 1;
    std::vector<Poly> images;

    std::vector<std::string> inputs() const {
        return phase_space_coordinates(n);
    }
    const Poly &q_image(std::size_t i) const {
        return images[i];
    }
    const Poly &p_image(std::size_t i) const {
        return images[n + i];
    }

    /// Linear-in-p coefficient block dQ/dp; entries are required to be
    /// field constants.
    std::vector<std::vector<typename Field::element>> momentum_block() const {
        auto names = inputs();
        const Field &field = images.front().field();
        std::vector<std::vector<typename Field::element>> b(n, std::vector<typename Field::element>(n, field.zero()));
        for (std::size_t i = 0; i < n; i++) {
            Poly qi = q_image(i);
            for (const auto &v : names) {
                qi.declare(v);
            }
            for (std::size_t j = 0; j < n; j++) {
                Poly c = qi.derivative(names[n + j]);
                if (c.degree() > 0) {
                    throw Error(ErrorCode::invalid_argument,
                                "configuration image " + qi.to_string() + " is not affine in the momenta with constant coefficients");
                }
                b[i][j] = c.constant_term();
            }
        }
        return b;
    }

    /// Q^(i) with every momentum set to zero.
    Poly q_image_without_momenta(std::size_t i) const {
        auto names = inputs();
        const Field &field = images.front().field();
        std::map<std::string, typename Field::element, VariableOrder> zero;
        for (std::size_t j = 0; j < n; j++) {
            zero.emplace(names[n + j], field.zero());
        }
        return q_image(i).partial_evaluate(zero);
    }
};

/// eps = sum_i P^(i) dQ^(i) - sum_i p^(i) dq^(i) in the input coordinates.
template <class Field>
KahlerForm<Field> generating_one_form(const PolynomialMap<Field> &m) {
    auto gens = m.inputs();
    const Field &field = m.images.front().field();
    KahlerForm<Field> eps(field, gens, 1);
    for (std::size_t i = 0; i < m.n; i++) {
        eps = eps + m.p_image(i) * KahlerForm<Field>::differential(gens, m.q_image(i));
        eps = eps - Polynomial<Field>::variable(field, gens[m.n + i]) *
                        KahlerForm<Field>::basis_differential(field, gens, static_cast<std::uint32_t>(i));
    }
    return eps;
}

namespace detail {

/// Solves B p = rhs for p over a field, with polynomial right-hand sides.
/// Free momenta are set to zero; rows without a pivot are returned as
/// residuals (relations between q and Q when the right-hand sides are
/// symbolic). Also returns a basis of ker B.
template <class Field>
struct MomentumSolution {
    std::vector<Polynomial<Field>> p;
    std::vector<std::vector<typename Field::element>> kernel;
    /// Reduced right-hand sides of the rows without a pivot.
    std::vector<Polynomial<Field>> residual;
};

template <class Field>
MomentumSolution<Field> solve_momenta(const Field &field, std::vector<std::vector<typename Field::element>> b,
                                      std::vector<Polynomial<Field>> rhs) {
    using Poly = Polynomial<Field>;
    std::size_t n = b.size();
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < n; col++) {
        std::size_t piv = row;
        while (piv < n && field.is_zero(b[piv][col])) {
            piv++;
        }
        if (piv == n) {
            continue;
        }
        std::swap(b[piv], b[row]);
        std::swap(rhs[piv], rhs[row]);
        auto inv = *field.divide(field.one(), b[row][col]);
        for (auto &e : b[row]) {
            e = e * inv;
        }
        rhs[row] = rhs[row] * inv;
        for (std::size_t r = 0; r < n; r++) {
            if (r == row || field.is_zero(b[r][col])) {
                continue;
            }
            auto factor = b[r][col];
            for (std::size_t j = 0; j < n; j++) {
                b[r][j] = b[r][j] - factor * b[row][j];
            }
            rhs[r] = rhs[r] - rhs[row] * factor;
        }
        pivots.push_back(col);
        row++;
    }
    MomentumSolution<Field> out;
    out.p.assign(n, Poly(field));
    std::vector<bool> is_pivot(n, false);
    for (std::size_t r = 0; r < pivots.size(); r++) {
        out.p[pivots[r]] = rhs[r];
        is_pivot[pivots[r]] = true;
    }
    for (std::size_t r = pivots.size(); r < n; r++) {
        out.residual.push_back(rhs[r]);
    }
    for (std::size_t f = 0; f < n; f++) {
        if (is_pivot[f]) {
            continue;
        }
        std::vector<typename Field::element> k(n, field.zero());
        k[f] = field.one();
        for (std::size_t r = 0; r < pivots.size(); r++) {
            k[pivots[r]] = field.zero() - b[r][f];
        }
        out.kernel.push_back(std::move(k));
    }
    return out;
}

}  // namespace detail

/// Generating function of a symplectic map in both forms: G~(q, p) with
/// dG~ = sum P dQ - sum p dq, and G(q, Q) obtained by eliminating the
/// momenta through Q = Q(q, p). Both have no constant term.
template <class Field>
struct GeneratingFunction {
    Polynomial<Field> g_tilde;
    Polynomial<Field> g;
    std::size_t arity = 1;
};

template <class Field>
GeneratingFunction<Field> derive_generating_function(const PolynomialMap<Field> &m) {
    using Poly = Polynomial<Field>;
    const Field &field = m.images.front().field();
    auto names = m.inputs();
    auto outs = output_coordinates(m.n);
    Poly g_tilde = integrate_exact_one_form(generating_one_form(m));

    std::vector<Poly> rhs;
    for (std::size_t i = 0; i < m.n; i++) {
        rhs.push_back(Poly::variable(field, outs[i]) - m.q_image_without_momenta(i));
    }
    auto sol = detail::solve_momenta(field, m.momentum_block(), rhs);

    // G~ must be constant along the fibres of (q, p) -> (q, Q); otherwise the
    // elimination below would depend on the choice of free momenta.
    std::map<std::string, Poly, VariableOrder> shift;
    for (std::size_t j = 0; j < m.n; j++) {
        Poly pj = Poly::variable(field, names[m.n + j]);
        for (std::size_t k = 0; k < sol.kernel.size(); k++) {
            pj = pj + Poly::variable(field, "fibre" + std::to_string(k)) * sol.kernel[k][j];
        }
        shift.emplace(names[m.n + j], pj);
    }
    if (!(g_tilde.substitute(shift) == g_tilde)) {
        throw Error(ErrorCode::singular_system, "generating function varies along the fibres of (q, Q)");
    }

    std::map<std::string, Poly, VariableOrder> subs;
    for (std::size_t j = 0; j < m.n; j++) {
        subs.emplace(names[m.n + j], sol.p[j]);
    }
    Poly g = g_tilde.substitute(subs).without_constant();
    Poly clean(field);
    for (std::size_t i = 0; i < m.n; i++) {
        clean.declare(names[i]);
        clean.declare(outs[i]);
    }
    for (const auto &[mono, c] : g.terms()) {
        clean.add_term(mono, c);
    }
    return {g_tilde, clean, m.n};
}

/// G with each Q^(i) replaced by the map's image, as a function of (q, p).
template <class Field>
Polynomial<Field> pull_back_to_phase_space(const PolynomialMap<Field> &m, const Polynomial<Field> &g) {
    auto outs = output_coordinates(m.n);
    std::map<std::string, Polynomial<Field>, VariableOrder> subs;
    for (std::size_t i = 0; i < m.n; i++) {
        subs.emplace(outs[i], m.q_image(i));
    }
    return g.substitute(subs);
}

/// Whether sum P dQ - sum p dq = d(G(q, Q(q, p))) identically.
template <class Field>
bool check_generating_relation(const PolynomialMap<Field> &m, const Polynomial<Field> &g) {
    auto gens = m.inputs();
    return generating_one_form(m) == KahlerForm<Field>::differential(gens, pull_back_to_phase_space(m, g));
}

/// p^(i) = -dG/dq^(i) and P^(i) = dG/dQ^(i), with Q = Q(q, p) substituted
/// afterwards. Only meaningful when q and Q are independent, i.e. dQ/dp is
/// invertible; returns nullopt otherwise.
template <class Field>
std::optional<bool> check_momentum_relations(const PolynomialMap<Field> &m, const Polynomial<Field> &g) {
    using Poly = Polynomial<Field>;
    const Field &field = m.images.front().field();
    auto b = m.momentum_block();
    std::vector<Poly> zero(m.n, Poly(field));
    if (!detail::solve_momenta(field, b, zero).kernel.empty()) {
        return std::nullopt;
    }
    auto names = m.inputs();
    auto outs = output_coordinates(m.n);
    Poly gg = g;
    for (std::size_t i = 0; i < m.n; i++) {
        gg.declare(names[i]);
        gg.declare(outs[i]);
    }
    for (std::size_t i = 0; i < m.n; i++) {
        Poly p_expr = pull_back_to_phase_space(m, -gg.derivative(names[i]));
        Poly big_p_expr = pull_back_to_phase_space(m, gg.derivative(outs[i]));
        if (!(p_expr == Poly::variable(field, names[m.n + i])) || !(big_p_expr == m.p_image(i))) {
            return false;
        }
    }
    return true;
}

}  // namespace qpath

#endif
