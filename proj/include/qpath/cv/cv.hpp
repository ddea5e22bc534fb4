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

#ifndef QPATH_CV_CV_HPP
#define QPATH_CV_CV_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "qpath/action/genfun.hpp"
#include "qpath/action/paths.hpp"
#include "qpath/algebra/fields.hpp"
#include "qpath/algebra/kahler.hpp"
#include "qpath/algebra/polynomial.hpp"
#include "qpath/circuit/circuit.hpp"
#include "qpath/errors.hpp"
#include "qpath/random.hpp"

namespace qpath {

enum class CVGateKind { F, FDAG, P, X, SUM, SUMDAG, ID };

inline std::string_view cv_mnemonic(CVGateKind k) {
    switch (k) {
        case CVGateKind::F: return "F";
        case CVGateKind::FDAG: return "FDAG";
        case CVGateKind::P: return "P";
        case CVGateKind::X: return "X";
        case CVGateKind::SUM: return "SUM";
        case CVGateKind::SUMDAG: return "SUMDAG";
        case CVGateKind::ID: return "ID";
    }
    return "?";
}

/// A continuous-variable Gaussian gate. The parameter (eta for P, tau for X)
/// is a rational polynomial: a constant, or a symbol for symbolic checks.
struct CVGate {
    CVGateKind kind = CVGateKind::ID;
    std::uint32_t wire = 0;
    std::uint32_t target = 0;
    RationalPolynomial param{RationalField()};

    static CVGate F(std::uint32_t w) {
        return {CVGateKind::F, w, 0, RationalPolynomial(RationalField())};
    }
    static CVGate FDAG(std::uint32_t w) {
        return {CVGateKind::FDAG, w, 0, RationalPolynomial(RationalField())};
    }
    static CVGate P(std::uint32_t w, RationalPolynomial eta) {
        return {CVGateKind::P, w, 0, std::move(eta)};
    }
    static CVGate P(std::uint32_t w, const Rational &eta) {
        return P(w, RationalPolynomial::constant(RationalField(), eta));
    }
    static CVGate X(std::uint32_t w, RationalPolynomial tau) {
        return {CVGateKind::X, w, 0, std::move(tau)};
    }
    static CVGate X(std::uint32_t w, const Rational &tau) {
        return X(w, RationalPolynomial::constant(RationalField(), tau));
    }
    static CVGate SUM(std::uint32_t c, std::uint32_t t) {
        return {CVGateKind::SUM, c, t, RationalPolynomial(RationalField())};
    }
    static CVGate SUMDAG(std::uint32_t c, std::uint32_t t) {
        return {CVGateKind::SUMDAG, c, t, RationalPolynomial(RationalField())};
    }
    static CVGate ID(std::uint32_t w) {
        return {CVGateKind::ID, w, 0, RationalPolynomial(RationalField())};
    }

    bool two_wire() const noexcept {
        return kind == CVGateKind::SUM || kind == CVGateKind::SUMDAG;
    }
    bool has_param() const noexcept {
        return kind == CVGateKind::P || kind == CVGateKind::X;
    }
    std::vector<std::uint32_t> wires() const {
        if (two_wire()) {
            return {wire, target};
        }
        return {wire};
    }

    std::string to_string() const {
        std::string s(cv_mnemonic(kind));
        s += " " + std::to_string(wire);
        if (two_wire()) {
            s += " " + std::to_string(target);
        }
        if (has_param()) {
            s += " " + param.to_string();
        }
        return s;
    }

    friend bool operator==(const CVGate &a, const CVGate &b) {
        return a.kind == b.kind && a.wire == b.wire && (!a.two_wire() || a.target == b.target) &&
               (!a.has_param() || a.param == b.param);
    }
};

struct CVCircuit {
    std::uint32_t n = 1;
    std::vector<CVGate> gates;

    friend bool operator==(const CVCircuit &, const CVCircuit &) = default;

    std::size_t count(CVGateKind k) const {
        std::size_t c = 0;
        for (const auto &g : gates) {
            c += g.kind == k;
        }
        return c;
    }
};

inline void validate(const CVCircuit &c) {
    if (c.n == 0) {
        throw Error(ErrorCode::invalid_circuit, "n must be positive");
    }
    for (const auto &g : c.gates) {
        for (auto w : g.wires()) {
            if (w >= c.n) {
                throw Error(ErrorCode::invalid_circuit,
                            "wire " + std::to_string(w) + " out of range for n=" + std::to_string(c.n));
            }
        }
        if (g.two_wire() && g.wire == g.target) {
            throw Error(ErrorCode::invalid_circuit, std::string(cv_mnemonic(g.kind)) + " control equals target");
        }
    }
}

/// Text form; parameters must be rational constants.
inline std::string format_cv_circuit(const CVCircuit &c) {
    std::ostringstream out;
    out << "cv\nn " << c.n << "\n";
    for (const auto &g : c.gates) {
        if (g.has_param() && g.param.degree() > 0) {
            throw Error(ErrorCode::invalid_argument, "symbolic parameters have no text form");
        }
        std::string s(cv_mnemonic(g.kind));
        s += " " + std::to_string(g.wire);
        if (g.two_wire()) {
            s += " " + std::to_string(g.target);
        }
        if (g.has_param()) {
            s += " " + rational_to_string(g.param.constant_term());
        }
        out << s << "\n";
    }
    return out.str();
}

/// Parses the CV circuit format:
///
///     cv
///     n 2
///     F 0
///     P 1 3/2
///     SUMDAG 0 1
inline CVCircuit parse_cv_circuit(std::string_view text) {
    CVCircuit c;
    bool seen_cv = false;
    std::optional<std::uint32_t> n;
    std::size_t line_no = 0, pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        pos = end + 1;
        line_no++;
        if (auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        auto toks = detail::split_tokens(line);
        if (toks.empty()) {
            if (end == text.size()) {
                break;
            }
            continue;
        }
        const auto &head = toks[0];
        auto expect_args = [&](std::size_t k) {
            if (toks.size() != k + 1) {
                std::size_t col = toks.size() > k + 1 ? toks[k + 1].column : head.column + head.text.size();
                throw ParseError(line_no, col,
                                 "'" + std::string(head.text) + "' takes " + std::to_string(k) + " argument(s)");
            }
        };
        if (!seen_cv) {
            if (head.text != "cv") {
                throw ParseError(line_no, head.column, "expected 'cv' header");
            }
            expect_args(0);
            seen_cv = true;
            continue;
        }
        if (head.text == "cv") {
            throw ParseError(line_no, head.column, "duplicate 'cv' header");
        }
        if (head.text == "n") {
            if (n) {
                throw ParseError(line_no, head.column, "duplicate 'n' header");
            }
            expect_args(1);
            std::uint64_t v = detail::parse_uint(toks[1], line_no);
            if (v == 0 || v > 0xffffu) {
                throw ParseError(line_no, toks[1].column, "n must be a positive integer");
            }
            n = static_cast<std::uint32_t>(v);
            continue;
        }
        std::optional<CVGateKind> kind;
        for (auto k : {CVGateKind::F, CVGateKind::FDAG, CVGateKind::P, CVGateKind::X, CVGateKind::SUM,
                       CVGateKind::SUMDAG, CVGateKind::ID}) {
            if (head.text == cv_mnemonic(k)) {
                kind = k;
            }
        }
        if (!kind) {
            throw ParseError(line_no, head.column, "unknown mnemonic '" + std::string(head.text) + "'");
        }
        if (!n) {
            throw ParseError(line_no, head.column, "gate before 'n' header");
        }
        auto wire_arg = [&](const detail::Token &t) {
            std::uint64_t w = detail::parse_uint(t, line_no);
            if (w >= *n) {
                throw ParseError(line_no, t.column,
                                 "wire " + std::string(t.text) + " out of range for n=" + std::to_string(*n));
            }
            return static_cast<std::uint32_t>(w);
        };
        CVGate g;
        g.kind = *kind;
        if (g.two_wire()) {
            expect_args(2);
            g.wire = wire_arg(toks[1]);
            g.target = wire_arg(toks[2]);
            if (g.wire == g.target) {
                throw ParseError(line_no, toks[2].column, "control equals target");
            }
        } else if (g.has_param()) {
            expect_args(2);
            g.wire = wire_arg(toks[1]);
            try {
                g.param = RationalPolynomial::constant(RationalField(), parse_rational(toks[2].text));
            } catch (const Error &e) {
                throw ParseError(line_no, toks[2].column, e.what());
            }
        } else {
            expect_args(1);
            g.wire = wire_arg(toks[1]);
        }
        c.gates.push_back(std::move(g));
        if (end == text.size()) {
            break;
        }
    }
    if (!seen_cv) {
        throw ParseError(line_no, 1, "missing 'cv' header");
    }
    if (!n) {
        throw ParseError(line_no, 1, "missing 'n' header");
    }
    c.n = *n;
    return c;
}

/// Affine map v -> S v + a on R^{2n} whose entries may carry symbolic gate
/// parameters.
struct RationalAffineMap {
    std::uint32_t n = 1;
    std::vector<std::vector<RationalPolynomial>> s;
    std::vector<RationalPolynomial> a;

    static RationalAffineMap identity(std::uint32_t n) {
        RationalField f;
        RationalAffineMap m{n, {}, {}};
        for (std::uint32_t i = 0; i < 2 * n; i++) {
            m.s.emplace_back(2 * n, RationalPolynomial(f));
            m.s[i][i] = RationalPolynomial::constant(f, 1);
            m.a.emplace_back(f);
        }
        return m;
    }

    /// The map as polynomial images of phase_space_coordinates(n).
    PolynomialMap<RationalField> polynomial_map() const {
        RationalField f;
        auto names = phase_space_coordinates(n);
        PolynomialMap<RationalField> m{n, {}};
        for (std::uint32_t i = 0; i < 2 * n; i++) {
            RationalPolynomial img = a[i];
            for (std::uint32_t j = 0; j < 2 * n; j++) {
                img += s[i][j] * RationalPolynomial::variable(f, names[j]);
                img.declare(names[j]);
            }
            m.images.push_back(std::move(img));
        }
        return m;
    }

    /// S^T J S == J as polynomial identities.
    bool is_symplectic() const {
        RationalField f;
        std::size_t m = 2 * n;
        auto j = [&](std::size_t r, std::size_t c) -> Rational {
            if (r < n && c == r + n) return 1;
            if (r >= n && c + n == r) return -1;
            return 0;
        };
        for (std::size_t r = 0; r < m; r++) {
            for (std::size_t c = 0; c < m; c++) {
                RationalPolynomial acc(f);
                for (std::size_t k = 0; k < m; k++) {
                    for (std::size_t l = 0; l < m; l++) {
                        Rational jkl = j(k, l);
                        if (jkl != 0) {
                            acc += s[k][r] * s[l][c] * jkl;
                        }
                    }
                }
                if (!(acc == RationalPolynomial::constant(f, j(r, c)))) {
                    return false;
                }
            }
        }
        return true;
    }

    std::vector<RationalPolynomial> apply(const std::vector<RationalPolynomial> &v) const {
        std::vector<RationalPolynomial> out;
        for (std::size_t i = 0; i < 2 * n; i++) {
            RationalPolynomial acc = a[i];
            for (std::size_t j = 0; j < 2 * n; j++) {
                acc += s[i][j] * v[j];
            }
            out.push_back(std::move(acc));
        }
        return out;
    }
};

/// (g o f): S = S_g S_f, a = S_g a_f + a_g.
inline RationalAffineMap compose(const RationalAffineMap &g, const RationalAffineMap &f) {
    if (g.n != f.n) {
        throw Error(ErrorCode::dimension_mismatch, "composing maps on different phase spaces");
    }
    RationalField field;
    RationalAffineMap r{f.n, {}, g.apply(f.a)};
    std::size_t m = 2 * f.n;
    r.s.assign(m, std::vector<RationalPolynomial>(m, RationalPolynomial(field)));
    for (std::size_t i = 0; i < m; i++) {
        for (std::size_t j = 0; j < m; j++) {
            for (std::size_t k = 0; k < m; k++) {
                r.s[i][j] += g.s[i][k] * f.s[k][j];
            }
        }
    }
    return r;
}

/// Phase-space map of a CV gate embedded on n wires:
///   F:      (q, p) -> (p, -q)          FDAG:   (q, p) -> (-p, q)
///   P(eta): (q, p) -> (q, p - eta q)   X(tau): (q, p) -> (q + tau, p)
///   SUM:    (q1, q2, p1, p2) -> (q1, q2 + q1, p1 - p2, p2)
///   SUMDAG: (q1, q2, p1, p2) -> (q1, q2 - q1, p1 + p2, p2)
inline RationalAffineMap cv_symplectomorphism(const CVGate &g, std::uint32_t n) {
    RationalField f;
    auto m = RationalAffineMap::identity(n);
    auto c = [&](std::int64_t v) { return RationalPolynomial::constant(f, v); };
    std::uint32_t q = g.wire, p = n + g.wire;
    switch (g.kind) {
        case CVGateKind::F:
        case CVGateKind::FDAG: {
            std::int64_t sign = g.kind == CVGateKind::F ? 1 : -1;
            m.s[q][q] = c(0);
            m.s[q][p] = c(sign);
            m.s[p][q] = c(-sign);
            m.s[p][p] = c(0);
            break;
        }
        case CVGateKind::P:
            m.s[p][q] = -g.param;
            break;
        case CVGateKind::X:
            m.a[q] = g.param;
            break;
        case CVGateKind::SUM:
        case CVGateKind::SUMDAG: {
            std::int64_t sign = g.kind == CVGateKind::SUM ? 1 : -1;
            m.s[g.target][q] = c(sign);
            m.s[p][n + g.target] = c(-sign);
            break;
        }
        case CVGateKind::ID:
            break;
    }
    return m;
}

/// The gate relabelled onto local wires 0 (and 1).
inline CVGate cv_local(const CVGate &g) {
    CVGate l = g;
    l.wire = 0;
    l.target = g.two_wire() ? 1 : 0;
    return l;
}

inline RationalAffineMap cv_local_symplectomorphism(const CVGate &g) {
    CVGate l = cv_local(g);
    return cv_symplectomorphism(l, l.two_wire() ? 2 : 1);
}

/// Closed-form local generating functions in (q, Q) or (q1, q2, Q1, Q2):
/// F: -qQ, FDAG: qQ, P(eta): -(eta/2) q^2, all others 0.
inline RationalPolynomial cv_generating_function(const CVGate &g) {
    RationalField f;
    auto ins = phase_space_coordinates(g.two_wire() ? 2 : 1);
    auto outs = output_coordinates(g.two_wire() ? 2 : 1);
    RationalPolynomial out(f);
    for (std::size_t i = 0; i < outs.size(); i++) {
        out.declare(ins[i]);
        out.declare(outs[i]);
    }
    auto q = RationalPolynomial::variable(f, ins[0]);
    auto big_q = RationalPolynomial::variable(f, outs[0]);
    switch (g.kind) {
        case CVGateKind::F:
            return out - q * big_q;
        case CVGateKind::FDAG:
            return out + q * big_q;
        case CVGateKind::P:
            return out - g.param * q * q * Rational(1, 2);
        default:
            return out;
    }
}

/// Whether `g` generates `map`: sum P dQ - sum p dq = dG~ exactly, and,
/// where q and Q are independent, p = -dG/dq and P = dG/dQ.
inline bool cv_check_generating_relation(const RationalAffineMap &map, const RationalPolynomial &g) {
    auto m = map.polynomial_map();
    if (!check_generating_relation(m, g)) {
        return false;
    }
    auto momenta = check_momentum_relations(m, g);
    return !momenta.has_value() || *momenta;
}

inline bool cv_check_generating_relation(const CVGate &g) {
    return cv_check_generating_relation(cv_local_symplectomorphism(g), cv_generating_function(g));
}

/// Phase S_c over the boundary symbols q0_<i> and free parameters x<l>,
/// with the final configurations B^(i)(x) as affine constraints
/// B^(i) = q_f^(i). Normalization is reported through the F and FDAG
/// counts: N = ((1-i)/(2 sqrt(pi)))^#F ((1+i)/(2 sqrt(pi)))^#FDAG.
struct CVPhaseFunctional {
    RationalPolynomial phase{RationalField()};
    std::vector<RationalPolynomial> constraints;
    std::vector<std::string> free_params;
    std::size_t f_count = 0;
    std::size_t fdag_count = 0;
};

/// Built directly from the gates' matrix elements:
///   <Q|F|q> ~ e^{-iqQ}, <Q|FDAG|q> ~ e^{iqQ}, <Q|P(eta)|q> = e^{-i eta q^2/2} delta(Q-q),
///   <Q|X(tau)|q> = delta(Q-q-tau), SUM/SUMDAG shift the target by +/- control.
inline CVPhaseFunctional cv_phase_functional(const CVCircuit &c) {
    validate(c);
    RationalField f;
    using Poly = RationalPolynomial;
    CVPhaseFunctional out;
    std::vector<Poly> cur;
    for (std::uint32_t w = 0; w < c.n; w++) {
        cur.push_back(Poly::variable(f, path_symbol(0, w)));
        out.phase.declare(path_symbol(0, w));
    }
    for (const auto &g : c.gates) {
        auto &q = cur[g.wire];
        switch (g.kind) {
            case CVGateKind::F:
            case CVGateKind::FDAG: {
                out.free_params.push_back("x" + std::to_string(out.free_params.size() + 1));
                Poly x = Poly::variable(f, out.free_params.back());
                out.phase.declare(out.free_params.back());
                if (g.kind == CVGateKind::F) {
                    out.phase = out.phase - q * x;
                    out.f_count++;
                } else {
                    out.phase = out.phase + q * x;
                    out.fdag_count++;
                }
                q = x;
                break;
            }
            case CVGateKind::P:
                out.phase = out.phase - g.param * q * q * Rational(1, 2);
                break;
            case CVGateKind::X:
                q = q + g.param;
                break;
            case CVGateKind::SUM:
                cur[g.target] = cur[g.target] + q;
                break;
            case CVGateKind::SUMDAG:
                cur[g.target] = cur[g.target] - q;
                break;
            case CVGateKind::ID:
                break;
        }
    }
    out.constraints = std::move(cur);
    return out;
}

inline std::vector<ClassicalStep<RationalField>> cv_classical_steps(const CVCircuit &c) {
    validate(c);
    std::vector<ClassicalStep<RationalField>> steps;
    for (const auto &g : c.gates) {
        steps.push_back({g.wires(), cv_local_symplectomorphism(g).polynomial_map(), cv_generating_function(g)});
    }
    return steps;
}

/// S_Phi = sum_k G_k(q_{k-1}, q_k) in path symbols q<k>_<i>.
inline RationalPolynomial cv_action_functional(const CVCircuit &c) {
    return action_from_steps(RationalField(), c.n, cv_classical_steps(c));
}

struct CVMainReport {
    RationalPolynomial action_on_paths{RationalField()};
    CVPhaseFunctional functional;
    bool phases_equal = false;
    bool constraints_equal = false;

    bool holds() const noexcept {
        return phases_equal && constraints_equal;
    }
};

/// The action functional restricted to the paths allowed by the gate maps,
/// against the phase functional built from matrix elements.
inline CVMainReport cv_verify_main_report(const CVCircuit &c) {
    RationalField f;
    auto steps = cv_classical_steps(c);
    auto paths = parametrize_paths(f, c.n, steps);
    CVMainReport r;
    r.action_on_paths = action_from_steps(f, c.n, steps).substitute(paths.substitution);
    r.functional = cv_phase_functional(c);
    r.phases_equal = r.action_on_paths == r.functional.phase;
    r.constraints_equal =
        paths.free_params == r.functional.free_params && paths.outputs.size() == r.functional.constraints.size();
    for (std::size_t i = 0; r.constraints_equal && i < paths.outputs.size(); i++) {
        r.constraints_equal = paths.outputs[i] == r.functional.constraints[i];
    }
    return r;
}

inline bool cv_verify_main(const CVCircuit &c) {
    return cv_verify_main_report(c).holds();
}

/// Phi_N = phi_N o ... o phi_1 on R^{2n}.
inline RationalAffineMap cv_circuit_symplectomorphism(const CVCircuit &c) {
    validate(c);
    auto m = RationalAffineMap::identity(c.n);
    for (const auto &g : c.gates) {
        m = compose(cv_symplectomorphism(g, c.n), m);
    }
    return m;
}

using RationalVector = std::vector<Rational>;

struct CVActClassTrajReport {
    /// False when no p0 sends q0 to qN; that is not a failure.
    bool has_trajectory = false;
    std::size_t trajectories = 0;
    /// Distinct values of S_Phi(gamma) - G_{Phi_N}(q0, qN).
    std::vector<Rational> offsets;

    bool holds() const noexcept {
        return !has_trajectory || offsets.size() == 1;
    }
};

/// Classical trajectories from q0 to qN: the particular solution for p0 and
/// that solution shifted by each kernel basis vector. Gate parameters must
/// be rational constants.
inline CVActClassTrajReport cv_verify_actclasstraj(const CVCircuit &c, const RationalVector &q0,
                                                   const RationalVector &qN) {
    validate(c);
    if (q0.size() != c.n || qN.size() != c.n) {
        throw Error(ErrorCode::dimension_mismatch, "boundary configurations need n entries");
    }
    for (const auto &g : c.gates) {
        if (g.has_param() && g.param.degree() > 0) {
            throw Error(ErrorCode::invalid_argument, "trajectory check needs numeric gate parameters");
        }
    }
    RationalField f;
    using Poly = RationalPolynomial;
    std::uint32_t n = c.n;
    auto num = [](const Poly &p) { return p.constant_term(); };

    auto total = cv_circuit_symplectomorphism(c);
    std::vector<std::vector<Rational>> b(n, std::vector<Rational>(n));
    std::vector<Poly> rhs;
    for (std::uint32_t i = 0; i < n; i++) {
        Rational r = qN[i] - num(total.a[i]);
        for (std::uint32_t j = 0; j < n; j++) {
            b[i][j] = num(total.s[i][n + j]);
            r -= num(total.s[i][j]) * q0[j];
        }
        rhs.push_back(Poly::constant(f, r));
    }
    auto sol = detail::solve_momenta(f, b, rhs);
    CVActClassTrajReport rep;
    for (const auto &res : sol.residual) {
        if (!(res.constant_term() == 0)) {
            return rep;
        }
    }
    rep.has_trajectory = true;

    std::vector<RationalVector> starts;
    RationalVector p0;
    for (const auto &p : sol.p) {
        p0.push_back(num(p));
    }
    starts.push_back(p0);
    for (const auto &k : sol.kernel) {
        RationalVector p = p0;
        for (std::uint32_t j = 0; j < n; j++) {
            p[j] += k[j];
        }
        starts.push_back(std::move(p));
    }

    auto action = cv_action_functional(c);
    auto g_total = derive_generating_function(total.polynomial_map()).g;
    std::map<std::string, Rational, VariableOrder> boundary;
    auto ins = phase_space_coordinates(n);
    auto outs = output_coordinates(n);
    for (std::uint32_t i = 0; i < n; i++) {
        boundary.emplace(ins[i], q0[i]);
        boundary.emplace(outs[i], qN[i]);
    }
    Rational g_value = g_total.evaluate(boundary);

    std::vector<RationalAffineMap> maps;
    for (const auto &g : c.gates) {
        maps.push_back(cv_symplectomorphism(g, n));
    }
    for (const auto &p : starts) {
        std::vector<Poly> v;
        for (std::uint32_t i = 0; i < n; i++) {
            v.push_back(Poly::constant(f, q0[i]));
        }
        for (std::uint32_t i = 0; i < n; i++) {
            v.push_back(Poly::constant(f, p[i]));
        }
        std::map<std::string, Rational, VariableOrder> point;
        auto record = [&](std::size_t k) {
            for (std::uint32_t w = 0; w < n; w++) {
                point.emplace(path_symbol(k, w), num(v[w]));
            }
        };
        record(0);
        for (std::size_t k = 0; k < maps.size(); k++) {
            v = maps[k].apply(v);
            record(k + 1);
        }
        for (std::uint32_t w = 0; w < n; w++) {
            if (num(v[w]) != qN[w]) {
                throw Error(ErrorCode::singular_system, "trajectory misses the final configuration");
            }
        }
        rep.trajectories++;
        Rational off = action.evaluate(point) - g_value;
        if (std::find(rep.offsets.begin(), rep.offsets.end(), off) == rep.offsets.end()) {
            rep.offsets.push_back(off);
        }
    }
    return rep;
}

/// Rational a/b with |a| <= 6 and 1 <= b <= 4.
inline Rational random_small_rational(Rng &rng) {
    auto a = static_cast<std::int64_t>(uniform_below(rng, 13)) - 6;
    auto b = static_cast<std::int64_t>(uniform_below(rng, 4)) + 1;
    return Rational(a, b);
}

inline CVGate random_cv_gate(Rng &rng, std::uint32_t n) {
    std::uint64_t kinds = n >= 2 ? 7 : 5;
    auto w = static_cast<std::uint32_t>(uniform_below(rng, n));
    switch (uniform_below(rng, kinds)) {
        case 0: return CVGate::F(w);
        case 1: return CVGate::FDAG(w);
        case 2: return CVGate::P(w, random_small_rational(rng));
        case 3: return CVGate::X(w, random_small_rational(rng));
        case 4: return CVGate::ID(w);
        default: {
            auto t = static_cast<std::uint32_t>(uniform_below(rng, n - 1));
            t += t >= w;
            return uniform_below(rng, 2) ? CVGate::SUM(w, t) : CVGate::SUMDAG(w, t);
        }
    }
}

inline CVCircuit random_cv_circuit(Rng &rng, std::uint32_t n, std::size_t max_gates) {
    CVCircuit c{n, {}};
    std::size_t count = uniform_below(rng, max_gates + 1);
    for (std::size_t i = 0; i < count; i++) {
        c.gates.push_back(random_cv_gate(rng, n));
    }
    return c;
}

}  // namespace qpath

#endif
