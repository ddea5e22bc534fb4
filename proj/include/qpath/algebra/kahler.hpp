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

#ifndef QPATH_ALGEBRA_KAHLER_HPP
#define QPATH_ALGEBRA_KAHLER_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "qpath/algebra/polynomial.hpp"
#include "qpath/errors.hpp"

namespace qpath {

/// Names of the phase-space coordinates in canonical order
/// (q^(1)..q^(n), p^(1)..p^(n)). With n == 1 the names are plain "q", "p".
inline std::vector<std::string> phase_space_coordinates(std::size_t n, const std::string &q = "q",
                                                        const std::string &p = "p") {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < n; i++) {
        names.push_back(n == 1 ? q : q + std::to_string(i + 1));
    }
    for (std::size_t i = 0; i < n; i++) {
        names.push_back(n == 1 ? p : p + std::to_string(i + 1));
    }
    return names;
}

/// A homogeneous Kahler differential form of fixed degree over the
/// polynomial algebra Field[x_1..x_m], where x_1..x_m are the differential
/// generators. Coefficient polynomials may mention further variables (e.g.
/// symbolic gate parameters); those behave as constants under d.
///
/// A term is keyed by the strictly increasing list of generator indices of
/// its wedge product; antisymmetry is absorbed into the coefficient.
template <class Field>
class KahlerForm {
   public:
    using Poly = Polynomial<Field>;
    using IndexSet = std::vector<std::uint32_t>;

    KahlerForm(Field field, std::vector<std::string> generators, std::uint32_t degree)
        : field_(std::move(field)), generators_(std::move(generators)), degree_(degree) {
        if (degree_ > generators_.size()) {
            throw Error(ErrorCode::invalid_argument, "form degree exceeds number of generators");
        }
    }

    /// The 0-form f.
    static KahlerForm function(const std::vector<std::string> &generators, const Poly &f) {
        KahlerForm r(f.field(), generators, 0);
        r.add_term({}, f);
        return r;
    }

    /// The 1-form dx_i for generator index i.
    static KahlerForm basis_differential(const Field &field, const std::vector<std::string> &generators,
                                         std::uint32_t i) {
        KahlerForm r(field, generators, 1);
        r.add_term({i}, Poly::constant(field, field.one()));
        return r;
    }

    /// df for a polynomial f: sum_j (df/dx_j) dx_j.
    static KahlerForm differential(const std::vector<std::string> &generators, const Poly &f) {
        return function(generators, f).exterior_derivative();
    }

    const Field &field() const noexcept {
        return field_;
    }
    const std::vector<std::string> &generators() const noexcept {
        return generators_;
    }
    std::uint32_t degree() const noexcept {
        return degree_;
    }
    const std::map<IndexSet, Poly> &terms() const noexcept {
        return terms_;
    }
    bool is_zero() const noexcept {
        return terms_.empty();
    }

    Poly coefficient(const IndexSet &indices) const {
        auto it = terms_.find(indices);
        return it == terms_.end() ? Poly(field_) : it->second;
    }

    /// Adds coeff * dx_{i1} ^ ... ^ dx_{ik} for an arbitrary (unsorted)
    /// index list. Repeated indices give zero.
    void add_term(IndexSet indices, const Poly &coeff) {
        if (indices.size() != degree_) {
            throw Error(ErrorCode::dimension_mismatch, "term degree does not match form degree");
        }
        for (auto i : indices) {
            if (i >= generators_.size()) {
                throw Error(ErrorCode::invalid_argument, "generator index out of range");
            }
        }
        bool negate = sort_with_sign(indices);
        for (std::size_t k = 1; k < indices.size(); k++) {
            if (indices[k] == indices[k - 1]) {
                return;
            }
        }
        if (coeff.is_zero()) {
            return;
        }
        Poly c = negate ? -coeff : coeff;
        auto it = terms_.find(indices);
        if (it == terms_.end()) {
            terms_.emplace(std::move(indices), std::move(c));
        } else {
            it->second += c;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    KahlerForm &operator+=(const KahlerForm &rhs) {
        check_compatible(rhs);
        if (rhs.degree_ != degree_) {
            throw Error(ErrorCode::dimension_mismatch, "adding forms of different degree");
        }
        for (const auto &[idx, c] : rhs.terms_) {
            add_term(idx, c);
        }
        return *this;
    }
    KahlerForm &operator-=(const KahlerForm &rhs) {
        return *this += -rhs;
    }
    KahlerForm operator-() const {
        KahlerForm r = *this;
        for (auto &[idx, c] : r.terms_) {
            c = -c;
        }
        return r;
    }
    friend KahlerForm operator+(KahlerForm a, const KahlerForm &b) {
        return a += b;
    }
    friend KahlerForm operator-(KahlerForm a, const KahlerForm &b) {
        return a -= b;
    }
    /// Multiplication by a 0-form coefficient.
    friend KahlerForm operator*(const Poly &f, const KahlerForm &w) {
        KahlerForm r(w.field_, w.generators_, w.degree_);
        for (const auto &[idx, c] : w.terms_) {
            r.add_term(idx, f * c);
        }
        return r;
    }

    friend KahlerForm wedge(const KahlerForm &a, const KahlerForm &b) {
        a.check_compatible(b);
        if (a.degree_ + b.degree_ > a.generators_.size()) {
            return KahlerForm(a.field_, a.generators_, static_cast<std::uint32_t>(a.generators_.size()));
        }
        KahlerForm r(a.field_, a.generators_, a.degree_ + b.degree_);
        for (const auto &[ia, ca] : a.terms_) {
            for (const auto &[ib, cb] : b.terms_) {
                IndexSet joined = ia;
                joined.insert(joined.end(), ib.begin(), ib.end());
                r.add_term(std::move(joined), ca * cb);
            }
        }
        return r;
    }

    friend bool operator==(const KahlerForm &a, const KahlerForm &b) {
        return a.generators_ == b.generators_ && a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// d(f dx_I) = sum_j (df/dx_j) dx_j ^ dx_I. The top-degree form maps to
    /// the zero form of the same degree.
    KahlerForm exterior_derivative() const {
        if (degree_ == generators_.size()) {
            return KahlerForm(field_, generators_, degree_);
        }
        KahlerForm r(field_, generators_, degree_ + 1);
        for (const auto &[idx, c] : terms_) {
            for (std::uint32_t j = 0; j < generators_.size(); j++) {
                if (!c.variables().count(generators_[j])) {
                    continue;
                }
                Poly dc = c.derivative(generators_[j]);
                if (dc.is_zero()) {
                    continue;
                }
                IndexSet joined{j};
                joined.insert(joined.end(), idx.begin(), idx.end());
                r.add_term(std::move(joined), dc);
            }
        }
        return r;
    }

    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream out;
        bool first = true;
        for (const auto &[idx, c] : terms_) {
            if (!first) {
                out << " + ";
            }
            first = false;
            out << "(" << c.to_string() << ")";
            for (auto i : idx) {
                out << (i == idx.front() ? " " : "^") << "d" << generators_[i];
            }
        }
        return out.str();
    }

   private:
    // Insertion sort, reporting whether the permutation was odd.
    static bool sort_with_sign(IndexSet &v) {
        bool odd = false;
        for (std::size_t i = 1; i < v.size(); i++) {
            for (std::size_t j = i; j > 0 && v[j - 1] > v[j]; j--) {
                std::swap(v[j - 1], v[j]);
                odd = !odd;
            }
        }
        return odd;
    }

    void check_compatible(const KahlerForm &other) const {
        if (other.generators_ != generators_) {
            throw Error(ErrorCode::dimension_mismatch, "forms over different generator sets");
        }
    }

    Field field_;
    std::vector<std::string> generators_;
    std::uint32_t degree_;
    std::map<IndexSet, Poly> terms_;
};

/// Recovers G with dG = eps and no constant term, integrating one generator
/// at a time and checking the result.
///
/// Throws not_closed when d(eps) != 0 and not_exact when an antiderivative
/// would need division by an exponent that vanishes in the field.
template <class Field>
Polynomial<Field> integrate_exact_one_form(const KahlerForm<Field> &eps) {
    using Poly = Polynomial<Field>;
    if (eps.degree() != 1) {
        throw Error(ErrorCode::invalid_argument, "integrate_exact_one_form expects a 1-form");
    }
    if (!eps.exterior_derivative().is_zero()) {
        throw Error(ErrorCode::not_closed, "1-form is not closed: " + eps.to_string());
    }
    const auto &gens = eps.generators();
    const Field &field = eps.field();
    Poly g(field);
    for (const auto &name : gens) {
        g.declare(name);
    }
    for (std::uint32_t j = 0; j < gens.size(); j++) {
        const std::string &x = gens[j];
        Poly residual = eps.coefficient({j});
        residual.declare(x);
        residual -= g.derivative(x);
        for (const auto &[m, c] : residual.terms()) {
            auto it = m.find(x);
            std::uint32_t e = it == m.end() ? 0 : it->second;
            auto coeff = field.divide_int(c, static_cast<std::int64_t>(e) + 1);
            if (!coeff) {
                throw Error(ErrorCode::not_exact,
                            "antiderivative of a term in d" + x + " needs division by " + std::to_string(e + 1) +
                                ", which vanishes in the coefficient field");
            }
            Monomial up = m;
            up[x] = e + 1;
            g.add_term(up, *coeff);
        }
    }
    if (!(KahlerForm<Field>::differential(gens, g) == eps)) {
        throw Error(ErrorCode::not_exact, "closed 1-form has no polynomial antiderivative: " + eps.to_string());
    }
    return g.without_constant();
}

/// Canonical symplectic form sum_i dq^(i) ^ dp^(i) on 2n generators.
template <class Field>
KahlerForm<Field> symplectic_form(const Field &field, const std::vector<std::string> &generators) {
    std::uint32_t n = static_cast<std::uint32_t>(generators.size() / 2);
    KahlerForm<Field> omega(field, generators, 2);
    for (std::uint32_t i = 0; i < n; i++) {
        omega.add_term({i, n + i}, Polynomial<Field>::constant(field, field.one()));
    }
    return omega;
}

/// Canonical 1-form sum_i p^(i) dq^(i).
template <class Field>
KahlerForm<Field> canonical_one_form(const Field &field, const std::vector<std::string> &generators) {
    std::uint32_t n = static_cast<std::uint32_t>(generators.size() / 2);
    KahlerForm<Field> theta(field, generators, 1);
    for (std::uint32_t i = 0; i < n; i++) {
        theta.add_term({i}, Polynomial<Field>::variable(field, generators[n + i]));
    }
    return theta;
}

/// Antisymmetric matrix M of a constant-coefficient 2-form, with
/// w = sum_{i<j} M[i][j] dx_i ^ dx_j and M[j][i] = -M[i][j].
template <class Field>
std::vector<std::vector<typename Field::element>> two_form_matrix(const KahlerForm<Field> &w) {
    if (w.degree() != 2) {
        throw Error(ErrorCode::invalid_argument, "two_form_matrix expects a 2-form");
    }
    const Field &field = w.field();
    std::size_t m = w.generators().size();
    std::vector<std::vector<typename Field::element>> mat(m, std::vector<typename Field::element>(m, field.zero()));
    for (const auto &[idx, c] : w.terms()) {
        if (c.degree() > 0) {
            throw Error(ErrorCode::invalid_argument, "two_form_matrix needs constant coefficients");
        }
        auto v = c.constant_term();
        mat[idx[0]][idx[1]] = v;
        mat[idx[1]][idx[0]] = -v;
    }
    return mat;
}

}  // namespace qpath

#endif
