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

#ifndef QPATH_ALGEBRA_POLYNOMIAL_HPP
#define QPATH_ALGEBRA_POLYNOMIAL_HPP

#include <cctype>
#include <cstdint>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>

#include "qpath/algebra/fields.hpp"
#include "qpath/errors.hpp"

namespace qpath {

/// Natural ordering on variable names: digit runs compare numerically, other
/// runs case-insensitively, and on a case-only tie lowercase sorts first. So
/// "q" < "Q" < "q0_2" < "q0_10" < "x1".
struct VariableOrder {
    bool operator()(std::string_view a, std::string_view b) const {
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
            bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
            if (da && db) {
                std::size_t ie = i, je = j;
                while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ie++;
                while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) je++;
                auto ra = a.substr(i, ie - i), rb = b.substr(j, je - j);
                while (ra.size() > 1 && ra[0] == '0') ra.remove_prefix(1);
                while (rb.size() > 1 && rb[0] == '0') rb.remove_prefix(1);
                if (ra.size() != rb.size()) {
                    return ra.size() < rb.size();
                }
                if (ra != rb) {
                    return ra < rb;
                }
                i = ie;
                j = je;
                continue;
            }
            char ca = static_cast<char>(std::tolower(static_cast<unsigned char>(a[i])));
            char cb = static_cast<char>(std::tolower(static_cast<unsigned char>(b[j])));
            if (ca != cb) {
                return ca < cb;
            }
            i++;
            j++;
        }
        if ((a.size() - i) != (b.size() - j)) {
            return (a.size() - i) < (b.size() - j);
        }
        // Equal up to case or leading zeros; lowercase first, then raw order.
        for (std::size_t k = 0; k < a.size() && k < b.size(); k++) {
            if (a[k] != b[k]) {
                auto ua = static_cast<unsigned char>(a[k]), ub = static_cast<unsigned char>(b[k]);
                if (std::tolower(ua) == std::tolower(ub)) {
                    return std::islower(ua) != 0;
                }
                return a[k] < b[k];
            }
        }
        return a.size() < b.size();
    }
};

/// Sparse exponent vector; only strictly positive exponents are stored.
using Monomial = std::map<std::string, std::uint32_t, VariableOrder>;
using VariableSet = std::set<std::string, VariableOrder>;

inline std::uint32_t total_degree(const Monomial &m) {
    std::uint32_t t = 0;
    for (const auto &[v, e] : m) {
        t += e;
    }
    return t;
}

inline Monomial monomial_product(const Monomial &a, const Monomial &b) {
    Monomial r = a;
    for (const auto &[v, e] : b) {
        r[v] += e;
    }
    return r;
}

/// Graded lexicographic order, highest degree first.
struct MonomialOrder {
    bool operator()(const Monomial &a, const Monomial &b) const {
        auto da = total_degree(a), db = total_degree(b);
        if (da != db) {
            return da > db;
        }
        VariableOrder less;
        auto ia = a.begin();
        auto ib = b.begin();
        while (ia != a.end() && ib != b.end()) {
            if (ia->first == ib->first) {
                if (ia->second != ib->second) {
                    return ia->second > ib->second;
                }
                ++ia;
                ++ib;
            } else {
                return less(ia->first, ib->first);
            }
        }
        return ia != a.end() && ib == b.end();
    }
};

/// Multivariate polynomial with named variables over a coefficient field.
/// Exponents are never reduced: x^d stays x^d, as formal differentiation
/// requires. Evaluation happens in the field, so it reduces automatically.
template <class Field>
class Polynomial {
   public:
    using field_type = Field;
    using element = typename Field::element;
    using TermMap = std::map<Monomial, element, MonomialOrder>;

    explicit Polynomial(Field field) : field_(std::move(field)) {
    }

    static Polynomial constant(const Field &field, const element &c) {
        Polynomial p(field);
        p.add_term(Monomial{}, c);
        return p;
    }
    static Polynomial constant(const Field &field, std::int64_t c) {
        return constant(field, field.from_int(c));
    }
    static Polynomial variable(const Field &field, const std::string &name) {
        Polynomial p(field);
        p.vars_.insert(name);
        p.terms_.emplace(Monomial{{name, 1}}, field.one());
        return p;
    }

    const Field &field() const noexcept {
        return field_;
    }
    const VariableSet &variables() const noexcept {
        return vars_;
    }
    const TermMap &terms() const noexcept {
        return terms_;
    }

    void declare(const std::string &name) {
        vars_.insert(name);
    }
    void declare(const VariableSet &names) {
        vars_.insert(names.begin(), names.end());
    }

    bool is_zero() const noexcept {
        return terms_.empty();
    }

    std::uint32_t degree() const {
        std::uint32_t d = 0;
        for (const auto &[m, c] : terms_) {
            d = std::max(d, total_degree(m));
        }
        return d;
    }

    std::uint32_t degree_in(const std::string &var) const {
        std::uint32_t d = 0;
        for (const auto &[m, c] : terms_) {
            auto it = m.find(var);
            if (it != m.end()) {
                d = std::max(d, it->second);
            }
        }
        return d;
    }

    element coefficient(const Monomial &m) const {
        auto it = terms_.find(m);
        return it == terms_.end() ? field_.zero() : it->second;
    }

    element constant_term() const {
        return coefficient(Monomial{});
    }

    Polynomial without_constant() const {
        Polynomial r = *this;
        r.terms_.erase(Monomial{});
        return r;
    }

    /// Variables that actually occur in some term.
    VariableSet support() const {
        VariableSet s;
        for (const auto &[m, c] : terms_) {
            for (const auto &[v, e] : m) {
                s.insert(v);
            }
        }
        return s;
    }

    void add_term(const Monomial &m, const element &c) {
        for (const auto &[v, e] : m) {
            vars_.insert(v);
        }
        if (field_.is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (field_.is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    Polynomial operator-() const {
        Polynomial r = *this;
        for (auto &[m, c] : r.terms_) {
            c = -c;
        }
        return r;
    }

    Polynomial &operator+=(const Polynomial &rhs) {
        vars_.insert(rhs.vars_.begin(), rhs.vars_.end());
        for (const auto &[m, c] : rhs.terms_) {
            add_term(m, c);
        }
        return *this;
    }
    Polynomial &operator-=(const Polynomial &rhs) {
        vars_.insert(rhs.vars_.begin(), rhs.vars_.end());
        for (const auto &[m, c] : rhs.terms_) {
            add_term(m, -c);
        }
        return *this;
    }
    Polynomial &operator*=(const Polynomial &rhs) {
        *this = *this * rhs;
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial &b) {
        return a += b;
    }
    friend Polynomial operator-(Polynomial a, const Polynomial &b) {
        return a -= b;
    }
    friend Polynomial operator*(const Polynomial &a, const Polynomial &b) {
        Polynomial r(a.field_);
        r.vars_ = a.vars_;
        r.vars_.insert(b.vars_.begin(), b.vars_.end());
        for (const auto &[ma, ca] : a.terms_) {
            for (const auto &[mb, cb] : b.terms_) {
                r.add_term(monomial_product(ma, mb), ca * cb);
            }
        }
        return r;
    }
    friend Polynomial operator*(Polynomial a, const element &k) {
        if (a.field_.is_zero(k)) {
            a.terms_.clear();
            return a;
        }
        for (auto &[m, c] : a.terms_) {
            c = c * k;
        }
        return a;
    }
    friend Polynomial operator*(const element &k, Polynomial a) {
        return std::move(a) * k;
    }
    friend Polynomial operator+(Polynomial a, const element &k) {
        a.add_term(Monomial{}, k);
        return a;
    }
    friend Polynomial operator-(Polynomial a, const element &k) {
        a.add_term(Monomial{}, -k);
        return a;
    }

    /// Equality of the represented polynomials; declared-but-unused
    /// variables do not participate.
    friend bool operator==(const Polynomial &a, const Polynomial &b) {
        return a.terms_ == b.terms_;
    }

    Polynomial pow(std::uint32_t e) const {
        Polynomial r = constant(field_, field_.one());
        r.vars_ = vars_;
        Polynomial base = *this;
        while (e) {
            if (e & 1) {
                r = r * base;
            }
            e >>= 1;
            if (e) {
                base = base * base;
            }
        }
        return r;
    }

    /// Formal partial derivative. Exponents multiply into the coefficient,
    /// so over Z_d a factor e = 0 mod d kills the term.
    Polynomial derivative(const std::string &var) const {
        if (!vars_.count(var)) {
            throw Error(ErrorCode::unknown_variable, "derivative with respect to undeclared variable '" + var + "'");
        }
        Polynomial r(field_);
        r.vars_ = vars_;
        for (const auto &[m, c] : terms_) {
            auto it = m.find(var);
            if (it == m.end()) {
                continue;
            }
            Monomial dm = m;
            std::uint32_t e = it->second;
            if (e == 1) {
                dm.erase(var);
            } else {
                dm[var] = e - 1;
            }
            r.add_term(dm, c * field_.from_int(e));
        }
        return r;
    }

    /// Full evaluation; every variable occurring in a term must be assigned.
    element evaluate(const std::map<std::string, element, VariableOrder> &point) const {
        element acc = field_.zero();
        for (const auto &[m, c] : terms_) {
            element t = c;
            for (const auto &[v, e] : m) {
                auto it = point.find(v);
                if (it == point.end()) {
                    throw Error(ErrorCode::unknown_variable, "no value supplied for variable '" + v + "'");
                }
                element f = it->second;
                for (std::uint32_t k = 0; k < e; k++) {
                    t = t * f;
                }
            }
            acc += t;
        }
        return acc;
    }

    /// Replaces each listed variable by a polynomial; others are kept.
    Polynomial substitute(const std::map<std::string, Polynomial, VariableOrder> &subs) const {
        Polynomial r(field_);
        for (const auto &v : vars_) {
            if (!subs.count(v)) {
                r.vars_.insert(v);
            }
        }
        for (const auto &[v, p] : subs) {
            if (vars_.count(v)) {
                r.vars_.insert(p.vars_.begin(), p.vars_.end());
            }
        }
        for (const auto &[m, c] : terms_) {
            Polynomial t = constant(field_, c);
            Monomial kept;
            for (const auto &[v, e] : m) {
                auto it = subs.find(v);
                if (it == subs.end()) {
                    kept[v] = e;
                } else {
                    t = t * it->second.pow(e);
                }
            }
            if (!kept.empty()) {
                Polynomial k(field_);
                k.add_term(kept, field_.one());
                t = t * k;
            }
            r += t;
        }
        return r;
    }

    /// Substitutes field values for a subset of the variables.
    Polynomial partial_evaluate(const std::map<std::string, element, VariableOrder> &point) const {
        std::map<std::string, Polynomial, VariableOrder> subs;
        for (const auto &[v, val] : point) {
            subs.emplace(v, constant(field_, val));
        }
        return substitute(subs);
    }

    std::string to_string() const {
        if (terms_.empty()) {
            return "0";
        }
        std::ostringstream out;
        bool first = true;
        for (const auto &[m, c] : terms_) {
            bool neg = field_.is_negative(c);
            element mag = neg ? element(-c) : c;
            if (first) {
                out << (neg ? "-" : "");
            } else {
                out << (neg ? " - " : " + ");
            }
            first = false;
            bool unit = mag == field_.one();
            if (m.empty()) {
                out << field_.to_string(mag);
                continue;
            }
            if (!unit) {
                out << field_.to_string(mag) << "*";
            }
            bool first_var = true;
            for (const auto &[v, e] : m) {
                if (!first_var) {
                    out << "*";
                }
                first_var = false;
                out << v;
                if (e > 1) {
                    out << "^" << e;
                }
            }
        }
        return out.str();
    }

    friend std::ostream &operator<<(std::ostream &out, const Polynomial &p) {
        return out << p.to_string();
    }

   private:
    Field field_;
    VariableSet vars_;
    TermMap terms_;
};

using ModPolynomial = Polynomial<PrimeField>;
using RationalPolynomial = Polynomial<RationalField>;

}  // namespace qpath

#endif
