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

#ifndef QPATH_ALGEBRA_FIELDS_HPP
#define QPATH_ALGEBRA_FIELDS_HPP

// Coefficient fields for Polynomial and KahlerForm. A field object is a
// small value carrying whatever context its elements need (the modulus for
// Z_d, nothing for Q) together with the handful of operations the generic
// code cannot express through element operators alone.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qpath/algebra/modint.hpp"
#include "qpath/errors.hpp"

namespace qpath {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "a", "-a" or "a/b" into an exact rational.
inline Rational parse_rational(std::string_view text) {
    auto bad = [&]() { return Error(ErrorCode::invalid_argument, "malformed rational '" + std::string(text) + "'"); };
    if (text.empty()) {
        throw bad();
    }
    auto parse_int = [&](std::string_view s) {
        std::size_t i = 0;
        if (!s.empty() && (s[0] == '-' || s[0] == '+')) {
            i = 1;
        }
        if (i == s.size()) {
            throw bad();
        }
        for (std::size_t k = i; k < s.size(); k++) {
            if (s[k] < '0' || s[k] > '9') {
                throw bad();
            }
        }
        return boost::multiprecision::cpp_int(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    auto num = parse_int(text.substr(0, slash));
    auto den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw Error(ErrorCode::division_by_zero, "zero denominator in '" + std::string(text) + "'");
    }
    return Rational(num, den);
}

inline std::string rational_to_string(const Rational &r) {
    if (boost::multiprecision::denominator(r) == 1) {
        return boost::multiprecision::numerator(r).str();
    }
    return boost::multiprecision::numerator(r).str() + "/" + boost::multiprecision::denominator(r).str();
}

class PrimeField {
   public:
    using element = ModInt;

    explicit PrimeField(std::uint32_t modulus) : modulus_(modulus) {
    }

    std::uint32_t modulus() const noexcept {
        return modulus_;
    }
    element zero() const {
        return ModInt(0, modulus_);
    }
    element one() const {
        return ModInt(1, modulus_);
    }
    element from_int(std::int64_t v) const {
        return ModInt(v, modulus_);
    }
    bool is_zero(const element &e) const {
        return e.is_zero();
    }
    /// e / k, or nullopt when k vanishes in the field.
    std::optional<element> divide_int(const element &e, std::int64_t k) const {
        ModInt kk(k, modulus_);
        if (kk.is_zero()) {
            return std::nullopt;
        }
        return e / kk;
    }
    std::optional<element> divide(const element &a, const element &b) const {
        if (b.is_zero()) {
            return std::nullopt;
        }
        return a / b;
    }
    bool is_negative(const element &) const {
        return false;
    }
    std::string to_string(const element &e) const {
        return std::to_string(e.value());
    }

    friend bool operator==(const PrimeField &, const PrimeField &) = default;

   private:
    std::uint32_t modulus_;
};

class RationalField {
   public:
    using element = Rational;

    element zero() const {
        return Rational(0);
    }
    element one() const {
        return Rational(1);
    }
    element from_int(std::int64_t v) const {
        return Rational(v);
    }
    bool is_zero(const element &e) const {
        return e == 0;
    }
    std::optional<element> divide_int(const element &e, std::int64_t k) const {
        if (k == 0) {
            return std::nullopt;
        }
        return e / Rational(k);
    }
    std::optional<element> divide(const element &a, const element &b) const {
        if (b == 0) {
            return std::nullopt;
        }
        return a / b;
    }
    bool is_negative(const element &e) const {
        return e < 0;
    }
    std::string to_string(const element &e) const {
        return rational_to_string(e);
    }

    friend bool operator==(const RationalField &, const RationalField &) = default;
};

}  // namespace qpath

#endif
