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

#ifndef QPATH_ALGEBRA_MODINT_HPP
#define QPATH_ALGEBRA_MODINT_HPP

#include <complex>
#include <cstdint>
#include <numbers>
#include <ostream>
#include <string>

#include "qpath/errors.hpp"

namespace qpath {

inline bool is_prime(std::uint64_t n) {
    if (n < 2) {
        return false;
    }
    for (std::uint64_t k = 2; k * k <= n; k++) {
        if (n % k == 0) {
            return false;
        }
    }
    return true;
}

inline bool is_odd_prime(std::uint64_t n) {
    return n > 2 && is_prime(n);
}

/// Reduces an arbitrary signed integer into [0, d).
inline std::uint32_t reduce_mod(std::int64_t v, std::uint32_t d) {
    std::int64_t r = v % static_cast<std::int64_t>(d);
    if (r < 0) {
        r += d;
    }
    return static_cast<std::uint32_t>(r);
}

/// An element of the prime field Z_d. The modulus travels with the value so
/// that mixing fields is caught at runtime.
class ModInt {
   public:
    ModInt() = default;
    ModInt(std::int64_t value, std::uint32_t modulus) : value_(reduce_mod(value, modulus)), modulus_(modulus) {
    }

    std::uint32_t value() const noexcept {
        return value_;
    }
    std::uint32_t modulus() const noexcept {
        return modulus_;
    }
    bool is_zero() const noexcept {
        return value_ == 0;
    }

    ModInt operator-() const {
        return ModInt::raw(value_ == 0 ? 0 : modulus_ - value_, modulus_);
    }

    ModInt &operator+=(const ModInt &rhs) {
        check(rhs);
        std::uint64_t s = std::uint64_t{value_} + rhs.value_;
        value_ = static_cast<std::uint32_t>(s >= modulus_ ? s - modulus_ : s);
        return *this;
    }
    ModInt &operator-=(const ModInt &rhs) {
        check(rhs);
        value_ = value_ >= rhs.value_ ? value_ - rhs.value_ : static_cast<std::uint32_t>(std::uint64_t{value_} + modulus_ - rhs.value_);
        return *this;
    }
    ModInt &operator*=(const ModInt &rhs) {
        check(rhs);
        value_ = static_cast<std::uint32_t>(std::uint64_t{value_} * rhs.value_ % modulus_);
        return *this;
    }
    ModInt &operator/=(const ModInt &rhs) {
        return *this *= rhs.inverse();
    }

    friend ModInt operator+(ModInt a, const ModInt &b) {
        return a += b;
    }
    friend ModInt operator-(ModInt a, const ModInt &b) {
        return a -= b;
    }
    friend ModInt operator*(ModInt a, const ModInt &b) {
        return a *= b;
    }
    friend ModInt operator/(ModInt a, const ModInt &b) {
        return a /= b;
    }
    friend ModInt operator*(ModInt a, std::int64_t k) {
        return a *= ModInt(k, a.modulus_);
    }

    friend bool operator==(const ModInt &a, const ModInt &b) {
        return a.value_ == b.value_ && a.modulus_ == b.modulus_;
    }

    ModInt pow(std::uint64_t e) const {
        ModInt result = ModInt::raw(1 % modulus_, modulus_);
        ModInt base = *this;
        while (e) {
            if (e & 1) {
                result *= base;
            }
            base *= base;
            e >>= 1;
        }
        return result;
    }

    /// Multiplicative inverse via Fermat's little theorem.
    ModInt inverse() const {
        if (value_ == 0) {
            throw Error(ErrorCode::division_by_zero, "inverse of 0 in Z_" + std::to_string(modulus_));
        }
        return pow(modulus_ - 2);
    }

    friend std::ostream &operator<<(std::ostream &out, const ModInt &v) {
        return out << v.value_;
    }

   private:
    static ModInt raw(std::uint32_t v, std::uint32_t m) {
        ModInt r;
        r.value_ = v;
        r.modulus_ = m;
        return r;
    }
    void check(const ModInt &rhs) const {
        if (rhs.modulus_ != modulus_) {
            throw Error(ErrorCode::modulus_mismatch,
                        "mixing Z_" + std::to_string(modulus_) + " with Z_" + std::to_string(rhs.modulus_));
        }
    }

    std::uint32_t value_ = 0;
    std::uint32_t modulus_ = 1;
};

inline ModInt mod_inverse(const ModInt &a) {
    return a.inverse();
}

/// 2^{-1} in Z_d; d must be odd.
inline ModInt half(std::uint32_t d) {
    return ModInt(2, d).inverse();
}

/// The additive character chi(s) = exp(2 pi i s / d).
inline std::complex<double> chi(std::int64_t s, std::uint32_t d) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(reduce_mod(s, d)) / static_cast<double>(d);
    return std::polar(1.0, angle);
}

inline std::complex<double> chi(const ModInt &s) {
    return chi(s.value(), s.modulus());
}

}  // namespace qpath

#endif
