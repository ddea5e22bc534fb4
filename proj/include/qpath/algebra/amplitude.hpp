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

#ifndef QPATH_ALGEBRA_AMPLITUDE_HPP
#define QPATH_ALGEBRA_AMPLITUDE_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

#include "qpath/algebra/modint.hpp"
#include "qpath/errors.hpp"

namespace qpath {

/// Exact element d^{-k/2} * sum_s counts[s] * chi(s) of the group ring
/// Z[chi] scaled by a power of d^{-1/2}.
///
/// The representation is not unique: adding the same integer to every count
/// leaves the value unchanged, since 1 + chi + ... + chi^{d-1} = 0.
/// `same_value` compares modulo that relation; `==` compares representations.
class CyclotomicAmplitude {
   public:
    CyclotomicAmplitude(std::uint32_t d, std::int64_t half_power = 0)
        : counts_(d, 0), half_power_(half_power) {
    }
    CyclotomicAmplitude(std::vector<std::int64_t> counts, std::int64_t half_power)
        : counts_(std::move(counts)), half_power_(half_power) {
        if (counts_.empty()) {
            throw Error(ErrorCode::invalid_argument, "amplitude needs at least one root of unity");
        }
    }

    /// chi(s) with no scaling.
    static CyclotomicAmplitude root(std::uint32_t d, std::int64_t s) {
        CyclotomicAmplitude a(d);
        a.counts_[reduce_mod(s, d)] = 1;
        return a;
    }

    std::uint32_t modulus() const noexcept {
        return static_cast<std::uint32_t>(counts_.size());
    }
    const std::vector<std::int64_t> &counts() const noexcept {
        return counts_;
    }
    std::int64_t half_power() const noexcept {
        return half_power_;
    }

    friend bool operator==(const CyclotomicAmplitude &, const CyclotomicAmplitude &) = default;

    CyclotomicAmplitude &operator+=(const CyclotomicAmplitude &rhs) {
        if (rhs.modulus() != modulus()) {
            throw Error(ErrorCode::modulus_mismatch, "adding amplitudes over different roots of unity");
        }
        if (rhs.half_power_ != half_power_) {
            throw Error(ErrorCode::half_power_mismatch, "adding amplitudes with half_power " +
                                                            std::to_string(half_power_) + " and " +
                                                            std::to_string(rhs.half_power_));
        }
        for (std::size_t s = 0; s < counts_.size(); s++) {
            counts_[s] += rhs.counts_[s];
        }
        return *this;
    }
    friend CyclotomicAmplitude operator+(CyclotomicAmplitude a, const CyclotomicAmplitude &b) {
        return a += b;
    }

    /// Group-ring product; half powers add.
    friend CyclotomicAmplitude operator*(const CyclotomicAmplitude &a, const CyclotomicAmplitude &b) {
        if (a.modulus() != b.modulus()) {
            throw Error(ErrorCode::modulus_mismatch, "multiplying amplitudes over different roots of unity");
        }
        std::uint32_t d = a.modulus();
        CyclotomicAmplitude r(d, a.half_power_ + b.half_power_);
        for (std::uint32_t s = 0; s < d; s++) {
            if (a.counts_[s] == 0) {
                continue;
            }
            for (std::uint32_t t = 0; t < d; t++) {
                r.counts_[(s + t) % d] += a.counts_[s] * b.counts_[t];
            }
        }
        return r;
    }

    /// Multiplication by chi(t): a cyclic shift of the counts.
    CyclotomicAmplitude scale_by_chi(std::int64_t t) const {
        std::uint32_t d = modulus();
        std::uint32_t shift = reduce_mod(t, d);
        CyclotomicAmplitude r(d, half_power_);
        for (std::uint32_t s = 0; s < d; s++) {
            r.counts_[(s + shift) % d] = counts_[s];
        }
        return r;
    }

    /// Complex conjugate: chi(s) -> chi(-s).
    CyclotomicAmplitude conjugate() const {
        std::uint32_t d = modulus();
        CyclotomicAmplitude r(d, half_power_);
        for (std::uint32_t s = 0; s < d; s++) {
            r.counts_[(d - s) % d] = counts_[s];
        }
        return r;
    }

    /// |A|^2 as an exact amplitude with doubled half power.
    CyclotomicAmplitude norm_squared() const {
        return *this * conjugate();
    }

    /// Rewrites with half_power + 2j by multiplying counts by d^j (j >= 0).
    CyclotomicAmplitude with_half_power(std::int64_t target) const {
        std::int64_t diff = target - half_power_;
        if (diff < 0 || diff % 2 != 0) {
            throw Error(ErrorCode::half_power_mismatch,
                        "cannot rewrite half_power " + std::to_string(half_power_) + " as " + std::to_string(target));
        }
        CyclotomicAmplitude r = *this;
        for (std::int64_t k = 0; k < diff / 2; k++) {
            for (auto &c : r.counts_) {
                c *= modulus();
            }
        }
        r.half_power_ = target;
        return r;
    }

    bool is_zero_value() const {
        for (auto c : counts_) {
            if (c != counts_.front()) {
                return false;
            }
        }
        return true;
    }

    /// Exact value equality. Amplitudes whose half powers differ in parity
    /// are compared after bringing both to a common even offset; that is
    /// only possible when the parities agree, otherwise this throws.
    bool same_value(const CyclotomicAmplitude &other) const {
        if (other.modulus() != modulus()) {
            throw Error(ErrorCode::modulus_mismatch, "comparing amplitudes over different roots of unity");
        }
        if ((half_power_ - other.half_power_) % 2 != 0) {
            throw Error(ErrorCode::half_power_mismatch, "exact comparison needs half powers of equal parity");
        }
        std::int64_t k = std::max(half_power_, other.half_power_);
        auto a = with_half_power(k);
        auto b = other.with_half_power(k);
        std::int64_t offset = a.counts_[0] - b.counts_[0];
        for (std::size_t s = 1; s < a.counts_.size(); s++) {
            if (a.counts_[s] - b.counts_[s] != offset) {
                return false;
            }
        }
        return true;
    }

    std::complex<double> to_complex() const {
        std::uint32_t d = modulus();
        std::complex<double> acc = 0;
        for (std::uint32_t s = 0; s < d; s++) {
            if (counts_[s] != 0) {
                acc += static_cast<double>(counts_[s]) * chi(s, d);
            }
        }
        return acc * std::pow(static_cast<double>(d), -0.5 * static_cast<double>(half_power_));
    }

   private:
    std::vector<std::int64_t> counts_;
    std::int64_t half_power_;
};

}  // namespace qpath

#endif
