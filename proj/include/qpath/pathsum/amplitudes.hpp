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

#ifndef QPATH_PATHSUM_AMPLITUDES_HPP
#define QPATH_PATHSUM_AMPLITUDES_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <thread>
#include <vector>

#include "qpath/algebra/amplitude.hpp"
#include "qpath/algebra/mod_matrix.hpp"
#include "qpath/circuit/circuit.hpp"
#include "qpath/circuit/labeling.hpp"
#include "qpath/pathsum/gauss.hpp"
#include "qpath/pathsum/phase.hpp"

namespace qpath {

enum class SumMethod { enumerate, gauss };

/// Polynomial flattened for repeated evaluation at points of Z_d^L.
class CompiledPolynomial {
   public:
    CompiledPolynomial(const ModPolynomial &poly, const std::vector<std::string> &vars)
        : d_(poly.field().modulus()) {
        std::map<std::string, std::uint32_t, VariableOrder> index;
        for (std::uint32_t i = 0; i < vars.size(); i++) {
            index.emplace(vars[i], i);
        }
        for (const auto &[m, c] : poly.terms()) {
            Term t{c.value(), {}};
            for (const auto &[v, e] : m) {
                auto it = index.find(v);
                if (it == index.end()) {
                    throw Error(ErrorCode::unknown_variable, "cannot compile: free variable '" + v + "'");
                }
                for (std::uint32_t k = 0; k < e; k++) {
                    t.factors.push_back(it->second);
                }
            }
            terms_.push_back(std::move(t));
        }
    }

    std::uint32_t operator()(const std::uint32_t *x) const {
        std::uint64_t acc = 0;
        for (const auto &t : terms_) {
            std::uint64_t v = t.coeff;
            for (auto f : t.factors) {
                v = v * x[f] % d_;
            }
            acc += v;
        }
        return static_cast<std::uint32_t>(acc % d_);
    }

   private:
    struct Term {
        std::uint64_t coeff;
        std::vector<std::uint32_t> factors;
    };
    std::uint32_t d_;
    std::vector<Term> terms_;
};

/// Visits particular + sum_j t_j basis_j for t_j in the mixed-radix range
/// [begin, end). Stepping digit j always adds basis_j, including on
/// wrap-around, since d * basis_j = 0.
template <class Visit>
void for_each_solution_range(const AffineSolution &sol, std::uint32_t d, std::uint64_t begin, std::uint64_t end,
                             Visit &&visit) {
    if (sol.empty() || begin >= end) {
        return;
    }
    std::size_t m = sol.dimension();
    std::vector<std::uint32_t> x = *sol.particular;
    std::size_t l = x.size();
    std::vector<std::uint32_t> digit(m, 0);
    std::uint64_t r = begin;
    for (std::size_t j = 0; j < m; j++) {
        digit[j] = static_cast<std::uint32_t>(r % d);
        r /= d;
        for (std::size_t i = 0; i < l; i++) {
            x[i] = static_cast<std::uint32_t>((x[i] + std::uint64_t{digit[j]} * sol.basis[j][i]) % d);
        }
    }
    for (std::uint64_t idx = begin; idx < end; idx++) {
        visit(x);
        for (std::size_t j = 0; j < m; j++) {
            const auto &bj = sol.basis[j];
            for (std::size_t i = 0; i < l; i++) {
                std::uint32_t v = x[i] + bj[i];
                x[i] = v >= d ? v - d : v;
            }
            if (++digit[j] < d) {
                break;
            }
            digit[j] = 0;
        }
    }
}

inline std::uint64_t solution_count(const AffineSolution &sol, std::uint32_t d, std::uint64_t cap) {
    if (sol.empty()) {
        return 0;
    }
    std::uint64_t total = checked_power(d, sol.dimension(), cap);
    if (total == 0) {
        throw Error(ErrorCode::cap_exceeded, "enumerating " + std::to_string(d) + "^" +
                                                 std::to_string(sol.dimension()) + " paths exceeds the cap of " +
                                                 std::to_string(cap) + "; use the Gauss-sum method");
    }
    return total;
}

/// counts[s] = #{x in sol : poly(x) = s}, by direct enumeration split
/// across worker threads.
inline std::vector<std::int64_t> phase_histogram_enumerate(const ModPolynomial &poly,
                                                           const std::vector<std::string> &vars,
                                                           const AffineSolution &sol, std::uint64_t cap,
                                                           unsigned threads = 0) {
    std::uint32_t d = poly.field().modulus();
    std::vector<std::int64_t> counts(d, 0);
    std::uint64_t total = solution_count(sol, d, cap);
    if (total == 0) {
        return counts;
    }
    CompiledPolynomial f(poly, vars);
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    constexpr std::uint64_t kMinPerWorker = 1 << 15;
    unsigned workers = static_cast<unsigned>(std::min<std::uint64_t>(threads, (total + kMinPerWorker - 1) / kMinPerWorker));
    workers = std::max(1u, workers);
    std::vector<std::vector<std::int64_t>> partial(workers, std::vector<std::int64_t>(d, 0));
    auto run = [&](unsigned w) {
        std::uint64_t lo = total * w / workers, hi = total * (w + 1) / workers;
        auto &c = partial[w];
        for_each_solution_range(sol, d, lo, hi, [&](const std::vector<std::uint32_t> &x) { c[f(x.data())]++; });
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; w++) {
            pool.emplace_back(run, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    for (const auto &c : partial) {
        for (std::uint32_t s = 0; s < d; s++) {
            counts[s] += c[s];
        }
    }
    return counts;
}

/// A circuit prepared for repeated amplitude queries.
class PathSum {
   public:
    explicit PathSum(CircuitIR ir) : ir_(std::move(ir)), lab_(label_wires(ir_)), phase_(build_phase(ir_, lab_)) {
    }

    const CircuitIR &circuit() const noexcept {
        return ir_;
    }
    const WireLabeling &labeling() const noexcept {
        return lab_;
    }
    const PhaseData &phase() const noexcept {
        return phase_;
    }

    AffineSolution constraints(const ModVector &q0, const ModVector &qf) const {
        return solve_constraints(lab_, q0, qf);
    }

    /// <qf| U |q0> as an exact amplitude with half_power = #F.
    CyclotomicAmplitude amplitude(const ModVector &q0, const ModVector &qf, SumMethod method,
                                  std::uint64_t cap = default_cap(), unsigned threads = 0) const {
        AffineSolution sol = constraints(q0, qf);
        ModPolynomial restricted = phase_.phase.partial_evaluate(boundary_point(lab_, q0));
        std::vector<std::int64_t> counts =
            method == SumMethod::gauss ? phase_histogram_gauss(restricted, lab_.free_params, sol)
                                       : phase_histogram_enumerate(restricted, lab_.free_params, sol, cap, threads);
        return CyclotomicAmplitude(std::move(counts), static_cast<std::int64_t>(phase_.f_count));
    }

    /// Amplitudes <qf|U|q0> for every qf, indexed little-endian (wire 0
    /// fastest).
    std::vector<CyclotomicAmplitude> row(const ModVector &q0, SumMethod method = SumMethod::gauss,
                                         std::uint64_t cap = default_cap()) const {
        std::uint64_t size = checked_power(ir_.d, ir_.n, cap);
        if (size == 0) {
            throw Error(ErrorCode::cap_exceeded, "row of d^n amplitudes exceeds the cap of " + std::to_string(cap));
        }
        std::vector<CyclotomicAmplitude> out;
        out.reserve(size);
        for (std::uint64_t idx = 0; idx < size; idx++) {
            out.push_back(amplitude(q0, unpack_configuration(idx, ir_.n, ir_.d), method, cap));
        }
        return out;
    }

   private:
    CircuitIR ir_;
    WireLabeling lab_;
    PhaseData phase_;
};

inline CyclotomicAmplitude amplitude_enumerate(const CircuitIR &ir, const ModVector &q0, const ModVector &qf,
                                               std::uint64_t cap = default_cap()) {
    return PathSum(ir).amplitude(q0, qf, SumMethod::enumerate, cap);
}

inline CyclotomicAmplitude amplitude_gauss_sum(const CircuitIR &ir, const ModVector &q0, const ModVector &qf) {
    return PathSum(ir).amplitude(q0, qf, SumMethod::gauss);
}

inline std::vector<CyclotomicAmplitude> amplitude_row(const CircuitIR &ir, const ModVector &q0,
                                                      SumMethod method = SumMethod::gauss,
                                                      std::uint64_t cap = default_cap()) {
    return PathSum(ir).row(q0, method, cap);
}

/// sum_qf |A(qf)|^2 as one exact amplitude.
inline CyclotomicAmplitude row_norm_squared(const std::vector<CyclotomicAmplitude> &row) {
    if (row.empty()) {
        throw Error(ErrorCode::invalid_argument, "empty amplitude row");
    }
    CyclotomicAmplitude total(row.front().modulus(), 2 * row.front().half_power());
    for (const auto &a : row) {
        total += a.norm_squared();
    }
    return total;
}

/// Exact check that a row of amplitudes has unit norm.
inline bool row_is_normalized(const std::vector<CyclotomicAmplitude> &row) {
    auto total = row_norm_squared(row);
    return total.same_value(CyclotomicAmplitude::root(total.modulus(), 0));
}

}  // namespace qpath

#endif
