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

#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <random>

#include "qpath/algebra/amplitude.hpp"
#include "qpath/algebra/fields.hpp"
#include "qpath/algebra/kahler.hpp"
#include "qpath/algebra/mod_matrix.hpp"
#include "qpath/algebra/modint.hpp"
#include "qpath/algebra/polynomial.hpp"

using namespace qpath;

namespace {

// Inverse by exhaustive search, independent of the Fermat-power routine.
std::uint32_t brute_inverse(std::uint32_t a, std::uint32_t d) {
    for (std::uint32_t x = 1; x < d; x++) {
        if (a * x % d == 1) {
            return x;
        }
    }
    return 0;
}

ModPolynomial random_poly(std::mt19937_64 &rng, const PrimeField &f, const std::vector<std::string> &vars,
                          std::uint32_t max_exp, std::size_t terms) {
    ModPolynomial p(f);
    for (const auto &v : vars) {
        p.declare(v);
    }
    std::uniform_int_distribution<std::uint32_t> e(0, max_exp);
    std::uniform_int_distribution<std::int64_t> c(0, f.modulus() - 1);
    for (std::size_t t = 0; t < terms; t++) {
        Monomial m;
        for (const auto &v : vars) {
            if (auto k = e(rng)) {
                m[v] = k;
            }
        }
        p.add_term(m, f.from_int(c(rng)));
    }
    return p;
}

}  // namespace

TEST(ModInt, InverseExamples) {
    EXPECT_EQ(mod_inverse(ModInt(1, 5)).value(), 1u);
    EXPECT_EQ(mod_inverse(ModInt(2, 5)).value(), brute_inverse(2, 5));
    EXPECT_EQ(mod_inverse(ModInt(2, 5)).value(), 3u);
    EXPECT_EQ(mod_inverse(ModInt(2, 3)).value(), 2u);
}

TEST(ModInt, InverseOfZeroThrows) {
    try {
        mod_inverse(ModInt(0, 7));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::division_by_zero);
    }
}

TEST(ModInt, InverseMatchesBruteForce) {
    for (std::uint32_t d : {3u, 5u, 7u, 11u, 13u, 101u}) {
        for (std::uint32_t a = 1; a < d; a++) {
            ModInt x(a, d);
            EXPECT_EQ(mod_inverse(x).value(), brute_inverse(a, d));
            EXPECT_EQ((x * mod_inverse(x)).value(), 1u);
        }
    }
}

TEST(ModInt, MixedModuliThrow) {
    EXPECT_THROW(ModInt(1, 3) + ModInt(1, 5), Error);
}

TEST(ModInt, ReduceNegative) {
    EXPECT_EQ(ModInt(-1, 3).value(), 2u);
    EXPECT_EQ(ModInt(-7, 5).value(), 3u);
    EXPECT_EQ(half(5).value(), 3u);
}

TEST(Chi, Examples) {
    EXPECT_NEAR(std::abs(chi(0, 3) - std::complex<double>(1, 0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(chi(1, 3) - std::complex<double>(-0.5, std::sqrt(3.0) / 2)), 0, 1e-15);
    EXPECT_NEAR(std::abs(chi(3, 3) - std::complex<double>(1, 0)), 0, 1e-15);
    EXPECT_NEAR(std::abs(chi(ModInt(4, 3)) - chi(1, 3)), 0, 1e-15);
}

TEST(Primes, OddPrimeDetection) {
    EXPECT_TRUE(is_odd_prime(3));
    EXPECT_TRUE(is_odd_prime(13));
    EXPECT_FALSE(is_odd_prime(2));
    EXPECT_FALSE(is_odd_prime(1));
    EXPECT_FALSE(is_odd_prime(9));
    EXPECT_FALSE(is_odd_prime(4));
}

TEST(Rational, ParseAndPrint) {
    EXPECT_EQ(parse_rational("3/2"), Rational(3) / 2);
    EXPECT_EQ(parse_rational("-4/6"), Rational(-2) / 3);
    EXPECT_EQ(parse_rational("7"), Rational(7));
    EXPECT_THROW(parse_rational("1/0"), Error);
    EXPECT_THROW(parse_rational("abc"), Error);
    EXPECT_EQ(rational_to_string(Rational(-3) / 2), "-3/2");
}

TEST(Polynomial, DerivativeExamples) {
    PrimeField f5(5), f3(3);
    auto q5 = ModPolynomial::variable(f5, "q");
    EXPECT_EQ((q5 * q5).derivative("q"), q5 * f5.from_int(2));
    auto q3 = ModPolynomial::variable(f3, "q");
    EXPECT_TRUE(q3.pow(3).derivative("q").is_zero());
    auto c = ModPolynomial::constant(f5, 4);
    c.declare("q");
    EXPECT_TRUE(c.derivative("q").is_zero());
}

TEST(Polynomial, DerivativeOfUndeclaredVariableThrows) {
    PrimeField f(5);
    auto q = ModPolynomial::variable(f, "q");
    try {
        q.derivative("p");
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::unknown_variable);
    }
}

// For polynomials of degree < d in q, the formal derivative is pinned down by
// finite differences: compare against the Lagrange-free check
// f(q+1) - f(q) summed against the known power rule on monomials.
TEST(Polynomial, DerivativeMatchesPowerRuleOnAllPoints) {
    PrimeField f(7);
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; trial++) {
        auto p = random_poly(rng, f, {"q", "p"}, 6, 5);
        auto dp = p.derivative("q");
        for (std::uint32_t a = 0; a < 7; a++) {
            for (std::uint32_t b = 0; b < 7; b++) {
                // Evaluate the power rule directly from the term list.
                ModInt expect = f.zero();
                for (const auto &[m, c] : p.terms()) {
                    auto it = m.find("q");
                    if (it == m.end()) {
                        continue;
                    }
                    ModInt t = c * ModInt(it->second, 7) * ModInt(a, 7).pow(it->second - 1);
                    if (auto jt = m.find("p"); jt != m.end()) {
                        t = t * ModInt(b, 7).pow(jt->second);
                    }
                    expect += t;
                }
                EXPECT_EQ(dp.evaluate({{"q", f.from_int(a)}, {"p", f.from_int(b)}}), expect);
            }
        }
    }
}

TEST(Polynomial, EvaluationIsRingHomomorphism) {
    PrimeField f(5);
    std::mt19937_64 rng(3);
    std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 100; trial++) {
        auto a = random_poly(rng, f, vars, 4, 4);
        auto b = random_poly(rng, f, vars, 4, 4);
        std::map<std::string, ModInt, VariableOrder> pt;
        for (const auto &v : vars) {
            pt.emplace(v, f.from_int(static_cast<std::int64_t>(rng() % 5)));
        }
        EXPECT_EQ((a * b).evaluate(pt), a.evaluate(pt) * b.evaluate(pt));
        EXPECT_EQ((a + b).evaluate(pt), a.evaluate(pt) + b.evaluate(pt));
        EXPECT_EQ((a - b).evaluate(pt), a.evaluate(pt) - b.evaluate(pt));
    }
}

TEST(Polynomial, ExponentsAreNotReduced) {
    PrimeField f(3);
    auto q = ModPolynomial::variable(f, "q");
    EXPECT_FALSE(q.pow(3) == q);
    EXPECT_EQ(q.pow(3).degree(), 3u);
    for (int a = 0; a < 3; a++) {
        EXPECT_EQ(q.pow(3).evaluate({{"q", f.from_int(a)}}), f.from_int(a));
    }
}

TEST(Polynomial, Printing) {
    PrimeField f(5);
    auto q = ModPolynomial::variable(f, "q");
    auto Q = ModPolynomial::variable(f, "Q");
    EXPECT_EQ((q * Q).to_string(), "q*Q");
    EXPECT_EQ((q * q * f.from_int(3) + q * f.from_int(2)).to_string(), "3*q^2 + 2*q");
    RationalField r;
    auto x = RationalPolynomial::variable(r, "x1");
    auto y = RationalPolynomial::variable(r, "q0_1");
    EXPECT_EQ((-(y * x)).to_string(), "-q0_1*x1");
    EXPECT_EQ(RationalPolynomial(r).to_string(), "0");
}

TEST(Polynomial, SubstituteComposes) {
    PrimeField f(7);
    auto x = ModPolynomial::variable(f, "x");
    auto y = ModPolynomial::variable(f, "y");
    auto p = x * x + y * f.from_int(3);
    auto s = p.substitute({{"x", y + f.one()}});
    EXPECT_EQ(s, y * y + y * f.from_int(5) + f.one());
}

TEST(Kahler, ExteriorDerivativeExamples) {
    PrimeField f(5);
    auto gens = phase_space_coordinates(1);
    auto q = ModPolynomial::variable(f, "q");
    auto dp = KahlerForm<PrimeField>::basis_differential(f, gens, 1);
    auto dq = KahlerForm<PrimeField>::basis_differential(f, gens, 0);
    EXPECT_EQ((q * dp).exterior_derivative(), wedge(dq, dp));
    EXPECT_TRUE(wedge(dq, dp).exterior_derivative().is_zero());
    for (std::size_t n : {1u, 2u, 3u}) {
        auto g = phase_space_coordinates(n);
        auto theta = canonical_one_form(f, g);
        EXPECT_EQ(theta.exterior_derivative(), -symplectic_form(f, g));
    }
}

TEST(Kahler, WedgeIsAntisymmetric) {
    PrimeField f(7);
    auto gens = phase_space_coordinates(2);
    auto a = KahlerForm<PrimeField>::basis_differential(f, gens, 0);
    auto b = KahlerForm<PrimeField>::basis_differential(f, gens, 3);
    EXPECT_EQ(wedge(a, b), -wedge(b, a));
    EXPECT_TRUE(wedge(a, a).is_zero());
}

TEST(Kahler, DSquaredVanishesOnRandomForms) {
    PrimeField f(5);
    auto gens = phase_space_coordinates(2);
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 100; trial++) {
        for (std::uint32_t deg = 0; deg + 2 <= gens.size(); deg++) {
            KahlerForm<PrimeField> w(f, gens, deg);
            for (int t = 0; t < 3; t++) {
                std::vector<std::uint32_t> idx;
                for (std::uint32_t k = 0; k < deg; k++) {
                    idx.push_back(static_cast<std::uint32_t>(rng() % gens.size()));
                }
                w.add_term(idx, random_poly(rng, f, gens, 3, 3));
            }
            EXPECT_TRUE(w.exterior_derivative().exterior_derivative().is_zero());
        }
    }
}

TEST(Kahler, IntegrateRGateOneForm) {
    PrimeField f(5);
    auto gens = phase_space_coordinates(1);
    auto q = ModPolynomial::variable(f, "q");
    auto eps = (q - half(5)) * KahlerForm<PrimeField>::basis_differential(f, gens, 0);
    auto g = integrate_exact_one_form(eps);
    EXPECT_EQ(g, q * q * f.from_int(3) + q * f.from_int(2));
    EXPECT_EQ(g, half(5) * (q * (q - f.one())));
}

TEST(Kahler, IntegrateZeroAndNotClosed) {
    PrimeField f(5);
    auto gens = phase_space_coordinates(1);
    EXPECT_TRUE(integrate_exact_one_form(KahlerForm<PrimeField>(f, gens, 1)).is_zero());
    auto p = ModPolynomial::variable(f, "p");
    try {
        integrate_exact_one_form(p * KahlerForm<PrimeField>::basis_differential(f, gens, 0));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::not_closed);
    }
}

TEST(Kahler, ClosedButNotExact) {
    // q^(d-1) dq is closed, but its antiderivative q^d / d needs 1/d.
    PrimeField f(3);
    auto gens = phase_space_coordinates(1);
    auto q = ModPolynomial::variable(f, "q");
    try {
        integrate_exact_one_form(q.pow(2) * KahlerForm<PrimeField>::basis_differential(f, gens, 0));
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::not_exact);
    }
}

TEST(Kahler, IntegrateRoundTripsDerivative) {
    for (std::uint32_t d : {3u, 5u, 7u}) {
        PrimeField f(d);
        auto gens = phase_space_coordinates(2);
        std::mt19937_64 rng(d);
        for (int trial = 0; trial < 50; trial++) {
            auto g = random_poly(rng, f, gens, d - 1, 4).without_constant();
            auto eps = KahlerForm<PrimeField>::differential(gens, g);
            EXPECT_EQ(integrate_exact_one_form(eps), g);
            EXPECT_EQ(KahlerForm<PrimeField>::differential(gens, integrate_exact_one_form(eps)), eps);
        }
    }
}

TEST(Kahler, SymplecticFormNondegenerate) {
    for (std::uint32_t d : {3u, 5u, 7u, 11u, 13u}) {
        PrimeField f(d);
        for (std::size_t n : {1u, 2u, 3u}) {
            auto gens = phase_space_coordinates(n);
            auto omega = symplectic_form(f, gens);
            EXPECT_TRUE(omega.exterior_derivative().is_zero());
            auto mat = two_form_matrix(omega);
            ModMatrix j(2 * n, 2 * n, d);
            for (std::size_t a = 0; a < 2 * n; a++) {
                for (std::size_t b = 0; b < 2 * n; b++) {
                    j.set(a, b, mat[a][b].value());
                }
            }
            EXPECT_EQ(rank(j), 2 * n);
        }
    }
}

TEST(Kahler, RationalCoefficientsWithParameters) {
    RationalField r;
    auto gens = phase_space_coordinates(1);
    auto q = RationalPolynomial::variable(r, "q");
    auto eta = RationalPolynomial::variable(r, "eta");
    auto eps = -(eta * q) * KahlerForm<RationalField>::basis_differential(r, gens, 0);
    auto g = integrate_exact_one_form(eps);
    EXPECT_EQ(g, eta * q * q * Rational(-1, 2));
}

TEST(Amplitude, Examples) {
    CyclotomicAmplitude one({1, 0, 0}, 0);
    EXPECT_NEAR(std::abs(one.to_complex() - std::complex<double>(1, 0)), 0, 1e-15);
    CyclotomicAmplitude a({1, 2, 0}, 0);
    EXPECT_NEAR(std::abs(a.to_complex() - std::complex<double>(0, std::sqrt(3.0))), 0, 1e-15);
    EXPECT_EQ(one.scale_by_chi(2), CyclotomicAmplitude({0, 0, 1}, 0));
}

TEST(Amplitude, MismatchedHalfPowerThrows) {
    CyclotomicAmplitude a({1, 0, 0}, 0), b({1, 0, 0}, 1);
    try {
        a += b;
        FAIL();
    } catch (const Error &e) {
        EXPECT_EQ(e.code(), ErrorCode::half_power_mismatch);
    }
}

TEST(Amplitude, CharacterSumIdentity) {
    for (std::uint32_t d : {3u, 5u, 7u, 11u}) {
        for (std::uint32_t x = 0; x < d; x++) {
            CyclotomicAmplitude sum(d);
            for (std::uint32_t z = 0; z < d; z++) {
                sum += CyclotomicAmplitude::root(d, std::int64_t{z} * x);
            }
            std::vector<std::int64_t> c(d, 0);
            c[0] = x == 0 ? d : 0;
            CyclotomicAmplitude expect(c, 0);
            EXPECT_TRUE(sum.same_value(expect));
            EXPECT_EQ(sum.is_zero_value(), x != 0);
        }
    }
}

TEST(Amplitude, ProductAndNormMatchComplex) {
    std::mt19937_64 rng(5);
    for (std::uint32_t d : {3u, 5u, 7u}) {
        for (int trial = 0; trial < 20; trial++) {
            std::vector<std::int64_t> ca(d), cb(d);
            for (auto &c : ca) c = static_cast<std::int64_t>(rng() % 5) - 2;
            for (auto &c : cb) c = static_cast<std::int64_t>(rng() % 5) - 2;
            CyclotomicAmplitude a(ca, 1), b(cb, 2);
            EXPECT_NEAR(std::abs((a * b).to_complex() - a.to_complex() * b.to_complex()), 0, 1e-12);
            EXPECT_NEAR(a.norm_squared().to_complex().real(), std::norm(a.to_complex()), 1e-12);
            EXPECT_NEAR(std::abs(a.with_half_power(3).to_complex() - a.to_complex()), 0, 1e-12);
        }
    }
}

TEST(ModMatrix, SolveAffineAndInverse) {
    auto a = ModMatrix::from_rows({{0, 1}}, 3);
    auto sol = solve_affine(a, {2});
    ASSERT_FALSE(sol.empty());
    EXPECT_EQ(*sol.particular, (ModVector{0, 2}));
    ASSERT_EQ(sol.dimension(), 1u);
    EXPECT_EQ(sol.basis[0], (ModVector{1, 0}));
    auto inconsistent = solve_affine(ModMatrix::from_rows({{1, 1}, {2, 2}}, 5), {1, 3});
    EXPECT_TRUE(inconsistent.empty());
    auto m = ModMatrix::from_rows({{1, 2}, {3, 4}}, 7);
    auto inv = inverse(m);
    ASSERT_TRUE(inv);
    EXPECT_EQ(m * *inv, ModMatrix::identity(2, 7));
    EXPECT_FALSE(inverse(ModMatrix::from_rows({{1, 2}, {2, 4}}, 7)));
}

TEST(ModMatrix, SolveAffineMatchesBruteForce) {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 200; trial++) {
        std::uint32_t d = trial % 2 ? 3 : 5;
        std::size_t rows = 1 + rng() % 3, cols = 1 + rng() % 3;
        ModMatrix a(rows, cols, d);
        ModVector b(rows);
        for (std::size_t i = 0; i < rows; i++) {
            for (std::size_t j = 0; j < cols; j++) {
                a.set(i, j, static_cast<std::int64_t>(rng() % d));
            }
            b[i] = static_cast<std::uint32_t>(rng() % d);
        }
        std::size_t brute = 0;
        std::size_t total = 1;
        for (std::size_t j = 0; j < cols; j++) total *= d;
        for (std::size_t idx = 0; idx < total; idx++) {
            ModVector x(cols);
            std::size_t r = idx;
            for (std::size_t j = 0; j < cols; j++) {
                x[j] = static_cast<std::uint32_t>(r % d);
                r /= d;
            }
            brute += a.apply(x) == b;
        }
        auto sol = solve_affine(a, b);
        if (brute == 0) {
            EXPECT_TRUE(sol.empty());
            continue;
        }
        ASSERT_FALSE(sol.empty());
        EXPECT_EQ(a.apply(*sol.particular), b);
        std::size_t expect = 1;
        for (std::size_t k = 0; k < sol.dimension(); k++) expect *= d;
        EXPECT_EQ(brute, expect);
        for (const auto &v : sol.basis) {
            EXPECT_EQ(a.apply(v), ModVector(rows, 0));
        }
    }
}
