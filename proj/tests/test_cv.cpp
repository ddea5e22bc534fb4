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

#include "qpath/cv/cv.hpp"
#include "qpath/qpath.hpp"

using namespace qpath;

namespace {

RationalField field;

RationalPolynomial var(const std::string &name) {
    return RationalPolynomial::variable(field, name);
}

RationalPolynomial cst(const Rational &r) {
    return RationalPolynomial::constant(field, r);
}

RationalAffineMap local_map(std::vector<std::vector<std::int64_t>> s, std::vector<Rational> a) {
    RationalAffineMap m{static_cast<std::uint32_t>(a.size() / 2), {}, {}};
    for (const auto &row : s) {
        std::vector<RationalPolynomial> r;
        for (auto e : row) {
            r.push_back(cst(e));
        }
        m.s.push_back(std::move(r));
    }
    for (const auto &e : a) {
        m.a.push_back(cst(e));
    }
    return m;
}

bool same_map(const RationalAffineMap &m, std::vector<std::vector<std::int64_t>> s, std::vector<Rational> a) {
    auto expected = local_map(std::move(s), std::move(a));
    for (std::size_t i = 0; i < m.s.size(); i++) {
        for (std::size_t j = 0; j < m.s.size(); j++) {
            if (!(m.s[i][j] == expected.s[i][j])) {
                return false;
            }
        }
        if (!(m.a[i] == expected.a[i])) {
            return false;
        }
    }
    return true;
}

const auto eta = var("eta");
const auto tau = var("tau");

std::vector<CVGate> symbolic_generators() {
    return {CVGate::F(0),          CVGate::FDAG(0),         CVGate::P(0, eta), CVGate::X(0, tau),
            CVGate::SUM(0, 1),     CVGate::SUMDAG(0, 1)};
}

CVCircuit three_wire_example() {
    return {3,
            {CVGate::F(0), CVGate::P(1, eta), CVGate::SUM(1, 2), CVGate::SUMDAG(0, 1), CVGate::X(0, tau),
             CVGate::FDAG(2)}};
}

}  // namespace

TEST(CVParse, RoundTrip) {
    auto c = parse_cv_circuit("cv\nn 2\nF 0\nFDAG 1\nP 0 3/2\nX 1 -1/4\nSUM 0 1\nSUMDAG 1 0\nID 1\n");
    ASSERT_EQ(c.n, 2u);
    ASSERT_EQ(c.gates.size(), 7u);
    EXPECT_EQ(c.gates[2], CVGate::P(0, Rational(3, 2)));
    EXPECT_EQ(c.gates[3], CVGate::X(1, Rational(-1, 4)));
    EXPECT_EQ(c.gates[5], CVGate::SUMDAG(1, 0));
    EXPECT_EQ(parse_cv_circuit(format_cv_circuit(c)), c);
}

TEST(CVParse, ErrorsCarryPositions) {
    auto expect_error = [](const std::string &text, std::size_t line, std::size_t col) {
        try {
            parse_cv_circuit(text);
            ADD_FAILURE() << text;
        } catch (const ParseError &e) {
            EXPECT_EQ(e.line(), line) << text;
            EXPECT_EQ(e.column(), col) << text;
        }
    };
    expect_error("n 1\nF 0\n", 1, 1);
    expect_error("cv\nn 1\nR 0\n", 3, 1);
    expect_error("cv\nn 2\nSUM 1 1\n", 3, 7);
    expect_error("cv\nn 1\nP 0 1/0\n", 3, 5);
    expect_error("cv\nn 1\nX 0\n", 3, 2);
    expect_error("cv\nn 1\nF 3\n", 3, 3);
    expect_error("cv\nF 0\n", 2, 1);
    expect_error("cv\n", 2, 1);
}

TEST(CVSymplectomorphism, GeneratorMatrices) {
    EXPECT_TRUE(same_map(cv_local_symplectomorphism(CVGate::F(0)), {{0, 1}, {-1, 0}}, {0, 0}));
    EXPECT_TRUE(same_map(cv_local_symplectomorphism(CVGate::FDAG(0)), {{0, -1}, {1, 0}}, {0, 0}));
    EXPECT_TRUE(same_map(cv_local_symplectomorphism(CVGate::X(0, Rational(3, 2))), {{1, 0}, {0, 1}},
                         {Rational(3, 2), 0}));
    EXPECT_TRUE(same_map(cv_local_symplectomorphism(CVGate::P(0, Rational(0))), {{1, 0}, {0, 1}}, {0, 0}));
    EXPECT_TRUE(same_map(cv_local_symplectomorphism(CVGate::P(0, Rational(2))), {{1, 0}, {-2, 1}}, {0, 0}));
    EXPECT_TRUE(same_map(cv_local_symplectomorphism(CVGate::SUM(0, 1)),
                         {{1, 0, 0, 0}, {1, 1, 0, 0}, {0, 0, 1, -1}, {0, 0, 0, 1}}, {0, 0, 0, 0}));
    EXPECT_TRUE(same_map(cv_local_symplectomorphism(CVGate::SUMDAG(0, 1)),
                         {{1, 0, 0, 0}, {-1, 1, 0, 0}, {0, 0, 1, 1}, {0, 0, 0, 1}}, {0, 0, 0, 0}));
}

TEST(CVSymplectomorphism, ImagesOfPoints) {
    // Direct images of (q, p) = (2, 5) and (q1, q2, p1, p2) = (1, 2, 3, 4).
    auto at = [](const RationalAffineMap &m, std::vector<Rational> v) {
        std::vector<RationalPolynomial> in;
        for (auto &e : v) {
            in.push_back(cst(e));
        }
        std::vector<Rational> out;
        for (auto &p : m.apply(in)) {
            out.push_back(p.constant_term());
        }
        return out;
    };
    using V = std::vector<Rational>;
    EXPECT_EQ(at(cv_local_symplectomorphism(CVGate::F(0)), {2, 5}), (V{5, -2}));
    EXPECT_EQ(at(cv_local_symplectomorphism(CVGate::FDAG(0)), {2, 5}), (V{-5, 2}));
    EXPECT_EQ(at(cv_local_symplectomorphism(CVGate::P(0, Rational(1, 2))), {2, 5}), (V{2, 4}));
    EXPECT_EQ(at(cv_local_symplectomorphism(CVGate::X(0, Rational(-1, 3))), {2, 5}), (V{Rational(5, 3), 5}));
    EXPECT_EQ(at(cv_local_symplectomorphism(CVGate::SUM(0, 1)), {1, 2, 3, 4}), (V{1, 3, -1, 4}));
    EXPECT_EQ(at(cv_local_symplectomorphism(CVGate::SUMDAG(0, 1)), {1, 2, 3, 4}), (V{1, 1, 7, 4}));
}

TEST(CVSymplectomorphism, FdagInvertsF) {
    auto m = compose(cv_local_symplectomorphism(CVGate::FDAG(0)), cv_local_symplectomorphism(CVGate::F(0)));
    EXPECT_TRUE(same_map(m, {{1, 0}, {0, 1}}, {0, 0}));
    auto s = compose(cv_local_symplectomorphism(CVGate::SUMDAG(0, 1)), cv_local_symplectomorphism(CVGate::SUM(0, 1)));
    EXPECT_TRUE(same_map(s, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}, {0, 0, 0, 0}));
}

TEST(CVSymplectomorphism, SymbolicGeneratorsAreSymplectic) {
    for (const auto &g : symbolic_generators()) {
        EXPECT_TRUE(cv_local_symplectomorphism(g).is_symplectic()) << g.to_string();
        EXPECT_TRUE(cv_symplectomorphism(g, 3).is_symplectic()) << g.to_string();
    }
    EXPECT_FALSE(local_map({{2, 0}, {0, 1}}, {0, 0}).is_symplectic());
}

TEST(CVSymplectomorphism, RandomCompositesAreSymplectic) {
    for (std::uint64_t i = 0; i < 100; i++) {
        Rng rng(case_seed(21, i));
        auto c = random_cv_circuit(rng, 1 + static_cast<std::uint32_t>(i % 3), 8);
        EXPECT_TRUE(cv_circuit_symplectomorphism(c).is_symplectic()) << format_cv_circuit(c);
    }
}

TEST(CVGeneratingFunction, ClosedForms) {
    auto q = var("q"), Q = var("Q");
    EXPECT_EQ(cv_generating_function(CVGate::F(0)), -(q * Q));
    EXPECT_EQ(cv_generating_function(CVGate::FDAG(0)), q * Q);
    EXPECT_EQ(cv_generating_function(CVGate::P(0, Rational(2))), -(q * q));
    EXPECT_EQ(cv_generating_function(CVGate::P(0, eta)), -(eta * q * q * Rational(1, 2)));
    EXPECT_TRUE(cv_generating_function(CVGate::X(0, tau)).is_zero());
    EXPECT_TRUE(cv_generating_function(CVGate::SUM(0, 1)).is_zero());
    EXPECT_TRUE(cv_generating_function(CVGate::SUMDAG(0, 1)).is_zero());
    EXPECT_TRUE(cv_generating_function(CVGate::ID(0)).is_zero());
}

TEST(CVGeneratingFunction, RelationHoldsForSymbolicGenerators) {
    for (const auto &g : symbolic_generators()) {
        EXPECT_TRUE(cv_check_generating_relation(g)) << g.to_string();
    }
    EXPECT_TRUE(cv_check_generating_relation(CVGate::ID(0)));
}

TEST(CVGeneratingFunction, DerivedFromOneFormMatchesClosedForm) {
    // Integrating the 1-form and eliminating p recovers the closed forms where
    // q and Q are independent or Q depends on q alone.
    for (const auto &g : symbolic_generators()) {
        auto derived = derive_generating_function(cv_local_symplectomorphism(g).polynomial_map());
        EXPECT_EQ(derived.g, cv_generating_function(g)) << g.to_string();
    }
}

TEST(CVGeneratingFunction, MomentumRelationsForFourier) {
    auto f = cv_local_symplectomorphism(CVGate::F(0)).polynomial_map();
    auto fd = cv_local_symplectomorphism(CVGate::FDAG(0)).polynomial_map();
    ASSERT_TRUE(check_momentum_relations(f, cv_generating_function(CVGate::F(0))).has_value());
    EXPECT_TRUE(*check_momentum_relations(f, cv_generating_function(CVGate::F(0))));
    EXPECT_TRUE(*check_momentum_relations(fd, cv_generating_function(CVGate::FDAG(0))));
    EXPECT_FALSE(*check_momentum_relations(f, cv_generating_function(CVGate::FDAG(0))));
}

TEST(CVGeneratingFunction, NegativeControls) {
    auto q = var("q"), Q = var("Q");
    auto shift = local_map({{1, 0}, {0, 1}}, {0, 1});  // (q, p) -> (q, p + 1)
    // P dQ - p dq = dq, so G = q does generate this map; G = 2q does not.
    EXPECT_TRUE(cv_check_generating_relation(shift, q));
    EXPECT_FALSE(cv_check_generating_relation(shift, q * Rational(2)));
    EXPECT_FALSE(cv_check_generating_relation(shift, RationalPolynomial(field)));
    // Not symplectic: P dQ - p dq = p dq is not exact.
    EXPECT_FALSE(cv_check_generating_relation(local_map({{2, 0}, {0, 1}}, {0, 0}), RationalPolynomial(field)));
    // Wrong signs.
    EXPECT_FALSE(cv_check_generating_relation(cv_local_symplectomorphism(CVGate::F(0)), q * Q));
    EXPECT_FALSE(cv_check_generating_relation(cv_local_symplectomorphism(CVGate::P(0, eta)), eta * q * q * Rational(1, 2)));
}

TEST(CVPhaseFunctional, ThreeWireWorkedExample) {
    auto pf = cv_phase_functional(three_wire_example());
    auto x1 = var("x1"), x2 = var("x2");
    auto q01 = var("q0_1"), q02 = var("q0_2"), q03 = var("q0_3");
    ASSERT_EQ(pf.constraints.size(), 3u);
    EXPECT_EQ(pf.constraints[0], x1 + tau);
    EXPECT_EQ(pf.constraints[1], q02 - x1);
    EXPECT_EQ(pf.constraints[2], x2);
    EXPECT_EQ(pf.phase, -(q01 * x1) + (q02 + q03) * x2 - eta * q02 * q02 * Rational(1, 2));
    EXPECT_EQ(pf.free_params, (std::vector<std::string>{"x1", "x2"}));
    EXPECT_EQ(pf.f_count, 1u);
    EXPECT_EQ(pf.fdag_count, 1u);
}

TEST(CVPhaseFunctional, SingleGates) {
    auto x = cv_phase_functional({1, {CVGate::X(0, tau)}});
    EXPECT_TRUE(x.phase.is_zero());
    EXPECT_EQ(x.constraints[0], var("q0_1") + tau);
    EXPECT_TRUE(x.free_params.empty());

    auto f = cv_phase_functional({1, {CVGate::F(0)}});
    EXPECT_EQ(f.phase, -(var("q0_1") * var("x1")));
    EXPECT_EQ(f.constraints[0], var("x1"));
}

TEST(CVMain, Examples) {
    auto f = cv_verify_main_report({1, {CVGate::F(0)}});
    EXPECT_TRUE(f.holds());
    EXPECT_EQ(f.action_on_paths, -(var("q0_1") * var("x1")));
    EXPECT_TRUE(cv_verify_main(three_wire_example()));
    EXPECT_TRUE(cv_verify_main({2, {}}));
}

TEST(CVMain, RandomCampaign) {
    for (std::uint64_t i = 0; i < 100; i++) {
        Rng rng(case_seed(7, i));
        auto n = 1 + static_cast<std::uint32_t>(uniform_below(rng, 3));
        auto c = random_cv_circuit(rng, n, 8);
        EXPECT_TRUE(cv_verify_main(c)) << "case " << i << "\n" << format_cv_circuit(c);
    }
}

TEST(CVMain, DetectsWrongPhase) {
    // Flipping the sign of the F generating function breaks the identity.
    auto c = three_wire_example();
    auto steps = cv_classical_steps(c);
    steps[0].g = -steps[0].g;
    auto paths = parametrize_paths(field, c.n, steps);
    EXPECT_FALSE(action_from_steps(field, c.n, steps).substitute(paths.substitution) == cv_phase_functional(c).phase);
}

TEST(CVActClassTraj, FourierExample) {
    auto r = cv_verify_actclasstraj({1, {CVGate::F(0)}}, {1}, {2});
    EXPECT_TRUE(r.has_trajectory);
    EXPECT_EQ(r.trajectories, 1u);
    ASSERT_EQ(r.offsets.size(), 1u);
    EXPECT_EQ(r.offsets[0], 0);
    // S_Phi = G_F(1, 2) = -2.
    std::map<std::string, Rational, VariableOrder> pt{{"q0_1", 1}, {"q1_1", 2}};
    EXPECT_EQ(cv_action_functional({1, {CVGate::F(0)}}).evaluate(pt), -2);
}

TEST(CVActClassTraj, IdentityAndInconsistentBoundaries) {
    auto id = cv_verify_actclasstraj({1, {CVGate::ID(0)}}, {Rational(3, 2)}, {Rational(3, 2)});
    EXPECT_TRUE(id.has_trajectory);
    EXPECT_TRUE(id.holds());
    EXPECT_EQ(id.offsets, std::vector<Rational>{0});
    // A free momentum gives two sampled trajectories.
    EXPECT_EQ(id.trajectories, 2u);

    auto sum = cv_verify_actclasstraj({2, {CVGate::SUM(0, 1)}}, {1, 2}, {5, 3});
    EXPECT_FALSE(sum.has_trajectory);
    EXPECT_TRUE(sum.holds());
    auto ok = cv_verify_actclasstraj({2, {CVGate::SUM(0, 1)}}, {1, 2}, {1, 3});
    EXPECT_TRUE(ok.has_trajectory);
    EXPECT_EQ(ok.offsets.size(), 1u);
}

TEST(CVActClassTraj, RandomCircuitsSingleOffset) {
    std::size_t with_trajectory = 0;
    for (std::uint64_t i = 0; i < 100; i++) {
        Rng rng(case_seed(33, i));
        auto n = 1 + static_cast<std::uint32_t>(uniform_below(rng, 3));
        auto c = random_cv_circuit(rng, n, 8);
        RationalVector q0, p0;
        for (std::uint32_t w = 0; w < n; w++) {
            q0.push_back(random_small_rational(rng));
            p0.push_back(random_small_rational(rng));
        }
        // qN reached from (q0, p0), so a trajectory exists.
        std::vector<RationalPolynomial> v;
        for (auto &e : q0) v.push_back(cst(e));
        for (auto &e : p0) v.push_back(cst(e));
        auto image = cv_circuit_symplectomorphism(c).apply(v);
        RationalVector qN;
        for (std::uint32_t w = 0; w < n; w++) {
            qN.push_back(image[w].constant_term());
        }
        auto r = cv_verify_actclasstraj(c, q0, qN);
        EXPECT_TRUE(r.has_trajectory);
        EXPECT_EQ(r.offsets.size(), 1u) << "case " << i << "\n" << format_cv_circuit(c);
        with_trajectory += r.has_trajectory;
    }
    EXPECT_EQ(with_trajectory, 100u);
}

TEST(CVActClassTraj, RejectsSymbolicParameters) {
    EXPECT_THROW(cv_verify_actclasstraj({1, {CVGate::X(0, tau)}}, {0}, {0}), Error);
}
