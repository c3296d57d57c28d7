// Copyright 2026 The accmat Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace accmat;
using Catch::Matchers::WithinAbs;

TEST_CASE("state and direction constructors enforce their domains") {
    CHECK_NOTHROW(bloch_vector({0.0, 0.0, 1.0}));
    CHECK_NOTHROW(bloch_vector({0.3, -0.2, 0.1}));
    CHECK_THROWS_AS(bloch_vector({0.8, 0.8, 0.8}), std::invalid_argument);
    CHECK_NOTHROW(direction({0.0, 1.0, 0.0}));
    CHECK_THROWS_AS(direction({0.0, 0.5, 0.0}), std::invalid_argument);
    Direction d = direction_along({0.0, 3.0, 4.0});
    CHECK_THAT(norm(d.n), WithinAbs(1.0, 1e-15));
    CHECK_THAT(d.n.y, WithinAbs(0.6, 1e-15));
}

TEST_CASE("projection measurement is valid") {
    Povm p = projection_povm(direction({0.0, 0.0, 1.0}));
    REQUIRE(p.size() == 2);
    CHECK(validate_povm(p).ok());
    CHECK_THAT(p.elements[0].r, WithinAbs(0.5, 1e-15));
    CHECK_THAT(norm(p.elements[0].v + p.elements[1].v), WithinAbs(0.0, 1e-15));
}

TEST_CASE("validation flags each defect separately") {
    Povm p = projection_povm(direction({0.0, 0.0, 1.0}));

    SECTION("weights off") {
        p.elements[0].r = 0.6;
        ValidationReport r = validate_povm(p);
        CHECK_FALSE(r.ok());
        // 0.6 + 0.5 breaks the weight sum, and the weighted vectors no
        // longer cancel.
        CHECK(r.violations.size() == 2);
    }
    SECTION("bias") {
        p.elements[1].v = Vec3{0.0, 0.0, -0.5};
        ValidationReport r = validate_povm(p);
        CHECK_FALSE(r.ok());
        CHECK(r.violations.size() == 1);
        CHECK_THAT(r.violations[0].residual, WithinAbs(0.25, 1e-12));
    }
    SECTION("vector too long") {
        p.elements[0].v = Vec3{0.0, 0.0, 1.5};
        p.elements[1].v = Vec3{0.0, 0.0, -1.5};
        CHECK_FALSE(validate_povm(p).ok());
    }
    SECTION("nonpositive weight") {
        p.elements[0].r = 0.0;
        p.elements[1].r = 1.0;
        CHECK_FALSE(validate_povm(p).ok());
    }
    SECTION("too few outcomes") {
        p.elements.pop_back();
        CHECK_FALSE(validate_povm(p).ok());
    }
    SECTION("custom tolerance") {
        p.elements[0].r = 0.5 + 5e-4;
        p.elements[1].r = 0.5 - 5e-4;
        CHECK_FALSE(validate_povm(p).ok());
        CHECK(validate_povm(p, 1e-2, 1e-2).ok());
    }
}

TEST_CASE("outcome probabilities") {
    Povm p = projection_povm(direction({0.0, 0.0, 1.0}));
    OutcomeDistribution q = outcome_probabilities(p, bloch_vector({0.0, 0.0, 0.5}));
    CHECK_THAT(q.q[0], WithinAbs(0.75, 1e-15));
    CHECK_THAT(q.q[1], WithinAbs(0.25, 1e-15));

    // x-polarized state read by the six-outcome reference measurement.
    OutcomeDistribution qs =
        outcome_probabilities(standard_tomography_povm(), bloch_vector({1.0, 0.0, 0.0}));
    CHECK_THAT(qs.q[0], WithinAbs(1.0 / 3.0, 1e-15));
    CHECK_THAT(qs.q[1], WithinAbs(0.0, 1e-15));
    for (int k = 2; k < 6; k++) CHECK_THAT(qs.q[static_cast<std::size_t>(k)], WithinAbs(1.0 / 6.0, 1e-15));

    auto [plus, minus] = direction_distribution(direction({1.0, 0.0, 0.0}),
                                                bloch_vector({0.5, 0.0, 0.0}));
    CHECK_THAT(plus, WithinAbs(0.75, 1e-15));
    CHECK_THAT(minus, WithinAbs(0.25, 1e-15));
}

TEST_CASE("nonideal measurement construction") {
    Povm p = nonideal_povm(0.5, 0.6, 0.6, direction({0.0, 0.0, 1.0}));
    CHECK(validate_povm(p).ok());
    CHECK_THAT(p.elements[0].v.z, WithinAbs(0.6, 1e-15));
    CHECK_THAT(p.elements[1].v.z, WithinAbs(-0.6, 1e-15));

    // Asymmetric but balanced: r eps1 = (1-r) eps2.
    CHECK(validate_povm(nonideal_povm(0.25, 0.6, 0.2, direction({0.0, 0.0, 1.0}))).ok());
    // Unbalanced pairs are rejected outright.
    CHECK_THROWS_AS(nonideal_povm(0.3, 0.6, 0.2, direction({0.0, 0.0, 1.0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(nonideal_povm(0.5, 1.2, 1.2, direction({0.0, 0.0, 1.0})),
                    std::invalid_argument);
    CHECK_THROWS_AS(nonideal_povm(0.0, 0.5, 0.5, direction({0.0, 0.0, 1.0})),
                    std::invalid_argument);
}

TEST_CASE("probabilistic mixture concatenates with scaled weights") {
    Povm a = projection_povm(direction({1.0, 0.0, 0.0}));
    Povm b = projection_povm(direction({0.0, 0.0, 1.0}));
    Povm mix = probabilistic_mixture(0.5, a, b);
    REQUIRE(mix.size() == 4);
    CHECK(validate_povm(mix).ok());
    for (const PovmElement& e : mix.elements) CHECK_THAT(e.r, WithinAbs(0.25, 1e-15));

    Povm all_b = probabilistic_mixture(0.0, a, b);
    CHECK(all_b.size() == 2);
    CHECK(validate_povm(all_b).ok());
}

TEST_CASE("reference tomography measurements") {
    Povm s = standard_tomography_povm();
    REQUIRE(s.size() == 6);
    CHECK(validate_povm(s).ok());
    for (const PovmElement& e : s.elements) {
        CHECK_THAT(e.r, WithinAbs(1.0 / 6.0, 1e-16));
        CHECK_THAT(norm(e.v), WithinAbs(1.0, 1e-15));
    }

    Povm m = minimal_tomography_povm();
    REQUIRE(m.size() == 4);
    CHECK(validate_povm(m).ok());
    for (std::size_t i = 0; i < 4; i++) {
        CHECK_THAT(m.elements[i].r, WithinAbs(0.25, 1e-16));
        CHECK_THAT(norm(m.elements[i].v), WithinAbs(1.0, 1e-15));
        for (std::size_t j = i + 1; j < 4; j++) {
            // Tetrahedral: every pair at the same obtuse angle.
            CHECK_THAT(dot(m.elements[i].v, m.elements[j].v), WithinAbs(-1.0 / 3.0, 1e-15));
        }
    }
}

TEST_CASE("random POVMs are valid and reproducible") {
    for (std::size_t m = 2; m <= 8; m++) {
        Povm p = random_povm(m, 1000 + m);
        CHECK(p.size() == m);
        CHECK(validate_povm(p).ok());
    }
    Povm a = random_povm(5, 42);
    Povm b = random_povm(5, 42);
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); k++) {
        CHECK(a.elements[k].r == b.elements[k].r);
        CHECK(norm(a.elements[k].v - b.elements[k].v) == 0.0);
    }
}

TEST_CASE("outcome sampling is deterministic and unbiased") {
    Povm p = projection_povm(direction({0.0, 0.0, 1.0}));
    BlochVector s = bloch_vector({0.0, 0.0, 0.2});
    Counts c1 = sample_outcomes(p, s, 100000, 7);
    Counts c2 = sample_outcomes(p, s, 100000, 7);
    CHECK(c1.counts == c2.counts);
    CHECK(c1.total == 100000);
    CHECK(c1.counts[0] + c1.counts[1] == 100000);
    // p+ = 0.6: five-sigma band on the count.
    double sigma = std::sqrt(100000 * 0.6 * 0.4);
    CHECK(std::fabs(static_cast<double>(c1.counts[0]) - 60000.0) < 5.0 * sigma);

    Counts c3 = sample_outcomes(p, s, 100000, 8);
    CHECK(c1.counts != c3.counts);
}
