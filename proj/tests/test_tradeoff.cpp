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
using namespace accmat::testing;
using Catch::Matchers::WithinAbs;

namespace {
const Direction kZ = direction({0.0, 0.0, 1.0});
const Direction kX = direction({1.0, 0.0, 0.0});
const Direction kY = direction({0.0, 1.0, 0.0});
}  // namespace

TEST_CASE("pairwise bound for the reference tomography") {
    TradeoffReport t = pairwise_tradeoff(standard_tomography_povm(), kZ, kX);
    CHECK(t.satisfied);
    CHECK_FALSE(t.equality);
    CHECK_THAT(t.chi_a, WithinAbs(1.0 / 3.0, 1e-13));
    CHECK_THAT(t.chi_b, WithinAbs(1.0 / 3.0, 1e-13));
    CHECK_THAT(t.lhs, WithinAbs(4.0, 1e-11));
    CHECK_THAT(t.rhs, WithinAbs(1.0, 1e-15));
    CHECK_THAT(t.chi_form, WithinAbs(2.0 / 3.0, 1e-13));
}

TEST_CASE("projection sits on the boundary with an indeterminate product") {
    // Perfect along z, blind along x: eps are 0 and inf, the epsilon-form
    // product carries no information, but the bounded form decides.
    TradeoffReport t = pairwise_tradeoff(projection_povm(kZ), kZ, kX);
    CHECK(t.satisfied);
    CHECK(t.equality);
    CHECK_THAT(t.chi_form, WithinAbs(1.0, 1e-12));
    CHECK(std::isnan(t.lhs));
    CHECK(std::isinf(t.eps_b));
}

TEST_CASE("epsilon-form and bounded form agree where both are finite") {
    for (std::uint64_t seed = 1; seed <= 100; seed++) {
        Povm p = random_povm(3 + seed % 4, 40 + seed);
        Rng rng(seed);
        TradeoffReport t = pairwise_tradeoff(p, random_direction(rng), random_direction(rng));
        CHECK(t.satisfied);
        if (!std::isfinite(t.lhs) || t.chi_a <= 0.0 || t.chi_b <= 0.0) continue;
        double lhs_minus_rhs = t.lhs - t.rhs;
        double via_chi = (1.0 - t.chi_form) / (t.chi_a * t.chi_b);
        CHECK_THAT(lhs_minus_rhs - via_chi,
                   WithinAbs(0.0, 1e-9 * std::max(1.0, std::fabs(via_chi))));
    }
}

TEST_CASE("equality measurement at right angles with equal accuracies") {
    Povm p = equality_povm(0.5, 0.5, kZ, kX);
    REQUIRE(p.size() == 4);
    CHECK(validate_povm(p).ok());
    Vec3 d1 = unit(Vec3{1.0, 0.0, 1.0});
    for (const PovmElement& e : p.elements) {
        CHECK_THAT(e.r, WithinAbs(0.25, 1e-12));
        CHECK_THAT(norm(e.v), WithinAbs(1.0, 1e-12));
        CHECK_THAT(std::fabs(dot(e.v, d1)) * std::fabs(dot(e.v, d1)) +
                       std::fabs(dot(e.v, cross(d1, kY.n))) * std::fabs(dot(e.v, cross(d1, kY.n))),
                   WithinAbs(1.0, 1e-12));
    }
    TradeoffReport t = pairwise_tradeoff(p, kZ, kX);
    CHECK(t.equality);
    CHECK_THAT(t.chi_a, WithinAbs(0.5, 1e-12));
    CHECK_THAT(t.chi_b, WithinAbs(0.5, 1e-12));
}

TEST_CASE("equality measurement rejects off-surface requests") {
    CHECK_THROWS_AS(equality_povm(0.9, 0.9, kZ, kX), std::invalid_argument);
    CHECK_THROWS_AS(equality_povm(0.1, 0.1, kZ, kX), std::invalid_argument);
    CHECK_THROWS_AS(equality_povm(1.2, 0.5, kZ, kX), std::invalid_argument);
}

TEST_CASE("equality measurement degenerates to a projection") {
    Povm p = equality_povm(1.0, 0.0, kZ, kX);
    REQUIRE(p.size() == 2);
    CHECK_THAT(std::fabs(p.elements[0].v.z), WithinAbs(1.0, 1e-15));

    // On the surface, chi_b = 1 forces chi_a = 0: reading n_b perfectly
    // leaves the measurement blind about every other axis.
    double theta = 0.7;
    Direction n_b = direction({std::sin(theta), 0.0, std::cos(theta)});
    Povm q = equality_povm(0.0, 1.0, kZ, n_b);
    REQUIRE(q.size() == 2);
    TradeoffReport t = pairwise_tradeoff(q, kZ, n_b);
    CHECK_THAT(t.chi_b, WithinAbs(1.0, 1e-9));
    CHECK_THAT(t.chi_a, WithinAbs(0.0, 1e-12));
    CHECK(t.satisfied);
}

TEST_CASE("equality surface sweep produces valid saturating measurements") {
    Rng rng(77);
    for (int rep = 0; rep < 100; rep++) {
        double theta = rng.uniform(0.2, 3.0);
        Direction n_b = direction({std::sin(theta), 0.0, std::cos(theta)});
        double c2 = std::cos(theta) * std::cos(theta);
        double chi_a = rng.uniform(0.0, 1.0);
        // Solve the surface equation for chi_b.
        double chi_b = (1.0 - chi_a) / (1.0 - chi_a * c2);
        Povm p = equality_povm(chi_a, chi_b, kZ, n_b);
        CHECK(validate_povm(p).ok());
        TradeoffReport t = pairwise_tradeoff(p, kZ, n_b);
        CHECK(t.satisfied);
        CHECK(t.equality);
        CHECK_THAT(t.chi_a - chi_a, WithinAbs(0.0, 1e-9));
        CHECK_THAT(t.chi_b - chi_b, WithinAbs(0.0, 1e-9));
    }
}

TEST_CASE("triple bound at the symmetric point") {
    TripleTradeoffReport t = triple_tradeoff(standard_tomography_povm(), kX, kY, kZ);
    CHECK(t.satisfied);
    CHECK(t.equality);
    CHECK_THAT(t.lhs, WithinAbs(8.0, 1e-10));
    CHECK_THAT(t.rhs, WithinAbs(8.0, 1e-14));

    CHECK_THROWS_AS(
        triple_tradeoff(standard_tomography_povm(), kX, kY, direction_along({1.0, 1.0, 0.0})),
        std::invalid_argument);
}

TEST_CASE("triple bound holds with diverging errors") {
    // Every direction off the projection's axis is invisible: the three
    // error parameters all diverge and the product is infinite, while the
    // chi form decides the bound at 0 <= 1.
    Direction a = direction_along({1.0, 0.0, 1.0});
    Direction b = direction_along({0.0, 1.0, 1.0});
    Direction c = direction_along({1.0, 1.0, -1.0});
    TripleTradeoffReport t = triple_tradeoff(projection_povm(kZ), a, b, c);
    CHECK(t.satisfied);
    CHECK(std::isinf(t.lhs));
    CHECK(t.chi_form_lhs == 0.0);

    // With the measured axis among the directions the product is 0 * inf,
    // reported as NaN; the chi form still settles the verdict.
    TripleTradeoffReport u = triple_tradeoff(projection_povm(kZ), kX, kY, kZ);
    CHECK(u.satisfied);
    CHECK(std::isnan(u.lhs));
    CHECK(u.chi_form_lhs == 0.0);
}

TEST_CASE("triple bound on random measurements") {
    for (std::uint64_t seed = 1; seed <= 100; seed++) {
        Povm p = random_povm(3 + seed % 5, 2000 + seed);
        Rng rng(seed);
        Direction a = random_direction(rng);
        Direction b = random_direction(rng);
        Direction c = random_direction(rng);
        if (std::fabs(dot(a.n, cross(b.n, c.n))) <= 1e-3) continue;
        CHECK(triple_tradeoff(p, a, b, c).satisfied);
    }
}

TEST_CASE("accessible region grid and bands") {
    std::vector<RegionPoint> pts = accessible_region(std::acos(-1.0) / 2.0, 3);
    REQUIRE(pts.size() == 9);
    // Row-major corners at right angles: additivity decides feasibility.
    CHECK(pts[0].feasible);       // (0, 0)
    CHECK(pts[5].feasible == false);  // (0.5, 1)
    CHECK(pts[8].feasible == false);  // (1, 1)
    CHECK(pts[4].feasible);       // (0.5, 0.5)
    CHECK(pts[4].band == 'P');
    CHECK(pts[5].band == 'R');

    // Bands are fixed by the reference angles even when theta changes.
    std::vector<RegionPoint> tight = accessible_region(std::acos(-1.0) / 6.0, 3);
    CHECK(tight[5].band == 'R');
    CHECK(tight[5].feasible == false);  // form = 1.125 > 1 at pi/6

    for (const RegionPoint& pt : accessible_region(1.1, 21)) {
        bool expect = bounded_tradeoff_form(pt.chi_a, pt.chi_b, std::cos(1.1)) <= 1.0 + 1e-12;
        CHECK(pt.feasible == expect);
    }
    CHECK_THROWS_AS(accessible_region(1.0, 1), std::invalid_argument);
}

TEST_CASE("band Q is nonempty at intermediate angles") {
    // (0.9, 0.3): additivity fails but the pi/6 surface admits it.
    double c_q = std::cos(std::acos(-1.0) / 6.0);
    CHECK(bounded_tradeoff_form(0.9, 0.3, c_q) <= 1.0);
    std::vector<RegionPoint> pts = accessible_region(std::acos(-1.0) / 6.0, 11);
    bool found_q = false;
    for (const RegionPoint& pt : pts) found_q = found_q || pt.band == 'Q';
    CHECK(found_q);
}

TEST_CASE("weak measurement saturates the back-action bound") {
    for (double kappa : {0.1, 0.3, 0.5, 0.7, 0.9}) {
        BackactionReport b = error_backaction(weak_measurement(kappa), kZ, kX);
        CHECK(b.satisfied);
        CHECK(b.equality);
        CHECK_THAT(b.chi_a, WithinAbs(kappa * kappa, 1e-12));
        CHECK_THAT(b.chi_b, WithinAbs(1.0 - kappa * kappa, 1e-12));
        CHECK_THAT(b.lhs, WithinAbs(1.0, 1e-9));
        CHECK_THAT(b.rhs, WithinAbs(1.0, 1e-15));
    }
}

TEST_CASE("back-action extremes") {
    // kappa = 1 is projective: perfect record, total transverse disturbance.
    BackactionReport proj = error_backaction(weak_measurement(1.0), kZ, kX);
    CHECK(proj.satisfied);
    CHECK_THAT(proj.eps_a, WithinAbs(0.0, 1e-12));
    CHECK(std::isinf(proj.d_b));

    // kappa = 0 reads nothing and disturbs nothing.
    BackactionReport idle = error_backaction(weak_measurement(0.0), kZ, kX);
    CHECK(idle.satisfied);
    CHECK(std::isinf(idle.eps_a));
    CHECK_THAT(idle.d_b, WithinAbs(0.0, 1e-12));

    // Probing along the read axis costs nothing.
    BackactionReport along = error_backaction(weak_measurement(0.6), kZ, kZ);
    CHECK(along.satisfied);
    CHECK_THAT(along.d_b, WithinAbs(0.0, 1e-12));
    CHECK_THAT(along.rhs, WithinAbs(0.0, 1e-15));
}

TEST_CASE("back-action bound on random channels") {
    Rng rng(55);
    for (int rep = 0; rep < 200; rep++) {
        KrausChannel ch = random_channel(rng);
        REQUIRE(is_trace_preserving(ch));
        CHECK(error_backaction(ch, random_direction(rng), random_direction(rng)).satisfied);
    }

    KrausChannel broken;
    broken.ops = {Mat2c::identity(), 0.5 * Mat2c::identity()};
    CHECK_THROWS_AS(error_backaction(broken, kZ, kX), std::invalid_argument);
}
