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

#ifndef ACCMAT_TRADEOFF_HPP
#define ACCMAT_TRADEOFF_HPP

#include "accmat/accuracy.hpp"
#include "accmat/operators.hpp"
#include "accmat/povm.hpp"

namespace accmat {

/// inf * finite positive = inf; inf * 0 is indeterminate and maps to NaN.
inline double extended_product(double a, double b) {
    if (std::isinf(a) || std::isinf(b)) {
        if (a == 0.0 || b == 0.0) return std::numeric_limits<double>::quiet_NaN();
        return std::numeric_limits<double>::infinity();
    }
    return a * b;
}

/// chi_a + chi_b - chi_a chi_b cos^2(theta). The bound "error product at
/// least sin^2(theta)" is equivalent to this form being at most 1, and the
/// form stays finite even where an error parameter diverges, so it is the
/// canonical decision quantity.
inline double bounded_tradeoff_form(double chi_a, double chi_b, double cos_theta) {
    return chi_a + chi_b - chi_a * chi_b * cos_theta * cos_theta;
}

struct TradeoffReport {
    double chi_a = 0.0;
    double chi_b = 0.0;
    double eps_a = 0.0;
    double eps_b = 0.0;
    double cos_theta = 0.0;
    double lhs = 0.0;       // eps_a * eps_b as an extended real
    double rhs = 0.0;       // sin^2(theta)
    double chi_form = 0.0;  // bounded decision form, compared against 1
    bool satisfied = false;
    bool equality = false;
};

/// Accuracy trade-off between two directions measured by one POVM.
inline TradeoffReport pairwise_tradeoff(const Povm& p, const Direction& n_a,
                                        const Direction& n_b) {
    AccuracyMatrix chi = accuracy_matrix(p);
    AccuracyReport ra = accuracy_parameter(chi, n_a);
    AccuracyReport rb = accuracy_parameter(chi, n_b);
    TradeoffReport t;
    t.chi_a = ra.chi_n;
    t.chi_b = rb.chi_n;
    t.eps_a = ra.eps_n;
    t.eps_b = rb.eps_n;
    t.cos_theta = dot(n_a.n, n_b.n);
    t.lhs = extended_product(t.eps_a, t.eps_b);
    double s2 = 1.0 - t.cos_theta * t.cos_theta;
    t.rhs = std::max(0.0, s2);
    t.chi_form = bounded_tradeoff_form(t.chi_a, t.chi_b, t.cos_theta);
    t.satisfied = t.chi_form <= 1.0 + tolerance::tradeoff_slack;
    t.equality = std::fabs(t.chi_form - 1.0) <= tolerance::tradeoff_slack;
    return t;
}

struct TripleTradeoffReport {
    std::array<double, 3> chi{};
    std::array<double, 3> eps{};
    double triple_product = 0.0;  // n_a . (n_b x n_c)
    double lhs = 0.0;             // eps_a eps_b eps_c as an extended real
    double rhs = 0.0;             // 8 (n_a . (n_b x n_c))^2
    double chi_form_lhs = 0.0;    // 8 T^2 chi_a chi_b chi_c
    double chi_form_rhs = 0.0;    // (1 - chi_a)(1 - chi_b)(1 - chi_c)
    bool satisfied = false;
    bool equality = false;
};

/// Accuracy trade-off among three directions. Coplanar triples are rejected:
/// the bound degenerates to 0 >= 0 there and carries no information.
inline TripleTradeoffReport triple_tradeoff(const Povm& p, const Direction& n_a,
                                            const Direction& n_b, const Direction& n_c) {
    double t3 = dot(n_a.n, cross(n_b.n, n_c.n));
    if (std::fabs(t3) <= 1e-9) {
        throw std::invalid_argument("triple_tradeoff: directions are coplanar");
    }
    AccuracyMatrix chi = accuracy_matrix(p);
    std::array<Direction, 3> dirs{n_a, n_b, n_c};
    TripleTradeoffReport t;
    t.triple_product = t3;
    for (int i = 0; i < 3; i++) {
        AccuracyReport r = accuracy_parameter(chi, dirs[static_cast<std::size_t>(i)]);
        t.chi[static_cast<std::size_t>(i)] = r.chi_n;
        t.eps[static_cast<std::size_t>(i)] = r.eps_n;
    }
    t.lhs = extended_product(extended_product(t.eps[0], t.eps[1]), t.eps[2]);
    t.rhs = 8.0 * t3 * t3;
    t.chi_form_lhs = 8.0 * t3 * t3 * t.chi[0] * t.chi[1] * t.chi[2];
    t.chi_form_rhs = (1.0 - t.chi[0]) * (1.0 - t.chi[1]) * (1.0 - t.chi[2]);
    t.satisfied = t.chi_form_lhs <= t.chi_form_rhs + tolerance::tradeoff_slack;
    bool ortho = std::fabs(dot(n_a.n, n_b.n)) <= 1e-6 && std::fabs(dot(n_b.n, n_c.n)) <= 1e-6 &&
                 std::fabs(dot(n_a.n, n_c.n)) <= 1e-6;
    bool eps_two = true;
    for (double e : t.eps) eps_two = eps_two && std::isfinite(e) && std::fabs(e - 2.0) <= 1e-6;
    t.equality = ortho && eps_two;
    return t;
}

/// Four-outcome POVM saturating the pairwise bound for target accuracies
/// (chi_a, chi_b) on the equality surface
/// chi_a + chi_b - chi_a chi_b cos^2(theta) = 1.
/// Element order matches the joint-measurement convention ++, +-, -+, --:
/// grouping (0,1)/(2,3) marginalizes to a nonideal measurement along n_a and
/// (0,2)/(1,3) to one along n_b.
inline Povm equality_povm(double chi_a, double chi_b, const Direction& n_a,
                          const Direction& n_b) {
    if (chi_a < 0.0 || chi_a > 1.0 + 1e-12 || chi_b < 0.0 || chi_b > 1.0 + 1e-12) {
        throw std::invalid_argument("equality_povm: accuracies must lie in [0, 1]");
    }
    double c = dot(n_a.n, n_b.n);
    double form = bounded_tradeoff_form(chi_a, chi_b, c);
    if (std::fabs(form - 1.0) > 1e-9) {
        throw std::invalid_argument("equality_povm: accuracies are off the equality surface");
    }
    if (chi_b <= 1e-12) return projection_povm(n_a);
    if (chi_a <= 1e-12) return projection_povm(n_b);

    Vec3 x1 = 0.25 * (std::sqrt(chi_a) * n_a.n + std::sqrt(chi_b) * n_b.n);
    Vec3 x2 = 0.25 * (std::sqrt(chi_a) * n_a.n - std::sqrt(chi_b) * n_b.n);
    double a1 = norm(x1);
    double a2 = norm(x2);
    if (a2 <= 1e-12) return projection_povm(direction_along(x1));
    if (a1 <= 1e-12) return projection_povm(direction_along(x2));
    Vec3 u1 = (1.0 / a1) * x1;
    Vec3 u2 = (1.0 / a2) * x2;
    Povm p;
    p.elements = {{a1, u1}, {a2, u2}, {a2, -1.0 * u2}, {a1, -1.0 * u1}};
    return p;
}

struct RegionPoint {
    double chi_a = 0.0;
    double chi_b = 0.0;
    bool feasible = false;
    char band = 'R';  // 'P': jointly measurable at right angles; 'Q': extra
                      // pairs reachable at theta = pi/6; 'R': the rest.
};

/// Grid scan of the accessible accuracy pairs at separation theta. The band
/// label is fixed by the reference angles pi/2 and pi/6 and does not depend
/// on the queried theta; the feasible flag does.
inline std::vector<RegionPoint> accessible_region(double theta, int grid) {
    if (grid < 2) throw std::invalid_argument("accessible_region: grid must be at least 2");
    double c = std::cos(theta);
    double c_q = std::cos(std::acos(-1.0) / 6.0);
    std::vector<RegionPoint> points;
    points.reserve(static_cast<std::size_t>(grid) * static_cast<std::size_t>(grid));
    for (int i = 0; i < grid; i++) {
        for (int j = 0; j < grid; j++) {
            RegionPoint pt;
            pt.chi_a = static_cast<double>(i) / (grid - 1);
            pt.chi_b = static_cast<double>(j) / (grid - 1);
            pt.feasible = bounded_tradeoff_form(pt.chi_a, pt.chi_b, c) <= 1.0 + 1e-12;
            bool in_p = pt.chi_a + pt.chi_b <= 1.0 + 1e-12;
            bool in_q = bounded_tradeoff_form(pt.chi_a, pt.chi_b, c_q) <= 1.0 + 1e-12;
            pt.band = in_p ? 'P' : (in_q ? 'Q' : 'R');
            points.push_back(pt);
        }
    }
    return points;
}

/// Measurement back-action: the operators' own outcome statistics read a
/// direction n_a, while the disturbed state degrades a later projective
/// measurement along n_b.
struct BackactionReport {
    double chi_a = 0.0;  // accuracy of the channel's outcomes along n_a
    double eps_a = 0.0;
    double chi_b = 0.0;  // accuracy surviving for a later reading along n_b
    double d_b = 0.0;    // back-action disturbance 1/chi_b - 1
    double cos_theta = 0.0;
    double lhs = 0.0;  // eps_a * d_b as an extended real
    double rhs = 0.0;  // sin^2(theta)
    double chi_form = 0.0;
    bool satisfied = false;
    bool equality = false;
};

/// POVM elements M_i^t M_i of the channel's own outcomes. May contain
/// zero-weight entries for vanishing operators; callers filter as needed.
inline std::vector<PovmElement> backaction_outcome_elements(const KrausChannel& ch) {
    std::vector<PovmElement> elems;
    elems.reserve(ch.ops.size());
    for (const Mat2c& m : ch.ops) {
        RvDecomposition d = to_rv(adjoint(m) * m);
        elems.push_back({d.r, d.v});
    }
    return elems;
}

/// Two-outcome POVM of "apply the channel, then project along n_b",
/// marginalized over the channel's outcome record.
inline std::array<PovmElement, 2> backaction_later_elements(const KrausChannel& ch,
                                                           const Direction& n_b) {
    std::array<PovmElement, 2> out{};
    for (int j = 0; j < 2; j++) {
        Mat2c acc = Mat2c::zero();
        Mat2c proj = spin_projector(j == 0 ? +1 : -1, n_b);
        for (const Mat2c& m : ch.ops) acc = acc + adjoint(m) * proj * m;
        RvDecomposition d = to_rv(acc);
        out[static_cast<std::size_t>(j)] = {d.r, d.v};
    }
    return out;
}

inline BackactionReport error_backaction(const KrausChannel& ch, const Direction& n_a,
                                         const Direction& n_b) {
    if (!is_trace_preserving(ch)) {
        throw std::invalid_argument("error_backaction: channel is not trace preserving");
    }
    Mat3 chi_out = Mat3::zero();
    for (const PovmElement& e : backaction_outcome_elements(ch)) {
        if (e.r <= 1e-14) continue;
        chi_out = chi_out + e.r * outer(e.v, e.v);
    }
    Mat3 chi_later = Mat3::zero();
    for (const PovmElement& e : backaction_later_elements(ch, n_b)) {
        if (e.r <= 1e-14) continue;
        chi_later = chi_later + e.r * outer(e.v, e.v);
    }
    AccuracyReport ra = accuracy_parameter(accuracy_matrix_from(chi_out), n_a);
    AccuracyReport rb = accuracy_parameter(accuracy_matrix_from(chi_later), n_b);
    BackactionReport b;
    b.chi_a = ra.chi_n;
    b.eps_a = ra.eps_n;
    b.chi_b = rb.chi_n;
    b.d_b = rb.eps_n;
    b.cos_theta = dot(n_a.n, n_b.n);
    b.lhs = extended_product(b.eps_a, b.d_b);
    b.rhs = std::max(0.0, 1.0 - b.cos_theta * b.cos_theta);
    b.chi_form = bounded_tradeoff_form(b.chi_a, b.chi_b, b.cos_theta);
    b.satisfied = b.chi_form <= 1.0 + tolerance::tradeoff_slack;
    b.equality = std::fabs(b.chi_form - 1.0) <= tolerance::tradeoff_slack;
    return b;
}

/// Strength-kappa weak measurement along z: kappa = 0 reads nothing and
/// disturbs nothing, kappa = 1 is projective. Saturates the back-action
/// bound for orthogonal read and probe directions.
inline KrausChannel weak_measurement(double kappa) {
    if (kappa < 0.0 || kappa > 1.0) {
        throw std::invalid_argument("weak_measurement: strength must lie in [0, 1]");
    }
    Direction z{{0.0, 0.0, 1.0}};
    Mat2c plus = spin_projector(+1, z);
    Mat2c minus = spin_projector(-1, z);
    double hi = std::sqrt((1.0 + kappa) / 2.0);
    double lo = std::sqrt((1.0 - kappa) / 2.0);
    KrausChannel ch;
    ch.ops = {hi * plus + lo * minus, lo * plus + hi * minus};
    return ch;
}

}  // namespace accmat

#endif
