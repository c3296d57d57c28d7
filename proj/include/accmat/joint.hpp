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

#ifndef ACCMAT_JOINT_HPP
#define ACCMAT_JOINT_HPP

#include <utility>

#include "accmat/accuracy.hpp"
#include "accmat/sampling.hpp"
#include "accmat/transition.hpp"

namespace accmat {

/// Four-outcome measurement with outcomes labeled by two signs, stored in
/// the fixed order ++, +-, -+, --. The first sign is marginal A (grouping
/// {0,1} vs {2,3}), the second is marginal B (grouping {0,2} vs {1,3}).
struct JointPovm {
    std::array<PovmElement, 4> elements{};
};

/// Flattens to a plain POVM, dropping zero-weight outcomes.
inline Povm as_povm(const JointPovm& jp) {
    Povm p;
    for (const PovmElement& e : jp.elements) {
        if (e.r <= 1e-14) continue;
        p.elements.push_back(e);
    }
    return p;
}

inline ValidationReport validate_joint(const JointPovm& jp) {
    return validate_povm(as_povm(jp));
}

namespace detail {
inline Povm merge_pairs(const JointPovm& jp, int i0, int i1, int j0, int j1) {
    auto grab = [&](int k) { return jp.elements[static_cast<std::size_t>(k)]; };
    Povm p;
    for (auto [a, b] : {std::pair{i0, i1}, std::pair{j0, j1}}) {
        double r = grab(a).r + grab(b).r;
        if (r <= 1e-14) continue;
        Vec3 v = (1.0 / r) * (grab(a).r * grab(a).v + grab(b).r * grab(b).v);
        p.elements.push_back({r, v});
    }
    return p;
}
}  // namespace detail

/// The two binary marginal measurements (A first). Balance of the parent
/// POVM makes each marginal's Bloch vectors exactly antiparallel.
inline std::pair<Povm, Povm> marginals(const JointPovm& jp) {
    return {detail::merge_pairs(jp, 0, 1, 2, 3), detail::merge_pairs(jp, 0, 2, 1, 3)};
}

/// True when marginal A is a nonideal measurement along n_a and marginal B
/// one along n_b: every marginal Bloch vector is (anti)parallel to its axis.
inline bool is_nonideal_joint(const JointPovm& jp, const Direction& n_a, const Direction& n_b) {
    auto [ma, mb] = marginals(jp);
    auto aligned = [](const Povm& m, const Vec3& axis) {
        for (const PovmElement& e : m.elements) {
            if (norm(cross(e.v, axis)) > 1e-9) return false;
        }
        return true;
    };
    return aligned(ma, n_a.n) && aligned(mb, n_b.n);
}

/// Closed-form accuracy of a marginal along its own axis,
/// |r1 v1 + r2 v2|^2 / (r1 + r2) summed over the two outcome groups.
/// Zero-weight groups contribute nothing.
inline double marginal_accuracy_closed_form(const JointPovm& jp, bool marginal_a) {
    auto grab = [&](int k) { return jp.elements[static_cast<std::size_t>(k)]; };
    auto term = [&](int a, int b) {
        double r = grab(a).r + grab(b).r;
        if (r <= 1e-14) return 0.0;
        Vec3 t = grab(a).r * grab(a).v + grab(b).r * grab(b).v;
        return norm2(t) / r;
    };
    return marginal_a ? term(0, 1) + term(2, 3) : term(0, 2) + term(1, 3);
}

struct MarginalAccuracyReport {
    double chi_a_support = 0.0;  // via the accuracy-matrix pseudo-inverse
    double chi_a_closed = 0.0;   // via the binary closed form
    double chi_b_support = 0.0;
    double chi_b_closed = 0.0;
    double max_abs_diff = 0.0;
};

/// Cross-checks the two independent routes to the marginal accuracies of a
/// nonideal joint measurement. They agree to rounding for genuine inputs.
inline MarginalAccuracyReport marginal_accuracy_equivalence(const JointPovm& jp,
                                                            const Direction& n_a,
                                                            const Direction& n_b) {
    auto [ma, mb] = marginals(jp);
    auto support_chi = [](const Povm& m, const Direction& n) {
        Mat3 chi = Mat3::zero();
        for (const PovmElement& e : m.elements) chi = chi + e.r * outer(e.v, e.v);
        return accuracy_parameter(accuracy_matrix_from(chi), n).chi_n;
    };
    MarginalAccuracyReport rep;
    rep.chi_a_support = support_chi(ma, n_a);
    rep.chi_a_closed = marginal_accuracy_closed_form(jp, true);
    rep.chi_b_support = support_chi(mb, n_b);
    rep.chi_b_closed = marginal_accuracy_closed_form(jp, false);
    rep.max_abs_diff = std::max(std::fabs(rep.chi_a_support - rep.chi_a_closed),
                                std::fabs(rep.chi_b_support - rep.chi_b_closed));
    return rep;
}

/// Marginalizing is a coarse-graining, so along any direction the marginal
/// can never be more accurate than the full four-outcome measurement.
inline bool marginal_dominance(const JointPovm& jp, const Direction& n,
                               double tol = tolerance::tradeoff_slack) {
    AccuracyMatrix full = accuracy_matrix(as_povm(jp));
    double chi_full = accuracy_parameter(full, n).chi_n;
    auto [ma, mb] = marginals(jp);
    for (const Povm* m : {&ma, &mb}) {
        Mat3 chi = Mat3::zero();
        for (const PovmElement& e : m->elements) chi = chi + e.r * outer(e.v, e.v);
        if (accuracy_parameter(accuracy_matrix_from(chi), n).chi_n > chi_full + tol) return false;
    }
    return true;
}

/// Determinant-squared figures of a binary measurement used by older
/// analyses: x = (det F)^2 and the matching error e = 1/x - 1. For a
/// symmetric binary measurement x equals the accuracy along the axis.
struct LegacyParameters {
    double x = 0.0;
    double e = std::numeric_limits<double>::infinity();
};

inline LegacyParameters legacy_parameters(const Povm& p) {
    TransitionMatrix f = binary_transition_matrix(p);
    double det = f.at(0, 0) * f.at(1, 1) - f.at(0, 1) * f.at(1, 0);
    LegacyParameters lp;
    lp.x = det * det;
    if (lp.x > 1e-300) lp.e = 1.0 / lp.x - 1.0;
    return lp;
}

/// Random four-outcome joint measurement whose marginals are nonideal along
/// n_a and n_b. Weighted Bloch vectors w_k = r_k v_k are built so that each
/// marginal pair sums to a multiple of its axis and the total vanishes.
inline JointPovm random_nonideal_joint(const Direction& n_a, const Direction& n_b,
                                       std::uint64_t seed) {
    Rng rng(seed);
    for (int attempt = 0; attempt < 10000; attempt++) {
        std::array<double, 4> r{};
        double sum = 0.0;
        for (double& ri : r) {
            ri = -std::log(1.0 - rng.uniform());
            sum += ri;
        }
        double rmin = std::numeric_limits<double>::infinity();
        for (double& ri : r) {
            ri /= sum;
            rmin = std::min(rmin, ri);
        }
        if (rmin < 1e-3) continue;

        double s = rmin / 4.0;
        Vec3 w1 = s * rng.ball_vector();
        double alpha = rng.uniform(-s, s);
        double beta = rng.uniform(-s, s);
        std::array<Vec3, 4> w{w1, alpha * n_a.n - w1, beta * n_b.n - w1,
                              w1 - alpha * n_a.n - beta * n_b.n};
        JointPovm jp;
        bool ok = true;
        for (int k = 0; k < 4; k++) {
            Vec3 v = (1.0 / r[static_cast<std::size_t>(k)]) * w[static_cast<std::size_t>(k)];
            if (norm(v) > 1.0) {
                ok = false;
                break;
            }
            jp.elements[static_cast<std::size_t>(k)] = {r[static_cast<std::size_t>(k)], v};
        }
        if (ok) return jp;
    }
    throw SamplingExhaustedError("random_nonideal_joint: no admissible sample found");
}

}  // namespace accmat

#endif
