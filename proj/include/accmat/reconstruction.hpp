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

#ifndef ACCMAT_RECONSTRUCTION_HPP
#define ACCMAT_RECONSTRUCTION_HPP

#include "accmat/accuracy.hpp"
#include "accmat/povm.hpp"

namespace accmat {

/// Affine probability map of a POVM: q = M s + r, with row k of M equal to
/// r_k v_k^T and offset r_k.
struct MeasurementMatrix {
    std::vector<Vec3> rows;
    std::vector<double> offsets;
};

inline MeasurementMatrix measurement_matrix(const Povm& p) {
    MeasurementMatrix m;
    m.rows.reserve(p.size());
    m.offsets.reserve(p.size());
    for (const PovmElement& e : p.elements) {
        m.rows.push_back(e.r * e.v);
        m.offsets.push_back(e.r);
    }
    return m;
}

/// The direction's outcome distribution is linearly recoverable exactly
/// when n lies in span{v_k}, which is the support of the accuracy matrix.
inline bool is_reconstructive(const Povm& p, const Direction& n) {
    AccuracyMatrix a = accuracy_matrix(p);
    double cutoff = tolerance::support_cutoff * std::max(1.0, a.eigenvalues[0]);
    double proj2 = 0.0;
    for (int i = 0; i < 3; i++) {
        if (a.eigenvalues[i] <= cutoff) continue;
        double c = dot(n.n, a.eigenvectors[i]);
        proj2 += c * c;
    }
    return std::sqrt(proj2) >= 1.0 - tolerance::support_projection;
}

inline bool is_tomographically_complete(const Povm& p) {
    return accuracy_matrix(p).support_rank == 3;
}

/// Minimum-norm least-squares solution of M s = q - r restricted to the
/// row space, via the eigensystem of M^T M with the shared relative
/// cutoff applied to its eigenvalues. The cutoff must act on the
/// eigenvalues, not their square roots: rounding noise in an exactly
/// singular M^T M sits near 1e-16 times the leading eigenvalue, and
/// dividing by such a value would inject an arbitrarily large component
/// that the residual cannot see. Returns (s, residual ||M s - (q - r)||).
inline std::pair<Vec3, double> least_squares_state(const Povm& p, const OutcomeDistribution& q) {
    if (q.q.size() != p.size()) {
        throw std::invalid_argument("least_squares_state: distribution length mismatch");
    }
    double qsum = 0.0;
    for (double qi : q.q) {
        if (qi < -1e-12) {
            throw std::invalid_argument("least_squares_state: negative probability");
        }
        qsum += qi;
    }
    if (std::fabs(qsum - 1.0) > 1e-8) {
        throw std::invalid_argument("least_squares_state: probabilities do not sum to 1");
    }

    MeasurementMatrix m = measurement_matrix(p);
    Mat3 mtm = Mat3::zero();
    Vec3 mtb{};
    for (std::size_t k = 0; k < m.rows.size(); k++) {
        mtm = mtm + outer(m.rows[k], m.rows[k]);
        mtb = mtb + (q.q[k] - m.offsets[k]) * m.rows[k];
    }
    SymmetricEigen e = eigen_symmetric(mtm);
    double cutoff = tolerance::support_cutoff * std::max(1.0, e.values[0]);
    Vec3 s{};
    for (int i = 0; i < 3; i++) {
        if (e.values[i] <= cutoff) continue;
        s = s + (dot(e.vectors[i], mtb) / e.values[i]) * e.vectors[i];
    }

    double residual2 = 0.0;
    for (std::size_t k = 0; k < m.rows.size(); k++) {
        double d = dot(m.rows[k], s) + m.offsets[k] - q.q[k];
        residual2 += d * d;
    }
    return {s, std::sqrt(residual2)};
}

/// Recovers the state class behind an exact outcome distribution. Rejects
/// distributions outside the affine image of the Bloch ball: residual above
/// residual_tol, or a minimum-norm representative outside the ball.
inline BlochVector reconstruct_state_class(const Povm& p, const OutcomeDistribution& q,
                                           double residual_tol = tolerance::reconstruction_residual) {
    auto [s, residual] = least_squares_state(p, q);
    if (residual > residual_tol) {
        throw InconsistentDistributionError(
            "reconstruct_state_class: residual " + std::to_string(residual) +
            " exceeds tolerance (corrupted data or mismatched POVM)");
    }
    if (norm(s) > 1.0 + tolerance::unit_norm) {
        throw InconsistentDistributionError(
            "reconstruct_state_class: recovered representative lies outside the Bloch ball");
    }
    return {s};
}

/// p(+/-; n) for a reconstructive direction; throws NotReconstructiveError
/// when n leaves the span of the POVM's Bloch vectors.
inline std::pair<double, double> reconstruct_direction_probability(
    const Povm& p, const OutcomeDistribution& q, const Direction& n,
    double residual_tol = tolerance::reconstruction_residual) {
    if (!is_reconstructive(p, n)) {
        throw NotReconstructiveError(
            "reconstruct_direction_probability: direction leaves the measurement's span");
    }
    BlochVector s = reconstruct_state_class(p, q, residual_tol);
    double c = dot(n.n, s.s);
    double plus = std::min(1.0, std::max(0.0, 0.5 * (1.0 + c)));
    return {plus, 1.0 - plus};
}

}  // namespace accmat

#endif
