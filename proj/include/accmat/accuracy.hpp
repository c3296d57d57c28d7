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

#ifndef ACCMAT_ACCURACY_HPP
#define ACCMAT_ACCURACY_HPP

#include <limits>

#include "accmat/povm.hpp"
#include "accmat/vec3.hpp"

namespace accmat {

/// chi(E) = sum_k r_k v_k v_k^T together with its eigensystem.
/// For a valid POVM chi is symmetric PSD with 0 <= chi <= I and
/// trace <= 1; the trace reaches 1 exactly when every |v_k| = 1.
struct AccuracyMatrix {
    Mat3 chi;
    std::array<double, 3> eigenvalues{};  // descending
    std::array<Vec3, 3> eigenvectors{};   // orthonormal, deterministic signs
    int support_rank = 0;
};

/// Decomposes an externally assembled symmetric matrix with the same
/// support convention as accuracy_matrix.
inline AccuracyMatrix accuracy_matrix_from(const Mat3& chi) {
    AccuracyMatrix a;
    a.chi = chi;
    SymmetricEigen e = eigen_symmetric(chi);
    a.eigenvalues = e.values;
    a.eigenvectors = e.vectors;
    double cutoff = tolerance::support_cutoff * std::max(1.0, e.values[0]);
    for (int i = 0; i < 3; i++) {
        if (e.values[i] > cutoff) a.support_rank++;
    }
    return a;
}

inline AccuracyMatrix accuracy_matrix(const Povm& p) {
    Mat3 chi = Mat3::zero();
    for (const PovmElement& e : p.elements) {
        chi = chi + e.r * outer(e.v, e.v);
    }
    return accuracy_matrix_from(chi);
}

/// Accuracy along one direction.
/// chi_n = 1 / (n . chi^+ n) when n lies in the support (projection norm
/// >= 1 - 1e-9), otherwise 0. eps_n = 1/chi_n - 1, with infinity as the
/// explicit off-support / zero-accuracy sentinel.
struct AccuracyReport {
    double chi_n = 0.0;
    double eps_n = std::numeric_limits<double>::infinity();
    bool in_support = false;
};

inline AccuracyReport accuracy_parameter(const AccuracyMatrix& a, const Direction& n) {
    double cutoff = tolerance::support_cutoff * std::max(1.0, a.eigenvalues[0]);
    double proj2 = 0.0;
    double inv_form = 0.0;
    for (int i = 0; i < 3; i++) {
        if (a.eigenvalues[i] <= cutoff) continue;
        double c = dot(n.n, a.eigenvectors[i]);
        proj2 += c * c;
        inv_form += c * c / a.eigenvalues[i];
    }
    if (std::sqrt(proj2) < 1.0 - tolerance::support_projection || inv_form <= 0.0) {
        return {};
    }
    AccuracyReport r;
    r.in_support = true;
    r.chi_n = 1.0 / inv_form;
    r.eps_n = std::max(0.0, inv_form - 1.0);
    return r;
}

/// Trace of chi reaches its ceiling 1 (every element Bloch vector is unit).
inline bool is_optimal(const AccuracyMatrix& a) { return trace(a.chi) >= 1.0 - 1e-9; }

inline bool is_optimal(const Povm& p) { return is_optimal(accuracy_matrix(p)); }

/// chi is a multiple of the identity: equal accuracy in every direction.
inline bool is_symmetric(const AccuracyMatrix& a) {
    Mat3 iso = (trace(a.chi) / 3.0) * Mat3::identity();
    return max_abs(a.chi - iso) <= 1e-9;
}

inline bool is_symmetric(const Povm& p) { return is_symmetric(accuracy_matrix(p)); }

/// Largest eigenvalue: the best accuracy over all directions.
inline double max_accuracy(const AccuracyMatrix& a) { return a.eigenvalues[0]; }

inline double max_accuracy(const Povm& p) { return accuracy_matrix(p).eigenvalues[0]; }

/// Fisher information matrix of the outcome distribution at a state:
///   I(s) = sum_k (r_k^2 / q_k(s)) v_k v_k^T
/// over elements with v_k != 0. At s = 0 this equals chi exactly.
struct FisherMatrix {
    Mat3 info;
};

inline FisherMatrix fisher_matrix(const Povm& p, const BlochVector& state) {
    Mat3 info = Mat3::zero();
    for (const PovmElement& e : p.elements) {
        if (norm(e.v) <= 1e-15) continue;
        double q = e.r * (1.0 + dot(e.v, state.s));
        if (q <= 1e-12) {
            throw std::domain_error(
                "fisher_matrix: an informative outcome has (near) zero probability at this state");
        }
        info = info + (e.r * e.r / q) * outer(e.v, e.v);
    }
    return {info};
}

/// Directional information 1 / (n . I^+ n) with the shared support rules;
/// 0 when n leaves the support.
inline double fisher_directional(const FisherMatrix& f, const Direction& n) {
    SymmetricEigen e = eigen_symmetric(f.info);
    double cutoff = tolerance::support_cutoff * std::max(1.0, e.values[0]);
    double proj2 = 0.0;
    double inv_form = 0.0;
    for (int i = 0; i < 3; i++) {
        if (e.values[i] <= cutoff) continue;
        double c = dot(n.n, e.vectors[i]);
        proj2 += c * c;
        inv_form += c * c / e.values[i];
    }
    if (std::sqrt(proj2) < 1.0 - tolerance::support_projection || inv_form <= 0.0) {
        return 0.0;
    }
    return 1.0 / inv_form;
}

}  // namespace accmat

#endif
