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

#ifndef ACCMAT_TESTS_SUPPORT_HPP
#define ACCMAT_TESTS_SUPPORT_HPP

#include "accmat/accmat.hpp"

namespace accmat::testing {

inline Direction random_direction(Rng& rng) { return Direction{rng.unit_vector()}; }

/// POVM made of antipodal unit-vector pairs with equal weights inside each
/// pair: balanced by construction and every Bloch vector is unit length.
inline Povm random_optimal_povm(int pairs, std::uint64_t seed) {
    Rng rng(seed);
    Povm p;
    std::vector<double> w(static_cast<std::size_t>(pairs));
    double sum = 0.0;
    for (double& wi : w) {
        wi = -std::log(1.0 - rng.uniform());
        sum += wi;
    }
    for (int i = 0; i < pairs; i++) {
        double r = 0.5 * w[static_cast<std::size_t>(i)] / sum;
        Vec3 u = rng.unit_vector();
        p.elements.push_back({r, u});
        p.elements.push_back({r, -1.0 * u});
    }
    return p;
}

/// Column-stochastic matrix with strictly positive entries.
inline TransitionMatrix random_stochastic(int rows, int cols, Rng& rng) {
    TransitionMatrix f = TransitionMatrix::zero(rows, cols);
    for (int j = 0; j < cols; j++) {
        double sum = 0.0;
        for (int i = 0; i < rows; i++) {
            double x = -std::log(1.0 - rng.uniform());
            f.at(i, j) = x;
            sum += x;
        }
        for (int i = 0; i < rows; i++) f.at(i, j) /= sum;
    }
    return f;
}

/// Haar-ish random unitary: Gram-Schmidt on complex Gaussian columns.
inline Mat4c random_unitary4(Rng& rng) {
    std::array<std::array<Complex, 4>, 4> col{};
    for (auto& c : col) {
        for (auto& x : c) x = Complex(rng.normal(), rng.normal());
    }
    for (int j = 0; j < 4; j++) {
        for (int k = 0; k < j; k++) {
            Complex ip = 0.0;
            for (int i = 0; i < 4; i++) ip += std::conj(col[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)]) * col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
            for (int i = 0; i < 4; i++) col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] -= ip * col[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
        }
        double nrm = 0.0;
        for (int i = 0; i < 4; i++) nrm += std::norm(col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)]);
        nrm = std::sqrt(nrm);
        for (int i = 0; i < 4; i++) col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] /= nrm;
    }
    Mat4c u;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) u.at(i, j) = col[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
    }
    return u;
}

inline Mat2c random_unitary2(Rng& rng) {
    Complex a(rng.normal(), rng.normal());
    Complex b(rng.normal(), rng.normal());
    double nrm = std::sqrt(std::norm(a) + std::norm(b));
    a /= nrm;
    b /= nrm;
    Mat2c u;
    u.at(0, 0) = a;
    u.at(1, 0) = b;
    u.at(0, 1) = -std::conj(b);
    u.at(1, 1) = std::conj(a);
    return u;
}

/// Trace-preserving two-operator channel: a weak measurement dressed with
/// random unitaries (one common right factor, separate left factors).
inline KrausChannel random_channel(Rng& rng) {
    KrausChannel base = weak_measurement(rng.uniform());
    Mat2c u = random_unitary2(rng);
    KrausChannel ch;
    for (const Mat2c& m : base.ops) ch.ops.push_back(random_unitary2(rng) * m * u);
    return ch;
}

inline double max_entry_diff(const Mat3& a, const Mat3& b) { return max_abs(a - b); }

}  // namespace accmat::testing

#endif
