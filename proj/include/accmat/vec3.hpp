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

#ifndef ACCMAT_VEC3_HPP
#define ACCMAT_VEC3_HPP

#include <array>
#include <cmath>
#include <cstddef>
#include <stdexcept>

namespace accmat {

struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr double operator[](std::size_t i) const { return i == 0 ? x : (i == 1 ? y : z); }
};

constexpr Vec3 operator+(Vec3 a, Vec3 b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
constexpr Vec3 operator-(Vec3 a, Vec3 b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
constexpr Vec3 operator-(Vec3 a) { return {-a.x, -a.y, -a.z}; }
constexpr Vec3 operator*(double c, Vec3 a) { return {c * a.x, c * a.y, c * a.z}; }
constexpr Vec3 operator*(Vec3 a, double c) { return c * a; }
constexpr Vec3 operator/(Vec3 a, double c) { return {a.x / c, a.y / c, a.z / c}; }

constexpr double dot(Vec3 a, Vec3 b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
constexpr Vec3 cross(Vec3 a, Vec3 b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
constexpr double norm2(Vec3 a) { return dot(a, a); }
inline double norm(Vec3 a) { return std::sqrt(norm2(a)); }

/// a / |a|; throws on (near) zero input.
inline Vec3 unit(Vec3 a) {
    double n = norm(a);
    if (n < 1e-300) {
        throw std::invalid_argument("cannot normalize a zero vector");
    }
    return a / n;
}

/// Row-major 3x3 real matrix.
struct Mat3 {
    std::array<double, 9> a{};

    double& at(std::size_t i, std::size_t j) { return a[3 * i + j]; }
    double at(std::size_t i, std::size_t j) const { return a[3 * i + j]; }

    static constexpr Mat3 zero() { return {}; }
    static constexpr Mat3 identity() { return {{1, 0, 0, 0, 1, 0, 0, 0, 1}}; }
};

inline Mat3 operator+(const Mat3& m, const Mat3& n) {
    Mat3 r;
    for (std::size_t i = 0; i < 9; i++) r.a[i] = m.a[i] + n.a[i];
    return r;
}

inline Mat3 operator-(const Mat3& m, const Mat3& n) {
    Mat3 r;
    for (std::size_t i = 0; i < 9; i++) r.a[i] = m.a[i] - n.a[i];
    return r;
}

inline Mat3 operator*(double c, const Mat3& m) {
    Mat3 r;
    for (std::size_t i = 0; i < 9; i++) r.a[i] = c * m.a[i];
    return r;
}

inline Mat3 operator*(const Mat3& m, const Mat3& n) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; i++) {
        for (std::size_t j = 0; j < 3; j++) {
            double s = 0.0;
            for (std::size_t k = 0; k < 3; k++) s += m.at(i, k) * n.at(k, j);
            r.at(i, j) = s;
        }
    }
    return r;
}

inline Vec3 operator*(const Mat3& m, Vec3 v) {
    return {
        m.a[0] * v.x + m.a[1] * v.y + m.a[2] * v.z,
        m.a[3] * v.x + m.a[4] * v.y + m.a[5] * v.z,
        m.a[6] * v.x + m.a[7] * v.y + m.a[8] * v.z,
    };
}

/// u v^T.
inline Mat3 outer(Vec3 u, Vec3 v) {
    Mat3 r;
    const double uu[3] = {u.x, u.y, u.z};
    const double vv[3] = {v.x, v.y, v.z};
    for (std::size_t i = 0; i < 3; i++) {
        for (std::size_t j = 0; j < 3; j++) r.at(i, j) = uu[i] * vv[j];
    }
    return r;
}

inline Mat3 transpose(const Mat3& m) {
    Mat3 r;
    for (std::size_t i = 0; i < 3; i++) {
        for (std::size_t j = 0; j < 3; j++) r.at(i, j) = m.at(j, i);
    }
    return r;
}

inline double trace(const Mat3& m) { return m.a[0] + m.a[4] + m.a[8]; }

inline double quadratic_form(const Mat3& m, Vec3 n) { return dot(n, m * n); }

inline double max_abs(const Mat3& m) {
    double r = 0.0;
    for (double v : m.a) r = std::max(r, std::fabs(v));
    return r;
}

/// Eigendecomposition of a symmetric 3x3 matrix.
/// Eigenvalues sorted descending; eigenvectors orthonormal with the first
/// component of magnitude > 1e-12 made positive, so output is reproducible.
struct SymmetricEigen {
    std::array<double, 3> values{};
    std::array<Vec3, 3> vectors{};
};

/// Cyclic Jacobi rotations. The input is symmetrized first; convergence to
/// off-diagonal mass below 1e-30 of the matrix scale takes a handful of
/// sweeps at this size.
inline SymmetricEigen eigen_symmetric(const Mat3& m) {
    double a[3][3];
    for (std::size_t i = 0; i < 3; i++) {
        for (std::size_t j = 0; j < 3; j++) a[i][j] = 0.5 * (m.at(i, j) + m.at(j, i));
    }
    double v[3][3] = {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};

    double scale = 0.0;
    for (std::size_t i = 0; i < 3; i++) {
        for (std::size_t j = 0; j < 3; j++) scale = std::max(scale, std::fabs(a[i][j]));
    }
    if (scale == 0.0) scale = 1.0;

    for (int sweep = 0; sweep < 64; sweep++) {
        double off = std::fabs(a[0][1]) + std::fabs(a[0][2]) + std::fabs(a[1][2]);
        if (off <= 1e-15 * scale) break;
        for (int p = 0; p < 2; p++) {
            for (int q = p + 1; q < 3; q++) {
                if (std::fabs(a[p][q]) <= 1e-300) continue;
                double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                double t = (theta >= 0 ? 1.0 : -1.0) / (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double apq = a[p][q];
                double app = a[p][p];
                double aqq = a[q][q];
                a[p][p] = app - t * apq;
                a[q][q] = aqq + t * apq;
                a[p][q] = 0.0;
                a[q][p] = 0.0;
                for (int k = 0; k < 3; k++) {
                    if (k == p || k == q) continue;
                    double akp = a[k][p];
                    double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[p][k] = a[k][p];
                    a[k][q] = s * akp + c * akq;
                    a[q][k] = a[k][q];
                }
                for (int k = 0; k < 3; k++) {
                    double vkp = v[k][p];
                    double vkq = v[k][q];
                    v[k][p] = c * vkp - s * vkq;
                    v[k][q] = s * vkp + c * vkq;
                }
            }
        }
    }

    std::array<int, 3> order = {0, 1, 2};
    double w[3] = {a[0][0], a[1][1], a[2][2]};
    for (int i = 0; i < 2; i++) {
        for (int j = i + 1; j < 3; j++) {
            if (w[order[j]] > w[order[i]]) std::swap(order[i], order[j]);
        }
    }

    SymmetricEigen out;
    for (int i = 0; i < 3; i++) {
        int k = order[i];
        out.values[i] = w[k];
        Vec3 vec = {v[0][k], v[1][k], v[2][k]};
        const double comps[3] = {vec.x, vec.y, vec.z};
        for (int c = 0; c < 3; c++) {
            if (std::fabs(comps[c]) > 1e-12) {
                if (comps[c] < 0) vec = -vec;
                break;
            }
        }
        out.vectors[i] = vec;
    }
    return out;
}

}  // namespace accmat

#endif
