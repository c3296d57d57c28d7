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

#ifndef ACCMAT_OPERATORS_HPP
#define ACCMAT_OPERATORS_HPP

#include <complex>

#include "accmat/povm.hpp"

namespace accmat {

using Complex = std::complex<double>;

/// Dense 2x2 complex matrix, row-major.
struct Mat2c {
    std::array<Complex, 4> a{};

    Complex& at(int i, int j) { return a[static_cast<std::size_t>(2 * i + j)]; }
    const Complex& at(int i, int j) const { return a[static_cast<std::size_t>(2 * i + j)]; }

    static Mat2c zero() { return {}; }
    static Mat2c identity() {
        Mat2c m;
        m.at(0, 0) = 1.0;
        m.at(1, 1) = 1.0;
        return m;
    }
};

inline Mat2c operator+(const Mat2c& x, const Mat2c& y) {
    Mat2c m;
    for (int i = 0; i < 4; i++) m.a[i] = x.a[i] + y.a[i];
    return m;
}

inline Mat2c operator-(const Mat2c& x, const Mat2c& y) {
    Mat2c m;
    for (int i = 0; i < 4; i++) m.a[i] = x.a[i] - y.a[i];
    return m;
}

inline Mat2c operator*(Complex s, const Mat2c& x) {
    Mat2c m;
    for (int i = 0; i < 4; i++) m.a[i] = s * x.a[i];
    return m;
}

inline Mat2c operator*(double s, const Mat2c& x) { return Complex(s) * x; }

inline Mat2c operator*(const Mat2c& x, const Mat2c& y) {
    Mat2c m;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            Complex s = 0.0;
            for (int k = 0; k < 2; k++) s += x.at(i, k) * y.at(k, j);
            m.at(i, j) = s;
        }
    }
    return m;
}

inline Mat2c adjoint(const Mat2c& x) {
    Mat2c m;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) m.at(i, j) = std::conj(x.at(j, i));
    }
    return m;
}

inline Complex trace(const Mat2c& x) { return x.at(0, 0) + x.at(1, 1); }

inline double max_abs(const Mat2c& x) {
    double m = 0.0;
    for (const Complex& c : x.a) m = std::max(m, std::abs(c));
    return m;
}

inline Mat2c pauli_x() {
    Mat2c m;
    m.at(0, 1) = 1.0;
    m.at(1, 0) = 1.0;
    return m;
}

inline Mat2c pauli_y() {
    Mat2c m;
    m.at(0, 1) = Complex(0.0, -1.0);
    m.at(1, 0) = Complex(0.0, 1.0);
    return m;
}

inline Mat2c pauli_z() {
    Mat2c m;
    m.at(0, 0) = 1.0;
    m.at(1, 1) = -1.0;
    return m;
}

/// r (I + v . sigma). Any positive semidefinite 2x2 operator has this form.
inline Mat2c from_bloch(double r, const Vec3& v) {
    Mat2c m;
    m.at(0, 0) = r * (1.0 + v.z);
    m.at(1, 1) = r * (1.0 - v.z);
    m.at(0, 1) = r * Complex(v.x, -v.y);
    m.at(1, 0) = r * Complex(v.x, v.y);
    return m;
}

/// Spin projector (I + sign n . sigma)/2 onto the eigenstate along n.
inline Mat2c spin_projector(int sign, const Direction& n) {
    return from_bloch(0.5, (sign >= 0 ? 1.0 : -1.0) * n.n);
}

struct RvDecomposition {
    double r = 0.0;
    Vec3 v{};
};

/// Inverts from_bloch. Requires a Hermitian positive semidefinite input
/// within tol; an operator with negligible trace weight maps to r = 0, v = 0.
inline RvDecomposition to_rv(const Mat2c& m, double tol = tolerance::operator_residual) {
    double scale = std::max(1.0, max_abs(m));
    if (max_abs(m - adjoint(m)) > tol * scale) {
        throw std::invalid_argument("to_rv: operator is not Hermitian");
    }
    RvDecomposition d;
    d.r = 0.5 * std::real(trace(m));
    Vec3 b{std::real(m.at(0, 1)), -std::imag(m.at(0, 1)),
           0.5 * (std::real(m.at(0, 0)) - std::real(m.at(1, 1)))};
    if (d.r <= 1e-14) {
        if (d.r < -tol || norm(b) > tol * scale) {
            throw std::invalid_argument("to_rv: operator is not positive semidefinite");
        }
        d.r = 0.0;
        return d;
    }
    d.v = (1.0 / d.r) * b;
    // Eigenvalues are r (1 +/- |v|); positivity means |v| <= 1 up to rounding.
    if (d.r * (norm(d.v) - 1.0) > tol * scale) {
        throw std::invalid_argument("to_rv: operator is not positive semidefinite");
    }
    if (norm(d.v) > 1.0) d.v = (1.0 / norm(d.v)) * d.v;
    return d;
}

/// Dense 4x4 complex matrix, row-major; two-qubit index convention
/// row = 2 a + b for subsystem states |a> (first factor) and |b> (second).
struct Mat4c {
    std::array<Complex, 16> a{};

    Complex& at(int i, int j) { return a[static_cast<std::size_t>(4 * i + j)]; }
    const Complex& at(int i, int j) const { return a[static_cast<std::size_t>(4 * i + j)]; }

    static Mat4c zero() { return {}; }
    static Mat4c identity() {
        Mat4c m;
        for (int i = 0; i < 4; i++) m.at(i, i) = 1.0;
        return m;
    }
};

inline Mat4c operator*(const Mat4c& x, const Mat4c& y) {
    Mat4c m;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) {
            Complex s = 0.0;
            for (int k = 0; k < 4; k++) s += x.at(i, k) * y.at(k, j);
            m.at(i, j) = s;
        }
    }
    return m;
}

inline Mat4c adjoint(const Mat4c& x) {
    Mat4c m;
    for (int i = 0; i < 4; i++) {
        for (int j = 0; j < 4; j++) m.at(i, j) = std::conj(x.at(j, i));
    }
    return m;
}

inline double max_abs(const Mat4c& x) {
    double m = 0.0;
    for (const Complex& c : x.a) m = std::max(m, std::abs(c));
    return m;
}

inline Mat4c kron(const Mat2c& x, const Mat2c& y) {
    Mat4c m;
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) {
            for (int c = 0; c < 2; c++) {
                for (int d = 0; d < 2; d++) {
                    m.at(2 * a + b, 2 * c + d) = x.at(a, c) * y.at(b, d);
                }
            }
        }
    }
    return m;
}

/// Exchange of the two tensor factors: SWAP |a>|b> = |b>|a>.
inline Mat4c swap_gate() {
    Mat4c m;
    for (int a = 0; a < 2; a++) {
        for (int b = 0; b < 2; b++) m.at(2 * a + b, 2 * b + a) = 1.0;
    }
    return m;
}

inline bool is_unitary(const Mat4c& u, double tol = tolerance::operator_residual) {
    Mat4c g = adjoint(u) * u;
    for (int i = 0; i < 4; i++) g.at(i, i) -= 1.0;
    return max_abs(g) <= tol;
}

/// Completely positive map given by operators {M_i}: rho -> sum M_i rho M_i^t.
struct KrausChannel {
    std::vector<Mat2c> ops;
};

inline bool is_trace_preserving(const KrausChannel& ch, double tol = tolerance::operator_residual) {
    Mat2c s = Mat2c::zero();
    for (const Mat2c& m : ch.ops) s = s + adjoint(m) * m;
    return max_abs(s - Mat2c::identity()) <= tol;
}

}  // namespace accmat

#endif
