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

#ifndef ACCMAT_QUADRATURE_HPP
#define ACCMAT_QUADRATURE_HPP

#include <cmath>
#include <stdexcept>
#include <vector>

#include "accmat/vec3.hpp"

namespace accmat {

struct QuadratureRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule on [-1, 1], exact for polynomials of degree
/// 2 * order - 1. Nodes by Newton iteration from the Chebyshev guess.
inline QuadratureRule gauss_legendre(int order) {
    if (order < 2) throw std::invalid_argument("gauss_legendre: order must be at least 2");
    QuadratureRule rule;
    rule.nodes.resize(static_cast<std::size_t>(order));
    rule.weights.resize(static_cast<std::size_t>(order));
    const double pi = std::acos(-1.0);
    for (int i = 0; i < order; i++) {
        double x = std::cos(pi * (i + 0.75) / (order + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; it++) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= order; k++) {
                double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = order * (x * p1 - p0) / (x * x - 1.0);
            double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-15) break;
        }
        rule.nodes[static_cast<std::size_t>(i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = 2.0 / ((1.0 - x * x) * dp * dp);
    }
    return rule;
}

/// Mean of f over the unit sphere: Gauss-Legendre in cos(theta) crossed with
/// 2 * order equally spaced azimuths, so the phi average is exact for
/// trigonometric polynomials up to degree 2 * order - 1.
template <class F>
double sphere_average(int order, F&& f) {
    QuadratureRule rule = gauss_legendre(order);
    const double pi = std::acos(-1.0);
    const int nphi = 2 * order;
    double sum = 0.0;
    for (int i = 0; i < order; i++) {
        double c = rule.nodes[static_cast<std::size_t>(i)];
        double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        double inner = 0.0;
        for (int j = 0; j < nphi; j++) {
            double phi = 2.0 * pi * j / nphi;
            inner += f(Vec3{s * std::cos(phi), s * std::sin(phi), c});
        }
        sum += rule.weights[static_cast<std::size_t>(i)] * inner / nphi;
    }
    return 0.5 * sum;
}

}  // namespace accmat

#endif
