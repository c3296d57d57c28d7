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

#ifndef ACCMAT_POVM_HPP
#define ACCMAT_POVM_HPP

#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "accmat/errors.hpp"
#include "accmat/tolerances.hpp"
#include "accmat/vec3.hpp"

namespace accmat {

/// State class of a qubit density operator: rho = (I + s.sigma)/2, |s| <= 1.
struct BlochVector {
    Vec3 s;
};

/// Unit vector on the Bloch sphere.
struct Direction {
    Vec3 n;
};

inline BlochVector bloch_vector(Vec3 s) {
    if (norm(s) > 1.0 + tolerance::unit_norm) {
        throw std::invalid_argument("Bloch vector has norm > 1");
    }
    return {s};
}

/// Requires |n| = 1 within the unit-norm tolerance.
inline Direction direction(Vec3 n) {
    if (std::fabs(norm(n) - 1.0) > tolerance::unit_norm) {
        throw std::invalid_argument("direction is not unit length");
    }
    return {n};
}

/// Normalizes n; throws on zero input.
inline Direction direction_along(Vec3 n) {
    return {unit(n)};
}

/// One POVM element in Bloch form: E_k = r_k (I + v_k.sigma).
struct PovmElement {
    double r = 0.0;
    Vec3 v;
};

/// Element order is significant: transition matrices, counts and JSON files
/// all index outcomes by position.
struct Povm {
    std::vector<PovmElement> elements;

    std::size_t size() const { return elements.size(); }
};

struct Violation {
    std::string what;
    double residual = 0.0;
};

struct ValidationReport {
    std::vector<Violation> violations;

    bool ok() const { return violations.empty(); }
};

/// Checks the completeness conditions on a raw element list: at least two
/// outcomes, every weight positive, every |v_k| <= 1, weights summing to 1
/// and the weighted Bloch vectors summing to 0.
inline ValidationReport validate_povm(const Povm& p,
                                      double weight_tol = tolerance::weight_sum,
                                      double balance_tol = tolerance::balance) {
    ValidationReport report;
    auto add = [&](std::string what, double residual) {
        report.violations.push_back({std::move(what), residual});
    };

    if (p.size() < 2) {
        add("POVM has fewer than 2 elements", static_cast<double>(2 - p.size()));
        return report;
    }

    double weight_sum = 0.0;
    Vec3 balance{};
    for (std::size_t k = 0; k < p.size(); k++) {
        const PovmElement& e = p.elements[k];
        if (!(e.r > 0.0)) {
            std::ostringstream os;
            os << "element " << k << ": weight " << e.r << " is not positive";
            add(os.str(), -e.r);
        }
        double vn = norm(e.v);
        if (vn > 1.0 + tolerance::unit_norm) {
            std::ostringstream os;
            os << "element " << k << ": |v| = " << vn << " exceeds 1";
            add(os.str(), vn - 1.0);
        }
        weight_sum += e.r;
        balance = balance + e.r * e.v;
    }

    if (std::fabs(weight_sum - 1.0) > weight_tol) {
        std::ostringstream os;
        os << "weights sum to " << weight_sum << " instead of 1";
        add(os.str(), std::fabs(weight_sum - 1.0));
    }
    double bn = norm(balance);
    if (bn > balance_tol) {
        std::ostringstream os;
        os << "weighted Bloch vectors sum to norm " << bn << " instead of 0";
        add(os.str(), bn);
    }
    return report;
}

struct OutcomeDistribution {
    std::vector<double> q;
};

/// q_k = r_k (1 + v_k . s). Tiny negative rounding at the boundary is
/// clamped to 0.
inline OutcomeDistribution outcome_probabilities(const Povm& p, const BlochVector& state) {
    OutcomeDistribution d;
    d.q.reserve(p.size());
    for (const PovmElement& e : p.elements) {
        d.q.push_back(std::max(0.0, e.r * (1.0 + dot(e.v, state.s))));
    }
    return d;
}

/// Distribution of the ideal two-outcome measurement along n:
/// p(+/-; n) = (1 +/- n.s)/2.
inline std::pair<double, double> direction_distribution(const Direction& n, const BlochVector& state) {
    double c = dot(n.n, state.s);
    return {0.5 * (1.0 + c), 0.5 * (1.0 - c)};
}

/// Ideal projective measurement along n: {(1/2, n), (1/2, -n)}.
inline Povm projection_povm(const Direction& n) {
    return {{{0.5, n.n}, {0.5, -n.n}}};
}

/// Two-outcome nonideal measurement {(r, eps1 n), (1-r, -eps2 n)}.
/// Requires 0 < r < 1, |eps_i| <= 1 and the balance r*eps1 = (1-r)*eps2.
inline Povm nonideal_povm(double r, double eps1, double eps2, const Direction& n) {
    if (!(r > 0.0 && r < 1.0)) {
        throw std::invalid_argument("nonideal_povm: r must lie strictly between 0 and 1");
    }
    if (std::fabs(eps1) > 1.0 + tolerance::unit_norm || std::fabs(eps2) > 1.0 + tolerance::unit_norm) {
        throw std::invalid_argument("nonideal_povm: |eps| must not exceed 1");
    }
    if (std::fabs(r * eps1 - (1.0 - r) * eps2) > tolerance::balance) {
        throw std::invalid_argument("nonideal_povm: balance r*eps1 = (1-r)*eps2 violated");
    }
    return {{{r, eps1 * n.n}, {1.0 - r, -eps2 * n.n}}};
}

/// Measure with `a` with probability xi, with `b` otherwise: the element
/// lists concatenate with scaled weights. Elements that end up with zero
/// weight (xi at 0 or 1) are dropped.
inline Povm probabilistic_mixture(double xi, const Povm& a, const Povm& b) {
    if (!(xi >= 0.0 && xi <= 1.0)) {
        throw std::invalid_argument("probabilistic_mixture: xi must lie in [0, 1]");
    }
    Povm out;
    out.elements.reserve(a.size() + b.size());
    for (const PovmElement& e : a.elements) {
        if (xi * e.r > 0.0) out.elements.push_back({xi * e.r, e.v});
    }
    for (const PovmElement& e : b.elements) {
        if ((1.0 - xi) * e.r > 0.0) out.elements.push_back({(1.0 - xi) * e.r, e.v});
    }
    return out;
}

/// Six outcomes +/-x, +/-y, +/-z, each with weight 1/6.
inline Povm standard_tomography_povm() {
    const double r = 1.0 / 6.0;
    return {{
        {r, {1, 0, 0}},
        {r, {-1, 0, 0}},
        {r, {0, 1, 0}},
        {r, {0, -1, 0}},
        {r, {0, 0, 1}},
        {r, {0, 0, -1}},
    }};
}

/// Four outcomes along tetrahedron vertices, each with weight 1/4.
/// Pairwise dot products of the directions are -1/3.
inline Povm minimal_tomography_povm() {
    const double c = 1.0 / std::sqrt(3.0);
    return {{
        {0.25, {c, c, c}},
        {0.25, {c, -c, -c}},
        {0.25, {-c, c, -c}},
        {0.25, {-c, -c, c}},
    }};
}

/// Observed outcome tallies; counts[k] belongs to the POVM element with the
/// same index.
struct Counts {
    std::vector<std::int64_t> counts;
    std::int64_t total = 0;
};

}  // namespace accmat

#endif
