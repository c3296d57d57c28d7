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

#ifndef ACCMAT_SAMPLING_HPP
#define ACCMAT_SAMPLING_HPP

#include <algorithm>
#include <cstdint>
#include <random>

#include "accmat/povm.hpp"

namespace accmat {

/// Deterministic random stream: mt19937_64 output mapped through explicit
/// arithmetic only, so sequences are reproducible across platforms.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
    }

    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = uniform();
        double u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    /// Uniform on the unit sphere.
    Vec3 unit_vector() {
        double z = uniform(-1.0, 1.0);
        double phi = uniform(0.0, 2.0 * 3.14159265358979323846);
        double s = std::sqrt(std::max(0.0, 1.0 - z * z));
        return {s * std::cos(phi), s * std::sin(phi), z};
    }

    /// Uniform in the closed unit ball.
    Vec3 ball_vector() {
        return std::cbrt(uniform()) * unit_vector();
    }

  private:
    std::mt19937_64 gen_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

/// Draws n outcomes by inverse-CDF lookup on one seeded stream. The same
/// seed reproduces the same counts exactly.
inline Counts sample_outcomes(const Povm& p, const BlochVector& state, std::int64_t n,
                              std::uint64_t seed) {
    if (n < 0) {
        throw std::invalid_argument("sample_outcomes: negative sample count");
    }
    OutcomeDistribution d = outcome_probabilities(p, state);
    std::vector<double> cumulative(d.q.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < d.q.size(); k++) {
        acc += d.q[k];
        cumulative[k] = acc;
    }
    cumulative.back() = std::max(cumulative.back(), 1.0);

    Counts c;
    c.counts.assign(p.size(), 0);
    c.total = n;
    Rng rng(seed);
    for (std::int64_t i = 0; i < n; i++) {
        double u = rng.uniform();
        auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
        std::size_t k = static_cast<std::size_t>(it - cumulative.begin());
        if (k >= c.counts.size()) k = c.counts.size() - 1;
        c.counts[k]++;
    }
    return c;
}

/// Random valid POVM with m elements: weights from a flat simplex draw,
/// the first m-1 Bloch vectors uniform in the ball, and the last element
/// forced by the completeness conditions. Draws are rejected until the
/// forced element has weight >= 0.05 and |v| <= 1.
inline Povm random_povm(std::size_t m, std::uint64_t seed) {
    if (m < 2) {
        throw std::invalid_argument("random_povm: need at least 2 elements");
    }
    Rng rng(seed);
    for (int attempt = 0; attempt < 10000; attempt++) {
        std::vector<double> w(m);
        double sum = 0.0;
        for (double& wi : w) {
            double u = rng.uniform();
            while (u <= 0.0) u = rng.uniform();
            wi = -std::log(u);
            sum += wi;
        }
        for (double& wi : w) wi /= sum;
        if (w[m - 1] < 0.05) continue;

        Povm p;
        p.elements.resize(m);
        Vec3 weighted{};
        for (std::size_t k = 0; k + 1 < m; k++) {
            p.elements[k] = {w[k], rng.ball_vector()};
            weighted = weighted + p.elements[k].r * p.elements[k].v;
        }
        Vec3 vm = -1.0 / w[m - 1] * weighted;
        if (norm(vm) > 1.0) continue;
        p.elements[m - 1] = {w[m - 1], vm};
        return p;
    }
    throw SamplingExhaustedError("random_povm: rejection sampling exhausted 10000 attempts");
}

}  // namespace accmat

#endif
