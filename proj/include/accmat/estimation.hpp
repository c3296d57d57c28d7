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

#ifndef ACCMAT_ESTIMATION_HPP
#define ACCMAT_ESTIMATION_HPP

#include "accmat/accuracy.hpp"
#include "accmat/povm.hpp"
#include "accmat/sampling.hpp"

namespace accmat {

/// Unnormalized log-likelihood sum_k c_k ln q_k(s). Returns -inf when an
/// observed outcome has vanishing probability at s.
inline double log_likelihood(const Povm& p, const Counts& c, const BlochVector& s) {
    if (c.counts.size() != p.size()) {
        throw std::invalid_argument("log_likelihood: counts length mismatch");
    }
    double ll = 0.0;
    for (std::size_t k = 0; k < p.size(); k++) {
        if (c.counts[k] == 0) continue;
        double q = p.elements[k].r * (1.0 + dot(p.elements[k].v, s.s));
        if (q <= 0.0) return -std::numeric_limits<double>::infinity();
        ll += static_cast<double>(c.counts[k]) * std::log(q);
    }
    return ll;
}

/// Gradient of the count-averaged log-likelihood,
/// (1/N) sum_k c_k r_k v_k / q_k(s), in Cartesian coordinates.
inline Vec3 log_likelihood_gradient(const Povm& p, const Counts& c, const BlochVector& s) {
    if (c.counts.size() != p.size() || c.total <= 0) {
        throw std::invalid_argument("log_likelihood_gradient: invalid counts");
    }
    Vec3 g{};
    for (std::size_t k = 0; k < p.size(); k++) {
        if (c.counts[k] == 0) continue;
        double q = p.elements[k].r * (1.0 + dot(p.elements[k].v, s.s));
        if (q <= 0.0) {
            throw std::domain_error("log_likelihood_gradient: observed outcome with zero probability");
        }
        g = g + (static_cast<double>(c.counts[k]) * p.elements[k].r / q) * p.elements[k].v;
    }
    return (1.0 / static_cast<double>(c.total)) * g;
}

struct MleOptions {
    int max_iterations = 100000;
    double gradient_tol = tolerance::mle_gradient;
    double armijo_c = 1e-4;
    double shrink = 0.5;
};

struct MleResult {
    BlochVector s_star{};
    double loglik = 0.0;  // unnormalized, at the optimum
    int iterations = 0;
    bool converged = false;
    int support_rank = 0;
};

/// Maximum-likelihood Bloch vector by projected gradient ascent over the
/// measurement's reconstructible subspace. Coordinates live in an
/// orthonormal basis of that subspace; steps are Armijo backtracking with a
/// warm-started step size, iterates are clipped radially to the unit ball,
/// and at the boundary the outward radial gradient component is discarded.
/// The likelihood is flat transverse to the subspace, so the returned
/// vector is the minimum-norm maximizer. Convergence means the projected
/// gradient norm fell below gradient_tol or no step improves the
/// log-likelihood by a representable amount (stationary at floating-point
/// resolution); converged stays false only on the iteration cap.
inline MleResult mle_bloch(const Povm& p, const Counts& c, const MleOptions& opt = {}) {
    if (c.counts.size() != p.size()) {
        throw std::invalid_argument("mle_bloch: counts length mismatch");
    }
    std::int64_t total = 0;
    for (std::int64_t ck : c.counts) {
        if (ck < 0) throw std::invalid_argument("mle_bloch: negative count");
        total += ck;
    }
    if (total <= 0 || total != c.total) {
        throw std::invalid_argument("mle_bloch: counts must be positive and match total");
    }

    AccuracyMatrix chi = accuracy_matrix(p);
    double cutoff = tolerance::support_cutoff * std::max(1.0, chi.eigenvalues[0]);
    std::vector<Vec3> basis;
    for (int i = 0; i < 3; i++) {
        if (chi.eigenvalues[i] > cutoff) basis.push_back(chi.eigenvectors[i]);
    }

    MleResult res;
    res.support_rank = static_cast<int>(basis.size());
    std::vector<double> beta(basis.size(), 0.0);

    auto embed = [&](const std::vector<double>& b) {
        Vec3 s{};
        for (std::size_t i = 0; i < basis.size(); i++) s = s + b[i] * basis[i];
        return s;
    };
    auto mean_ll = [&](const std::vector<double>& b) {
        double ll = 0.0;
        Vec3 s = embed(b);
        for (std::size_t k = 0; k < p.size(); k++) {
            if (c.counts[k] == 0) continue;
            double q = p.elements[k].r * (1.0 + dot(p.elements[k].v, s));
            if (q <= 0.0) return -std::numeric_limits<double>::infinity();
            ll += static_cast<double>(c.counts[k]) * std::log(q);
        }
        return ll / static_cast<double>(total);
    };

    double step = 1.0;
    double ll = mean_ll(beta);
    int stalls = 0;
    for (res.iterations = 0; res.iterations < opt.max_iterations; res.iterations++) {
        Vec3 s = embed(beta);
        Vec3 gc{};
        for (std::size_t k = 0; k < p.size(); k++) {
            if (c.counts[k] == 0) continue;
            double q = p.elements[k].r * (1.0 + dot(p.elements[k].v, s));
            gc = gc + (static_cast<double>(c.counts[k]) * p.elements[k].r / q) * p.elements[k].v;
        }
        std::vector<double> g(basis.size());
        for (std::size_t i = 0; i < basis.size(); i++) {
            g[i] = dot(gc, basis[i]) / static_cast<double>(total);
        }

        double bnorm2 = 0.0;
        for (double bi : beta) bnorm2 += bi * bi;
        double bnorm = std::sqrt(bnorm2);
        if (bnorm >= 1.0 - 1e-12) {
            // On the boundary only the tangent cone counts: drop an outward
            // radial component so a boundary maximum registers as stationary.
            double radial = 0.0;
            for (std::size_t i = 0; i < basis.size(); i++) radial += g[i] * beta[i] / bnorm;
            if (radial > 0.0) {
                for (std::size_t i = 0; i < basis.size(); i++) g[i] -= radial * beta[i] / bnorm;
            }
        }
        double gnorm2 = 0.0;
        for (double gi : g) gnorm2 += gi * gi;
        if (std::sqrt(gnorm2) <= opt.gradient_tol) {
            res.converged = true;
            break;
        }

        step = std::min(1.0, 2.0 * step);
        bool moved = false;
        while (step > 1e-18) {
            std::vector<double> cand(basis.size());
            double cnorm2 = 0.0;
            for (std::size_t i = 0; i < basis.size(); i++) {
                cand[i] = beta[i] + step * g[i];
                cnorm2 += cand[i] * cand[i];
            }
            if (cnorm2 > 1.0) {
                double inv = 1.0 / std::sqrt(cnorm2);
                for (double& ci : cand) ci *= inv;
            }
            double cll = mean_ll(cand);
            // >= accepts rounding ties; near a constrained optimum the Armijo
            // increment underflows below one ulp of the log-likelihood, so ties
            // are the only accepted steps left.
            if (cll >= ll + opt.armijo_c * step * gnorm2) {
                stalls = (cll > ll) ? 0 : stalls + 1;
                beta = cand;
                ll = cll;
                moved = true;
                break;
            }
            step *= opt.shrink;
        }
        // No strictly improving step is representable in double precision:
        // the iterate is stationary at floating-point resolution even though
        // the analytic gradient tolerance may be unreachable (it happens on
        // the sphere boundary, where the objective is locally linear).
        if (!moved || stalls >= 8) {
            res.converged = true;
            break;
        }
    }

    res.s_star = BlochVector{embed(beta)};
    res.loglik = ll * static_cast<double>(total);
    return res;
}

inline double estimate_direction_probability(const BlochVector& s, const Direction& n) {
    return std::min(1.0, std::max(0.0, 0.5 * (1.0 + dot(n.n, s.s))));
}

/// Cramer-Rao lower bound on the standard deviation of the estimated
/// p(+; n) after n_samples shots, evaluated at the given state. Infinite
/// when the direction carries no information.
inline double crb_std(const Povm& p, const BlochVector& state, const Direction& n,
                      std::int64_t n_samples) {
    if (n_samples <= 0) throw std::invalid_argument("crb_std: sample count must be positive");
    double info = fisher_directional(fisher_matrix(p, state), n);
    if (info <= 0.0) return std::numeric_limits<double>::infinity();
    return 0.5 / std::sqrt(static_cast<double>(n_samples) * info);
}

struct TrajectoryRow {
    int trial = 0;
    std::int64_t n_samples = 0;
    int direction_index = 0;
    double p_plus = 0.0;
    double crb = 0.0;
};

/// Simulated estimation runs: per trial, one growing outcome stream is
/// drawn and the maximum-likelihood estimate is recomputed from scratch at
/// sample sizes 8, 16, ... up to n_max. Each row reports the estimated
/// p(+; n) for one direction plus the bound crb_std at the true state.
/// Trial t uses seed + t, so trials are independent and reproducible.
inline std::vector<TrajectoryRow> simulate_trajectories(const Povm& p, const BlochVector& state,
                                                        const std::vector<Direction>& directions,
                                                        std::int64_t n_max, int trials,
                                                        std::uint64_t seed) {
    if (n_max < 8) throw std::invalid_argument("simulate_trajectories: n_max must be at least 8");
    if (trials <= 0) throw std::invalid_argument("simulate_trajectories: trials must be positive");
    OutcomeDistribution q = outcome_probabilities(p, state);
    std::vector<double> cumulative(q.q.size());
    double acc = 0.0;
    for (std::size_t k = 0; k < q.q.size(); k++) {
        acc += q.q[k];
        cumulative[k] = acc;
    }
    cumulative.back() = std::max(cumulative.back(), 1.0);

    std::vector<TrajectoryRow> rows;
    for (int t = 0; t < trials; t++) {
        Rng rng(seed + static_cast<std::uint64_t>(t));
        Counts counts;
        counts.counts.assign(p.size(), 0);
        counts.total = 0;
        std::int64_t next_mark = 8;
        for (std::int64_t i = 0; i < n_max; i++) {
            double u = rng.uniform();
            std::size_t k = static_cast<std::size_t>(
                std::upper_bound(cumulative.begin(), cumulative.end(), u) - cumulative.begin());
            if (k >= counts.counts.size()) k = counts.counts.size() - 1;
            counts.counts[k]++;
            counts.total++;
            if (counts.total == next_mark) {
                MleResult mle = mle_bloch(p, counts);
                for (std::size_t d = 0; d < directions.size(); d++) {
                    TrajectoryRow row;
                    row.trial = t;
                    row.n_samples = counts.total;
                    row.direction_index = static_cast<int>(d);
                    row.p_plus = estimate_direction_probability(mle.s_star, directions[d]);
                    row.crb = crb_std(p, state, directions[d], counts.total);
                    rows.push_back(row);
                }
                next_mark *= 2;
            }
        }
    }
    return rows;
}

struct SplitComparison {
    double chi_a_split = 0.0;
    double chi_b_split = 0.0;
    double sum = 0.0;
    bool within_projection_bound = false;
    bool simultaneous_advantage = false;
};

/// Time-sharing alternative to a simultaneous measurement: spend a fraction
/// xi of the shots on a symmetric nonideal measurement along n_a with
/// accuracy chi_a and the rest along n_b. The mixture's accuracies are
/// exactly (xi chi_a, (1 - xi) chi_b), so their sum never exceeds 1; target
/// pairs with chi_a + chi_b > 1 are reachable only by measuring jointly.
inline SplitComparison split_strategy_comparison(const Direction& n_a, const Direction& n_b,
                                                 double chi_a, double chi_b, double xi) {
    if (chi_a <= 0.0 || chi_a > 1.0 || chi_b <= 0.0 || chi_b > 1.0) {
        throw std::invalid_argument("split_strategy_comparison: accuracies must lie in (0, 1]");
    }
    if (xi <= 0.0 || xi >= 1.0) {
        throw std::invalid_argument("split_strategy_comparison: split fraction must lie in (0, 1)");
    }
    Povm a = nonideal_povm(0.5, std::sqrt(chi_a), std::sqrt(chi_a), n_a);
    Povm b = nonideal_povm(0.5, std::sqrt(chi_b), std::sqrt(chi_b), n_b);
    Povm mix = probabilistic_mixture(xi, a, b);
    AccuracyMatrix chi = accuracy_matrix(mix);
    SplitComparison s;
    s.chi_a_split = accuracy_parameter(chi, n_a).chi_n;
    s.chi_b_split = accuracy_parameter(chi, n_b).chi_n;
    s.sum = s.chi_a_split + s.chi_b_split;
    s.within_projection_bound = s.sum <= 1.0 + tolerance::tradeoff_slack;
    s.simultaneous_advantage = chi_a + chi_b > 1.0;
    return s;
}

}  // namespace accmat

#endif
