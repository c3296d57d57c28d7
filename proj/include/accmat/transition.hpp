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

#ifndef ACCMAT_TRANSITION_HPP
#define ACCMAT_TRANSITION_HPP

#include <vector>

#include "accmat/povm.hpp"

namespace accmat {

/// Column-stochastic matrix: entries nonnegative, every column sums to 1.
/// F.at(j, k) is the probability of reporting output j given raw outcome k.
struct TransitionMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> entries;  // row-major

    static TransitionMatrix zero(std::size_t rows, std::size_t cols) {
        return {rows, cols, std::vector<double>(rows * cols, 0.0)};
    }

    double& at(std::size_t i, std::size_t j) { return entries[cols * i + j]; }
    double at(std::size_t i, std::size_t j) const { return entries[cols * i + j]; }
};

inline void require_stochastic(const TransitionMatrix& f) {
    if (f.rows == 0 || f.cols == 0 || f.entries.size() != f.rows * f.cols) {
        throw std::invalid_argument("transition matrix has inconsistent shape");
    }
    for (std::size_t j = 0; j < f.cols; j++) {
        double sum = 0.0;
        for (std::size_t i = 0; i < f.rows; i++) {
            double e = f.at(i, j);
            if (e < 0.0) {
                throw std::invalid_argument("transition matrix has a negative entry");
            }
            sum += e;
        }
        if (std::fabs(sum - 1.0) > tolerance::transition_column) {
            throw std::invalid_argument("transition matrix column does not sum to 1");
        }
    }
}

/// Matrix product a*b (apply b first, then a).
inline TransitionMatrix compose(const TransitionMatrix& a, const TransitionMatrix& b) {
    if (a.cols != b.rows) {
        throw std::invalid_argument("compose: inner dimensions disagree");
    }
    TransitionMatrix r = TransitionMatrix::zero(a.rows, b.cols);
    for (std::size_t i = 0; i < a.rows; i++) {
        for (std::size_t k = 0; k < a.cols; k++) {
            double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (std::size_t j = 0; j < b.cols; j++) {
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return r;
}

/// Transition matrix of a two-outcome measurement relative to the ideal
/// projective measurement along its Bloch axis:
///   F = [[r(1+eps1), r(1-eps1)], [(1-r)(1-eps2), (1-r)(1+eps2)]].
/// The axis is taken along v_1 (or -v_2 when v_1 = 0), so both eps are
/// nonnegative and det F = 2 r (1-r) (eps1 + eps2).
inline TransitionMatrix binary_transition_matrix(const Povm& p) {
    if (p.size() != 2) {
        throw std::invalid_argument("binary_transition_matrix: POVM must have exactly 2 elements");
    }
    const PovmElement& e1 = p.elements[0];
    const PovmElement& e2 = p.elements[1];
    double n1 = norm(e1.v);
    double n2 = norm(e2.v);
    if (n1 > 1e-12 && n2 > 1e-12) {
        // Collinearity, antiparallel sense: required of any balanced pair.
        if (norm(cross(e1.v / n1, e2.v / n2)) > 1e-10 || dot(e1.v, e2.v) > 0.0) {
            throw std::invalid_argument("binary_transition_matrix: element axes are not antiparallel");
        }
    }
    double r = e1.r;
    double eps1 = n1;
    double eps2 = n2;
    TransitionMatrix f = TransitionMatrix::zero(2, 2);
    f.at(0, 0) = r * (1.0 + eps1);
    f.at(0, 1) = r * (1.0 - eps1);
    f.at(1, 0) = (1.0 - r) * (1.0 - eps2);
    f.at(1, 1) = (1.0 - r) * (1.0 + eps2);
    return f;
}

/// Classical post-processing E'_j = sum_k F_jk E_k:
///   r'_j = sum_k F_jk r_k,  v'_j = sum_k F_jk r_k v_k / r'_j.
/// Rows with zero weight are dropped.
inline Povm apply_transition(const TransitionMatrix& f, const Povm& p) {
    require_stochastic(f);
    if (f.cols != p.size()) {
        throw std::invalid_argument("apply_transition: column count must match POVM size");
    }
    Povm out;
    out.elements.reserve(f.rows);
    for (std::size_t j = 0; j < f.rows; j++) {
        double r = 0.0;
        Vec3 w{};
        for (std::size_t k = 0; k < f.cols; k++) {
            double fjk = f.at(j, k);
            r += fjk * p.elements[k].r;
            w = w + fjk * p.elements[k].r * p.elements[k].v;
        }
        if (r > 0.0) {
            out.elements.push_back({r, w / r});
        }
    }
    return out;
}

/// 0/1 matrix merging the outcomes of each group into one output row.
/// Groups must be nonempty, disjoint, and cover every index < cols.
inline TransitionMatrix aggregation_matrix(const std::vector<std::vector<std::size_t>>& partition,
                                           std::size_t cols) {
    std::vector<bool> seen(cols, false);
    for (const auto& group : partition) {
        if (group.empty()) {
            throw std::invalid_argument("aggregation_matrix: empty group");
        }
        for (std::size_t k : group) {
            if (k >= cols) {
                throw std::invalid_argument("aggregation_matrix: index out of range");
            }
            if (seen[k]) {
                throw std::invalid_argument("aggregation_matrix: groups overlap");
            }
            seen[k] = true;
        }
    }
    for (std::size_t k = 0; k < cols; k++) {
        if (!seen[k]) {
            throw std::invalid_argument("aggregation_matrix: partition does not cover all outcomes");
        }
    }
    TransitionMatrix f = TransitionMatrix::zero(partition.size(), cols);
    for (std::size_t j = 0; j < partition.size(); j++) {
        for (std::size_t k : partition[j]) f.at(j, k) = 1.0;
    }
    return f;
}

/// Merge outcome groups; identical to applying the aggregation matrix.
inline Povm coarse_grain(const Povm& p, const std::vector<std::vector<std::size_t>>& partition) {
    return apply_transition(aggregation_matrix(partition, p.size()), p);
}

}  // namespace accmat

#endif
