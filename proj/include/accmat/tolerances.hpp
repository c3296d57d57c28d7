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

#ifndef ACCMAT_TOLERANCES_HPP
#define ACCMAT_TOLERANCES_HPP

namespace accmat::tolerance {

/// Residual allowed on sum(r_k) = 1 and on |sum(r_k v_k)| = 0.
inline constexpr double weight_sum = 1e-10;
inline constexpr double balance = 1e-10;

/// Unit-norm checks (directions, Bloch boundary, |v_k| <= 1 excess).
inline constexpr double unit_norm = 1e-12;

/// Relative eigenvalue / singular-value cutoff deciding support membership.
/// Applied as cutoff * max(1, largest value); shared by the accuracy matrix,
/// the Fisher matrix and the reconstruction least-squares path so support
/// decisions agree across modules.
inline constexpr double support_cutoff = 1e-9;

/// A direction counts as inside the support when the norm of its projection
/// onto the support subspace is >= 1 - support_projection.
inline constexpr double support_projection = 1e-9;

/// Slack granted when deciding trade-off inequalities (bounded chi form).
inline constexpr double tradeoff_slack = 1e-9;

/// Minimum eigenvalue allowed on operators that are positive in exact
/// arithmetic (POVM elements, composed measurement operators).
inline constexpr double positivity = 1e-10;

/// Hermiticity / unitarity / trace-preservation residual on qubit operators.
inline constexpr double operator_residual = 1e-10;

/// Column sums of a transition matrix must equal 1 within this.
inline constexpr double transition_column = 1e-12;

/// Residual ||M s - (q - r)|| above which an outcome distribution is
/// rejected as not produced by any state class of the POVM.
inline constexpr double reconstruction_residual = 1e-8;

/// Convergence threshold on the projected gradient of the mean
/// log-likelihood.
inline constexpr double mle_gradient = 1e-10;

/// Slack granted on the no-cloning product bound C_P * C_Q >= 2/3.
inline constexpr double no_cloning = 1e-6;

}  // namespace accmat::tolerance

#endif
