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

#ifndef ACCMAT_CLONING_HPP
#define ACCMAT_CLONING_HPP

#include <tuple>

#include "accmat/joint.hpp"
#include "accmat/operators.hpp"
#include "accmat/quadrature.hpp"
#include "accmat/tradeoff.hpp"

namespace accmat {

/// One unitary branch of a cloning machine, applied with some probability.
struct CloningBranch {
    double probability = 1.0;
    Mat4c unitary;
};

/// Probabilistic mixture of two-qubit unitaries acting on (input, blank).
/// The first tensor factor carries the original (P), the second the copy
/// (Q); the blank is the pure state with the given unit Bloch vector.
struct CloningMachine {
    std::vector<CloningBranch> branches;
    Vec3 blank{0.0, 0.0, 1.0};
};

enum class CloneTarget { P, Q };

inline void validate_machine(const CloningMachine& m) {
    if (m.branches.empty()) {
        throw std::invalid_argument("cloning machine has no branches");
    }
    double total = 0.0;
    for (const CloningBranch& b : m.branches) {
        if (b.probability < 0.0) {
            throw std::invalid_argument("cloning machine branch probability is negative");
        }
        if (!is_unitary(b.unitary)) {
            throw std::invalid_argument("cloning machine branch is not unitary");
        }
        total += b.probability;
    }
    if (std::fabs(total - 1.0) > tolerance::weight_sum) {
        throw std::invalid_argument("cloning machine branch probabilities do not sum to 1");
    }
    if (std::fabs(norm(m.blank) - 1.0) > tolerance::unit_norm) {
        throw std::invalid_argument("cloning machine blank vector is not a unit vector");
    }
}

inline CloningMachine cloning_machine(const Mat4c& unitary, const Vec3& blank) {
    CloningMachine m;
    m.branches = {{1.0, unitary}};
    m.blank = blank;
    validate_machine(m);
    return m;
}

inline CloningMachine identity_machine() { return cloning_machine(Mat4c::identity(), {0.0, 0.0, 1.0}); }

inline CloningMachine swap_machine() { return cloning_machine(swap_gate(), {0.0, 0.0, 1.0}); }

/// Incoherent partial swap: apply SWAP with probability sin^2(lambda), do
/// nothing otherwise. Interpolates identity -> swap while keeping both
/// reduced measurements aligned with the probed direction, so both cloning
/// errors stay finite for lambda strictly inside (0, pi/2).
inline CloningMachine partial_swap(double lambda) {
    double s = std::sin(lambda);
    double c = std::cos(lambda);
    CloningMachine m;
    m.branches = {{c * c, Mat4c::identity()}, {s * s, swap_gate()}};
    m.blank = {0.0, 0.0, 1.0};
    validate_machine(m);
    return m;
}

/// Coherent interpolation cos(lambda) I + i sin(lambda) SWAP. A valid
/// unitary, but the cross term tilts the reduced measurement axes away from
/// the probed direction, which drives the direction errors to infinity at
/// every interior lambda. Exposed for study; partial_swap is the machine
/// with finite figures of merit.
inline Mat4c partial_swap_unitary(double lambda) {
    Mat4c u = Mat4c::zero();
    Mat4c sw = swap_gate();
    Complex c(std::cos(lambda), 0.0);
    Complex is(0.0, std::sin(lambda));
    for (int k = 0; k < 16; k++) {
        u.a[static_cast<std::size_t>(k)] =
            c * Mat4c::identity().a[static_cast<std::size_t>(k)] + is * sw.a[static_cast<std::size_t>(k)];
    }
    return u;
}

namespace detail {

inline std::array<Complex, 2> blank_amplitudes(const Vec3& s) {
    double z = std::min(1.0, std::max(-1.0, s.z));
    double theta = std::acos(z);
    double phi = std::atan2(s.y, s.x);
    return {Complex(std::cos(0.5 * theta), 0.0),
            std::exp(Complex(0.0, phi)) * std::sin(0.5 * theta)};
}

/// Kraus operators of one branch's reduced channel onto the chosen factor,
/// obtained by contracting the unitary with the blank amplitudes and an
/// orthonormal basis on the discarded factor.
inline std::vector<Mat2c> branch_kraus(const Mat4c& u, const std::array<Complex, 2>& psi,
                                       CloneTarget target) {
    std::vector<Mat2c> ops(2);
    for (int k = 0; k < 2; k++) {
        Mat2c m;
        for (int keep = 0; keep < 2; keep++) {
            for (int c = 0; c < 2; c++) {
                Complex s = 0.0;
                for (int b = 0; b < 2; b++) {
                    int row = target == CloneTarget::P ? 2 * keep + k : 2 * k + keep;
                    s += u.at(row, 2 * c + b) * psi[static_cast<std::size_t>(b)];
                }
                m.at(keep, c) = s;
            }
        }
        ops[static_cast<std::size_t>(k)] = m;
    }
    return ops;
}

}  // namespace detail

/// Reduced channel of the machine onto the original (P) or the copy (Q),
/// with branch probabilities folded into the operators.
inline KrausChannel channel_kraus(const CloningMachine& machine, CloneTarget target) {
    validate_machine(machine);
    std::array<Complex, 2> psi = detail::blank_amplitudes(machine.blank);
    KrausChannel ch;
    for (const CloningBranch& b : machine.branches) {
        if (b.probability <= 0.0) continue;
        double w = std::sqrt(b.probability);
        for (const Mat2c& m : detail::branch_kraus(b.unitary, psi, target)) {
            ch.ops.push_back(w * m);
        }
    }
    return ch;
}

/// Binary POVM on the input induced by projecting the chosen output factor
/// along n. Elements may have zero weight for degenerate machines.
inline std::array<PovmElement, 2> induced_povm(const KrausChannel& ch, const Direction& n) {
    std::array<PovmElement, 2> out{};
    for (int i = 0; i < 2; i++) {
        Mat2c acc = Mat2c::zero();
        Mat2c proj = spin_projector(i == 0 ? +1 : -1, n);
        for (const Mat2c& m : ch.ops) acc = acc + adjoint(m) * proj * m;
        RvDecomposition d = to_rv(acc);
        out[static_cast<std::size_t>(i)] = {d.r, d.v};
    }
    return out;
}

struct DirectionErrors {
    double chi_p = 0.0;
    double eps_p = std::numeric_limits<double>::infinity();
    double chi_q = 0.0;
    double eps_q = std::numeric_limits<double>::infinity();
};

namespace detail {

inline std::pair<double, double> induced_accuracy(const KrausChannel& ch, const Direction& n) {
    Mat3 chi = Mat3::zero();
    for (const PovmElement& e : induced_povm(ch, n)) {
        if (e.r <= 1e-14) continue;
        chi = chi + e.r * outer(e.v, e.v);
    }
    AccuracyReport r = accuracy_parameter(accuracy_matrix_from(chi), n);
    return {r.chi_n, r.eps_n};
}

}  // namespace detail

/// Error parameters of both clones when each is read along the same n.
inline DirectionErrors direction_errors(const CloningMachine& machine, const Direction& n) {
    KrausChannel p = channel_kraus(machine, CloneTarget::P);
    KrausChannel q = channel_kraus(machine, CloneTarget::Q);
    DirectionErrors d;
    std::tie(d.chi_p, d.eps_p) = detail::induced_accuracy(p, n);
    std::tie(d.chi_q, d.eps_q) = detail::induced_accuracy(q, n);
    return d;
}

/// Four-outcome measurement realized by reading the original along n and
/// the copy along n_prime. Its marginals are the two induced binary POVMs,
/// so the simultaneous-measurement trade-off applies to the clones.
inline JointPovm cloning_joint_povm(const CloningMachine& machine, const Direction& n,
                                    const Direction& n_prime) {
    validate_machine(machine);
    std::array<Complex, 2> psi = detail::blank_amplitudes(machine.blank);
    JointPovm jp;
    int slot = 0;
    for (int i = 0; i < 2; i++) {
        for (int j = 0; j < 2; j++) {
            Mat4c k = kron(spin_projector(i == 0 ? +1 : -1, n),
                           spin_projector(j == 0 ? +1 : -1, n_prime));
            Mat2c e = Mat2c::zero();
            for (const CloningBranch& br : machine.branches) {
                if (br.probability <= 0.0) continue;
                // v = U (I x |psi>), a 4x2 isometry.
                std::array<Complex, 8> v{};
                for (int r = 0; r < 4; r++) {
                    for (int c = 0; c < 2; c++) {
                        Complex s = 0.0;
                        for (int b = 0; b < 2; b++) {
                            s += br.unitary.at(r, 2 * c + b) * psi[static_cast<std::size_t>(b)];
                        }
                        v[static_cast<std::size_t>(2 * r + c)] = s;
                    }
                }
                for (int c = 0; c < 2; c++) {
                    for (int cp = 0; cp < 2; cp++) {
                        Complex s = 0.0;
                        for (int r = 0; r < 4; r++) {
                            for (int sidx = 0; sidx < 4; sidx++) {
                                s += std::conj(v[static_cast<std::size_t>(2 * r + c)]) *
                                     k.at(r, sidx) * v[static_cast<std::size_t>(2 * sidx + cp)];
                            }
                        }
                        e.at(c, cp) += br.probability * s;
                    }
                }
            }
            RvDecomposition d = to_rv(e);
            jp.elements[static_cast<std::size_t>(slot++)] = {d.r, d.v};
        }
    }
    return jp;
}

/// Sphere-averaged direction errors (C_P, C_Q) by product quadrature of the
/// given order. An error that diverges anywhere on the sphere yields inf.
inline std::pair<double, double> cloning_parameters(const CloningMachine& machine, int order = 32) {
    KrausChannel p = channel_kraus(machine, CloneTarget::P);
    KrausChannel q = channel_kraus(machine, CloneTarget::Q);
    auto avg = [&](const KrausChannel& ch) {
        return sphere_average(order, [&](const Vec3& n) {
            return detail::induced_accuracy(ch, Direction{n}).second;
        });
    };
    return {avg(p), avg(q)};
}

enum class CloningVerdict { Satisfied, Violated, Degenerate };

struct CloningReport {
    double c_p = 0.0;
    double c_q = 0.0;
    double product = 0.0;
    bool product_indeterminate = false;
    CloningVerdict verdict = CloningVerdict::Satisfied;
    int order = 0;
};

/// Checks C_P * C_Q >= 2/3 for the machine. A vanishing error on one clone
/// forces an infinite error on the other; that 0 * inf product is reported
/// as Degenerate rather than forced to a verdict. Quadrature leaves the
/// vanishing side as rounding dust, so "zero" means below 1e-12 here.
inline CloningReport verify_no_cloning(const CloningMachine& machine, int order = 32,
                                       double tol = tolerance::no_cloning) {
    CloningReport rep;
    rep.order = order;
    std::tie(rep.c_p, rep.c_q) = cloning_parameters(machine, order);
    bool p_zero = rep.c_p <= 1e-12;
    bool q_zero = rep.c_q <= 1e-12;
    rep.product = extended_product(rep.c_p, rep.c_q);
    if (std::isnan(rep.product) || (std::isinf(rep.c_p) && q_zero) ||
        (std::isinf(rep.c_q) && p_zero)) {
        rep.product_indeterminate = true;
        rep.verdict = CloningVerdict::Degenerate;
        return rep;
    }
    rep.verdict = rep.product >= 2.0 / 3.0 - tol ? CloningVerdict::Satisfied
                                                 : CloningVerdict::Violated;
    return rep;
}

}  // namespace accmat

#endif
