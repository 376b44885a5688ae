#pragma once

// Two-qubit entanglement measures under the (spin x orbital) bipartition:
// concurrence, reduced density matrices, von Neumann entropy in bits.

#include "edgent/states.hpp"

#include <Eigen/Dense>

namespace edgent::entanglement {

// Normalized two-qubit pure state. Amplitude order is lexicographic
// (spin, orbital): |00> = |up,P1>, |01> = |up,P2>, |10> = |down,P1>,
// |11> = |down,P2> -- identical to the Spinor4 component order.
class TwoQubitPure {
public:
    static constexpr double kNormTol = 1e-12;

    explicit TwoQubitPure(Eigen::Vector4cd amplitudes);

    const Eigen::Vector4cd& amplitudes() const { return amplitudes_; }

private:
    Eigen::Vector4cd amplitudes_;
};

enum class Subsystem { Spin, Orbital };

// 2x2 reduced density matrix: Hermitian, positive semidefinite, unit trace.
class ReducedDensity {
public:
    explicit ReducedDensity(Eigen::Matrix2cd rho);

    const Eigen::Matrix2cd& matrix() const { return rho_; }

    // Ascending, clipped into [0, 1] against floating-point PSD noise.
    Eigen::Vector2d eigenvalues() const;

private:
    Eigen::Matrix2cd rho_;
};

// Re-labels a normalized Spinor4 as a two-qubit state (the basis orders
// coincide, so this is an audited identity map). Rejects unnormalized input.
TwoQubitPure from_spinor(const states::Spinor4& spinor);

// Pure-state concurrence |<psi| sy x sy |psi*>| in [0, 1].
double concurrence(const TwoQubitPure& state);

// Closed form 2|a| / (1 + a^2) for states of the form (a|00> + |11>)/sqrt(N)
// and their pair-2 analogues.
double concurrence_analytic(double a);

// Partial trace over the discarded qubit.
ReducedDensity reduced_density(const TwoQubitPure& state, Subsystem keep);

// Entanglement entropy -sum l_i log2 l_i of either reduced state, in bits.
double entropy(const TwoQubitPure& state);

// True iff concurrence >= 1 - tol. Requires tol > 0.
bool is_bell(const TwoQubitPure& state, double tol);

}  // namespace edgent::entanglement
