#pragma once

// Analytic eigenstates of the kz-axis bulk Hamiltonian and the zero-energy
// surface state: decay constants, normalization, density profile and peak.

#include "edgent/model.hpp"

#include <Eigen/Dense>

namespace edgent::states {

// 4-component state in the (P1,up | P2,up | P1,down | P2,down) basis.
struct Spinor4 {
    Eigen::Vector4cd amplitudes = Eigen::Vector4cd::Zero();
    bool normalized = false;
};

// Which of the +-E energy branches a bulk eigenstate belongs to.
enum class Branch { Minus, Plus };

inline double branch_sign(Branch b) { return b == Branch::Plus ? 1.0 : -1.0; }

struct BulkSpinor {
    Spinor4 state;
    double amplitude_ratio;  // the a in (a|00> + |11>)/sqrt(1+a^2) or its pair-2 analogue
    double energy;           // +-E(kz), no epsilon offset in the reduced model
    Branch branch;
    int pair;  // 1 or 2
};

// Normalized bulk eigenstate of H(0, 0, kz) on the chosen branch.
// pair 1 spans (a, 0, 0, 1); pair 2 spans (0, a', 1, 0) with a' = 1/a, the
// ratio that actually solves the eigenproblem. Requires kz != 0 and A != 0.
BulkSpinor bulk_spinor(const model::ReducedParamsZ& params, double kz, Branch branch,
                       int pair);

struct SurfaceState {
    double lambda_plus;    // faster decay constant, > lambda_minus
    double lambda_minus;   // slower decay constant, > 0
    double normalization;  // N_s = sqrt(l+ l- (l+ + l-)) / (l+ - l-)
    Spinor4 spinor;        // unit-norm internal spinor of the chosen branch
    int branch;            // 1: (0, s*i, 1, 0)/sqrt2   2: (1, 0, 0, s*i)/sqrt2
    int spinor_sign;       // s = +1 or -1
};

// Zero-energy half-space state with envelope exp(-l- z) - exp(-l+ z).
// Exists only for M/B > 0 with real, distinct, positive decay constants;
// otherwise throws with a regime-specific message.
SurfaceState surface_state(const model::ReducedParamsZ& params, int branch = 1,
                           int spinor_sign = +1);

// Probability density |Psi(z)|^2 of the full surface state, normalized to
// one on 0 <= z < infinity. The stored N_s follows the convention where the
// internal spinor carries norm sqrt(2), hence the factor 2 here.
double surface_density(const SurfaceState& state, double z);

struct SurfacePeak {
    double z;
    double density;
};

// Stationary point z = ln(l+/l-) / (l+ - l-) of the envelope and the density
// there.
SurfacePeak surface_peak(const SurfaceState& state);

}  // namespace edgent::states
