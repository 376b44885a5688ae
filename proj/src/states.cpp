#include "edgent/states.hpp"

#include <cmath>
#include <stdexcept>

namespace edgent::states {

using std::complex;

BulkSpinor bulk_spinor(const model::ReducedParamsZ& params, double kz, Branch branch,
                       int pair) {
    if (kz == 0.0) {
        throw std::invalid_argument("bulk_spinor: kz == 0, amplitude ratio singular");
    }
    if (params.A == 0.0) {
        throw std::invalid_argument("bulk_spinor: A == 0, amplitude ratio singular");
    }
    if (pair != 1 && pair != 2) {
        throw std::invalid_argument("bulk_spinor: pair must be 1 or 2");
    }

    const double m = params.M - params.B * kz * kz;
    const double e = std::hypot(m, params.A * kz);
    const double sign = branch_sign(branch);
    // pair 1: (a, 0, 0, 1) with a = (m +- E)/(A kz); pair 2 solves with the
    // mass sign flipped, (0, a', 1, 0) with a' = (-m +- E)/(A kz) = 1/a.
    const double mass = (pair == 1) ? m : -m;
    const double ratio = (mass + sign * e) / (params.A * kz);
    const double norm = std::sqrt(1.0 + ratio * ratio);

    Spinor4 spinor;
    if (pair == 1) {
        spinor.amplitudes << ratio / norm, 0.0, 0.0, 1.0 / norm;
    } else {
        spinor.amplitudes << 0.0, ratio / norm, 1.0 / norm, 0.0;
    }
    spinor.normalized = true;
    return BulkSpinor{spinor, ratio, sign * e, branch, pair};
}

SurfaceState surface_state(const model::ReducedParamsZ& params, int branch,
                           int spinor_sign) {
    if (params.B == 0.0) {
        throw std::invalid_argument("surface_state: B == 0, decay constants undefined");
    }
    if (branch != 1 && branch != 2) {
        throw std::invalid_argument("surface_state: branch must be 1 or 2");
    }
    if (spinor_sign != 1 && spinor_sign != -1) {
        throw std::invalid_argument("surface_state: spinor_sign must be +1 or -1");
    }

    // Roots of B l^2 - A l + M = 0.
    const double disc = params.A * params.A - 4.0 * params.M * params.B;
    if (disc < 0.0) {
        throw std::domain_error(
            "surface_state: oscillatory regime (A^2 < 4MB), decay constants complex");
    }
    const double root = std::sqrt(disc);
    const double l1 = (params.A + root) / (2.0 * params.B);
    const double l2 = (params.A - root) / (2.0 * params.B);
    const double lp = std::max(l1, l2);
    const double lm = std::min(l1, l2);
    if (lm <= 0.0) {
        throw std::domain_error("surface_state: no surface state in trivial phase");
    }
    if (lp == lm) {
        throw std::domain_error(
            "surface_state: degenerate decay constants, envelope vanishes identically");
    }
    const double ns = std::sqrt(lp * lm * (lp + lm)) / (lp - lm);

    const double isq = 1.0 / std::sqrt(2.0);
    const complex<double> si(0.0, spinor_sign * isq);
    Spinor4 spinor;
    if (branch == 1) {
        spinor.amplitudes << 0.0, si, isq, 0.0;
    } else {
        spinor.amplitudes << isq, 0.0, 0.0, si;
    }
    spinor.normalized = true;
    return SurfaceState{lp, lm, ns, spinor, branch, spinor_sign};
}

double surface_density(const SurfaceState& state, double z) {
    if (z < 0.0) {
        throw std::invalid_argument("surface_density: z < 0 outside the half-space domain");
    }
    const double envelope = std::exp(-state.lambda_minus * z) - std::exp(-state.lambda_plus * z);
    return 2.0 * state.normalization * state.normalization * envelope * envelope;
}

SurfacePeak surface_peak(const SurfaceState& state) {
    const double z = std::log(state.lambda_plus / state.lambda_minus) /
                     (state.lambda_plus - state.lambda_minus);
    return SurfacePeak{z, surface_density(state, z)};
}

}  // namespace edgent::states
