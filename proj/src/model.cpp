#include "edgent/model.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace edgent::model {

using std::complex;

const char* to_string(Phase phase) {
    switch (phase) {
        case Phase::Trivial: return "trivial";
        case Phase::Critical: return "critical";
        case Phase::Topological: return "topological";
    }
    return "unknown";
}

double epsilon_k(const ModelParams3D& params, const Momentum3& k) {
    return params.C + params.D1 * k.kz * k.kz + params.D2 * (k.kx * k.kx + k.ky * k.ky);
}

double mass_k(const ModelParams3D& params, const Momentum3& k) {
    return params.M - params.B1 * k.kz * k.kz - params.B2 * (k.kx * k.kx + k.ky * k.ky);
}

HermitianMatrix hamiltonian_3d(const ModelParams3D& params, const Momentum3& k) {
    const double eps = epsilon_k(params, k);
    const double m = mass_k(params, k);
    const double akz = params.A1 * k.kz;
    const complex<double> a2kp(params.A2 * k.kx, params.A2 * k.ky);

    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    h(0, 0) = eps + m;
    h(1, 1) = eps - m;
    h(2, 2) = eps + m;
    h(3, 3) = eps - m;
    h(0, 1) = a2kp;
    h(1, 0) = std::conj(a2kp);
    h(2, 3) = -std::conj(a2kp);
    h(3, 2) = -a2kp;
    h(0, 3) = akz;
    h(3, 0) = akz;
    h(1, 2) = akz;
    h(2, 1) = akz;
    return HermitianMatrix(h);
}

std::pair<double, double> dispersion_z(const ReducedParamsZ& params, double kz) {
    const double m = params.M - params.B * kz * kz;
    const double e = std::hypot(m, params.A * kz);
    return {-e, e};
}

HermitianMatrix hamiltonian_2d(const Params2D& params, double kx, double ky) {
    const double mass = params.m_v2 - params.B * (kx * kx + ky * ky);
    const double vx = params.v * kx;
    const double vy = params.v * ky;

    Eigen::Matrix4cd h = Eigen::Matrix4cd::Zero();
    // spin-up block: v*kx*sx + v*ky*sy + mass*sz
    h(0, 0) = mass;
    h(1, 1) = -mass;
    h(0, 1) = complex<double>(vx, -vy);
    h(1, 0) = complex<double>(vx, vy);
    // spin-down block: v*kx*sx - v*ky*sy + mass*sz
    h(2, 2) = mass;
    h(3, 3) = -mass;
    h(2, 3) = complex<double>(vx, vy);
    h(3, 2) = complex<double>(vx, -vy);
    return HermitianMatrix(h);
}

Phase phase_classify(double M, double B) {
    if (B == 0.0) {
        throw std::invalid_argument("phase_classify: B == 0, phase ratio M/B undefined");
    }
    if (M == 0.0) return Phase::Critical;
    return (M / B < 0.0) ? Phase::Trivial : Phase::Topological;
}

}  // namespace edgent::model
