#pragma once

// Four-band k.p Hamiltonians: the 3-D bulk model in the hybridized
// (P1,up | P2,up | P1,down | P2,down) basis, its closed-form dispersion on
// the kz axis, the 2-D two-block model, and the M/B phase classification.

#include "edgent/numerics.hpp"

#include <utility>

namespace edgent::model {

struct ModelParams3D {
    double A1 = 0.0;  // kz velocity
    double A2 = 0.0;  // in-plane velocity
    double B1 = 0.0;  // kz curvature
    double B2 = 0.0;  // in-plane curvature
    double C = 0.0;   // energy offset
    double D1 = 0.0;  // kz particle-hole asymmetry
    double D2 = 0.0;  // in-plane particle-hole asymmetry
    double M = 0.0;   // mass / gap parameter
};

struct Momentum3 {
    double kx = 0.0;
    double ky = 0.0;
    double kz = 0.0;
};

// The (A, B, M) triple governing the kz-axis physics; A stands in for A1 and
// B for B1 when coming from a 3-D parameter set.
struct ReducedParamsZ {
    double A = 0.0;
    double B = 0.0;
    double M = 0.0;
};

struct Params2D {
    double v = 0.0;     // velocity
    double m_v2 = 0.0;  // mass term m*v^2
    double B = 0.0;     // curvature
};

enum class Phase { Trivial, Critical, Topological };

const char* to_string(Phase phase);

// Scalar kinetic offset epsilon(k) = C + D1*kz^2 + D2*(kx^2 + ky^2).
double epsilon_k(const ModelParams3D& params, const Momentum3& k);

// Momentum-dependent mass M(k) = M - B1*kz^2 - B2*(kx^2 + ky^2).
double mass_k(const ModelParams3D& params, const Momentum3& k);

// 4x4 bulk Hamiltonian, exactly Hermitian by construction. Off-diagonal
// in-plane coupling uses k+- = kx +- i*ky.
HermitianMatrix hamiltonian_3d(const ModelParams3D& params, const Momentum3& k);

// Symmetric part of the kz-axis spectrum: (-E, +E) with
// E = sqrt((M - B*kz^2)^2 + (A*kz)^2). The caller adds epsilon(k).
std::pair<double, double> dispersion_z(const ReducedParamsZ& params, double kz);

// 4x4 block-diagonal Hamiltonian diag(h+, h-), spin-up block first, with
// h+- = v*kx*sx +- v*ky*sy + (m_v2 - B*(kx^2 + ky^2))*sz on orbital space.
HermitianMatrix hamiltonian_2d(const Params2D& params, double kx, double ky);

// Sign of M/B decides the phase; M == 0 is the transition. B == 0 is
// rejected (the ratio is undefined).
Phase phase_classify(double M, double B);

}  // namespace edgent::model
