#pragma once

// Quantum-phase-transition diagnostics: band sweeps along kz, bulk gap,
// concurrence-vs-B and entropy-vs-kz curves, critical-point location.

#include "edgent/model.hpp"
#include "edgent/states.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace edgent::phase {

// Uniform linear grid; point i is start + i*(stop-start)/(count-1).
struct SweepGrid {
    double start = 0.0;
    double stop = 1.0;
    int count = 2;
};

std::vector<double> linspace(const SweepGrid& grid);

struct SweepSeries {
    std::string name;
    std::vector<double> values;
};

struct SweepResult {
    std::string parameter;             // name of the swept variable
    std::vector<double> grid;          // sampled values of that variable
    std::vector<SweepSeries> series;   // one or more series, same length as grid
    nlohmann::json metadata;           // fixed parameters and derived quantities
};

// Closed-form (-E, +E) bands on a kz grid. With self_check, every point is
// cross-validated against eigh of the full 4x4 Hamiltonian to 1e-10.
SweepResult band_structure_z(const model::ReducedParamsZ& params, const SweepGrid& grid,
                             bool self_check = false);

struct BulkGap {
    double gap;       // 2 * min_k E(k)
    double k_at_min;  // nonnegative representative momentum
};

// Gap from the analytic candidate set {k = 0, k^2 = M/B - A^2/(2B^2)}.
BulkGap bulk_gap(const model::ReducedParamsZ& params);

// Concurrence of the kz-axis bulk spinor swept over B, both energy branches
// ("concurrence_plus", "concurrence_minus"). Requires kz != 0 and A != 0.
SweepResult concurrence_vs_b(double M, double A, double kz, const SweepGrid& grid);

// Entanglement entropy of the bulk spinor over a kz grid, both branches.
// Grid points at kz == 0 are dropped and recorded in metadata.
SweepResult entropy_vs_k(const model::ReducedParamsZ& params, const SweepGrid& grid);

struct CriticalB {
    double value;   // B_c = M / kz^2
    bool physical;  // false when B_c <= 0 (outside a B > 0 sweep)
};

// Critical curvature where M - B*kz^2 changes sign. With self_check the
// analytic value is verified against a bisection bracket to 1e-10.
CriticalB critical_b(double M, double kz, bool self_check = false);

}  // namespace edgent::phase
