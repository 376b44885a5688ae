#include "edgent/phase.hpp"

#include "edgent/entanglement.hpp"
#include "edgent/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace edgent::phase {

std::vector<double> linspace(const SweepGrid& grid) {
    if (!(grid.start < grid.stop)) {
        throw std::invalid_argument("SweepGrid: requires start < stop");
    }
    if (grid.count < 2) {
        throw std::invalid_argument("SweepGrid: requires count >= 2");
    }
    std::vector<double> points(grid.count);
    const double step = (grid.stop - grid.start) / (grid.count - 1);
    for (int i = 0; i < grid.count; ++i) {
        points[i] = grid.start + i * step;
    }
    return points;
}

SweepResult band_structure_z(const model::ReducedParamsZ& params, const SweepGrid& grid,
                             bool self_check) {
    SweepResult result;
    result.parameter = "kz";
    result.grid = linspace(grid);
    SweepSeries lower{"E_minus", {}};
    SweepSeries upper{"E_plus", {}};
    lower.values.reserve(result.grid.size());
    upper.values.reserve(result.grid.size());

    const model::ModelParams3D full{params.A, 0.0, params.B, 0.0, 0.0, 0.0, 0.0, params.M};
    double worst_dev = 0.0;
    for (double kz : result.grid) {
        const auto [em, ep] = model::dispersion_z(params, kz);
        lower.values.push_back(em);
        upper.values.push_back(ep);
        if (self_check) {
            const auto decomp = eigh(model::hamiltonian_3d(full, {0.0, 0.0, kz}));
            const Eigen::Vector4d expected(em, em, ep, ep);
            const double dev = (decomp.eigenvalues - expected).cwiseAbs().maxCoeff();
            worst_dev = std::max(worst_dev, dev);
            if (dev > 1e-10) {
                throw std::runtime_error(
                    "band_structure_z: self-check mismatch between closed form and eigh");
            }
        }
    }
    result.series = {std::move(lower), std::move(upper)};

    const BulkGap gap = bulk_gap(params);
    result.metadata["A"] = params.A;
    result.metadata["B"] = params.B;
    result.metadata["M"] = params.M;
    result.metadata["gap"] = gap.gap;
    result.metadata["k_at_min"] = gap.k_at_min;
    if (params.B != 0.0) {
        result.metadata["phase"] = model::to_string(model::phase_classify(params.M, params.B));
    }
    result.metadata["self_check"] = self_check;
    if (self_check) result.metadata["self_check_max_dev"] = worst_dev;
    return result;
}

BulkGap bulk_gap(const model::ReducedParamsZ& params) {
    double best_e = std::abs(params.M);  // k = 0 candidate
    double best_k = 0.0;
    if (params.B != 0.0) {
        const double k2 = params.M / params.B -
                          params.A * params.A / (2.0 * params.B * params.B);
        if (k2 > 0.0) {
            const double k = std::sqrt(k2);
            const double e = model::dispersion_z(params, k).second;
            if (e < best_e) {
                best_e = e;
                best_k = k;
            }
        }
    }
    return BulkGap{2.0 * best_e, best_k};
}

SweepResult concurrence_vs_b(double M, double A, double kz, const SweepGrid& grid) {
    if (kz == 0.0 || A == 0.0) {
        throw std::invalid_argument("concurrence_vs_b: requires kz != 0 and A != 0");
    }
    SweepResult result;
    result.parameter = "B";
    result.grid = linspace(grid);
    SweepSeries plus{"concurrence_plus", {}};
    SweepSeries minus{"concurrence_minus", {}};
    plus.values.reserve(result.grid.size());
    minus.values.reserve(result.grid.size());
    for (double b : result.grid) {
        const model::ReducedParamsZ params{A, b, M};
        for (auto [branch, series] :
             {std::pair{states::Branch::Plus, &plus}, {states::Branch::Minus, &minus}}) {
            const auto spinor = states::bulk_spinor(params, kz, branch, 1);
            series->values.push_back(
                entanglement::concurrence(entanglement::from_spinor(spinor.state)));
        }
    }
    result.series = {std::move(plus), std::move(minus)};

    result.metadata["M"] = M;
    result.metadata["A"] = A;
    result.metadata["kz"] = kz;
    const CriticalB bc = critical_b(M, kz);
    result.metadata["B_c"] = bc.value;
    result.metadata["B_c_physical"] = bc.physical;
    return result;
}

SweepResult entropy_vs_k(const model::ReducedParamsZ& params, const SweepGrid& grid) {
    SweepResult result;
    result.parameter = "kz";
    std::vector<double> dropped;
    for (double kz : linspace(grid)) {
        if (kz == 0.0) {
            dropped.push_back(kz);
            continue;
        }
        result.grid.push_back(kz);
    }
    if (result.grid.empty()) {
        throw std::invalid_argument("entropy_vs_k: every grid point is singular (kz == 0)");
    }

    SweepSeries plus{"entropy_plus", {}};
    SweepSeries minus{"entropy_minus", {}};
    plus.values.reserve(result.grid.size());
    minus.values.reserve(result.grid.size());
    for (double kz : result.grid) {
        for (auto [branch, series] :
             {std::pair{states::Branch::Plus, &plus}, {states::Branch::Minus, &minus}}) {
            const auto spinor = states::bulk_spinor(params, kz, branch, 1);
            series->values.push_back(
                entanglement::entropy(entanglement::from_spinor(spinor.state)));
        }
    }
    result.series = {std::move(plus), std::move(minus)};

    result.metadata["A"] = params.A;
    result.metadata["B"] = params.B;
    result.metadata["M"] = params.M;
    result.metadata["dropped_kz"] = dropped;
    if (params.B != 0.0 && params.M / params.B > 0.0) {
        result.metadata["entropy_max_k"] = std::sqrt(params.M / params.B);
    }
    return result;
}

CriticalB critical_b(double M, double kz, bool self_check) {
    if (kz == 0.0) {
        throw std::invalid_argument("critical_b: kz == 0, no finite critical curvature");
    }
    const double value = M / (kz * kz);
    if (self_check && M != 0.0) {
        // Verify against a bisection bracket on f(B) = M - B kz^2 without
        // reusing the analytic value to build the bracket.
        auto f = [&](double b) { return M - b * kz * kz; };
        const double direction = (M > 0.0) ? 1.0 : -1.0;
        double hi = direction;
        while (f(hi) * M > 0.0) hi *= 2.0;
        const double lo = std::min(0.0, hi);
        const double root = bisect_root(f, lo, std::max(0.0, hi), 1e-12);
        if (std::abs(root - value) > 1e-10) {
            throw std::runtime_error("critical_b: self-check mismatch with bisection");
        }
    }
    return CriticalB{value, value > 0.0};
}

}  // namespace edgent::phase
