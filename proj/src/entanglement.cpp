#include "edgent/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace edgent::entanglement {

using std::complex;

TwoQubitPure::TwoQubitPure(Eigen::Vector4cd amplitudes)
    : amplitudes_(std::move(amplitudes)) {
    const double norm2 = amplitudes_.squaredNorm();
    if (std::abs(norm2 - 1.0) > kNormTol) {
        throw std::invalid_argument("TwoQubitPure: state is not normalized");
    }
}

ReducedDensity::ReducedDensity(Eigen::Matrix2cd rho) : rho_(std::move(rho)) {
    const double trace_dev = std::abs(rho_.trace() - complex<double>(1.0, 0.0));
    if (trace_dev > 1e-12) {
        throw std::invalid_argument("ReducedDensity: trace differs from one");
    }
    const double herm_dev = (rho_ - rho_.adjoint()).cwiseAbs().maxCoeff();
    if (herm_dev > 1e-12) {
        throw std::invalid_argument("ReducedDensity: matrix is not Hermitian");
    }
    const Eigen::Vector2d ev = eigenvalues();
    if (ev(0) < -1e-12 || ev(1) > 1.0 + 1e-12) {
        throw std::invalid_argument("ReducedDensity: spectrum outside [0, 1]");
    }
}

Eigen::Vector2d ReducedDensity::eigenvalues() const {
    // 2x2 Hermitian closed form.
    const double half_tr = 0.5 * rho_.trace().real();
    const double det = (rho_(0, 0) * rho_(1, 1) - rho_(0, 1) * rho_(1, 0)).real();
    const double gap = std::sqrt(std::max(half_tr * half_tr - det, 0.0));
    auto clip = [](double v) { return std::clamp(v, 0.0, 1.0); };
    return Eigen::Vector2d(clip(half_tr - gap), clip(half_tr + gap));
}

TwoQubitPure from_spinor(const states::Spinor4& spinor) {
    return TwoQubitPure(spinor.amplitudes);
}

double concurrence(const TwoQubitPure& state) {
    // sy x sy in the lexicographic basis.
    Eigen::Matrix4cd syy = Eigen::Matrix4cd::Zero();
    syy(0, 3) = -1.0;
    syy(1, 2) = 1.0;
    syy(2, 1) = 1.0;
    syy(3, 0) = -1.0;
    const complex<double> overlap =
        state.amplitudes().adjoint() * syy * state.amplitudes().conjugate();
    return std::clamp(std::abs(overlap), 0.0, 1.0);
}

double concurrence_analytic(double a) {
    if (!std::isfinite(a)) {
        throw std::invalid_argument("concurrence_analytic: a must be finite");
    }
    return 2.0 * std::abs(a) / (1.0 + a * a);
}

ReducedDensity reduced_density(const TwoQubitPure& state, Subsystem keep) {
    const Eigen::Vector4cd& amp = state.amplitudes();
    Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
    // amplitude index = 2*spin + orbital
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            complex<double> acc = 0.0;
            for (int t = 0; t < 2; ++t) {
                const int ia = (keep == Subsystem::Spin) ? 2 * a + t : 2 * t + a;
                const int ib = (keep == Subsystem::Spin) ? 2 * b + t : 2 * t + b;
                acc += amp(ia) * std::conj(amp(ib));
            }
            rho(a, b) = acc;
        }
    }
    return ReducedDensity(rho);
}

double entropy(const TwoQubitPure& state) {
    const Eigen::Vector2d ev = reduced_density(state, Subsystem::Spin).eigenvalues();
    double s = 0.0;
    for (int i = 0; i < 2; ++i) {
        if (ev(i) > 0.0) s -= ev(i) * std::log2(ev(i));
    }
    return std::clamp(s, 0.0, 1.0);
}

bool is_bell(const TwoQubitPure& state, double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("is_bell: tol must be positive");
    }
    return concurrence(state) >= 1.0 - tol;
}

}  // namespace edgent::entanglement
