#include "edgent/numerics.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace edgent {

HermitianMatrix::HermitianMatrix(Eigen::MatrixXcd entries)
    : entries_(std::move(entries)) {
    if (entries_.rows() < 1 || entries_.rows() != entries_.cols()) {
        throw std::invalid_argument("HermitianMatrix: matrix must be square with dim >= 1");
    }
    const auto n = entries_.rows();
    double worst = 0.0;
    Eigen::Index wi = 0, wj = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = i; j < n; ++j) {
            const double dev = std::abs(entries_(i, j) - std::conj(entries_(j, i)));
            if (dev > worst) {
                worst = dev;
                wi = i;
                wj = j;
            }
        }
    }
    if (worst > kHermiticityTol) {
        std::ostringstream msg;
        msg << "HermitianMatrix: not Hermitian, |H(" << wi << "," << wj
            << ") - conj(H(" << wj << "," << wi << "))| = " << worst;
        throw std::invalid_argument(msg.str());
    }
}

EigenDecomposition eigh(const HermitianMatrix& matrix) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(matrix.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigh: eigensolver failed to converge");
    }
    return EigenDecomposition{solver.eigenvalues(), solver.eigenvectors()};
}

double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol) {
    if (!(tol > 0.0)) {
        throw std::invalid_argument("bisect_root: tol must be positive");
    }
    if (!(lo < hi)) {
        throw std::invalid_argument("bisect_root: requires lo < hi");
    }
    double flo = f(lo);
    double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (flo * fhi > 0.0) {
        throw std::invalid_argument("bisect_root: no sign change on [lo, hi]");
    }
    while (hi - lo > tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;  // bracket at floating-point resolution
        const double fmid = f(mid);
        if (fmid == 0.0) return mid;
        if (flo * fmid < 0.0) {
            hi = mid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return 0.5 * (lo + hi);
}

namespace {

void require_increasing(std::span<const Sample> samples, const char* who) {
    for (std::size_t i = 1; i < samples.size(); ++i) {
        if (!(samples[i - 1].x < samples[i].x)) {
            throw std::invalid_argument(std::string(who) + ": x must be strictly increasing");
        }
    }
}

}  // namespace

Sample grid_extremum(std::span<const Sample> samples, ExtremumKind kind) {
    if (samples.size() < 3) {
        throw std::invalid_argument("grid_extremum: needs at least 3 samples");
    }
    require_increasing(samples, "grid_extremum");
    Sample best = samples[0];
    for (const Sample& s : samples.subspan(1)) {
        const bool better = (kind == ExtremumKind::Max) ? s.y > best.y : s.y < best.y;
        if (better) best = s;  // strict comparison keeps the smallest x on ties
    }
    return best;
}

double integrate_trapezoid(std::span<const Sample> samples) {
    if (samples.size() < 2) {
        throw std::invalid_argument("integrate_trapezoid: needs at least 2 samples");
    }
    require_increasing(samples, "integrate_trapezoid");
    double acc = 0.0;
    for (std::size_t i = 1; i < samples.size(); ++i) {
        acc += 0.5 * (samples[i].y + samples[i - 1].y) * (samples[i].x - samples[i - 1].x);
    }
    return acc;
}

}  // namespace edgent
