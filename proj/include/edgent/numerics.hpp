#pragma once

// Dense complex Hermitian eigensolver plus the small deterministic 1-D
// helpers (bisection, grid extremum, trapezoid rule) used everywhere else.

#include <Eigen/Dense>

#include <functional>
#include <span>

namespace edgent {

// Square complex matrix checked against H(i,j) == conj(H(j,i)) on
// construction; the check is absolute with tolerance kHermiticityTol.
class HermitianMatrix {
public:
    static constexpr double kHermiticityTol = 1e-12;

    explicit HermitianMatrix(Eigen::MatrixXcd entries);

    int dim() const { return static_cast<int>(entries_.rows()); }
    const Eigen::MatrixXcd& matrix() const { return entries_; }

private:
    Eigen::MatrixXcd entries_;
};

struct EigenDecomposition {
    Eigen::VectorXd eigenvalues;    // ascending
    Eigen::MatrixXcd eigenvectors;  // orthonormal columns, same order
};

// Full spectrum and orthonormal eigenvectors. Deterministic: identical input
// bits give identical output bits. Degenerate eigenvalues come with an
// arbitrary orthonormal basis of the eigenspace; compare subspace projectors,
// not individual vectors.
EigenDecomposition eigh(const HermitianMatrix& matrix);

struct Sample {
    double x;
    double y;
};

enum class ExtremumKind { Max, Min };

// Bisection root on [lo, hi]; requires f(lo)*f(hi) <= 0 and tol > 0.
// Returns the midpoint of a sign-change bracket of width <= tol.
double bisect_root(const std::function<double(double)>& f, double lo, double hi,
                   double tol);

// Extremal sample of a tabulated function (>= 3 samples, x strictly
// increasing). Ties resolve to the smallest x.
Sample grid_extremum(std::span<const Sample> samples, ExtremumKind kind);

// Trapezoid-rule integral of tabulated samples (>= 2, x strictly increasing).
double integrate_trapezoid(std::span<const Sample> samples);

}  // namespace edgent
