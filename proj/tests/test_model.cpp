#include "edgent/model.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

namespace {

using namespace edgent;
using namespace edgent::model;

ModelParams3D random_params(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-3.0, 3.0);
    return ModelParams3D{uni(rng), uni(rng), uni(rng), uni(rng),
                         uni(rng), uni(rng), uni(rng), uni(rng)};
}

Momentum3 random_momentum(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> uni(-4.0, 4.0);
    return Momentum3{uni(rng), uni(rng), uni(rng)};
}

}  // namespace

TEST_CASE("epsilon_k substitution") {
    CHECK(epsilon_k({}, {1.0, 2.0, 3.0}) == 0.0);
    ModelParams3D p;
    p.C = 1.0;
    p.D1 = 2.0;
    CHECK(epsilon_k(p, {0.0, 0.0, 3.0}) == doctest::Approx(19.0));
    p = ModelParams3D{};
    p.C = 0.5;
    p.D1 = 1.0;
    p.D2 = 2.0;
    CHECK(epsilon_k(p, {1.0, 1.0, 1.0}) == doctest::Approx(5.5));
}

TEST_CASE("mass_k substitution") {
    ModelParams3D p;
    p.M = 2.0;
    p.B1 = 0.1;
    CHECK(mass_k(p, {0.0, 0.0, 0.0}) == doctest::Approx(2.0));
    CHECK(mass_k(p, {0.0, 0.0, std::sqrt(20.0)}) == doctest::Approx(0.0).epsilon(1e-13));
    p.M = 1.3;
    p.B1 = 1.0;
    CHECK(mass_k(p, {0.0, 0.0, 2.0}) == doctest::Approx(-2.7));
}

TEST_CASE("hamiltonian_3d structure") {
    CHECK(hamiltonian_3d({}, {0.3, -0.7, 1.1}).matrix().cwiseAbs().maxCoeff() == 0.0);

    ModelParams3D massive;
    massive.M = 2.0;
    const auto h = hamiltonian_3d(massive, {});
    const Eigen::Vector4cd diag = h.matrix().diagonal();
    CHECK(diag(0) == std::complex<double>(2.0, 0.0));
    CHECK(diag(1) == std::complex<double>(-2.0, 0.0));
    CHECK(diag(2) == std::complex<double>(2.0, 0.0));
    CHECK(diag(3) == std::complex<double>(-2.0, 0.0));
    CHECK((h.matrix() - h.matrix().diagonal().asDiagonal().toDenseMatrix()).cwiseAbs().maxCoeff() ==
          0.0);

    ModelParams3D p;
    p.M = 2.0;
    p.B1 = 0.1;
    p.A1 = 4.0;
    const auto decomp = eigh(hamiltonian_3d(p, {0.0, 0.0, 1.0}));
    const double e = std::hypot(1.9, 4.0);
    const Eigen::Vector4d expected(-e, -e, e, e);
    CHECK((decomp.eigenvalues - expected).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("hamiltonian_3d is exactly Hermitian and k+- sits in the right slot") {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 100; ++trial) {
        const auto p = random_params(rng);
        const auto k = random_momentum(rng);
        const Eigen::MatrixXcd h = hamiltonian_3d(p, k).matrix();
        CHECK((h - h.adjoint()).cwiseAbs().maxCoeff() == 0.0);
        CHECK(h(0, 1) == std::complex<double>(p.A2 * k.kx, p.A2 * k.ky));
        CHECK(h(0, 3) == std::complex<double>(p.A1 * k.kz, 0.0));
    }
}

TEST_CASE("kz-axis eigenvalues equal epsilon +- dispersion, doubly degenerate") {
    std::mt19937_64 rng(202);
    std::uniform_real_distribution<double> uni(-3.0, 3.0);
    for (int trial = 0; trial < 200; ++trial) {
        ModelParams3D p = random_params(rng);
        const double kz = uni(rng);
        const Momentum3 k{0.0, 0.0, kz};
        const auto decomp = eigh(hamiltonian_3d(p, k));
        const double eps = epsilon_k(p, k);
        const auto [em, ep] = dispersion_z({p.A1, p.B1, p.M}, kz);
        const Eigen::Vector4d expected(eps + em, eps + em, eps + ep, eps + ep);
        CHECK((decomp.eigenvalues - expected).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("spectrum depends on k only through |k| combinations") {
    std::mt19937_64 rng(303);
    for (int trial = 0; trial < 50; ++trial) {
        ModelParams3D p = random_params(rng);
        p.A2 = p.A1;  // common velocity
        const auto k = random_momentum(rng);
        const auto at_k = eigh(hamiltonian_3d(p, k)).eigenvalues;
        const auto at_minus_k =
            eigh(hamiltonian_3d(p, {-k.kx, -k.ky, -k.kz})).eigenvalues;
        CHECK((at_k - at_minus_k).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("dispersion_z closed form") {
    const auto [gm, gp] = dispersion_z({4.0, 0.1, 2.0}, 0.0);
    CHECK(gm == doctest::Approx(-2.0));
    CHECK(gp == doctest::Approx(2.0));

    const auto [bm, bp] = dispersion_z({4.0, 0.1, 2.0}, std::sqrt(20.0));
    CHECK(bp == doctest::Approx(4.0 * std::sqrt(20.0)).epsilon(1e-12));
    CHECK(bm == doctest::Approx(-17.88854).epsilon(1e-6));

    const auto [im, ip] = dispersion_z({0.2, 1.0, 1.3}, std::sqrt(1.28));
    CHECK(ip == doctest::Approx(0.2271563).epsilon(1e-6));
    CHECK(im == -ip);
}

TEST_CASE("hamiltonian_2d blocks") {
    CHECK(hamiltonian_2d({}, 0.4, -0.2).matrix().cwiseAbs().maxCoeff() == 0.0);

    Params2D massive{0.0, 1.0, 0.0};
    const Eigen::MatrixXcd hm = hamiltonian_2d(massive, 0.0, 0.0).matrix();
    CHECK(hm(0, 0).real() == doctest::Approx(1.0));
    CHECK(hm(1, 1).real() == doctest::Approx(-1.0));
    CHECK(hm(2, 2).real() == doctest::Approx(1.0));
    CHECK(hm(3, 3).real() == doctest::Approx(-1.0));

    const auto decomp = eigh(hamiltonian_2d({1.0, 1.0, 1.0}, 0.5, 0.0));
    const double e = std::sqrt(0.25 + 0.5625);
    CHECK(e == doctest::Approx(0.901388).epsilon(1e-6));
    const Eigen::Vector4d expected(-e, -e, e, e);
    CHECK((decomp.eigenvalues - expected).cwiseAbs().maxCoeff() < 1e-10);

    // Off-block coupling vanishes: spin sectors are independent.
    const Eigen::MatrixXcd h = hamiltonian_2d({1.3, -0.4, 0.8}, 0.3, 0.9).matrix();
    CHECK(h.block<2, 2>(0, 2).cwiseAbs().maxCoeff() == 0.0);
    CHECK(h.block<2, 2>(2, 0).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("the two 2-D spin blocks share a spectrum") {
    std::mt19937_64 rng(404);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const Params2D p{uni(rng), uni(rng), uni(rng)};
        const double kx = uni(rng);
        const double ky = uni(rng);
        const Eigen::MatrixXcd h = hamiltonian_2d(p, kx, ky).matrix();
        const auto up = eigh(HermitianMatrix(h.block<2, 2>(0, 0))).eigenvalues;
        const auto down = eigh(HermitianMatrix(h.block<2, 2>(2, 2))).eigenvalues;
        CHECK((up - down).cwiseAbs().maxCoeff() < 1e-12);
    }
}

TEST_CASE("phase_classify") {
    CHECK(phase_classify(-1.3, 1.0) == Phase::Trivial);
    CHECK(phase_classify(0.0, 1.0) == Phase::Critical);
    CHECK(phase_classify(1.3, 1.0) == Phase::Topological);
    CHECK_THROWS_AS(phase_classify(1.0, 0.0), std::invalid_argument);

    std::mt19937_64 rng(505);
    std::uniform_real_distribution<double> uni(-2.0, 2.0);
    for (int trial = 0; trial < 100; ++trial) {
        const double m = uni(rng);
        double b = uni(rng);
        if (b == 0.0) b = 0.5;
        CHECK(phase_classify(m, b) == phase_classify(-m, -b));
    }
}
