#include "edgent/ribbon.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

namespace {

using namespace edgent;
using namespace edgent::ribbon;

RibbonConfig small_config(double m_v2 = 0.5) {
    RibbonConfig config;
    config.params = {1.0, m_v2, 1.0};
    config.width_sites = 40;
    config.kx_grid = {0.04, 0.06, 3};  // middle point kx = 0.05
    return config;
}

std::vector<const RibbonState*> classified_at(const RibbonSpectrum& spectrum, std::size_t ik) {
    std::vector<const RibbonState*> found;
    for (const auto& state : spectrum.states[ik]) {
        if (is_edge_state(state, spectrum.bulk_gap)) found.push_back(&state);
    }
    return found;
}

}  // namespace

TEST_CASE("decoupled sites give a flat two-level spectrum") {
    RibbonConfig config;
    config.params = {0.0, 1.0, 0.0};
    config.width_sites = 12;
    for (double kx : {0.0, 0.3}) {
        const auto decomp = eigh(build_ribbon_hamiltonian(config, kx));
        for (int i = 0; i < 24; ++i) {
            CHECK(decomp.eigenvalues(i) == doctest::Approx(-1.0).epsilon(1e-14));
            CHECK(decomp.eigenvalues(47 - i) == doctest::Approx(1.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("ribbon spectrum at kx = 0 is symmetric about zero energy") {
    const auto config = small_config();
    const auto decomp = eigh(build_ribbon_hamiltonian(config, 0.0));
    const int dim = 4 * config.width_sites;
    for (int i = 0; i < dim; ++i) {
        CHECK(decomp.eigenvalues(i) == doctest::Approx(-decomp.eigenvalues(dim - 1 - i))
                                           .epsilon(1e-10));
    }
}

TEST_CASE("ribbon config validation") {
    RibbonConfig config;
    config.width_sites = 5;
    CHECK_THROWS_AS(build_ribbon_hamiltonian(config, 0.0), std::invalid_argument);
    config.width_sites = 40;
    config.lattice_constant = 0.0;
    CHECK_THROWS_AS(build_ribbon_hamiltonian(config, 0.0), std::invalid_argument);
}

TEST_CASE("topological ribbon carries four in-gap edge states per kx") {
    const auto spectrum = edge_spectrum(small_config());
    CHECK(spectrum.bulk_gap == doctest::Approx(1.0).epsilon(1e-12));
    const auto found = classified_at(spectrum, 1);  // kx = 0.05
    CHECK(found.size() == 4);
    for (const auto* state : found) {
        CHECK(state->edge_weight > 0.6);
        CHECK(std::abs(state->energy) < 0.5);
    }
    // one spin-up and one spin-down state per degenerate pair
    int polarized_up = 0, polarized_down = 0;
    for (const auto* state : found) {
        if (state->spin_up_weight > 0.9) ++polarized_up;
        if (state->spin_up_weight < 0.1) ++polarized_down;
    }
    CHECK(polarized_up == 2);
    CHECK(polarized_down == 2);
}

TEST_CASE("trivial ribbon has no edge states") {
    const auto spectrum = edge_spectrum(small_config(-0.5));
    CHECK(count_edge_states(spectrum) == 0);
}

TEST_CASE("edge branches cross at kx = 0 with opposite helicity") {
    auto config = small_config();
    config.kx_grid = {-0.05, 0.05, 3};  // middle point kx = 0
    const auto spectrum = edge_spectrum(config);
    const auto found = classified_at(spectrum, 1);
    CHECK(found.size() == 4);
    int positive = 0, negative = 0;
    for (const auto* state : found) {
        CHECK(std::abs(state->energy) < 1e-6);  // crossing at zero energy
        CHECK(std::abs(state->helicity) > 0.9);
        (state->helicity > 0.0 ? positive : negative)++;
    }
    CHECK(positive == 2);
    CHECK(negative == 2);
}

TEST_CASE("spin-up edge branches on the two edges counter-propagate") {
    auto config = small_config();
    config.kx_grid = {0.04, 0.08, 3};  // 0.04, 0.06, 0.08
    const auto spectrum = edge_spectrum(config);
    auto up_energies = [&](std::size_t ik) {
        std::vector<double> energies;
        for (const auto* state : classified_at(spectrum, ik)) {
            if (state->spin_up_weight > 0.9) energies.push_back(state->energy);
        }
        std::sort(energies.begin(), energies.end());
        return energies;
    };
    const auto lo = up_energies(0);
    const auto hi = up_energies(2);
    REQUIRE(lo.size() == 2);
    REQUIRE(hi.size() == 2);
    CHECK(hi[1] > lo[1]);  // branch moving with +x
    CHECK(hi[0] < lo[0]);  // branch moving against it
}

TEST_CASE("spin blocks are decoupled with identical spectra") {
    const auto config = small_config();
    for (double kx : {-0.3, 0.0, 0.2}) {
        const auto h = build_ribbon_hamiltonian(config, kx);
        // no coupling between spin sectors
        double cross = 0.0;
        const int ny = config.width_sites;
        for (int i = 0; i < ny; ++i) {
            for (int j = 0; j < ny; ++j) {
                cross = std::max(cross, h.matrix()
                                            .block<2, 2>(4 * i, 4 * j + 2)
                                            .cwiseAbs()
                                            .maxCoeff());
            }
        }
        CHECK(cross == 0.0);

        const auto up = eigh(HermitianMatrix(ribbon_spin_block(h, 0)));
        const auto down = eigh(HermitianMatrix(ribbon_spin_block(h, 1)));
        CHECK((up.eigenvalues - down.eigenvalues).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("time reversal pairs +kx with -kx across spin blocks") {
    const auto config = small_config();
    for (double kx : {0.07, 0.21}) {
        const auto forward = build_ribbon_hamiltonian(config, kx);
        const auto backward = build_ribbon_hamiltonian(config, -kx);
        const auto up_fwd = eigh(HermitianMatrix(ribbon_spin_block(forward, 0)));
        const auto down_bwd = eigh(HermitianMatrix(ribbon_spin_block(backward, 1)));
        CHECK((up_fwd.eigenvalues - down_bwd.eigenvalues).cwiseAbs().maxCoeff() < 1e-10);
    }
}

TEST_CASE("edge energies are insensitive to doubling the width") {
    auto narrow = small_config();
    auto wide = small_config();
    wide.width_sites = 80;
    const auto spectrum_narrow = edge_spectrum(narrow);
    const auto spectrum_wide = edge_spectrum(wide);
    auto energies = [&](const RibbonSpectrum& spectrum) {
        std::vector<double> out;
        for (const auto* state : classified_at(spectrum, 1)) out.push_back(state->energy);
        std::sort(out.begin(), out.end());
        return out;
    };
    const auto a = energies(spectrum_narrow);
    const auto b = energies(spectrum_wide);
    REQUIRE(a.size() == 4);
    REQUIRE(b.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(std::abs(a[i] - b[i]) < 1e-3);
    }
}

TEST_CASE("helicity_apply on reference spinors") {
    const double isq = 1.0 / std::sqrt(2.0);
    states::Spinor4 minus;
    minus.amplitudes << 0.0, std::complex<double>(0.0, isq), isq, 0.0;
    const auto rm = helicity_apply(minus);
    CHECK(rm.expectation == doctest::Approx(-1.0).epsilon(1e-14));
    CHECK(rm.residual < 1e-14);

    states::Spinor4 plus;
    plus.amplitudes << 0.0, std::complex<double>(0.0, -isq), isq, 0.0;
    const auto rp = helicity_apply(plus);
    CHECK(rp.expectation == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(rp.residual < 1e-14);

    states::Spinor4 product;
    product.amplitudes << 1.0, 0.0, 0.0, 0.0;
    const auto rz = helicity_apply(product);
    CHECK(rz.expectation == doctest::Approx(0.0).epsilon(1e-14));
    CHECK(rz.residual == doctest::Approx(1.0).epsilon(1e-14));

    states::Spinor4 unnormalized;
    unnormalized.amplitudes << 1.0, 1.0, 0.0, 0.0;
    CHECK_THROWS_AS(helicity_apply(unnormalized), std::invalid_argument);
}

TEST_CASE("conductance through the spin filter") {
    const model::Params2D topological{1.0, 0.5, 1.0};
    CHECK(conductance(topological, SpinFilter::Up).transmission == 1.0);
    CHECK(conductance(topological, SpinFilter::Down).transmission == 0.0);
    CHECK(conductance(topological, SpinFilter::None).transmission == 1.0);
    CHECK(conductance(topological, SpinFilter::Up).edge_channel);

    const model::Params2D trivial{1.0, -0.5, 1.0};
    const auto blocked = conductance(trivial, SpinFilter::Up);
    CHECK(blocked.transmission == 0.0);
    CHECK_FALSE(blocked.edge_channel);

    CHECK_THROWS_AS(conductance({1.0, 0.5, 0.0}, SpinFilter::Up), std::invalid_argument);
}

TEST_CASE("measure_repeated endpoints and reproducibility") {
    MeasurementSetup setup;
    setup.trials = 10000;
    setup.seed = 12345;

    setup.axis_polar = 0.0;  // aligned filter
    CHECK(measure_repeated(setup).pass_count == 10000);

    setup.axis_polar = M_PI;  // anti-aligned
    CHECK(measure_repeated(setup).pass_count == 0);

    setup.axis_polar = M_PI / 2.0;
    setup.trials = 100000;
    const auto first = measure_repeated(setup);
    const auto second = measure_repeated(setup);
    CHECK(first.pass_count == second.pass_count);
    CHECK(first.estimated_transmission > 0.49);
    CHECK(first.estimated_transmission < 0.51);

    setup.seed = 54321;
    const auto reseeded = measure_repeated(setup);
    CHECK(reseeded.pass_count != first.pass_count);

    setup.trials = 0;
    CHECK_THROWS_AS(measure_repeated(setup), std::invalid_argument);
}
