#pragma once

// The 2-D two-block model on a finite-width ribbon: lattice Hamiltonian,
// edge-state spectrum with localization/spin/helicity labels, and the
// spin-filter conductance measurement.

#include "edgent/model.hpp"
#include "edgent/numerics.hpp"
#include "edgent/phase.hpp"
#include "edgent/states.hpp"

#include <cstdint>
#include <vector>

namespace edgent::ribbon {

// Transverse direction is discretized on width_sites sites with hard-wall
// ends; x stays a momentum label. Basis index = 4*site + 2*spin + orbital.
struct RibbonConfig {
    model::Params2D params{1.0, 0.5, 1.0};
    int width_sites = 60;
    double lattice_constant = 1.0;
    phase::SweepGrid kx_grid{-0.5, 0.5, 201};
};

// Lattice-regularized Bloch Hamiltonian at momentum kx: kx -> sin(kx a)/a,
// kx^2 -> 2(1 - cos(kx a))/a^2, transverse derivatives by central
// differences. Dimension 4 * width_sites. The internal orbital axes are
// unitarily rotated relative to hamiltonian_2d so that the edge zero modes
// carry the (0, +-i, 1, 0) / (1, 0, 0, +-i) internal spinors the helicity
// operator tau_y x sigma_x resolves; the spectrum is unaffected.
HermitianMatrix build_ribbon_hamiltonian(const RibbonConfig& config, double kx);

// One spin block (0 = up, 1 = down) of the full matrix, 2*width_sites square.
Eigen::MatrixXcd ribbon_spin_block(const HermitianMatrix& h, int spin);

struct RibbonState {
    double energy;
    double edge_weight;      // probability within 10% of either edge
    double spin_up_weight;   // probability in the spin-up block
    double helicity;         // <tau_y x sigma_x> of the state
};

struct RibbonSpectrum {
    std::vector<double> kx;
    std::vector<std::vector<RibbonState>> states;  // [kx index][band], energy ascending
    double bulk_gap;                               // continuum gap used for classification
};

// Classifier thresholds: in-gap means |E| below half the bulk gap,
// edge-localized means more than 0.6 probability in the edge regions.
constexpr double kEdgeWeightThreshold = 0.6;
constexpr double kInGapFraction = 0.5;

bool is_edge_state(const RibbonState& state, double bulk_gap);

// Full diagonalization over the kx grid. Every ribbon level is doubly
// degenerate (the two spin blocks are reflection partners), so eigenvectors
// inside numerically degenerate clusters are rotated to diagonalize, in
// order, helicity, then spin, then transverse position; the reported labels
// are then deterministic. Helicity eigenstates mix the two spin blocks and
// appear where branches cross (kx = 0); away from crossings edge states come
// out spin-pure with helicity near zero.
RibbonSpectrum edge_spectrum(const RibbonConfig& config);

int count_edge_states(const RibbonSpectrum& spectrum);

struct HelicityResult {
    double expectation;  // <Sigma> with Sigma = tau_y x sigma_x
    double residual;     // |Sigma psi - <Sigma> psi|
};

// Applies the helicity operator to a normalized internal 4-spinor.
HelicityResult helicity_apply(const states::Spinor4& state);

enum class SpinFilter { Up, Down, None };

struct ConductanceResult {
    double transmission;  // Landauer G in units of e^2/h
    bool edge_channel;    // false when the phase supports no edge channel
};

// Single forward-moving spin-up edge channel under forward bias: T = 1 for
// the up or open filter, T = 0 for the down filter, and 0 with
// edge_channel = false outside the topological phase.
ConductanceResult conductance(const model::Params2D& params, SpinFilter filter);

struct MeasurementSetup {
    double bias_voltage = 1.0;   // forward bias drives the +x edge channel
    double axis_polar = 0.0;     // filter axis angle from +z
    double axis_azimuth = 0.0;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
};

struct MeasurementRecord {
    std::uint64_t pass_count;
    std::uint64_t trials;
    double estimated_transmission;
};

// Repeated single-carrier filter measurements: the transmitted carrier is
// spin-up along +z, so a filter tilted by theta passes with p = cos^2(theta/2).
// Trials draw from per-trial counter-based substreams of the seed, so the
// outcome is bit-reproducible regardless of evaluation order.
MeasurementRecord measure_repeated(const MeasurementSetup& setup);

}  // namespace edgent::ribbon
