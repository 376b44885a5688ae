#include "edgent/ribbon.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>
#include <utility>

namespace edgent::ribbon {

using std::complex;

namespace {

constexpr complex<double> kI{0.0, 1.0};

void validate_config(const RibbonConfig& config) {
    if (config.width_sites < 10) {
        throw std::invalid_argument("RibbonConfig: width_sites must be >= 10");
    }
    if (!(config.lattice_constant > 0.0)) {
        throw std::invalid_argument("RibbonConfig: lattice_constant must be positive");
    }
}

// tau_y x sigma_x on the internal (spin, orbital) indices.
Eigen::Matrix4cd helicity_matrix() {
    Eigen::Matrix4cd sigma = Eigen::Matrix4cd::Zero();
    sigma(0, 3) = -kI;
    sigma(1, 2) = -kI;
    sigma(2, 1) = kI;
    sigma(3, 0) = kI;
    return sigma;
}

int edge_site_count(int width_sites) {
    return std::max(1, static_cast<int>(0.1 * width_sites + 1e-9));
}

// Rotates eigenvector columns of each listed block so the block diagonalizes
// op, then re-splits blocks wherever the op eigenvalues separate.
void refine_blocks(Eigen::MatrixXcd& vectors, std::vector<std::pair<int, int>>& blocks,
                   const Eigen::MatrixXcd& op, double split_tol) {
    std::vector<std::pair<int, int>> refined;
    for (const auto& [begin, size] : blocks) {
        if (size == 1) {
            refined.emplace_back(begin, size);
            continue;
        }
        Eigen::MatrixXcd sub = vectors.middleCols(begin, size);
        Eigen::MatrixXcd projected = sub.adjoint() * (op * sub);
        projected = 0.5 * (projected + projected.adjoint().eval());
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(projected);
        vectors.middleCols(begin, size) = sub * solver.eigenvectors();
        const Eigen::VectorXd values = solver.eigenvalues();
        int run_begin = 0;
        for (int i = 1; i < size; ++i) {
            if (values(i) - values(run_begin) > split_tol) {
                refined.emplace_back(begin + run_begin, i - run_begin);
                run_begin = i;
            }
        }
        refined.emplace_back(begin + run_begin, size - run_begin);
    }
    blocks = std::move(refined);
}

// Every ribbon level is (at least) doubly degenerate, so a dense solver
// returns an arbitrary basis per level. Rotating each numerically degenerate
// cluster to diagonalize helicity, then spin, then transverse position makes
// the per-state labels deterministic and physically meaningful.
void resolve_degenerate_clusters(const Eigen::VectorXd& values, Eigen::MatrixXcd& vectors,
                                 const std::vector<Eigen::MatrixXcd>& ops) {
    const int n = static_cast<int>(values.size());
    const double scale = std::max(1.0, values.cwiseAbs().maxCoeff());
    const double cluster_tol = 1e-9 * scale;
    int begin = 0;
    while (begin < n) {
        int end = begin + 1;
        while (end < n && values(end) - values(end - 1) < cluster_tol) ++end;
        if (end - begin > 1) {
            std::vector<std::pair<int, int>> blocks{{begin, end - begin}};
            for (const auto& op : ops) {
                refine_blocks(vectors, blocks, op, 1e-6);
            }
        }
        begin = end;
    }
}

}  // namespace

HermitianMatrix build_ribbon_hamiltonian(const RibbonConfig& config, double kx) {
    validate_config(config);
    const auto& p = config.params;
    const double a = config.lattice_constant;
    const int ny = config.width_sites;
    const int dim = 4 * ny;

    const double sin_term = p.v * std::sin(kx * a) / a;
    const double onsite_mass =
        p.m_v2 - (2.0 * p.B / (a * a)) * (1.0 - std::cos(kx * a)) - 2.0 * p.B / (a * a);
    const double hop_mass = p.B / (a * a);
    const double hop_v = p.v / (2.0 * a);

    // Internal orbital axes are rotated relative to hamiltonian_2d (sx -> -sz,
    // sz -> sx, sy fixed): per spin block -v*kx*sz +- v*ky*sy + M(k)*sx. The
    // spectrum is the same; in this basis the edge zero modes take the
    // (0, +-i, 1, 0) and (1, 0, 0, +-i) internal forms that tau_y x sigma_x
    // labels with +-1.
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (int j = 0; j < ny; ++j) {
        for (int s = 0; s < 2; ++s) {
            const double spin_sign = (s == 0) ? 1.0 : -1.0;
            const int base = 4 * j + 2 * s;
            h(base, base) = -sin_term;
            h(base + 1, base + 1) = sin_term;
            h(base, base + 1) = onsite_mass;
            h(base + 1, base) = onsite_mass;
            if (j + 1 < ny) {
                const int next = base + 4;
                // spin_sign * v * ky * sy with ky = -i d/dy, plus the
                // curvature hopping from -B * d^2/dy^2 on sx.
                h(base, next + 1) = hop_mass - spin_sign * hop_v;
                h(base + 1, next) = hop_mass + spin_sign * hop_v;
                h(next + 1, base) = hop_mass - spin_sign * hop_v;
                h(next, base + 1) = hop_mass + spin_sign * hop_v;
            }
        }
    }
    return HermitianMatrix(std::move(h));
}

Eigen::MatrixXcd ribbon_spin_block(const HermitianMatrix& h, int spin) {
    if (spin != 0 && spin != 1) {
        throw std::invalid_argument("ribbon_spin_block: spin must be 0 or 1");
    }
    const int dim = h.dim();
    if (dim % 4 != 0) {
        throw std::invalid_argument("ribbon_spin_block: dimension is not a ribbon layout");
    }
    const int ny = dim / 4;
    Eigen::MatrixXcd block(2 * ny, 2 * ny);
    auto full_index = [&](int i) { return 4 * (i / 2) + 2 * spin + (i % 2); };
    for (int i = 0; i < 2 * ny; ++i) {
        for (int j = 0; j < 2 * ny; ++j) {
            block(i, j) = h.matrix()(full_index(i), full_index(j));
        }
    }
    return block;
}

bool is_edge_state(const RibbonState& state, double bulk_gap) {
    return state.edge_weight > kEdgeWeightThreshold &&
           std::abs(state.energy) < kInGapFraction * bulk_gap;
}

RibbonSpectrum edge_spectrum(const RibbonConfig& config) {
    validate_config(config);
    const int ny = config.width_sites;
    const int dim = 4 * ny;
    const int n_edge = edge_site_count(ny);

    // Label operators, in resolution order.
    Eigen::MatrixXcd sigma_total = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd tau_z = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd position = Eigen::MatrixXcd::Zero(dim, dim);
    const Eigen::Matrix4cd sigma4 = helicity_matrix();
    for (int j = 0; j < ny; ++j) {
        sigma_total.block<4, 4>(4 * j, 4 * j) = sigma4;
        for (int c = 0; c < 4; ++c) {
            tau_z(4 * j + c, 4 * j + c) = (c < 2) ? 1.0 : -1.0;
            position(4 * j + c, 4 * j + c) = static_cast<double>(j);
        }
    }
    const std::vector<Eigen::MatrixXcd> ops{sigma_total, tau_z, position};

    RibbonSpectrum spectrum;
    spectrum.kx = phase::linspace(config.kx_grid);
    spectrum.bulk_gap =
        phase::bulk_gap({config.params.v, config.params.B, config.params.m_v2}).gap;
    spectrum.states.resize(spectrum.kx.size());

    for (std::size_t ik = 0; ik < spectrum.kx.size(); ++ik) {
        auto decomp = eigh(build_ribbon_hamiltonian(config, spectrum.kx[ik]));
        resolve_degenerate_clusters(decomp.eigenvalues, decomp.eigenvectors, ops);

        auto& column = spectrum.states[ik];
        column.reserve(dim);
        for (int band = 0; band < dim; ++band) {
            const auto psi = decomp.eigenvectors.col(band);
            double edge_weight = 0.0;
            double spin_up = 0.0;
            for (int j = 0; j < ny; ++j) {
                const double site_prob = psi.segment<4>(4 * j).squaredNorm();
                if (j < n_edge || j >= ny - n_edge) edge_weight += site_prob;
                spin_up += psi.segment<2>(4 * j).squaredNorm();
            }
            const double helicity = (psi.adjoint() * (sigma_total * psi))(0, 0).real();
            column.push_back(
                RibbonState{decomp.eigenvalues(band), edge_weight, spin_up, helicity});
        }
    }
    return spectrum;
}

int count_edge_states(const RibbonSpectrum& spectrum) {
    int count = 0;
    for (const auto& column : spectrum.states) {
        for (const auto& state : column) {
            if (is_edge_state(state, spectrum.bulk_gap)) ++count;
        }
    }
    return count;
}

HelicityResult helicity_apply(const states::Spinor4& state) {
    if (std::abs(state.amplitudes.squaredNorm() - 1.0) > 1e-12) {
        throw std::invalid_argument("helicity_apply: spinor is not normalized");
    }
    const Eigen::Matrix4cd sigma = helicity_matrix();
    const Eigen::Vector4cd mapped = sigma * state.amplitudes;
    const double expectation = (state.amplitudes.adjoint() * mapped)(0, 0).real();
    const double residual = (mapped - expectation * state.amplitudes).norm();
    return HelicityResult{expectation, residual};
}

ConductanceResult conductance(const model::Params2D& params, SpinFilter filter) {
    if (model::phase_classify(params.m_v2, params.B) != model::Phase::Topological) {
        return ConductanceResult{0.0, false};  // no edge channel
    }
    const double transmission = (filter == SpinFilter::Down) ? 0.0 : 1.0;
    return ConductanceResult{transmission, true};
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

double unit_uniform(std::uint64_t seed, std::uint64_t index) {
    const std::uint64_t z = splitmix64(seed ^ splitmix64(index));
    return static_cast<double>(z >> 11) * 0x1.0p-53;
}

}  // namespace

MeasurementRecord measure_repeated(const MeasurementSetup& setup) {
    if (setup.trials < 1) {
        throw std::invalid_argument("measure_repeated: trials must be >= 1");
    }
    const double c = std::cos(0.5 * setup.axis_polar);
    double pass_probability = c * c;
    // Snap the exactly aligned / anti-aligned filters.
    if (pass_probability < 1e-12) pass_probability = 0.0;
    if (pass_probability > 1.0 - 1e-12) pass_probability = 1.0;

    std::uint64_t passes = 0;
    for (std::uint64_t i = 0; i < setup.trials; ++i) {
        if (unit_uniform(setup.seed, i) < pass_probability) ++passes;
    }
    return MeasurementRecord{passes, setup.trials,
                             static_cast<double>(passes) / static_cast<double>(setup.trials)};
}

}  // namespace edgent::ribbon
