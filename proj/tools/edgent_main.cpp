// Command-line front end: bands | surface | sweep | ribbon subcommands with
// deterministic CSV output and JSON metadata sidecars.

#include "edgent/io.hpp"
#include "edgent/model.hpp"
#include "edgent/numerics.hpp"
#include "edgent/phase.hpp"
#include "edgent/ribbon.hpp"
#include "edgent/states.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace {

using nlohmann::json;
namespace fs = std::filesystem;

struct Preset {
    std::string command;
    json params;
    std::optional<edgent::phase::SweepGrid> grid;
    std::string sweep_kind;
    double kz = 0.0;
};

const std::map<std::string, Preset>& presets() {
    static const std::map<std::string, Preset> table = {
        {"fig2a", {"surface", {{"A", 4.0}, {"M", 2.0}, {"B", 0.1}}, std::nullopt, "", 0.0}},
        {"fig2b", {"surface", {{"A", 4.0}, {"M", 2.0}, {"B", 1.0}}, std::nullopt, "", 0.0}},
        {"fig3-left",
         {"bands", {{"A", 0.2}, {"B", 1.0}, {"M", -1.3}}, edgent::phase::SweepGrid{-3.0, 3.0, 601}, "", 0.0}},
        {"fig3-center",
         {"bands", {{"A", 0.2}, {"B", 1.0}, {"M", 0.0}}, edgent::phase::SweepGrid{-3.0, 3.0, 601}, "", 0.0}},
        {"fig3-right",
         {"bands", {{"A", 0.2}, {"B", 1.0}, {"M", 1.3}}, edgent::phase::SweepGrid{-3.0, 3.0, 601}, "", 0.0}},
        {"fig4-upper",
         {"sweep", {{"A", 4.0}, {"M", 2.0}}, edgent::phase::SweepGrid{0.01, 1.5, 300},
          "concurrence-vs-B", 2.0}},
        {"fig4-lower",
         {"sweep", {{"A", 4.0}, {"B", 0.1}, {"M", 2.0}}, edgent::phase::SweepGrid{-8.0, 8.0, 801},
          "entropy-vs-k", 0.0}},
    };
    return table;
}

// Parameter document: preset values first, then the --params file on top.
json merged_params(const std::string& preset_name, const std::string& params_path,
                   const std::string& command) {
    json doc = json::object();
    if (!preset_name.empty()) {
        const auto it = presets().find(preset_name);
        if (it == presets().end()) {
            throw std::invalid_argument("unknown preset: " + preset_name);
        }
        if (it->second.command != command) {
            throw std::invalid_argument("preset " + preset_name + " belongs to subcommand " +
                                        it->second.command);
        }
        doc = it->second.params;
    }
    if (!params_path.empty()) {
        const json file_doc = edgent::io::ParamsDoc::from_file(params_path).json();
        for (const auto& [key, value] : file_doc.items()) {
            doc[key] = value;
        }
    }
    return doc;
}

double require_key(const json& doc, const char* key) {
    if (!doc.contains(key)) {
        throw std::invalid_argument(std::string("missing parameter ") + key);
    }
    return doc.at(key).get<double>();
}

void write_text_file(const fs::path& path, const std::string& text) {
    std::ofstream stream(path, std::ios::binary);
    if (!stream) {
        throw std::runtime_error("cannot open output file " + path.string());
    }
    stream << text;
}

void write_json_file(const fs::path& path, const json& doc) {
    write_text_file(path, doc.dump(2) + "\n");
}

fs::path sidecar_path(const fs::path& out, const char* extension) {
    fs::path path = out;
    path.replace_extension(extension);
    return path;
}

struct CommonOpts {
    std::string params_path;
    std::string preset;
    std::string out;
    bool self_check = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--params", opts.params_path, "JSON parameter document");
    cmd->add_option("--preset", opts.preset, "named figure-reproduction preset");
    cmd->add_option("--out", opts.out, "output CSV path")->required();
    cmd->add_flag("--self-check", opts.self_check,
                  "cross-validate analytic results against the numeric route");
}

edgent::phase::SweepGrid preset_grid_or(const std::string& preset_name,
                                        const edgent::phase::SweepGrid& fallback) {
    if (!preset_name.empty()) {
        const auto it = presets().find(preset_name);
        if (it != presets().end() && it->second.grid) return *it->second.grid;
    }
    return fallback;
}

int run_bands(const CommonOpts& opts, const edgent::phase::SweepGrid& grid) {
    const json doc = merged_params(opts.preset, opts.params_path, "bands");
    const edgent::model::ReducedParamsZ params{doc.value("A", 0.0), require_key(doc, "B"),
                                               require_key(doc, "M")};
    auto result = edgent::phase::band_structure_z(params, grid, opts.self_check);

    std::ostringstream csv;
    edgent::io::write_sweep_csv(csv, result);
    write_text_file(opts.out, csv.str());

    result.metadata["subcommand"] = "bands";
    result.metadata["grid"] = {{"start", grid.start}, {"stop", grid.stop}, {"count", grid.count}};
    write_json_file(sidecar_path(opts.out, ".meta.json"), result.metadata);
    return 0;
}

int run_surface(const CommonOpts& opts, int branch, int sign, double z_max, int z_count) {
    const json doc = merged_params(opts.preset, opts.params_path, "surface");
    const edgent::model::ReducedParamsZ params{doc.value("A", 0.0), require_key(doc, "B"),
                                               require_key(doc, "M")};
    const auto state = edgent::states::surface_state(params, branch, sign);
    const auto peak = edgent::states::surface_peak(state);
    if (z_max <= 0.0) z_max = 10.0 / state.lambda_minus;

    std::vector<double> z = edgent::phase::linspace({0.0, z_max, z_count});
    std::vector<double> density(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) {
        density[i] = edgent::states::surface_density(state, z[i]);
    }

    if (opts.self_check) {
        // Fine-grid maximum must agree with the analytic stationary point.
        const double step = 1e-4;
        const double span = std::min(z_max, 2.0 * peak.z + 1.0);
        std::vector<edgent::Sample> samples;
        samples.reserve(static_cast<std::size_t>(span / step) + 2);
        for (double x = 0.0; x <= span; x += step) {
            samples.push_back({x, edgent::states::surface_density(state, x)});
        }
        const auto found = edgent::grid_extremum(samples, edgent::ExtremumKind::Max);
        if (std::abs(found.x - peak.z) > step || std::abs(found.y - peak.density) > 1e-6) {
            throw std::runtime_error("surface: self-check mismatch at the density peak");
        }
    }

    std::ostringstream csv;
    edgent::io::write_density_csv(csv, z, density);
    write_text_file(opts.out, csv.str());

    json meta;
    meta["subcommand"] = "surface";
    meta["lambda_plus"] = state.lambda_plus;
    meta["lambda_minus"] = state.lambda_minus;
    meta["n_s"] = state.normalization;
    meta["z_peak"] = peak.z;
    meta["density_peak"] = peak.density;
    meta["branch"] = state.branch;
    meta["spinor_sign"] = state.spinor_sign;
    meta["params"] = {{"A", params.A}, {"B", params.B}, {"M", params.M}};
    meta["grid"] = {{"start", 0.0}, {"stop", z_max}, {"count", z_count}};
    meta["self_check"] = opts.self_check;
    write_json_file(sidecar_path(opts.out, ".meta.json"), meta);
    return 0;
}

int run_sweep(const CommonOpts& opts, std::string kind, double kz_flag, bool kz_given,
              const edgent::phase::SweepGrid& grid, bool compare_sign) {
    const json doc = merged_params(opts.preset, opts.params_path, "sweep");
    if (kind.empty() && !opts.preset.empty()) {
        kind = presets().at(opts.preset).sweep_kind;
    }
    if (kind.empty()) {
        throw std::invalid_argument("sweep: --kind is required (concurrence-vs-B or entropy-vs-k)");
    }

    edgent::phase::SweepResult result;
    if (kind == "concurrence-vs-B") {
        const double M = require_key(doc, "M");
        const double A = require_key(doc, "A");
        double kz = kz_flag;
        if (!kz_given && !opts.preset.empty()) kz = presets().at(opts.preset).kz;
        if (kz == 0.0) {
            throw std::invalid_argument("sweep: concurrence-vs-B requires a nonzero --kz");
        }
        result = edgent::phase::concurrence_vs_b(M, A, kz, grid);
        if (opts.self_check) {
            edgent::phase::critical_b(M, kz, true);  // throws on mismatch
        }
        if (compare_sign) {
            auto flipped = edgent::phase::concurrence_vs_b(-M, A, kz, grid);
            for (auto& series : flipped.series) {
                series.name += "_mneg";
                result.series.push_back(std::move(series));
            }
            result.metadata["B_c_mneg"] = flipped.metadata["B_c"];
        }
    } else if (kind == "entropy-vs-k") {
        if (compare_sign) {
            throw std::invalid_argument("sweep: --compare-sign applies to concurrence-vs-B only");
        }
        const edgent::model::ReducedParamsZ params{doc.value("A", 0.0), require_key(doc, "B"),
                                                   require_key(doc, "M")};
        result = edgent::phase::entropy_vs_k(params, grid);
        if (opts.self_check && params.M / params.B > 0.0) {
            // Sampled maxima must straddle the analytic +-sqrt(M/B).
            const auto& values = result.series[0].values;
            const auto peak = std::max_element(values.begin(), values.end());
            const double at = result.grid[peak - values.begin()];
            const double step = (grid.stop - grid.start) / (grid.count - 1);
            if (std::abs(std::abs(at) - std::sqrt(params.M / params.B)) > step) {
                throw std::runtime_error("sweep: self-check entropy maximum misplaced");
            }
        }
    } else {
        throw std::invalid_argument("sweep: unknown kind " + kind);
    }

    std::ostringstream csv;
    edgent::io::write_sweep_csv(csv, result);
    write_text_file(opts.out, csv.str());

    result.metadata["subcommand"] = "sweep";
    result.metadata["kind"] = kind;
    result.metadata["grid"] = {{"start", grid.start}, {"stop", grid.stop}, {"count", grid.count}};
    result.metadata["self_check"] = opts.self_check;
    write_json_file(sidecar_path(opts.out, ".meta.json"), result.metadata);
    return 0;
}

struct RibbonOpts {
    int width = 60;
    double spacing = 1.0;
    double kx_min = -0.5;
    double kx_max = 0.5;
    int kx_count = 201;
    bool measure = false;
    std::string axis = "up";
    double axis_polar = 0.0;
    double axis_azimuth = 0.0;
    bool axis_angles_given = false;
    std::uint64_t trials = 10000;
    std::uint64_t seed = 0;
    double bias = 1.0;
};

std::pair<double, double> named_axis(const std::string& axis) {
    const double pi = std::acos(-1.0);
    if (axis == "up") return {0.0, 0.0};
    if (axis == "down") return {pi, 0.0};
    if (axis == "x") return {0.5 * pi, 0.0};
    if (axis == "y") return {0.5 * pi, 0.5 * pi};
    throw std::invalid_argument("ribbon: unknown filter axis " + axis);
}

int run_ribbon(const CommonOpts& opts, const RibbonOpts& ropts) {
    const json doc = merged_params(opts.preset, opts.params_path, "ribbon");
    edgent::ribbon::RibbonConfig config;
    config.params.v = doc.value("v", 1.0);
    config.params.m_v2 = doc.value("m_v2", 0.5);
    config.params.B = doc.value("B", 1.0);
    config.width_sites = ropts.width;
    config.lattice_constant = ropts.spacing;
    config.kx_grid = {ropts.kx_min, ropts.kx_max, ropts.kx_count};

    const auto spectrum = edgent::ribbon::edge_spectrum(config);

    if (opts.self_check) {
        // The two spin blocks are reflection partners: identical spectra.
        for (double kx : {ropts.kx_min, 0.5 * (ropts.kx_min + ropts.kx_max), ropts.kx_max}) {
            const auto h = edgent::ribbon::build_ribbon_hamiltonian(config, kx);
            const auto up = edgent::eigh(
                edgent::HermitianMatrix(edgent::ribbon::ribbon_spin_block(h, 0)));
            const auto down = edgent::eigh(
                edgent::HermitianMatrix(edgent::ribbon::ribbon_spin_block(h, 1)));
            if ((up.eigenvalues - down.eigenvalues).cwiseAbs().maxCoeff() > 1e-9) {
                throw std::runtime_error("ribbon: self-check spin-block spectra mismatch");
            }
        }
    }

    std::ostringstream csv;
    edgent::io::write_ribbon_csv(csv, spectrum);
    write_text_file(opts.out, csv.str());

    const auto phase = edgent::model::phase_classify(config.params.m_v2, config.params.B);
    json meta;
    meta["subcommand"] = "ribbon";
    meta["params"] = {{"v", config.params.v}, {"m_v2", config.params.m_v2}, {"B", config.params.B}};
    meta["width_sites"] = config.width_sites;
    meta["lattice_constant"] = config.lattice_constant;
    meta["grid"] = {{"start", ropts.kx_min}, {"stop", ropts.kx_max}, {"count", ropts.kx_count}};
    meta["bulk_gap"] = spectrum.bulk_gap;
    meta["edge_state_count"] = edgent::ribbon::count_edge_states(spectrum);
    meta["phase"] = edgent::model::to_string(phase);
    for (auto [name, filter] : {std::pair{"up", edgent::ribbon::SpinFilter::Up},
                                {"down", edgent::ribbon::SpinFilter::Down},
                                {"none", edgent::ribbon::SpinFilter::None}}) {
        const auto g = edgent::ribbon::conductance(config.params, filter);
        meta[std::string("conductance_") + name] = g.transmission;
        meta["edge_channel"] = g.edge_channel;
    }
    meta["self_check"] = opts.self_check;
    write_json_file(sidecar_path(opts.out, ".meta.json"), meta);

    if (ropts.measure) {
        if (phase != edgent::model::Phase::Topological) {
            throw std::runtime_error("ribbon: no edge channel outside the topological phase");
        }
        edgent::ribbon::MeasurementSetup setup;
        setup.bias_voltage = ropts.bias;
        if (ropts.axis_angles_given) {
            setup.axis_polar = ropts.axis_polar;
            setup.axis_azimuth = ropts.axis_azimuth;
        } else {
            std::tie(setup.axis_polar, setup.axis_azimuth) = named_axis(ropts.axis);
        }
        setup.trials = ropts.trials;
        setup.seed = ropts.seed;
        const auto record = edgent::ribbon::measure_repeated(setup);
        json measurement;
        measurement["seed"] = setup.seed;
        measurement["trials"] = record.trials;
        measurement["axis_polar"] = setup.axis_polar;
        measurement["axis_azimuth"] = setup.axis_azimuth;
        measurement["pass_count"] = record.pass_count;
        measurement["estimated_T"] = record.estimated_transmission;
        write_json_file(sidecar_path(opts.out, ".measure.json"), measurement);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"four-band topological-insulator model: bands, surface states, "
                 "entanglement sweeps and ribbon transport"};
    app.require_subcommand(1);

    CommonOpts bands_opts, surface_opts, sweep_opts, ribbon_opts;

    auto* bands = app.add_subcommand("bands", "kz-axis band structure CSV");
    add_common(bands, bands_opts);
    double kz_min = -3.0, kz_max = 3.0;
    int kz_count = 601;
    bands->add_option("--kz-min", kz_min, "grid start");
    bands->add_option("--kz-max", kz_max, "grid stop");
    bands->add_option("--kz-count", kz_count, "grid points");

    auto* surface = app.add_subcommand("surface", "surface-state density profile CSV");
    add_common(surface, surface_opts);
    int branch = 1, sign = 1;
    double z_max = 0.0;
    int z_count = 4001;
    surface->add_option("--branch", branch, "surface spinor branch (1 or 2)");
    surface->add_option("--sign", sign, "sign of the imaginary spinor entry (+1 or -1)");
    surface->add_option("--z-max", z_max, "profile extent (default 10 / lambda_minus)");
    surface->add_option("--z-count", z_count, "profile points");

    auto* sweep = app.add_subcommand("sweep", "concurrence-vs-B or entropy-vs-k CSV");
    add_common(sweep, sweep_opts);
    std::string kind;
    double sweep_kz = 0.0;
    double sweep_start = 0.0, sweep_stop = 0.0;
    int sweep_count = 0;
    bool compare_sign = false;
    sweep->add_option("--kind", kind, "concurrence-vs-B | entropy-vs-k");
    auto* kz_opt = sweep->add_option("--kz", sweep_kz, "fixed kz for the concurrence sweep");
    auto* start_opt = sweep->add_option("--start", sweep_start, "grid start");
    auto* stop_opt = sweep->add_option("--stop", sweep_stop, "grid stop");
    auto* count_opt = sweep->add_option("--count", sweep_count, "grid points");
    sweep->add_flag("--compare-sign", compare_sign, "also emit the sign-flipped-M series");

    auto* ribbon = app.add_subcommand("ribbon", "edge-state spectrum and measurement");
    add_common(ribbon, ribbon_opts);
    RibbonOpts ropts;
    ribbon->add_option("--width", ropts.width, "transverse sites");
    ribbon->add_option("--spacing", ropts.spacing, "lattice constant");
    ribbon->add_option("--kx-min", ropts.kx_min, "grid start");
    ribbon->add_option("--kx-max", ropts.kx_max, "grid stop");
    ribbon->add_option("--kx-count", ropts.kx_count, "grid points");
    ribbon->add_flag("--measure", ropts.measure, "run the spin-filter measurement");
    ribbon->add_option("--axis", ropts.axis, "filter axis: up | down | x | y");
    auto* polar_opt = ribbon->add_option("--axis-polar", ropts.axis_polar, "filter polar angle");
    ribbon->add_option("--axis-azimuth", ropts.axis_azimuth, "filter azimuthal angle");
    ribbon->add_option("--trials", ropts.trials, "measurement repetitions");
    ribbon->add_option("--seed", ropts.seed, "measurement seed");
    ribbon->add_option("--bias", ropts.bias, "bias voltage");

    CLI11_PARSE(app, argc, argv);

    try {
        if (bands->parsed()) {
            edgent::phase::SweepGrid grid =
                preset_grid_or(bands_opts.preset, {kz_min, kz_max, kz_count});
            if (bands->count("--kz-min") || bands->count("--kz-max") ||
                bands->count("--kz-count")) {
                grid = {kz_min, kz_max, kz_count};
            }
            return run_bands(bands_opts, grid);
        }
        if (surface->parsed()) {
            return run_surface(surface_opts, branch, sign, z_max, z_count);
        }
        if (sweep->parsed()) {
            edgent::phase::SweepGrid fallback{0.01, 1.5, 300};
            if (kind == "entropy-vs-k") fallback = {-8.0, 8.0, 801};
            edgent::phase::SweepGrid grid = preset_grid_or(sweep_opts.preset, fallback);
            if (start_opt->count()) grid.start = sweep_start;
            if (stop_opt->count()) grid.stop = sweep_stop;
            if (count_opt->count()) grid.count = sweep_count;
            return run_sweep(sweep_opts, kind, sweep_kz, kz_opt->count() > 0, grid, compare_sign);
        }
        if (ribbon->parsed()) {
            ropts.axis_angles_given = polar_opt->count() > 0;
            return run_ribbon(ribbon_opts, ropts);
        }
    } catch (const std::exception& err) {
        std::cerr << "error: " << err.what() << '\n';
        return 2;
    }
    return 0;
}
