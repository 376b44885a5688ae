#include "edgent/io.hpp"

#include <cstdio>
#include <fstream>
#include <ostream>
#include <stdexcept>

namespace edgent::io {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

void write_sweep_csv(std::ostream& out, const phase::SweepResult& result) {
    out << result.parameter;
    for (const auto& series : result.series) {
        out << ',' << series.name;
    }
    out << '\n';
    for (std::size_t i = 0; i < result.grid.size(); ++i) {
        out << format_double(result.grid[i]);
        for (const auto& series : result.series) {
            out << ',' << format_double(series.values[i]);
        }
        out << '\n';
    }
}

void write_density_csv(std::ostream& out, std::span<const double> z,
                       std::span<const double> density) {
    if (z.size() != density.size()) {
        throw std::invalid_argument("write_density_csv: column length mismatch");
    }
    out << "z,density\n";
    for (std::size_t i = 0; i < z.size(); ++i) {
        out << format_double(z[i]) << ',' << format_double(density[i]) << '\n';
    }
}

void write_ribbon_csv(std::ostream& out, const ribbon::RibbonSpectrum& spectrum) {
    out << "kx,band,energy,edge_weight,spin_up_weight,helicity\n";
    for (std::size_t ik = 0; ik < spectrum.kx.size(); ++ik) {
        const std::string kx = format_double(spectrum.kx[ik]);
        for (std::size_t band = 0; band < spectrum.states[ik].size(); ++band) {
            const auto& s = spectrum.states[ik][band];
            out << kx << ',' << band << ',' << format_double(s.energy) << ','
                << format_double(s.edge_weight) << ',' << format_double(s.spin_up_weight)
                << ',' << format_double(s.helicity) << '\n';
        }
    }
}

ParamsDoc::ParamsDoc(nlohmann::json doc) : doc_(std::move(doc)) {
    if (!doc_.is_object()) {
        throw std::invalid_argument("ParamsDoc: parameter document must be a JSON object");
    }
}

ParamsDoc ParamsDoc::from_file(const std::string& path) {
    std::ifstream stream(path);
    if (!stream) {
        throw std::runtime_error("ParamsDoc: cannot open " + path);
    }
    nlohmann::json doc;
    stream >> doc;
    return ParamsDoc(std::move(doc));
}

double ParamsDoc::get_or(const char* key, double fallback) const {
    const auto it = doc_.find(key);
    if (it == doc_.end()) return fallback;
    if (!it->is_number()) {
        throw std::invalid_argument(std::string("ParamsDoc: parameter ") + key +
                                    " is not a number");
    }
    return it->get<double>();
}

double ParamsDoc::require(const char* key) const {
    if (!doc_.contains(key)) {
        throw std::invalid_argument(std::string("missing parameter ") + key);
    }
    return get_or(key, 0.0);
}

model::ReducedParamsZ ParamsDoc::reduced() const {
    model::ReducedParamsZ params;
    params.A = get_or("A", 0.0);
    params.M = require("M");
    params.B = require("B");
    return params;
}

model::ModelParams3D ParamsDoc::model3d() const {
    model::ModelParams3D params;
    params.A1 = get_or("A1", 0.0);
    params.A2 = get_or("A2", 0.0);
    params.B1 = get_or("B1", 0.0);
    params.B2 = get_or("B2", 0.0);
    params.C = get_or("C", 0.0);
    params.D1 = get_or("D1", 0.0);
    params.D2 = get_or("D2", 0.0);
    params.M = get_or("M", 0.0);
    return params;
}

model::Params2D ParamsDoc::model2d() const {
    model::Params2D params;
    params.v = get_or("v", 0.0);
    params.m_v2 = get_or("m_v2", 0.0);
    params.B = get_or("B", 0.0);
    return params;
}

}  // namespace edgent::io
