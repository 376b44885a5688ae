#pragma once

// Deterministic CSV/JSON emission and model-parameter ingestion.

#include "edgent/model.hpp"
#include "edgent/phase.hpp"
#include "edgent/ribbon.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <string>

namespace edgent::io {

// 17-significant-digit decimal rendering; round-trips any double.
std::string format_double(double value);

void write_sweep_csv(std::ostream& out, const phase::SweepResult& result);

// Header "z,density", one row per sample.
void write_density_csv(std::ostream& out, std::span<const double> z,
                       std::span<const double> density);

// Long format: "kx,band,energy,edge_weight,spin_up_weight,helicity".
void write_ribbon_csv(std::ostream& out, const ribbon::RibbonSpectrum& spectrum);

// JSON parameter document. Keys are exactly A1, A2, B1, B2, C, D1, D2, M for
// the 3-D model, A, B, M for the reduced kz-axis set, and v, m_v2, B for the
// 2-D model; absent keys default to zero except where noted.
class ParamsDoc {
public:
    explicit ParamsDoc(nlohmann::json doc);

    static ParamsDoc from_file(const std::string& path);

    // Absent M or B is an error here: the phase of a kz-axis computation is
    // undefined without them.
    model::ReducedParamsZ reduced() const;

    model::ModelParams3D model3d() const;
    model::Params2D model2d() const;

    const nlohmann::json& json() const { return doc_; }

private:
    double get_or(const char* key, double fallback) const;
    double require(const char* key) const;

    nlohmann::json doc_;
};

}  // namespace edgent::io
