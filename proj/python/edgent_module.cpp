// Python bindings for the main library operations. Matrices cross the
// boundary as numpy arrays; Hermiticity is validated on the C++ side.

#include "edgent/entanglement.hpp"
#include "edgent/io.hpp"
#include "edgent/model.hpp"
#include "edgent/numerics.hpp"
#include "edgent/phase.hpp"
#include "edgent/ribbon.hpp"
#include "edgent/states.hpp"

#include <pybind11/eigen.h>
#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <utility>
#include <vector>

namespace py = pybind11;
using namespace edgent;

namespace {

std::vector<Sample> zip_samples(const std::vector<double>& x, const std::vector<double>& y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("x and y must have the same length");
    }
    std::vector<Sample> samples(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) samples[i] = {x[i], y[i]};
    return samples;
}

}  // namespace

PYBIND11_MODULE(edgent, m) {
    m.doc() = "four-band topological-insulator model: Hamiltonians, surface states, "
              "entanglement measures, phase sweeps and ribbon transport";

    // ---- numerics ----
    m.def(
        "eigh",
        [](const Eigen::MatrixXcd& matrix) {
            auto decomp = eigh(HermitianMatrix(matrix));
            return py::make_tuple(std::move(decomp.eigenvalues), std::move(decomp.eigenvectors));
        },
        py::arg("matrix"), "eigenvalues (ascending) and orthonormal eigenvectors");
    m.def(
        "bisect_root",
        [](const std::function<double(double)>& f, double lo, double hi, double tol) {
            return bisect_root(f, lo, hi, tol);
        },
        py::arg("f"), py::arg("lo"), py::arg("hi"), py::arg("tol") = 1e-12);
    m.def(
        "grid_extremum",
        [](const std::vector<double>& x, const std::vector<double>& y, const std::string& kind) {
            const auto samples = zip_samples(x, y);
            const auto best = grid_extremum(
                samples, kind == "min" ? ExtremumKind::Min : ExtremumKind::Max);
            return py::make_tuple(best.x, best.y);
        },
        py::arg("x"), py::arg("y"), py::arg("kind") = "max");
    m.def(
        "integrate_trapezoid",
        [](const std::vector<double>& x, const std::vector<double>& y) {
            return integrate_trapezoid(zip_samples(x, y));
        },
        py::arg("x"), py::arg("y"));

    // ---- model ----
    py::class_<model::ModelParams3D>(m, "ModelParams3D")
        .def(py::init([](double A1, double A2, double B1, double B2, double C, double D1,
                         double D2, double M) {
                 return model::ModelParams3D{A1, A2, B1, B2, C, D1, D2, M};
             }),
             py::arg("A1") = 0.0, py::arg("A2") = 0.0, py::arg("B1") = 0.0,
             py::arg("B2") = 0.0, py::arg("C") = 0.0, py::arg("D1") = 0.0,
             py::arg("D2") = 0.0, py::arg("M") = 0.0)
        .def_readwrite("A1", &model::ModelParams3D::A1)
        .def_readwrite("A2", &model::ModelParams3D::A2)
        .def_readwrite("B1", &model::ModelParams3D::B1)
        .def_readwrite("B2", &model::ModelParams3D::B2)
        .def_readwrite("C", &model::ModelParams3D::C)
        .def_readwrite("D1", &model::ModelParams3D::D1)
        .def_readwrite("D2", &model::ModelParams3D::D2)
        .def_readwrite("M", &model::ModelParams3D::M);

    py::class_<model::ReducedParamsZ>(m, "ReducedParamsZ")
        .def(py::init([](double A, double B, double M) {
                 return model::ReducedParamsZ{A, B, M};
             }),
             py::arg("A") = 0.0, py::arg("B") = 0.0, py::arg("M") = 0.0)
        .def_readwrite("A", &model::ReducedParamsZ::A)
        .def_readwrite("B", &model::ReducedParamsZ::B)
        .def_readwrite("M", &model::ReducedParamsZ::M);

    py::class_<model::Params2D>(m, "Params2D")
        .def(py::init([](double v, double m_v2, double B) {
                 return model::Params2D{v, m_v2, B};
             }),
             py::arg("v") = 0.0, py::arg("m_v2") = 0.0, py::arg("B") = 0.0)
        .def_readwrite("v", &model::Params2D::v)
        .def_readwrite("m_v2", &model::Params2D::m_v2)
        .def_readwrite("B", &model::Params2D::B);

    py::enum_<model::Phase>(m, "Phase")
        .value("Trivial", model::Phase::Trivial)
        .value("Critical", model::Phase::Critical)
        .value("Topological", model::Phase::Topological);

    m.def(
        "epsilon_k",
        [](const model::ModelParams3D& p, double kx, double ky, double kz) {
            return model::epsilon_k(p, {kx, ky, kz});
        },
        py::arg("params"), py::arg("kx"), py::arg("ky"), py::arg("kz"));
    m.def(
        "mass_k",
        [](const model::ModelParams3D& p, double kx, double ky, double kz) {
            return model::mass_k(p, {kx, ky, kz});
        },
        py::arg("params"), py::arg("kx"), py::arg("ky"), py::arg("kz"));
    m.def(
        "hamiltonian_3d",
        [](const model::ModelParams3D& p, double kx, double ky, double kz) {
            return Eigen::MatrixXcd(model::hamiltonian_3d(p, {kx, ky, kz}).matrix());
        },
        py::arg("params"), py::arg("kx"), py::arg("ky"), py::arg("kz"));
    m.def("dispersion_z", &model::dispersion_z, py::arg("params"), py::arg("kz"));
    m.def(
        "hamiltonian_2d",
        [](const model::Params2D& p, double kx, double ky) {
            return Eigen::MatrixXcd(model::hamiltonian_2d(p, kx, ky).matrix());
        },
        py::arg("params"), py::arg("kx"), py::arg("ky"));
    m.def("phase_classify", &model::phase_classify, py::arg("M"), py::arg("B"));

    // ---- states ----
    py::enum_<states::Branch>(m, "Branch")
        .value("Minus", states::Branch::Minus)
        .value("Plus", states::Branch::Plus);

    py::class_<states::Spinor4>(m, "Spinor4")
        .def(py::init([](const Eigen::Vector4cd& amplitudes, bool normalized) {
                 return states::Spinor4{amplitudes, normalized};
             }),
             py::arg("amplitudes"), py::arg("normalized") = false)
        .def_readwrite("amplitudes", &states::Spinor4::amplitudes)
        .def_readwrite("normalized", &states::Spinor4::normalized);

    py::class_<states::BulkSpinor>(m, "BulkSpinor")
        .def_readonly("state", &states::BulkSpinor::state)
        .def_readonly("amplitude_ratio", &states::BulkSpinor::amplitude_ratio)
        .def_readonly("energy", &states::BulkSpinor::energy)
        .def_readonly("pair", &states::BulkSpinor::pair);

    m.def("bulk_spinor", &states::bulk_spinor, py::arg("params"), py::arg("kz"),
          py::arg("branch"), py::arg("pair") = 1);

    py::class_<states::SurfaceState>(m, "SurfaceState")
        .def_readonly("lambda_plus", &states::SurfaceState::lambda_plus)
        .def_readonly("lambda_minus", &states::SurfaceState::lambda_minus)
        .def_readonly("normalization", &states::SurfaceState::normalization)
        .def_readonly("spinor", &states::SurfaceState::spinor)
        .def_readonly("branch", &states::SurfaceState::branch)
        .def_readonly("spinor_sign", &states::SurfaceState::spinor_sign);

    py::class_<states::SurfacePeak>(m, "SurfacePeak")
        .def_readonly("z", &states::SurfacePeak::z)
        .def_readonly("density", &states::SurfacePeak::density);

    m.def("surface_state", &states::surface_state, py::arg("params"), py::arg("branch") = 1,
          py::arg("spinor_sign") = 1);
    m.def("surface_density", &states::surface_density, py::arg("state"), py::arg("z"));
    m.def("surface_peak", &states::surface_peak, py::arg("state"));

    // ---- entanglement ----
    py::enum_<entanglement::Subsystem>(m, "Subsystem")
        .value("Spin", entanglement::Subsystem::Spin)
        .value("Orbital", entanglement::Subsystem::Orbital);

    py::class_<entanglement::TwoQubitPure>(m, "TwoQubitPure")
        .def(py::init<Eigen::Vector4cd>(), py::arg("amplitudes"))
        .def_property_readonly("amplitudes", &entanglement::TwoQubitPure::amplitudes);

    py::class_<entanglement::ReducedDensity>(m, "ReducedDensity")
        .def_property_readonly("matrix", &entanglement::ReducedDensity::matrix)
        .def("eigenvalues", &entanglement::ReducedDensity::eigenvalues);

    m.def("from_spinor", &entanglement::from_spinor, py::arg("spinor"));
    m.def("concurrence", &entanglement::concurrence, py::arg("state"));
    m.def("concurrence_analytic", &entanglement::concurrence_analytic, py::arg("a"));
    m.def("reduced_density", &entanglement::reduced_density, py::arg("state"), py::arg("keep"));
    m.def("entropy", &entanglement::entropy, py::arg("state"));
    m.def("is_bell", &entanglement::is_bell, py::arg("state"), py::arg("tol") = 1e-9);

    // ---- phase ----
    py::class_<phase::SweepGrid>(m, "SweepGrid")
        .def(py::init([](double start, double stop, int count) {
                 return phase::SweepGrid{start, stop, count};
             }),
             py::arg("start"), py::arg("stop"), py::arg("count"))
        .def_readwrite("start", &phase::SweepGrid::start)
        .def_readwrite("stop", &phase::SweepGrid::stop)
        .def_readwrite("count", &phase::SweepGrid::count);

    m.def("linspace", &phase::linspace, py::arg("grid"));

    py::class_<phase::SweepResult>(m, "SweepResult")
        .def_readonly("parameter", &phase::SweepResult::parameter)
        .def_readonly("grid", &phase::SweepResult::grid)
        .def_property_readonly("series",
                               [](const phase::SweepResult& r) {
                                   py::dict out;
                                   for (const auto& s : r.series) {
                                       out[py::str(s.name)] = s.values;
                                   }
                                   return out;
                               })
        .def_property_readonly("metadata_json", [](const phase::SweepResult& r) {
            return r.metadata.dump();
        });

    py::class_<phase::BulkGap>(m, "BulkGap")
        .def_readonly("gap", &phase::BulkGap::gap)
        .def_readonly("k_at_min", &phase::BulkGap::k_at_min);

    py::class_<phase::CriticalB>(m, "CriticalB")
        .def_readonly("value", &phase::CriticalB::value)
        .def_readonly("physical", &phase::CriticalB::physical);

    m.def("band_structure_z", &phase::band_structure_z, py::arg("params"), py::arg("grid"),
          py::arg("self_check") = false);
    m.def("bulk_gap", &phase::bulk_gap, py::arg("params"));
    m.def("concurrence_vs_b", &phase::concurrence_vs_b, py::arg("M"), py::arg("A"),
          py::arg("kz"), py::arg("grid"));
    m.def("entropy_vs_k", &phase::entropy_vs_k, py::arg("params"), py::arg("grid"));
    m.def("critical_b", &phase::critical_b, py::arg("M"), py::arg("kz"),
          py::arg("self_check") = false);

    // ---- ribbon ----
    py::class_<ribbon::RibbonConfig>(m, "RibbonConfig")
        .def(py::init([](const model::Params2D& params, int width_sites, double lattice_constant,
                         const phase::SweepGrid& kx_grid) {
                 return ribbon::RibbonConfig{params, width_sites, lattice_constant, kx_grid};
             }),
             py::arg("params") = model::Params2D{1.0, 0.5, 1.0}, py::arg("width_sites") = 60,
             py::arg("lattice_constant") = 1.0,
             py::arg("kx_grid") = phase::SweepGrid{-0.5, 0.5, 201})
        .def_readwrite("params", &ribbon::RibbonConfig::params)
        .def_readwrite("width_sites", &ribbon::RibbonConfig::width_sites)
        .def_readwrite("lattice_constant", &ribbon::RibbonConfig::lattice_constant)
        .def_readwrite("kx_grid", &ribbon::RibbonConfig::kx_grid);

    py::class_<ribbon::RibbonState>(m, "RibbonState")
        .def_readonly("energy", &ribbon::RibbonState::energy)
        .def_readonly("edge_weight", &ribbon::RibbonState::edge_weight)
        .def_readonly("spin_up_weight", &ribbon::RibbonState::spin_up_weight)
        .def_readonly("helicity", &ribbon::RibbonState::helicity);

    py::class_<ribbon::RibbonSpectrum>(m, "RibbonSpectrum")
        .def_readonly("kx", &ribbon::RibbonSpectrum::kx)
        .def_readonly("states", &ribbon::RibbonSpectrum::states)
        .def_readonly("bulk_gap", &ribbon::RibbonSpectrum::bulk_gap);

    m.def(
        "build_ribbon_hamiltonian",
        [](const ribbon::RibbonConfig& config, double kx) {
            return Eigen::MatrixXcd(ribbon::build_ribbon_hamiltonian(config, kx).matrix());
        },
        py::arg("config"), py::arg("kx"));
    m.def("edge_spectrum", &ribbon::edge_spectrum, py::arg("config"));
    m.def("count_edge_states", &ribbon::count_edge_states, py::arg("spectrum"));
    m.def("is_edge_state", &ribbon::is_edge_state, py::arg("state"), py::arg("bulk_gap"));

    py::class_<ribbon::HelicityResult>(m, "HelicityResult")
        .def_readonly("expectation", &ribbon::HelicityResult::expectation)
        .def_readonly("residual", &ribbon::HelicityResult::residual);

    m.def("helicity_apply", &ribbon::helicity_apply, py::arg("state"));

    py::enum_<ribbon::SpinFilter>(m, "SpinFilter")
        .value("Up", ribbon::SpinFilter::Up)
        .value("Down", ribbon::SpinFilter::Down)
        .value("None_", ribbon::SpinFilter::None);

    py::class_<ribbon::ConductanceResult>(m, "ConductanceResult")
        .def_readonly("transmission", &ribbon::ConductanceResult::transmission)
        .def_readonly("edge_channel", &ribbon::ConductanceResult::edge_channel);

    m.def("conductance", &ribbon::conductance, py::arg("params"), py::arg("filter"));

    py::class_<ribbon::MeasurementSetup>(m, "MeasurementSetup")
        .def(py::init([](double bias_voltage, double axis_polar, double axis_azimuth,
                         std::uint64_t trials, std::uint64_t seed) {
                 return ribbon::MeasurementSetup{bias_voltage, axis_polar, axis_azimuth, trials,
                                                 seed};
             }),
             py::arg("bias_voltage") = 1.0, py::arg("axis_polar") = 0.0,
             py::arg("axis_azimuth") = 0.0, py::arg("trials") = 1, py::arg("seed") = 0)
        .def_readwrite("bias_voltage", &ribbon::MeasurementSetup::bias_voltage)
        .def_readwrite("axis_polar", &ribbon::MeasurementSetup::axis_polar)
        .def_readwrite("axis_azimuth", &ribbon::MeasurementSetup::axis_azimuth)
        .def_readwrite("trials", &ribbon::MeasurementSetup::trials)
        .def_readwrite("seed", &ribbon::MeasurementSetup::seed);

    py::class_<ribbon::MeasurementRecord>(m, "MeasurementRecord")
        .def_readonly("pass_count", &ribbon::MeasurementRecord::pass_count)
        .def_readonly("trials", &ribbon::MeasurementRecord::trials)
        .def_readonly("estimated_transmission",
                      &ribbon::MeasurementRecord::estimated_transmission);

    m.def("measure_repeated", &ribbon::measure_repeated, py::arg("setup"));
}
