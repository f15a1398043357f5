#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "cylshell/analysis.hpp"
#include "cylshell/cli_io.hpp"
#include "cylshell/crack_spring.hpp"
#include "cylshell/model.hpp"

namespace py = pybind11;
using namespace cylshell;

namespace {

SolveOptions make_options(const std::string& bc, int gauss_points, double penalty_alpha) {
    SolveOptions options;
    options.bc = bc_from_string(bc);
    options.assembly.gauss_points = gauss_points;
    options.assembly.penalty_alpha = penalty_alpha;
    return options;
}

ShellModel make_model(const ShellGeometry& geometry, const Material& material,
                      const std::optional<CrackSpec>& crack) {
    ShellModel model{geometry, material, crack};
    model.validate();
    return model;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Buckling and vibration of circumferentially cracked cylindrical shells "
              "(semi-analytical ring-harmonic finite elements)";

    py::class_<ShellGeometry>(m, "Geometry")
        .def(py::init([](double R, double h, double L) {
                 ShellGeometry g{R, h, L};
                 g.validate();
                 return g;
             }),
             py::arg("R"), py::arg("h"), py::arg("L"))
        .def_readonly("R", &ShellGeometry::R)
        .def_readonly("h", &ShellGeometry::h)
        .def_readonly("L", &ShellGeometry::L)
        .def("__repr__", [](const ShellGeometry& g) {
            return "Geometry(R=" + std::to_string(g.R) + ", h=" + std::to_string(g.h) +
                   ", L=" + std::to_string(g.L) + ")";
        });

    py::class_<Material>(m, "Material")
        .def(py::init([](double E, double nu, double rho) {
                 Material mat{E, nu, rho};
                 mat.validate();
                 return mat;
             }),
             py::arg("E"), py::arg("nu"), py::arg("rho") = 7850.0)
        .def_readonly("E", &Material::E)
        .def_readonly("nu", &Material::nu)
        .def_readonly("rho", &Material::rho);

    py::class_<CrackSpec>(m, "Crack")
        .def(py::init([](double a, double x_c) {
                 return CrackSpec{a, x_c};
             }),
             py::arg("a"), py::arg("x_c"))
        .def_readonly("a", &CrackSpec::a)
        .def_readonly("x_c", &CrackSpec::x_c);

    py::class_<BucklingPoint>(m, "BucklingPoint")
        .def_readonly("n", &BucklingPoint::n)
        .def_readonly("load_factor", &BucklingPoint::lambda)
        .def_readonly("normalized", &BucklingPoint::normalized);

    py::class_<BucklingSweepResult>(m, "BucklingResult")
        .def_readonly("rows", &BucklingSweepResult::rows)
        .def_readonly("minimum", &BucklingSweepResult::minimum)
        .def_property_readonly("errors", [](const BucklingSweepResult& r) {
            return r.errors;
        });

    py::class_<FrequencyRow>(m, "FrequencyRow")
        .def_readonly("n", &FrequencyRow::n)
        .def_readonly("mode_index", &FrequencyRow::mode_index)
        .def_readonly("omega", &FrequencyRow::omega)
        .def_readonly("Omega", &FrequencyRow::Omega);

    py::class_<PositionSweepRow>(m, "PositionRow")
        .def_readonly("xc_over_L", &PositionSweepRow::xc_over_L)
        .def_readonly("normalized", &PositionSweepRow::normalized)
        .def_readonly("n_at_min", &PositionSweepRow::n_at_min);

    py::class_<DepthSweepRow>(m, "DepthRow")
        .def_readonly("a_over_h", &DepthSweepRow::a_over_h)
        .def_readonly("normalized", &DepthSweepRow::normalized)
        .def_readonly("ratio", &DepthSweepRow::ratio)
        .def_readonly("n_at_min", &DepthSweepRow::n_at_min);

    py::class_<ConvergenceRow>(m, "ConvergenceRow")
        .def_readonly("n_elements", &ConvergenceRow::n_elements)
        .def_readonly("normalized", &ConvergenceRow::normalized)
        .def_readonly("strain_energy", &ConvergenceRow::strain_energy)
        .def_readonly("wall_time_s", &ConvergenceRow::wall_time_s);

    py::class_<LengthSweepRow>(m, "LengthRow")
        .def_readonly("L", &LengthSweepRow::L)
        .def_readonly("normalized", &LengthSweepRow::normalized)
        .def_readonly("asymptotic", &LengthSweepRow::asymptotic);

    m.def(
        "critical_load",
        [](const ShellGeometry& geometry, const Material& material,
           const std::optional<CrackSpec>& crack, int n_elements, const std::string& technique,
           int n_first, int n_last, const std::string& bc, int gauss_points,
           double penalty_alpha) {
            const ShellModel model = make_model(geometry, material, crack);
            const Technique t = technique_from_string(technique);
            const Mesh mesh = build_mesh(geometry, model.crack, n_elements, t);
            return critical_load(model, mesh, n_first, n_last,
                                 make_options(bc, gauss_points, penalty_alpha));
        },
        py::arg("geometry"), py::arg("material"), py::arg("crack") = std::nullopt,
        py::arg("n_elements") = 21, py::arg("technique") = "conversion", py::arg("n_first") = 1,
        py::arg("n_last") = 15, py::arg("bc") = "simply_supported", py::arg("gauss_points") = 3,
        py::arg("penalty_alpha") = 1e6,
        "Critical buckling load sweep over circumferential mode numbers. Loads are "
        "normalized by D*m.");

    m.def(
        "natural_frequencies",
        [](const ShellGeometry& geometry, const Material& material,
           const std::optional<CrackSpec>& crack, int n_elements, const std::string& technique,
           const std::vector<int>& n_list, int count, const std::string& bc) {
            const ShellModel model = make_model(geometry, material, crack);
            const Technique t = technique_from_string(technique);
            const Mesh mesh = build_mesh(geometry, model.crack, n_elements, t);
            return natural_frequencies(model, mesh, n_list, count, make_options(bc, 3, 1e6))
                .rows;
        },
        py::arg("geometry"), py::arg("material"), py::arg("crack") = std::nullopt,
        py::arg("n_elements") = 21, py::arg("technique") = "conversion",
        py::arg("n_list") = std::vector<int>{1, 3, 7, 11}, py::arg("count") = 1,
        py::arg("bc") = "simply_supported",
        "Radial (flexural) natural frequencies per circumferential mode number; Omega is "
        "the frequency parameter omega*R*sqrt(rho (1-nu^2)/E).");

    m.def(
        "depth_sweep",
        [](const ShellGeometry& geometry, const Material& material, double x_c,
           const std::vector<double>& depth_ratios, int n_elements,
           const std::string& technique, int n_first, int n_last) {
            const ShellModel model = make_model(geometry, material, std::nullopt);
            return depth_ratio_curve(model, x_c, depth_ratios, n_elements,
                                     technique_from_string(technique), n_first, n_last);
        },
        py::arg("geometry"), py::arg("material"), py::arg("x_c"), py::arg("depth_ratios"),
        py::arg("n_elements") = 21, py::arg("technique") = "conversion", py::arg("n_first") = 1,
        py::arg("n_last") = 15,
        "Normalized critical loads and cracked/intact ratios over a grid of depth ratios.");

    m.def(
        "position_sweep",
        [](const ShellGeometry& geometry, const Material& material, const CrackSpec& crack,
           const std::vector<double>& positions, int n_elements, const std::string& technique,
           int n_first, int n_last) {
            const ShellModel model = make_model(geometry, material, crack);
            return crack_position_sweep(model, positions, n_elements,
                                        technique_from_string(technique), n_first, n_last);
        },
        py::arg("geometry"), py::arg("material"), py::arg("crack"), py::arg("positions"),
        py::arg("n_elements") = 21, py::arg("technique") = "conversion", py::arg("n_first") = 1,
        py::arg("n_last") = 15);

    m.def(
        "convergence_study",
        [](const ShellGeometry& geometry, const Material& material,
           const std::optional<CrackSpec>& crack, const std::vector<int>& element_counts,
           const std::string& technique, int n_first, int n_last) {
            const ShellModel model = make_model(geometry, material, crack);
            return convergence_study(model, element_counts, technique_from_string(technique),
                                     n_first, n_last);
        },
        py::arg("geometry"), py::arg("material"), py::arg("crack"), py::arg("element_counts"),
        py::arg("technique") = "conversion", py::arg("n_first") = 1, py::arg("n_last") = 15);

    m.def(
        "length_sweep",
        [](const ShellGeometry& geometry, const Material& material,
           const std::optional<CrackSpec>& crack, const std::vector<double>& lengths,
           int n_elements, const std::string& technique, int n_first, int n_last) {
            const ShellModel model = make_model(geometry, material, crack);
            return length_sweep(model, lengths, n_elements, technique_from_string(technique),
                                n_first, n_last);
        },
        py::arg("geometry"), py::arg("material"), py::arg("crack"), py::arg("lengths"),
        py::arg("n_elements") = 21, py::arg("technique") = "conversion", py::arg("n_first") = 1,
        py::arg("n_last") = 15);

    m.def(
        "classical_normalized_load",
        [](const ShellGeometry& geometry, const Material& material) {
            return classical_normalized_load(make_model(geometry, material, std::nullopt));
        },
        py::arg("geometry"), py::arg("material"),
        "Classical axisymmetric critical load E h^2/(R sqrt(3(1-nu^2))) in the D*m "
        "normalization.");

    m.def(
        "rotational_spring_stiffness",
        [](const ShellGeometry& geometry, const Material& material, double a) {
            const SpringStiffness ks =
                rotational_stiffness(CrackSpec{a, geometry.L / 2}, geometry, material);
            return ks.total;
        },
        py::arg("geometry"), py::arg("material"), py::arg("a"),
        "Total rotational stiffness [N m/rad] of the circumferential crack line spring.");

    m.def(
        "preset",
        [](const std::string& name) {
            const RunConfig config = preset_config(name);
            py::dict d;
            d["geometry"] = config.geometry;
            d["material"] = config.material;
            if (config.crack)
                d["crack"] = *config.crack;
            else
                d["crack"] = py::none();
            d["n_elements"] = config.n_elements;
            d["technique"] = to_string(config.technique);
            return d;
        },
        py::arg("name"),
        "Named benchmark setups: 'table1', 'table4', 'table5', 'table2-experimental'.");

    m.def(
        "verify_conversion_matrices",
        [](const ShellGeometry& geometry, const Material& material) {
            const ShellModel model =
                make_model(geometry, material, CrackSpec{0.5 * geometry.h, geometry.L / 2});
            double worst = 0.0;
            const auto entries = conversion_comparison(model, worst);
            return py::make_tuple(worst, entries.size());
        },
        py::arg("geometry"), py::arg("material"),
        "Compare closed-form conversion matrices against the continuity-condition solve; "
        "returns (worst relative error, number of entries above 1e-8).");
}
