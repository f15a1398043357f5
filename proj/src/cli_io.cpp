#include "cylshell/cli_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "cylshell/enrichment.hpp"

namespace cylshell {

using nlohmann::json;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void RunConfig::validate() const {
    geometry.validate();
    material.validate();
    if (crack) crack->validate(geometry);
    if (element_lengths.empty() && n_elements < 3)
        throw std::invalid_argument("config: mesh.n_elements must be >= 3");
    if (gauss_points < 2 || gauss_points > 5)
        throw std::invalid_argument("config: solver.gauss_points must be 2..5");
    if (!(penalty_alpha > 0.0))
        throw std::invalid_argument("config: solver.penalty_alpha must be positive");
    static const std::vector<std::string> kinds = {"buckle", "vibrate", "sweep", "converge",
                                                   "modeshape"};
    if (std::find(kinds.begin(), kinds.end(), analysis.kind) == kinds.end())
        throw std::invalid_argument("config: unknown analysis.kind '" + analysis.kind + "'");
}

Mesh RunConfig::mesh() const {
    if (!element_lengths.empty())
        return build_mesh(geometry, crack, element_lengths, technique);
    return build_mesh(geometry, crack, n_elements, technique);
}

SolveOptions RunConfig::solve_options() const {
    SolveOptions o;
    o.assembly.gauss_points = gauss_points;
    o.assembly.penalty_alpha = penalty_alpha;
    o.bc = bc;
    return o;
}

RunConfig preset_config(const std::string& name) {
    RunConfig c;
    c.material = Material{200e9, 0.3, 7850.0};
    if (name == "table1" || name == "table4" || name == "table5") {
        // h = 0.2 with shell parameter m = 1 fixes R; length per the x_c/L study
        const double h = 0.2;
        const double R = std::sqrt(12.0 * (1.0 - 0.09)) / h;  // m_param = 1
        c.geometry = ShellGeometry{R, h, 5.0 * kPi};
        c.crack = CrackSpec{0.5 * h, 0.5 * c.geometry.L};
        if (name == "table4") {
            c.analysis.kind = "sweep";
            c.analysis.sweep_by = "position";
            c.analysis.position_grid = {0.1, 0.2, 0.3, 0.4, 0.5};
        } else if (name == "table5") {
            c.analysis.kind = "vibrate";
            c.analysis.n_list = {1, 3, 7, 11};
            c.analysis.count = 1;
        }
    } else if (name == "table2-experimental") {
        c.geometry = ShellGeometry{0.115, 0.001, 0.100};
        c.crack = CrackSpec{0.4 * c.geometry.h, 0.5 * c.geometry.L};
        c.analysis.n_last = 25;
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }
    return c;
}

namespace {

RunConfig config_from_json(const json& j) {
    RunConfig c;
    try {
        const json& g = j.at("geometry");
        c.geometry = ShellGeometry{g.at("R"), g.at("h"), g.at("L")};
        const json& m = j.at("material");
        c.material = Material{m.at("E"), m.at("nu"), m.at("rho")};
        if (j.contains("crack")) {
            const json& cr = j.at("crack");
            c.crack = CrackSpec{cr.at("a"), cr.at("x_c")};
        }
        if (j.contains("mesh")) {
            const json& me = j.at("mesh");
            if (me.contains("element_lengths"))
                c.element_lengths = me.at("element_lengths").get<std::vector<double>>();
            else
                c.n_elements = me.at("n_elements");
        }
        if (j.contains("technique")) c.technique = technique_from_string(j.at("technique"));
        if (j.contains("bc")) c.bc = bc_from_string(j.at("bc"));
        if (j.contains("analysis")) {
            const json& a = j.at("analysis");
            AnalysisSpec& s = c.analysis;
            s.kind = a.value("kind", s.kind);
            if (a.contains("n_range")) {
                s.n_first = a.at("n_range").at(0);
                s.n_last = a.at("n_range").at(1);
            }
            if (a.contains("n_list")) s.n_list = a.at("n_list").get<std::vector<int>>();
            s.count = a.value("count", s.count);
            s.sweep_by = a.value("by", s.sweep_by);
            if (a.contains("depth_grid"))
                s.depth_grid = a.at("depth_grid").get<std::vector<double>>();
            if (a.contains("position_grid"))
                s.position_grid = a.at("position_grid").get<std::vector<double>>();
            if (a.contains("element_counts"))
                s.element_counts = a.at("element_counts").get<std::vector<int>>();
            if (a.contains("lengths")) s.lengths = a.at("lengths").get<std::vector<double>>();
            s.grid_nx = a.value("grid_nx", s.grid_nx);
            s.grid_ntheta = a.value("grid_ntheta", s.grid_ntheta);
            s.scale = a.value("scale", s.scale);
        }
        if (j.contains("solver")) {
            const json& s = j.at("solver");
            c.gauss_points = s.value("gauss_points", c.gauss_points);
            c.penalty_alpha = s.value("penalty_alpha", c.penalty_alpha);
        }
        if (j.contains("output")) c.out_dir = j.at("output").value("dir", c.out_dir);
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("config: ") + e.what());
    }
    c.validate();
    return c;
}

json config_to_json(const RunConfig& c) {
    json j;
    j["geometry"] = {{"R", c.geometry.R}, {"h", c.geometry.h}, {"L", c.geometry.L}};
    j["material"] = {{"E", c.material.E}, {"nu", c.material.nu}, {"rho", c.material.rho}};
    if (c.crack) j["crack"] = {{"a", c.crack->a}, {"x_c", c.crack->x_c}};
    if (!c.element_lengths.empty())
        j["mesh"] = {{"element_lengths", c.element_lengths}};
    else
        j["mesh"] = {{"n_elements", c.n_elements}};
    j["technique"] = to_string(c.technique);
    j["bc"] = to_string(c.bc);
    json a;
    a["kind"] = c.analysis.kind;
    a["n_range"] = {c.analysis.n_first, c.analysis.n_last};
    if (!c.analysis.n_list.empty()) a["n_list"] = c.analysis.n_list;
    a["count"] = c.analysis.count;
    a["by"] = c.analysis.sweep_by;
    if (!c.analysis.depth_grid.empty()) a["depth_grid"] = c.analysis.depth_grid;
    if (!c.analysis.position_grid.empty()) a["position_grid"] = c.analysis.position_grid;
    if (!c.analysis.element_counts.empty()) a["element_counts"] = c.analysis.element_counts;
    if (!c.analysis.lengths.empty()) a["lengths"] = c.analysis.lengths;
    a["grid_nx"] = c.analysis.grid_nx;
    a["grid_ntheta"] = c.analysis.grid_ntheta;
    a["scale"] = c.analysis.scale;
    j["analysis"] = a;
    j["solver"] = {{"gauss_points", c.gauss_points}, {"penalty_alpha", c.penalty_alpha}};
    j["output"] = {{"dir", c.out_dir}};
    return j;
}

}  // namespace

RunConfig parse_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("config: cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw std::invalid_argument("config: " + path + ": " + e.what());
    }
    return config_from_json(j);
}

std::string config_to_json_string(const RunConfig& config) {
    return config_to_json(config).dump(2);
}

RunConfig config_from_json_string(const std::string& text) {
    return config_from_json(json::parse(text));
}

std::string config_hash(const RunConfig& config) {
    const size_t h = std::hash<std::string>{}(config_to_json(config).dump());
    char buf[32];
    std::snprintf(buf, sizeof buf, "%016zx", h);
    return buf;
}

void write_table(const ResultTable& table, const std::string& path,
                 const std::vector<std::string>& provenance) {
    if (table.rows.empty()) throw std::invalid_argument("write_table: empty result");
    std::ofstream out(path);
    if (!out) throw std::runtime_error("write_table: cannot open " + path);
    for (const auto& line : provenance) out << "# " << line << "\n";
    for (size_t i = 0; i < table.columns.size(); ++i)
        out << table.columns[i] << (i + 1 < table.columns.size() ? "," : "\n");
    char buf[32];
    for (const auto& row : table.rows) {
        for (size_t i = 0; i < row.size(); ++i) {
            std::snprintf(buf, sizeof buf, "%.6g", row[i]);
            out << buf << (i + 1 < row.size() ? "," : "\n");
        }
    }
    if (!out) throw std::runtime_error("write_table: write failed for " + path);
}

ResultTable modeshape_surface(const ShellModel& model, const Mesh& mesh, int n,
                              const Eigen::VectorXd& full_mode, int grid_nx_per_element,
                              int grid_ntheta, double scale) {
    if (grid_nx_per_element < 2)
        throw std::invalid_argument("modeshape: need at least 2 samples per axial element");
    if (grid_ntheta < 4) throw std::invalid_argument("modeshape: theta grid too coarse");
    if (full_mode.size() != 4 * mesh.node_count)
        throw std::invalid_argument("modeshape: mode vector size does not match the mesh");

    SpringStiffness ks = SpringStiffness::Intact();
    const bool conversion_crack = !mesh.intact && mesh.technique == Technique::conversion;
    if (conversion_crack)
        ks = rotational_stiffness(*model.crack, model.geometry, model.material);

    ResultTable table;
    table.columns = {"x", "theta", "u", "v", "w"};
    for (int e = 0; e < mesh.element_count(); ++e) {
        const ElementContext ctx =
            ElementContext::make(mesh.element_lengths[e], model.geometry, model.material, n);
        const auto [na, nb] = mesh.element_nodes(e);
        Vector8 nodal;
        nodal << full_mode.segment<4>(4 * na), full_mode.segment<4>(4 * nb);
        const double x_start = mesh.element_start(e);

        // (sub-element, local nodal vector, local offset) pieces to sample
        struct Piece {
            ElementContext ctx;
            Vector8 nodal;
            double x_offset;
        };
        std::vector<Piece> pieces;
        if (conversion_crack && e == mesh.crack_element) {
            const ConversionPair pair = continuity_oracle(mesh.crack_offset, ctx.l, ctx, ks);
            pieces.push_back({ctx.with_length(mesh.crack_offset), pair.C_T * nodal, 0.0});
            pieces.push_back({ctx.with_length(ctx.l - mesh.crack_offset), pair.C_B * nodal,
                              mesh.crack_offset});
        } else {
            pieces.push_back({ctx, nodal, 0.0});
        }

        for (const Piece& piece : pieces) {
            for (int i = 0; i < grid_nx_per_element; ++i) {
                const double x_local =
                    piece.ctx.l * static_cast<double>(i) / (grid_nx_per_element - 1);
                for (int t = 0; t < grid_ntheta; ++t) {
                    const double theta = 2.0 * kPi * t / grid_ntheta;
                    const FieldSample f = sample_field(piece.nodal, piece.ctx, x_local, theta);
                    table.rows.push_back({x_start + piece.x_offset + x_local, theta,
                                          scale * f.u, scale * f.v, scale * f.w});
                }
            }
        }
    }
    return table;
}

std::vector<VerifyEntry> conversion_comparison(const ShellModel& model, double& worst) {
    const ShellGeometry& g = model.geometry;
    const double l = g.L / 21.0;
    const std::vector<double> offsets = {0.2, 0.5, 0.8};
    const std::vector<int> modes = {0, 1, 5, 10};
    std::vector<SpringStiffness> springs;
    for (double mu : {0.2, 0.5, 0.8})
        springs.push_back(rotational_stiffness(CrackSpec{mu * g.h, 0.5 * g.L}, g, model.material));
    springs.push_back(SpringStiffness::Intact());

    std::vector<VerifyEntry> entries;
    worst = 0.0;
    for (double frac : offsets)
        for (int n : modes)
            for (const SpringStiffness& ks : springs) {
                const ElementContext ctx = ElementContext::make(l, g, model.material, n);
                const ConversionPair closed = conversion_matrices(frac * l, l, ctx, ks);
                const ConversionPair oracle = continuity_oracle(frac * l, l, ctx, ks);
                for (int which = 0; which < 2; ++which) {
                    const Matrix8& C = which == 0 ? closed.C_T : closed.C_B;
                    const Matrix8& O = which == 0 ? oracle.C_T : oracle.C_B;
                    const double scale = std::max(O.cwiseAbs().maxCoeff(), 1e-300);
                    for (int r = 0; r < 8; ++r)
                        for (int c = 0; c < 8; ++c) {
                            const double rel = std::abs(C(r, c) - O(r, c)) / scale;
                            worst = std::max(worst, rel);
                            if (rel > 1e-8)
                                entries.push_back(VerifyEntry{frac, n,
                                                              ks.intact ? 0.0 : ks.total,
                                                              which * 8 + r, c, C(r, c),
                                                              O(r, c), rel});
                        }
                }
            }
    return entries;
}

}  // namespace cylshell
