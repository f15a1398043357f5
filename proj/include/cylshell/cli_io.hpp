#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cylshell/analysis.hpp"

namespace cylshell {

struct AnalysisSpec {
    std::string kind = "buckle";  // buckle | vibrate | sweep | converge | modeshape
    int n_first = 1;
    int n_last = 15;
    std::vector<int> n_list;  // vibrate: circumferential modes to report
    int count = 1;            // vibrate: frequencies per mode number
    std::string sweep_by = "depth";  // sweep: depth | position
    std::vector<double> depth_grid;
    std::vector<double> position_grid;
    std::vector<int> element_counts;  // converge
    std::vector<double> lengths;      // length sweep (sweep_by = "length")
    int grid_nx = 4;       // modeshape: samples per axial element
    int grid_ntheta = 72;  // modeshape: circumferential samples
    double scale = 10.0;   // modeshape: displacement magnification
};

struct RunConfig {
    ShellGeometry geometry{};
    Material material{};
    std::optional<CrackSpec> crack;
    int n_elements = 21;
    std::vector<double> element_lengths;  // non-empty overrides n_elements
    Technique technique = Technique::conversion;
    BoundaryCondition bc = BoundaryCondition::simply_supported;
    AnalysisSpec analysis;
    int gauss_points = 3;
    double penalty_alpha = 1e6;
    std::string out_dir = "out";

    void validate() const;
    ShellModel model() const { return ShellModel{geometry, material, crack}; }
    Mesh mesh() const;
    SolveOptions solve_options() const;
};

/// Named paper-setup presets: "table1", "table4", "table5", "table2-experimental".
RunConfig preset_config(const std::string& name);

/// Parse and validate a JSON config file; schema violations and physical invariant
/// violations throw with the offending field named.
RunConfig parse_config(const std::string& path);

std::string config_to_json_string(const RunConfig& config);
RunConfig config_from_json_string(const std::string& text);

/// Stable hash of the canonical config serialization, recorded in output headers.
std::string config_hash(const RunConfig& config);

/// A plot-ready result table: named columns, numeric rows.
struct ResultTable {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// CSV with '#'-prefixed provenance header lines and 6-significant-digit numbers.
/// Empty tables are an error and produce no file.
void write_table(const ResultTable& table, const std::string& path,
                 const std::vector<std::string>& provenance);

/// Long-format (x, theta, u, v, w) surface of a converged mode sampled through the
/// harmonic expansion; the conversion crack element is sampled on its two
/// sub-elements through the conversion matrices.
ResultTable modeshape_surface(const ShellModel& model, const Mesh& mesh, int n,
                              const Eigen::VectorXd& full_mode, int grid_nx_per_element,
                              int grid_ntheta, double scale);

/// One closed-form vs continuity-oracle comparison point of the verification grid.
struct VerifyEntry {
    double x0_over_l;
    int n;
    double ks_total;  // 0 marks the intact limit
    int row, col;
    double closed_form;
    double oracle;
    double rel_error;  // |closed - oracle| / max entry scale of the pair
};

/// Runs the randomized/structured comparison grid over both conversion matrices.
/// `worst` receives the largest relative discrepancy.
std::vector<VerifyEntry> conversion_comparison(const ShellModel& model, double& worst);

}  // namespace cylshell
