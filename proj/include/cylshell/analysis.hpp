#pragma once

#include <string>
#include <vector>

#include "cylshell/assembly.hpp"
#include "cylshell/eigensolve.hpp"

namespace cylshell {

struct SolveOptions {
    AssemblyOptions assembly;
    BoundaryCondition bc = BoundaryCondition::simply_supported;
};

/// Unit reference prestress: pure axial membrane compression of 1 N/m.
inline Prestress reference_prestress() { return Prestress{-1.0, 0.0, 0.0}; }

struct BucklingPoint {
    int n = 0;
    double lambda = 0.0;      // load factor on the unit reference prestress
    double normalized = 0.0;  // N_cr / (D m_param)
};

struct BucklingSweepResult {
    std::vector<BucklingPoint> rows;              // one per solved mode number
    std::vector<std::pair<int, std::string>> errors;  // per-n solver failures
    BucklingPoint minimum;
    Eigen::VectorXd minimum_mode;  // full-DOF mode vector at the minimum, unit max |w|
    int minimum_node_count = 0;
};

/// Critical buckling load over a range of circumferential mode numbers.
BucklingSweepResult critical_load(const ShellModel& model, const Mesh& mesh, int n_first,
                                  int n_last, const SolveOptions& options = {});

struct FrequencyRow {
    int n = 0;
    int mode_index = 0;  // 1-based, ascending per n
    double omega = 0.0;  // [rad/s]
    double Omega = 0.0;  // omega R sqrt(rho (1 - nu^2) / E)
};

struct FrequencyResult {
    std::vector<FrequencyRow> rows;
};

FrequencyResult natural_frequencies(const ShellModel& model, const Mesh& mesh,
                                    const std::vector<int>& n_list, int count,
                                    const SolveOptions& options = {});

struct PositionSweepRow {
    double xc_over_L = 0.0;
    double normalized = 0.0;
    int n_at_min = 0;
};

/// Normalized critical load as the crack plane moves along the cylinder.
std::vector<PositionSweepRow> crack_position_sweep(const ShellModel& model,
                                                   const std::vector<double>& positions,
                                                   int n_elements, Technique technique,
                                                   int n_first, int n_last,
                                                   const SolveOptions& options = {});

struct DepthSweepRow {
    double a_over_h = 0.0;
    double normalized = 0.0;
    double ratio = 0.0;  // P_cracked / P_intact
    int n_at_min = 0;
};

/// Normalized loads and cracked/intact ratios over a grid of depth ratios
/// (a/h = 0 rows give the intact reference).
std::vector<DepthSweepRow> depth_ratio_curve(const ShellModel& base, double x_c,
                                             const std::vector<double>& depth_ratios,
                                             int n_elements, Technique technique, int n_first,
                                             int n_last, const SolveOptions& options = {});

struct ConvergenceRow {
    int n_elements = 0;
    double normalized = 0.0;
    double strain_energy = 0.0;  // of the critical mode at unit max |w|
    double wall_time_s = 0.0;
};

std::vector<ConvergenceRow> convergence_study(const ShellModel& model,
                                              const std::vector<int>& element_counts,
                                              Technique technique, int n_first, int n_last,
                                              const SolveOptions& options = {});

struct LengthSweepRow {
    double L = 0.0;
    double normalized = 0.0;
    bool asymptotic = false;  // |change| < 0.5% from the previous length
};

std::vector<LengthSweepRow> length_sweep(const ShellModel& model,
                                         const std::vector<double>& lengths, int n_elements,
                                         Technique technique, int n_first, int n_last,
                                         const SolveOptions& options = {});

/// Classical axisymmetric critical load N_cr = E h^2 / (R sqrt(3 (1 - nu^2))) of the
/// intact cylinder, in the same D * m_param normalization (identically 2).
double classical_normalized_load(const ShellModel& model);

/// Rescale a full-DOF mode vector to unit maximum |w|, sign of the peak positive.
void normalize_by_w(Eigen::VectorXd& full_mode);

}  // namespace cylshell
