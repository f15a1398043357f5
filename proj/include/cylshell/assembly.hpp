#pragma once

#include <Eigen/Dense>
#include <vector>

#include "cylshell/crack_spring.hpp"
#include "cylshell/element.hpp"
#include "cylshell/model.hpp"

namespace cylshell {

enum class BoundaryCondition { simply_supported, clamped, free_ends };

std::string to_string(BoundaryCondition bc);
BoundaryCondition bc_from_string(const std::string& s);

struct AssemblyOptions {
    int gauss_points = 3;
    double penalty_alpha = 1e6;  // spring-set translational penalty scale
    /// Conversion matrices route: true solves the continuity system (authoritative),
    /// false uses the printed closed forms.
    bool use_continuity_oracle = true;
};

/// Full (unconstrained) global matrices for one circumferential mode n.
/// DOF layout is node-major: global index = 4 * node + (u, v, w, phi).
struct GlobalSystem {
    Eigen::MatrixXd K;
    Eigen::MatrixXd K_G;
    Eigen::MatrixXd M;
    int node_count = 0;
    int n = 0;
};

/// Reduced system after boundary-condition elimination; `active` maps reduced
/// indices back to full DOF indices.
struct ReducedSystem {
    Eigen::MatrixXd K;
    Eigen::MatrixXd K_G;
    Eigen::MatrixXd M;
    std::vector<int> active;
    int node_count = 0;
    int n = 0;
};

GlobalSystem assemble(const ShellModel& model, const Mesh& mesh, int n,
                      const Prestress& prestress, const AssemblyOptions& options = {});

/// Row/column elimination. Simply supported constrains v and w at both end nodes;
/// clamped constrains all four. The circumferential DOFs v are inactive at n = 0
/// (the sin harmonic vanishes identically) and one end's u is fixed at n = 0 to
/// remove the axial rigid-body mode.
ReducedSystem apply_boundary_conditions(const GlobalSystem& system, BoundaryCondition bc);

/// Scatter a reduced vector back to the full DOF vector (constrained entries zero).
Eigen::VectorXd expand_to_full(const ReducedSystem& system, const Eigen::VectorXd& reduced);

}  // namespace cylshell
