#include "cylshell/assembly.hpp"

#include <stdexcept>

#include "cylshell/enrichment.hpp"

namespace cylshell {

std::string to_string(BoundaryCondition bc) {
    switch (bc) {
        case BoundaryCondition::simply_supported: return "simply_supported";
        case BoundaryCondition::clamped: return "clamped";
        case BoundaryCondition::free_ends: return "free";
    }
    return "?";
}

BoundaryCondition bc_from_string(const std::string& s) {
    if (s == "simply_supported") return BoundaryCondition::simply_supported;
    if (s == "clamped") return BoundaryCondition::clamped;
    if (s == "free") return BoundaryCondition::free_ends;
    throw std::invalid_argument("unknown boundary condition: " + s);
}

namespace {

void scatter(Eigen::MatrixXd& global, const Matrix8& local, int node_a, int node_b) {
    const int base[2] = {4 * node_a, 4 * node_b};
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            global(base[i / 4] + i % 4, base[j / 4] + j % 4) += local(i, j);
}

}  // namespace

GlobalSystem assemble(const ShellModel& model, const Mesh& mesh, int n,
                      const Prestress& prestress, const AssemblyOptions& options) {
    model.validate();
    if (n < 0) throw std::invalid_argument("assemble: mode number must be >= 0");
    const bool cracked = !mesh.intact;
    if (cracked && !model.crack)
        throw std::invalid_argument("assemble: cracked mesh but no crack in the model");

    GlobalSystem sys;
    sys.node_count = mesh.node_count;
    sys.n = n;
    const int size = 4 * mesh.node_count;
    sys.K = Eigen::MatrixXd::Zero(size, size);
    sys.K_G = Eigen::MatrixXd::Zero(size, size);
    sys.M = Eigen::MatrixXd::Zero(size, size);

    SpringStiffness ks = SpringStiffness::Intact();
    if (cracked) ks = rotational_stiffness(*model.crack, model.geometry, model.material);

    for (int e = 0; e < mesh.element_count(); ++e) {
        const ElementContext ctx =
            ElementContext::make(mesh.element_lengths[e], model.geometry, model.material, n);
        const auto [na, nb] = mesh.element_nodes(e);

        if (cracked && mesh.technique == Technique::conversion && e == mesh.crack_element) {
            const double x0 = mesh.crack_offset;
            const double l = ctx.l;
            const ConversionPair pair = options.use_continuity_oracle
                                            ? continuity_oracle(x0, l, ctx, ks)
                                            : conversion_matrices(x0, l, ctx, ks);
            scatter(sys.K, cracked_stiffness(x0, l, ctx, ks, pair, options.gauss_points), na, nb);
            scatter(sys.K_G,
                    cracked_geometric_stiffness(x0, l, ctx, prestress, pair, options.gauss_points),
                    na, nb);
            // the mass matrix is independent of the crack: standard full-length element
            scatter(sys.M, mass(ctx, options.gauss_points), na, nb);
        } else {
            scatter(sys.K, stiffness(ctx, options.gauss_points), na, nb);
            scatter(sys.K_G, geometric_stiffness(ctx, prestress, options.gauss_points), na, nb);
            scatter(sys.M, mass(ctx, options.gauss_points), na, nb);
        }
    }

    if (cracked && mesh.technique == Technique::spring_set) {
        const int e_left = mesh.crack_interface - 1;
        const int e_right = mesh.crack_interface;
        const ElementContext ctx_left =
            ElementContext::make(mesh.element_lengths[e_left], model.geometry, model.material, n);
        const ElementContext ctx_right =
            ElementContext::make(mesh.element_lengths[e_right], model.geometry, model.material, n);
        const Matrix8 k_left = stiffness(ctx_left, options.gauss_points);
        const Matrix8 k_right = stiffness(ctx_right, options.gauss_points);
        const SpringSetParams params =
            spring_set_params(k_left, k_right, ks, ctx_left, options.penalty_alpha);
        // the zero-length crack element carries stiffness only: no mass, no prestress
        scatter(sys.K, spring_set_stiffness(params), mesh.crack_interface,
                mesh.crack_interface + 1);
    }
    return sys;
}

ReducedSystem apply_boundary_conditions(const GlobalSystem& system, BoundaryCondition bc) {
    const int nodes = system.node_count;
    std::vector<bool> constrained(static_cast<size_t>(4 * nodes), false);

    auto fix = [&](int node, int comp) { constrained[static_cast<size_t>(4 * node + comp)] = true; };
    const int first = 0, last = nodes - 1;
    switch (bc) {
        case BoundaryCondition::simply_supported:
            for (int node : {first, last}) {
                fix(node, 1);  // v
                fix(node, 2);  // w
            }
            break;
        case BoundaryCondition::clamped:
            for (int node : {first, last})
                for (int c = 0; c < 4; ++c) fix(node, c);
            break;
        case BoundaryCondition::free_ends: break;
    }
    if (system.n == 0) {
        for (int node = 0; node < nodes; ++node) fix(node, 1);  // sin harmonic vanishes
        fix(first, 0);  // axial rigid-body mode
    }

    ReducedSystem red;
    red.node_count = nodes;
    red.n = system.n;
    for (int i = 0; i < 4 * nodes; ++i)
        if (!constrained[static_cast<size_t>(i)]) red.active.push_back(i);
    const int m = static_cast<int>(red.active.size());
    red.K.resize(m, m);
    red.K_G.resize(m, m);
    red.M.resize(m, m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            red.K(i, j) = system.K(red.active[i], red.active[j]);
            red.K_G(i, j) = system.K_G(red.active[i], red.active[j]);
            red.M(i, j) = system.M(red.active[i], red.active[j]);
        }
    return red;
}

Eigen::VectorXd expand_to_full(const ReducedSystem& system, const Eigen::VectorXd& reduced) {
    Eigen::VectorXd full = Eigen::VectorXd::Zero(4 * system.node_count);
    for (int i = 0; i < reduced.size(); ++i) full(system.active[static_cast<size_t>(i)]) = reduced(i);
    return full;
}

}  // namespace cylshell
