#include "cylshell/analysis.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace cylshell {

void normalize_by_w(Eigen::VectorXd& full_mode) {
    double peak = 0.0;
    for (int i = 2; i < full_mode.size(); i += 4)
        if (std::abs(full_mode(i)) > std::abs(peak)) peak = full_mode(i);
    if (peak != 0.0) full_mode /= peak;
}

double classical_normalized_load(const ShellModel& model) {
    const auto& g = model.geometry;
    const auto& m = model.material;
    const double N_cr =
        m.E * g.h * g.h / (g.R * std::sqrt(3.0 * (1.0 - m.nu * m.nu)));
    const DerivedParams p = derived_params(g, m);
    return N_cr / (p.D * p.m_param);
}

BucklingSweepResult critical_load(const ShellModel& model, const Mesh& mesh, int n_first,
                                  int n_last, const SolveOptions& options) {
    if (n_last < n_first) throw std::invalid_argument("critical_load: empty mode range");
    const DerivedParams p = derived_params(model.geometry, model.material);
    const double norm_scale = 1.0 / (p.D * p.m_param);

    BucklingSweepResult result;
    result.minimum.normalized = std::numeric_limits<double>::infinity();
    for (int n = n_first; n <= n_last; ++n) {
        try {
            const GlobalSystem sys = assemble(model, mesh, n, reference_prestress(),
                                              options.assembly);
            const ReducedSystem red = apply_boundary_conditions(sys, options.bc);
            const EigenSolution sol = min_buckling_factor(red.K, red.K_G);
            BucklingPoint point{n, sol.value, sol.value * norm_scale};
            result.rows.push_back(point);
            if (point.normalized < result.minimum.normalized) {
                result.minimum = point;
                Eigen::VectorXd full = expand_to_full(red, sol.vector);
                normalize_by_w(full);
                result.minimum_mode = std::move(full);
                result.minimum_node_count = red.node_count;
            }
        } catch (const std::exception& e) {
            result.errors.emplace_back(n, e.what());
        }
    }
    if (result.rows.empty())
        throw std::runtime_error("critical_load: no mode number produced a solution");
    return result;
}

FrequencyResult natural_frequencies(const ShellModel& model, const Mesh& mesh,
                                    const std::vector<int>& n_list, int count,
                                    const SolveOptions& options) {
    if (n_list.empty()) throw std::invalid_argument("natural_frequencies: empty mode list");
    const auto& g = model.geometry;
    const auto& mat = model.material;
    const double omega_to_Omega = g.R * std::sqrt(mat.rho * (1.0 - mat.nu * mat.nu) / mat.E);

    FrequencyResult result;
    for (int n : n_list) {
        const GlobalSystem sys = assemble(model, mesh, n, Prestress{}, options.assembly);
        const ReducedSystem red = apply_boundary_conditions(sys, options.bc);
        // The spectrum also contains purely in-surface (axial-shear / torsional) modes
        // with no radial motion; the flexural family reported here is w-dominant, so
        // request extra modes and keep those whose largest amplitude is radial.
        const int dim = static_cast<int>(red.K.rows());
        int request = std::min(dim, count + 4);
        std::vector<EigenSolution> radial;
        while (true) {
            const auto sols = min_vibration_frequencies(red.K, red.M, request);
            radial.clear();
            for (const auto& sol : sols) {
                const Eigen::VectorXd full = expand_to_full(red, sol.vector);
                double pu = 0.0, pv = 0.0, pw = 0.0;
                for (int i = 0; i + 2 < full.size(); i += 4) {
                    pu = std::max(pu, std::abs(full(i)));
                    pv = std::max(pv, std::abs(full(i + 1)));
                    pw = std::max(pw, std::abs(full(i + 2)));
                }
                if (pw >= pu && pw >= pv) radial.push_back(sol);
                if (static_cast<int>(radial.size()) == count) break;
            }
            if (static_cast<int>(radial.size()) == count || request == dim) break;
            request = std::min(dim, 2 * request);
        }
        if (static_cast<int>(radial.size()) < count)
            throw std::runtime_error("natural_frequencies: fewer radial modes than requested");
        for (int i = 0; i < count; ++i) {
            const double omega = std::sqrt(radial[static_cast<size_t>(i)].value);
            result.rows.push_back(FrequencyRow{n, i + 1, omega, omega * omega_to_Omega});
        }
    }
    return result;
}

std::vector<PositionSweepRow> crack_position_sweep(const ShellModel& model,
                                                   const std::vector<double>& positions,
                                                   int n_elements, Technique technique,
                                                   int n_first, int n_last,
                                                   const SolveOptions& options) {
    if (!model.crack)
        throw std::invalid_argument("crack_position_sweep: model carries no crack");
    std::vector<PositionSweepRow> rows;
    for (double pos : positions) {
        ShellModel moved = model;
        moved.crack->x_c = pos * model.geometry.L;
        const Mesh mesh = build_mesh(moved.geometry, moved.crack, n_elements, technique);
        const BucklingSweepResult sweep = critical_load(moved, mesh, n_first, n_last, options);
        rows.push_back(PositionSweepRow{pos, sweep.minimum.normalized, sweep.minimum.n});
    }
    return rows;
}

std::vector<DepthSweepRow> depth_ratio_curve(const ShellModel& base, double x_c,
                                             const std::vector<double>& depth_ratios,
                                             int n_elements, Technique technique, int n_first,
                                             int n_last, const SolveOptions& options) {
    ShellModel intact = base;
    intact.crack.reset();
    const Mesh intact_mesh = build_mesh(intact.geometry, intact.crack, n_elements, technique);
    const double P_intact =
        critical_load(intact, intact_mesh, n_first, n_last, options).minimum.normalized;

    std::vector<DepthSweepRow> rows;
    for (double mu : depth_ratios) {
        ShellModel cracked = base;
        if (mu > 0.0)
            cracked.crack = CrackSpec{mu * base.geometry.h, x_c};
        else
            cracked.crack.reset();
        const Mesh mesh = build_mesh(cracked.geometry, cracked.crack, n_elements, technique);
        const BucklingSweepResult sweep = critical_load(cracked, mesh, n_first, n_last, options);
        rows.push_back(DepthSweepRow{mu, sweep.minimum.normalized,
                                     sweep.minimum.normalized / P_intact, sweep.minimum.n});
    }
    return rows;
}

std::vector<ConvergenceRow> convergence_study(const ShellModel& model,
                                              const std::vector<int>& element_counts,
                                              Technique technique, int n_first, int n_last,
                                              const SolveOptions& options) {
    for (size_t i = 1; i < element_counts.size(); ++i)
        if (element_counts[i] <= element_counts[i - 1])
            throw std::invalid_argument("convergence_study: element counts must ascend");

    std::vector<ConvergenceRow> rows;
    for (int count : element_counts) {
        const auto start = std::chrono::steady_clock::now();
        const Mesh mesh = build_mesh(model.geometry, model.crack, count, technique);
        const BucklingSweepResult sweep = critical_load(model, mesh, n_first, n_last, options);

        // strain energy of the critical mode at unit max |w|
        const GlobalSystem sys = assemble(model, mesh, sweep.minimum.n, reference_prestress(),
                                          options.assembly);
        const double energy =
            0.5 * sweep.minimum_mode.dot(sys.K * sweep.minimum_mode);
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
        rows.push_back(
            ConvergenceRow{count, sweep.minimum.normalized, energy, elapsed.count()});
    }
    return rows;
}

std::vector<LengthSweepRow> length_sweep(const ShellModel& model,
                                         const std::vector<double>& lengths, int n_elements,
                                         Technique technique, int n_first, int n_last,
                                         const SolveOptions& options) {
    std::vector<LengthSweepRow> rows;
    double previous = 0.0;
    for (double L : lengths) {
        if (!(L > 0.0)) throw std::invalid_argument("length_sweep: lengths must be positive");
        ShellModel scaled = model;
        scaled.geometry.L = L;
        if (scaled.crack) scaled.crack->x_c = 0.5 * L;  // crack stays at the middle
        const Mesh mesh = build_mesh(scaled.geometry, scaled.crack, n_elements, technique);
        const BucklingSweepResult sweep = critical_load(scaled, mesh, n_first, n_last, options);
        LengthSweepRow row{L, sweep.minimum.normalized, false};
        if (!rows.empty())
            row.asymptotic = std::abs(row.normalized - previous) < 0.005 * previous;
        previous = row.normalized;
        rows.push_back(row);
    }
    return rows;
}

}  // namespace cylshell
