#pragma once

#include <Eigen/Dense>
#include <vector>

namespace cylshell {

/// One converged eigenpair. For buckling `value` is the load factor lambda on the
/// reference prestress; for vibration it is omega^2. The vector is normalized to
/// unit maximum magnitude with the largest entry positive.
struct EigenSolution {
    double value;
    Eigen::VectorXd vector;
};

/// Smallest positive lambda with (K + lambda K_G) singular. K must be symmetric
/// positive definite, K_G symmetric (negative semidefinite for a destabilizing
/// prestress). Solved as the symmetric-definite pencil (-K_G, K): lambda is the
/// reciprocal of its largest eigenvalue, which deflates the membrane nullspace of
/// K_G without spurious infinite eigenvalues.
EigenSolution min_buckling_factor(const Eigen::MatrixXd& K, const Eigen::MatrixXd& K_G);

/// The `count` smallest omega^2 >= 0 of |K - M omega^2| = 0, ascending. M must be
/// symmetric positive definite.
std::vector<EigenSolution> min_vibration_frequencies(const Eigen::MatrixXd& K,
                                                     const Eigen::MatrixXd& M, int count);

}  // namespace cylshell
