#include "cylshell/eigensolve.hpp"

#include <cmath>
#include <stdexcept>

namespace cylshell {

namespace {

constexpr double kResidualTol = 1e-8;

void normalize(Eigen::VectorXd& v) {
    int imax = 0;
    v.cwiseAbs().maxCoeff(&imax);
    const double peak = v(imax);
    if (peak != 0.0) v /= peak;  // unit maximum magnitude, largest entry positive
}

void check_symmetric(const Eigen::MatrixXd& A, const char* name) {
    const double scale = A.cwiseAbs().maxCoeff();
    if (scale > 0.0 && (A - A.transpose()).cwiseAbs().maxCoeff() > 1e-10 * scale)
        throw std::invalid_argument(std::string(name) + " must be symmetric");
}

}  // namespace

EigenSolution min_buckling_factor(const Eigen::MatrixXd& K, const Eigen::MatrixXd& K_G) {
    check_symmetric(K, "K");
    check_symmetric(K_G, "K_G");
    if (K_G.cwiseAbs().maxCoeff() == 0.0)
        throw std::invalid_argument("min_buckling_factor: K_G is zero");
    Eigen::LLT<Eigen::MatrixXd> llt(K);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("min_buckling_factor: K is not positive definite");

    // pencil (-K_G) v = mu K v; the smallest positive lambda is 1 / mu_max
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(-K_G, K);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("min_buckling_factor: eigensolver failed");
    const auto& mu = solver.eigenvalues();
    const int last = static_cast<int>(mu.size()) - 1;
    if (!(mu(last) > 0.0))
        throw std::runtime_error("min_buckling_factor: prestress is not destabilizing");

    EigenSolution sol;
    sol.value = 1.0 / mu(last);
    sol.vector = solver.eigenvectors().col(last);
    normalize(sol.vector);

    // backward-error bound: scale by the matrix norms, not the (possibly small)
    // K v of the critical mode, so penalty-stiffened systems are judged fairly
    const double res = (K * sol.vector + sol.value * (K_G * sol.vector)).norm();
    const double ref =
        (K.norm() + std::abs(sol.value) * K_G.norm()) * sol.vector.norm();
    if (!(res <= kResidualTol * ref))
        throw std::runtime_error("min_buckling_factor: residual above tolerance");
    return sol;
}

std::vector<EigenSolution> min_vibration_frequencies(const Eigen::MatrixXd& K,
                                                     const Eigen::MatrixXd& M, int count) {
    check_symmetric(K, "K");
    check_symmetric(M, "M");
    if (count < 1) throw std::invalid_argument("min_vibration_frequencies: count must be >= 1");
    Eigen::LLT<Eigen::MatrixXd> llt(M);
    if (llt.info() != Eigen::Success)
        throw std::invalid_argument("min_vibration_frequencies: M is not positive definite");

    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> solver(K, M);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("min_vibration_frequencies: eigensolver failed");

    std::vector<EigenSolution> out;
    const int n = static_cast<int>(solver.eigenvalues().size());
    for (int i = 0; i < n && static_cast<int>(out.size()) < count; ++i) {
        const double w2 = solver.eigenvalues()(i);
        if (w2 < -1e-8 * std::abs(solver.eigenvalues()(n - 1))) continue;  // numerical noise
        EigenSolution sol;
        sol.value = std::max(w2, 0.0);
        sol.vector = solver.eigenvectors().col(i);
        normalize(sol.vector);
        const double res = (K * sol.vector - sol.value * (M * sol.vector)).norm();
        const double ref = (K.norm() + sol.value * M.norm()) * sol.vector.norm();
        if (ref > 0.0 && !(res <= kResidualTol * ref))
            throw std::runtime_error("min_vibration_frequencies: residual above tolerance");
        out.push_back(std::move(sol));
    }
    if (static_cast<int>(out.size()) < count)
        throw std::runtime_error("min_vibration_frequencies: fewer modes than requested");
    return out;
}

}  // namespace cylshell
