#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>

#include "cylshell/eigensolve.hpp"

using namespace cylshell;

namespace {

// deterministic random SPD / symmetric matrices for the oracle comparisons
Eigen::MatrixXd random_spd(int dim, unsigned seed, double shift) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    Eigen::MatrixXd a(dim, dim);
    for (int i = 0; i < dim; ++i)
        for (int j = 0; j < dim; ++j) a(i, j) = u(rng);
    return a * a.transpose() + shift * Eigen::MatrixXd::Identity(dim, dim);
}

Eigen::MatrixXd random_nsd(int dim, unsigned seed) {
    return -random_spd(dim, seed, 0.1);
}

// independent oracle: scan det(K + lambda K_G) for its first sign change and
// bisect the root to machine precision
double det_root_oracle(const Eigen::MatrixXd& K, const Eigen::MatrixXd& K_G) {
    auto det = [&](double lam) { return (K + lam * K_G).determinant(); };
    const double d0 = det(0.0);
    double hi = 1e-6;
    while (det(hi) * d0 > 0.0) {
        hi *= 1.5;
        REQUIRE(hi < 1e12);
    }
    double lo = hi / 1.5;
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (det(mid) * d0 > 0.0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("buckling factor matches the determinant-root oracle on small pencils") {
    for (int dim : {2, 3, 5}) {
        for (unsigned seed : {1u, 7u, 42u}) {
            const Eigen::MatrixXd K = random_spd(dim, seed, 1.0);
            const Eigen::MatrixXd K_G = random_nsd(dim, seed + 100);
            const EigenSolution sol = min_buckling_factor(K, K_G);
            const double oracle = det_root_oracle(K, K_G);
            CHECK(sol.value == doctest::Approx(oracle).epsilon(1e-10));
            // the eigenvector really is in the pencil nullspace
            const double res = ((K + sol.value * K_G) * sol.vector).norm() /
                               ((K.norm() + sol.value * K_G.norm()) * sol.vector.norm());
            CHECK(res < 1e-12);
            // normalization contract: unit max magnitude, largest entry positive
            CHECK(sol.vector.cwiseAbs().maxCoeff() == doctest::Approx(1.0));
            int imax = 0;
            sol.vector.cwiseAbs().maxCoeff(&imax);
            CHECK(sol.vector(imax) > 0.0);
        }
    }
}

TEST_CASE("buckling factor ignores the stabilized directions") {
    // K_G with a nullspace direction: the pencil must not produce a spurious
    // infinite or zero eigenvalue
    Eigen::MatrixXd K = random_spd(4, 3u, 1.0);
    Eigen::MatrixXd K_G = Eigen::MatrixXd::Zero(4, 4);
    K_G(0, 0) = -2.0;
    K_G(1, 1) = -0.5;  // directions 2, 3 are unaffected by the prestress
    const EigenSolution sol = min_buckling_factor(K, K_G);
    const double oracle = det_root_oracle(K, K_G);
    CHECK(sol.value == doctest::Approx(oracle).epsilon(1e-10));
    CHECK(sol.value > 0.0);
}

TEST_CASE("vibration frequencies match a dense generalized eigensolve") {
    const Eigen::MatrixXd K = random_spd(6, 11u, 2.0);
    const Eigen::MatrixXd M = random_spd(6, 12u, 1.0);
    const std::vector<EigenSolution> modes = min_vibration_frequencies(K, M, 4);
    REQUIRE(modes.size() == 4);
    Eigen::GeneralizedSelfAdjointEigenSolver<Eigen::MatrixXd> ref(K, M);
    for (int i = 0; i < 4; ++i) {
        CHECK(modes[i].value == doctest::Approx(ref.eigenvalues()(i)).epsilon(1e-12));
        if (i > 0) CHECK(modes[i].value >= modes[i - 1].value);
        const double res = ((K - modes[i].value * M) * modes[i].vector).norm() /
                           ((K.norm() + modes[i].value * M.norm()) * modes[i].vector.norm());
        CHECK(res < 1e-12);
    }
}

TEST_CASE("scale invariance of the buckling factor") {
    // multiplying K and K_G by the same constant leaves lambda unchanged;
    // scaling only K_G divides lambda by that constant
    const Eigen::MatrixXd K = random_spd(4, 21u, 1.0);
    const Eigen::MatrixXd K_G = random_nsd(4, 22u);
    const double lam = min_buckling_factor(K, K_G).value;
    CHECK(min_buckling_factor(1e9 * K, 1e9 * K_G).value == doctest::Approx(lam).epsilon(1e-10));
    CHECK(min_buckling_factor(K, 4.0 * K_G).value == doctest::Approx(0.25 * lam).epsilon(1e-10));
}

TEST_CASE("input validation") {
    const Eigen::MatrixXd K = random_spd(3, 31u, 1.0);
    const Eigen::MatrixXd K_G = random_nsd(3, 32u);
    Eigen::MatrixXd asym = K;
    asym(0, 1) += 1.0;
    CHECK_THROWS_AS(min_buckling_factor(asym, K_G), std::invalid_argument);
    CHECK_THROWS_AS(min_buckling_factor(K, Eigen::MatrixXd::Zero(3, 3)),
                    std::invalid_argument);
    CHECK_THROWS_AS(min_buckling_factor(-K, K_G), std::invalid_argument);  // K not PD
    // a stabilizing (positive semidefinite) prestress has no buckling load
    CHECK_THROWS_AS(min_buckling_factor(K, Eigen::MatrixXd(-K_G)), std::runtime_error);
    CHECK_THROWS_AS(min_vibration_frequencies(K, -K, 1), std::invalid_argument);
    CHECK_THROWS_AS(min_vibration_frequencies(K, K, 0), std::invalid_argument);
    CHECK_THROWS_AS(min_vibration_frequencies(K, K, 7), std::runtime_error);  // > dim
}
