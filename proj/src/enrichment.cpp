#include "cylshell/enrichment.hpp"

#include <cmath>
#include <stdexcept>

namespace cylshell {

namespace {

// One closed-form matrix entry: (c0 + c1 k) / (d0 + d1 k), with the k -> inf limit
// c1 / d1 for the intact shell.
struct RationalEntry {
    double c0 = 0.0, c1 = 0.0;

    double eval(double k, double d0, double d1, bool intact) {
        if (intact) return c1 / d1;
        return (c0 + c1 * k) / (d0 + d1 * k);
    }
};

}  // namespace

ConversionPair conversion_matrices(double x0, double l, const ElementContext& ctx,
                                   const SpringStiffness& ks) {
    if (!(x0 > 0.0 && x0 < l))
        throw std::invalid_argument("conversion_matrices: x0 must lie strictly inside (0, l)");
    const double D = ctx.E * ctx.h * ctx.h * ctx.h / (12.0 * (1.0 - ctx.nu * ctx.nu));
    const double R = ctx.R;
    const double n = static_cast<double>(ctx.n);
    const double v = ctx.nu;
    const bool intact = ks.intact;
    const double k = intact ? 0.0 : ks.per_length(2.0 * 3.14159265358979323846 * R);

    const double l2 = l * l, l3 = l2 * l, l4 = l3 * l;
    const double x2 = x0 * x0, x3 = x2 * x0, x4 = x3 * x0, x5 = x4 * x0, x6 = x5 * x0,
                 x7 = x6 * x0;
    const double R2 = R * R, R4 = R2 * R2;
    const double n2 = n * n, n3 = n2 * n, n4 = n2 * n2;
    const double v2 = v * v;

    // denominator chi; the printed leading "L(" and "36DLR^4x0" are element length l
    const double d0 = l * (D * l3 * n4 * v2 * x3 - 3 * D * l2 * n4 * v2 * x4 +
                           3 * D * l * n4 * v2 * x5 - D * n4 * v2 * x6 + 12 * D * l2 * R4 -
                           36 * D * l * R4 * x0 + 36 * D * R4 * x2);
    const double d1 = l * 3 * l3 * R4;
    if (!intact && std::abs(d0 + d1 * k) < 1e-300)
        throw std::runtime_error("conversion_matrices: degenerate configuration (chi = 0)");

    RationalEntry w_v1{D * l4 * n3 * v2 * x3 - 4 * D * l3 * n3 * v2 * x4 +
                           6 * D * l2 * n3 * v2 * x5 - 4 * D * l * n3 * v2 * x6 +
                           D * n3 * v2 * x7 - 6 * D * l3 * R2 * n * v * x2 +
                           18 * D * l2 * R2 * n * v * x3 - 18 * D * l * R2 * n * v * x4 +
                           6 * D * R2 * n * v * x5,
                       0.0};
    RationalEntry w_v4{D * l3 * n3 * v2 * x4 - 3 * D * l2 * n3 * v2 * x5 +
                           3 * D * l * n3 * v2 * x6 - D * n3 * v2 * x7 -
                           6 * D * l2 * R2 * n * v * x3 + 12 * D * l * R2 * n * v * x4 -
                           6 * D * R2 * n * v * x5,
                       0.0};
    RationalEntry w_w1{6 * D * l3 * R2 * n2 * v * x2 - 18 * D * l2 * R2 * n2 * v * x3 +
                           18 * D * l * R2 * n2 * v * x4 - 6 * D * R2 * n2 * v * x5 +
                           12 * D * l3 * R4 - 36 * D * l2 * R4 * x0 + 36 * D * l * R4 * x2 -
                           12 * D * R4 * x3,
                       3 * l4 * R4 - 9 * l2 * R4 * x2 + 6 * l * R4 * x3};
    RationalEntry w_w4{6 * D * l2 * R2 * n2 * v * x3 - 12 * D * l * R2 * n2 * v * x4 +
                           6 * D * R2 * n2 * v * x5 + 12 * D * R4 * x3,
                       9 * l2 * R4 * x2 - 6 * l * R4 * x3};
    RationalEntry w_f1{2 * D * l3 * R2 * n2 * v * x3 - 6 * D * l2 * R2 * n2 * v * x4 +
                           6 * D * l * R2 * n2 * v * x5 - 2 * D * R2 * n2 * v * x6 +
                           12 * D * l3 * R4 * x0 - 36 * D * l2 * R4 * x2 +
                           36 * D * l * R4 * x3 - 12 * D * R4 * x4,
                       3 * l4 * R4 * x0 - 6 * l3 * R4 * x2 + 3 * l2 * R4 * x3};
    RationalEntry w_f4{-2 * D * l3 * R2 * n2 * v * x3 + 6 * D * l2 * R2 * n2 * v * x4 -
                           6 * D * l * R2 * n2 * v * x5 + 2 * D * R2 * n2 * v * x6 -
                           12 * D * l * R4 * x3 + 12 * D * R4 * x4,
                       -3 * l3 * R4 * x2 + 3 * l2 * R4 * x3};

    // phi rows carry the extra -1/2 prefactor of Eqs. (E.9)-(E.20)
    RationalEntry f2_v1{-3 * D * l4 * n3 * v2 * x2 + 15 * D * l3 * n3 * v2 * x3 -
                            27 * D * l2 * n3 * v2 * x4 + 21 * D * l * n3 * v2 * x5 -
                            6 * D * n3 * v2 * x6 + 24 * D * l3 * R2 * n * v * x0 -
                            78 * D * l2 * R2 * n * v * x2 + 90 * D * l * R2 * n * v * x3 -
                            36 * D * R2 * n * v * x4,
                        0.0};
    RationalEntry f2_v4{-3 * D * l3 * n3 * v2 * x3 + 12 * D * l2 * n3 * v2 * x4 -
                            15 * D * l * n3 * v2 * x5 + 6 * D * n3 * v2 * x6 +
                            24 * D * l2 * R2 * n * v * x2 - 54 * D * l * R2 * n * v * x3 +
                            36 * D * R2 * n * v * x4,
                        0.0};
    RationalEntry f2_w1{3 * D * l4 * n4 * v2 * x2 - 12 * D * l3 * n4 * v2 * x3 +
                            18 * D * l2 * n4 * v2 * x4 - 12 * D * l * n4 * v2 * x5 +
                            3 * D * n4 * v2 * x6 - 24 * D * l3 * R2 * n2 * v * x0 +
                            72 * D * l2 * R2 * n2 * v * x2 - 72 * D * l * R2 * n2 * v * x3 +
                            24 * D * R2 * n2 * v * x4 + 36 * D * R4 * x2,
                        36 * l2 * R4 * x0 - 36 * l * R4 * x2};
    RationalEntry f2_w4{-3 * D * l2 * n4 * v2 * x4 + 6 * D * l * n4 * v2 * x5 -
                            3 * D * n4 * v2 * x6 - 18 * D * l2 * R2 * n2 * v * x2 +
                            36 * D * l * R2 * n2 * v * x3 - 24 * D * R2 * n2 * v * x4 -
                            36 * D * R4 * x2,
                        -36 * l2 * R4 * x0 + 36 * l * R4 * x2};
    RationalEntry f2_f1{D * l4 * n4 * v2 * x3 - 4 * D * l3 * n4 * v2 * x4 +
                            6 * D * l2 * n4 * v2 * x5 - 4 * D * l * n4 * v2 * x6 +
                            D * n4 * v2 * x7 - 12 * D * l3 * R2 * n2 * v * x2 +
                            36 * D * l2 * R2 * n2 * v * x3 - 36 * D * l * R2 * n2 * v * x4 +
                            12 * D * R2 * n2 * v * x5 - 24 * D * l3 * R4 +
                            72 * D * l2 * R4 * x0 - 72 * D * l * R4 * x2 + 36 * D * R4 * x3,
                        -6 * l4 * R4 + 24 * l3 * R4 * x0 - 18 * l2 * R4 * x2};
    RationalEntry f2_f4{D * l3 * n4 * v2 * x4 - 3 * D * l2 * n4 * v2 * x5 +
                            3 * D * l * n4 * v2 * x6 - D * n4 * v2 * x7 +
                            6 * D * l3 * R2 * n2 * v * x2 - 18 * D * l2 * R2 * n2 * v * x3 +
                            24 * D * l * R2 * n2 * v * x4 - 12 * D * R2 * n2 * v * x5 +
                            36 * D * l * R4 * x2 - 36 * D * R4 * x3,
                        12 * l3 * R4 * x0 - 18 * l2 * R4 * x2};

    RationalEntry f3_v1{-3 * D * l4 * n3 * v2 * x2 + 15 * D * l3 * n3 * v2 * x3 -
                            27 * D * l2 * n3 * v2 * x4 + 21 * D * l * n3 * v2 * x5 -
                            6 * D * n3 * v2 * x6 - 6 * D * l4 * R2 * n * v +
                            30 * D * l3 * R2 * n * v * x0 - 78 * D * l2 * R2 * n * v * x2 +
                            90 * D * l * R2 * n * v * x3 - 36 * D * R2 * n * v * x4,
                        0.0};
    RationalEntry f3_v4{-3 * D * l3 * n3 * v2 * x3 + 12 * D * l2 * n3 * v2 * x4 -
                            15 * D * l * n3 * v2 * x5 + 6 * D * n3 * v2 * x6 -
                            6 * D * l3 * R2 * n * v * x0 + 24 * D * l2 * R2 * n * v * x2 -
                            54 * D * l * R2 * n * v * x3 + 36 * D * R2 * n * v * x4,
                        0.0};
    RationalEntry f3_w1{3 * D * l4 * n4 * v2 * x2 - 12 * D * l3 * n4 * v2 * x3 +
                            18 * D * l2 * n4 * v2 * x4 - 12 * D * l * n4 * v2 * x5 +
                            3 * D * n4 * v2 * x6 + 6 * D * l4 * R2 * n2 * v -
                            24 * D * l3 * R2 * n2 * v * x0 + 54 * D * l2 * R2 * n2 * v * x2 -
                            60 * D * l * R2 * n2 * v * x3 + 24 * D * R2 * n2 * v * x4 +
                            36 * D * l2 * R4 - 72 * D * l * R4 * x0 + 36 * D * R4 * x2,
                        36 * l2 * R4 * x0 - 36 * l * R4 * x2};
    RationalEntry f3_w4{-3 * D * l2 * n4 * v2 * x4 + 6 * D * l * n4 * v2 * x5 -
                            3 * D * n4 * v2 * x6 + 24 * D * l * R2 * n2 * v * x3 -
                            24 * D * R2 * n2 * v * x4 - 36 * D * l2 * R4 +
                            72 * D * l * R4 * x0 - 36 * D * R4 * x2,
                        -36 * l2 * R4 * x0 + 36 * l * R4 * x2};
    RationalEntry f3_f1{D * l4 * n4 * v2 * x3 - 4 * D * l3 * n4 * v2 * x4 +
                            6 * D * l2 * n4 * v2 * x5 - 4 * D * l * n4 * v2 * x6 +
                            D * n4 * v2 * x7 + 6 * D * l4 * R2 * n2 * v * x0 -
                            24 * D * l3 * R2 * n2 * v * x2 + 42 * D * l2 * R2 * n2 * v * x3 -
                            36 * D * l * R2 * n2 * v * x4 + 12 * D * R2 * n2 * v * x5 +
                            36 * D * l2 * R4 * x0 - 72 * D * l * R4 * x2 + 36 * D * R4 * x3,
                        -6 * l4 * R4 + 24 * l3 * R4 * x0 - 18 * l2 * R4 * x2};
    RationalEntry f3_f4{D * l3 * n4 * v2 * x4 - 3 * D * l2 * n4 * v2 * x5 +
                            3 * D * l * n4 * v2 * x6 - D * n4 * v2 * x7 -
                            12 * D * l2 * R2 * n2 * v * x3 + 24 * D * l * R2 * n2 * v * x4 -
                            12 * D * R2 * n2 * v * x5 + 12 * D * l3 * R4 -
                            36 * D * l2 * R4 * x0 + 36 * D * l * R4 * x2 - 36 * D * R4 * x3,
                        12 * l3 * R4 * x0 - 18 * l2 * R4 * x2};

    auto ev = [&](RationalEntry e) { return e.eval(k, d0, d1, intact); };
    // the phi rows carry the -1/(2 chi) prefactor: -(c0 + c1 k) / (2 (d0 + d1 k))
    auto evphi = [&](RationalEntry e) {
        if (intact) return -0.5 * e.c1 / d1;
        return -0.5 * (e.c0 + e.c1 * k) / (d0 + d1 * k);
    };

    ConversionPair pair;
    pair.C_T = Matrix8::Zero();
    pair.C_B = Matrix8::Zero();
    Matrix8& T = pair.C_T;
    Matrix8& Bm = pair.C_B;

    T.block<4, 4>(0, 0).setIdentity();
    const double a = 1.0 - x0 / l, c = x0 / l;
    // membrane rows: linear interpolation of u and v
    T(4, 0) = a;
    T(4, 4) = c;
    T(5, 1) = a;
    T(5, 5) = c;
    const double wrow[8] = {0, ev(w_v1), ev(w_w1), ev(w_f1), 0, ev(w_v4), ev(w_w4), ev(w_f4)};
    for (int j = 0; j < 8; ++j) T(6, j) = wrow[j];
    const double f2row[8] = {0,          evphi(f2_v1), evphi(f2_w1), evphi(f2_f1),
                             0,          evphi(f2_v4), evphi(f2_w4), evphi(f2_f4)};
    for (int j = 0; j < 8; ++j) T(7, j) = f2row[j];

    Bm(0, 0) = a;
    Bm(0, 4) = c;
    Bm(1, 1) = a;
    Bm(1, 5) = c;
    for (int j = 0; j < 8; ++j) Bm(2, j) = wrow[j];
    const double f3row[8] = {0,          evphi(f3_v1), evphi(f3_w1), evphi(f3_f1),
                             0,          evphi(f3_v4), evphi(f3_w4), evphi(f3_f4)};
    for (int j = 0; j < 8; ++j) Bm(3, j) = f3row[j];
    Bm.block<4, 4>(4, 4).setIdentity();
    return pair;
}

ConversionPair continuity_oracle(double x0, double l, const ElementContext& ctx,
                                 const SpringStiffness& ks) {
    if (!(x0 > 0.0 && x0 < l))
        throw std::invalid_argument("continuity_oracle: x0 must lie strictly inside (0, l)");
    const ElementContext top = ctx.with_length(x0);
    const ElementContext bot = ctx.with_length(l - x0);

    // linear maps nodal vector -> (N_x, N_xtheta, M_x, Q_x) at the shared interface
    Eigen::Matrix<double, 4, 8> FT, FB;
    for (int j = 0; j < 8; ++j) {
        Vector8 e = Vector8::Zero();
        e(j) = 1.0;
        const Resultants rT = resultant_amplitudes(e, 1.0, top);
        const Resultants rB = resultant_amplitudes(e, -1.0, bot);
        FT.col(j) << rT.N_x, rT.N_xtheta, rT.M_x, rT.Q_x;
        FB.col(j) << rB.N_x, rB.N_xtheta, rB.M_x, rB.Q_x;
    }

    // unknowns m = [u2 v2 w2 phi2 u3 v3 w3 phi3]; nodal_T = [ubar(0..3), m(0..3)],
    // nodal_B = [m(4..7), ubar(4..7)]
    Matrix8 A = Matrix8::Zero();
    Matrix8 G = Matrix8::Zero();
    // displacement matching
    for (int i = 0; i < 3; ++i) {
        A(i, i) = 1.0;
        A(i, i + 4) = -1.0;
    }
    // resultant matching N_x, N_xtheta, M_x, Q_x
    const int rows[4] = {3, 4, 5, 7};
    const int comp[4] = {0, 1, 2, 3};
    for (int q = 0; q < 4; ++q) {
        const int i = rows[q];
        const int c = comp[q];
        for (int j = 0; j < 4; ++j) {
            A(i, j) += FT(c, j + 4);       // middle-node part of the top side
            A(i, j + 4) -= FB(c, j);       // middle-node part of the bottom side
            G(i, j) += FT(c, j);           // main node 1 part
            G(i, j + 4) -= FB(c, j + 4);   // main node 4 part
        }
    }
    // spring rotation jump: phi2 - phi3 = M_xT / k  (the moment transmitted across the
    // crack relaxes the slope on the far side)
    A(6, 7) = 1.0;
    A(6, 3) = -1.0;
    if (!ks.intact) {
        const double k = ks.per_length(2.0 * 3.14159265358979323846 * ctx.R);
        for (int j = 0; j < 4; ++j) {
            A(6, j) += FT(2, j + 4) / k;
            G(6, j) += FT(2, j) / k;
        }
    }

    // equilibrate rows before the rank test: resultant rows scale like D/l^3 while
    // displacement rows are O(1), which otherwise defeats the pivoting threshold
    for (int i = 0; i < 8; ++i) {
        const double s = std::max(A.row(i).cwiseAbs().maxCoeff(),
                                  G.row(i).cwiseAbs().maxCoeff());
        if (s > 0.0) {
            A.row(i) /= s;
            G.row(i) /= s;
        }
    }
    Eigen::FullPivLU<Matrix8> lu(A);
    if (!lu.isInvertible())
        throw std::runtime_error("continuity_oracle: singular continuity system");
    const Matrix8 X = -lu.solve(G);

    ConversionPair pair;
    pair.C_T = Matrix8::Zero();
    pair.C_B = Matrix8::Zero();
    pair.C_T.block<4, 4>(0, 0).setIdentity();
    pair.C_T.block<4, 8>(4, 0) = X.block<4, 8>(0, 0);
    pair.C_B.block<4, 8>(0, 0) = X.block<4, 8>(4, 0);
    pair.C_B.block<4, 4>(4, 4).setIdentity();
    return pair;
}

double spring_energy_coefficient(const SpringStiffness& ks, const ElementContext& ctx) {
    if (ks.intact) return 0.0;
    const double k_line = ks.per_length(2.0 * 3.14159265358979323846 * ctx.R);
    return k_line * ctx.theta_factor() * ctx.R;
}

Matrix8 cracked_stiffness(double x0, double l, const ElementContext& ctx,
                          const SpringStiffness& ks, const ConversionPair& pair,
                          int gauss_points) {
    const Matrix8 kT = stiffness(ctx.with_length(x0), gauss_points);
    const Matrix8 kB = stiffness(ctx.with_length(l - x0), gauss_points);
    Matrix8 k = pair.C_T.transpose() * kT * pair.C_T + pair.C_B.transpose() * kB * pair.C_B;
    if (!ks.intact) {
        const Eigen::Matrix<double, 1, 8> jump = pair.C_B.row(3) - pair.C_T.row(7);
        k += spring_energy_coefficient(ks, ctx) * (jump.transpose() * jump);
    }
    return 0.5 * (k + Matrix8(k.transpose()));
}

Matrix8 cracked_geometric_stiffness(double x0, double l, const ElementContext& ctx,
                                    const Prestress& pre, const ConversionPair& pair,
                                    int gauss_points) {
    const Matrix8 gT = geometric_stiffness(ctx.with_length(x0), pre, gauss_points);
    const Matrix8 gB = geometric_stiffness(ctx.with_length(l - x0), pre, gauss_points);
    Matrix8 kg = pair.C_T.transpose() * gT * pair.C_T + pair.C_B.transpose() * gB * pair.C_B;
    return 0.5 * (kg + Matrix8(kg.transpose()));
}

Matrix8 spring_set_stiffness(const SpringSetParams& params) {
    if (!(params.k_u > 0.0 && params.k_v > 0.0 && params.k_w > 0.0 && params.k_rot > 0.0))
        throw std::invalid_argument("spring_set_stiffness: stiffnesses must be positive");
    Matrix8 k = Matrix8::Zero();
    const double vals[4] = {params.k_u, params.k_v, params.k_w, params.k_rot};
    for (int i = 0; i < 4; ++i) {
        k(i, i) = vals[i];
        k(i + 4, i + 4) = vals[i];
        k(i, i + 4) = -vals[i];
        k(i + 4, i) = -vals[i];
    }
    return k;
}

SpringSetParams spring_set_params(const Matrix8& k_left, const Matrix8& k_right,
                                  const SpringStiffness& ks, const ElementContext& ctx,
                                  double alpha) {
    const double overall = std::max(k_left.diagonal().maxCoeff(), k_right.diagonal().maxCoeff());
    auto penalty = [&](int comp) {
        double d = 0.0;
        for (int s = 0; s < 2; ++s) {
            const int i = comp + 4 * s;
            d = std::max({d, k_left(i, i), k_right(i, i)});
        }
        if (d <= 0.0) d = overall;  // e.g. the v block at n = 0, constrained away later
        return alpha * d;
    };
    SpringSetParams p;
    p.k_u = penalty(0);
    p.k_v = penalty(1);
    p.k_w = penalty(2);
    p.k_rot = ks.intact ? penalty(3) : spring_energy_coefficient(ks, ctx);
    return p;
}

}  // namespace cylshell
