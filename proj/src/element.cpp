#include "cylshell/element.hpp"

#include <cmath>
#include <stdexcept>

namespace cylshell {

namespace {

constexpr double kPi = 3.14159265358979323846;

struct GaussRule {
    int count;
    const double* xi;
    const double* w;
};

// abscissae/weights to 16 significant digits
constexpr double kXi2[] = {-0.5773502691896258, 0.5773502691896258};
constexpr double kW2[] = {1.0, 1.0};
constexpr double kXi3[] = {-0.7745966692414834, 0.0, 0.7745966692414834};
constexpr double kW3[] = {0.5555555555555556, 0.8888888888888889, 0.5555555555555556};
constexpr double kXi4[] = {-0.8611363115940526, -0.3399810435848563, 0.3399810435848563,
                           0.8611363115940526};
constexpr double kW4[] = {0.3478548451374538, 0.6521451548625461, 0.6521451548625461,
                          0.3478548451374538};
constexpr double kXi5[] = {-0.9061798459386640, -0.5384693101056831, 0.0, 0.5384693101056831,
                           0.9061798459386640};
constexpr double kW5[] = {0.2369268850561891, 0.4786286704993665, 0.5688888888888889,
                          0.4786286704993665, 0.2369268850561891};

GaussRule gauss_rule(int points) {
    switch (points) {
        case 2: return {2, kXi2, kW2};
        case 3: return {3, kXi3, kW3};
        case 4: return {4, kXi4, kW4};
        case 5: return {5, kXi5, kW5};
        default: throw std::invalid_argument("gauss_rule: supported orders are 2..5");
    }
}

}  // namespace

ElementContext ElementContext::make(double l, const ShellGeometry& geometry,
                                    const Material& material, int n) {
    if (!(l > 0.0)) throw std::invalid_argument("element: length must be positive");
    if (n < 0) throw std::invalid_argument("element: mode number must be >= 0");
    return ElementContext{l, geometry.R, geometry.h, n, material.E, material.nu, material.rho};
}

ElementContext ElementContext::with_length(double new_l) const {
    ElementContext c = *this;
    if (!(new_l > 0.0)) throw std::invalid_argument("element: length must be positive");
    c.l = new_l;
    return c;
}

double ElementContext::theta_factor() const { return n == 0 ? 2.0 * kPi : kPi; }

ShapeValues shape_values(double xi, double l) {
    if (xi < -1.0 - 1e-12 || xi > 1.0 + 1e-12)
        throw std::invalid_argument("shape_values: xi outside [-1, 1]");
    const double x = 0.5 * l * (1.0 + xi);
    ShapeValues s;
    s.N1 = 1.0 - x / l;
    s.N2 = x / l;
    s.N1x = -1.0 / l;
    s.N2x = 1.0 / l;
    const double l2 = l * l, l3 = l2 * l;
    const double x2 = x * x, x3 = x2 * x;
    s.H = {(2.0 * x3 - 3.0 * x2 * l + l3) / l3, x3 / l2 - 2.0 * x2 / l + x,
           (-2.0 * x3 + 3.0 * x2 * l) / l3, x3 / l2 - x2 / l};
    s.Hx = {(6.0 * x2 - 6.0 * x * l) / l3, 3.0 * x2 / l2 - 4.0 * x / l + 1.0,
            (-6.0 * x2 + 6.0 * x * l) / l3, 3.0 * x2 / l2 - 2.0 * x / l};
    s.Hxx = {(12.0 * x - 6.0 * l) / l3, 6.0 * x / l2 - 4.0 / l, (-12.0 * x + 6.0 * l) / l3,
             6.0 * x / l2 - 2.0 / l};
    s.Hxxx = {12.0 / l3, 6.0 / l2, -12.0 / l3, 6.0 / l2};
    return s;
}

Matrix6x8 strain_displacement(double xi, const ElementContext& ctx) {
    const ShapeValues s = shape_values(xi, ctx.l);
    const double R = ctx.R;
    const double n = static_cast<double>(ctx.n);
    Matrix6x8 B = Matrix6x8::Zero();
    // eps_x0 = du/dx
    B(0, 0) = s.N1x;
    B(0, 4) = s.N2x;
    // eps_theta0 = (1/R)(dv/dtheta - w)
    B(1, 1) = n / R * s.N1;
    B(1, 5) = n / R * s.N2;
    B(1, 2) = -s.H[0] / R;
    B(1, 3) = -s.H[1] / R;
    B(1, 6) = -s.H[2] / R;
    B(1, 7) = -s.H[3] / R;
    // gamma_xtheta0 = (1/R)du/dtheta + dv/dx   (sin harmonic)
    B(2, 0) = -n / R * s.N1;
    B(2, 4) = -n / R * s.N2;
    B(2, 1) = s.N1x;
    B(2, 5) = s.N2x;
    // kappa_x = d2w/dx2
    B(3, 2) = s.Hxx[0];
    B(3, 3) = s.Hxx[1];
    B(3, 6) = s.Hxx[2];
    B(3, 7) = s.Hxx[3];
    // kappa_theta = (1/R^2)(dv/dtheta + d2w/dtheta2)
    B(4, 1) = n / (R * R) * s.N1;
    B(4, 5) = n / (R * R) * s.N2;
    B(4, 2) = -n * n / (R * R) * s.H[0];
    B(4, 3) = -n * n / (R * R) * s.H[1];
    B(4, 6) = -n * n / (R * R) * s.H[2];
    B(4, 7) = -n * n / (R * R) * s.H[3];
    // kappa_xtheta = (1/R)(dv/dx + d2w/dxdtheta)   (sin harmonic)
    B(5, 1) = s.N1x / R;
    B(5, 5) = s.N2x / R;
    B(5, 2) = -n / R * s.Hx[0];
    B(5, 3) = -n / R * s.Hx[1];
    B(5, 6) = -n / R * s.Hx[2];
    B(5, 7) = -n / R * s.Hx[3];
    return B;
}

Matrix6 constitutive(const ElementContext& ctx) {
    const double A = ctx.E * ctx.h / (1.0 - ctx.nu * ctx.nu);
    const double D = ctx.E * ctx.h * ctx.h * ctx.h / (12.0 * (1.0 - ctx.nu * ctx.nu));
    Matrix6 C = Matrix6::Zero();
    C(0, 0) = C(1, 1) = A;
    C(0, 1) = C(1, 0) = ctx.nu * A;
    C(2, 2) = 0.5 * (1.0 - ctx.nu) * A;  // G h
    C(3, 3) = C(4, 4) = D;
    C(3, 4) = C(4, 3) = ctx.nu * D;
    C(5, 5) = 2.0 * (1.0 - ctx.nu) * D;  // G h^3 / 3, from gamma = gamma0 - 2 Z kappa
    return C;
}

namespace {

// cos rows integrate to 2 pi at n = 0, the sin rows vanish; for n >= 1 both give pi
void theta_weights(const ElementContext& ctx, double& cos_w, double& sin_w) {
    if (ctx.n == 0) {
        cos_w = 2.0 * kPi;
        sin_w = 0.0;
    } else {
        cos_w = sin_w = kPi;
    }
}

}  // namespace

Matrix8 stiffness(const ElementContext& ctx, int gauss_points) {
    double tc, ts;
    theta_weights(ctx, tc, ts);
    Matrix6 C = constitutive(ctx);
    // fold the analytic theta integration into the constitutive weights; the cos and
    // sin strain groups never couple through C
    for (int i : {0, 1, 3, 4}) C.row(i) *= tc;
    for (int i : {2, 5}) C.row(i) *= ts;

    const GaussRule g = gauss_rule(gauss_points);
    Matrix8 k = Matrix8::Zero();
    for (int i = 0; i < g.count; ++i) {
        const Matrix6x8 B = strain_displacement(g.xi[i], ctx);
        k += g.w[i] * (B.transpose() * C * B);
    }
    k *= ctx.R * 0.5 * ctx.l;
    return 0.5 * (k + Matrix8(k.transpose()));
}

Matrix8 mass(const ElementContext& ctx, int gauss_points) {
    double tc, ts;
    theta_weights(ctx, tc, ts);
    const GaussRule g = gauss_rule(gauss_points);
    Matrix8 m = Matrix8::Zero();
    for (int i = 0; i < g.count; ++i) {
        const ShapeValues s = shape_values(g.xi[i], ctx.l);
        Eigen::Matrix<double, 3, 8> N = Eigen::Matrix<double, 3, 8>::Zero();
        N(0, 0) = s.N1;
        N(0, 4) = s.N2;
        N(1, 1) = s.N1;
        N(1, 5) = s.N2;
        N(2, 2) = s.H[0];
        N(2, 3) = s.H[1];
        N(2, 6) = s.H[2];
        N(2, 7) = s.H[3];
        Eigen::Matrix3d W = Eigen::Vector3d(tc, ts, tc).asDiagonal();
        m += g.w[i] * (N.transpose() * W * N);
    }
    m *= ctx.rho * ctx.h * ctx.R * 0.5 * ctx.l;
    return 0.5 * (m + Matrix8(m.transpose()));
}

Matrix8 geometric_stiffness(const ElementContext& ctx, const Prestress& pre, int gauss_points) {
    double tc, ts;
    theta_weights(ctx, tc, ts);
    const double n = static_cast<double>(ctx.n);
    const GaussRule g = gauss_rule(gauss_points);
    Matrix8 kg = Matrix8::Zero();
    for (int i = 0; i < g.count; ++i) {
        const ShapeValues s = shape_values(g.xi[i], ctx.l);
        Eigen::Matrix<double, 1, 8> Bw = Eigen::Matrix<double, 1, 8>::Zero();
        Eigen::Matrix<double, 1, 8> Bwx = Eigen::Matrix<double, 1, 8>::Zero();
        const int wdof[4] = {2, 3, 6, 7};
        for (int j = 0; j < 4; ++j) {
            Bw(0, wdof[j]) = s.H[j];
            Bwx(0, wdof[j]) = s.Hx[j];
        }
        // the N_xtheta0 cross term integrates to zero over theta for a single harmonic
        kg += g.w[i] * (tc * pre.N_x0 * (Bwx.transpose() * Bwx) +
                        ts * pre.N_theta0 * (n * n / (ctx.R * ctx.R)) * (Bw.transpose() * Bw));
    }
    kg *= ctx.R * 0.5 * ctx.l;
    return 0.5 * (kg + Matrix8(kg.transpose()));
}

Resultants resultant_amplitudes(const Vector8& nodal, double xi, const ElementContext& ctx) {
    const ShapeValues s = shape_values(xi, ctx.l);
    const double n = static_cast<double>(ctx.n);
    const double R = ctx.R;

    const double u = s.N1 * nodal(0) + s.N2 * nodal(4);
    const double ux = s.N1x * nodal(0) + s.N2x * nodal(4);
    const double v = s.N1 * nodal(1) + s.N2 * nodal(5);
    const double vx = s.N1x * nodal(1) + s.N2x * nodal(5);
    const int wdof[4] = {2, 3, 6, 7};
    double w = 0, wx = 0, wxx = 0, wxxx = 0;
    for (int j = 0; j < 4; ++j) {
        w += s.H[j] * nodal(wdof[j]);
        wx += s.Hx[j] * nodal(wdof[j]);
        wxx += s.Hxx[j] * nodal(wdof[j]);
        wxxx += s.Hxxx[j] * nodal(wdof[j]);
    }

    const double A = ctx.E * ctx.h / (1.0 - ctx.nu * ctx.nu);
    const double Gh = ctx.E * ctx.h / (2.0 * (1.0 + ctx.nu));
    const double D = ctx.E * ctx.h * ctx.h * ctx.h / (12.0 * (1.0 - ctx.nu * ctx.nu));
    const double hoop = (n * v - w) / R;  // (1/R)(dv/dtheta - w) amplitude

    Resultants r;
    r.N_x = A * (ux + ctx.nu * hoop);
    r.N_theta = A * (hoop + ctx.nu * ux);
    r.N_xtheta = Gh * (vx - n / R * u);
    const double bend_theta = (n * v - n * n * w) / (R * R);
    r.M_x = -D * (wxx + ctx.nu * bend_theta);
    r.M_theta = -D * (bend_theta + ctx.nu * wxx);
    r.M_xtheta = -D * (1.0 - ctx.nu) / R * (vx - n * wx);
    r.Q_x = -D * (wxxx + ctx.nu * (n * vx - n * n * wx) / (R * R));
    return r;
}

Resultants resultants(const Vector8& nodal, double xi, double theta, const ElementContext& ctx) {
    Resultants r = resultant_amplitudes(nodal, xi, ctx);
    const double c = std::cos(ctx.n * theta);
    const double sn = std::sin(ctx.n * theta);
    r.N_x *= c;
    r.N_theta *= c;
    r.M_x *= c;
    r.M_theta *= c;
    r.Q_x *= c;
    r.N_xtheta *= sn;
    r.M_xtheta *= sn;
    return r;
}

FieldSample sample_field(const Vector8& nodal, const ElementContext& ctx, double x, double theta) {
    if (x < -1e-12 * ctx.l || x > ctx.l * (1.0 + 1e-12))
        throw std::invalid_argument("sample_field: x outside the element");
    const double xi = 2.0 * x / ctx.l - 1.0;
    const ShapeValues s = shape_values(xi, ctx.l);
    const double c = std::cos(ctx.n * theta);
    const double sn = std::sin(ctx.n * theta);
    FieldSample f;
    f.u = (s.N1 * nodal(0) + s.N2 * nodal(4)) * c;
    f.v = (s.N1 * nodal(1) + s.N2 * nodal(5)) * sn;
    const int wdof[4] = {2, 3, 6, 7};
    double w = 0, wx = 0;
    for (int j = 0; j < 4; ++j) {
        w += s.H[j] * nodal(wdof[j]);
        wx += s.Hx[j] * nodal(wdof[j]);
    }
    f.w = w * c;
    f.phi = wx * c;
    return f;
}

}  // namespace cylshell
