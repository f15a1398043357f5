#pragma once

#include <Eigen/Dense>
#include <array>

#include "cylshell/model.hpp"

namespace cylshell {

using Matrix8 = Eigen::Matrix<double, 8, 8>;
using Vector8 = Eigen::Matrix<double, 8, 1>;
using Matrix6x8 = Eigen::Matrix<double, 6, 8>;
using Matrix6 = Eigen::Matrix<double, 6, 6>;

/// Everything a single ring-harmonic element evaluation needs. DOF order per node
/// is (u, v, w, phi) with phi = dw/dx; element vector [u1 v1 w1 phi1 u2 v2 w2 phi2].
struct ElementContext {
    double l;  // element length
    double R;  // mid-surface radius
    double h;  // wall thickness
    int n;     // circumferential mode number
    double E;
    double nu;
    double rho;

    static ElementContext make(double l, const ShellGeometry& geometry,
                               const Material& material, int n);
    /// Same element truncated/extended to a new length (for crack sub-elements).
    ElementContext with_length(double new_l) const;
    /// Analytic theta-integration factor: pi for n >= 1, 2 pi for the axisymmetric mode.
    double theta_factor() const;
};

/// Membrane force resultants of the pre-buckled state, per unit length of
/// circumference. Compression along the axis is N_x0 < 0.
struct Prestress {
    double N_x0 = 0.0;
    double N_theta0 = 0.0;
    double N_xtheta0 = 0.0;
};

/// Lagrange pair and Hermite quadruple at local coordinate xi in [-1, 1], with
/// x-derivatives up to third order (the cubic's third derivative is constant).
struct ShapeValues {
    double N1, N2;
    double N1x, N2x;
    std::array<double, 4> H;
    std::array<double, 4> Hx;
    std::array<double, 4> Hxx;
    std::array<double, 4> Hxxx;
};

ShapeValues shape_values(double xi, double l);

/// Strain-displacement matrix, rows (eps_x0, eps_theta0, gamma_xtheta0, kappa_x,
/// kappa_theta, kappa_xtheta). Harmonic cos/sin factors are not baked in; they are
/// reduced analytically in the theta integration.
Matrix6x8 strain_displacement(double xi, const ElementContext& ctx);

/// 6x6 constitutive matrix coupling the membrane, shear, bending and twist rows.
Matrix6 constitutive(const ElementContext& ctx);

Matrix8 stiffness(const ElementContext& ctx, int gauss_points = 3);
Matrix8 mass(const ElementContext& ctx, int gauss_points = 3);
Matrix8 geometric_stiffness(const ElementContext& ctx, const Prestress& pre,
                            int gauss_points = 3);

/// Harmonic amplitudes of the stress resultants at local xi.
struct Resultants {
    double N_x, N_theta, N_xtheta;
    double M_x, M_theta, M_xtheta;
    double Q_x;  // dM_x/dx, torsional-moment contribution neglected
};

/// Amplitude form of the resultants (theta factors stripped).
Resultants resultant_amplitudes(const Vector8& nodal, double xi, const ElementContext& ctx);

/// Physical resultants at (xi, theta) including the harmonic factors.
Resultants resultants(const Vector8& nodal, double xi, double theta, const ElementContext& ctx);

struct FieldSample {
    double u, v, w, phi;
};

/// Displacement field at element coordinate x in [0, l] and circumferential angle
/// theta; u, w, phi carry cos(n theta), v carries sin(n theta).
FieldSample sample_field(const Vector8& nodal, const ElementContext& ctx, double x, double theta);

}  // namespace cylshell
