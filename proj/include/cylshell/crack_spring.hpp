#pragma once

#include "cylshell/model.hpp"

namespace cylshell {

/// Rotational stiffness of the line spring standing in for the crack.
/// `total` is the stiffness of the whole circumferential spring [N m / rad];
/// the intact shell (a = 0) is the distinguished infinite-stiffness state and is
/// handled analytically downstream, never as a huge float.
struct SpringStiffness {
    bool intact = true;
    double total = 0.0;

    static SpringStiffness Intact() { return {}; }
    static SpringStiffness Finite(double k) { return {false, k}; }

    /// Stiffness per unit circumferential length [N m / (rad m) = N], the form the
    /// continuity conditions and conversion matrices consume.
    double per_length(double circumference) const { return total / circumference; }
};

/// Boundary-correction factor F_M of the shallow-crack stress-intensity correlation,
/// valid for depth ratios mu in [0, 0.6]. The removable singularity at mu = 0 is
/// evaluated by its limit.
double shape_factor(double mu);

/// Ratio K_I / M_x of the stress intensity factor to the bending moment at crack
/// depth a, piecewise across the mu = 0.6 correlation switch (left branch closed).
double sif_per_moment(double a, const ShellGeometry& geometry);

/// Integrates the compliance of the part-through crack to the rotational spring
/// stiffness, by adaptive quadrature to 1e-10 relative. Shallow cracks
/// (a/h <= 0.6) integrate the boundary-corrected shallow correlation; deeper
/// cracks use the deep-crack correlation over the whole depth range, which keeps
/// the stiffness consistent with published deep-crack reference results.
SpringStiffness rotational_stiffness(const CrackSpec& crack, const ShellGeometry& geometry,
                                     const Material& material);

}  // namespace cylshell
