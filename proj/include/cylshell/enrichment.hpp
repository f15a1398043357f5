#pragma once

#include "cylshell/crack_spring.hpp"
#include "cylshell/element.hpp"

namespace cylshell {

/// Conversion matrices mapping the main-node vector [u1 v1 w1 phi1 u4 v4 w4 phi4]
/// to the top/bottom sub-element vectors of the crack-split element.
struct ConversionPair {
    Matrix8 C_T;
    Matrix8 C_B;
};

/// Closed-form conversion matrices. INTACT is handled by the analytic k -> inf
/// limit of every entry.
ConversionPair conversion_matrices(double x0, double l, const ElementContext& ctx,
                                   const SpringStiffness& ks);

/// Independent route to the same matrices: assembles the eight continuity
/// conditions at the crack plane (displacement matching, N_x / N_xtheta / M_x / Q_x
/// matching, spring rotation jump phi2 - phi3 = M_x / k) as a linear system in the
/// middle-node DOFs and solves it column by column. This is the validation oracle
/// for the closed forms and the authoritative source where they disagree.
ConversionPair continuity_oracle(double x0, double l, const ElementContext& ctx,
                                 const SpringStiffness& ks);

/// Enriched stiffness of the cracked element (congruence transform of the two
/// sub-element stiffnesses plus the rotational spring term). For INTACT the pair
/// already encodes phi2 = phi3 and the spring term vanishes.
Matrix8 cracked_stiffness(double x0, double l, const ElementContext& ctx,
                          const SpringStiffness& ks, const ConversionPair& pair,
                          int gauss_points = 3);

Matrix8 cracked_geometric_stiffness(double x0, double l, const ElementContext& ctx,
                                    const Prestress& pre, const ConversionPair& pair,
                                    int gauss_points = 3);

/// Zero-length crack element between the duplicated nodes: three translational
/// penalty springs plus the rotational crack spring, DOF order (u v w phi)_left
/// then (u v w phi)_right.
struct SpringSetParams {
    double k_u;
    double k_v;
    double k_w;
    double k_rot;
};

Matrix8 spring_set_stiffness(const SpringSetParams& params);

/// Scale-aware parameter choice: translational penalties alpha times the largest
/// matching diagonal of the two adjacent element stiffness matrices; the rotational
/// entry carries the crack spring in the assembled-energy convention (or a penalty
/// of its own when intact).
SpringSetParams spring_set_params(const Matrix8& k_left, const Matrix8& k_right,
                                  const SpringStiffness& ks, const ElementContext& ctx,
                                  double alpha);

/// Rotational spring coefficient in the same theta-reduced energy convention as the
/// element matrices: stiffness per unit length times (theta factor) * R.
double spring_energy_coefficient(const SpringStiffness& ks, const ElementContext& ctx);

}  // namespace cylshell
