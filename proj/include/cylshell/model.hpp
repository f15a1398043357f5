#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cylshell {

/// Mid-surface geometry of the cylinder. All lengths in metres.
struct ShellGeometry {
    double R;  // mid-surface radius
    double h;  // wall thickness
    double L;  // cylinder length

    void validate() const;
    double circumference() const { return 2.0 * 3.14159265358979323846 * R; }
    bool thin_shell() const { return h / R <= 0.05; }
};

struct Material {
    double E;    // Young's modulus [Pa]
    double nu;   // Poisson ratio
    double rho;  // density [kg/m^3]

    void validate() const;
};

/// Circumferential part-through crack: depth a through the wall, crack plane at x_c.
struct CrackSpec {
    double a;    // crack depth [m], 0 <= a < h
    double x_c;  // axial position of the crack plane [m]

    void validate(const ShellGeometry& geometry) const;
    double depth_ratio(const ShellGeometry& geometry) const { return a / geometry.h; }
};

/// Constants derived from geometry + material.
struct DerivedParams {
    double D;        // flexural rigidity E h^3 / (12 (1 - nu^2)) [N m]
    double b;        // circumference 2 pi R [m]
    double m_param;  // shell parameter 12 (1 - nu^2) / (R^2 h^2) [1/m^2]
};

DerivedParams derived_params(const ShellGeometry& geometry, const Material& material);

enum class Technique { conversion, spring_set };

std::string to_string(Technique t);
Technique technique_from_string(const std::string& s);

/// 1-D axial element layout. For the conversion technique the crack sits strictly
/// inside one element at local offset x0; for the spring set the crack plane is a
/// duplicated node pair and a zero-length crack element is inserted between them.
struct Mesh {
    std::vector<double> element_lengths;  // shell elements only, ordered along x
    Technique technique = Technique::conversion;
    bool intact = true;       // a == 0: downstream uses standard elements throughout
    int crack_element = -1;   // conversion: element containing the crack
    double crack_offset = 0;  // conversion: local offset x0 inside that element
    int crack_interface = -1;  // spring set: left node index of the duplicated pair
    int node_count = 0;

    int element_count() const { return static_cast<int>(element_lengths.size()); }
    double length() const;
    /// Axial coordinate of the start of element e.
    double element_start(int e) const;
    /// Global node indices (left, right) of shell element e.
    std::pair<int, int> element_nodes(int e) const;
};

/// Lays out a near-uniform mesh honouring the crack placement rules above.
/// With no crack (or a = 0) the mesh is uniform and flagged intact.
Mesh build_mesh(const ShellGeometry& geometry, const std::optional<CrackSpec>& crack,
                int n_elements, Technique technique);

/// Explicit element lengths (must sum to L); crack placement rules as build_mesh.
Mesh build_mesh(const ShellGeometry& geometry, const std::optional<CrackSpec>& crack,
                const std::vector<double>& element_lengths, Technique technique);

/// Bundle handed to the analysis drivers.
struct ShellModel {
    ShellGeometry geometry;
    Material material;
    std::optional<CrackSpec> crack;

    void validate() const;
    bool cracked() const { return crack && crack->a > 0.0; }
};

}  // namespace cylshell
