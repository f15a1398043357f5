#include "cylshell/model.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace cylshell {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

void ShellGeometry::validate() const {
    if (!(R > 0.0) || !(h > 0.0) || !(L > 0.0))
        throw std::invalid_argument("shell geometry: R, h, L must be positive");
    if (!(h < R))
        throw std::invalid_argument("shell geometry: thin-shell assumption requires h < R");
}

void Material::validate() const {
    if (!(E > 0.0)) throw std::invalid_argument("material: E must be positive");
    if (!(nu >= 0.0 && nu < 0.5)) throw std::invalid_argument("material: nu must lie in [0, 0.5)");
    if (!(rho > 0.0)) throw std::invalid_argument("material: rho must be positive");
}

void CrackSpec::validate(const ShellGeometry& geometry) const {
    if (!(a >= 0.0) || !(a < geometry.h))
        throw std::invalid_argument("crack: depth ratio a/h must lie in [0, 1)");
    if (!(x_c > 0.0 && x_c < geometry.L))
        throw std::invalid_argument("crack: position x_c must lie strictly inside (0, L)");
}

void ShellModel::validate() const {
    geometry.validate();
    material.validate();
    if (crack) crack->validate(geometry);
}

DerivedParams derived_params(const ShellGeometry& geometry, const Material& material) {
    DerivedParams p;
    const double om = 1.0 - material.nu * material.nu;
    p.D = material.E * geometry.h * geometry.h * geometry.h / (12.0 * om);
    p.b = 2.0 * kPi * geometry.R;
    p.m_param = 12.0 * om / (geometry.R * geometry.R * geometry.h * geometry.h);
    return p;
}

std::string to_string(Technique t) {
    return t == Technique::conversion ? "conversion" : "spring_set";
}

Technique technique_from_string(const std::string& s) {
    if (s == "conversion") return Technique::conversion;
    if (s == "spring_set") return Technique::spring_set;
    throw std::invalid_argument("unknown technique: " + s);
}

double Mesh::length() const {
    return std::accumulate(element_lengths.begin(), element_lengths.end(), 0.0);
}

double Mesh::element_start(int e) const {
    double x = 0.0;
    for (int i = 0; i < e; ++i) x += element_lengths[i];
    return x;
}

std::pair<int, int> Mesh::element_nodes(int e) const {
    if (technique == Technique::spring_set && !intact && e > crack_interface - 1) {
        // the duplicated node shifts everything downstream by one
        return {e + 1, e + 2};
    }
    return {e, e + 1};
}

namespace {

Mesh layout_from_lengths(const ShellGeometry& geometry, const std::optional<CrackSpec>& crack,
                         std::vector<double> lengths, Technique technique) {
    const double L = geometry.L;
    const double total = std::accumulate(lengths.begin(), lengths.end(), 0.0);
    if (std::abs(total - L) > 1e-12 * L)
        throw std::invalid_argument("mesh: element lengths must sum to the cylinder length");

    Mesh mesh;
    mesh.technique = technique;
    mesh.element_lengths = std::move(lengths);

    if (!crack || crack->a == 0.0) {
        mesh.intact = true;
        mesh.node_count = mesh.element_count() + 1;
        if (crack) {
            // keep the location so mode-shape export still knows where the plane is
            mesh.crack_element = -1;
        }
        return mesh;
    }

    crack->validate(geometry);
    mesh.intact = false;
    const double x_c = crack->x_c;

    if (technique == Technique::conversion) {
        // find the element containing x_c; shift an offending boundary by l/2
        const double tol = 1e-9 * L;
        double x = 0.0;
        for (int e = 0; e < mesh.element_count(); ++e) {
            const double l = mesh.element_lengths[e];
            const double x_end = x + l;
            if (std::abs(x_c - x_end) < tol && e + 1 < mesh.element_count()) {
                // crack plane sits on an interior node: move the boundary right by l/2
                mesh.element_lengths[e] += 0.5 * mesh.element_lengths[e + 1];
                mesh.element_lengths[e + 1] *= 0.5;
                mesh.crack_element = e;
                mesh.crack_offset = x_c - x;
                break;
            }
            if (x_c > x + tol && x_c < x_end - tol) {
                mesh.crack_element = e;
                mesh.crack_offset = x_c - x;
                break;
            }
            x = x_end;
        }
        if (mesh.crack_element < 0)
            throw std::invalid_argument("mesh: could not isolate the crack inside an element");
        mesh.node_count = mesh.element_count() + 1;
    } else {
        // spring set: a node must sit exactly at x_c; split the containing element if needed
        const double tol = 1e-9 * L;
        double x = 0.0;
        int iface = -1;
        for (int e = 0; e < mesh.element_count(); ++e) {
            const double x_end = x + mesh.element_lengths[e];
            if (std::abs(x_c - x_end) < tol) {
                iface = e + 1;
                break;
            }
            if (x_c < x_end - tol) {
                const double left = x_c - x;
                const double right = x_end - x_c;
                mesh.element_lengths[e] = left;
                mesh.element_lengths.insert(mesh.element_lengths.begin() + e + 1, right);
                iface = e + 1;
                break;
            }
            x = x_end;
        }
        if (iface <= 0 || iface >= mesh.element_count() + 1)
            throw std::invalid_argument("mesh: crack position outside (0, L)");
        mesh.crack_interface = iface;
        mesh.node_count = mesh.element_count() + 2;  // one duplicated pair
    }
    return mesh;
}

}  // namespace

Mesh build_mesh(const ShellGeometry& geometry, const std::optional<CrackSpec>& crack,
                int n_elements, Technique technique) {
    geometry.validate();
    if (n_elements < 3)
        throw std::invalid_argument("mesh: need at least 3 elements to isolate the crack");
    std::vector<double> lengths(static_cast<size_t>(n_elements), geometry.L / n_elements);
    // make the lengths sum to L exactly
    double acc = 0.0;
    for (size_t i = 0; i + 1 < lengths.size(); ++i) acc += lengths[i];
    lengths.back() = geometry.L - acc;

    if (crack && crack->a > 0.0 && technique == Technique::spring_set) {
        // keep the requested element count: split [0, x_c] / [x_c, L] near-uniformly
        crack->validate(geometry);
        const double x_c = crack->x_c;
        int n_left = static_cast<int>(std::lround(n_elements * x_c / geometry.L));
        n_left = std::max(1, std::min(n_elements - 1, n_left));
        const int n_right = n_elements - n_left;
        lengths.assign(static_cast<size_t>(n_left), x_c / n_left);
        for (int i = 0; i < n_right; ++i) lengths.push_back((geometry.L - x_c) / n_right);
    }
    return layout_from_lengths(geometry, crack, std::move(lengths), technique);
}

Mesh build_mesh(const ShellGeometry& geometry, const std::optional<CrackSpec>& crack,
                const std::vector<double>& element_lengths, Technique technique) {
    geometry.validate();
    if (element_lengths.size() < 3)
        throw std::invalid_argument("mesh: need at least 3 elements to isolate the crack");
    return layout_from_lengths(geometry, crack, element_lengths, technique);
}

}  // namespace cylshell
