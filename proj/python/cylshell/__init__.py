"""Buckling and vibration of circumferentially cracked cylindrical shells.

Thin wrapper over the C++ core: semi-analytical ring-harmonic finite elements
with the crack embedded either through enriched element matrices (conversion)
or a penalty spring set.
"""

from ._core import (
    Crack,
    Geometry,
    Material,
    classical_normalized_load,
    convergence_study,
    critical_load,
    depth_sweep,
    length_sweep,
    natural_frequencies,
    position_sweep,
    preset,
    rotational_spring_stiffness,
    verify_conversion_matrices,
)

__all__ = [
    "Crack",
    "Geometry",
    "Material",
    "classical_normalized_load",
    "convergence_study",
    "critical_load",
    "depth_sweep",
    "length_sweep",
    "natural_frequencies",
    "position_sweep",
    "preset",
    "rotational_spring_stiffness",
    "verify_conversion_matrices",
]
