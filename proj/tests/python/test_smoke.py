"""Smoke tests for the python bindings."""

import math

import pytest

import cylshell


@pytest.fixture(scope="module")
def benchmark():
    preset = cylshell.preset("table1")
    return preset["geometry"], preset["material"], preset["crack"]


def test_preset_exposes_the_benchmark_setup(benchmark):
    geometry, material, crack = benchmark
    assert geometry.h == pytest.approx(0.2)
    assert geometry.L == pytest.approx(5.0 * math.pi)
    assert material.nu == pytest.approx(0.3)
    assert crack.a == pytest.approx(0.1)
    with pytest.raises(Exception):
        cylshell.preset("not-a-preset")


def test_classical_load_is_two_on_the_benchmark(benchmark):
    geometry, material, _ = benchmark
    assert cylshell.classical_normalized_load(geometry, material) == pytest.approx(2.0)


def test_invalid_inputs_raise():
    with pytest.raises(ValueError):
        cylshell.Geometry(R=-1.0, h=0.1, L=1.0)
    with pytest.raises(ValueError):
        cylshell.Material(E=200e9, nu=0.7)


def test_critical_load_of_the_cracked_shell(benchmark):
    geometry, material, crack = benchmark
    intact = cylshell.critical_load(geometry, material, n_elements=11, n_last=8)
    cracked = cylshell.critical_load(geometry, material, crack, n_elements=11, n_last=8)
    assert not intact.errors
    assert len(intact.rows) == 8
    assert intact.minimum.normalized == pytest.approx(2.0, rel=0.03)
    assert cracked.minimum.normalized < intact.minimum.normalized
    assert cracked.minimum.load_factor > 0.0
    # spring-set route reaches the same answer
    spring = cylshell.critical_load(
        geometry, material, crack, n_elements=11, n_last=8, technique="spring_set"
    )
    assert spring.minimum.normalized == pytest.approx(
        cracked.minimum.normalized, rel=0.02
    )


def test_natural_frequencies(benchmark):
    geometry, material, crack = benchmark
    rows = cylshell.natural_frequencies(
        geometry, material, crack, n_elements=11, n_list=[1], count=2
    )
    assert len(rows) == 2
    assert 0.0 < rows[0].Omega < rows[1].Omega
    assert rows[0].omega > 0.0


def test_depth_sweep_is_monotone(benchmark):
    geometry, material, _ = benchmark
    rows = cylshell.depth_sweep(
        geometry, material, x_c=geometry.L / 2, depth_ratios=[0.0, 0.5, 0.9],
        n_elements=11, n_last=8,
    )
    values = [r.normalized for r in rows]
    assert values[0] > values[1] > values[2]
    assert rows[0].ratio == pytest.approx(1.0)


def test_spring_stiffness_decreases_with_depth(benchmark):
    geometry, material, _ = benchmark
    shallow = cylshell.rotational_spring_stiffness(geometry, material, a=0.2 * geometry.h)
    deep = cylshell.rotational_spring_stiffness(geometry, material, a=0.8 * geometry.h)
    assert shallow > deep > 0.0


def test_conversion_matrices_verify(benchmark):
    geometry, material, _ = benchmark
    worst, above = cylshell.verify_conversion_matrices(geometry, material)
    assert worst < 1e-8
    assert above == 0
