import numpy as np
import pytest
import scipy.linalg

import generators as gen
from stampfli.errors import DegenerateInputError, InputError
from stampfli.numrange import (
    compress_to_top,
    contains_zero,
    max_numerical_range,
    nr_boundary,
    support_function,
)

FIG1 = np.array([[0, 2 - 1j, 0], [0, 0, 2j], [0, 0, 0]])


def test_support_function_diagonal():
    value, witness = support_function(np.diag([0.0, 1.0]), 0.0)
    assert value == pytest.approx(1.0) and witness == pytest.approx(1.0)
    value, witness = support_function(np.diag([0.0, 1.0]), np.pi)
    assert value == pytest.approx(0.0, abs=1e-15) and abs(witness) <= 1e-15


@pytest.mark.parametrize("theta", [0.0, 0.7, 2.0, -1.3])
def test_support_function_jordan_disk(theta):
    value, witness = support_function([[0, 1], [0, 0]], theta)
    assert value == pytest.approx(0.5, abs=1e-14)
    assert (np.exp(-1j * theta) * witness).real == pytest.approx(0.5, abs=1e-14)


def test_support_matches_brute_force(rng):
    A = gen.crandn(rng, 4, 4)
    xs = gen.crandn(rng, 20000, 4)
    xs /= np.linalg.norm(xs, axis=1, keepdims=True)
    pts = np.einsum("ki,ij,kj->k", xs.conj(), A, xs)
    for theta in np.linspace(0, 2 * np.pi, 9):
        value, _ = support_function(A, theta)
        sampled = np.max((np.exp(-1j * theta) * pts).real)
        assert sampled <= value + 1e-12
        H = 0.5 * (np.exp(-1j * theta) * A + np.exp(1j * theta) * A.conj().T)
        assert value == pytest.approx(scipy.linalg.eigvalsh(H)[-1], abs=1e-12)


def test_nr_boundary_hermitian_is_segment(rng):
    X = gen.crandn(rng, 3, 3)
    H = X + X.conj().T
    region = nr_boundary(H, 64)
    assert np.abs(region.witness_points.imag).max() <= 1e-10
    lo, hi = np.linalg.eigvalsh(H)[[0, -1]]
    assert region.witness_points.real.min() == pytest.approx(lo)
    assert region.witness_points.real.max() == pytest.approx(hi)


def test_nr_boundary_circular_fig1():
    region = nr_boundary(FIG1, 720)
    assert np.ptp(region.support) <= 1e-8


def test_nr_boundary_normal_triangle():
    region = nr_boundary(np.diag([0, 1, 1j]), 720)
    assert region.support_at(0.0) == pytest.approx(1.0)
    assert region.support[0] == pytest.approx(1.0)
    # every witness is in the triangle conv{0, 1, i}
    w = region.witness_points
    assert np.all(w.real >= -1e-12) and np.all(w.imag >= -1e-12) and np.all(w.real + w.imag <= 1 + 1e-12)


def test_nr_boundary_needs_16_angles():
    with pytest.raises(InputError):
        nr_boundary(np.eye(2), 15)


def test_bounding_box():
    box = nr_boundary(np.diag([0, 1, 1j]), 360).bounding_box()
    np.testing.assert_allclose(box, (0, 1, 0, 1), atol=1e-12)


def test_compress_jordan():
    comp = compress_to_top([[0, 1], [0, 0]])
    assert comp.subspace_dim == 1
    assert comp.top_value == pytest.approx(1.0)
    assert abs(comp.B[0, 0]) <= 1e-15
    assert abs(abs(comp.basis[1, 0]) - 1) <= 1e-15


def test_compress_diag():
    comp = compress_to_top(np.diag([2.0, -2.0, 1.0]))
    assert comp.subspace_dim == 2
    assert sorted(np.linalg.eigvalsh(comp.B).tolist()) == pytest.approx([-2, 2])


def test_compress_identity_and_zero():
    assert compress_to_top(np.eye(4)).subspace_dim == 4
    with pytest.raises(DegenerateInputError):
        compress_to_top(np.zeros((2, 2)))


def test_max_numerical_range_segment():
    region = max_numerical_range(np.diag([2.0, -2.0, 1.0]), 64)
    assert region.support_at(0.0) == pytest.approx(2.0)
    assert region.support_at(np.pi) == pytest.approx(2.0)
    assert np.abs(region.witness_points.imag).max() <= 1e-12


def test_contains_zero_examples():
    member, margin = contains_zero(max_numerical_range([[0, 1], [0, 0]], 64))
    assert member and margin == 0.0
    disk = nr_boundary(2 * np.eye(2) + np.array([[0, 2], [0, 0]]), 720)
    member, margin = contains_zero(disk)
    assert not member and margin == pytest.approx(-1.0)
    member, margin = contains_zero(max_numerical_range(np.diag([2.0, -2.0, 1.0]), 64))
    assert member and abs(margin) <= 1e-12
