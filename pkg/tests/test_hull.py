import pytest

from stampfli.hull import hull_distance, hull_vertices


def test_hull_vertices_drop_interior_and_collinear():
    pts = [0, 2, 2 + 2j, 2j, 1 + 1j, 1]
    assert hull_vertices(pts) == [0, 2, 2 + 2j, 2j]
    assert hull_vertices([1j, 1j]) == [1j]
    assert hull_vertices([0, 1, 2]) == [0, 2]


def test_hull_distance_signs():
    tri = [2 + 1j, 1j, -5]
    assert hull_distance(0.5 + 0.8j, tri) > 0
    assert hull_distance(3, tri) == pytest.approx(-2 ** 0.5)
    assert hull_distance(2 + 1j, tri) == 0
    assert hull_distance(0.5, [0, 1]) == 0
    assert hull_distance(1j, [0]) == -1
