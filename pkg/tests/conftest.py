import numpy as np
import pytest

from remeshx import Mesh

# Frozen letter-to-coordinate assignment for the worked 10-vertex / 4-triangle
# example; lexicographic order matches A < B < C < D < E < F.
A, B, C, D, E, F = (0, 0), (0, 1), (0, 2), (0, 3), (0, 4), (0, 5)
X, Y = (9, 9), (8, 8)

WORKED_VERTICES = [A, B, C, X, D, C, E, F, Y, D]
WORKED_ELEMENTS = [(0, 1, 2), (0, 2, 4), (5, 6, 7), (5, 7, 9)]


@pytest.fixture
def worked_mesh():
    """10 vertices (2 duplicates, 2 unused) and 4 triangles."""
    return Mesh(np.array(WORKED_VERTICES, np.float32),
                np.array(WORKED_ELEMENTS, np.uint32))


def vtx(*rows):
    return np.array(rows, np.float32)


def elems(*rows):
    return np.array(rows, np.uint32)
