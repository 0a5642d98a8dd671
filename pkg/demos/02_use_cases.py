"""The three composition operations built on re-indexing: merging meshes that
share vertices, rebuilding a mesh from a triangle soup, and extracting a
compact subset."""
import numpy as np

import remeshx as rx


def unit_quad(x0, y0):
    """A quad with its own four vertices; neighbors replicate shared corners."""
    corners = [(x0, y0), (x0 + 1, y0), (x0 + 1, y0 + 1), (x0, y0 + 1)]
    return rx.Mesh(np.array(corners, np.float32),
                   np.array([(0, 1, 2, 3)], np.uint32))


# --- merging: concatenate, offset indices, re-index -------------------------
row = [unit_quad(x, 0) for x in range(4)]
merged = rx.merge(row)
print("merge: 4 quads x 4 vertices =", sum(m.n_vertices for m in row), "in,",
      merged.n_vertices, "out (shared edges welded)")

# --- soup to mesh: value-carrying elements -> shared indexing ---------------
soup = np.array([
    [[0, 0], [1, 0], [0, 1]],
    [[1, 0], [1, 1], [0, 1]],   # shares an edge with the first triangle
], np.float32)
from_soup = rx.soup_to_mesh(soup)
print("soup_to_mesh:", soup.shape[0] * soup.shape[1], "fat vertices in,",
      from_soup.n_vertices, "out")
print("round trip exact:", rx.soups_equal(rx.dereference(from_soup), soup))

# --- subset: keep some elements, drop what becomes unused -------------------
grid = rx.grid_quads(4)
left_half = rx.subset(grid, np.arange(grid.n_elements) % 4 < 2)
print("subset: kept", left_half.n_elements, "of", grid.n_elements, "quads,",
      left_half.n_vertices, "vertices remain (no unused ones)")
