"""Abstract simplicial complexes given by their facets.

A complex is stored as its list of maximal faces over an ordered vertex set.
Two degenerate states are kept distinguishable: the void complex (no faces
at all, facets == ()) and the irrelevant complex {Ø} (facets == ((),)).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[int, ...]
    labels: tuple[str, ...]
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.vertices) != len(self.labels):
            raise ValueError("one label per vertex required")
        vset = set(self.vertices)
        fsets = [set(f) for f in self.facets]
        for f in fsets:
            if not f <= vset:
                raise ValueError("facet uses a vertex outside the vertex set")
        for a in fsets:
            for b in fsets:
                if a is not b and a <= b:
                    raise ValueError("facets must be pairwise incomparable")

    @property
    def dimension(self):
        """Max face dimension; -1 for {Ø}, None for the void complex."""
        if not self.facets:
            return None
        return max(len(f) for f in self.facets) - 1


def simplicial_complex(faces, labels=None):
    """Normalize any collection of faces into a complex via its maximal faces.

    labels may be a dict vertex -> name; unnamed vertices print as themselves.
    """
    cleaned = {tuple(sorted(set(f))) for f in faces}
    maximal = [f for f in cleaned if not any(f != g and set(f) <= set(g) for g in cleaned)]
    maximal.sort()
    vertices = tuple(sorted({v for f in maximal for v in f}))
    if labels is None:
        label_tuple = tuple(str(v) for v in vertices)
    else:
        label_tuple = tuple(str(labels.get(v, v)) for v in vertices)
    return SimplicialComplex(vertices, label_tuple, tuple(maximal))


def faces_by_dimension(c):
    """All faces grouped by dimension, each list sorted lexicographically.

    The empty face sits at dimension -1; the void complex gives {}.
    """
    if not c.facets:
        return {}
    faces = set()
    for facet in c.facets:
        for k in range(len(facet) + 1):
            faces.update(combinations(facet, k))
    by_dim = {}
    for f in faces:
        by_dim.setdefault(len(f) - 1, []).append(f)
    for lst in by_dim.values():
        lst.sort()
    return by_dim


def boundary_matrix(c, i):
    """Integer matrix of the boundary map from i-faces to (i-1)-faces.

    Rows are indexed by the sorted (i-1)-faces, columns by the sorted
    i-faces, with the usual alternating signs; i = 0 gives the augmentation
    row onto the empty face.
    """
    faces = faces_by_dimension(c)
    return _boundary(faces, i)


def _boundary(faces, i):
    cols = faces.get(i, [])
    rows = faces.get(i - 1, [])
    index = {f: r for r, f in enumerate(rows)}
    matrix = [[0] * len(cols) for _ in rows]
    for ci, f in enumerate(cols):
        for j in range(len(f)):
            sub = f[:j] + f[j + 1:]
            matrix[index[sub]][ci] = -1 if j % 2 else 1
    return matrix
