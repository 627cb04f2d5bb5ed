"""Reduced simplicial homology over an exact field, and multigraded Betti
numbers of toric rings via squarefree divisor complexes.

Homology dimensions come from exact ranks of the boundary maps. Before any
matrix work the complex is simplified by elementary collapses (removing a
free face together with its unique coface), which preserves all reduced
homology and usually shrinks divisor complexes drastically; cones collapse
away completely.
"""

from __future__ import annotations

from .linalg import RATIONALS, PrimeField, Rationals, rank  # noqa: F401  (re-exported)
from .semigroup import divisor_complex
from .simplicial import faces_by_dimension


def _has_cone_point(faces, vertex_bits):
    """True when some vertex completes every face, i.e. the complex is a
    cone and all reduced homology vanishes."""
    for bit in vertex_bits:
        if all((face | bit) in faces for face in faces):
            return True
    return False


def _collapse(faces, vertex_bits):
    """Remove free pairs (face with a unique proper coface) until none remain.

    faces is a set of bitmasks over the vertex universe; downward closed on
    entry and on exit. A face has a unique proper coface iff it has exactly
    one immediate coface, so the scan only looks one dimension up.
    """
    faces = set(faces)
    changed = True
    while changed:
        changed = False
        for face in sorted(faces):
            if face not in faces:
                continue
            count = 0
            coface = None
            for bit in vertex_bits:
                if not face & bit and (face | bit) in faces:
                    count += 1
                    coface = face | bit
                    if count > 1:
                        break
            if count == 1:
                faces.discard(face)
                faces.discard(coface)
                changed = True
    return faces


def _homology_from_masks(faces, vertex_bits, field):
    """Reduced homology dimensions of a downward-closed set of face masks."""
    faces = _collapse(faces, vertex_bits)
    if not faces:
        return {}
    by_dim = {}
    for mask in faces:
        by_dim.setdefault(mask.bit_count() - 1, []).append(mask)
    for lst in by_dim.values():
        lst.sort()
    top = max(by_dim)
    ranks = {-1: 0}
    for d in range(0, top + 1):
        cols = by_dim.get(d, [])
        rows = by_dim.get(d - 1, [])
        index = {f: r for r, f in enumerate(rows)}
        matrix = [[0] * len(cols) for _ in rows]
        for ci, mask in enumerate(cols):
            sign = 1
            m = mask
            while m:
                bit = m & -m
                m ^= bit
                sub = mask ^ bit
                if sub in index:
                    matrix[index[sub]][ci] = sign
                sign = -sign
        ranks[d] = rank(matrix, field)
    ranks[top + 1] = 0
    return {
        d: len(by_dim.get(d, ())) - ranks.get(d, 0) - ranks.get(d + 1, 0)
        for d in range(-1, top + 1)
    }


def _masks_from_complex(c):
    """Full face set of a complex as bitmasks over positions in c.vertices."""
    position = {v: k for k, v in enumerate(c.vertices)}
    faces = set()
    for dim_faces in faces_by_dimension(c).values():
        for f in dim_faces:
            mask = 0
            for v in f:
                mask |= 1 << position[v]
            faces.add(mask)
    bits = tuple(1 << k for k in range(len(c.vertices)))
    return faces, bits


def reduced_homology_dims(c, field=RATIONALS):
    """dim_K of each reduced homology group of c, keyed by dimension.

    Keys run over -1 .. dim(c); the void complex gives {}. The irrelevant
    complex {Ø} has one-dimensional homology in degree -1 and nothing else,
    which is the convention the Betti-number bridge relies on.
    """
    if not c.facets:
        return {}
    top = c.dimension
    faces, bits = _masks_from_complex(c)
    dims = _homology_from_masks(faces, bits, field)
    return {d: dims.get(d, 0) for d in range(-1, top + 1)}


def multigraded_betti(p, a, i, field=RATIONALS):
    """Multigraded Betti number of the toric ring of p at multidegree a.

    Equals the dimension of the (i-1)-st reduced homology of the squarefree
    divisor complex of a. Raises DegreeNotInSemigroup when a is not a
    member.
    """
    c = divisor_complex(p, a)
    return reduced_homology_dims(c, field).get(i - 1, 0)
