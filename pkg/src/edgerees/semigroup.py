"""Affine semigroups of edge rings and Rees rings.

A presentation is an ordered list of distinct exponent vectors of one common
total degree (degree 2 for edge rings). Exponent vectors are plain tuples of
nonnegative ints. Membership is decided by depth-first decomposition over
the generators, branching on the first nonzero coordinate of the residual
and memoizing residuals, so repeated queries against one presentation stay
cheap.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import cone_graph
from .simplicial import simplicial_complex


class DegreeNotInSemigroup(ValueError):
    """The requested multidegree does not belong to the semigroup."""


@dataclass(frozen=True)
class ToricPresentation:
    """Monomial generators of a toric ring, in a fixed canonical order."""

    ambient_dim: int
    generators: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...]

    def __post_init__(self):
        if len(self.labels) != len(self.generators):
            raise ValueError("one label per generator required")
        seen = set()
        degree = None
        for gen in self.generators:
            if len(gen) != self.ambient_dim:
                raise ValueError(f"generator {gen} has wrong dimension")
            if any(x < 0 for x in gen):
                raise ValueError(f"generator {gen} has a negative exponent")
            total = sum(gen)
            if total == 0:
                raise ValueError("zero generator not allowed")
            if degree is None:
                degree = total
            elif total != degree:
                raise ValueError("generators must share one total degree")
            if gen in seen:
                raise ValueError(f"duplicate generator {gen}")
            seen.add(gen)

    @property
    def degree(self):
        """Common total degree of the generators."""
        if not self.generators:
            raise ValueError("empty presentation has no degree")
        return sum(self.generators[0])


def presentation(generators, labels=None, ambient_dim=None):
    """Build a ToricPresentation from raw exponent vectors."""
    gens = tuple(tuple(int(x) for x in g) for g in generators)
    if ambient_dim is None:
        if not gens:
            raise ValueError("ambient_dim required for an empty presentation")
        ambient_dim = len(gens[0])
    if labels is None:
        labels = tuple(f"u{k}" for k in range(1, len(gens) + 1))
    return ToricPresentation(ambient_dim, gens, tuple(labels))


def _edge_vector(i, j, dim):
    vec = [0] * dim
    vec[i - 1] += 1
    vec[j - 1] += 1
    return tuple(vec)


def edge_presentation(g):
    """One degree-2 generator per edge, lexicographic edge order."""
    if not g.edges:
        raise ValueError("graph has no edges")
    edges = sorted(g.edges)
    gens = tuple(_edge_vector(i, j, g.n) for i, j in edges)
    labels = tuple(f"x{i}x{j}" for i, j in edges)
    return ToricPresentation(g.n, gens, labels)


def rees_presentation(g):
    """Edge presentation of the cone graph, u-block (edges of g) first.

    Generators u1..um are the edges of g in lexicographic order, v1..vn the
    cone edges {i, n+1} ordered by i; same generator set as
    edge_presentation(cone_graph(g)), in the block order.
    """
    if not g.edges:
        raise ValueError("graph has no edges")
    cone = cone_graph(g)
    dim = cone.n
    edges = sorted(g.edges)
    gens = [_edge_vector(i, j, dim) for i, j in edges]
    labels = [f"u{k}" for k in range(1, len(edges) + 1)]
    for i in range(1, g.n + 1):
        gens.append(_edge_vector(i, g.n + 1, dim))
        labels.append(f"v{i}")
    return ToricPresentation(dim, tuple(gens), tuple(labels))


def _generators_at_coordinate(p):
    """For each coordinate, the (index, vector) pairs of generators using it."""
    at = [[] for _ in range(p.ambient_dim)]
    for idx, gen in enumerate(p.generators):
        for c, x in enumerate(gen):
            if x:
                at[c].append((idx, gen))
    return at


def membership(p, b, _memo=None):
    """Decompose b as a sum of generators of p, with repetition.

    Returns the witness as a sorted tuple of 1-based generator indices, or
    None when b is not in the semigroup. The zero vector has the empty
    witness. Raises ValueError on an ambient dimension mismatch.
    """
    b = tuple(b)
    if len(b) != p.ambient_dim:
        raise ValueError(f"vector of length {len(b)} against ambient dimension {p.ambient_dim}")
    if any(x < 0 for x in b):
        return None
    total = sum(b)
    if total == 0:
        return ()
    if not p.generators:
        return None
    d = p.degree
    if total % d:
        return None
    max_coord = max(max(gen) for gen in p.generators)
    if max(b) > (total // d) * max_coord:
        return None
    at = _generators_at_coordinate(p)
    memo = {} if _memo is None else _memo

    def decompose(res):
        known = memo.get(res, 0)
        if known != 0:
            return known if known is not False else None
        c = 0
        while not res[c]:
            c += 1
        found = None
        for idx, gen in at[c]:
            nxt = []
            ok = True
            for x, y in zip(res, gen):
                z = x - y
                if z < 0:
                    ok = False
                    break
                nxt.append(z)
            if not ok:
                continue
            nxt = tuple(nxt)
            if sum(nxt) == 0:
                found = (idx,)
                break
            sub = decompose(nxt)
            if sub is not None:
                found = (idx,) + sub
                break
        memo[res] = found if found is not None else False
        return found

    witness = decompose(b)
    if witness is None:
        return None
    return tuple(sorted(idx + 1 for idx in witness))


def in_semigroup(p, b, _memo=None):
    """Membership test without materializing the witness order."""
    return membership(p, b, _memo=_memo) is not None


def enumerate_degree(p, q):
    """The exact set of sums of q generators, with repetition, deduplicated."""
    if q < 1:
        raise ValueError("degree must be at least 1")
    current = {(0,) * p.ambient_dim}
    for _ in range(q):
        nxt = set()
        for a in current:
            for gen in p.generators:
                nxt.add(tuple(x + y for x, y in zip(a, gen)))
        current = nxt
    return current


def _divisor_face_masks(p, a, memo):
    """Faces of the squarefree divisor complex of a, as generator bitmasks.

    Returns (divisor_indices, faces) where divisor_indices are the 0-based
    generators dividing a coordinatewise and faces is a set of bitmasks over
    generator positions. Faces are downward closed, so depth-first extension
    by increasing generator index visits each face exactly once.
    """
    gens = p.generators
    divisors = [k for k, gen in enumerate(gens) if all(x <= y for x, y in zip(gen, a))]
    faces = {0}

    def extend(mask, residual, start):
        for t in range(start, len(divisors)):
            k = divisors[t]
            gen = gens[k]
            nxt = []
            ok = True
            for x, y in zip(residual, gen):
                z = x - y
                if z < 0:
                    ok = False
                    break
                nxt.append(z)
            if not ok:
                continue
            nxt = tuple(nxt)
            if membership(p, nxt, _memo=memo) is None:
                continue
            faces.add(mask | (1 << k))
            extend(mask | (1 << k), nxt, t + 1)

    extend(0, tuple(a), 0)
    return divisors, faces


def divisor_complex(p, a, _memo=None):
    """Squarefree divisor complex of a multidegree a in the semigroup of p.

    Faces are the sets F of generator indices (1-based) whose product
    divides x^a inside the toric ring, i.e. a - sum(F) is again in the
    semigroup. Raises DegreeNotInSemigroup when a itself is not a member.
    """
    a = tuple(a)
    memo = {} if _memo is None else _memo
    if membership(p, a, _memo=memo) is None:
        raise DegreeNotInSemigroup(f"{a} is not in the semigroup")
    divisors, faces = _divisor_face_masks(p, a, memo)
    facets = []
    for mask in faces:
        if any(not mask & (1 << k) and (mask | (1 << k)) in faces for k in divisors):
            continue
        facets.append(tuple(k + 1 for k in divisors if mask & (1 << k)))
    labels = {k + 1: p.labels[k] for k in divisors}
    return simplicial_complex(facets, labels)


def pure_restriction(p, t):
    """Sub-presentation of the generators supported inside the coordinate set t.

    Coordinates are 1-based; the ambient dimension is kept, so restricted
    and unrestricted multidegrees stay directly comparable.
    """
    keep = set(t)
    gens = []
    labels = []
    for gen, label in zip(p.generators, p.labels):
        if all(x == 0 for c, x in enumerate(gen) if c + 1 not in keep):
            gens.append(gen)
            labels.append(label)
    return ToricPresentation(p.ambient_dim, tuple(gens), tuple(labels))
