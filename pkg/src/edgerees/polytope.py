"""Edge polytopes of connected non-bipartite graphs.

The facet system is assembled combinatorially: a coordinate hyperplane for
every regular vertex and one supporting inequality per fundamental
independent set. The polytope sits in the hyperplane sum(z) = 2, so the
q-th dilation is cut out by sum(z) = 2q together with the same homogeneous
inequalities; its relative interior is where every facet inequality is
strict. Every inequality here has coefficients in {-1, 0, 1}.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import connected_components, induced_subgraph, is_bipartite
from .linalg import rank
from .semigroup import edge_presentation


class UnsupportedGraph(ValueError):
    """The combinatorial facet description needs a connected non-bipartite graph."""


@dataclass(frozen=True)
class FacetInequality:
    """One supporting inequality coeffs . z >= 0 with its combinatorial origin.

    kind is "regular_vertex" (data = the vertex i, inequality z_i >= 0) or
    "fundamental" (data = the independent set T, inequality
    sum over N(T) minus sum over T >= 0).
    """

    coeffs: tuple[int, ...]
    kind: str
    data: object


@dataclass(frozen=True)
class FacetSystem:
    ambient_dim: int
    affine_rhs: int
    inequalities: tuple[FacetInequality, ...]


def _require_connected_nonbipartite(g):
    comps = connected_components(g)
    if len(comps) != 1:
        raise UnsupportedGraph("graph must be connected")
    ok, _ = is_bipartite(g, comps[0])
    if ok:
        raise UnsupportedGraph("graph must be non-bipartite")


def _all_components_nonbipartite(g, vertices):
    """True when every component of the induced subgraph on vertices is
    non-bipartite; vacuously true on the empty set."""
    if not vertices:
        return True
    sub, _ = induced_subgraph(g, vertices)
    for comp in connected_components(sub):
        two_colorable, _ = is_bipartite(sub, comp)
        if two_colorable:
            return False
    return True


def regular_vertices(g):
    """Vertices whose removal leaves only non-bipartite components."""
    _require_connected_nonbipartite(g)
    out = []
    for i in range(1, g.n + 1):
        rest = [v for v in range(1, g.n + 1) if v != i]
        if _all_components_nonbipartite(g, rest):
            out.append(i)
    return out


def _neighbor_sets(g):
    nb = {v: set() for v in range(1, g.n + 1)}
    for i, j in g.edges:
        nb[i].add(j)
        nb[j].add(i)
    return nb


def fundamental_sets(g):
    """All fundamental independent sets, as sorted tuples.

    T is fundamental when the bipartite graph between T and its neighborhood
    is connected and the rest of the graph either vanishes or has only
    non-bipartite components. Enumeration is exhaustive over independent
    sets, practical for graphs up to ~22 vertices.
    """
    _require_connected_nonbipartite(g)
    nb = _neighbor_sets(g)
    found = []

    def consider(t):
        neighborhood = set()
        for v in t:
            neighborhood |= nb[v]
        # connectivity of the bipartite link on T and N(T)
        start = t[0]
        seen = {start}
        stack = [start]
        tset = set(t)
        while stack:
            v = stack.pop()
            if v in tset:
                reachable = nb[v]
            else:
                reachable = nb[v] & tset
            for u in reachable:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        if seen != tset | neighborhood:
            return
        rest = [v for v in range(1, g.n + 1) if v not in tset and v not in neighborhood]
        if _all_components_nonbipartite(g, rest):
            found.append(t)

    def extend(t, next_start, blocked):
        for v in range(next_start, g.n + 1):
            if v in blocked:
                continue
            chosen = t + (v,)
            consider(chosen)
            extend(chosen, v + 1, blocked | nb[v])

    extend((), 1, set())
    found.sort()
    return found


def facet_system(g):
    """Supporting inequalities of the edge polytope of g, with provenance.

    Emits z_i >= 0 for every regular vertex i and the neighborhood-minus-set
    inequality for every fundamental T, deduplicated by coefficient vector.
    Every generator exponent vector must satisfy every inequality and every
    inequality must be tight somewhere; violations raise RuntimeError since
    they would falsify the combinatorial facet description.
    """
    nb = _neighbor_sets(g)
    inequalities = []
    seen = set()
    for i in regular_vertices(g):
        coeffs = tuple(1 if v == i else 0 for v in range(1, g.n + 1))
        if coeffs not in seen:
            seen.add(coeffs)
            inequalities.append(FacetInequality(coeffs, "regular_vertex", i))
    for t in fundamental_sets(g):
        neighborhood = set()
        for v in t:
            neighborhood |= nb[v]
        vec = [0] * g.n
        for v in neighborhood:
            vec[v - 1] = 1
        for v in t:
            vec[v - 1] = -1
        coeffs = tuple(vec)
        if coeffs not in seen:
            seen.add(coeffs)
            inequalities.append(FacetInequality(coeffs, "fundamental", t))
    points = edge_presentation(g).generators
    for ineq in inequalities:
        values = [sum(c * x for c, x in zip(ineq.coeffs, pt)) for pt in points]
        if any(v < 0 for v in values):
            raise RuntimeError(f"inequality {ineq} violated by a generator")
        if all(v > 0 for v in values):
            raise RuntimeError(f"inequality {ineq} is not supporting")
    return FacetSystem(g.n, 2, tuple(inequalities))


def dilation_points(fs, q, strict=False, limit=None):
    """Integer points of the q-th dilation, or of its relative interior.

    Enumerated depth-first over coordinates inside the box [0, q]^d on the
    hyperplane sum(z) = q * affine_rhs, pruning with running sums and with
    per-inequality bounds; points are returned sorted. A limit stops the
    search early (used for pure nonemptiness queries).
    """
    if q < 1:
        raise ValueError("dilation factor must be at least 1")
    d = fs.ambient_dim
    total = q * fs.affine_rhs
    threshold = 1 if strict else 0
    lows = [0] * d
    if strict:
        for ineq in fs.inequalities:
            if ineq.kind == "regular_vertex":
                lows[ineq.data - 1] = 1
    ineqs = [ineq.coeffs for ineq in fs.inequalities]
    # suffix data for pruning: positive-coefficient counts and low-sum tails
    pos_after = [[0] * (d + 1) for _ in ineqs]
    for k, coeffs in enumerate(ineqs):
        for c in range(d - 1, -1, -1):
            pos_after[k][c] = pos_after[k][c + 1] + (1 if coeffs[c] > 0 else 0)
    low_after = [0] * (d + 1)
    for c in range(d - 1, -1, -1):
        low_after[c] = low_after[c + 1] + lows[c]

    out = []
    point = [0] * d
    values = [0] * len(ineqs)

    def search(c, remaining):
        if c == d:
            out.append(tuple(point))
            return
        tail = d - c - 1
        lo = max(lows[c], remaining - q * tail)
        hi = min(q, remaining - low_after[c + 1])
        for v in range(lo, hi + 1):
            rest = remaining - v
            feasible = True
            updated = 0
            for k, coeffs in enumerate(ineqs):
                value = values[k] + coeffs[c] * v
                if value + min(rest, q * pos_after[k][c + 1]) < threshold:
                    feasible = False
                    break
                values[k] = value
                updated = k + 1
            if feasible:
                point[c] = v
                search(c + 1, rest)
            for t in range(updated):
                values[t] -= ineqs[t][c] * v
            if limit is not None and len(out) >= limit:
                return

    search(0, total)
    out.sort()
    return out


def polytope_dimension(p):
    """Dimension of the convex hull of the generators of a presentation."""
    gens = p.generators
    if len(gens) < 2:
        return 0
    base = gens[0]
    rows = [[x - y for x, y in zip(gen, base)] for gen in gens[1:]]
    return rank(rows)


def q_zero(g):
    """Least dilation of the edge polytope of g whose open interior holds a
    lattice point.

    The search is capped at dim + 1, which always suffices for a lattice
    polytope; exceeding the cap means the facet system is wrong and raises.
    """
    fs = facet_system(g)
    dim = polytope_dimension(edge_presentation(g))
    for q in range(1, dim + 2):
        if dilation_points(fs, q, strict=True, limit=1):
            return q
    raise RuntimeError("no interior lattice point up to dilation dim+1; facet system inconsistent")
