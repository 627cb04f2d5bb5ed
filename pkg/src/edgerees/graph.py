"""Finite simple graphs and their matching-type invariants.

Vertices are labeled 1..n externally; internally everything runs on 0-based
bitmask adjacency. All invariants (matching number, induced matching number,
edge cover number) are computed exactly by memoized branch and bound, which
is the right trade-off at the <= ~24 vertex scale this package targets.
Every operation is a pure function of an immutable Graph.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations


class NoCoverError(ValueError):
    """Requested an edge cover of a graph with an isolated vertex."""


@dataclass(frozen=True)
class Graph:
    """A finite simple graph on vertex set {1, ..., n}.

    Edges are stored as a sorted tuple of pairs (i, j) with i < j; loops and
    multi-edges are rejected at construction time.
    """

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("vertex count must be nonnegative")
        seen = set()
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"edge {e!r} is not a pair")
            i, j = e
            if i == j:
                raise ValueError(f"loop ({i},{j}) rejected")
            if not (1 <= i < j <= self.n):
                raise ValueError(f"edge ({i},{j}) out of range for n={self.n}")
            if e in seen:
                raise ValueError(f"duplicate edge ({i},{j}) rejected")
            seen.add(e)


def graph(n, edges):
    """Build a Graph from any iterable of vertex pairs, normalizing order."""
    normalized = []
    seen = set()
    for i, j in edges:
        if i == j:
            raise ValueError(f"loop ({i},{j}) rejected")
        e = (i, j) if i < j else (j, i)
        if e in seen:
            raise ValueError(f"duplicate edge ({i},{j}) rejected")
        seen.add(e)
        normalized.append(e)
    return Graph(n, tuple(sorted(normalized)))


def path_graph(n):
    return graph(n, [(i, i + 1) for i in range(1, n)])


def cycle_graph(n):
    if n < 3:
        raise ValueError("a cycle needs at least 3 vertices")
    return graph(n, [(i, i + 1) for i in range(1, n)] + [(1, n)])


def disjoint_edges_graph(m):
    return graph(2 * m, [(2 * k - 1, 2 * k) for k in range(1, m + 1)])


def disjoint_union(g, h):
    """Disjoint union of two graphs; the second one is shifted past the first."""
    shifted = [(i + g.n, j + g.n) for i, j in h.edges]
    return graph(g.n + h.n, list(g.edges) + shifted)


def _adjacency(g):
    """Neighbor bitmasks, vertex i (1-based) -> bit i-1."""
    adj = [0] * g.n
    for i, j in g.edges:
        adj[i - 1] |= 1 << (j - 1)
        adj[j - 1] |= 1 << (i - 1)
    return adj


def induced_subgraph(g, vertices):
    """Induced subgraph on the given vertices, relabeled 1..k in sorted order.

    Returns (subgraph, labels) where labels[v-1] is the original name of the
    relabeled vertex v.
    """
    labels = sorted(vertices)
    index = {v: k + 1 for k, v in enumerate(labels)}
    keep = set(labels)
    edges = [(index[i], index[j]) for i, j in g.edges if i in keep and j in keep]
    return graph(len(labels), edges), labels


def connected_components(g):
    """Partition of {1..n} into connected components, sorted by least vertex."""
    adj = _adjacency(g)
    unseen = set(range(g.n))
    parts = []
    while unseen:
        root = min(unseen)
        comp = {root}
        stack = [root]
        unseen.discard(root)
        while stack:
            v = stack.pop()
            m = adj[v]
            while m:
                b = m & -m
                u = b.bit_length() - 1
                m ^= b
                if u in unseen:
                    unseen.discard(u)
                    comp.add(u)
                    stack.append(u)
        parts.append({v + 1 for v in comp})
    parts.sort(key=min)
    return parts


def _check_is_component(g, component):
    comp = set(component)
    if not comp:
        raise ValueError("component must be nonempty")
    for part in connected_components(g):
        if min(comp) in part:
            if comp != part:
                raise ValueError("given vertex set is not a connected component")
            return
    raise ValueError("component vertices out of range")


def is_bipartite(g, component):
    """2-color the induced subgraph on a connected component.

    Returns (True, coloring) with a dict vertex -> 0/1, or (False, cycle)
    where cycle is an odd cycle as a list of vertices in cyclic order.
    Raises ValueError when the vertex set is not a connected component of g.
    """
    _check_is_component(g, component)
    adj = _adjacency(g)
    root = min(component) - 1
    color = {root: 0}
    parent = {root: None}
    order = [root]
    head = 0
    while head < len(order):
        v = order[head]
        head += 1
        m = adj[v]
        while m:
            b = m & -m
            u = b.bit_length() - 1
            m ^= b
            if u not in color:
                color[u] = 1 - color[v]
                parent[u] = v
                order.append(u)
            elif color[u] == color[v]:
                return False, _odd_cycle_from_conflict(parent, v, u)
    return True, {v + 1: c for v, c in color.items()}


def _odd_cycle_from_conflict(parent, v, u):
    """Trace BFS parents from the endpoints of a same-color edge to a cycle."""
    path_v, path_u = [v], [u]
    seen_v = {v: 0}
    x = v
    while parent[x] is not None:
        x = parent[x]
        seen_v[x] = len(path_v)
        path_v.append(x)
    x = u
    while x not in seen_v:
        x = parent[x]
        path_u.append(x)
    meet = seen_v[x]
    cycle = path_v[: meet + 1] + path_u[-2::-1]
    return [w + 1 for w in cycle]


def matching_number(g):
    """Maximum cardinality of a matching, by memoized branch and bound."""
    adj = _adjacency(g)
    memo = {}

    def best(avail):
        while avail:
            b = avail & -avail
            v = b.bit_length() - 1
            if adj[v] & avail:
                break
            avail ^= b
        else:
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        bit = 1 << v
        result = best(avail ^ bit)  # leave v unmatched
        m = adj[v] & avail
        while m:
            ub = m & -m
            m ^= ub
            result = max(result, 1 + best(avail ^ bit ^ ub))
        memo[avail] = result
        return result

    return best((1 << g.n) - 1)


def induced_matching_number(g):
    """Maximum matching such that no edge of g joins two of its members.

    Equivalent to a maximum independent set in the conflict graph whose
    vertices are the edges of g; solved by memoized branch and bound.
    """
    edges = g.edges
    m = len(edges)
    if m == 0:
        return 0
    adj = _adjacency(g)
    masks = [(1 << (i - 1)) | (1 << (j - 1)) for i, j in edges]
    reach = [masks[k] | adj[edges[k][0] - 1] | adj[edges[k][1] - 1] for k in range(m)]
    conflict = [0] * m
    for a in range(m):
        for b in range(a + 1, m):
            # conflicting: share a vertex, or an edge of g joins them
            if masks[a] & masks[b] or reach[a] & masks[b]:
                conflict[a] |= 1 << b
                conflict[b] |= 1 << a
    memo = {}

    def best(avail):
        if not avail:
            return 0
        cached = memo.get(avail)
        if cached is not None:
            return cached
        b = avail & -avail
        k = b.bit_length() - 1
        result = max(best(avail ^ b), 1 + best(avail & ~(conflict[k] | b)))
        memo[avail] = result
        return result

    return best((1 << m) - 1)


def edge_cover_number(g):
    """Minimum number of edges covering every vertex, by branch and bound.

    Raises NoCoverError when g has an isolated vertex (no cover exists).
    """
    adj = _adjacency(g)
    for v in range(g.n):
        if not adj[v]:
            raise NoCoverError(f"vertex {v + 1} is isolated; no edge cover exists")
    memo = {}

    def best(uncovered):
        if not uncovered:
            return 0
        cached = memo.get(uncovered)
        if cached is not None:
            return cached
        b = uncovered & -uncovered
        v = b.bit_length() - 1
        result = None
        m = adj[v]
        while m:
            ub = m & -m
            m ^= ub
            r = 1 + best(uncovered & ~(b | ub))
            if result is None or r < result:
                result = r
        memo[uncovered] = result
        return result

    return best((1 << g.n) - 1)


def has_perfect_matching(g):
    """True when some matching covers every vertex."""
    return g.n % 2 == 0 and 2 * matching_number(g) == g.n


def _induced_odd_cycles(g, component):
    """All vertex sets inducing an odd cycle inside the given component.

    A subset induces a cycle iff its induced subgraph is connected and
    2-regular; every odd cycle contains an induced odd cycle on a subset of
    its vertices, so these suffice for the odd cycle condition. Cost is
    O(2^c) over the component size c.
    """
    verts = sorted(component)
    adj = _adjacency(g)
    cycles = []
    for size in range(3, len(verts) + 1, 2):
        for sub in combinations(verts, size):
            mask = 0
            for v in sub:
                mask |= 1 << (v - 1)
            degs_ok = True
            total = 0
            for v in sub:
                d = (adj[v - 1] & mask).bit_count()
                if d != 2:
                    degs_ok = False
                    break
                total += d
            if not degs_ok:
                continue
            # 2-regular: connected iff a single cycle; walk it
            start = sub[0]
            prev, cur = None, start
            length = 0
            while True:
                nxt_mask = adj[cur - 1] & mask
                if prev is not None:
                    nxt_mask &= ~(1 << (prev - 1))
                nxt = (nxt_mask & -nxt_mask).bit_length()
                prev, cur = cur, nxt
                length += 1
                if cur == start:
                    break
            if length == size:
                cycles.append(sub)
    return cycles


def odd_cycle_condition(g, component):
    """Check that every two vertex-disjoint odd cycles in the component are
    joined by an edge.

    Returns (True, None) or (False, (cycle_a, cycle_b)) with the violating
    pair as sorted vertex tuples.
    """
    _check_is_component(g, component)
    cycles = _induced_odd_cycles(g, component)
    adj = _adjacency(g)
    masks = []
    for cyc in cycles:
        mask = 0
        for v in cyc:
            mask |= 1 << (v - 1)
        masks.append(mask)
    neighborhoods = []
    for cyc, mask in zip(cycles, masks):
        nb = 0
        for v in cyc:
            nb |= adj[v - 1]
        neighborhoods.append(nb)
    for a in range(len(cycles)):
        for b in range(a + 1, len(cycles)):
            if masks[a] & masks[b]:
                continue
            if not (neighborhoods[a] & masks[b]):
                return False, (cycles[a], cycles[b])
    return True, None


def cone_graph(g):
    """g plus a new vertex n+1 joined to every vertex of g."""
    edges = list(g.edges) + [(i, g.n + 1) for i in range(1, g.n + 1)]
    return Graph(g.n + 1, tuple(sorted(edges)))


def rees_is_normal(g):
    """Decide normality of the Rees algebra of the edge ideal of g.

    Holds iff every connected component satisfies the odd cycle condition
    and at most one component is non-bipartite. Returns (bool, reason).
    """
    nonbipartite = 0
    for comp in connected_components(g):
        two_colorable, _ = is_bipartite(g, comp)
        if not two_colorable:
            nonbipartite += 1
        ok, witness = odd_cycle_condition(g, comp)
        if not ok:
            a, b = witness
            return False, (
                f"component containing vertex {min(comp)} has vertex-disjoint "
                f"odd cycles {a} and {b} with no joining edge"
            )
    if nonbipartite > 1:
        return False, f"{nonbipartite} non-bipartite components (at most one allowed)"
    return True, (
        "every component satisfies the odd cycle condition and "
        f"{nonbipartite} component(s) are non-bipartite"
    )
