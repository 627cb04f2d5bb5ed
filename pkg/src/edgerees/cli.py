"""Command-line front end.

Subcommands: analyze (full regularity report), betti (Betti diagram of the
edge or Rees presentation, or of an explicit presentation), polytope (facet
system and dilation lattice points of the cone polytope), batch (report
rows over graph families). Output is a single JSON document per invocation
with canonical key order; identical input and flags produce byte-identical
output (timing is reported as 0 unless --timing is passed).

Exit codes: 0 success, 2 input error, 3 computation error or guardrail,
4 truncation-only result under --require-exact.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import time

from . import __version__
from .graph import (
    cone_graph,
    cycle_graph,
    disjoint_edges_graph,
    disjoint_union,
    edge_cover_number,
    graph,
    induced_matching_number,
    matching_number,
    path_graph,
    rees_is_normal,
)
from .linalg import field_from_string
from .polytope import dilation_points, facet_system, polytope_dimension
from .regularity import (
    analyze,
    betti_table,
    default_j_max,
    regularity_from_table,
)
from .semigroup import (
    edge_presentation,
    enumerate_degree,
    presentation,
    rees_presentation,
)


class CliInputError(Exception):
    pass


class ComputationAborted(Exception):
    pass


# ---------------------------------------------------------------- input


def parse_edge_list(text):
    """Edge-list format: optional first line "n <count>", then "i j" lines,
    "#" comments, blank lines allowed."""
    n_declared = None
    edges = []
    lines_seen = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "n":
            if edges or n_declared is not None:
                raise CliInputError(f"line {lineno}: header 'n <count>' must come first")
            if len(parts) != 2:
                raise CliInputError(f"line {lineno}: expected 'n <count>'")
            try:
                n_declared = int(parts[1])
            except ValueError:
                raise CliInputError(f"line {lineno}: vertex count {parts[1]!r} is not an integer")
            continue
        if len(parts) != 2:
            raise CliInputError(f"line {lineno}: expected an edge 'i j'")
        try:
            i, j = int(parts[0]), int(parts[1])
        except ValueError:
            raise CliInputError(f"line {lineno}: edge endpoints must be integers")
        if i == j:
            raise CliInputError(f"line {lineno}: loop rejected")
        if i < 1 or j < 1:
            raise CliInputError(f"line {lineno}: vertices are 1-based")
        key = (min(i, j), max(i, j))
        if key in lines_seen:
            raise CliInputError(
                f"line {lineno}: duplicate edge ({i},{j}) (first seen on line {lines_seen[key]})"
            )
        lines_seen[key] = lineno
        edges.append(key)
    if n_declared is None:
        if not edges:
            raise CliInputError("no edges and no 'n <count>' header")
        n_declared = max(max(e) for e in edges)
    for i, j in edges:
        if j > n_declared:
            raise CliInputError(f"edge ({i},{j}) exceeds declared vertex count {n_declared}")
    try:
        return graph(n_declared, edges)
    except ValueError as exc:
        raise CliInputError(str(exc))


def parse_graph_document(doc):
    if not isinstance(doc, dict) or "edges" not in doc:
        raise CliInputError("graph document must be an object with an 'edges' list")
    edges = doc["edges"]
    if not isinstance(edges, list):
        raise CliInputError("'edges' must be a list of pairs")
    pairs = []
    for e in edges:
        if not isinstance(e, list) or len(e) != 2:
            raise CliInputError(f"edge {e!r} must be a pair [i, j]")
        pairs.append((e[0], e[1]))
    n = doc.get("n")
    if n is None:
        if not pairs:
            raise CliInputError("graph document needs 'n' when it has no edges")
        n = max(max(i, j) for i, j in pairs)
    try:
        return graph(n, pairs)
    except ValueError as exc:
        raise CliInputError(str(exc))


def load_graph(path):
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}")
    stripped = text.lstrip()
    if path.endswith(".json") or stripped.startswith("{"):
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as exc:
            raise CliInputError(f"{path}: invalid JSON: {exc}")
        return parse_graph_document(doc)
    return parse_edge_list(text)


def load_presentation(path):
    try:
        with open(path, encoding="utf-8") as fh:
            doc = json.load(fh)
    except OSError as exc:
        raise CliInputError(f"cannot read {path}: {exc}")
    except json.JSONDecodeError as exc:
        raise CliInputError(f"{path}: invalid JSON: {exc}")
    if not isinstance(doc, dict) or "generators" not in doc:
        raise CliInputError("presentation document must be an object with 'generators'")
    try:
        return presentation(doc["generators"], labels=doc.get("labels"))
    except (ValueError, TypeError) as exc:
        raise CliInputError(f"bad presentation: {exc}")


# ---------------------------------------------------------------- output


def emit(doc, out_path):
    text = json.dumps(doc, indent=2) + "\n"
    if out_path:
        with open(out_path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def graph_section(g, path=None):
    section = {"n": g.n, "edges": [list(e) for e in g.edges]}
    if path is not None:
        section["path"] = path
    return section


def report_sections(report):
    invariants = {
        "matching_number": report.matching_number,
        "induced_matching_number": report.induced_matching_number,
        "edge_cover_number": report.edge_cover_number,
        "has_perfect_matching": report.has_perfect_matching,
        "connected_components": [list(c) for c in report.components],
    }
    normality = {
        "rees_normal": report.rees_normal,
        "reason": report.normality_reason,
        "component_bipartite": list(report.component_bipartite),
        "component_odd_cycle_condition": list(report.component_odd_cycle_condition),
        "nonbipartite_components": sum(1 for b in report.component_bipartite if not b),
    }
    route = {
        "kind": report.route,
        "field": str(report.field) if report.field is not None else None,
        "j_max": report.j_max,
        "q0": report.q0,
        "regularity": report.regularity,
        "status": report.status,
    }
    return invariants, normality, route


def format_betti_diagram(table):
    """Betti diagram with rows j-i and columns i; zero entries print as '-'."""
    entries = table.entries
    max_i = max(i for i, _ in entries)
    max_row = max(j - i for i, j in entries)
    label_width = 4
    lines = ["".ljust(label_width) + "".join(f"{i:>5}" for i in range(max_i + 1))]
    dashes = "-" * (label_width + 5 * (max_i + 1) + 1)
    lines.append(dashes)
    for r in range(max_row + 1):
        cells = []
        for i in range(max_i + 1):
            count = entries.get((i, i + r), 0)
            cells.append(f"{count:>5}" if count else f"{'-':>5}")
        lines.append(f"{r:>2}:".ljust(label_width) + "".join(cells))
    lines.append(dashes)
    totals = [
        sum(count for (i, _), count in entries.items() if i == col)
        for col in range(max_i + 1)
    ]
    lines.append("Tot:".ljust(label_width) + "".join(f"{t:>5}" for t in totals))
    return "\n".join(lines)


def betti_section(table, ring):
    reg, status = regularity_from_table(table)
    return {
        "ring": ring,
        "field": str(table.field_used),
        "j_max": table.j_max,
        "entries": [[i, j, c] for (i, j), c in sorted(table.entries.items())],
        "multigraded": [[i, list(a), c] for (i, a), c in sorted(table.multigraded.items())],
        "regularity": reg,
        "status": status,
    }


def check_degree_budget(p, j_max, max_degrees):
    if max_degrees is None:
        return
    total = 0
    for q in range(1, j_max + 1):
        total += len(enumerate_degree(p, q))
        if total > max_degrees:
            raise ComputationAborted(
                f"more than {max_degrees} multidegrees up to degree {j_max}; "
                "raise --max-degrees or lower --jmax"
            )


# ---------------------------------------------------------------- commands


def cmd_analyze(args):
    g = load_graph(args.input)
    field = field_from_string(args.field)
    start = time.monotonic()
    if args.max_degrees is not None:
        normal, _ = rees_is_normal(g)
        if not normal:
            j_max = args.jmax if args.jmax is not None else default_j_max(g)
            check_degree_budget(rees_presentation(g), j_max, args.max_degrees)
    report = analyze(g, j_max=args.jmax, field=field)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    invariants, normality, route = report_sections(report)
    doc = {
        "tool_version": __version__,
        "input": graph_section(g, args.input),
        "invariants": invariants,
        "normality": normality,
        "route": route,
        "verdicts": report.verdicts,
        "timing_ms": elapsed_ms if args.timing else 0,
    }
    emit(doc, args.out)
    if args.require_exact and report.status != "exact":
        return 4
    return 0


def cmd_betti(args):
    if args.presentation:
        p = load_presentation(args.presentation)
        ring = "presentation"
        input_section = {
            "path": args.presentation,
            "generators": [list(gen) for gen in p.generators],
        }
        j_max = args.jmax if args.jmax is not None else len(p.generators)
        g = None
    else:
        if not args.input:
            raise CliInputError("an input graph (or --presentation) is required")
        g = load_graph(args.input)
        p = edge_presentation(g) if args.ring == "edge" else rees_presentation(g)
        ring = args.ring
        input_section = graph_section(g, args.input)
        j_max = args.jmax if args.jmax is not None else default_j_max(g)
    field = field_from_string(args.field)
    check_degree_budget(p, j_max, args.max_degrees)
    start = time.monotonic()
    table = betti_table(p, j_max, field)
    elapsed_ms = int((time.monotonic() - start) * 1000)
    section = betti_section(table, ring)
    print(format_betti_diagram(table))
    print()
    doc = {
        "tool_version": __version__,
        "input": input_section,
        "betti": section,
        "timing_ms": elapsed_ms if args.timing else 0,
    }
    emit(doc, args.out)
    if args.require_exact and section["status"] != "exact":
        return 4
    return 0


def cmd_polytope(args):
    g = load_graph(args.input)
    if not g.edges:
        raise CliInputError("graph has no edges")
    cone = cone_graph(g)
    start = time.monotonic()
    fs = facet_system(cone)
    limit = None if args.max_points is None else args.max_points + 1
    points = dilation_points(fs, args.q, strict=args.interior, limit=limit)
    if args.max_points is not None and len(points) > args.max_points:
        raise ComputationAborted(
            f"more than {args.max_points} lattice points at q={args.q}"
        )
    if args.positive_only:
        points = [pt for pt in points if all(x > 0 for x in pt)]
    elapsed_ms = int((time.monotonic() - start) * 1000)
    facets = []
    for ineq in fs.inequalities:
        entry = {"kind": ineq.kind, "coeffs": list(ineq.coeffs)}
        if ineq.kind == "regular_vertex":
            entry["vertex"] = ineq.data
        else:
            entry["set"] = list(ineq.data)
        facets.append(entry)
    doc = {
        "tool_version": __version__,
        "input": graph_section(g, args.input),
        "polytope": {
            "cone_vertex": cone.n,
            "ambient_dim": fs.ambient_dim,
            "dimension": polytope_dimension(edge_presentation(cone)),
            "affine_rhs": fs.affine_rhs,
            "facets": facets,
            "q": args.q,
            "interior": args.interior,
            "positive_only": args.positive_only,
            "points": [list(pt) for pt in points],
            "count": len(points),
        },
        "timing_ms": elapsed_ms if args.timing else 0,
    }
    emit(doc, args.out)
    return 0


def _parse_range(spec):
    try:
        lo, hi = spec.split(":")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise CliInputError(f"bad --range {spec!r}; expected 'lo:hi'")
    if lo > hi:
        raise CliInputError(f"empty --range {spec!r}")
    return lo, hi


def _batch_instances(args):
    fam = args.family
    if fam == "random":
        rng = random.Random(args.seed)
        out = []
        for k in range(args.count):
            edges = [
                (i, j)
                for i in range(1, args.n + 1)
                for j in range(i + 1, args.n + 1)
                if rng.random() < args.p
            ]
            out.append((k, graph(args.n, edges)))
        return out
    if args.range is None:
        raise CliInputError(f"--range is required for family {fam!r}")
    lo, hi = _parse_range(args.range)
    out = []
    for k in range(lo, hi + 1):
        if fam == "paths":
            out.append((k, path_graph(k)))
        elif fam == "cycles":
            out.append((k, cycle_graph(k)))
        elif fam == "disjoint_edges":
            out.append((k, disjoint_edges_graph(k)))
        elif fam == "disjoint_unions":
            g = cycle_graph(3)
            for _ in range(k - 1):
                g = disjoint_union(g, cycle_graph(3))
            out.append((k, g))
        else:
            raise CliInputError(f"unknown family {fam!r}")
    return out


def _batch_row(param, g, args, field):
    row = {"param": param, "n": g.n, "edge_count": len(g.edges)}
    if not g.edges:
        row["error"] = "empty edge set"
        return row
    mat = matching_number(g)
    row["matching_number"] = mat
    row["induced_matching_number"] = induced_matching_number(g)
    try:
        mu = edge_cover_number(g)
    except ValueError:
        mu = None
    row["edge_cover_number"] = mu
    row["gallai_ok"] = (mu + mat == g.n) if mu is not None else None
    normal, _ = rees_is_normal(g)
    row["rees_normal"] = normal
    if normal or args.jmax is not None:
        report = analyze(g, j_max=args.jmax, field=field)
        row["route"] = report.route
        row["q0"] = report.q0
        row["regularity"] = report.regularity
        row["status"] = report.status
        row["verdicts"] = report.verdicts
    else:
        # the Betti route can be expensive; opt in by passing --jmax
        row["route"] = "betti_table"
        row["q0"] = None
        row["regularity"] = None
        row["status"] = "not_computed"
        row["verdicts"] = None
    return row


def cmd_batch(args):
    field = field_from_string(args.field)
    instances = _batch_instances(args)
    start = time.monotonic()
    rows = [_batch_row(param, g, args, field) for param, g in instances]
    elapsed_ms = int((time.monotonic() - start) * 1000)
    family = {"name": args.family}
    if args.family == "random":
        family.update({"seed": args.seed, "n": args.n, "p": args.p, "count": args.count})
    else:
        family["range"] = args.range
    doc = {
        "tool_version": __version__,
        "input": {"family": family},
        "rows": rows,
        "timing_ms": elapsed_ms if args.timing else 0,
    }
    emit(doc, args.out)
    return 0


# ---------------------------------------------------------------- wiring


def build_parser():
    parser = argparse.ArgumentParser(
        prog="edgerees",
        description="Exact regularity certificates for Rees algebras of edge ideals",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--out", help="write the JSON document here instead of stdout")
    common.add_argument("--timing", action="store_true", help="report real timing_ms")

    pa = sub.add_parser("analyze", parents=[common], help="full regularity report")
    pa.add_argument("input", help="edge-list or JSON graph file")
    pa.add_argument("--jmax", type=int, help="Betti truncation bound (non-normal route)")
    pa.add_argument("--field", default="rational", help="rational or fp:<p>")
    pa.add_argument("--require-exact", action="store_true")
    pa.add_argument("--max-degrees", type=int, help="abort if more multidegrees than this")
    pa.set_defaults(func=cmd_analyze)

    pb = sub.add_parser("betti", parents=[common], help="Betti diagram of a toric ring")
    pb.add_argument("input", nargs="?", help="edge-list or JSON graph file")
    pb.add_argument("--ring", choices=["edge", "rees"], default="rees")
    pb.add_argument("--presentation", help="JSON file with explicit generators")
    pb.add_argument("--jmax", type=int)
    pb.add_argument("--field", default="rational", help="rational or fp:<p>")
    pb.add_argument("--require-exact", action="store_true")
    pb.add_argument("--max-degrees", type=int)
    pb.set_defaults(func=cmd_betti)

    pp = sub.add_parser("polytope", parents=[common], help="facets and dilation points of the cone polytope")
    pp.add_argument("input", help="edge-list or JSON graph file")
    pp.add_argument("--q", type=int, default=1, help="dilation factor")
    pp.add_argument("--interior", action="store_true", help="strict interior points only")
    pp.add_argument("--positive-only", action="store_true", help="keep all-positive points")
    pp.add_argument("--max-points", type=int)
    pp.set_defaults(func=cmd_polytope)

    pc = sub.add_parser("batch", parents=[common], help="reports over a graph family")
    pc.add_argument("--family", required=True,
                    choices=["paths", "cycles", "disjoint_edges", "disjoint_unions", "random"])
    pc.add_argument("--range", help="inclusive parameter range lo:hi")
    pc.add_argument("--seed", type=int, default=0)
    pc.add_argument("--n", type=int, default=8)
    pc.add_argument("--p", type=float, default=0.3)
    pc.add_argument("--count", type=int, default=10)
    pc.add_argument("--jmax", type=int, help="enable the Betti route for non-normal rows")
    pc.add_argument("--field", default="rational")
    pc.set_defaults(func=cmd_batch)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except CliInputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ComputationAborted as exc:
        print(f"aborted: {exc}", file=sys.stderr)
        return 3
    except (ValueError, RuntimeError) as exc:
        print(f"computation failed: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
